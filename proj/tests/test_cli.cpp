#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "k3cm/cli.hpp"

using Json = nlohmann::ordered_json;

namespace {

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = k3cm::cli_main(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& content) {
  auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream f(path);
  f << content;
  return path.string();
}

}  // namespace

TEST_CASE("predict: split place, byte-identical JSON round trip") {
  auto doc = write_temp("k3cm_cli_split.json",
                        R"({"field": {"family": "imag_quadratic", "d": -4},
                            "p": 5})");
  auto r = run({"predict", "--input", doc});
  CHECK(r.code == 0);

  Json j = Json::parse(r.out);
  CHECK(j["report"]["picard"] == 20);
  CHECK(j["report"]["height"] == 1);
  CHECK(j["report"]["supersingular"] == false);
  CHECK(j["report"]["artin_status"] == "not_applicable");
  CHECK(j.dump(2) + "\n" == r.out);
}

TEST_CASE("predict: supersingular with verified assumptions") {
  auto doc = write_temp("k3cm_cli_ss.json",
                        R"({"field": {"family": "cyclotomic", "conductor": 5},
                            "p": 7,
                            "disc_pic_coprime_to_p": true,
                            "order_maximal_at_p": true})");
  auto r = run({"predict", "--input", doc});
  CHECK(r.code == 0);

  Json j = Json::parse(r.out);
  CHECK(j["report"]["picard"] == 22);
  CHECK(j["report"]["height"] == "inf");
  CHECK(j["report"]["artin_status"] == "determined");
  CHECK(j["report"]["artin_invariant"] == 2);
  // the crystal cokernel check ran and agreed
  bool crystal_ran = false;
  for (const auto& c : j["validation"]["checks"])
    if (c["name"] == "crystal-cokernel") {
      crystal_ran = c["ran"] == true;
      CHECK(c["passed"] == true);
    }
  CHECK(crystal_ran);
}

TEST_CASE("predict: inconsistent assertions exit 1") {
  auto doc = write_temp("k3cm_cli_trip.json",
                        R"({"field": {"family": "imag_quadratic", "d": -4},
                            "p": 2,
                            "disc_pic_coprime_to_p": true,
                            "order_maximal_at_p": true})");
  auto r = run({"predict", "--input", doc});
  CHECK(r.code == 1);
  CHECK(r.err.find("inconsistent") != std::string::npos);
}

TEST_CASE("predict: schema violations exit 2") {
  auto doc = write_temp("k3cm_cli_badkey.json",
                        R"({"field": {"family": "imag_quadratic", "d": -4},
                            "p": 5, "bogus": 1})");
  auto r = run({"predict", "--input", doc});
  CHECK(r.code == 2);
  CHECK(r.err.find("input error") != std::string::npos);
  CHECK(r.err.find("bogus") != std::string::npos);

  auto doc2 = write_temp("k3cm_cli_badfam.json",
                         R"({"field": {"family": "real_quadratic", "d": 5},
                             "p": 5})");
  CHECK(run({"predict", "--input", doc2}).code == 2);

  auto doc3 = write_temp("k3cm_cli_float.json",
                         R"({"field": {"family": "imag_quadratic", "d": -4},
                             "p": 5.5})");
  CHECK(run({"predict", "--input", doc3}).code == 2);
}

TEST_CASE("predict: failing cross validation exits 1") {
  auto doc = write_temp(
      "k3cm_cli_mismatch.json",
      R"({"field": {"family": "imag_quadratic", "d": -4},
          "p": 5,
          "frobenius": {"poly": [-1, 0, 1]}})");
  auto r = run({"predict", "--input", doc});
  CHECK(r.code == 1);
  CHECK(r.err.find("cross-validation failed") != std::string::npos);
  Json j = Json::parse(r.out);
  CHECK(j["validation"]["all_passed"] == false);
}

TEST_CASE("singular subcommand") {
  auto r = run({"singular", "--gram", "2,1,2", "--p", "7"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["report"]["picard"] == 20);
  CHECK(j["report"]["height"] == 1);

  auto ss = run({"singular", "--gram", "2,1,2", "--p", "5"});
  Json js = Json::parse(ss.out);
  CHECK(js["report"]["supersingular"] == true);
  CHECK(js["report"]["artin_invariant"] == 1);

  auto table = run({"singular", "--gram", "2,1,2", "--p", "7", "--format",
                    "table"});
  CHECK(table.code == 0);
  CHECK(table.out.find("picard") != std::string::npos);

  CHECK(run({"singular", "--gram", "2,1", "--p", "7"}).code == 2);
  CHECK(run({"singular", "--gram", "2,1,2", "--p", "3"}).code == 2);
}

TEST_CASE("frobenius subcommand") {
  auto r = run({"frobenius", "--poly", "25, -5, 1", "--p", "5"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["picard"] == 0);
  CHECK(j["height"] == 2);
  CHECK(j["supersingular"] == false);
  CHECK(j.dump(2) + "\n" == r.out);

  auto weil = run({"frobenius", "--poly", "25, -5, 1", "--p", "5", "--weil"});
  CHECK(weil.code == 1);
  CHECK(weil.err.find("inconsistent data") != std::string::npos);

  auto doc = write_temp("k3cm_cli_frob.json",
                        R"({"poly": ["1", "-29/5", "1"], "p": 5})");
  auto fromdoc = run({"frobenius", "--input", doc});
  CHECK(fromdoc.code == 0);
  CHECK(Json::parse(fromdoc.out)["height"] == 1);
}

TEST_CASE("crystal subcommand") {
  auto r = run({"crystal", "--p", "5", "--d", "4", "--precision", "8"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["dprime"] == 3);
  CHECK(j["artin"]["artin_invariant"] == 2);
  CHECK(j["beta_exponents"][1]["text"] == "p*pi");
  CHECK(j["beta_exponents"][3]["text"] == "p*pi^-1");
  CHECK(j["fixed_module"]["rank"] == 4);
  CHECK(j.dump(2) + "\n" == r.out);

  auto table = run({"crystal", "--p", "5", "--d", "4", "--precision", "8",
                    "--format", "table"});
  CHECK(table.code == 0);
  CHECK(table.out.find("artin invariant") != std::string::npos);

  CHECK(run({"crystal", "--p", "5", "--d", "3"}).code == 2);  // odd d
}

TEST_CASE("kummer subcommand") {
  auto r = run({"kummer", "--d1", "-20", "--d2", "-15", "--p", "5"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["index"] == "5");
  CHECK(j["would_give"] == 2);
  CHECK(j["recorded_actual"] == 1);
  CHECK(j["counterexample"] == true);

  auto self = run({"kummer", "--d1", "-4", "--d2", "-4", "--p", "2"});
  Json js = Json::parse(self.out);
  CHECK(js["supersingular"] == true);
  CHECK(js["p_ramified"] == true);
  CHECK(js["recorded_artin"] == 1);

  auto other = run({"kummer", "--d1", "-8", "--d2", "-3", "--p", "7"});
  CHECK(other.code == 0);
  CHECK(Json::parse(other.out)["place"]["split_q_in_e"] == true);
}

TEST_CASE("sweep subcommand runs a named grid") {
  auto r = run({"sweep", "--name", "compositum-place", "--workers", "2"});
  CHECK(r.code == 0);
  Json j = Json::parse(r.out);
  CHECK(j["failures_total"] == 0);
  CHECK(j["sweeps"][0]["name"] == "compositum-place");
  CHECK(j["sweeps"][0]["cases"].get<long>() > 0);

  CHECK(run({"sweep", "--name", "no-such-grid"}).code == 2);
}

TEST_CASE("usage errors and help") {
  CHECK(run({}).code == 2);
  CHECK(run({"predicte"}).code == 2);
  CHECK(run({"predict", "--nope"}).code == 2);
  CHECK(run({"singular", "--p", "7"}).code == 2);  // --gram is required
  CHECK(run({"predict", "--format", "yaml"}).code == 2);
  CHECK(run({"--help"}).code == 0);

  auto h = run({"--help"});
  CHECK(h.out.find("predict") != std::string::npos);
}

TEST_CASE("output lands in a file when requested") {
  auto out_path =
      (std::filesystem::temp_directory_path() / "k3cm_cli_out.json").string();
  auto r = run({"singular", "--gram", "2,1,2", "--p", "7", "--output",
                out_path});
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream f(out_path);
  std::stringstream buf;
  buf << f.rdbuf();
  CHECK(Json::parse(buf.str())["report"]["picard"] == 20);
}
