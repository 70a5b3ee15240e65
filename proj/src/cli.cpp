#include "k3cm/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include "k3cm/acceptance.hpp"
#include "k3cm/io.hpp"
#include "k3cm/sweep.hpp"

namespace k3cm {

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw invalid_input("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_output(const std::string& path, std::ostream& out,
                  const std::string& text) {
  if (path == "-") {
    out << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw invalid_input("cannot open output file '" + path + "'");
  f << text;
}

Json sweep_to_json(const SweepResult& s) {
  Json j;
  j["name"] = s.name;
  j["cases"] = s.cases;
  j["failures"] = s.failures;
  j["failure_samples"] = s.failure_samples;
  j["ms"] = static_cast<long>(s.seconds * 1000);
  return j;
}

std::string sweep_table(const std::vector<SweepResult>& sweeps) {
  std::ostringstream out;
  for (const auto& s : sweeps) {
    out << s.name;
    for (size_t i = s.name.size(); i < 20; ++i) out << ' ';
    out << s.cases << " cases, " << s.failures << " failed, "
        << static_cast<long>(s.seconds * 1000) << " ms\n";
    for (const auto& f : s.failure_samples) out << "    " << f << '\n';
  }
  return out.str();
}

Json criteria_to_json(const std::vector<CriterionResult>& results) {
  Json arr = Json::array();
  for (const auto& r : results) {
    Json j;
    j["criterion"] = r.number;
    j["name"] = r.name;
    j["passed"] = r.passed;
    j["detail"] = r.detail;
    j["ms"] = static_cast<long>(r.seconds * 1000);
    arr.push_back(std::move(j));
  }
  return arr;
}

Json self_product_to_json(const SelfProductEntry& e) {
  Json j;
  j["d"] = e.d.get_str();
  j["p"] = e.p.get_str();
  j["field"] = field_to_json(e.field);
  j["picard_complex"] = e.picard_complex;
  j["ordinary"] = e.ordinary;
  j["supersingular"] = e.supersingular;
  j["p_ramified"] = e.p_ramified;
  j["formula_applies"] = e.formula_applies;
  if (e.has_recorded_artin) j["recorded_artin"] = e.recorded_artin;
  return j;
}

std::string self_product_table(const SelfProductEntry& e) {
  std::ostringstream out;
  out << "self-product Km(C x C), discriminant " << e.d.get_str() << " at p="
      << e.p.get_str() << '\n';
  out << "  field             " << e.field.describe() << '\n';
  out << "  picard (complex)  " << e.picard_complex << '\n';
  out << "  reduction         "
      << (e.ordinary ? "ordinary" : "supersingular") << '\n';
  out << "  p ramified        " << (e.p_ramified ? "yes" : "no") << '\n';
  if (e.has_recorded_artin)
    out << "  recorded artin    " << e.recorded_artin
        << " (catalog metadata)\n";
  else if (e.formula_applies)
    out << "  artin formula     applies, [k(q):F_p] = 1\n";
  return out.str();
}

struct Options {
  std::string format = "json";
  std::string output = "-";
  std::string input = "-";
  std::string gram, poly, eisenstein;
  std::string p = "5", q, d1 = "-20", d2 = "-15";
  bool weil = false;
  int d = 2, e = 1, precision = 16, residue_degree = 0;
  int workers = 0;
  std::vector<std::string> sweeps;
};

int dispatch(const std::string& cmd, const Options& o, std::ostream& out,
             std::ostream& err) {
  const bool json = o.format == "json";

  if (cmd == "predict") {
    K3CmInput in = parse_input_document(read_input(o.input));
    ReductionReport report = predict_reduction(in);
    ValidationRecord validation = cross_validate(report, in);
    if (json) {
      Json j;
      j["report"] = report_to_json(report);
      j["validation"] = validation_to_json(validation);
      write_output(o.output, out, dump_json(j));
    } else {
      write_output(o.output, out,
                   render_table(report) + render_table(validation));
    }
    if (!validation.all_passed) {
      err << "cross-validation failed; see the validation record\n";
      return 1;
    }
    return 0;
  }

  if (cmd == "singular") {
    std::vector<Int> entries = parse_int_list(o.gram);
    if (entries.size() != 3)
      throw invalid_input("--gram expects a1,a2,a3 (three integers)");
    GramMatrix g = GramMatrix::rank2(entries[0], entries[1], entries[2]);
    Int p = int_from_string(o.p);
    ReductionReport report = predict_singular(g, p);
    K3CmInput in;
    in.field = report.field;
    in.p = p;
    in.gram = g;
    ValidationRecord validation = cross_validate(report, in);
    if (json) {
      Json j;
      j["report"] = report_to_json(report);
      j["validation"] = validation_to_json(validation);
      write_output(o.output, out, dump_json(j));
    } else {
      write_output(o.output, out,
                   render_table(report) + render_table(validation));
    }
    if (!validation.all_passed) {
      err << "cross-validation failed; see the validation record\n";
      return 1;
    }
    return 0;
  }

  if (cmd == "frobenius") {
    FrobCharPoly input;
    if (!o.poly.empty()) {
      input.poly = parse_poly_text(o.poly);
      input.p = int_from_string(o.p);
      input.q = o.q.empty() ? input.p : int_from_string(o.q);
      input.weil_claimed = o.weil;
    } else {
      input = parse_frob_document(read_input(o.input));
    }
    FrobReport report = analyze(input);
    write_output(o.output, out,
                 json ? dump_json(frob_report_to_json(report))
                      : render_table(report));
    return 0;
  }

  if (cmd == "crystal") {
    Int p = int_from_string(o.p);
    LocalFieldData lfd =
        o.eisenstein.empty()
            ? LocalFieldData::make(p, o.d, o.e)
            : LocalFieldData::make(p, o.d, o.e, parse_int_list(o.eisenstein));
    FCrystal c = build_beta(lfd, o.precision, o.residue_degree);
    FixedModule fm = fixed_module_basis(c);
    ArtinCokernelReport artin = artin_invariant_via_cokernel(c);
    write_output(o.output, out,
                 json ? dump_json(crystal_to_json(c, fm, artin))
                      : render_crystal_table(c, fm, artin));
    return 0;
  }

  if (cmd == "kummer") {
    Int d1 = int_from_string(o.d1), d2 = int_from_string(o.d2);
    Int p = int_from_string(o.p);
    if (d1 == d2) {
      SelfProductEntry e = self_product_entry(d1, p);
      write_output(o.output, out,
                   json ? dump_json(self_product_to_json(e))
                        : self_product_table(e));
      return 0;
    }
    if (d1 == -20 && d2 == -15) {
      TensorOrderFinding f = tensor_order_counterexample_report(p);
      write_output(o.output, out,
                   json ? dump_json(finding_to_json(f)) : render_table(f));
      return 0;
    }
    auto [field, picard_complex] = kummer_cm_data(KummerInput::make(d1, d2));
    PlaceInvariants place = analyze_place(field, p);
    Json j;
    j["field"] = field_to_json(field);
    j["picard_complex"] = picard_complex;
    j["p"] = p.get_str();
    j["place"] = place_to_json(place);
    if (json) {
      write_output(o.output, out, dump_json(j));
    } else {
      std::ostringstream t;
      t << "kummer surface of a product of CM curves\n"
        << "  field             " << field.describe() << '\n'
        << "  picard (complex)  " << picard_complex << '\n'
        << "  place at " << p.get_str() << "       "
        << (place.split_q_in_e ? "split" : "nonsplit") << '\n';
      write_output(o.output, out, t.str());
    }
    return 0;
  }

  if (cmd == "sweep") {
    std::vector<std::string> names =
        o.sweeps.empty() ? sweep_names() : o.sweeps;
    std::sort(names.begin(), names.end());
    std::vector<SweepResult> results;
    long failures = 0;
    for (const auto& name : names) {
      results.push_back(run_sweep(name, o.workers));
      failures += results.back().failures;
    }
    if (json) {
      Json j;
      Json arr = Json::array();
      for (const auto& s : results) arr.push_back(sweep_to_json(s));
      j["sweeps"] = std::move(arr);
      j["failures_total"] = failures;
      write_output(o.output, out, dump_json(j));
    } else {
      write_output(o.output, out, sweep_table(results));
    }
    if (failures > 0) {
      err << "sweep failures present\n";
      return 1;
    }
    return 0;
  }

  if (cmd == "selftest") {
    std::vector<CriterionResult> results = run_acceptance(o.workers);
    write_output(o.output, out,
                 json ? dump_json(criteria_to_json(results))
                      : format_results(results));
    if (!all_passed(results)) {
      err << "acceptance criteria failed\n";
      return 1;
    }
    return 0;
  }

  throw internal_error("unreached subcommand dispatch");
}

}  // namespace

int cli_main(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"reduction invariants of K3 surfaces with complex "
               "multiplication"};
  app.fallthrough();
  Options o;
  app.add_option("--format", o.format, "output format")
      ->check(CLI::IsMember({"json", "table"}))
      ->capture_default_str();
  app.add_option("--output", o.output, "output file, - for stdout")
      ->capture_default_str();

  CLI::App* predict =
      app.add_subcommand("predict", "reduction invariants from a CM field "
                                    "input document");
  predict->add_option("--input", o.input, "JSON document, - for stdin")
      ->capture_default_str();

  CLI::App* singular = app.add_subcommand(
      "singular", "reduction of a singular K3 from its rank-2 "
                  "transcendental Gram matrix");
  singular->add_option("--gram", o.gram, "a1,a2,a3 with Gram [[a1,a2],[a2,a3]]")
      ->required();
  singular->add_option("--p", o.p, "prime of reduction")->required();

  CLI::App* frobenius = app.add_subcommand(
      "frobenius", "analyze a q-normalized Frobenius characteristic "
                   "polynomial");
  frobenius->add_option("--poly", o.poly,
                        "comma-separated rational coefficients, constant "
                        "term first");
  frobenius->add_option("--p", o.p, "the prime");
  frobenius->add_option("--q", o.q, "ground field size (default p)");
  frobenius->add_flag("--weil", o.weil, "enforce the symmetric-slope check");
  frobenius->add_option("--input", o.input, "JSON document, - for stdin")
      ->capture_default_str();

  CLI::App* crystal = app.add_subcommand(
      "crystal", "explicit F-crystal: multipliers, fixed module, Artin "
                 "invariant");
  crystal->add_option("--p", o.p, "the prime")->required();
  crystal->add_option("--d", o.d, "inertia degree (even)")->required();
  crystal->add_option("--e", o.e, "ramification index")
      ->capture_default_str();
  crystal->add_option("--precision", o.precision, "p-adic working precision")
      ->capture_default_str();
  crystal->add_option("--residue-degree", o.residue_degree,
                      "Witt residue degree m (0 selects m = d)")
      ->capture_default_str();
  crystal->add_option("--eisenstein", o.eisenstein,
                      "integer coefficients c0,...,1 of the uniformizer "
                      "relation (default T^e - p)");

  CLI::App* kummer = app.add_subcommand(
      "kummer", "Kummer-surface CM data and the tensor-order pipeline");
  kummer->add_option("--d1", o.d1, "first CM discriminant")
      ->capture_default_str();
  kummer->add_option("--d2", o.d2, "second CM discriminant")
      ->capture_default_str();
  kummer->add_option("--p", o.p, "prime of reduction")->capture_default_str();

  CLI::App* sweep =
      app.add_subcommand("sweep", "property-test grids over the library "
                                  "invariants");
  sweep->add_option("--name", o.sweeps,
                    "sweep to run (repeatable; default all): "
                    "compositum-place, crystal-artin, fixed-module, "
                    "newton-oracle, singular-lattice, tripwire-fuzz");
  sweep->add_option("--workers", o.workers, "worker threads (0 = auto)")
      ->capture_default_str();

  CLI::App* selftest =
      app.add_subcommand("selftest", "run the full acceptance suite");
  selftest->add_option("--workers", o.workers, "worker threads (0 = auto)")
      ->capture_default_str();

  app.require_subcommand(1);

  std::vector<const char*> argv;
  argv.push_back("k3cm");
  for (const auto& s : args) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "usage error: " << e.what() << '\n';
    return 2;
  }

  const std::string cmd = app.get_subcommands().front()->get_name();
  try {
    return dispatch(cmd, o, out, err);
  } catch (const inconsistency& e) {
    err << "inconsistent data: " << e.what() << '\n';
    return 1;
  } catch (const invalid_input& e) {
    err << "input error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace k3cm
