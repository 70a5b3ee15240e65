#include <doctest.h>

#include "k3cm/errors.hpp"
#include "k3cm/frobenius.hpp"

using namespace k3cm;

namespace {

RationalPoly tpow(const RationalPoly& f, int k) {
  RationalPoly r = RationalPoly::constant(Rat(1));
  for (int i = 0; i < k; ++i) r = r * f;
  return r;
}

const RationalPoly kTm1 = RationalPoly::from_strings({"-1", "1"});

}  // namespace

TEST_CASE("unit root factor counting") {
  RationalPoly f = kTm1 * RationalPoly::from_strings({"1", "1"}) *
                   RationalPoly::cyclotomic(4) *
                   RationalPoly::from_strings({"1", "-3", "1"});
  CHECK(count_unit_root_multiplicity(f) == 4);
  auto m = unit_root_factorization(f);
  CHECK(m[1] == 1);
  CHECK(m[2] == 1);
  CHECK(m[4] == 1);
  CHECK(m.size() == 3);

  CHECK(count_unit_root_multiplicity(tpow(kTm1, 22)) == 22);
  CHECK(count_unit_root_multiplicity(
            RationalPoly::from_strings({"1", "-3", "1"})) == 0);
}

TEST_CASE("fully cyclotomic polynomial is supersingular") {
  FrobCharPoly in;
  in.poly = tpow(kTm1, 22);
  in.q = 7;
  in.p = 7;
  in.weil_claimed = true;
  auto r = analyze(in);
  CHECK(r.degree == 22);
  CHECK(r.picard == 22);
  CHECK(r.supersingular);
  CHECK(r.height_infinite);
  CHECK(r.artin_consistent);
  REQUIRE(r.polygon.segments.size() == 1);
  CHECK(r.polygon.segments[0].slope == 0);
  CHECK(r.polygon.segments[0].length == 22);
}

TEST_CASE("all-zero slopes with a non-cyclotomic factor: finite height") {
  FrobCharPoly in;
  in.poly = tpow(kTm1, 20) * RationalPoly::from_strings({"1", "-3", "1"});
  in.q = 7;
  in.p = 7;
  auto r = analyze(in);
  CHECK(r.picard == 20);
  CHECK_FALSE(r.supersingular);
  CHECK_FALSE(r.height_infinite);
  CHECK(r.height == 0);
  CHECK(r.artin_consistent);
}

TEST_CASE("height-1 slope pair") {
  FrobCharPoly in;
  in.poly = tpow(kTm1, 20) * RationalPoly::from_strings({"1", "-29/5", "1"});
  in.q = 5;
  in.p = 5;
  in.weil_claimed = true;
  auto r = analyze(in);
  CHECK(r.picard == 20);
  CHECK(r.height == 1);
  CHECK_FALSE(r.supersingular);
  CHECK(r.polygon.positive_length() == 1);
  CHECK(r.polygon.negative_length() == 1);
  CHECK(r.artin_consistent);  // 20 <= 22 - 2*1
}

TEST_CASE("asymmetric slopes break a claimed weil polynomial") {
  FrobCharPoly in;
  in.poly = tpow(kTm1, 20) * RationalPoly::from_strings({"25", "-5", "1"});
  in.q = 5;
  in.p = 5;
  in.weil_claimed = true;
  CHECK_THROWS_AS(analyze(in), inconsistency);

  in.weil_claimed = false;
  auto r = analyze(in);  // accepted as raw data
  CHECK(r.picard == 20);
  CHECK(r.height == 2);
}

TEST_CASE("rank bound diagnostics at degree 22") {
  FrobCharPoly in;
  in.poly = tpow(RationalPoly::from_strings({"1", "-3", "1"}), 11);
  in.q = 7;
  in.p = 7;
  auto r = analyze(in);
  CHECK(r.picard == 0);
  CHECK_FALSE(r.artin_consistent);
  CHECK_FALSE(r.diagnostics.empty());
}

TEST_CASE("artin inequality") {
  FrobReport r;
  r.degree = 22;
  r.picard = 22;
  r.height_infinite = true;
  CHECK(check_artin_inequality(r));

  r.height_infinite = false;
  r.picard = 21;
  r.height = 1;
  CHECK_FALSE(check_artin_inequality(r));

  r.picard = 20;
  CHECK(check_artin_inequality(r));

  r.picard = 0;
  CHECK_FALSE(check_artin_inequality(r));
}

TEST_CASE("input validation") {
  FrobCharPoly in;
  in.poly = tpow(kTm1, 2);
  in.q = 8;
  in.p = 2;
  CHECK_NOTHROW(analyze(in));

  in.q = 6;
  CHECK_THROWS_AS(analyze(in), invalid_input);

  in.q = 4;
  in.p = 4;
  CHECK_THROWS_AS(analyze(in), invalid_input);

  in.q = 2;
  in.p = 2;
  in.poly = RationalPoly::constant(Rat(3));
  CHECK_THROWS_AS(analyze(in), invalid_input);

  in.poly = RationalPoly::from_strings({"2", "2"});  // not monic
  CHECK_THROWS_AS(analyze(in), invalid_input);

  in.poly = RationalPoly::from_strings({"0", "1", "1"});
  CHECK_THROWS_AS(analyze(in), invalid_input);
}
