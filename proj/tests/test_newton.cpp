#include <doctest.h>

#include "k3cm/errors.hpp"
#include "k3cm/newton.hpp"
#include "oracles.hpp"

using namespace k3cm;

namespace {

std::vector<std::pair<Rat, unsigned>> seg_pairs(const NewtonPolygon& poly) {
  std::vector<std::pair<Rat, unsigned>> v;
  for (const auto& s : poly.segments) v.emplace_back(s.slope, s.length);
  return v;
}

using Segs = std::vector<std::pair<Rat, unsigned>>;

}  // namespace

TEST_CASE("padic valuation records") {
  auto v = padic_valuation(Int(50), Int(5));
  CHECK_FALSE(v.infinite);
  CHECK(v.value == 2);
  CHECK(padic_valuation(Int(0), Int(7)).infinite);
  CHECK(padic_valuation(rat_from_string("29/5"), Int(5)).value == -1);
  CHECK(padic_valuation(rat_from_string("4/9"), Int(3)).value == -2);
}

TEST_CASE("newton polygon of quadratics") {
  auto a = newton_polygon(RationalPoly::from_strings({"25", "-5", "1"}), Int(5));
  CHECK(seg_pairs(a) == Segs{{Rat(1), 2}});
  CHECK(a.total_length() == 2);
  CHECK(a.positive_length() == 2);
  CHECK(a.zero_length() == 0);

  auto b =
      newton_polygon(RationalPoly::from_strings({"1", "-29/5", "1"}), Int(5));
  CHECK(seg_pairs(b) == Segs{{Rat(-1), 1}, {Rat(1), 1}});
  CHECK(b.positive_length() == 1);
  CHECK(b.negative_length() == 1);
}

TEST_CASE("fractional slopes and mixed products") {
  auto c = newton_polygon(RationalPoly::from_strings({"-5", "0", "0", "1"}),
                          Int(5));
  CHECK(seg_pairs(c) == Segs{{Rat(1, 3), 3}});

  RationalPoly t = RationalPoly::monomial(1, Rat(1));
  RationalPoly one = RationalPoly::constant(Rat(1));
  RationalPoly f = RationalPoly::from_strings({"25", "-5", "1"}) *
                   RationalPoly::from_strings({"1", "-29/5", "1"}) *
                   (t - one) * (t - one) * (t - one);
  auto d = newton_polygon(f, Int(5));
  CHECK(seg_pairs(d) == Segs{{Rat(-1), 1}, {Rat(0), 3}, {Rat(1), 3}});
  CHECK(d.total_length() == 7);
}

TEST_CASE("rejects zero polynomial and zero constant term") {
  CHECK_THROWS_AS(newton_polygon(RationalPoly(), Int(5)), invalid_input);
  CHECK_THROWS_AS(newton_polygon(RationalPoly::monomial(2, Rat(1)), Int(5)),
                  invalid_input);
}

TEST_CASE("polygon matches the chord-minimum hull oracle") {
  std::vector<std::vector<std::string>> polys = {
      {"25", "-5", "1"},
      {"1", "-29/5", "1"},
      {"-5", "0", "0", "1"},
      {"5", "1", "5"},
      {"125", "0", "-10", "0", "1"},
      {"1/5", "3", "7", "25", "125"},
      {"2", "4", "8", "16", "2"},
      {"9", "3", "1", "3", "9"},
  };
  for (const auto& cs : polys)
    for (Int p : {Int(2), Int(3), Int(5)}) {
      auto f = RationalPoly::from_strings(cs);
      CHECK(seg_pairs(newton_polygon(f, p)) == oracles::hull_segments(f, p));
    }

  // (T - 1)^22: binomial coefficient valuations collapse to one zero slope
  RationalPoly t = RationalPoly::monomial(1, Rat(1));
  RationalPoly one = RationalPoly::constant(Rat(1));
  RationalPoly g = one;
  for (int i = 0; i < 22; ++i) g = g * (t - one);
  for (Int p : {Int(2), Int(3), Int(7)}) {
    auto poly = newton_polygon(g, p);
    CHECK(seg_pairs(poly) == Segs{{Rat(0), 22}});
    CHECK(seg_pairs(poly) == oracles::hull_segments(g, p));
  }
}
