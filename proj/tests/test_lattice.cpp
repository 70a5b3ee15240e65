#include <doctest.h>

#include "k3cm/errors.hpp"
#include "k3cm/lattice.hpp"

using namespace k3cm;

TEST_CASE("gram matrix basics") {
  auto g = GramMatrix::rank2(Int(2), Int(1), Int(2));
  CHECK(g.rank() == 2);
  CHECK(g.det() == 3);
  CHECK(g.is_even());
  CHECK(g.is_positive_definite());

  CHECK_THROWS_AS(GramMatrix::from_entries({{Int(2), Int(1)}}), invalid_input);
  CHECK_THROWS_AS(
      GramMatrix::from_entries({{Int(2), Int(1)}, {Int(0), Int(2)}}),
      invalid_input);

  auto h = GramMatrix::from_entries(
      {{Int(2), Int(0), Int(0)}, {Int(0), Int(4), Int(1)}, {Int(0), Int(1), Int(2)}});
  CHECK(h.det() == 14);
  CHECK(h.is_even());
  CHECK(h.is_positive_definite());

  CHECK_FALSE(GramMatrix::rank2(Int(2), Int(1), Int(3)).is_even());
  CHECK_FALSE(GramMatrix::rank2(Int(2), Int(3), Int(2)).is_positive_definite());
  CHECK_FALSE(GramMatrix::rank2(Int(-2), Int(0), Int(2)).is_positive_definite());

  auto d = double_pairing(g);
  CHECK(d.a[0][0] == 4);
  CHECK(d.a[0][1] == 2);
  CHECK(d.det() == 12);  // 3 * 2^rank
}

TEST_CASE("singular normal form") {
  auto g = GramMatrix::rank2(Int(2), Int(1), Int(2));

  auto nf5 = singular_normal_form(g, Int(5));
  CHECK(nf5.disc_pic == -3);
  CHECK(nf5.n == 0);
  CHECK(nf5.a1p == 1);
  CHECK(nf5.a2 == 1);
  CHECK(nf5.a3p == 1);
  CHECK_FALSE(nf5.swapped);

  // scaling valuation and the basis swap
  auto big = singular_normal_form(GramMatrix::rank2(Int(4), Int(1), Int(2)),
                                  Int(2));
  CHECK(big.n == 0);
  CHECK(big.swapped);
  CHECK(big.a1p == 1);
  CHECK(big.a3p == 2);
  CHECK(big.disc_pic == -7);

  auto deep = singular_normal_form(GramMatrix::rank2(Int(4), Int(1), Int(4)),
                                   Int(2));
  CHECK(deep.n == 1);
  CHECK(deep.a1p == 1);
  CHECK(deep.a3p == 1);

  CHECK_THROWS_AS(singular_normal_form(g, Int(3)), invalid_input);  // 3 | -3
  CHECK_THROWS_AS(singular_normal_form(g, Int(4)), invalid_input);
  CHECK_THROWS_AS(
      singular_normal_form(GramMatrix::rank2(Int(2), Int(3), Int(2)), Int(5)),
      invalid_input);
}

TEST_CASE("endomorphism order discriminant") {
  auto nf = singular_normal_form(GramMatrix::rank2(Int(2), Int(1), Int(2)),
                                 Int(5));
  auto o = endomorphism_order(nf);
  CHECK(o.disc == nf.disc_pic);
  CHECK(o.b * o.b - 4 * o.a * o.c == -3);

  auto deep = singular_normal_form(GramMatrix::rank2(Int(4), Int(1), Int(4)),
                                   Int(2));
  CHECK(endomorphism_order(deep).disc == -15);
}

TEST_CASE("nonsplit criterion") {
  auto g = GramMatrix::rank2(Int(2), Int(1), Int(2));
  CHECK(nonsplit_criterion(singular_normal_form(g, Int(5))));   // (-3|5) = -1
  CHECK_FALSE(nonsplit_criterion(singular_normal_form(g, Int(7))));
  CHECK(nonsplit_criterion(singular_normal_form(g, Int(2))));   // n=0, a3' odd

  auto h = GramMatrix::rank2(Int(2), Int(1), Int(4));
  CHECK_FALSE(nonsplit_criterion(singular_normal_form(h, Int(2))));

  auto deep = GramMatrix::rank2(Int(4), Int(1), Int(4));
  CHECK_FALSE(nonsplit_criterion(singular_normal_form(deep, Int(2))));
}
