#include <doctest.h>

#include "k3cm/errors.hpp"
#include "k3cm/poly.hpp"

using namespace k3cm;

TEST_CASE("construction, trimming, coefficient access") {
  RationalPoly z;
  CHECK(z.is_zero());
  CHECK(z.degree() == -1);

  RationalPoly p(std::vector<Rat>{Rat(1), Rat(0), Rat(0)});
  CHECK(p.degree() == 0);
  CHECK(p.coeff(0) == 1);
  CHECK(p.coeff(5) == 0);

  RationalPoly m = RationalPoly::monomial(3, Rat(2));
  CHECK(m.degree() == 3);
  CHECK(m.coeff(3) == 2);
  CHECK(m.coeff(1) == 0);
  CHECK(RationalPoly::monomial(4, Rat(0)).is_zero());

  RationalPoly f = RationalPoly::from_strings({"25", "-5", "1"});
  CHECK(f.degree() == 2);
  CHECK(f.is_monic());
  CHECK(f.is_integral());
  CHECK(f.to_string() == "25, -5, 1");

  RationalPoly g = RationalPoly::from_strings({"1", "-29/5", "1"});
  CHECK_FALSE(g.is_integral());
  CHECK(g.coeff(1) == rat_from_string("-29/5"));
}

TEST_CASE("ring operations and evaluation") {
  RationalPoly t = RationalPoly::monomial(1, Rat(1));
  RationalPoly one = RationalPoly::constant(Rat(1));
  CHECK((t - one) * (t + one) == t * t - one);
  CHECK((t + one) + (t - one) == RationalPoly::from_strings({"0", "2"}));

  RationalPoly g = RationalPoly::from_strings({"1", "-29/5", "1"});
  CHECK(g.evaluate(Rat(5)) == -3);
  CHECK(g.evaluate(Rat(0)) == 1);
}

TEST_CASE("division with remainder and exact division") {
  RationalPoly t = RationalPoly::monomial(1, Rat(1));
  RationalPoly one = RationalPoly::constant(Rat(1));
  RationalPoly t2m1 = t * t - one;

  auto q = t2m1.exact_divide(t - one);
  REQUIRE(q.has_value());
  CHECK(*q == t + one);

  CHECK_FALSE((t * t + one).exact_divide(t - one).has_value());

  RationalPoly quot, rem;
  RationalPoly::divmod(t * t + one, t - one, quot, rem);
  CHECK(quot == t + one);
  CHECK(rem == RationalPoly::constant(Rat(2)));

  CHECK_THROWS_AS(RationalPoly::divmod(t, RationalPoly(), quot, rem),
                  invalid_input);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(RationalPoly::cyclotomic(1) == RationalPoly::from_strings({"-1", "1"}));
  CHECK(RationalPoly::cyclotomic(2) == RationalPoly::from_strings({"1", "1"}));
  CHECK(RationalPoly::cyclotomic(4) ==
        RationalPoly::from_strings({"1", "0", "1"}));
  CHECK(RationalPoly::cyclotomic(6) ==
        RationalPoly::from_strings({"1", "-1", "1"}));
  CHECK(RationalPoly::cyclotomic(12) ==
        RationalPoly::from_strings({"1", "0", "-1", "0", "1"}));

  // prod over d | 12 of Phi_d = T^12 - 1
  RationalPoly prod = RationalPoly::constant(Rat(1));
  for (unsigned d : {1u, 2u, 3u, 4u, 6u, 12u})
    prod = prod * RationalPoly::cyclotomic(d);
  CHECK(prod == RationalPoly::monomial(12, Rat(1)) -
                    RationalPoly::constant(Rat(1)));

  CHECK(RationalPoly::cyclotomic(5).evaluate(Rat(1)) == 5);
  CHECK(RationalPoly::cyclotomic(9).evaluate(Rat(1)) == 3);
  CHECK(RationalPoly::cyclotomic(12).evaluate(Rat(1)) == 1);

  // first index with a coefficient outside {-1, 0, 1}
  CHECK(RationalPoly::cyclotomic(105).coeff(7) == -2);
  CHECK(RationalPoly::cyclotomic(105).degree() == 48);

  CHECK_THROWS_AS(RationalPoly::cyclotomic(0), invalid_input);
}
