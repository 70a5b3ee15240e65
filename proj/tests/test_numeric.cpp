#include <doctest.h>

#include "k3cm/errors.hpp"
#include "k3cm/numeric.hpp"
#include "oracles.hpp"

using namespace k3cm;

TEST_CASE("p-adic valuation of integers and rationals") {
  CHECK(val_p(Int(48), Int(2)) == 4);
  CHECK(val_p(Int(48), Int(3)) == 1);
  CHECK(val_p(Int(-125), Int(5)) == 3);
  CHECK(val_p(Int(7), Int(5)) == 0);
  CHECK(val_p(rat_from_string("29/5"), Int(5)) == -1);
  CHECK(val_p(rat_from_string("50/3"), Int(5)) == 2);
  CHECK_THROWS_AS(val_p(Int(0), Int(5)), invalid_input);
  CHECK_THROWS_AS(val_p(Int(12), Int(1)), invalid_input);

  for (Int a = 1; a <= 200; ++a)
    for (Int p : {Int(2), Int(3), Int(5), Int(7)})
      CHECK(val_p(a, p) == oracles::slow_valuation(a, p));
}

TEST_CASE("primality and modular arithmetic") {
  CHECK(is_prime(Int(2)));
  CHECK(is_prime(Int(97)));
  CHECK_FALSE(is_prime(Int(1)));
  CHECK_FALSE(is_prime(Int(91)));

  CHECK(pow_int(Int(5), 4) == 625);
  CHECK(pow_int(Int(-2), 3) == -8);
  CHECK(pow_int(Int(7), 0) == 1);

  CHECK(mod_reduce(Int(-1), Int(7)) == 6);
  CHECK(mod_reduce(Int(15), Int(7)) == 1);

  CHECK(inv_mod(Int(3), Int(7)) == 5);
  CHECK(mod_reduce(inv_mod(Int(123), Int(625)) * 123, Int(625)) == 1);
  CHECK_THROWS_AS(inv_mod(Int(6), Int(9)), invalid_input);
}

TEST_CASE("kronecker symbol matches square enumeration at odd primes") {
  for (Int p : {Int(3), Int(5), Int(7), Int(11), Int(13), Int(37), Int(97)})
    for (Int a = -60; a <= 60; ++a)
      CHECK(kronecker_symbol(a, p) == oracles::slow_kronecker_odd_prime(a, p));
}

TEST_CASE("kronecker symbol at 2 follows the mod-8 rule") {
  CHECK(kronecker_symbol(Int(-15), Int(2)) == 1);  // -15 = 1 mod 8
  CHECK(kronecker_symbol(Int(-7), Int(2)) == 1);
  CHECK(kronecker_symbol(Int(5), Int(2)) == -1);
  CHECK(kronecker_symbol(Int(-3), Int(2)) == -1);
  CHECK(kronecker_symbol(Int(-4), Int(2)) == 0);
  CHECK(kronecker_symbol(Int(-8), Int(2)) == 0);
}

TEST_CASE("factorization helpers") {
  auto f = factorize(Int(360));
  REQUIRE(f.size() == 3);
  CHECK(f[0] == std::pair<Int, int>(Int(2), 3));
  CHECK(f[1] == std::pair<Int, int>(Int(3), 2));
  CHECK(f[2] == std::pair<Int, int>(Int(5), 1));
  CHECK(factorize(Int(1)).empty());
  CHECK_THROWS_AS(factorize(Int(0)), invalid_input);

  CHECK(euler_phi(Int(1)) == 1);
  CHECK(euler_phi(Int(12)) == 4);
  CHECK(euler_phi(Int(5)) == 4);
  CHECK(euler_phi(Int(16)) == 8);
  CHECK(euler_phi(Int(15)) == 8);

  CHECK(squarefree_kernel(Int(12)) == 3);
  CHECK(squarefree_kernel(Int(-300)) == -3);
  CHECK(squarefree_kernel(Int(7)) == 7);
  CHECK(squarefree_kernel(Int(-4)) == -1);
}

TEST_CASE("fundamental discriminants") {
  CHECK(fundamental_discriminant(Int(-1)) == -4);
  CHECK(fundamental_discriminant(Int(-3)) == -3);
  CHECK(fundamental_discriminant(Int(-5)) == -20);
  CHECK(fundamental_discriminant(Int(-2)) == -8);
  CHECK(fundamental_discriminant(Int(-15)) == -15);
  CHECK(fundamental_discriminant(Int(300)) == 12);  // (-20)(-15) = 300
  CHECK(fundamental_discriminant(Int(5)) == 5);

  CHECK(is_fundamental_discriminant(Int(-4)));
  CHECK(is_fundamental_discriminant(Int(-15)));
  CHECK(is_fundamental_discriminant(Int(12)));
  CHECK_FALSE(is_fundamental_discriminant(Int(-5)));
  CHECK_FALSE(is_fundamental_discriminant(Int(1)));
  CHECK_FALSE(is_fundamental_discriminant(Int(9)));
  CHECK_THROWS_AS(fundamental_discriminant(Int(0)), invalid_input);
  CHECK_THROWS_AS(fundamental_discriminant(Int(16)), invalid_input);
}

TEST_CASE("multiplicative order") {
  CHECK(multiplicative_order(Int(2), Int(7)) == 3);
  CHECK(multiplicative_order(Int(3), Int(7)) == 6);
  CHECK(multiplicative_order(Int(7), Int(5)) == 4);
  CHECK(multiplicative_order(Int(-1), Int(5)) == 2);
  CHECK(multiplicative_order(Int(11), Int(12)) == 2);
  CHECK(multiplicative_order(Int(4), Int(1)) == 1);
  CHECK_THROWS_AS(multiplicative_order(Int(6), Int(9)), invalid_input);
}

TEST_CASE("exact string round trips") {
  CHECK(rat_to_string(rat_from_string("29/5")) == "29/5");
  CHECK(rat_to_string(rat_from_string("-6/4")) == "-3/2");
  CHECK(rat_to_string(rat_from_string("7")) == "7");
  CHECK(int_from_string(" -42 ") == -42);
  CHECK(int_from_string("123456789012345678901234567890") ==
        Int("123456789012345678901234567890"));
  CHECK_THROWS_AS(rat_from_string("1.5"), invalid_input);
  CHECK_THROWS_AS(rat_from_string(""), invalid_input);
  CHECK_THROWS_AS(int_from_string("12x"), invalid_input);
}
