#include <doctest.h>

#include "k3cm/errors.hpp"
#include "k3cm/kummer.hpp"

using namespace k3cm;

TEST_CASE("kummer cm data") {
  auto [bi, rho_bi] = kummer_cm_data(KummerInput::make(Int(-20), Int(-15)));
  CHECK(bi == CmFieldSpec::biquadratic(Int(-20), Int(-15)));
  CHECK(rho_bi == 18);

  auto [self, rho_self] = kummer_cm_data(KummerInput::make(Int(-4), Int(-4)));
  CHECK(self == CmFieldSpec::imag_quadratic(Int(-4)));
  CHECK(rho_self == 20);

  CHECK_THROWS_AS(KummerInput::make(Int(-5), Int(-15)), invalid_input);
  CHECK_THROWS_AS(KummerInput::make(Int(-4), Int(15)), invalid_input);
}

TEST_CASE("doubled tensor lattice") {
  auto g = kummer_tensor_lattice();
  CHECK(g.rank() == 4);
  CHECK(g.det() == 16);
  CHECK(g.is_even());
  CHECK(val_p(g.det(), Int(2)) == 4);
  for (Int p : {Int(3), Int(5), Int(7)}) CHECK(val_p(g.det(), p) == 0);
}

TEST_CASE("self product entries") {
  auto split = self_product_entry(Int(-4), Int(5));
  CHECK(split.ordinary);
  CHECK_FALSE(split.supersingular);
  CHECK_FALSE(split.formula_applies);
  CHECK_FALSE(split.has_recorded_artin);
  CHECK(split.picard_complex == 20);
  CHECK(split.field == CmFieldSpec::imag_quadratic(Int(-4)));

  auto inert = self_product_entry(Int(-4), Int(3));
  CHECK(inert.supersingular);
  CHECK_FALSE(inert.p_ramified);
  CHECK(inert.formula_applies);
  CHECK_FALSE(inert.has_recorded_artin);

  auto ram = self_product_entry(Int(-4), Int(2));
  CHECK(ram.supersingular);
  CHECK(ram.p_ramified);
  CHECK_FALSE(ram.formula_applies);
  CHECK(ram.has_recorded_artin);
  CHECK(ram.recorded_artin == 1);
}

TEST_CASE("tensor order counterexample at p = 5") {
  auto f = tensor_order_counterexample_report(Int(5));
  CHECK(f.index == 5);
  CHECK_FALSE(f.order_maximal_at_p);
  CHECK(f.disc_coprime_to_p);
  CHECK_FALSE(f.split);
  CHECK(f.would_give == 2);
  CHECK(f.has_recorded_actual);
  CHECK(f.recorded_actual == 1);
  CHECK(f.counterexample);
  CHECK(f.assumption_failed == "order-maximality");
  REQUIRE(!f.notes.empty());
  CHECK(f.notes[0].find("formula would give 2") != std::string::npos);
}

TEST_CASE("the same pipeline at other primes finds no counterexample") {
  auto f7 = tensor_order_counterexample_report(Int(7));
  CHECK(f7.split);
  CHECK(f7.order_maximal_at_p);
  CHECK(f7.disc_coprime_to_p);
  CHECK_FALSE(f7.counterexample);
  CHECK(f7.assumption_failed.empty());

  auto f3 = tensor_order_counterexample_report(Int(3));
  CHECK(f3.index == 5);
  CHECK(f3.order_maximal_at_p);
  CHECK(f3.split);  // -20 is a square mod 3
  CHECK_FALSE(f3.counterexample);

  auto f2 = tensor_order_counterexample_report(Int(2));
  CHECK(f2.order_maximal_at_p);
  CHECK_FALSE(f2.disc_coprime_to_p);
  CHECK(f2.assumption_failed == "disc-coprimality");
  CHECK(f2.split);
  CHECK_FALSE(f2.counterexample);

  CHECK_THROWS_AS(tensor_order_counterexample_report(Int(6)), invalid_input);
}
