#include "k3cm/kummer.hpp"

#include <sstream>

namespace k3cm {

KummerInput KummerInput::make(const Int& d1, const Int& d2) {
  if (d1 >= 0 || !is_fundamental_discriminant(d1) || d2 >= 0 ||
      !is_fundamental_discriminant(d2))
    throw invalid_input(
        "kummer input needs negative fundamental discriminants");
  return KummerInput{d1, d2};
}

std::pair<CmFieldSpec, int> kummer_cm_data(const KummerInput& input) {
  if (input.d1 == input.d2)
    return {CmFieldSpec::imag_quadratic(input.d1), 20};
  return {CmFieldSpec::biquadratic(input.d1, input.d2), 18};
}

GramMatrix kummer_tensor_lattice() {
  // basis e1*e2, e1*f2, f1*e2, f1*f2 of H^1(C1) (x) H^1(C2); the symmetric
  // product of the two symplectic forms is the antidiagonal below and has
  // determinant 1, so doubling leaves only a power of 2 in the discriminant
  GramMatrix g = GramMatrix::from_entries({{0, 0, 0, 1},
                                           {0, 0, -1, 0},
                                           {0, -1, 0, 0},
                                           {1, 0, 0, 0}});
  return double_pairing(g);
}

SelfProductEntry self_product_entry(const Int& d, const Int& p) {
  KummerInput in = KummerInput::make(d, d);
  SelfProductEntry e;
  e.d = d;
  e.p = p;
  auto [field, picard_complex] = kummer_cm_data(in);
  e.field = field;
  e.picard_complex = picard_complex;
  PlaceInvariants inv = analyze_place(e.field, p);
  e.ordinary = inv.split_q_in_e;
  e.supersingular = !inv.split_q_in_e;
  e.p_ramified = inv.e_p > 1;
  // the self-product tensor order is the full order, so the residue formula
  // applies exactly when the place tower is unramified
  e.formula_applies = e.supersingular && !e.p_ramified;
  if (e.supersingular && e.p_ramified) {
    e.has_recorded_artin = true;
    e.recorded_artin = 1;
  }
  return e;
}

TensorOrderFinding tensor_order_counterexample_report(const Int& p) {
  if (!is_prime(p)) throw invalid_input("counterexample prime must be prime");

  TensorOrderFinding f;
  f.p = p;
  f.d1 = -20;
  f.d2 = -15;

  const GramMatrix doubled = kummer_tensor_lattice();
  f.disc_coprime_to_p = val_p(doubled.det(), p) == 0;

  OrderIndexReport idx = biquadratic_order_index_at_p(f.d1, f.d2, p);
  f.index = idx.index;
  f.order_maximal_at_p = !idx.p_divides;
  if (!f.order_maximal_at_p) f.assumption_failed = "order-maximality";
  if (!f.disc_coprime_to_p)
    f.assumption_failed += std::string(f.assumption_failed.empty() ? "" : "; ")
                           + "disc-coprimality";

  f.place = analyze_place(CmFieldSpec::biquadratic(f.d1, f.d2), p);
  f.split = f.place.split_q_in_e;
  if (!f.split) f.would_give = f.place.kq_degree;

  // reduction metadata: at p = 5 both curves reduce supersingularly and the
  // Kummer reduction is recorded with Artin invariant 1
  if (p == 5) {
    f.has_recorded_actual = true;
    f.recorded_actual = 1;
  }

  f.counterexample = !f.split && f.has_recorded_actual &&
                     f.recorded_actual != f.would_give &&
                     !f.assumption_failed.empty();

  std::ostringstream note;
  if (f.split) {
    note << "q splits in E at " << p
         << "; the reduction is not supersingular and the Artin formula does "
            "not apply";
  } else if (f.counterexample) {
    note << "the formula would give " << f.would_give
         << " but the recorded reduction has Artin invariant "
         << f.recorded_actual << "; the failing assumption is "
         << f.assumption_failed;
  } else if (!f.assumption_failed.empty()) {
    note << "assumption " << f.assumption_failed << " fails at " << p
         << "; the formula is not applicable";
  } else {
    note << "every assumption holds at " << p
         << "; the formula applies and no counterexample arises";
  }
  f.notes.push_back(note.str());
  return f;
}

}  // namespace k3cm
