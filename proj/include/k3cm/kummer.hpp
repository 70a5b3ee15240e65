#pragma once

/* Kummer surfaces of products of CM elliptic curves: the CM field and complex
   Picard number of Km(C1 x C2), and the tensor-order pipeline showing how a
   non-maximal endomorphism order breaks the Artin-invariant formula while the
   lattice discriminant stays unobstructed. */

#include <string>
#include <utility>
#include <vector>

#include "k3cm/fields.hpp"
#include "k3cm/lattice.hpp"

namespace k3cm {

struct KummerInput {
  Int d1, d2;  // negative fundamental discriminants of the two CM curves

  static KummerInput make(const Int& d1, const Int& d2);
};

// equal discriminants (isogenous self-product) give the quadratic field and
// Picard number 20; distinct discriminants give the biquadratic compositum
// and Picard number 18
std::pair<CmFieldSpec, int> kummer_cm_data(const KummerInput& input);

// the transcendental lattice of Km(C1 x C2) for non-isogenous curves: the
// unimodular rank-4 tensor lattice H^1 (x) H^1 with the pairing doubled
GramMatrix kummer_tensor_lattice();

// self-product catalog entry Km(C x C): the reduction type follows the
// splitting of p in the CM field of C (split -> ordinary, else
// supersingular); in the ramified regime the Artin invariant 1 is recorded
// catalog metadata, not an output of the residue formula
struct SelfProductEntry {
  Int d;
  Int p;
  CmFieldSpec field;
  int picard_complex = 20;
  bool ordinary = false;
  bool supersingular = false;
  bool p_ramified = false;
  bool formula_applies = false;  // inert case; gives [k(q):F_p] = 1
  bool has_recorded_artin = false;
  int recorded_artin = 0;
};

SelfProductEntry self_product_entry(const Int& d, const Int& p);

struct TensorOrderFinding {
  Int p;
  Int d1, d2;
  Int index;                   // of O_{d1} O_{d2} inside the maximal order
  bool order_maximal_at_p = false;
  bool disc_coprime_to_p = false;  // doubled tensor-lattice discriminant vs p
  PlaceInvariants place;
  bool split = false;          // q splits in E at p
  int would_give = 0;          // [k(q):F_p], what the formula would report
  bool has_recorded_actual = false;
  int recorded_actual = 0;     // known reduction metadata, where available
  bool counterexample = false;
  std::string assumption_failed;  // empty when every assumption holds
  std::vector<std::string> notes;
};

// the fixed (-20, -15) configuration at a chosen prime: at p = 5 the tensor
// order has index 5, the formula would give 2, and the recorded Artin
// invariant of the actual reduction is 1
TensorOrderFinding tensor_order_counterexample_report(const Int& p);

}  // namespace k3cm
