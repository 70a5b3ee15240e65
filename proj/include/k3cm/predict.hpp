#pragma once

/* Reduction invariants of a K3 surface with CM by E at a prime p of good
   reduction: the place analysis decides the split / nonsplit dichotomy
   (Picard number and formal Brauer height), and when both reduction
   assumptions are verified the Artin invariant of a supersingular reduction
   is the residue degree [k(q):F_p]. Good reduction itself is an assumption of
   the model, recorded in the diagnostics and never checked. */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "k3cm/fields.hpp"
#include "k3cm/frobenius.hpp"
#include "k3cm/lattice.hpp"

namespace k3cm {

struct K3CmInput {
  CmFieldSpec field;
  Int p;
  // reduction assumptions; unknown means unverified, which blocks the Artin
  // formula but is never an error
  std::optional<bool> disc_pic_coprime_to_p;
  std::optional<bool> order_maximal_at_p;
  // rank-2 transcendental data (singular-K3 route); derived assumption values
  // win over supplied ones, with a warning on conflict
  std::optional<GramMatrix> gram;
  // input arises as Km(C1 x C2) with endomorphisms O_1 (x) O_2: enables the
  // tensor-order maximality derivation
  bool kummer_compositum = false;
  std::optional<FrobCharPoly> frobenius;
};

enum class ArtinStatus {
  determined,      // both assumptions verified; value = [k(q):F_p]
  not_applicable,  // split place, reduction is not supersingular
  undetermined,    // assumptions unverified or failed; see diagnostics
};

struct ReductionReport {
  CmFieldSpec field;
  Int p;
  PlaceInvariants place;
  int picard_complex = 0;  // 22 - [E:Q]
  int picard = 0;
  bool supersingular = false;
  bool height_infinite = false;
  int height = 0;  // meaningful when finite
  ArtinStatus artin_status = ArtinStatus::not_applicable;
  int artin_invariant = 0;  // meaningful when determined
  std::vector<std::string> diagnostics;
  // field-by-field record of the rule that produced each value
  std::vector<std::pair<std::string, std::string>> provenance;
};

// evaluates the dichotomy; throws inconsistency when the asserted assumptions
// contradict the place data (they force E_p/F_q unramified)
ReductionReport predict_reduction(const K3CmInput& input);

// singular-K3 route: rank-2 even positive definite transcendental lattice,
// p coprime to disc_pic; the nonsplit criterion decides supersingularity and
// a supersingular reduction here always has Artin invariant 1
ReductionReport predict_singular(const GramMatrix& gram, const Int& p);

struct ValidationCheck {
  std::string name;
  bool ran = false;  // a skipped check reports why in detail
  bool passed = false;
  std::string detail;
};

struct ValidationRecord {
  std::vector<ValidationCheck> checks;
  bool all_passed = true;  // over the checks that ran
};

// independent routes: (a) the Frobenius characteristic polynomial, when
// supplied, must reproduce picard / height / supersingularity; (b) a
// determined Artin invariant must match the crystal cokernel computation.
// Disagreements are reported with both values, never reconciled.
ValidationRecord cross_validate(const ReductionReport& report,
                                const K3CmInput& input);

}  // namespace k3cm
