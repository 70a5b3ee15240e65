#pragma once

/* Even positive definite lattices given by integer Gram matrices, the rank-2
   normal form used for singular K3 transcendental lattices at p, and the
   split / nonsplit criterion for the reduction. disc_pic below is the signed
   quantity a2^2 - a1*a3 (negative for positive definite forms). */

#include <vector>

#include "k3cm/numeric.hpp"

namespace k3cm {

struct GramMatrix {
  std::vector<std::vector<Int>> a;  // symmetric

  static GramMatrix from_entries(std::vector<std::vector<Int>> entries);
  static GramMatrix rank2(const Int& a1, const Int& a2, const Int& a3);

  int rank() const { return static_cast<int>(a.size()); }
  Int det() const;  // Bareiss, exact
  bool is_even() const;
  bool is_positive_definite() const;  // leading principal minors positive
};

// scales the bilinear form by 2 (the Kummer doubling); det scales by 2^rank
GramMatrix double_pairing(const GramMatrix& g);

/* a1 = 2 p^n a1', a3 = 2 p^n a3' with p not dividing a1' (basis vectors are
   exchanged when needed, which leaves a2 and disc_pic unchanged). Requires an
   even positive definite rank-2 matrix with p not dividing disc_pic. */
struct SingularNormalForm {
  Int p;
  int n = 0;
  Int a1p, a2, a3p;
  bool swapped = false;
  Int disc_pic;
};

SingularNormalForm singular_normal_form(const GramMatrix& g, const Int& p);

// quadratic order Z_(p)[T] / (a T^2 + b T + c); its polynomial discriminant
// b^2 - 4ac equals disc_pic, and p coprime to it makes the order maximal at p
struct QuadraticOrder {
  Int a, b, c;
  Int disc;
};

QuadraticOrder endomorphism_order(const SingularNormalForm& nf);

// true when the reduction at p is nonsplit (supersingular): for odd p the
// criterion is (disc_pic | p) = -1; for p = 2 it is n = 0 with a3' odd
bool nonsplit_criterion(const SingularNormalForm& nf);

}  // namespace k3cm
