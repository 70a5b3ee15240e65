#pragma once

/* Smith normal form over Z/p^N (a local principal ideal ring: every nonzero
   element is p^v times a unit). Diagonal entries are reported by their
   p-valuation v, with v = N standing for zero. */

#include <vector>

#include "k3cm/numeric.hpp"

namespace k3cm {

using IntMat = std::vector<std::vector<Int>>;

struct SnfResult {
  std::vector<int> diag_val;  // ascending, length min(rows, cols)
  IntMat right;               // column transform V with A*V = U^{-1}*D; may be empty
};

// a is consumed; entries may be arbitrary integers (reduced mod p^N internally)
SnfResult smith_normal_form(IntMat a, const Int& p, int N, bool want_right);

// Basis of the free part of ker(x -> A x) over Z/p^N: columns V e_j whose
// diagonal entry vanishes mod p^N. Throws internal_error if the kernel has a
// torsion part (callers here use it only where the kernel is known free).
std::vector<std::vector<Int>> free_kernel_basis(const IntMat& a, const Int& p,
                                                int N);

}  // namespace k3cm
