#pragma once

/* Analysis of q-normalized Frobenius characteristic polynomials on H^2:
   roots are Frobenius eigenvalues divided by q, so algebraic (Tate) classes
   contribute roots of unity and the formal group height counts the roots of
   strictly positive p-adic valuation. */

#include <map>
#include <string>
#include <vector>

#include "k3cm/newton.hpp"

namespace k3cm {

struct FrobCharPoly {
  RationalPoly poly;  // monic, nonzero constant term; degree 22 in the
                      // geometric situation, smaller degrees allowed for tests
  Int q;              // ground field size, a power of p
  Int p;
  bool weil_claimed = false;  // enables the symmetric-slope strictness check
};

struct FrobReport {
  int degree = 0;
  int picard = 0;  // total multiplicity of root-of-unity roots
  bool supersingular = false;
  bool height_infinite = false;
  int height = 0;  // meaningful when finite
  NewtonPolygon polygon;
  std::map<unsigned, int> unit_root_factors;  // m -> multiplicity of Phi_m
  bool artin_consistent = true;
  std::vector<std::string> diagnostics;
};

// total multiplicity of cyclotomic factors, by iterated trial division over
// every m with phi(m) <= deg f
int count_unit_root_multiplicity(const RationalPoly& f);
std::map<unsigned, int> unit_root_factorization(const RationalPoly& f);

FrobReport analyze(const FrobCharPoly& input);

// 1 <= picard <= 22, and picard <= 22 - 2*height when the height is finite
bool check_artin_inequality(const FrobReport& r);

}  // namespace k3cm
