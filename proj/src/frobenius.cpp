#include "k3cm/frobenius.hpp"

namespace k3cm {

std::map<unsigned, int> unit_root_factorization(const RationalPoly& f) {
  if (f.is_zero()) throw invalid_input("unit root count of the zero polynomial");
  std::map<unsigned, int> mult;
  RationalPoly rest = f;
  // phi(m) >= sqrt(m/2), so indices beyond 2*deg^2 cannot contribute
  unsigned deg = static_cast<unsigned>(f.degree());
  unsigned bound = 2 * deg * deg + 1;
  for (unsigned m = 1; m <= bound; ++m) {
    if (euler_phi(Int(m)) > static_cast<long>(deg)) continue;
    RationalPoly phi = RationalPoly::cyclotomic(m);
    while (rest.degree() >= phi.degree()) {
      auto q = rest.exact_divide(phi);
      if (!q) break;
      rest = *q;
      ++mult[m];
    }
  }
  return mult;
}

int count_unit_root_multiplicity(const RationalPoly& f) {
  int count = 0;
  for (const auto& [m, k] : unit_root_factorization(f))
    count += static_cast<int>(euler_phi(Int(m)).get_ui()) * k;
  return count;
}

FrobReport analyze(const FrobCharPoly& input) {
  if (!is_prime(input.p)) throw invalid_input("p must be prime");
  if (input.q < 2) throw invalid_input("q must be a prime power");
  Int q = input.q;
  while (q % input.p == 0) q /= input.p;
  if (q != 1) throw invalid_input("q must be a power of p");
  if (input.poly.degree() < 1 || !input.poly.is_monic())
    throw invalid_input("characteristic polynomial must be monic of degree >= 1");
  if (input.poly.coeff(0) == 0)
    throw invalid_input("characteristic polynomial has zero constant term");

  FrobReport r;
  r.degree = input.poly.degree();
  r.unit_root_factors = unit_root_factorization(input.poly);
  r.picard = 0;
  for (const auto& [m, k] : r.unit_root_factors)
    r.picard += static_cast<int>(euler_phi(Int(m)).get_ui()) * k;
  r.polygon = newton_polygon(input.poly, input.p);

  unsigned pos = r.polygon.positive_length();
  unsigned neg = r.polygon.negative_length();
  if (input.weil_claimed && pos != neg)
    throw inconsistency("weil polynomial with asymmetric slope multiset");
  // roots of unity sit on slope 0
  if (r.picard + static_cast<int>(pos + neg) > r.degree)
    throw internal_error("unit roots found off the zero slope");

  r.height_infinite = r.picard == r.degree;
  r.supersingular = r.height_infinite;
  r.height = r.height_infinite ? 0 : static_cast<int>(pos);

  if (r.degree == 22) {
    r.artin_consistent = check_artin_inequality(r);
    if (!r.artin_consistent)
      r.diagnostics.push_back(
          "unit-root and height counts violate the rank bound "
          "(picard > 22 - 2*height); input data is inconsistent");
  }
  return r;
}

bool check_artin_inequality(const FrobReport& r) {
  if (r.picard < 1 || r.picard > 22) return false;
  if (!r.height_infinite && r.picard > 22 - 2 * r.height) return false;
  return true;
}

}  // namespace k3cm
