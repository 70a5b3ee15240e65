#pragma once

/* Dense univariate polynomials over Q, constant term first. The coefficient
   vector never ends in a zero, so degree() is size-1 (zero polynomial has an
   empty vector and degree -1). */

#include <optional>
#include <string>
#include <vector>

#include "k3cm/numeric.hpp"

namespace k3cm {

class RationalPoly {
 public:
  RationalPoly() = default;
  explicit RationalPoly(std::vector<Rat> coeffs);

  static RationalPoly constant(const Rat& c);
  static RationalPoly monomial(int n, const Rat& c);
  static RationalPoly from_strings(const std::vector<std::string>& coeffs);
  // m-th cyclotomic polynomial, integer coefficients
  static RationalPoly cyclotomic(unsigned m);

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  Rat coeff(int i) const;  // 0 beyond the stored range
  const std::vector<Rat>& coeffs() const { return c_; }
  bool is_monic() const;
  bool is_integral() const;  // every denominator is 1

  RationalPoly operator+(const RationalPoly& o) const;
  RationalPoly operator-(const RationalPoly& o) const;
  RationalPoly operator*(const RationalPoly& o) const;
  bool operator==(const RationalPoly& o) const { return c_ == o.c_; }

  // division with remainder; divisor must be nonzero
  static void divmod(const RationalPoly& a, const RationalPoly& b,
                     RationalPoly& quot, RationalPoly& rem);
  // quotient when the division is exact
  std::optional<RationalPoly> exact_divide(const RationalPoly& b) const;

  Rat evaluate(const Rat& x) const;
  std::string to_string() const;  // coefficient list "c0, c1, ..."

 private:
  std::vector<Rat> c_;
  void trim();
};

}  // namespace k3cm
