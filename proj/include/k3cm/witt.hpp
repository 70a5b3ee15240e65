#pragma once

/* Truncated Witt vectors W(F_{p^m})/p^N, realized as (Z/p^N)[x]/(f) for a
   monic degree-m lift f of an irreducible polynomial over F_p. Elements are
   coefficient vectors of length m with entries reduced into [0, p^N). The
   Frobenius lifts x -> x^p and satisfies frobenius^m = id; it is computed once
   at construction by a Hensel/Newton lift, so a ring context is immutable and
   freely shareable across threads afterwards. */

#include <vector>

#include "k3cm/snf.hpp"

namespace k3cm {

class WittRing {
 public:
  using Elt = std::vector<Int>;  // length m, entries in [0, p^N)

  WittRing(const Int& p, int m, int N);

  const Int& prime() const { return p_; }
  int residue_degree() const { return m_; }
  int precision() const { return n_; }
  const Int& modulus() const { return q_; }         // p^N
  const std::vector<Int>& min_poly() const { return f_; }  // constant first

  Elt zero() const;
  Elt one() const;
  Elt from_int(const Int& a) const;
  Elt gen() const;  // class of x (equals from_int(lift) when m = 1)

  Elt add(const Elt& a, const Elt& b) const;
  Elt sub(const Elt& a, const Elt& b) const;
  Elt neg(const Elt& a) const;
  Elt mul(const Elt& a, const Elt& b) const;
  Elt mul_scalar(const Elt& a, const Int& c) const;
  Elt pow(const Elt& a, unsigned long e) const;
  bool is_zero(const Elt& a) const;
  bool equal(const Elt& a, const Elt& b) const;

  // p-adic valuation: largest v with a in p^v * ring; N for zero
  int valuation(const Elt& a) const;
  // multiplicative inverse; throws invalid_input on a non-unit
  Elt invert(const Elt& a) const;

  Elt frobenius(const Elt& a) const;
  Elt frobenius_pow(const Elt& a, int k) const;  // any integer k, phi^m = id

  // basis of the phi^r-fixed subring {a : frobenius^r(a) = a}, free of rank r
  // over Z/p^N whenever r divides m (it is W(F_{p^r})/p^N)
  std::vector<Elt> fixed_point_basis(int r) const;

 private:
  Int p_;
  int m_ = 0;
  int n_ = 0;
  Int q_;                // p^N
  std::vector<Int> f_;   // monic lift of an irreducible, length m+1
  IntMat frob_;          // m x m matrix of phi on the power basis

  Elt reduce_product(const std::vector<Int>& prod) const;
  Elt apply_matrix(const IntMat& mat, const Elt& a) const;
};

}  // namespace k3cm
