#pragma once

/* CM fields E with maximal totally real subfield F, and the invariants of a
   place q of F over p together with the place(s) of E above it. Three
   families: imaginary quadratic (F = Q), biquadratic composita of two
   imaginary quadratic fields (F real quadratic), and cyclotomic fields
   (F the maximal real subfield). */

#include <string>

#include "k3cm/numeric.hpp"

namespace k3cm {

enum class CmFamily { imag_quadratic, biquadratic, cyclotomic };

struct CmFieldSpec {
  CmFamily family = CmFamily::imag_quadratic;
  Int d1;          // imag_quadratic / biquadratic: fundamental discriminant(s)
  Int d2;          // biquadratic only
  unsigned conductor = 0;  // cyclotomic only

  static CmFieldSpec imag_quadratic(const Int& d);
  static CmFieldSpec biquadratic(const Int& d1, const Int& d2);
  static CmFieldSpec cyclotomic(unsigned n);

  int degree() const;  // [E:Q]
  std::string describe() const;
  bool operator==(const CmFieldSpec& o) const;
};

/* Invariants of p under F/Q and E/Q. Because E/Q is Galois in every family
   handled here, all places over p share (e, f), and the residue degree d of
   the maximal unramified subextension of E_p/Q_p equals f_p. */
struct PlaceInvariants {
  bool split_q_in_e = false;  // does q have two places of E above it
  int e_q = 1, f_q = 1;       // q over p in F
  int e_p = 1, f_p = 1;       // p (place of E) over p
  int d = 1;                  // [E_{p,0} : Q_p] = f_p
  int e = 1;                  // = e_p
  int local_degree = 1;       // e_p * f_p
  int kq_degree = 1;          // [k(q) : F_p] = f_q
  int places_in_e = 1;        // number of places of E over p
};

PlaceInvariants analyze_place(const CmFieldSpec& field, const Int& p);

// true when the data is consistent: both reduction assumptions force
// E_p / F_q unramified, so asserting them at a place with e_p > e_q lies
bool check_unramified_consistency(const PlaceInvariants& inv,
                                  bool disc_pic_coprime_to_p,
                                  bool order_maximal_at_p);

struct OrderIndexReport {
  Int index;       // conductor index of O_{K1} O_{K2} inside O_E
  bool p_divides;  // maximality of the tensor order fails at p iff true
};

// E = Q(sqrt(d1), sqrt(d2)), d1 != d2 fundamental; index^2 = d1*d2 / d3
OrderIndexReport biquadratic_order_index_at_p(const Int& d1, const Int& d2,
                                              const Int& p);

/* Finite verification over Q_2: the values x^2 - c y^2 with x, y mod 2^n
   additively generate all of Z/2^n. Requires Q_2(sqrt(c))/Q_2 ramified;
   square classes with c = 1 or 5 mod 8 (after removing square factors) are
   rejected. */
bool norm_generation_check(const Int& c, int n);

}  // namespace k3cm
