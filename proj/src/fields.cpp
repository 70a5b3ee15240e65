#include "k3cm/fields.hpp"

#include <numeric>

namespace k3cm {

CmFieldSpec CmFieldSpec::imag_quadratic(const Int& d) {
  if (d >= 0 || !is_fundamental_discriminant(d))
    throw invalid_input("imaginary quadratic field needs a negative fundamental discriminant");
  CmFieldSpec s;
  s.family = CmFamily::imag_quadratic;
  s.d1 = d;
  return s;
}

CmFieldSpec CmFieldSpec::biquadratic(const Int& d1, const Int& d2) {
  if (d1 >= 0 || d2 >= 0 || !is_fundamental_discriminant(d1) ||
      !is_fundamental_discriminant(d2))
    throw invalid_input("biquadratic field needs two negative fundamental discriminants");
  if (d1 == d2)
    throw invalid_input("biquadratic field needs distinct discriminants");
  CmFieldSpec s;
  s.family = CmFamily::biquadratic;
  s.d1 = d1;
  s.d2 = d2;
  return s;
}

CmFieldSpec CmFieldSpec::cyclotomic(unsigned n) {
  if (n < 3 || n % 4 == 2)
    throw invalid_input("cyclotomic conductor must be >= 3 and not 2 mod 4");
  CmFieldSpec s;
  s.family = CmFamily::cyclotomic;
  s.conductor = n;
  return s;
}

int CmFieldSpec::degree() const {
  switch (family) {
    case CmFamily::imag_quadratic: return 2;
    case CmFamily::biquadratic: return 4;
    case CmFamily::cyclotomic: return static_cast<int>(euler_phi(Int(conductor)).get_ui());
  }
  throw internal_error("unknown field family");
}

std::string CmFieldSpec::describe() const {
  switch (family) {
    case CmFamily::imag_quadratic:
      return "imag_quadratic(" + d1.get_str() + ")";
    case CmFamily::biquadratic:
      return "biquadratic(" + d1.get_str() + "," + d2.get_str() + ")";
    case CmFamily::cyclotomic:
      return "cyclotomic(" + std::to_string(conductor) + ")";
  }
  throw internal_error("unknown field family");
}

bool CmFieldSpec::operator==(const CmFieldSpec& o) const {
  return family == o.family && d1 == o.d1 && d2 == o.d2 &&
         conductor == o.conductor;
}

namespace {

void require_prime(const Int& p) {
  if (p < 2 || !is_prime(p)) throw invalid_input("p must be prime");
}

PlaceInvariants finish(PlaceInvariants inv) {
  inv.d = inv.f_p;
  inv.e = inv.e_p;
  inv.local_degree = inv.e_p * inv.f_p;
  inv.kq_degree = inv.f_q;
  if (inv.e_p % inv.e_q || inv.f_p % inv.f_q)
    throw internal_error("tower invariants fail multiplicativity");
  return inv;
}

PlaceInvariants analyze_imag_quadratic(const Int& d, const Int& p) {
  PlaceInvariants inv;  // F = Q: e_q = f_q = 1
  int chi = kronecker_symbol(d, p);
  if (chi == 1) {
    inv.e_p = 1; inv.f_p = 1; inv.places_in_e = 2; inv.split_q_in_e = true;
  } else if (chi == -1) {
    inv.e_p = 1; inv.f_p = 2; inv.places_in_e = 1;
  } else {
    inv.e_p = 2; inv.f_p = 1; inv.places_in_e = 1;
  }
  return finish(inv);
}

PlaceInvariants analyze_biquadratic(const Int& d1, const Int& d2, const Int& p) {
  // the three quadratic subfields have discriminants d1, d2 and
  // d3 = fundamental discriminant of d1*d2 (the real one, F = Q(sqrt(d3)))
  Int d3 = fundamental_discriminant(d1 * d2);
  int c1 = kronecker_symbol(d1, p);
  int c2 = kronecker_symbol(d2, p);
  int c3 = kronecker_symbol(d3, p);
  int ramified = (c1 == 0) + (c2 == 0) + (c3 == 0);
  if (ramified == 1 || (ramified == 0 && c1 * c2 * c3 != 1))
    throw internal_error("impossible splitting pattern in biquadratic field");

  PlaceInvariants inv;
  inv.e_p = ramified == 0 ? 1 : (ramified == 3 ? 4 : 2);
  bool some_inert = (c1 == -1) || (c2 == -1) || (c3 == -1);
  inv.f_p = some_inert ? 2 : 1;
  inv.places_in_e = 4 / (inv.e_p * inv.f_p);
  inv.e_q = c3 == 0 ? 2 : 1;
  inv.f_q = c3 == -1 ? 2 : 1;
  int places_in_f = c3 == 1 ? 2 : 1;
  inv.split_q_in_e = inv.places_in_e == 2 * places_in_f;
  return finish(inv);
}

PlaceInvariants analyze_cyclotomic(unsigned n, const Int& p) {
  // n = p^a * n0 with p coprime to n0; inertia is (Z/p^a)^* and the residue
  // degree is the order of p mod n0. F is the fixed field of -1, so the
  // decomposition over q is read off from whether -1 lies in the
  // decomposition (resp. inertia) subgroup mod n0.
  Int n0(n);
  int a = 0;
  while (n0 % p == 0) {
    n0 /= p;
    ++a;
  }
  long f_p = multiplicative_order(p, n0);
  Int e_p = a == 0 ? Int(1) : euler_phi(pow_int(p, static_cast<unsigned long>(a)));

  bool minus1_in_inertia = n0 <= 2;  // -1 = 1 mod n0
  bool minus1_in_decomp = minus1_in_inertia;
  if (!minus1_in_decomp) {
    Int target = n0 - 1, acc = 1;
    for (long k = 0; k < f_p && !minus1_in_decomp; ++k) {
      if (acc == target) minus1_in_decomp = true;
      acc = mod_reduce(acc * p, n0);
    }
  }

  PlaceInvariants inv;
  inv.e_p = static_cast<int>(e_p.get_ui());
  inv.f_p = static_cast<int>(f_p);
  Int deg = euler_phi(Int(n));
  inv.places_in_e = static_cast<int>(Int(deg / (e_p * f_p)).get_ui());
  inv.split_q_in_e = !minus1_in_decomp;
  inv.e_q = minus1_in_inertia ? inv.e_p / 2 : inv.e_p;
  inv.f_q = (minus1_in_decomp && !minus1_in_inertia) ? inv.f_p / 2 : inv.f_p;
  return finish(inv);
}

}  // namespace

PlaceInvariants analyze_place(const CmFieldSpec& field, const Int& p) {
  require_prime(p);
  switch (field.family) {
    case CmFamily::imag_quadratic:
      return analyze_imag_quadratic(field.d1, p);
    case CmFamily::biquadratic:
      return analyze_biquadratic(field.d1, field.d2, p);
    case CmFamily::cyclotomic:
      return analyze_cyclotomic(field.conductor, p);
  }
  throw internal_error("unknown field family");
}

bool check_unramified_consistency(const PlaceInvariants& inv,
                                  bool disc_pic_coprime_to_p,
                                  bool order_maximal_at_p) {
  if (!(disc_pic_coprime_to_p && order_maximal_at_p)) return true;
  return inv.e_p == inv.e_q;
}

OrderIndexReport biquadratic_order_index_at_p(const Int& d1, const Int& d2,
                                              const Int& p) {
  require_prime(p);
  CmFieldSpec::biquadratic(d1, d2);  // validates the discriminants
  Int d3 = fundamental_discriminant(d1 * d2);
  Int ratio = (d1 * d2) / d3;  // = index^2; exact by construction
  if (ratio * d3 != d1 * d2 || !mpz_perfect_square_p(ratio.get_mpz_t()))
    throw internal_error("conductor index square was not a square");
  OrderIndexReport r;
  mpz_sqrt(r.index.get_mpz_t(), ratio.get_mpz_t());
  r.p_divides = (r.index % p == 0);
  return r;
}

bool norm_generation_check(const Int& c, int n) {
  if (n < 1 || n > 24) throw invalid_input("precision out of range");
  if (c == 0) throw invalid_input("square class of zero");
  Int s = squarefree_kernel(c);
  Int s8 = mod_reduce(s, 8);
  if (s8 == 1) throw invalid_input("square class is trivial over Q_2");
  if (s8 == 5) throw invalid_input("square class is unramified over Q_2");

  // Z-span of the represented values equals gcd * Z/2^n
  const Int m = pow_int(2, static_cast<unsigned long>(n));
  Int g = m;
  for (Int x = 0; x < m && g != 1; ++x)
    for (Int y = 0; y < m && g != 1; ++y) {
      Int v = mod_reduce(x * x - c * y * y, m);
      if (v != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    }
  return g == 1;
}

}  // namespace k3cm
