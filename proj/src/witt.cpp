#include "k3cm/witt.hpp"

#include <algorithm>

#include "k3cm/snf.hpp"

namespace k3cm {

namespace {

/* dense polynomials with Int coefficients, constant term first; used both for
   residue-field arithmetic (mod p) and for the truncated ring (mod p^N) */
using Pol = std::vector<Int>;

void trim(Pol& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const Pol& a) { return static_cast<int>(a.size()) - 1; }

Pol reduce_all(Pol a, const Int& mod) {
  for (auto& c : a) c = mod_reduce(c, mod);
  trim(a);
  return a;
}

// a mod f for monic f, coefficients mod `mod`
Pol rem_monic(Pol a, const Pol& f, const Int& mod) {
  a = reduce_all(std::move(a), mod);
  const int df = deg(f);
  while (deg(a) >= df) {
    const Int c = a.back();
    const int shift = deg(a) - df;
    if (c != 0)
      for (int k = 0; k < df; ++k)
        a[shift + k] = mod_reduce(a[shift + k] - c * f[k], mod);
    a.pop_back();
    trim(a);
  }
  return a;
}

Pol mulmod(const Pol& a, const Pol& b, const Pol& f, const Int& mod) {
  if (a.empty() || b.empty()) return {};
  Pol prod(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
  }
  return rem_monic(std::move(prod), f, mod);
}

Pol powmod(Pol base, const Int& e, const Pol& f, const Int& mod) {
  Pol acc{1};
  if (e == 0) return acc;
  base = rem_monic(std::move(base), f, mod);
  const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t k = bits; k-- > 0;) {
    acc = mulmod(acc, acc, f, mod);
    if (mpz_tstbit(e.get_mpz_t(), k)) acc = mulmod(acc, base, f, mod);
  }
  return acc;
}

// remainder of a by nonzero b over F_p (b need not be monic)
Pol rem_mod_p(Pol a, const Pol& b, const Int& p) {
  const int db = deg(b);
  const Int binv = inv_mod(b.back(), p);
  a = reduce_all(std::move(a), p);
  while (deg(a) >= db) {
    const Int c = mod_reduce(a.back() * binv, p);
    const int shift = deg(a) - db;
    if (c != 0)
      for (int k = 0; k <= db; ++k)
        a[shift + k] = mod_reduce(a[shift + k] - c * b[k], p);
    trim(a);
  }
  return a;
}

Pol gcd_mod_p(Pol a, Pol b, const Int& p) {
  a = reduce_all(std::move(a), p);
  b = reduce_all(std::move(b), p);
  while (!b.empty()) {
    Pol r = rem_mod_p(std::move(a), b, p);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    const Int linv = inv_mod(a.back(), p);
    for (auto& c : a) c = mod_reduce(c * linv, p);
  }
  return a;
}

Pol sub_mod(Pol a, const Pol& b, const Int& mod) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = mod_reduce(a[i] - b[i], mod);
  trim(a);
  return a;
}

// Rabin test: f irreducible over F_p iff x^{p^m} = x mod f and, for every
// prime q | m, gcd(x^{p^{m/q}} - x, f) = 1
bool irreducible_mod_p(const Pol& f, const Int& p) {
  const int m = deg(f);
  Pol xbar = rem_monic({0, 1}, f, p);
  Pol h = powmod(xbar, pow_int(p, static_cast<unsigned long>(m)), f, p);
  if (h != xbar) return false;
  for (const auto& [q, mult] : factorize(Int(m))) {
    (void)mult;
    Pol g = powmod(
        xbar, pow_int(p, static_cast<unsigned long>(m / q.get_si())), f, p);
    if (deg(gcd_mod_p(f, sub_mod(g, xbar, p), p)) != 0) return false;
  }
  return true;
}

// f(r) evaluated inside (Z/mod)[x]/(f0) by Horner
Pol eval_at(const Pol& f, const Pol& r, const Pol& f0, const Int& mod) {
  Pol acc;
  for (size_t i = f.size(); i-- > 0;) {
    acc = mulmod(acc, r, f0, mod);
    if (acc.empty()) acc = {0};
    acc[0] = mod_reduce(acc[0] + f[i], mod);
    trim(acc);
  }
  return acc;
}

Pol derivative(const Pol& f) {
  Pol d;
  for (size_t i = 1; i < f.size(); ++i) d.push_back(f[i] * Int(i));
  trim(d);
  return d;
}

// inverse of a unit in (Z/p^prec)[x]/(f): Fermat inverse mod p, then Newton
Pol unit_inverse(const Pol& a, const Pol& f, const Int& p, int prec) {
  const int m = deg(f);
  Pol w = powmod(a, pow_int(p, static_cast<unsigned long>(m)) - 2, f, p);
  if (mulmod(a, w, f, p) != Pol{1})
    throw internal_error("witt ring: inverting a non-unit");
  for (int k = 1; k < prec; k *= 2) {
    const Int mod = pow_int(p, static_cast<unsigned long>(std::min(2 * k, prec)));
    Pol aw = mulmod(a, w, f, mod);
    Pol two_minus{Int(2)};
    two_minus = sub_mod(std::move(two_minus), aw, mod);
    w = mulmod(w, two_minus, f, mod);
  }
  return w;
}

Pol pad(Pol a, int m) {
  a.resize(static_cast<size_t>(m), 0);
  return a;
}

}  // namespace

WittRing::WittRing(const Int& p, int m, int N) : p_(p), m_(m), n_(N) {
  if (!is_prime(p)) throw invalid_input("witt ring: p must be prime");
  if (m < 1) throw invalid_input("witt ring: residue degree must be positive");
  if (N < 1) throw invalid_input("witt ring: precision must be positive");
  q_ = pow_int(p, static_cast<unsigned long>(N));

  // smallest monic degree-m lift (coefficients enumerated base p) that is
  // irreducible mod p; the choice only has to be deterministic
  for (Int count = 0;; ++count) {
    if (count > 0 && val_p(count, p) >= m)
      throw internal_error("witt ring: irreducible search exhausted");
    Pol f(static_cast<size_t>(m) + 1, 0);
    Int rest = count;
    for (int i = 0; i < m; ++i) {
      f[i] = mod_reduce(rest, p);
      rest /= p;
    }
    f[m] = 1;
    if (irreducible_mod_p(f, p)) {
      f_ = std::move(f);
      break;
    }
  }

  // Hensel root r = x^p mod p of f, lifted to p^N by Newton; substitution
  // x -> r is then the Frobenius
  Pol xbar = rem_monic({0, 1}, f_, p_);
  Pol r = powmod(xbar, p_, f_, p_);
  const Pol fprime = derivative(f_);
  int prec = 1;
  while (prec < N) {
    prec = std::min(2 * prec, N);
    const Int mod = pow_int(p_, static_cast<unsigned long>(prec));
    Pol fr = eval_at(f_, r, f_, mod);
    if (!fr.empty()) {
      Pol w = unit_inverse(eval_at(fprime, r, f_, mod), f_, p_, prec);
      r = sub_mod(std::move(r), mulmod(fr, w, f_, mod), mod);
    }
  }
  if (!eval_at(f_, r, f_, q_).empty())
    throw internal_error("witt ring: frobenius lift failed");

  frob_.assign(static_cast<size_t>(m), std::vector<Int>(static_cast<size_t>(m), 0));
  Pol acc{1};
  for (int j = 0; j < m; ++j) {
    for (size_t i = 0; i < acc.size(); ++i) frob_[i][j] = acc[i];
    acc = mulmod(acc, r, f_, q_);
  }

  // frobenius^m = identity: phi^m(x) is the unique root of f congruent to x
  Elt probe = gen();
  for (int k = 0; k < m; ++k) probe = frobenius(probe);
  if (!equal(probe, gen()))
    throw internal_error("witt ring: frobenius order check failed");
}

WittRing::Elt WittRing::zero() const { return Elt(static_cast<size_t>(m_), 0); }

WittRing::Elt WittRing::one() const {
  Elt e = zero();
  e[0] = 1;
  return e;
}

WittRing::Elt WittRing::from_int(const Int& a) const {
  Elt e = zero();
  e[0] = mod_reduce(a, q_);
  return e;
}

WittRing::Elt WittRing::gen() const {
  if (m_ == 1) return from_int(-f_[0]);
  Elt e = zero();
  e[1] = 1;
  return e;
}

WittRing::Elt WittRing::add(const Elt& a, const Elt& b) const {
  Elt out = zero();
  for (int i = 0; i < m_; ++i) out[i] = mod_reduce(a[i] + b[i], q_);
  return out;
}

WittRing::Elt WittRing::sub(const Elt& a, const Elt& b) const {
  Elt out = zero();
  for (int i = 0; i < m_; ++i) out[i] = mod_reduce(a[i] - b[i], q_);
  return out;
}

WittRing::Elt WittRing::neg(const Elt& a) const { return sub(zero(), a); }

WittRing::Elt WittRing::mul(const Elt& a, const Elt& b) const {
  return pad(mulmod(a, b, f_, q_), m_);
}

WittRing::Elt WittRing::mul_scalar(const Elt& a, const Int& c) const {
  Elt out = zero();
  for (int i = 0; i < m_; ++i) out[i] = mod_reduce(a[i] * c, q_);
  return out;
}

WittRing::Elt WittRing::pow(const Elt& a, unsigned long e) const {
  Elt acc = one();
  Elt base = a;
  while (e) {
    if (e & 1) acc = mul(acc, base);
    base = mul(base, base);
    e >>= 1;
  }
  return acc;
}

bool WittRing::is_zero(const Elt& a) const {
  return std::all_of(a.begin(), a.end(), [](const Int& c) { return c == 0; });
}

bool WittRing::equal(const Elt& a, const Elt& b) const { return a == b; }

int WittRing::valuation(const Elt& a) const {
  int v = n_;
  for (const auto& c : a)
    if (c != 0) v = std::min(v, static_cast<int>(val_p(c, p_)));
  return v;
}

WittRing::Elt WittRing::invert(const Elt& a) const {
  if (valuation(a) > 0) throw invalid_input("witt ring: inverting a non-unit");
  return pad(unit_inverse(a, f_, p_, n_), m_);
}

WittRing::Elt WittRing::apply_matrix(const IntMat& mat, const Elt& a) const {
  Elt out = zero();
  for (int i = 0; i < m_; ++i) {
    Int s = 0;
    for (int j = 0; j < m_; ++j) s += mat[i][j] * a[j];
    out[i] = mod_reduce(s, q_);
  }
  return out;
}

WittRing::Elt WittRing::frobenius(const Elt& a) const {
  return apply_matrix(frob_, a);
}

WittRing::Elt WittRing::frobenius_pow(const Elt& a, int k) const {
  int steps = ((k % m_) + m_) % m_;
  Elt out = a;
  while (steps--) out = frobenius(out);
  return out;
}

std::vector<WittRing::Elt> WittRing::fixed_point_basis(int r) const {
  if (r < 1 || m_ % r != 0)
    throw invalid_input("witt ring: fixed subring needs r dividing m");
  IntMat a(static_cast<size_t>(m_), std::vector<Int>(static_cast<size_t>(m_), 0));
  for (int j = 0; j < m_; ++j) {
    Elt e = zero();
    e[j] = 1;
    Elt img = frobenius_pow(e, r);
    for (int i = 0; i < m_; ++i) a[i][j] = img[i] - e[i];
  }
  auto basis = free_kernel_basis(a, p_, n_);
  if (static_cast<int>(basis.size()) != r)
    throw internal_error("witt ring: fixed subring has unexpected rank");
  return basis;
}

}  // namespace k3cm
