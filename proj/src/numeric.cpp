#include "k3cm/numeric.hpp"

#include <cctype>

namespace k3cm {

long val_p(const Int& n, const Int& p) {
  if (p < 2) throw invalid_input("valuation prime must be >= 2");
  if (n == 0) throw invalid_input("valuation of zero requested");
  Int rest;
  return static_cast<long>(
      mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t()));
}

long val_p(const Rat& q, const Int& p) {
  if (q == 0) throw invalid_input("valuation of zero requested");
  return val_p(Int(q.get_num()), p) - val_p(Int(q.get_den()), p);
}

bool is_prime(const Int& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Int inv_mod(const Int& a, const Int& m) {
  if (m <= 1) throw invalid_input("modular inverse needs modulus > 1");
  Int r;
  if (mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()) == 0)
    throw invalid_input("element not invertible modulo " + m.get_str());
  return r;
}

Int mod_reduce(const Int& a, const Int& m) {
  Int r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

int kronecker_symbol(const Int& a, const Int& m) {
  if (m == 0) throw invalid_input("kronecker symbol with zero second argument");
  return mpz_kronecker(a.get_mpz_t(), m.get_mpz_t());
}

std::vector<std::pair<Int, int>> factorize(const Int& n) {
  if (n == 0) throw invalid_input("factorize(0)");
  Int a = abs(n);
  if (a > Int("1000000000000"))
    throw invalid_input("integer too large to factor by trial division");
  std::vector<std::pair<Int, int>> out;
  for (Int f = 2; f * f <= a; f += (f == 2 ? 1 : 2)) {
    if (a % f != 0) continue;
    int e = 0;
    while (a % f == 0) {
      a /= f;
      ++e;
    }
    out.emplace_back(f, e);
  }
  if (a > 1) out.emplace_back(a, 1);
  return out;
}

Int euler_phi(const Int& n) {
  if (n < 1) throw invalid_input("euler_phi needs n >= 1");
  if (n == 1) return 1;
  Int r = 1;
  for (const auto& [p, e] : factorize(n))
    r *= pow_int(p, static_cast<unsigned long>(e - 1)) * (p - 1);
  return r;
}

Int squarefree_kernel(const Int& n) {
  if (n == 0) throw invalid_input("squarefree kernel of zero");
  Int k = (n < 0) ? Int(-1) : Int(1);
  for (const auto& [p, e] : factorize(n))
    if (e % 2 == 1) k *= p;
  return k;
}

Int fundamental_discriminant(const Int& d) {
  if (d == 0) throw invalid_input("discriminant must be nonzero");
  if (d > 0 && mpz_perfect_square_p(d.get_mpz_t()))
    throw invalid_input("discriminant is a perfect square");
  Int s = squarefree_kernel(d);
  return (mod_reduce(s, 4) == 1) ? s : 4 * s;
}

bool is_fundamental_discriminant(const Int& d) {
  if (d == 0 || d == 1) return false;
  if (d > 0 && mpz_perfect_square_p(d.get_mpz_t())) return false;
  return d == fundamental_discriminant(d);
}

long multiplicative_order(const Int& a, const Int& n) {
  if (n < 1) throw invalid_input("multiplicative order needs modulus >= 1");
  if (n == 1) return 1;
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), n.get_mpz_t());
  if (g != 1) throw invalid_input("multiplicative order of a non-unit");
  Int acc = mod_reduce(a, n);
  long k = 1;
  while (acc != 1) {
    acc = mod_reduce(acc * a, n);
    ++k;
    if (k > 4000000) throw internal_error("multiplicative order runaway");
  }
  return k;
}

namespace {
std::string strip(const std::string& s) {
  size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}
}  // namespace

Rat rat_from_string(const std::string& s) {
  std::string t = strip(s);
  if (t.empty()) throw invalid_input("empty rational literal");
  Rat q;
  if (mpq_set_str(q.get_mpq_t(), t.c_str(), 10) != 0)
    throw invalid_input("bad rational literal: " + s);
  if (q.get_den() == 0) throw invalid_input("zero denominator: " + s);
  q.canonicalize();
  return q;
}

std::string rat_to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Int int_from_string(const std::string& s) {
  std::string t = strip(s);
  if (t.empty()) throw invalid_input("empty integer literal");
  Int n;
  if (mpz_set_str(n.get_mpz_t(), t.c_str(), 10) != 0)
    throw invalid_input("bad integer literal: " + s);
  return n;
}

}  // namespace k3cm
