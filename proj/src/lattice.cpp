#include "k3cm/lattice.hpp"

namespace k3cm {

GramMatrix GramMatrix::from_entries(std::vector<std::vector<Int>> entries) {
  GramMatrix g;
  g.a = std::move(entries);
  const size_t n = g.a.size();
  if (n == 0) throw invalid_input("empty Gram matrix");
  for (const auto& row : g.a)
    if (row.size() != n) throw invalid_input("Gram matrix is not square");
  for (size_t i = 0; i < n; ++i)
    for (size_t j = i + 1; j < n; ++j)
      if (g.a[i][j] != g.a[j][i])
        throw invalid_input("Gram matrix is not symmetric");
  return g;
}

GramMatrix GramMatrix::rank2(const Int& a1, const Int& a2, const Int& a3) {
  return from_entries({{a1, a2}, {a2, a3}});
}

Int GramMatrix::det() const {
  // Bareiss fraction-free elimination over a rational-free copy
  std::vector<std::vector<Int>> m = a;
  const size_t n = m.size();
  Int prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t s = k + 1;
      while (s < n && m[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(m[s], m[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

bool GramMatrix::is_even() const {
  for (size_t i = 0; i < a.size(); ++i)
    if (a[i][i] % 2 != 0) return false;
  return true;
}

bool GramMatrix::is_positive_definite() const {
  for (size_t k = 1; k <= a.size(); ++k) {
    std::vector<std::vector<Int>> minor(k, std::vector<Int>(k));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j) minor[i][j] = a[i][j];
    GramMatrix sub;
    sub.a = std::move(minor);
    if (sub.det() <= 0) return false;
  }
  return true;
}

GramMatrix double_pairing(const GramMatrix& g) {
  GramMatrix h = g;
  for (auto& row : h.a)
    for (auto& x : row) x *= 2;
  return h;
}

SingularNormalForm singular_normal_form(const GramMatrix& g, const Int& p) {
  if (!is_prime(p)) throw invalid_input("p must be prime");
  if (g.rank() != 2) throw invalid_input("normal form needs a rank-2 matrix");
  if (!g.is_even()) throw invalid_input("normal form needs an even matrix");
  if (!g.is_positive_definite())
    throw invalid_input("normal form needs a positive definite matrix");

  SingularNormalForm nf;
  nf.p = p;
  Int a1 = g.a[0][0], a2 = g.a[0][1], a3 = g.a[1][1];
  nf.disc_pic = a2 * a2 - a1 * a3;
  if (nf.disc_pic % p == 0)
    throw invalid_input("p divides the Picard discriminant");

  long v1 = val_p(Int(a1 / 2), p), v3 = val_p(Int(a3 / 2), p);
  nf.n = static_cast<int>(std::min(v1, v3));
  Int scale = 2 * pow_int(p, static_cast<unsigned long>(nf.n));
  nf.a1p = a1 / scale;
  nf.a3p = a3 / scale;
  nf.a2 = a2;
  if (nf.a1p % p == 0) {
    std::swap(nf.a1p, nf.a3p);
    nf.swapped = true;
  }
  if (nf.a1p % p == 0)
    throw internal_error("normal form failed to make a1' coprime to p");
  return nf;
}

QuadraticOrder endomorphism_order(const SingularNormalForm& nf) {
  QuadraticOrder o;
  o.a = nf.a1p;
  o.b = nf.a2;
  o.c = pow_int(nf.p, 2 * static_cast<unsigned long>(nf.n)) * nf.a3p;
  o.disc = o.b * o.b - 4 * o.a * o.c;
  if (o.disc != nf.disc_pic)
    throw internal_error("order discriminant disagrees with disc_pic");
  return o;
}

bool nonsplit_criterion(const SingularNormalForm& nf) {
  if (nf.p == 2) return nf.n == 0 && nf.a3p % 2 != 0;
  return kronecker_symbol(nf.disc_pic, nf.p) == -1;
}

}  // namespace k3cm
