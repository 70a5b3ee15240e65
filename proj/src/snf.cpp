#include "k3cm/snf.hpp"

#include <algorithm>
#include <numeric>

namespace k3cm {

namespace {

// valuation of a representative in [0, p^N), capped at N
int val_capped(const Int& a, const Int& p, int N) {
  if (a == 0) return N;
  int v = static_cast<int>(val_p(a, p));
  return v >= N ? N : v;
}

}  // namespace

SnfResult smith_normal_form(IntMat a, const Int& p, int N, bool want_right) {
  if (N < 1) throw invalid_input("smith normal form needs precision >= 1");
  if (!is_prime(p)) throw invalid_input("smith normal form modulus base not prime");
  const size_t rows = a.size();
  const size_t cols = rows ? a[0].size() : 0;
  for (const auto& r : a)
    if (r.size() != cols) throw invalid_input("ragged matrix");
  const Int pn = pow_int(p, static_cast<unsigned long>(N));

  for (auto& r : a)
    for (auto& x : r) x = mod_reduce(x, pn);

  IntMat v;
  if (want_right) {
    v.assign(cols, std::vector<Int>(cols, 0));
    for (size_t i = 0; i < cols; ++i) v[i][i] = 1;
  }

  const size_t steps = std::min(rows, cols);
  std::vector<int> diag(steps, N);

  for (size_t r = 0; r < steps; ++r) {
    // pivot: minimal valuation in the trailing submatrix
    int best = N;
    size_t bi = r, bj = r;
    for (size_t i = r; i < rows; ++i)
      for (size_t j = r; j < cols; ++j) {
        int w = val_capped(a[i][j], p, N);
        if (w < best) {
          best = w;
          bi = i;
          bj = j;
          if (best == 0) goto found;
        }
      }
  found:
    if (best == N) break;  // trailing submatrix is zero mod p^N
    if (bi != r) std::swap(a[bi], a[r]);
    if (bj != r) {
      for (size_t i = 0; i < rows; ++i) std::swap(a[i][bj], a[i][r]);
      if (want_right) std::swap(v[bj], v[r]);  // v stored column-major below
    }

    // normalize pivot to p^best (row scaling by the unit inverse)
    const Int pv = pow_int(p, static_cast<unsigned long>(best));
    Int unit = a[r][r] / pv;
    Int uinv = inv_mod(unit, pn);
    for (size_t j = r; j < cols; ++j)
      a[r][j] = mod_reduce(a[r][j] * uinv, pn);

    // clear the pivot column (row ops; quotients are exact by minimality)
    for (size_t i = r + 1; i < rows; ++i) {
      if (a[i][r] == 0) continue;
      Int q = a[i][r] / pv;
      for (size_t j = r; j < cols; ++j)
        a[i][j] = mod_reduce(a[i][j] - q * a[r][j], pn);
    }
    // clear the pivot row (column ops mirrored into v)
    for (size_t j = r + 1; j < cols; ++j) {
      if (a[r][j] == 0) continue;
      Int q = a[r][j] / pv;
      for (size_t i = r; i < rows; ++i)
        a[i][j] = mod_reduce(a[i][j] - q * a[i][r], pn);
      if (want_right)
        for (size_t k = 0; k < cols; ++k)
          v[j][k] = mod_reduce(v[j][k] - q * v[r][k], pn);
    }
    diag[r] = best;
  }

  // ascending diagonal; the permutation is mirrored into v
  std::vector<size_t> order(steps);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](size_t x, size_t y) { return diag[x] < diag[y]; });
  SnfResult out;
  out.diag_val.resize(steps);
  for (size_t k = 0; k < steps; ++k) out.diag_val[k] = diag[order[k]];
  if (want_right) {
    IntMat vp(cols, std::vector<Int>(cols, 0));
    for (size_t k = 0; k < steps; ++k) vp[k] = v[order[k]];
    for (size_t k = steps; k < cols; ++k) vp[k] = v[k];
    // return V with columns as rows transposed back to column vectors
    out.right.assign(cols, std::vector<Int>(cols, 0));
    for (size_t i = 0; i < cols; ++i)
      for (size_t j = 0; j < cols; ++j) out.right[i][j] = vp[j][i];
  }
  return out;
}

std::vector<std::vector<Int>> free_kernel_basis(const IntMat& a, const Int& p,
                                                int N) {
  SnfResult s = smith_normal_form(a, p, N, true);
  const size_t cols = a.empty() ? 0 : a[0].size();
  std::vector<std::vector<Int>> basis;
  for (size_t j = 0; j < cols; ++j) {
    int dv = j < s.diag_val.size() ? s.diag_val[j] : N;
    if (dv == 0) continue;
    if (dv < N)
      throw internal_error("kernel has torsion; free basis unavailable");
    std::vector<Int> col(cols);
    for (size_t i = 0; i < cols; ++i) col[i] = s.right[i][j];
    basis.push_back(std::move(col));
  }
  return basis;
}

}  // namespace k3cm
