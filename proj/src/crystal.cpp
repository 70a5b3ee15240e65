#include "k3cm/crystal.hpp"

#include <algorithm>

#include "k3cm/snf.hpp"

namespace k3cm {

namespace {

void check_eisenstein(const Int& p, int e, const std::vector<Int>& eis) {
  if (static_cast<int>(eis.size()) != e + 1 || eis[e] != 1)
    throw invalid_input("eisenstein relation must be monic of degree e");
  if (eis[0] == 0 || val_p(eis[0], p) != 1)
    throw invalid_input("eisenstein relation needs v_p(constant term) = 1");
  for (int i = 1; i < e; ++i)
    if (eis[i] != 0 && val_p(eis[i], p) < 1)
      throw invalid_input("eisenstein relation needs p | lower coefficients");
}

}  // namespace

LocalFieldData LocalFieldData::make(const Int& p, int d, int e) {
  std::vector<Int> eis(static_cast<size_t>(e) + 1, 0);
  eis[0] = -p;
  eis[static_cast<size_t>(e)] = 1;
  return make(p, d, e, std::move(eis));
}

LocalFieldData LocalFieldData::make(const Int& p, int d, int e,
                                    std::vector<Int> eis) {
  if (!is_prime(p)) throw invalid_input("local field data: p must be prime");
  if (d < 1) throw invalid_input("local field data: d must be positive");
  if (e < 1) throw invalid_input("local field data: e must be positive");
  check_eisenstein(p, e, eis);
  LocalFieldData out;
  out.p = p;
  out.d = d;
  out.e = e;
  out.eisenstein = std::move(eis);
  return out;
}

LocalFieldData LocalFieldData::make(const Int& p, int d, int e,
                                    const RationalPoly& eis) {
  if (!eis.is_integral())
    throw invalid_input("eisenstein relation must have integer coefficients");
  std::vector<Int> coeffs;
  for (int i = 0; i <= eis.degree(); ++i)
    coeffs.push_back(eis.coeff(i).get_num());
  return make(p, d, e, std::move(coeffs));
}

ComponentRing::ComponentRing(std::shared_ptr<const WittRing> w,
                             std::vector<Int> eis)
    : w_(std::move(w)),
      e_(static_cast<int>(eis.size()) - 1),
      eis_(std::move(eis)) {
  if (w_->precision() < 2)
    throw invalid_input("component ring needs witt precision >= 2");
  check_eisenstein(w_->prime(), e_, eis_);
  for (auto& c : eis_) c = mod_reduce(c, w_->modulus());
}

ComponentRing::Elt ComponentRing::zero() const {
  return Elt(static_cast<size_t>(e_), w_->zero());
}

ComponentRing::Elt ComponentRing::one() const {
  Elt x = zero();
  x[0] = w_->one();
  return x;
}

ComponentRing::Elt ComponentRing::from_int(const Int& a) const {
  Elt x = zero();
  x[0] = w_->from_int(a);
  return x;
}

ComponentRing::Elt ComponentRing::from_witt(const WittRing::Elt& a) const {
  Elt x = zero();
  x[0] = a;
  return x;
}

ComponentRing::Elt ComponentRing::pi() const {
  if (e_ == 1) return from_int(-eis_[0]);
  Elt x = zero();
  x[1] = w_->one();
  return x;
}

ComponentRing::Elt ComponentRing::add(const Elt& a, const Elt& b) const {
  Elt out = zero();
  for (int i = 0; i < e_; ++i) out[i] = w_->add(a[i], b[i]);
  return out;
}

ComponentRing::Elt ComponentRing::sub(const Elt& a, const Elt& b) const {
  Elt out = zero();
  for (int i = 0; i < e_; ++i) out[i] = w_->sub(a[i], b[i]);
  return out;
}

ComponentRing::Elt ComponentRing::mul(const Elt& a, const Elt& b) const {
  std::vector<WittRing::Elt> prod(2 * static_cast<size_t>(e_) - 1, w_->zero());
  for (int i = 0; i < e_; ++i) {
    if (w_->is_zero(a[i])) continue;
    for (int j = 0; j < e_; ++j)
      prod[i + j] = w_->add(prod[i + j], w_->mul(a[i], b[j]));
  }
  // pi^e = -(c_{e-1} pi^{e-1} + ... + c_0); the c_i are prime-field scalars
  for (int k = 2 * e_ - 2; k >= e_; --k) {
    if (w_->is_zero(prod[k])) continue;
    for (int i = 0; i < e_; ++i)
      prod[k - e_ + i] =
          w_->sub(prod[k - e_ + i], w_->mul_scalar(prod[k], eis_[i]));
    prod[k] = w_->zero();
  }
  prod.resize(static_cast<size_t>(e_), w_->zero());
  return prod;
}

ComponentRing::Elt ComponentRing::mul_int(const Elt& a, const Int& c) const {
  Elt out = zero();
  for (int i = 0; i < e_; ++i) out[i] = w_->mul_scalar(a[i], c);
  return out;
}

ComponentRing::Elt ComponentRing::mul_pi(const Elt& a) const {
  Elt out = zero();
  for (int i = 0; i + 1 < e_; ++i) out[i + 1] = a[i];
  const WittRing::Elt& top = a[static_cast<size_t>(e_) - 1];
  if (!w_->is_zero(top))
    for (int i = 0; i < e_; ++i)
      out[i] = w_->sub(out[i], w_->mul_scalar(top, eis_[i]));
  return out;
}

bool ComponentRing::equal(const Elt& a, const Elt& b) const { return a == b; }

bool ComponentRing::is_zero(const Elt& a) const {
  return std::all_of(a.begin(), a.end(),
                     [&](const WittRing::Elt& c) { return w_->is_zero(c); });
}

ComponentRing::Elt ComponentRing::frobenius(const Elt& a) const {
  Elt out = zero();
  for (int i = 0; i < e_; ++i) out[i] = w_->frobenius(a[i]);
  return out;
}

ComponentRing::Elt ComponentRing::p_over_pi() const {
  // pi * (pi^{e-1} + c_{e-1} pi^{e-2} + ... + c_1) = -c_0 = p * u with u a
  // unit, so u^{-1} times the parenthesis multiplies with pi to exactly p
  const Int& p = w_->prime();
  const Int c0 = mod_reduce(-eis_[0], w_->modulus());
  if (c0 == 0 || val_p(c0, p) != 1)
    throw internal_error("eisenstein constant term lost p-exactness");
  const Int uinv = inv_mod(c0 / p, w_->modulus());
  Elt a = zero();
  for (int i = 1; i < e_; ++i) a[i - 1] = w_->from_int(eis_[i]);
  a[static_cast<size_t>(e_) - 1] = w_->add(a[static_cast<size_t>(e_) - 1], w_->one());
  return mul_int(a, uinv);
}

std::vector<Int> ComponentRing::flatten(const Elt& a) const {
  std::vector<Int> out;
  out.reserve(static_cast<size_t>(e_) * w_->residue_degree());
  for (const auto& c : a) out.insert(out.end(), c.begin(), c.end());
  return out;
}

FCrystal build_beta(const LocalFieldData& lfd, int precision,
                    int residue_degree) {
  if (lfd.d < 2 || lfd.d % 2 != 0)
    throw invalid_input("crystal multipliers need an even inertia degree");
  if (precision < 2) throw invalid_input("crystal precision must be >= 2");
  int m = residue_degree == 0 ? lfd.d : residue_degree;
  if (m % lfd.d != 0)
    throw invalid_input("witt residue degree must be a multiple of d");

  FCrystal c;
  c.lfd = lfd;
  c.w = std::make_shared<WittRing>(lfd.p, m, precision);
  c.ring = std::make_shared<ComponentRing>(c.w, lfd.eisenstein);
  c.dprime = lfd.d == 2 ? 0 : lfd.d / 2 + 1;

  const ComponentRing& ring = *c.ring;
  c.beta.assign(static_cast<size_t>(lfd.d), ring.from_int(lfd.p));
  c.beta_exp.assign(static_cast<size_t>(lfd.d), SymbolicMultiplier{1, 0});
  c.beta[1] = ring.mul_int(ring.pi(), lfd.p);
  c.beta_exp[1] = SymbolicMultiplier{1, 1};
  c.beta[static_cast<size_t>(c.dprime)] = ring.p_over_pi();
  c.beta_exp[static_cast<size_t>(c.dprime)] = SymbolicMultiplier{1, -1};
  if (lfd.e > 1)
    c.notes.push_back(
        "ramified multiplier p/pi kept integral via the eisenstein relation");

  // phi^d acts on component 0 as the twisted multiplier product; the p*pi and
  // p/pi contributions cancel to exactly p^d at working precision
  ComponentRing::Elt acc = ring.one();
  for (int k = 0; k < lfd.d; ++k) acc = phi_step(c, k, acc);
  const Int pd = pow_int(lfd.p, static_cast<unsigned long>(lfd.d));
  if (!ring.equal(acc, ring.from_int(pd)))
    throw internal_error("crystal multiplier product is not p^d");
  return c;
}

ComponentRing::Elt phi_step(const FCrystal& c, int from,
                            const ComponentRing::Elt& x) {
  const int d = c.lfd.d;
  const int to = ((from + 1) % d + d) % d;
  return c.ring->mul(c.beta[static_cast<size_t>(to)], c.ring->frobenius(x));
}

BkSymbolic bk_symbolic(const LocalFieldData& lfd) {
  if (lfd.d < 2 || lfd.d % 2 != 0)
    throw invalid_input("symbolic multipliers need an even inertia degree");
  BkSymbolic bk;
  bk.d = lfd.d;
  bk.components.assign(static_cast<size_t>(lfd.d),
                       BkComponent{1, 0, {{"E/E(0)", 1}}});
  bk.components[0].pi_power = 1;
  bk.components[0].unit_tokens["E_0/E_0(0)"] = 1;
  auto& half = bk.components[static_cast<size_t>(lfd.d / 2)];
  half.pi_power = -1;
  half.unit_tokens["E_{d/2}/E_{d/2}(0)"] = -1;
  return bk;
}

std::vector<SymbolicMultiplier> specialize_mod_u(const BkSymbolic& bk) {
  // u = 0 sends every unit token to 1; the Frobenius pullback renumbers
  // component i to i+1 mod d
  std::vector<SymbolicMultiplier> out(static_cast<size_t>(bk.d));
  for (int i = 0; i < bk.d; ++i) {
    const BkComponent& src =
        bk.components[static_cast<size_t>((i - 1 + bk.d) % bk.d)];
    out[static_cast<size_t>(i)] = SymbolicMultiplier{src.p_power, src.pi_power};
  }
  return out;
}

FixedModule fixed_module_basis(const FCrystal& c) {
  const int d = c.lfd.d;
  const int e = c.lfd.e;
  const int N = c.w->precision();
  const ComponentRing& ring = *c.ring;
  const int anchor = (d / 2 + 1) % d;

  FixedModule fm;
  fm.anchor = anchor;
  fm.achieved_precision = N;

  // x_anchor ranges over a basis of the phi^d-fixed subring times pi-powers;
  // everything else follows from x_{i+1} = pi^{?} phi(x_i) without division
  for (const auto& omega : c.w->fixed_point_basis(d)) {
    for (int j = 0; j < e; ++j) {
      ComponentRing::Elt b = ring.from_witt(omega);
      for (int t = 0; t < j; ++t) b = ring.mul_pi(b);
      std::vector<ComponentRing::Elt> x(static_cast<size_t>(d), ring.zero());
      x[static_cast<size_t>(anchor)] = b;
      for (int t = 1; t < d; ++t) {
        const int i = (anchor + t) % d;
        const int prev = (anchor + t - 1 + d) % d;
        ComponentRing::Elt y = ring.frobenius(x[static_cast<size_t>(prev)]);
        if (i == 1) y = ring.mul_pi(y);
        x[static_cast<size_t>(i)] = std::move(y);
      }
      // closing equation phi(x_{d/2}) = pi x_anchor, exact at precision N
      if (!ring.equal(ring.frobenius(x[static_cast<size_t>(d / 2)]),
                      ring.mul_pi(x[static_cast<size_t>(anchor)])))
        throw internal_error("fixed module recursion failed to close");
      // and therefore phi(x) = p x componentwise
      for (int i = 0; i < d; ++i) {
        const int prev = (i - 1 + d) % d;
        if (!ring.equal(phi_step(c, prev, x[static_cast<size_t>(prev)]),
                        ring.mul_int(x[static_cast<size_t>(i)], c.lfd.p)))
          throw internal_error("fixed module vector is not a phi = p solution");
      }
      fm.vectors.push_back(std::move(x));
    }
  }

  // the d*e vectors must span freely one precision level down
  IntMat rows;
  for (const auto& x : fm.vectors) {
    std::vector<Int> row;
    for (const auto& comp : x) {
      auto flat = ring.flatten(comp);
      row.insert(row.end(), flat.begin(), flat.end());
    }
    rows.push_back(std::move(row));
  }
  SnfResult s = smith_normal_form(std::move(rows), c.lfd.p, N - 1, false);
  fm.rank = static_cast<int>(
      std::count(s.diag_val.begin(), s.diag_val.end(), 0));
  if (fm.rank != d * e)
    throw internal_error("fixed module does not have full rank [E_p:Q_p]");
  return fm;
}

ArtinCokernelReport artin_invariant_via_cokernel(const FCrystal& c) {
  const int d = c.lfd.d;
  const int e = c.lfd.e;
  const int m = c.w->residue_degree();
  const int N = c.w->precision();
  const ComponentRing& ring = *c.ring;

  ArtinCokernelReport rep;
  // identity components (i = 0 and i > d/2) contribute unit diagonals
  rep.snf_diag_val.assign(static_cast<size_t>((d / 2) * e * m), 0);

  const size_t dim = static_cast<size_t>(e) * static_cast<size_t>(m);
  for (int comp = 1; comp <= d / 2; ++comp) {
    IntMat a(dim, std::vector<Int>(dim, 0));
    for (int col_pi = 0; col_pi < e; ++col_pi)
      for (int col_w = 0; col_w < m; ++col_w) {
        ComponentRing::Elt basis = ring.zero();
        basis[static_cast<size_t>(col_pi)][static_cast<size_t>(col_w)] = 1;
        const auto image = ring.flatten(ring.mul_pi(basis));
        const size_t col = static_cast<size_t>(col_pi) * m + col_w;
        for (size_t row = 0; row < dim; ++row) a[row][col] = image[row];
      }
    SnfResult s = smith_normal_form(std::move(a), c.lfd.p, N, false);
    for (int v : s.diag_val) {
      if (v >= N)
        throw internal_error(
            "multiplication by pi is singular at working precision");
      rep.snf_diag_val.push_back(v);
    }
  }
  std::sort(rep.snf_diag_val.begin(), rep.snf_diag_val.end());

  rep.total_zp_length = 0;
  for (int v : rep.snf_diag_val) rep.total_zp_length += v;
  if (rep.total_zp_length % m != 0)
    throw internal_error("cokernel length is not a W-module length");
  rep.artin_invariant = rep.total_zp_length / m;
  return rep;
}

}  // namespace k3cm
