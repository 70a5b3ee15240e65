#include "k3cm/poly.hpp"

#include <map>
#include <mutex>

namespace k3cm {

void RationalPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

RationalPoly::RationalPoly(std::vector<Rat> coeffs) : c_(std::move(coeffs)) {
  for (auto& q : c_) q.canonicalize();
  trim();
}

RationalPoly RationalPoly::constant(const Rat& c) {
  return RationalPoly(std::vector<Rat>{c});
}

RationalPoly RationalPoly::monomial(int n, const Rat& c) {
  if (n < 0) throw invalid_input("monomial with negative degree");
  std::vector<Rat> v(static_cast<size_t>(n) + 1, Rat(0));
  v.back() = c;
  return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::from_strings(const std::vector<std::string>& coeffs) {
  std::vector<Rat> v;
  v.reserve(coeffs.size());
  for (const auto& s : coeffs) v.push_back(rat_from_string(s));
  return RationalPoly(std::move(v));
}

Rat RationalPoly::coeff(int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return Rat(0);
  return c_[static_cast<size_t>(i)];
}

bool RationalPoly::is_monic() const {
  return !c_.empty() && c_.back() == 1;
}

bool RationalPoly::is_integral() const {
  for (const auto& q : c_)
    if (q.get_den() != 1) return false;
  return true;
}

RationalPoly RationalPoly::operator+(const RationalPoly& o) const {
  std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] += o.c_[i];
  return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::operator-(const RationalPoly& o) const {
  std::vector<Rat> v(std::max(c_.size(), o.c_.size()), Rat(0));
  for (size_t i = 0; i < c_.size(); ++i) v[i] += c_[i];
  for (size_t i = 0; i < o.c_.size(); ++i) v[i] -= o.c_[i];
  return RationalPoly(std::move(v));
}

RationalPoly RationalPoly::operator*(const RationalPoly& o) const {
  if (is_zero() || o.is_zero()) return RationalPoly();
  std::vector<Rat> v(c_.size() + o.c_.size() - 1, Rat(0));
  for (size_t i = 0; i < c_.size(); ++i)
    for (size_t j = 0; j < o.c_.size(); ++j) v[i + j] += c_[i] * o.c_[j];
  return RationalPoly(std::move(v));
}

void RationalPoly::divmod(const RationalPoly& a, const RationalPoly& b,
                          RationalPoly& quot, RationalPoly& rem) {
  if (b.is_zero()) throw invalid_input("polynomial division by zero");
  std::vector<Rat> r = a.c_;
  int db = b.degree();
  std::vector<Rat> q;
  if (a.degree() >= db) q.assign(static_cast<size_t>(a.degree() - db) + 1, Rat(0));
  const Rat& lead = b.c_.back();
  for (int i = a.degree(); i >= db; --i) {
    Rat f = r[static_cast<size_t>(i)] / lead;
    if (f != 0) {
      q[static_cast<size_t>(i - db)] = f;
      for (int j = 0; j <= db; ++j)
        r[static_cast<size_t>(i - db + j)] -= f * b.c_[static_cast<size_t>(j)];
    }
  }
  quot = RationalPoly(std::move(q));
  rem = RationalPoly(std::move(r));
}

std::optional<RationalPoly> RationalPoly::exact_divide(const RationalPoly& b) const {
  RationalPoly q, r;
  divmod(*this, b, q, r);
  if (!r.is_zero()) return std::nullopt;
  return q;
}

Rat RationalPoly::evaluate(const Rat& x) const {
  Rat acc(0);
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

std::string RationalPoly::to_string() const {
  if (is_zero()) return "0";
  std::string s;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) s += ", ";
    s += rat_to_string(c_[i]);
  }
  return s;
}

RationalPoly RationalPoly::cyclotomic(unsigned m) {
  if (m == 0) throw invalid_input("cyclotomic index must be positive");
  static std::map<unsigned, RationalPoly> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto hit = cache.find(m);
  if (hit != cache.end()) return hit->second;
  // Phi_m = (T^m - 1) / prod_{d | m, d < m} Phi_d, computed in index order
  for (unsigned k = 1; k <= m; ++k) {
    if (m % k != 0 || cache.count(k)) continue;
    RationalPoly num = RationalPoly::monomial(static_cast<int>(k), Rat(1)) -
                       RationalPoly::constant(Rat(1));
    for (unsigned d = 1; d < k; ++d) {
      if (k % d != 0) continue;
      auto q = num.exact_divide(cache.at(d));
      if (!q) throw internal_error("cyclotomic recursion divided inexactly");
      num = *q;
    }
    cache.emplace(k, num);
  }
  return cache.at(m);
}

}  // namespace k3cm
