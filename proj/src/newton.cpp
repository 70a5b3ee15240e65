#include "k3cm/newton.hpp"

#include <algorithm>

namespace k3cm {

PadicValuation padic_valuation(const Int& n, const Int& p) {
  if (!is_prime(p)) throw invalid_input("valuation prime is not prime");
  if (n == 0) return {p, true, Rat(0)};
  return {p, false, Rat(val_p(n, p))};
}

PadicValuation padic_valuation(const Rat& q, const Int& p) {
  if (!is_prime(p)) throw invalid_input("valuation prime is not prime");
  if (q == 0) return {p, true, Rat(0)};
  return {p, false, Rat(val_p(q, p))};
}

unsigned NewtonPolygon::total_length() const {
  unsigned n = 0;
  for (const auto& s : segments) n += s.length;
  return n;
}

unsigned NewtonPolygon::positive_length() const {
  unsigned n = 0;
  for (const auto& s : segments)
    if (s.slope > 0) n += s.length;
  return n;
}

unsigned NewtonPolygon::negative_length() const {
  unsigned n = 0;
  for (const auto& s : segments)
    if (s.slope < 0) n += s.length;
  return n;
}

unsigned NewtonPolygon::zero_length() const {
  unsigned n = 0;
  for (const auto& s : segments)
    if (s.slope == 0) n += s.length;
  return n;
}

NewtonPolygon newton_polygon(const RationalPoly& f, const Int& p) {
  if (!is_prime(p)) throw invalid_input("newton polygon prime is not prime");
  if (f.is_zero()) throw invalid_input("newton polygon of the zero polynomial");
  if (f.coeff(0) == 0)
    throw invalid_input("newton polygon needs a nonzero constant term");

  // finite points (i, v_p(c_i)); c_0 and the leading coefficient are nonzero
  std::vector<std::pair<long, Int>> pts;
  for (int i = 0; i <= f.degree(); ++i) {
    Rat c = f.coeff(i);
    if (c == 0) continue;
    pts.emplace_back(i, Int(val_p(c, p)));
  }

  // lower convex hull, scanning by increasing i; popping on equal slopes
  // merges collinear runs into one segment
  std::vector<std::pair<long, Int>> hull;
  for (const auto& pt : pts) {
    while (hull.size() >= 2) {
      const auto& a = hull[hull.size() - 2];
      const auto& b = hull[hull.size() - 1];
      // slope(a,b) >= slope(b,pt)  <=>  b is not below the chord a..pt
      Int lhs = (b.second - a.second) * (pt.first - b.first);
      Int rhs = (pt.second - b.second) * (b.first - a.first);
      if (lhs >= rhs)
        hull.pop_back();
      else
        break;
    }
    hull.push_back(pt);
  }

  NewtonPolygon np;
  np.prime = p;
  for (size_t k = 0; k + 1 < hull.size(); ++k) {
    Int dx = hull[k + 1].first - hull[k].first;
    Int dy = hull[k + 1].second - hull[k].second;
    Rat slope(-dy, dx);  // root valuation = negated hull slope
    slope.canonicalize();
    np.segments.push_back({slope, static_cast<unsigned>(dx.get_ui())});
  }
  std::reverse(np.segments.begin(), np.segments.end());
  return np;
}

}  // namespace k3cm
