#include "k3cm/sweep.hpp"

#include <atomic>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>
#include <sstream>
#include <thread>

#include "k3cm/crystal.hpp"
#include "k3cm/frobenius.hpp"
#include "k3cm/predict.hpp"

namespace k3cm {

namespace {

std::string case_key(long i, const std::string& suffix) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%06ld ", i);
  return buf + suffix;
}

// ---- newton-oracle helpers ----

// independent lower-hull walk: from each vertex take the smallest slope to a
// later point, extending ties to the farthest endpoint (merges collinear runs)
std::vector<std::pair<Rat, unsigned>> brute_hull(const RationalPoly& f,
                                                 const Int& p) {
  struct Pt {
    long x;
    Rat y;
  };
  std::vector<Pt> pts;
  for (int i = 0; i <= f.degree(); ++i)
    if (f.coeff(i) != 0) pts.push_back({i, Rat(val_p(f.coeff(i), p))});
  std::vector<std::pair<Rat, unsigned>> hull;
  size_t cur = 0;
  while (pts[cur].x < f.degree()) {
    size_t best = cur + 1;
    Rat best_slope = (pts[best].y - pts[cur].y) / Rat(pts[best].x - pts[cur].x);
    for (size_t j = cur + 2; j < pts.size(); ++j) {
      Rat s = (pts[j].y - pts[cur].y) / Rat(pts[j].x - pts[cur].x);
      if (s < best_slope || (s == best_slope && pts[j].x > pts[best].x)) {
        best_slope = s;
        best = j;
      }
    }
    hull.emplace_back(best_slope, static_cast<unsigned>(pts[best].x - pts[cur].x));
    cur = best;
  }
  // root valuations ascending = negated hull slopes in reverse
  std::vector<std::pair<Rat, unsigned>> out;
  for (auto it = hull.rbegin(); it != hull.rend(); ++it)
    out.emplace_back(-it->first, it->second);
  return out;
}

struct Construction {
  RationalPoly poly = RationalPoly::constant(1);
  Int p;
  int degree = 0;
  int picard = 0;        // total cyclotomic-factor degree
  int positive_vals = 0; // roots of strictly positive valuation
};

long unit_for(std::mt19937& rng, const Int& p) {
  for (;;) {
    long u = 1 + static_cast<long>(rng() % 7);
    if (Int(u) % p != 0) return u;
  }
}

Construction random_construction(unsigned long seed) {
  std::mt19937 rng(static_cast<unsigned>(seed));
  static const long primes[] = {2, 3, 5, 7, 11};
  Construction c;
  c.p = primes[rng() % 5];
  const Rat one(1);
  while (c.degree < 22) {
    if (c.degree > 0 && rng() % 6 == 0) break;
    const unsigned kind = rng() % 4;
    if (kind == 0) {
      const unsigned m = 1 + rng() % 12;
      RationalPoly phi = RationalPoly::cyclotomic(m);
      if (c.degree + phi.degree() > 22) continue;
      c.poly = c.poly * phi;
      c.degree += phi.degree();
      c.picard += phi.degree();
      continue;
    }
    if (c.degree + 2 > 22) break;
    const long v1 = 1 + static_cast<long>(rng() % 3);
    const long v2 = v1 + static_cast<long>(rng() % 2);
    const Rat a(unit_for(rng, c.p)), b(unit_for(rng, c.p)), u(unit_for(rng, c.p));
    const Rat pv1(pow_int(c.p, static_cast<unsigned long>(v1)));
    const Rat pv2(pow_int(c.p, static_cast<unsigned long>(v2)));
    RationalPoly q;
    if (kind == 1) {
      // root valuations {-v1, +v1}
      q = RationalPoly::monomial(2, one) -
          RationalPoly::monomial(1, a * pv1 + b / pv1) +
          RationalPoly::constant(u);
      c.positive_vals += 1;
    } else if (kind == 2) {
      // both valuations positive: {v1, v2}
      q = RationalPoly::monomial(2, one) -
          RationalPoly::monomial(1, a * pv1) +
          RationalPoly::constant(b * pv1 * pv2);
      c.positive_vals += 2;
    } else {
      // both valuations negative: {-v1, -v2}
      q = RationalPoly::monomial(2, one) -
          RationalPoly::monomial(1, a / pv2) +
          RationalPoly::constant(b / (pv1 * pv2));
    }
    c.poly = c.poly * q;
    c.degree += 2;
  }
  if (c.degree == 0) {
    c.poly = c.poly * RationalPoly::cyclotomic(1);
    c.degree = 1;
    c.picard = 1;
  }
  return c;
}

std::optional<std::string> newton_oracle_case(unsigned long seed) {
  Construction c = random_construction(seed);
  FrobCharPoly input;
  input.poly = c.poly;
  input.p = c.p;
  input.q = c.p;
  FrobReport r = analyze(input);
  std::ostringstream err;
  if (r.picard != c.picard)
    err << "picard " << r.picard << " vs constructed " << c.picard << "; ";
  const bool expect_ss = c.picard == c.degree;
  if (r.supersingular != expect_ss)
    err << "supersingular " << r.supersingular << " vs constructed "
        << expect_ss << "; ";
  if (!expect_ss && r.height != c.positive_vals)
    err << "height " << r.height << " vs constructed " << c.positive_vals
        << "; ";
  auto oracle = brute_hull(c.poly, c.p);
  const auto& segs = r.polygon.segments;
  bool same = segs.size() == oracle.size();
  for (size_t i = 0; same && i < segs.size(); ++i)
    same = segs[i].slope == oracle[i].first && segs[i].length == oracle[i].second;
  if (!same) err << "polygon disagrees with the brute-force hull; ";
  if (err.str().empty()) return std::nullopt;
  return err.str() + "poly = " + c.poly.to_string() + ", p = " + c.p.get_str();
}

// ---- tripwire helpers ----

Int ramified_fundamental(std::mt19937& rng, const Int& p) {
  static const long odd_squarefree[] = {1, 3, 5, 7, 11, 13, 15, 17, 19, 21, 23};
  for (int tries = 0; tries < 64; ++tries) {
    Int s(odd_squarefree[rng() % 11]);
    if (s % p == 0) continue;
    for (const Int& cand : {Int(-p * s), Int(-4 * p * s), Int(-8 * p * s)})
      if (is_fundamental_discriminant(cand)) return cand;
  }
  throw internal_error("no ramified fundamental discriminant found");
}

std::optional<std::string> tripwire_case(unsigned long seed) {
  std::mt19937 rng(static_cast<unsigned>(seed));
  K3CmInput in;
  const unsigned family = rng() % 3;
  if (family == 0) {
    static const long ps[] = {2, 3, 5, 7, 11, 13};
    in.p = ps[rng() % 6];
    in.field = CmFieldSpec::imag_quadratic(ramified_fundamental(rng, in.p));
  } else if (family == 1) {
    static const long ps[] = {3, 5, 7};
    in.p = ps[rng() % 3];
    Int d1 = ramified_fundamental(rng, in.p);
    Int d2 = d1;
    while (d2 == d1) d2 = ramified_fundamental(rng, in.p);
    in.field = CmFieldSpec::biquadratic(d1, d2);
  } else {
    // prime-power conductors: the place over q is always ramified
    static const std::pair<long, unsigned> table[] = {
        {2, 4}, {2, 8}, {2, 16}, {3, 9}, {3, 27},
        {5, 5}, {5, 25}, {7, 7}, {11, 11}, {13, 13}};
    const auto& [p, n] = table[rng() % 10];
    in.p = p;
    in.field = CmFieldSpec::cyclotomic(n);
  }
  in.disc_pic_coprime_to_p = true;
  in.order_maximal_at_p = true;

  PlaceInvariants inv = analyze_place(in.field, in.p);
  if (inv.e_p <= inv.e_q)
    return "generator produced an unramified configuration (" +
           in.field.describe() + " at " + in.p.get_str() + ")";
  try {
    ReductionReport r = predict_reduction(in);
    (void)r;
  } catch (const inconsistency&) {
    return std::nullopt;  // the expected hard error
  } catch (const std::exception& e) {
    return "wrong error type for " + in.field.describe() + " at " +
           in.p.get_str() + ": " + e.what();
  }
  return "accepted inconsistent input: " + in.field.describe() + " at " +
         in.p.get_str();
}

// ---- grids ----

std::vector<SweepCase> singular_lattice_cases() {
  std::vector<Int> primes{2};
  for (long p = 3; p < 100; p += 2)
    if (is_prime(Int(p))) primes.push_back(p);
  std::vector<SweepCase> cases;
  long idx = 0;
  for (const Int& p : primes)
    for (long a1 = 2; a1 <= 20; a1 += 2)
      for (long a3 = a1; a3 <= 20; a3 += 2)
        for (long a2 = -20; a2 <= 20; ++a2) {
          if (Int(a2) * a2 >= Int(a1) * a3) continue;  // not positive definite
          Int disc = Int(a2) * a2 - Int(a1) * a3;
          if (disc % p == 0) continue;  // need p coprime to disc(Pic)
          std::ostringstream label;
          label << "gram=" << a1 << "," << a2 << "," << a3 << ";p=" << p;
          cases.push_back(
              {case_key(idx++, label.str()),
               [a1, a2, a3, p]() -> std::optional<std::string> {
                 GramMatrix g = GramMatrix::rank2(a1, a2, a3);
                 SingularNormalForm nf = singular_normal_form(g, p);
                 const bool crit = nonsplit_criterion(nf);
                 Int fund = fundamental_discriminant(nf.disc_pic);
                 PlaceInvariants inv =
                     analyze_place(CmFieldSpec::imag_quadratic(fund), p);
                 if (crit == inv.split_q_in_e)
                   return "normal-form criterion disagrees with the place "
                          "analysis on " +
                          fund.get_str();
                 ReductionReport s = predict_singular(g, p);
                 K3CmInput in;
                 in.field = CmFieldSpec::imag_quadratic(fund);
                 in.p = p;
                 in.gram = g;
                 ReductionReport r = predict_reduction(in);
                 if (s.picard != r.picard || s.supersingular != r.supersingular ||
                     s.height_infinite != r.height_infinite ||
                     s.height != r.height)
                   return "singular route and field route disagree on the "
                          "dichotomy";
                 if (s.artin_status != r.artin_status ||
                     (s.artin_status == ArtinStatus::determined &&
                      s.artin_invariant != r.artin_invariant))
                   return "singular route and field route disagree on the "
                          "artin invariant";
                 return std::nullopt;
               }});
        }
  return cases;
}

std::vector<SweepCase> compositum_place_cases() {
  std::vector<SweepCase> cases;
  long idx = 0;
  for (long p = 2; p < 500; ++p) {
    if (!is_prime(Int(p))) continue;
    cases.push_back({case_key(idx++, "p=" + std::to_string(p)),
                     [p]() -> std::optional<std::string> {
                       PlaceInvariants a =
                           analyze_place(CmFieldSpec::cyclotomic(12), p);
                       PlaceInvariants b = analyze_place(
                           CmFieldSpec::biquadratic(-4, -3), p);
                       if (a.split_q_in_e != b.split_q_in_e ||
                           a.e_p != b.e_p || a.f_p != b.f_p ||
                           a.e_q != b.e_q || a.f_q != b.f_q ||
                           a.places_in_e != b.places_in_e ||
                           a.local_degree != b.local_degree ||
                           a.kq_degree != b.kq_degree)
                         return "cyclotomic(12) and biquadratic(-4,-3) "
                                "disagree";
                       return std::nullopt;
                     }});
  }
  return cases;
}

struct CrystalGridPoint {
  long p;
  int d, e, n, m;
};

std::vector<CrystalGridPoint> crystal_grid() {
  std::vector<CrystalGridPoint> grid;
  for (long p : {2, 3, 5, 7})
    for (int d : {2, 4, 6, 8, 10})
      for (int e : {1, 2, 3})
        for (int n : {4, 8, 16})
          for (int m : {d, 2 * d}) grid.push_back({p, d, e, n, m});
  return grid;
}

std::string grid_label(const CrystalGridPoint& g) {
  std::ostringstream s;
  s << "p=" << g.p << ";d=" << g.d << ";e=" << g.e << ";N=" << g.n
    << ";m=" << g.m;
  return s.str();
}

std::vector<SweepCase> crystal_artin_cases() {
  std::vector<SweepCase> cases;
  long idx = 0;
  for (const auto& g : crystal_grid())
    cases.push_back({case_key(idx++, grid_label(g)),
                     [g]() -> std::optional<std::string> {
                       FCrystal c =
                           build_beta(LocalFieldData::make(g.p, g.d, g.e),
                                      g.n, g.m);
                       ArtinCokernelReport rep = artin_invariant_via_cokernel(c);
                       std::ostringstream err;
                       if (rep.artin_invariant != g.d / 2)
                         err << "artin " << rep.artin_invariant << " vs "
                             << g.d / 2 << "; ";
                       if (rep.total_zp_length != g.m * (g.d / 2))
                         err << "Z_p-length " << rep.total_zp_length << " vs "
                             << g.m * (g.d / 2) << "; ";
                       if (static_cast<int>(rep.snf_diag_val.size()) !=
                           g.d * g.e * g.m)
                         err << "diagonal size mismatch; ";
                       if (err.str().empty()) return std::nullopt;
                       return err.str();
                     }});
  return cases;
}

std::vector<SweepCase> fixed_module_cases() {
  std::vector<SweepCase> cases;
  long idx = 0;
  for (const auto& g : crystal_grid())
    cases.push_back(
        {case_key(idx++, grid_label(g)),
         [g]() -> std::optional<std::string> {
           FCrystal c =
               build_beta(LocalFieldData::make(g.p, g.d, g.e), g.n, g.m);
           FixedModule fm = fixed_module_basis(c);
           std::ostringstream err;
           if (fm.rank != g.d * g.e)
             err << "rank " << fm.rank << " vs [E_p:Q_p] = " << g.d * g.e
                 << "; ";
           if (fm.achieved_precision != g.n)
             err << "precision " << fm.achieved_precision << " vs " << g.n
                 << "; ";
           if (fm.anchor != (g.d / 2 + 1) % g.d) err << "anchor misplaced; ";
           if (static_cast<int>(fm.vectors.size()) != g.d * g.e)
             err << "vector count mismatch; ";
           // re-walk the first vector: phi must send x_i to p * x_{i+1}
           if (!fm.vectors.empty()) {
             const auto& x = fm.vectors.front();
             const ComponentRing& ring = *c.ring;
             for (int i = 0; i < g.d; ++i) {
               ComponentRing::Elt lhs = phi_step(c, i, x[i]);
               ComponentRing::Elt rhs =
                   ring.mul_int(x[(i + 1) % g.d], c.lfd.p);
               if (!ring.equal(lhs, rhs)) {
                 err << "phi(x) != p x at component " << i << "; ";
                 break;
               }
             }
           }
           if (err.str().empty()) return std::nullopt;
           return err.str();
         }});
  return cases;
}

std::vector<SweepCase> newton_oracle_cases() {
  std::vector<SweepCase> cases;
  for (long i = 0; i < 200; ++i)
    cases.push_back({case_key(i, "seed=" + std::to_string(20260816 + i)),
                     [i]() -> std::optional<std::string> {
                       return newton_oracle_case(
                           static_cast<unsigned long>(20260816 + i));
                     }});
  return cases;
}

std::vector<SweepCase> tripwire_cases() {
  std::vector<SweepCase> cases;
  for (long i = 0; i < 1000; ++i)
    cases.push_back({case_key(i, "seed=" + std::to_string(977 * i + 11)),
                     [i]() -> std::optional<std::string> {
                       return tripwire_case(
                           static_cast<unsigned long>(977 * i + 11));
                     }});
  return cases;
}

}  // namespace

std::vector<std::string> sweep_names() {
  return {"compositum-place", "crystal-artin",     "fixed-module",
          "newton-oracle",    "singular-lattice",  "tripwire-fuzz"};
}

int resolve_workers(int requested) {
  if (requested > 0) return std::min(requested, 64);
  if (const char* env = std::getenv("K3CM_WORKERS")) {
    const int v = std::atoi(env);
    if (v > 0) return std::min(v, 64);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(std::min(hw, 16u)) : 4;
}

SweepResult run_cases(const std::string& name, std::vector<SweepCase> cases,
                      int workers) {
  const auto start = std::chrono::steady_clock::now();
  SweepResult res;
  res.name = name;
  res.cases = static_cast<long>(cases.size());

  std::vector<std::optional<std::string>> failures(cases.size());
  const int n = static_cast<int>(std::min<long>(
      resolve_workers(workers), static_cast<long>(cases.size())));
  std::atomic<size_t> next{0};
  auto worker = [&]() {
    for (;;) {
      const size_t i = next.fetch_add(1);
      if (i >= cases.size()) return;
      try {
        failures[i] = cases[i].run();
      } catch (const std::exception& e) {
        failures[i] = std::string("unexpected error: ") + e.what();
      }
    }
  };
  if (n <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  for (size_t i = 0; i < cases.size(); ++i)
    if (failures[i]) {
      ++res.failures;
      if (res.failure_samples.size() < 10)
        res.failure_samples.push_back(cases[i].key + ": " + *failures[i]);
    }
  res.seconds = std::chrono::duration<double>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return res;
}

SweepResult run_sweep(const std::string& name, int workers) {
  if (name == "singular-lattice")
    return run_cases(name, singular_lattice_cases(), workers);
  if (name == "compositum-place")
    return run_cases(name, compositum_place_cases(), workers);
  if (name == "crystal-artin")
    return run_cases(name, crystal_artin_cases(), workers);
  if (name == "fixed-module")
    return run_cases(name, fixed_module_cases(), workers);
  if (name == "newton-oracle")
    return run_cases(name, newton_oracle_cases(), workers);
  if (name == "tripwire-fuzz")
    return run_cases(name, tripwire_cases(), workers);
  throw invalid_input("unknown sweep '" + name + "'");
}

}  // namespace k3cm
