#pragma once

/* The explicit F-crystal attached to a CM place: the product decomposition
   O_{E_p} (x) W = prod W_i over the d unramified embeddings, the component
   multipliers beta (p*pi at index 1, the integral rewrite of p/pi at index d',
   p elsewhere), their symbolic Breuil-Kisin shape with the mod-u
   specialization, the phi = p fixed module, and the Artin invariant as the
   W-length of the cokernel of multiplication by the half-support element pi.

   W(F_p-bar) is approximated by W(F_{p^m})/p^N with d | m; every matrix entry
   of interest lives in the degree-d unramified subring, and cokernel lengths
   are insensitive to further unramified base change, so finite m suffices.
   Ramified components are free rank-e modules over the Witt approximation
   multiplying through a fixed Eisenstein relation; no fraction fields. */

#include <map>
#include <memory>
#include <string>
#include <vector>

#include "k3cm/poly.hpp"
#include "k3cm/witt.hpp"

namespace k3cm {

struct LocalFieldData {
  Int p;
  int d = 0;                    // inertia degree of the place over Q_p
  int e = 1;                    // ramification index
  std::vector<Int> eisenstein;  // monic degree-e, constant first

  // default uniformizer relation T^e - p
  static LocalFieldData make(const Int& p, int d, int e);
  // custom Eisenstein relation: monic degree e, v_p(c_0) = 1, v_p(c_i) >= 1
  static LocalFieldData make(const Int& p, int d, int e, std::vector<Int> eis);
  static LocalFieldData make(const Int& p, int d, int e,
                             const RationalPoly& eis);
};

/* one component W_i: a free rank-e module over the Witt approximation with
   multiplication through the Eisenstein relation pi^e = -(c_{e-1}pi^{e-1} +
   ... + c_0); all d components share this context */
class ComponentRing {
 public:
  // an element is the coefficient list of pi^0..pi^{e-1}
  using Elt = std::vector<WittRing::Elt>;

  ComponentRing(std::shared_ptr<const WittRing> w, std::vector<Int> eis);

  const WittRing& witt() const { return *w_; }
  int ram_degree() const { return e_; }

  Elt zero() const;
  Elt one() const;
  Elt from_int(const Int& a) const;
  Elt from_witt(const WittRing::Elt& a) const;
  Elt pi() const;

  Elt add(const Elt& a, const Elt& b) const;
  Elt sub(const Elt& a, const Elt& b) const;
  Elt mul(const Elt& a, const Elt& b) const;
  Elt mul_int(const Elt& a, const Int& c) const;
  Elt mul_pi(const Elt& a) const;
  bool equal(const Elt& a, const Elt& b) const;
  bool is_zero(const Elt& a) const;

  // coefficientwise Witt Frobenius; fixes pi (the O_E-action is equivariant)
  Elt frobenius(const Elt& a) const;

  // the integral representative of p/pi: B with B*pi = p exactly mod p^N
  Elt p_over_pi() const;

  // e*m residue coordinates, pi-power major
  std::vector<Int> flatten(const Elt& a) const;

 private:
  std::shared_ptr<const WittRing> w_;
  int e_;
  std::vector<Int> eis_;
};

// exponent shape of one multiplier: p^{p_power} * pi^{pi_power}
struct SymbolicMultiplier {
  int p_power = 0;
  int pi_power = 0;
  bool operator==(const SymbolicMultiplier& o) const {
    return p_power == o.p_power && pi_power == o.pi_power;
  }
};

struct FCrystal {
  LocalFieldData lfd;
  std::shared_ptr<const WittRing> w;
  std::shared_ptr<const ComponentRing> ring;
  int dprime = 0;  // index carrying p/pi: d/2+1, or 0 when d = 2
  std::vector<ComponentRing::Elt> beta;
  std::vector<SymbolicMultiplier> beta_exp;
  std::vector<std::string> notes;
};

// the crystal multipliers; residue_degree 0 selects the default m = d
FCrystal build_beta(const LocalFieldData& lfd, int precision = 16,
                    int residue_degree = 0);

// Frobenius step out of component `from`: beta_{from+1} * phi_W(x)
ComponentRing::Elt phi_step(const FCrystal& c, int from,
                            const ComponentRing::Elt& x);

/* symbolic multiplier of one Breuil-Kisin component: unit tokens are opaque
   series normalized to constant term 1; the only supported operation is
   evaluation at u = 0, which sends every token to 1 */
struct BkComponent {
  int p_power = 0;
  int pi_power = 0;
  std::map<std::string, int> unit_tokens;
};

struct BkSymbolic {
  int d = 0;
  std::vector<BkComponent> components;
};

BkSymbolic bk_symbolic(const LocalFieldData& lfd);

// evaluate at u = 0 and pull back along Frobenius (index shift by +1 mod d);
// must reproduce build_beta's exponent shape exactly, d' = 0 case included
std::vector<SymbolicMultiplier> specialize_mod_u(const BkSymbolic& bk);

struct FixedModule {
  int anchor = 0;  // component whose projection carries the integral basis
  // d*e vectors, each listing its d component values
  std::vector<std::vector<ComponentRing::Elt>> vectors;
  int achieved_precision = 0;  // the recursion is division-free, so = N
  int rank = 0;                // rank of the span over Z/p^{N-1}
};

// solutions of phi(x) = p x: anchor the phi^d-fixed basis at component
// d/2+1 and propagate the recursion forward (multiplying by pi into index 1),
// closing with phi(x_{d/2}) = pi * x_anchor instead of ever dividing by pi
FixedModule fixed_module_basis(const FCrystal& c);

struct ArtinCokernelReport {
  int artin_invariant = 0;        // W-length of coker(mult by pi)
  std::vector<int> snf_diag_val;  // ascending, all d*e*m diagonal entries
  int total_zp_length = 0;        // sum of the diagonal valuations
};

// multiplication by the element with components (1, pi, ..., pi, 1, ..., 1)
// (pi on 1..d/2) is block diagonal; the W-length of its cokernel is the
// Artin invariant of the supersingular reduction
ArtinCokernelReport artin_invariant_via_cokernel(const FCrystal& c);

}  // namespace k3cm
