#include "k3cm/predict.hpp"

#include <sstream>

#include "k3cm/crystal.hpp"

namespace k3cm {

namespace {

std::string flag_state(const std::optional<bool>& v, bool derived) {
  if (!v) return "unknown (not supplied)";
  std::string s = *v ? "true" : "false";
  return s + (derived ? " (derived)" : " (asserted, unverified)");
}

// merge a derived assumption value into a possibly supplied one; the derived
// value wins, conflicts are surfaced
void merge_flag(std::optional<bool>& flag, bool derived_value,
                const std::string& name, const std::string& source,
                std::vector<std::string>& diagnostics) {
  if (flag && *flag != derived_value) {
    std::ostringstream os;
    os << "supplied " << name << "=" << (*flag ? "true" : "false")
       << " conflicts with the value derived from " << source << "; using "
       << (derived_value ? "true" : "false");
    diagnostics.push_back(os.str());
  }
  flag = derived_value;
}

}  // namespace

ReductionReport predict_reduction(const K3CmInput& input) {
  if (!is_prime(input.p)) throw invalid_input("reduction prime must be prime");
  CmFieldSpec field = input.field;
  if (field.degree() > 20)
    throw invalid_input("[E:Q] exceeds 20, leaving no room in the K3 lattice");

  ReductionReport rep;
  rep.p = input.p;
  rep.diagnostics.push_back(
      "good reduction at p is an assumption of the model, not verified");

  std::optional<bool> disc_ok = input.disc_pic_coprime_to_p;
  std::optional<bool> order_ok = input.order_maximal_at_p;
  bool disc_derived = false, order_derived = false;

  if (input.gram) {
    const GramMatrix& g = *input.gram;
    if (g.rank() != 2 || !g.is_even() || !g.is_positive_definite())
      throw invalid_input(
          "transcendental gram matrix must be rank-2 even positive definite");
    const Int disc_pic = -g.det();
    const Int fund = fundamental_discriminant(disc_pic);
    CmFieldSpec gram_field = CmFieldSpec::imag_quadratic(fund);
    if (!(field == gram_field)) {
      rep.diagnostics.push_back("supplied field " + field.describe() +
                                " conflicts with the gram-derived field " +
                                gram_field.describe() +
                                "; using the derived field");
      field = gram_field;
    }
    merge_flag(disc_ok, val_p(disc_pic, input.p) == 0,
               "disc_pic_coprime_to_p", "the gram determinant",
               rep.diagnostics);
    disc_derived = true;
    // disc_pic = f^2 * fund; the order is maximal at p iff p does not divide
    // the conductor f
    const Int fsq = disc_pic / fund;
    merge_flag(order_ok, val_p(fsq, input.p) == 0, "order_maximal_at_p",
               "the order conductor", rep.diagnostics);
    order_derived = true;
  }

  if (input.kummer_compositum) {
    if (field.family == CmFamily::biquadratic) {
      OrderIndexReport idx =
          biquadratic_order_index_at_p(field.d1, field.d2, input.p);
      merge_flag(order_ok, !idx.p_divides, "order_maximal_at_p",
                 "the tensor-order index", rep.diagnostics);
      order_derived = true;
      // T(Km) is the doubled unimodular rank-4 tensor lattice, so only p = 2
      // can divide its discriminant
      merge_flag(disc_ok, input.p != 2, "disc_pic_coprime_to_p",
                 "the doubled tensor-lattice discriminant", rep.diagnostics);
      disc_derived = true;
    } else if (field.family == CmFamily::imag_quadratic) {
      // self-product: the tensor square of O_E surjects onto O_E
      merge_flag(order_ok, true, "order_maximal_at_p",
                 "the self-product tensor order", rep.diagnostics);
      order_derived = true;
    } else {
      throw invalid_input(
          "kummer compositum inputs have quadratic or biquadratic CM fields");
    }
  }

  rep.field = field;
  rep.place = analyze_place(field, input.p);
  rep.picard_complex = 22 - field.degree();

  rep.diagnostics.push_back("assumption disc(Pic) coprime to p: " +
                            flag_state(disc_ok, disc_derived));
  rep.diagnostics.push_back("assumption endomorphism order maximal at p: " +
                            flag_state(order_ok, order_derived));

  const bool disc_holds = disc_ok && *disc_ok;
  const bool order_holds = order_ok && *order_ok;
  if (!check_unramified_consistency(rep.place, disc_holds, order_holds)) {
    std::ostringstream os;
    os << "inconsistent input: both reduction assumptions are asserted, but "
          "they force the place of E to be unramified over the real subfield, "
          "while e_p = "
       << rep.place.e_p << " > e_q = " << rep.place.e_q;
    throw inconsistency(os.str());
  }

  if (rep.place.split_q_in_e) {
    rep.picard = rep.picard_complex;
    rep.height = rep.place.local_degree;
    rep.height_infinite = false;
    rep.supersingular = false;
    rep.artin_status = ArtinStatus::not_applicable;
    rep.provenance.emplace_back(
        "picard", "split place: complex Picard number persists (22 - [E:Q])");
    rep.provenance.emplace_back(
        "height", "split place: height is the local degree [E_p:Q_p]");
    rep.provenance.emplace_back("artin_invariant",
                                "not applicable: reduction is not "
                                "supersingular");
    return rep;
  }

  rep.picard = 22;
  rep.height_infinite = true;
  rep.supersingular = true;
  rep.provenance.emplace_back("picard", "nonsplit place: full Picard rank 22");
  rep.provenance.emplace_back(
      "height", "nonsplit place: the formal Brauer group has infinite height");
  if (disc_holds && order_holds) {
    rep.artin_status = ArtinStatus::determined;
    rep.artin_invariant = rep.place.kq_degree;
    rep.provenance.emplace_back(
        "artin_invariant",
        "verified assumptions: Artin invariant equals [k(q):F_p]");
  } else {
    rep.artin_status = ArtinStatus::undetermined;
    rep.provenance.emplace_back(
        "artin_invariant",
        "undetermined: a reduction assumption is unverified or fails");
    std::string why;
    if (!disc_ok)
      why = "disc(Pic) coprimality is unverified";
    else if (!*disc_ok)
      why = "p divides disc(Pic)";
    if (!order_ok)
      why += std::string(why.empty() ? "" : "; ") +
             "order maximality is unverified";
    else if (!*order_ok)
      why += std::string(why.empty() ? "" : "; ") +
             "the endomorphism order is not maximal at p";
    rep.diagnostics.push_back("Artin invariant undetermined: " + why);
  }
  return rep;
}

ReductionReport predict_singular(const GramMatrix& gram, const Int& p) {
  SingularNormalForm nf = singular_normal_form(gram, p);
  const bool nonsplit = nonsplit_criterion(nf);

  ReductionReport rep;
  rep.p = p;
  rep.field = CmFieldSpec::imag_quadratic(fundamental_discriminant(nf.disc_pic));
  rep.picard_complex = 20;
  rep.diagnostics.push_back(
      "good reduction at p is an assumption of the model, not verified");
  rep.diagnostics.push_back(
      "assumption disc(Pic) coprime to p: true (derived, p does not divide "
      "disc_pic)");
  rep.diagnostics.push_back(
      "assumption endomorphism order maximal at p: true (derived, the order "
      "discriminant equals disc_pic)");

  // fill the place data from the lattice criterion itself; with p coprime to
  // disc_pic a nonsplit prime is inert, never ramified
  PlaceInvariants& pl = rep.place;
  pl.split_q_in_e = !nonsplit;
  pl.e_q = pl.f_q = pl.kq_degree = 1;
  pl.e_p = 1;
  pl.f_p = nonsplit ? 2 : 1;
  pl.d = pl.f_p;
  pl.e = 1;
  pl.local_degree = pl.f_p;
  pl.places_in_e = nonsplit ? 1 : 2;

  if (nonsplit) {
    rep.picard = 22;
    rep.height_infinite = true;
    rep.supersingular = true;
    rep.artin_status = ArtinStatus::determined;
    rep.artin_invariant = 1;
    rep.provenance.emplace_back(
        "picard", "singular route: nonsplit prime gives full Picard rank 22");
    rep.provenance.emplace_back(
        "height", "singular route: nonsplit prime, infinite height");
    rep.provenance.emplace_back(
        "artin_invariant",
        "singular route: supersingular reduction of a singular K3 has Artin "
        "invariant 1");
  } else {
    rep.picard = 20;
    rep.height = 1;
    rep.height_infinite = false;
    rep.supersingular = false;
    rep.artin_status = ArtinStatus::not_applicable;
    rep.provenance.emplace_back(
        "picard", "singular route: split prime keeps Picard number 20");
    rep.provenance.emplace_back(
        "height", "singular route: split prime, height 1");
    rep.provenance.emplace_back(
        "artin_invariant", "not applicable: reduction is not supersingular");
  }
  return rep;
}

ValidationRecord cross_validate(const ReductionReport& report,
                                const K3CmInput& input) {
  ValidationRecord rec;

  ValidationCheck frob;
  frob.name = "frobenius";
  if (input.frobenius) {
    frob.ran = true;
    FrobReport fr = analyze(*input.frobenius);
    std::ostringstream os;
    bool ok = true;
    if (fr.picard != report.picard) {
      ok = false;
      os << "picard " << report.picard << " (formula) vs " << fr.picard
         << " (frobenius); ";
    }
    if (fr.supersingular != report.supersingular) {
      ok = false;
      os << "supersingular " << (report.supersingular ? "yes" : "no")
         << " (formula) vs " << (fr.supersingular ? "yes" : "no")
         << " (frobenius); ";
    }
    if (fr.height_infinite != report.height_infinite) {
      ok = false;
      os << "height finiteness disagrees; ";
    } else if (!fr.height_infinite && fr.height != report.height) {
      ok = false;
      os << "height " << report.height << " (formula) vs " << fr.height
         << " (frobenius); ";
    }
    frob.passed = ok;
    frob.detail = ok ? "picard/height/supersingularity agree" : os.str();
  } else {
    frob.detail = "no characteristic polynomial supplied";
  }
  rec.checks.push_back(std::move(frob));

  ValidationCheck crys;
  crys.name = "crystal-cokernel";
  if (!report.supersingular) {
    crys.detail = "not supersingular; crystal route not applicable";
  } else if (report.artin_status != ArtinStatus::determined) {
    crys.detail =
        "reduction assumptions unverified or failing; crystal route skipped";
  } else {
    crys.ran = true;
    LocalFieldData lfd = LocalFieldData::make(
        report.p, 2 * report.place.kq_degree, report.place.e_p);
    ArtinCokernelReport ar = artin_invariant_via_cokernel(build_beta(lfd, 8));
    crys.passed = ar.artin_invariant == report.artin_invariant;
    std::ostringstream os;
    os << "artin " << report.artin_invariant << " (formula) vs "
       << ar.artin_invariant << " (crystal cokernel)";
    crys.detail = os.str();
  }
  rec.checks.push_back(std::move(crys));

  for (const auto& c : rec.checks)
    if (c.ran && !c.passed) rec.all_passed = false;
  return rec;
}

}  // namespace k3cm
