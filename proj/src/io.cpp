#include "k3cm/io.hpp"

#include <initializer_list>
#include <sstream>

namespace k3cm {

namespace {

std::string istr(const Int& v) { return v.get_str(); }

Json witt_elt_to_json(const WittRing::Elt& a) {
  Json out = Json::array();
  for (const auto& c : a) out.push_back(istr(c));
  return out;
}

Json component_elt_to_json(const ComponentRing::Elt& a) {
  Json out = Json::array();
  for (const auto& c : a) out.push_back(witt_elt_to_json(c));
  return out;
}

std::string multiplier_text(const SymbolicMultiplier& m) {
  if (m.p_power == 0 && m.pi_power == 0) return "1";
  std::string s;
  auto factor = [&](const std::string& base, int k) {
    if (k == 0) return;
    if (!s.empty()) s += "*";
    s += base;
    if (k != 1) s += "^" + std::to_string(k);
  };
  factor("p", m.p_power);
  factor("pi", m.pi_power);
  return s;
}

std::string artin_status_text(ArtinStatus s) {
  switch (s) {
    case ArtinStatus::determined: return "determined";
    case ArtinStatus::not_applicable: return "not_applicable";
    case ArtinStatus::undetermined: return "undetermined";
  }
  throw internal_error("unknown artin status");
}

std::string yesno(bool b) { return b ? "yes" : "no"; }

void kv(std::ostringstream& out, const std::string& key,
        const std::string& value) {
  out << "  " << key;
  for (size_t i = key.size(); i < 18; ++i) out << ' ';
  out << value << '\n';
}

void bullet_list(std::ostringstream& out, const std::string& header,
                 const std::vector<std::string>& items) {
  if (items.empty()) return;
  out << header << '\n';
  for (const auto& s : items) out << "  - " << s << '\n';
}

std::string place_text(const PlaceInvariants& v) {
  std::ostringstream out;
  out << (v.split_q_in_e ? "split" : "nonsplit") << ", e_p=" << v.e_p
      << " f_p=" << v.f_p << ", e_q=" << v.e_q << " f_q=" << v.f_q
      << ", places in E: " << v.places_in_e;
  return out.str();
}

// ---- strict parsing helpers ----

Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw invalid_input(std::string("invalid JSON: ") + e.what());
  }
}

void check_keys(const Json& j, const std::string& where,
                std::initializer_list<const char*> allowed) {
  if (!j.is_object())
    throw invalid_input(where + " must be a JSON object");
  for (auto it = j.begin(); it != j.end(); ++it) {
    bool known = false;
    for (const char* k : allowed)
      if (it.key() == k) {
        known = true;
        break;
      }
    if (!known)
      throw invalid_input("unknown key '" + it.key() + "' in " + where);
  }
}

const Json* find_key(const Json& j, const char* key) {
  auto it = j.find(key);
  return it == j.end() ? nullptr : &*it;
}

const Json& require_key(const Json& j, const char* key,
                        const std::string& where) {
  const Json* v = find_key(j, key);
  if (!v) throw invalid_input("missing key '" + std::string(key) + "' in " + where);
  return *v;
}

Int json_int(const Json& j, const std::string& where) {
  // dump() gives the exact decimal digits for any JSON integer width
  if (j.is_number_integer()) return int_from_string(j.dump());
  if (j.is_string()) return int_from_string(j.get<std::string>());
  throw invalid_input(where + " must be an integer or a decimal string");
}

Rat json_rat(const Json& j, const std::string& where) {
  if (j.is_number_integer()) return rat_from_string(j.dump());
  if (j.is_string()) return rat_from_string(j.get<std::string>());
  throw invalid_input(where +
                      " must be an integer or an exact rational string");
}

bool json_bool(const Json& j, const std::string& where) {
  if (!j.is_boolean()) throw invalid_input(where + " must be a boolean");
  return j.get<bool>();
}

CmFieldSpec parse_field(const Json& j) {
  if (!j.is_object()) throw invalid_input("field must be a JSON object");
  const Json& fam = require_key(j, "family", "field");
  if (!fam.is_string()) throw invalid_input("field.family must be a string");
  const std::string name = fam.get<std::string>();
  if (name == "imag_quadratic") {
    check_keys(j, "field", {"family", "d"});
    return CmFieldSpec::imag_quadratic(
        json_int(require_key(j, "d", "field"), "field.d"));
  }
  if (name == "biquadratic") {
    check_keys(j, "field", {"family", "d1", "d2"});
    return CmFieldSpec::biquadratic(
        json_int(require_key(j, "d1", "field"), "field.d1"),
        json_int(require_key(j, "d2", "field"), "field.d2"));
  }
  if (name == "cyclotomic") {
    check_keys(j, "field", {"family", "conductor"});
    Int n = json_int(require_key(j, "conductor", "field"), "field.conductor");
    if (n < 3 || n > 1000000)
      throw invalid_input("field.conductor out of range");
    return CmFieldSpec::cyclotomic(static_cast<unsigned>(n.get_ui()));
  }
  throw invalid_input("field.family must be imag_quadratic, biquadratic or cyclotomic");
}

GramMatrix parse_gram(const Json& j) {
  if (!j.is_array() || j.empty())
    throw invalid_input("gram must be a non-empty array of rows");
  std::vector<std::vector<Int>> rows;
  for (const auto& row : j) {
    if (!row.is_array()) throw invalid_input("gram rows must be arrays");
    std::vector<Int> r;
    for (const auto& x : row) r.push_back(json_int(x, "gram entry"));
    rows.push_back(std::move(r));
  }
  return GramMatrix::from_entries(std::move(rows));
}

RationalPoly parse_poly_json(const Json& j, const std::string& where) {
  if (!j.is_array() || j.empty())
    throw invalid_input(where + " must be a non-empty coefficient array");
  std::vector<std::string> coeffs;
  for (const auto& x : j) coeffs.push_back(rat_to_string(json_rat(x, where)));
  return RationalPoly::from_strings(coeffs);
}

FrobCharPoly parse_frob(const Json& j, const Int& default_p) {
  check_keys(j, "frobenius", {"poly", "q", "p", "weil_claimed"});
  FrobCharPoly f;
  f.poly = parse_poly_json(require_key(j, "poly", "frobenius"),
                           "frobenius.poly");
  f.p = find_key(j, "p") ? json_int(*find_key(j, "p"), "frobenius.p")
                         : default_p;
  f.q = find_key(j, "q") ? json_int(*find_key(j, "q"), "frobenius.q") : f.p;
  if (const Json* w = find_key(j, "weil_claimed"))
    f.weil_claimed = json_bool(*w, "frobenius.weil_claimed");
  return f;
}

}  // namespace

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

Json field_to_json(const CmFieldSpec& f) {
  Json j;
  switch (f.family) {
    case CmFamily::imag_quadratic:
      j["family"] = "imag_quadratic";
      j["d"] = istr(f.d1);
      break;
    case CmFamily::biquadratic:
      j["family"] = "biquadratic";
      j["d1"] = istr(f.d1);
      j["d2"] = istr(f.d2);
      break;
    case CmFamily::cyclotomic:
      j["family"] = "cyclotomic";
      j["conductor"] = f.conductor;
      break;
  }
  return j;
}

Json place_to_json(const PlaceInvariants& v) {
  Json j;
  j["split_q_in_e"] = v.split_q_in_e;
  j["e_p"] = v.e_p;
  j["f_p"] = v.f_p;
  j["e_q"] = v.e_q;
  j["f_q"] = v.f_q;
  j["places_in_e"] = v.places_in_e;
  j["local_degree"] = v.local_degree;
  j["kq_degree"] = v.kq_degree;
  return j;
}

Json polygon_to_json(const NewtonPolygon& poly) {
  Json j;
  j["p"] = istr(poly.prime);
  Json segs = Json::array();
  for (const auto& s : poly.segments) {
    Json seg;
    seg["slope"] = rat_to_string(s.slope);
    seg["length"] = s.length;
    segs.push_back(std::move(seg));
  }
  j["segments"] = std::move(segs);
  return j;
}

Json report_to_json(const ReductionReport& r) {
  Json j;
  j["field"] = field_to_json(r.field);
  j["p"] = istr(r.p);
  j["picard_complex"] = r.picard_complex;
  j["picard"] = r.picard;
  j["supersingular"] = r.supersingular;
  if (r.height_infinite)
    j["height"] = "inf";
  else
    j["height"] = r.height;
  j["artin_status"] = artin_status_text(r.artin_status);
  if (r.artin_status == ArtinStatus::determined)
    j["artin_invariant"] = r.artin_invariant;
  j["place"] = place_to_json(r.place);
  j["diagnostics"] = r.diagnostics;
  Json prov;
  for (const auto& [k, v] : r.provenance) prov[k] = v;
  j["provenance"] = std::move(prov);
  return j;
}

Json validation_to_json(const ValidationRecord& v) {
  Json j;
  j["all_passed"] = v.all_passed;
  Json checks = Json::array();
  for (const auto& c : v.checks) {
    Json cj;
    cj["name"] = c.name;
    cj["ran"] = c.ran;
    if (c.ran) cj["passed"] = c.passed;
    cj["detail"] = c.detail;
    checks.push_back(std::move(cj));
  }
  j["checks"] = std::move(checks);
  return j;
}

Json frob_report_to_json(const FrobReport& r) {
  Json j;
  j["degree"] = r.degree;
  j["picard"] = r.picard;
  j["supersingular"] = r.supersingular;
  if (r.height_infinite)
    j["height"] = "inf";
  else
    j["height"] = r.height;
  j["polygon"] = polygon_to_json(r.polygon);
  Json roots;
  for (const auto& [m, k] : r.unit_root_factors) roots[std::to_string(m)] = k;
  j["unit_root_factors"] = std::move(roots);
  j["artin_consistent"] = r.artin_consistent;
  j["diagnostics"] = r.diagnostics;
  return j;
}

Json crystal_to_json(const FCrystal& c, const FixedModule& fm,
                     const ArtinCokernelReport& artin) {
  Json j;
  j["p"] = istr(c.lfd.p);
  j["d"] = c.lfd.d;
  j["e"] = c.lfd.e;
  j["precision"] = c.w->precision();
  j["residue_degree"] = c.w->residue_degree();
  Json eis = Json::array();
  for (const auto& x : c.lfd.eisenstein) eis.push_back(istr(x));
  j["eisenstein"] = std::move(eis);
  j["dprime"] = c.dprime;
  Json exps = Json::array();
  for (const auto& m : c.beta_exp) {
    Json e;
    e["p"] = m.p_power;
    e["pi"] = m.pi_power;
    e["text"] = multiplier_text(m);
    exps.push_back(std::move(e));
  }
  j["beta_exponents"] = std::move(exps);
  Json beta = Json::array();
  for (const auto& b : c.beta) beta.push_back(component_elt_to_json(b));
  j["beta"] = std::move(beta);
  j["notes"] = c.notes;

  Json f;
  f["anchor"] = fm.anchor;
  f["rank"] = fm.rank;
  f["achieved_precision"] = fm.achieved_precision;
  Json vecs = Json::array();
  for (const auto& vec : fm.vectors) {
    Json comps = Json::array();
    for (const auto& comp : vec) comps.push_back(component_elt_to_json(comp));
    vecs.push_back(std::move(comps));
  }
  f["vectors"] = std::move(vecs);
  j["fixed_module"] = std::move(f);

  Json a;
  a["artin_invariant"] = artin.artin_invariant;
  a["snf_diagonal_valuations"] = artin.snf_diag_val;
  a["total_zp_length"] = artin.total_zp_length;
  j["artin"] = std::move(a);
  return j;
}

Json finding_to_json(const TensorOrderFinding& f) {
  Json j;
  j["p"] = istr(f.p);
  j["d1"] = istr(f.d1);
  j["d2"] = istr(f.d2);
  j["index"] = istr(f.index);
  j["order_maximal_at_p"] = f.order_maximal_at_p;
  j["disc_coprime_to_p"] = f.disc_coprime_to_p;
  j["split"] = f.split;
  j["would_give"] = f.would_give;
  if (f.has_recorded_actual) j["recorded_actual"] = f.recorded_actual;
  j["counterexample"] = f.counterexample;
  j["assumption_failed"] = f.assumption_failed;
  j["place"] = place_to_json(f.place);
  j["notes"] = f.notes;
  return j;
}

std::string render_table(const ReductionReport& r) {
  std::ostringstream out;
  out << "reduction report\n";
  kv(out, "field", r.field.describe());
  kv(out, "p", istr(r.p));
  kv(out, "place", place_text(r.place));
  kv(out, "picard (complex)", std::to_string(r.picard_complex));
  kv(out, "picard", std::to_string(r.picard));
  kv(out, "height", r.height_infinite ? "inf" : std::to_string(r.height));
  kv(out, "supersingular", yesno(r.supersingular));
  if (r.artin_status == ArtinStatus::determined)
    kv(out, "artin invariant", std::to_string(r.artin_invariant));
  else
    kv(out, "artin invariant", artin_status_text(r.artin_status));
  bullet_list(out, "diagnostics", r.diagnostics);
  if (!r.provenance.empty()) {
    out << "provenance\n";
    for (const auto& [k, v] : r.provenance) out << "  " << k << ": " << v << '\n';
  }
  return out.str();
}

std::string render_table(const ValidationRecord& v) {
  std::ostringstream out;
  out << "cross-validation: " << (v.all_passed ? "pass" : "FAIL") << '\n';
  for (const auto& c : v.checks) {
    const char* tag = !c.ran ? "skip" : (c.passed ? "pass" : "FAIL");
    out << "  [" << tag << "] " << c.name;
    for (size_t i = c.name.size(); i < 22; ++i) out << ' ';
    out << c.detail << '\n';
  }
  return out.str();
}

std::string render_table(const FrobReport& r) {
  std::ostringstream out;
  out << "frobenius analysis\n";
  kv(out, "degree", std::to_string(r.degree));
  kv(out, "picard", std::to_string(r.picard));
  kv(out, "height", r.height_infinite ? "inf" : std::to_string(r.height));
  kv(out, "supersingular", yesno(r.supersingular));
  std::ostringstream seg;
  for (size_t i = 0; i < r.polygon.segments.size(); ++i) {
    if (i) seg << ", ";
    seg << "slope " << rat_to_string(r.polygon.segments[i].slope) << " x"
        << r.polygon.segments[i].length;
  }
  kv(out, "polygon", r.polygon.segments.empty() ? "(empty)" : seg.str());
  std::ostringstream roots;
  bool first = true;
  for (const auto& [m, k] : r.unit_root_factors) {
    if (!first) roots << ", ";
    first = false;
    roots << "Phi_" << m;
    if (k > 1) roots << "^" << k;
  }
  kv(out, "unit roots", first ? "(none)" : roots.str());
  kv(out, "artin bound", r.artin_consistent ? "consistent" : "VIOLATED");
  bullet_list(out, "diagnostics", r.diagnostics);
  return out.str();
}

std::string render_table(const TensorOrderFinding& f) {
  std::ostringstream out;
  out << "tensor-order finding at p=" << istr(f.p) << '\n';
  kv(out, "discriminants", istr(f.d1) + ", " + istr(f.d2));
  kv(out, "order index", istr(f.index));
  kv(out, "order maximal", yesno(f.order_maximal_at_p));
  kv(out, "disc coprime", yesno(f.disc_coprime_to_p));
  kv(out, "place", place_text(f.place));
  if (!f.split) kv(out, "formula value", std::to_string(f.would_give));
  if (f.has_recorded_actual)
    kv(out, "recorded actual", std::to_string(f.recorded_actual));
  kv(out, "counterexample", yesno(f.counterexample));
  kv(out, "failed", f.assumption_failed.empty() ? "(none)" : f.assumption_failed);
  bullet_list(out, "notes", f.notes);
  return out.str();
}

std::string render_crystal_table(const FCrystal& c, const FixedModule& fm,
                                 const ArtinCokernelReport& artin) {
  std::ostringstream out;
  out << "crystal\n";
  kv(out, "p", istr(c.lfd.p));
  kv(out, "d", std::to_string(c.lfd.d));
  kv(out, "e", std::to_string(c.lfd.e));
  kv(out, "precision", "p^" + std::to_string(c.w->precision()));
  kv(out, "residue degree", std::to_string(c.w->residue_degree()));
  std::ostringstream eis;
  for (size_t i = 0; i < c.lfd.eisenstein.size(); ++i) {
    if (i) eis << ", ";
    eis << istr(c.lfd.eisenstein[i]);
  }
  kv(out, "eisenstein", eis.str());
  std::ostringstream mult;
  for (size_t i = 0; i < c.beta_exp.size(); ++i) {
    if (i) mult << "; ";
    mult << "i=" << i << ": " << multiplier_text(c.beta_exp[i]);
  }
  kv(out, "multipliers", mult.str());
  kv(out, "fixed module",
     "rank " + std::to_string(fm.rank) + ", anchor " +
         std::to_string(fm.anchor) + ", precision p^" +
         std::to_string(fm.achieved_precision));
  std::ostringstream snf;
  for (size_t i = 0; i < artin.snf_diag_val.size();) {
    size_t j = i;
    while (j < artin.snf_diag_val.size() &&
           artin.snf_diag_val[j] == artin.snf_diag_val[i])
      ++j;
    if (i) snf << ", ";
    snf << artin.snf_diag_val[i] << " x" << (j - i);
    i = j;
  }
  kv(out, "snf valuations", snf.str());
  kv(out, "artin invariant", std::to_string(artin.artin_invariant));
  bullet_list(out, "notes", c.notes);
  return out.str();
}

K3CmInput parse_input_document(const std::string& text) {
  Json j = parse_text(text);
  check_keys(j, "input",
             {"field", "p", "disc_pic_coprime_to_p", "order_maximal_at_p",
              "gram", "kummer_compositum", "frobenius"});
  K3CmInput in;
  in.field = parse_field(require_key(j, "field", "input"));
  in.p = json_int(require_key(j, "p", "input"), "p");
  if (const Json* v = find_key(j, "disc_pic_coprime_to_p"))
    in.disc_pic_coprime_to_p = json_bool(*v, "disc_pic_coprime_to_p");
  if (const Json* v = find_key(j, "order_maximal_at_p"))
    in.order_maximal_at_p = json_bool(*v, "order_maximal_at_p");
  if (const Json* v = find_key(j, "gram")) in.gram = parse_gram(*v);
  if (const Json* v = find_key(j, "kummer_compositum"))
    in.kummer_compositum = json_bool(*v, "kummer_compositum");
  if (const Json* v = find_key(j, "frobenius"))
    in.frobenius = parse_frob(*v, in.p);
  return in;
}

FrobCharPoly parse_frob_document(const std::string& text) {
  Json j = parse_text(text);
  check_keys(j, "frobenius", {"poly", "q", "p", "weil_claimed"});
  const Json& pj = require_key(j, "p", "frobenius");
  return parse_frob(j, json_int(pj, "frobenius.p"));
}

RationalPoly parse_poly_text(const std::string& text) {
  std::vector<std::string> coeffs;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    const auto a = item.find_first_not_of(" \t");
    if (a == std::string::npos)
      throw invalid_input("empty coefficient in polynomial list");
    const auto b = item.find_last_not_of(" \t");
    coeffs.push_back(item.substr(a, b - a + 1));
  }
  if (coeffs.empty()) throw invalid_input("empty polynomial");
  return RationalPoly::from_strings(coeffs);
}

std::vector<Int> parse_int_list(const std::string& text) {
  std::vector<Int> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) {
    const auto a = item.find_first_not_of(" \t");
    if (a == std::string::npos)
      throw invalid_input("empty entry in integer list");
    const auto b = item.find_last_not_of(" \t");
    out.push_back(int_from_string(item.substr(a, b - a + 1)));
  }
  if (out.empty()) throw invalid_input("empty integer list");
  return out;
}

}  // namespace k3cm
