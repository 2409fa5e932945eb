#include "zetalab/document.hpp"

#include <limits>
#include <set>

#include "zetalab/errors.hpp"

namespace zetalab {

std::string dump(const Json& doc) { return doc.dump(2) + "\n"; }

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    // Report the line of the offending byte.
    std::size_t line = 1;
    for (std::size_t i = 0; i < e.byte && i < text.size(); ++i)
      if (text[i] == '\n') ++line;
    throw ValidationError("malformed document at line " + std::to_string(line) + ": " + e.what());
  }
}

Json to_json(const BigRational& r) { return r.str(); }

Json to_json(const UniPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(c.str());
  return out;
}

Json to_json(const RationalFunction& r) { return {{"num", to_json(r.numerator())}, {"den", to_json(r.denominator())}}; }

Json to_json(const CyclotomicDivisor& z) {
  Json out = Json::array();
  for (const auto& [N, e] : z.factors()) out.push_back({N, e});
  return out;
}

namespace {

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw ValidationError("field " + field + ": " + what);
}

void only_keys(const Json& obj, const std::string& field, std::initializer_list<const char*> allowed) {
  if (!obj.is_object()) fail(field, "expected an object");
  for (const auto& [k, v] : obj.items()) {
    (void)v;
    bool ok = false;
    for (const char* a : allowed) ok = ok || k == a;
    if (!ok) fail(field, "unknown key \"" + k + "\"");
  }
}

const Json& member(const Json& obj, const std::string& field, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) fail(field, std::string("missing key \"") + key + "\"");
  return *it;
}

std::int64_t as_int(const Json& v, const std::string& field) {
  if (!v.is_number_integer()) fail(field, "expected an integer");
  if (v.is_number_unsigned() && v.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max()))
    fail(field, "integer out of range");
  return v.get<std::int64_t>();
}

std::string as_string(const Json& v, const std::string& field) {
  if (!v.is_string()) fail(field, "expected a string");
  return v.get<std::string>();
}

const Json& as_array(const Json& v, const std::string& field) {
  if (!v.is_array()) fail(field, "expected a list");
  return v;
}

std::vector<std::string> id_list(const Json& v, const std::string& field) {
  std::vector<std::string> out;
  std::size_t k = 0;
  for (const auto& x : as_array(v, field)) out.push_back(as_string(x, field + "[" + std::to_string(k++) + "]"));
  return out;
}

std::vector<std::int64_t> int_list(const Json& v, const std::string& field) {
  std::vector<std::int64_t> out;
  std::size_t k = 0;
  for (const auto& x : as_array(v, field)) out.push_back(as_int(x, field + "[" + std::to_string(k++) + "]"));
  return out;
}

std::string at(const std::string& field, std::size_t k) { return field + "[" + std::to_string(k) + "]"; }

Json branches_json(const std::vector<Branch>& branches) {
  Json out = Json::array();
  for (const auto& b : branches) out.push_back({{"host", b.host ? Json(*b.host) : Json(nullptr)}, {"mult", b.mult}});
  return out;
}

std::vector<Branch> branches_from(const Json& v, const std::string& field) {
  std::vector<Branch> out;
  std::size_t k = 0;
  for (const auto& b : as_array(v, field)) {
    const auto f = at(field, k++);
    only_keys(b, f, {"host", "mult"});
    Branch br;
    if (const auto& h = member(b, f, "host"); !h.is_null()) br.host = as_string(h, f + ".host");
    br.mult = as_int(member(b, f, "mult"), f + ".mult");
    out.push_back(std::move(br));
  }
  return out;
}

}  // namespace

Json to_json(const ResolutionData& rd) {
  Json doc;
  doc["ambient_dim"] = rd.ambient_dim;
  Json comps = Json::array();
  for (const auto& c : rd.components)
    comps.push_back({{"id", c.id}, {"kind", std::string(to_string(c.kind))}, {"N", c.N}, {"nu", c.nu}});
  doc["components"] = comps;
  Json strata = Json::array();
  for (const auto& s : rd.strata) {
    Json j{{"components", s.components}, {"chi_local", s.chi_local}};
    if (s.chi_global) j["chi_global"] = *s.chi_global;
    strata.push_back(j);
  }
  doc["strata"] = strata;
  if (rd.curvette_matrix) doc["curvette_matrix"] = rd.curvette_matrix->to_rows();
  if (!rd.branches.empty()) doc["branches"] = branches_json(rd.branches);
  if (!rd.hypersurfaces.empty()) {
    Json hs = Json::array();
    for (const auto& h : rd.hypersurfaces) {
      Json secs = Json::array();
      for (const auto& sec : h.sections) secs.push_back({{"components", sec.components}, {"chi", sec.chi}});
      hs.push_back({{"host", h.host}, {"sections", secs}});
    }
    doc["hypersurfaces"] = hs;
  }
  return doc;
}

ResolutionData resdata_from_json(const Json& doc) {
  only_keys(doc, "document", {"ambient_dim", "components", "strata", "curvette_matrix", "branches", "hypersurfaces"});
  ResolutionData rd;
  const auto dim = as_int(member(doc, "document", "ambient_dim"), "ambient_dim");
  if (dim < 1 || dim > 64) fail("ambient_dim", "expected a positive dimension");
  rd.ambient_dim = static_cast<int>(dim);

  std::set<std::string> ids;
  const auto& comps = as_array(member(doc, "document", "components"), "components");
  for (std::size_t k = 0; k < comps.size(); ++k) {
    const auto f = at("components", k);
    only_keys(comps[k], f, {"id", "kind", "N", "nu"});
    Component c;
    c.id = as_string(member(comps[k], f, "id"), f + ".id");
    try {
      c.kind = component_kind_from(as_string(member(comps[k], f, "kind"), f + ".kind"));
    } catch (const ValidationError& e) {
      fail(f + ".kind", e.what());
    }
    c.N = as_int(member(comps[k], f, "N"), f + ".N");
    c.nu = as_int(member(comps[k], f, "nu"), f + ".nu");
    ids.insert(c.id);
    rd.components.push_back(std::move(c));
  }
  auto known = [&](const std::vector<std::string>& list, const std::string& f) {
    for (const auto& id : list)
      if (!ids.count(id)) fail(f, "unknown component \"" + id + "\"");
  };

  const auto& strata = as_array(member(doc, "document", "strata"), "strata");
  for (std::size_t k = 0; k < strata.size(); ++k) {
    const auto f = at("strata", k);
    only_keys(strata[k], f, {"components", "chi_local", "chi_global"});
    Stratum s;
    s.components = id_list(member(strata[k], f, "components"), f + ".components");
    known(s.components, f + ".components");
    s.chi_local = as_int(member(strata[k], f, "chi_local"), f + ".chi_local");
    if (auto it = strata[k].find("chi_global"); it != strata[k].end() && !it->is_null())
      s.chi_global = as_int(*it, f + ".chi_global");
    rd.strata.push_back(std::move(s));
  }

  if (auto it = doc.find("curvette_matrix"); it != doc.end()) {
    std::vector<std::vector<std::int64_t>> rows;
    for (std::size_t k = 0; k < as_array(*it, "curvette_matrix").size(); ++k)
      rows.push_back(int_list((*it)[k], at("curvette_matrix", k)));
    for (const auto& r : rows)
      if (r.size() != rows.size()) fail("curvette_matrix", "expected a square matrix");
    rd.curvette_matrix = rows.empty() ? IntMatrix() : IntMatrix::from_rows(rows);
  }
  if (auto it = doc.find("branches"); it != doc.end()) {
    rd.branches = branches_from(*it, "branches");
    for (std::size_t k = 0; k < rd.branches.size(); ++k)
      if (rd.branches[k].host) known({*rd.branches[k].host}, at("branches", k) + ".host");
  }
  if (auto it = doc.find("hypersurfaces"); it != doc.end()) {
    const auto& hs = as_array(*it, "hypersurfaces");
    for (std::size_t k = 0; k < hs.size(); ++k) {
      const auto f = at("hypersurfaces", k);
      only_keys(hs[k], f, {"host", "sections"});
      Hypersurface h;
      h.host = as_string(member(hs[k], f, "host"), f + ".host");
      known({h.host}, f + ".host");
      const auto& secs = as_array(member(hs[k], f, "sections"), f + ".sections");
      for (std::size_t q = 0; q < secs.size(); ++q) {
        const auto g = at(f + ".sections", q);
        only_keys(secs[q], g, {"components", "chi"});
        HypersurfaceSection sec;
        sec.components = id_list(member(secs[q], g, "components"), g + ".components");
        known(sec.components, g + ".components");
        sec.chi = int_list(member(secs[q], g, "chi"), g + ".chi");
        h.sections.push_back(std::move(sec));
      }
      rd.hypersurfaces.push_back(std::move(h));
    }
  }
  return rd;
}

Json to_json(const FormSpec& w) {
  Json terms = Json::array();
  for (const auto& t : w.terms) terms.push_back({{"host", t.host}, {"m", t.m}, {"copies", t.copies}});
  return {{"terms", terms}};
}

FormSpec form_from_json(const Json& doc) {
  only_keys(doc, "document", {"terms"});
  FormSpec w;
  const auto& terms = as_array(member(doc, "document", "terms"), "terms");
  for (std::size_t k = 0; k < terms.size(); ++k) {
    const auto f = at("terms", k);
    only_keys(terms[k], f, {"host", "m", "copies"});
    FormTerm t;
    t.host = as_string(member(terms[k], f, "host"), f + ".host");
    t.m = as_int(member(terms[k], f, "m"), f + ".m");
    if (auto it = terms[k].find("copies"); it != terms[k].end()) t.copies = as_int(*it, f + ".copies");
    if (t.m < 0) fail(f + ".m", "expected a nonnegative exponent");
    if (t.copies < 1) fail(f + ".copies", "expected a positive count");
    w.terms.push_back(std::move(t));
  }
  return w;
}

Json to_json(const BlowupProgram& p) {
  Json centers = Json::array();
  for (const auto& c : p.centers) centers.push_back({{"J", c.J}, {"m", c.m}});
  return {{"centers", centers}, {"branches", branches_json(p.branches)}};
}

BlowupProgram program_from_json(const Json& doc) {
  only_keys(doc, "document", {"centers", "branches"});
  BlowupProgram p;
  const auto& centers = as_array(member(doc, "document", "centers"), "centers");
  for (std::size_t k = 0; k < centers.size(); ++k) {
    const auto f = at("centers", k);
    only_keys(centers[k], f, {"J", "m"});
    Center c;
    for (auto j : int_list(member(centers[k], f, "J"), f + ".J")) {
      if (j < 1 || j > static_cast<std::int64_t>(centers.size())) fail(f + ".J", "curve id out of range");
      c.J.push_back(static_cast<int>(j));
    }
    c.m = as_int(member(centers[k], f, "m"), f + ".m");
    p.centers.push_back(std::move(c));
  }
  p.branches = branches_from(member(doc, "document", "branches"), "branches");
  return p;
}

std::string display(const ZetaResult& z) {
  std::string den;
  for (const auto& f : z.factored_denominator) {
    const std::string slope = f.N == 1 ? "s" : std::to_string(f.N) + "*s";
    std::string lin = "(" + std::to_string(f.nu) + " + " + slope + ")";
    if (f.power > 1) lin += "^" + std::to_string(f.power);
    den += (den.empty() ? "" : " ") + lin;
  }
  const std::string num = "(" + z.factored_numerator.str() + ")";
  if (den.empty()) return num;
  if (z.factored_denominator.size() == 1) return num + " / " + den;
  return num + " / (" + den + ")";
}

Json to_json(const ZetaResult& z) {
  Json den = Json::array();
  for (const auto& f : z.factored_denominator) den.push_back({f.nu, f.N, f.power});
  Json poles = Json::array();
  for (const auto& p : z.poles)
    poles.push_back({{"s0", p.s0.str()}, {"order", p.order}, {"leading", p.leading.str()}, {"components", p.components}});
  return {{"rf", to_json(z.rf)},
          {"factored", {{"numerator", to_json(z.factored_numerator)}, {"denominator", den}}},
          {"display", display(z)},
          {"poles", poles}};
}

Json to_json(const EigenvalueReport& r) {
  Json orders = Json::array();
  for (const auto& [d, o] : r.orders) orders.push_back({d, o});
  return {{"zeta", to_json(r.zeta)}, {"orders", orders}, {"eigenvalue_orders", r.eigenvalue_orders}};
}

Json to_json(const RealizationCertificate& c) {
  return {{"target", c.target.str()},
          {"j0", c.j0},
          {"form", to_json(c.form)},
          {"s0", c.s0.str()},
          {"pole_order", c.pole_order},
          {"residue", c.residue.str()},
          {"zeta", to_json(c.zeta)},
          {"search_stats",
           {{"candidates", c.search_stats.candidates}, {"radius", c.search_stats.radius}, {"copies", c.search_stats.copies}}}};
}

Json to_json(const PrincipleReport& r) {
  auto witness = [](const PoleWitness& w) { return Json{{"form", w.form}, {"s0", w.s0.str()}, {"order", w.order}}; };
  Json witnesses = Json::array();
  for (const auto& [lambda, w] : r.witnesses) {
    Json j = witness(w);
    j["eigenvalue"] = lambda.str();
    witnesses.push_back(j);
  }
  Json stray = Json::array();
  for (const auto& w : r.stray_poles) stray.push_back(witness(w));
  Json missing = Json::array();
  for (const auto& m : r.missing) missing.push_back(m.str());
  return {{"poles_are_eigenvalues", r.poles_are_eigenvalues},
          {"eigenvalues_hit", r.eigenvalues_hit},
          {"eigenvalue_orders", r.eigenvalue_orders},
          {"witnesses", witnesses},
          {"stray_poles", stray},
          {"missing", missing}};
}

Json to_json(const TheoremReport& r) {
  return {{"det", r.det.get_str()},
          {"column_gcds", r.column_gcds},
          {"symmetric", r.symmetric},
          {"positive", r.positive},
          {"pass", r.pass}};
}

std::string serialize(const ResolutionData& rd) { return dump(to_json(rd)); }
ResolutionData parse_resdata(std::string_view text) { return resdata_from_json(parse_json(text)); }
FormSpec parse_form(std::string_view text) { return form_from_json(parse_json(text)); }
BlowupProgram parse_program(std::string_view text) { return program_from_json(parse_json(text)); }

}  // namespace zetalab
