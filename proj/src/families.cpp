#include "zetalab/families.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>

#include "zetalab/errors.hpp"

namespace zetalab {

namespace {

CurvetteMatrix program_curvettes(const BlowupProgram& p) {
  if (p.centers.empty()) return CurvetteMatrix();
  return curvette_matrix_2d(intersection_matrix(p));
}

std::size_t host_position(const Branch& b) { return static_cast<std::size_t>(std::stoi(b.host->substr(1)) - 1); }

}  // namespace

ResolutionData resolve_program(const BlowupProgram& p) {
  ResolutionData rd = build_from_program(p);
  rd.curvette_matrix = program_curvettes(p);
  return rd;
}

std::vector<std::string> n_consistency_violations(const BlowupProgram& p) {
  const ResolutionData rd = build_from_program(p);
  const CurvetteMatrix a = program_curvettes(p);
  std::vector<std::string> out;
  for (std::size_t j = 0; j < p.centers.size(); ++j) {
    std::int64_t expect = 0;
    for (const auto& b : p.branches) expect += b.mult * a(host_position(b), j);
    if (expect != rd.components[j].N)
      out.push_back("N-consistency fails on " + exceptional_id(j + 1) + ": N = " + std::to_string(rd.components[j].N) +
                    ", branches give " + std::to_string(expect));
  }
  return out;
}

BlowupProgram with_consistent_multiplicities(BlowupProgram p) {
  dual_graph(p);
  const CurvetteMatrix a = program_curvettes(p);
  for (std::size_t i = 0; i < p.centers.size(); ++i) {
    std::int64_t m = 0;
    for (const auto& b : p.branches) {
      const auto h = host_position(b);
      std::int64_t through = a(h, i);
      for (int j : p.centers[i].J) through -= a(h, static_cast<std::size_t>(j - 1));
      m += b.mult * through;
    }
    p.centers[i].m = m;
  }
  return p;
}

BlowupProgram pq_program(std::int64_t p, std::int64_t q, std::map<std::string, std::string>* axis_hosts) {
  if (p < 2 || q <= p) throw ValidationError("pq family requires 2 <= p < q");
  if (std::gcd(p, q) != 1) throw ValidationError("pq family requires gcd(p,q) = 1");

  // Local equation u^alpha = v^beta at the next center; a label is either a
  // coordinate axis or an exceptional curve.
  struct Label {
    int exceptional = 0;
    std::string axis;
  };
  Label u{0, "y"}, v{0, "x"};
  std::int64_t alpha = p, beta = q;
  BlowupProgram prog;
  std::map<std::string, std::string> hosts;
  for (;;) {
    const int k = static_cast<int>(prog.centers.size()) + 1;
    Center c;
    for (const Label* l : {&u, &v})
      if (l->exceptional) c.J.push_back(l->exceptional);
    std::sort(c.J.begin(), c.J.end());
    c.m = std::min(alpha, beta);
    prog.centers.push_back(c);
    if (alpha == beta) break;
    Label& departing = alpha < beta ? v : u;
    if (alpha < beta) beta -= alpha;
    else alpha -= beta;
    if (!departing.axis.empty()) hosts[departing.axis] = exceptional_id(static_cast<std::size_t>(k));
    departing = Label{k, ""};
  }
  prog.branches.push_back({exceptional_id(prog.centers.size()), 1});
  if (axis_hosts) *axis_hosts = hosts;
  return prog;
}

const std::vector<std::string>& family_names() {
  static const std::vector<std::string> names{"xn", "xy", "pq", "cusp", "twopair", "fermat", "morse"};
  return names;
}

std::vector<std::string> family_params(std::string_view name) {
  if (name == "xn") return {"N"};
  if (name == "xy") return {"d", "N", "Np"};
  if (name == "pq") return {"p", "q"};
  if (name == "fermat") return {"d"};
  if (name == "morse") return {"n"};
  if (name == "cusp" || name == "twopair") return {};
  throw ValidationError("unknown family \"" + std::string(name) + "\"");
}

namespace {

std::int64_t param(const std::map<std::string, std::int64_t>& params, const std::string& key) {
  auto it = params.find(key);
  if (it == params.end()) throw ValidationError("missing parameter " + key);
  return it->second;
}

Family from_program(std::string name, std::map<std::string, std::int64_t> params, BlowupProgram prog,
                    std::map<std::string, std::string> axes) {
  Family f;
  f.name = std::move(name);
  f.params = std::move(params);
  f.data = resolve_program(prog);
  f.program = std::move(prog);
  f.axes = std::move(axes);
  return f;
}

// Blow-up of the origin in C^n; E meets the strict transform along a smooth
// hypersurface section D.
ResolutionData point_blowup(int n, std::int64_t N, std::int64_t chi_open, std::int64_t chi_d) {
  ResolutionData rd;
  rd.ambient_dim = n;
  rd.components = {{"E", ComponentKind::exceptional, N, n}, {"F", ComponentKind::strict, 1, 1}};
  rd.strata = {{{"E"}, chi_open, std::nullopt}, {{"F"}, 0, std::nullopt}, {{"E", "F"}, chi_d, std::nullopt}};
  rd.curvette_matrix = IntMatrix{{1}};
  return rd;
}

}  // namespace

Family make_family(std::string_view name, const std::map<std::string, std::int64_t>& params) {
  const auto expected = family_params(name);
  for (const auto& [k, v] : params)
    if (std::find(expected.begin(), expected.end(), k) == expected.end())
      throw ValidationError("family " + std::string(name) + " has no parameter " + k);

  if (name == "xn") {
    const auto N = param(params, "N");
    if (N < 1) throw ValidationError("xn family requires N >= 1");
    BlowupProgram prog{{}, {{std::nullopt, N}}};
    return from_program("xn", params, prog, {{"x", "S1"}});
  }
  if (name == "xy") {
    const auto d = param(params, "d"), N = param(params, "N"), Np = param(params, "Np");
    if (d < 1 || N < 1 || Np < 1) throw ValidationError("xy family requires d, N, Np >= 1");
    if (std::gcd(N, Np) != 1) throw ValidationError("xy family requires gcd(N,Np) = 1");
    BlowupProgram prog{{}, {{std::nullopt, d * N}, {std::nullopt, d * Np}}};
    return from_program("xy", params, prog, {{"x", "S1"}, {"y", "S2"}});
  }
  if (name == "pq" || name == "cusp") {
    const auto p = name == "cusp" ? 2 : param(params, "p");
    const auto q = name == "cusp" ? 3 : param(params, "q");
    std::map<std::string, std::string> axes;
    auto prog = pq_program(p, q, &axes);
    return from_program("pq", {{"p", p}, {"q", q}}, prog, axes);
  }
  if (name == "twopair") {
    BlowupProgram prog{{{{}, 4}, {{1}, 2}, {{1, 2}, 2}, {{3}, 2}, {{4}, 1}, {{4, 5}, 1}}, {{"E6", 1}}};
    return from_program("twopair", {}, prog, {{"x", "E1"}, {"y", "E2"}});
  }
  if (name == "fermat") {
    const auto d = param(params, "d");
    if (d < 3) throw ValidationError("fermat family requires d >= 3");
    Family f;
    f.name = "fermat";
    f.params = params;
    f.data = point_blowup(3, d, d * d - 3 * d + 3, 3 * d - d * d);
    // {x=0} meets E in a line L, transverse to the curve D in d points.
    f.data.hypersurfaces = {{"E", {{{"E"}, {2 - d, 1}}, {{"E", "F"}, {d, 0}}}}};
    f.axes = {{"x", "E"}};
    return f;
  }
  if (name == "morse") {
    const auto n = param(params, "n");
    if (n < 2 || n % 2 != 0) throw ValidationError("morse family requires even n >= 2");
    Family f;
    f.name = "morse";
    f.params = params;
    // chi(P^{n-1}) = n and the smooth quadric of even dimension n-2 has chi = n.
    f.data = point_blowup(static_cast<int>(n), 2, 0, n);
    return f;
  }
  throw ValidationError("unknown family \"" + std::string(name) + "\"");
}

FormSpec monomial_form(const Family& fam, const std::map<std::string, std::int64_t>& exponents) {
  FormSpec w;
  for (const auto& [axis, e] : exponents) {
    if (e < 0) throw ValidationError("negative exponent on " + axis);
    if (e == 0) continue;
    auto it = fam.axes.find(axis);
    if (it == fam.axes.end()) throw ValidationError("axis " + axis + " is not a curvette in family " + fam.name);
    w.terms.push_back({it->second, e, 1});
  }
  return w;
}

namespace {

std::map<std::string, std::int64_t> parse_assignments(std::string_view text) {
  std::map<std::string, std::int64_t> out;
  while (!text.empty()) {
    auto comma = text.find(',');
    auto item = text.substr(0, comma);
    auto eq = item.find('=');
    if (eq == std::string_view::npos) throw ValidationError("expected key=value in \"" + std::string(item) + "\"");
    std::int64_t v = 0;
    auto val = item.substr(eq + 1);
    auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
    if (ec != std::errc() || ptr != val.data() + val.size())
      throw ValidationError("not an integer: \"" + std::string(val) + "\"");
    out[std::string(item.substr(0, eq))] = v;
    text = comma == std::string_view::npos ? std::string_view() : text.substr(comma + 1);
  }
  return out;
}

std::int64_t need(const std::map<std::string, std::int64_t>& kv, const std::string& key, std::string_view selector) {
  auto it = kv.find(key);
  if (it == kv.end()) throw ValidationError("form selector " + std::string(selector) + " needs " + key);
  if (it->second < 1) throw ValidationError("form index " + key + " must be positive");
  return it->second;
}

std::string omega_ij(std::int64_t i, std::int64_t j) {
  return "omega_ij:i=" + std::to_string(i) + ",j=" + std::to_string(j);
}

}  // namespace

FormSpec named_form(const Family& fam, std::string_view selector) {
  const auto colon = selector.find(':');
  const auto head = selector.substr(0, colon);
  const auto kv = colon == std::string_view::npos ? std::map<std::string, std::int64_t>{}
                                                  : parse_assignments(selector.substr(colon + 1));
  if (head == "trivial") return {};
  if (head == "omega_ij") return monomial_form(fam, {{"x", need(kv, "i", selector) - 1}, {"y", need(kv, "j", selector) - 1}});
  if (head == "omega_i") return monomial_form(fam, {{"x", need(kv, "i", selector) - 1}});
  if (head == "omega_b") {
    const auto b = need(kv, "b", selector);
    if (fam.name == "xn") return monomial_form(fam, {{"x", b - 1}});
    if (fam.name == "xy")
      return monomial_form(fam, {{"x", b * fam.params.at("N") - 1}, {"y", b * fam.params.at("Np") - 1}});
    throw ValidationError("omega_b is defined for the xn and xy families only");
  }
  throw ValidationError("unknown form selector \"" + std::string(selector) + "\"");
}

std::vector<std::string> form_set_names(std::string_view family) {
  if (family == "xn" || family == "xy") return {"omega_b"};
  if (family == "pq" || family == "cusp") return {"omega_ij"};
  if (family == "twopair") return {"first", "second"};
  if (family == "fermat") return {"omega_i", "omega_i_reduced"};
  if (family == "morse") return {"trivial"};
  return {};
}

std::vector<std::pair<std::string, FormSpec>> named_form_set(const Family& fam, std::string_view set) {
  std::vector<std::string> selectors;
  const auto& n = fam.name;
  if ((n == "xn" || n == "xy") && set == "omega_b") {
    const auto top = n == "xn" ? fam.params.at("N") : fam.params.at("d");
    for (std::int64_t b = 1; b <= top; ++b) selectors.push_back("omega_b:b=" + std::to_string(b));
  } else if (n == "pq" && set == "omega_ij") {
    for (std::int64_t i = 1; i < fam.params.at("q"); ++i)
      for (std::int64_t j = 1; j < fam.params.at("p"); ++j) selectors.push_back(omega_ij(i, j));
  } else if (n == "twopair" && set == "first") {
    for (int i = 1; i <= 5; ++i)
      for (int j = 1; j <= 3; ++j) selectors.push_back(omega_ij(i, j));
    selectors.push_back(omega_ij(3, 4));
  } else if (n == "twopair" && set == "second") {
    for (int i = 1; i <= 3; ++i)
      for (int j = 1; j <= 5; ++j)
        if (!(i == 2 && j == 4)) selectors.push_back(omega_ij(i, j));
  } else if (n == "fermat" && (set == "omega_i" || set == "omega_i_reduced")) {
    const auto d = fam.params.at("d");
    for (std::int64_t i = 1; i <= d; ++i)
      if (set == "omega_i" || i != d - 2) selectors.push_back("omega_i:i=" + std::to_string(i));
  } else if (set == "trivial") {
    selectors.push_back("trivial");
  } else {
    throw ValidationError("unknown form set \"" + std::string(set) + "\" for family " + n);
  }
  std::vector<std::pair<std::string, FormSpec>> out;
  for (const auto& s : selectors) out.emplace_back(s, named_form(fam, s));
  return out;
}

}  // namespace zetalab
