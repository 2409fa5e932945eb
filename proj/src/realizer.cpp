#include "zetalab/realizer.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>

#include "zetalab/errors.hpp"

namespace zetalab {

namespace {

bool qualifies(const ResolutionData& rd, const Component& c) {
  const auto chi = rd.singleton_chi(c.id);
  return rd.ambient_dim == 2 ? chi < 0 : chi != 0;
}

std::optional<std::size_t> smallest(const ResolutionData& rd, const std::function<bool(const Component&)>& pred) {
  std::optional<std::size_t> best;
  for (std::size_t i = 0; i < rd.components.size(); ++i) {
    const auto& c = rd.components[i];
    if (!pred(c)) continue;
    if (!best || c.N < rd.components[*best].N) best = i;
  }
  return best;
}

std::int64_t mod(std::int64_t x, std::int64_t n) { return ((x % n) + n) % n; }

std::vector<BigRational> shifted_nu(const ResolutionData& rd, const CurvetteMatrix& a, std::span<const std::int64_t> m) {
  const auto exceptional = rd.indices_of(ComponentKind::exceptional);
  if (m.size() != exceptional.size()) throw ValidationError("exponent vector does not match the exceptional components");
  std::vector<BigRational> nu;
  for (const auto& c : rd.components) nu.emplace_back(c.nu);
  for (std::size_t l = 0; l < m.size(); ++l)
    for (std::size_t p = 0; p < exceptional.size(); ++p) nu[exceptional[p]] += BigRational(a(l, p) * m[l]);
  return nu;
}

}  // namespace

std::string select_component(const ResolutionData& rd, std::int64_t d) {
  auto exc = [&](const Component& c) { return c.kind == ComponentKind::exceptional && qualifies(rd, c); };
  if (auto i = smallest(rd, [&](const Component& c) { return exc(c) && c.N % d == 0; })) return rd.components[*i].id;
  const auto g = rd.strict_gcd();
  if (g > 0 && g % d == 0)
    if (auto i = smallest(rd, exc)) return rd.components[*i].id;
  throw NotRealizable("eigenvalue order not realizable from this data");
}

CongruenceSolution solve_congruence(std::span<const std::int64_t> coeffs, std::int64_t nu, std::int64_t N,
                                    const BigRational& target_turns) {
  if (N < 1) throw MathError("congruence modulus must be positive");
  const RootOfUnity t(target_turns);
  const auto d = t.order();
  if (N % d != 0) throw MathError("target order does not divide N");
  const auto u = to_int64(t.turns().numerator());
  std::int64_t g = N;
  for (auto c : coeffs) g = std::gcd(g, c);
  if (g != 1) throw MathError("curvette column has gcd " + std::to_string(g) + " with N");

  // suffix[l] = gcd(N, coeffs[l..]) decides solvability of the remainder.
  std::vector<std::int64_t> suffix(coeffs.size() + 1, N);
  for (std::size_t l = coeffs.size(); l-- > 0;) suffix[l] = std::gcd(suffix[l + 1], mod(coeffs[l], N));

  CongruenceSolution sol{std::vector<std::int64_t>(coeffs.size(), 0), N};
  std::int64_t residual = mod(-u * (N / d) - nu, N);
  for (std::size_t l = 0; l < coeffs.size(); ++l) {
    std::int64_t m = 0;
    while (mod(residual - mod(coeffs[l], N) * m, N) % suffix[l + 1] != 0) ++m;
    sol.base[l] = m;
    residual = mod(residual - mod(coeffs[l], N) * m, N);
  }
  if (residual != 0) throw MathError("congruence unsolvable");
  return sol;
}

bool collision_filter(const ResolutionData& rd, const CurvetteMatrix& a, const std::string& j0,
                      std::span<const std::int64_t> m) {
  const auto nu = shifted_nu(rd, a, m);
  const auto j = *rd.index_of(j0);
  const BigRational s0 = -nu[j] / BigRational(rd.components[j].N);
  for (std::size_t i = 0; i < rd.components.size(); ++i) {
    if (i == j || rd.components[i].N < 1) continue;
    if (-nu[i] / BigRational(rd.components[i].N) == s0) return false;
  }
  return true;
}

BigRational residue_formula(const ResolutionData& rd, const CurvetteMatrix& a, const std::string& j0,
                            std::span<const std::int64_t> m) {
  const auto nu = shifted_nu(rd, a, m);
  const auto j = *rd.index_of(j0);
  const BigRational Nj(rd.components[j].N);
  const BigRational s0 = -nu[j] / Nj;
  BigRational sum(rd.singleton_chi(j0));
  if (auto pos = rd.exceptional_position(j0); pos && m[*pos] > 0)
    sum += BigRational(-1) + BigRational(1, 1 + m[*pos]);
  for (const auto& s : rd.strata) {
    if (s.components.size() != 2) continue;
    const auto& other = s.components[0] == j0 ? s.components[1] : s.components[1] == j0 ? s.components[0] : std::string();
    if (other.empty()) continue;
    const auto i = *rd.index_of(other);
    const BigRational alpha = nu[i] + s0 * BigRational(rd.components[i].N);
    if (alpha.is_zero()) throw MathError("collision at neighbor");
    sum += BigRational(s.chi_local) / alpha;
  }
  return sum / Nj;
}

FormSpec form_from_exponents(const ResolutionData& rd, std::span<const std::int64_t> m, std::int64_t copies) {
  const auto exceptional = rd.indices_of(ComponentKind::exceptional);
  FormSpec w;
  for (std::size_t p = 0; p < exceptional.size() && p < m.size(); ++p)
    if (m[p] > 0) w.terms.push_back({rd.components[exceptional[p]].id, m[p], copies});
  return w;
}

namespace {

// Hosts of the generators g_l of the lattice search and their contribution
// to nu_j0 per unit exponent.
struct Generators {
  std::vector<std::string> hosts;
  std::vector<std::int64_t> coeffs;
  bool strict = false;
};

Generators exceptional_generators(const ResolutionData& rd, const CurvetteMatrix& a, const std::string& j0) {
  Generators g;
  const auto col = *rd.exceptional_position(j0);
  std::size_t p = 0;
  for (const auto& c : rd.components) {
    if (c.kind != ComponentKind::exceptional) continue;
    const bool usable = rd.ambient_dim == 2 ||
                        std::any_of(rd.hypersurfaces.begin(), rd.hypersurfaces.end(),
                                    [&](const Hypersurface& h) { return h.host == c.id; });
    if (usable) {
      g.hosts.push_back(c.id);
      g.coeffs.push_back(a(p, col));
    }
    ++p;
  }
  return g;
}

// Hosts whose curvettes meet E°_j0; extra copies only help there.
std::set<std::string> copy_hosts(const ResolutionData& rd, const Generators& g, const std::string& j0) {
  std::set<std::string> out;
  if (rd.ambient_dim == 2) {
    if (std::find(g.hosts.begin(), g.hosts.end(), j0) != g.hosts.end()) out.insert(j0);
    return out;
  }
  for (const auto& h : rd.hypersurfaces)
    for (const auto& sec : h.sections)
      if (std::find(sec.components.begin(), sec.components.end(), j0) != sec.components.end() &&
          std::any_of(sec.chi.begin(), sec.chi.end(), [](std::int64_t c) { return c != 0; }))
        out.insert(h.host);
  return out;
}

// Calls visit on every k in {0..K}^n by increasing total, lexicographically
// ascending within a total; stops when visit returns true.
bool graded_lex(std::size_t n, int K, const std::function<bool(const std::vector<std::int64_t>&)>& visit) {
  std::vector<std::int64_t> k(n, 0);
  std::function<bool(std::size_t, std::int64_t)> rec = [&](std::size_t pos, std::int64_t left) -> bool {
    if (pos + 1 == n) {
      if (left > K) return false;
      k[pos] = left;
      return visit(k);
    }
    for (std::int64_t v = 0; v <= std::min<std::int64_t>(K, left); ++v) {
      // Remaining slots must absorb left - v.
      if (left - v > static_cast<std::int64_t>(n - pos - 1) * K) continue;
      k[pos] = v;
      if (rec(pos + 1, left - v)) return true;
    }
    return false;
  };
  if (n == 0) return visit(k);
  for (std::int64_t total = 0; total <= static_cast<std::int64_t>(n) * K; ++total)
    if (rec(0, total)) return true;
  return false;
}

}  // namespace

RealizationCertificate realize(const ResolutionData& rd, const CurvetteMatrix& a, const RootOfUnity& target, int K) {
  if (K < 0) throw ValidationError("search radius must be nonnegative");
  const auto d = target.order();
  const auto report = eigenvalue_report(rd);
  if (!report.eigenvalue_orders.count(d)) throw NotRealizable("eigenvalue order not realizable from this data");

  std::string j0;
  Generators gen;
  try {
    j0 = select_component(rd, d);
    gen = exceptional_generators(rd, a, j0);
  } catch (const NotRealizable&) {
    // Normal crossings: the pole comes from a strict component twisted by
    // powers of its own equation.
    auto i = smallest(rd, [&](const Component& c) { return c.kind == ComponentKind::strict && c.N % d == 0; });
    if (!i) throw;
    j0 = rd.components[*i].id;
    gen.strict = true;
    for (auto s : rd.indices_of(ComponentKind::strict)) {
      gen.hosts.push_back(rd.components[s].id);
      gen.coeffs.push_back(s == *i ? 1 : 0);
    }
  }

  const auto& cj = rd.component(j0);
  const auto sol = solve_congruence(gen.coeffs, cj.nu, cj.N, target.turns());
  const auto exceptional = rd.indices_of(ComponentKind::exceptional);

  RealizationCertificate cert;
  cert.target = target;
  cert.j0 = j0;
  cert.search_stats.radius = K;
  bool vanished = false;

  auto attempt = [&](std::int64_t copies, const std::set<std::string>& multi) {
    return graded_lex(gen.hosts.size(), K, [&](const std::vector<std::int64_t>& k) {
      ++cert.search_stats.candidates;
      FormSpec w;
      std::vector<std::int64_t> full(exceptional.size(), 0);
      for (std::size_t l = 0; l < gen.hosts.size(); ++l) {
        const auto m = sol.base[l] + sol.modulus * k[l];
        if (!gen.strict) full[*rd.exceptional_position(gen.hosts[l])] = m;
        if (m > 0) w.terms.push_back({gen.hosts[l], m, multi.count(gen.hosts[l]) ? copies : 1});
      }
      if (!gen.strict && !collision_filter(rd, a, j0, full)) return false;
      const ResolutionData twisted = apply_form(rd, a, w);
      const auto& c = twisted.component(j0);
      const BigRational s0(-c.nu, c.N);
      ZetaResult z = topological_zeta(twisted);
      const PoleInfo* pole = z.pole_at(s0);
      if (!pole) {
        vanished = true;
        return false;
      }
      cert.form = std::move(w);
      cert.s0 = s0;
      cert.pole_order = pole->order;
      cert.residue = pole->leading;
      cert.zeta = std::move(z);
      cert.search_stats.copies = copies;
      return true;
    });
  };

  if (attempt(1, {})) return cert;
  if (vanished && !gen.strict) {
    const auto multi = copy_hosts(rd, gen, j0);
    if (!multi.empty())
      for (std::int64_t t = 2; t <= rd.ambient_dim; ++t)
        if (attempt(t, multi)) return cert;
  }
  throw RadiusExhausted("search radius exhausted after " + std::to_string(cert.search_stats.candidates) +
                            " candidates at K = " + std::to_string(K),
                        cert.search_stats.candidates, K);
}

std::vector<std::string> check_certificate(const ResolutionData& rd, const CurvetteMatrix& a,
                                           const RealizationCertificate& cert) {
  std::vector<std::string> out;
  const ResolutionData twisted = apply_form(rd, a, cert.form);
  const auto& c = twisted.component(cert.j0);
  if (c.N < 1 || BigRational(-c.nu, c.N) != cert.s0) out.push_back("s0 is not -nu/N of j0");
  if (RootOfUnity::exp_of(cert.s0) != cert.target) out.push_back("exp(2 pi i s0) differs from the target");
  const auto z = topological_zeta(twisted);
  if (!(z.rf == cert.zeta.rf)) out.push_back("zeta function differs");
  const PoleInfo* p = z.pole_at(cert.s0);
  if (!p) {
    out.push_back("s0 is not a pole");
  } else {
    if (p->order != cert.pole_order) out.push_back("pole order differs");
    if (rf_laurent_leading(z.rf, cert.s0, p->order) != cert.residue) out.push_back("leading coefficient differs");
  }
  return out;
}

PrincipleReport verify_principle(const ResolutionData& rd, const CurvetteMatrix& a,
                                 const std::vector<std::pair<std::string, FormSpec>>& forms) {
  PrincipleReport r;
  const auto report = eigenvalue_report(rd);
  r.eigenvalue_orders = report.eigenvalue_orders;
  for (const auto& [label, w] : forms) {
    const auto z = topological_zeta(apply_form(rd, a, w));
    for (const auto& p : z.poles) {
      const auto lambda = RootOfUnity::exp_of(p.s0);
      PoleWitness wit{label, p.s0, p.order};
      if (!r.eigenvalue_orders.count(lambda.order())) {
        r.poles_are_eigenvalues = false;
        r.stray_poles.push_back(wit);
      } else {
        r.witnesses.emplace(lambda, wit);
      }
    }
  }
  for (const auto& lambda : eigenvalues(report))
    if (!r.witnesses.count(lambda)) r.missing.push_back(lambda);
  r.eigenvalues_hit = r.missing.empty();
  return r;
}

}  // namespace zetalab
