#include "zetalab/zeta.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "zetalab/errors.hpp"

namespace zetalab {

namespace {

void require_valid(const ResolutionData& rd) {
  auto v = validate(rd);
  if (v.empty()) return;
  std::string msg = "invalid resolution data: " + v.front();
  for (std::size_t i = 1; i < v.size(); ++i) msg += "; " + v[i];
  throw ValidationError(msg);
}

}  // namespace

CyclotomicDivisor acampo_zeta(const ResolutionData& rd) {
  require_valid(rd);
  CyclotomicDivisor z;
  for (const auto& c : rd.components)
    if (c.N >= 1) z.add(c.N, rd.singleton_chi(c.id));
  return z;
}

EigenvalueReport eigenvalue_report(const ResolutionData& rd) {
  EigenvalueReport r;
  r.zeta = acampo_zeta(rd);
  for (const auto& c : rd.components) {
    if (c.N < 1) continue;
    for (auto d : divisors_of(c.N)) r.orders.emplace(d, cyc_order_at(r.zeta, d));
  }
  for (const auto& [d, ord] : r.orders)
    if (ord != 0) r.eigenvalue_orders.insert(d);
  if (const auto g = rd.strict_gcd(); g > 0)
    for (auto d : divisors_of(g)) r.eigenvalue_orders.insert(d);
  return r;
}

std::vector<RootOfUnity> eigenvalues(const EigenvalueReport& report) {
  std::vector<RootOfUnity> out;
  for (auto d : report.eigenvalue_orders)
    for (std::int64_t u = 0; u < d; ++u)
      if (std::gcd(u, d) == 1) out.push_back(RootOfUnity::from_fraction(u, d));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
  if (k < 0 || k > n) return 0;
  std::int64_t r = 1;
  for (std::int64_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

using Key = std::vector<std::size_t>;

// c[k-1] = chi(E°_I ∩ L_1 ∩ ... ∩ L_k) for general members L of the
// curvette family of one host, keyed by I.
using Sections = std::map<Key, std::vector<std::int64_t>>;

Sections sections_for(const ResolutionData& rd, const std::string& host) {
  Sections s;
  for (const auto& h : rd.hypersurfaces) {
    if (h.host != host) continue;
    for (const auto& sec : h.sections) s[rd.key_of(sec.components)] = sec.chi;
    return s;
  }
  if (rd.ambient_dim != 2) throw ValidationError("no hypersurface data for host " + host + " above dimension 2");
  s[rd.key_of({host})] = {1};
  return s;
}

std::string fresh_curvette_id(const ResolutionData& rd) {
  for (std::size_t k = 1;; ++k) {
    std::string id = "C" + std::to_string(k);
    if (!rd.index_of(id)) return id;
  }
}

void add_curvettes(ResolutionData& rd, const std::string& host, std::int64_t m, std::int64_t t) {
  const Sections sections = sections_for(rd, host);
  std::vector<std::string> ids;
  for (std::int64_t k = 0; k < t; ++k) {
    std::int64_t mk = m / t + (k < m % t ? 1 : 0);
    ids.push_back(fresh_curvette_id(rd));
    rd.components.push_back({ids.back(), ComponentKind::curvette, 0, mk + 1});
  }

  std::vector<Stratum> added;
  for (const auto& [key, c] : sections) {
    std::vector<std::string> base;
    for (auto i : key) base.push_back(rd.components[i].id);
    Stratum* old = rd.find_stratum(base);
    auto coeff = [&](std::int64_t j) -> std::int64_t {
      if (j == 0) return old ? old->chi_local : 0;
      return j <= static_cast<std::int64_t>(c.size()) ? c[static_cast<std::size_t>(j - 1)] : 0;
    };
    // Inclusion-exclusion over which of the t copies a point lies on.
    for (std::int64_t k = 0; k <= t; ++k) {
      std::int64_t chi = 0;
      for (std::int64_t j = 0; j <= t - k; ++j) chi += (j % 2 ? -1 : 1) * binomial(t - k, j) * coeff(k + j);
      if (k == 0) {
        if (old) old->chi_local = chi;
        else if (chi != 0) added.push_back({base, chi, std::nullopt});
        continue;
      }
      if (chi == 0) continue;
      std::vector<bool> pick(static_cast<std::size_t>(t), false);
      std::fill(pick.begin(), pick.begin() + k, true);
      do {
        Stratum s{base, chi, std::nullopt};
        for (std::size_t q = 0; q < pick.size(); ++q)
          if (pick[q]) s.components.push_back(ids[q]);
        added.push_back(std::move(s));
      } while (std::prev_permutation(pick.begin(), pick.end()));
    }
  }
  for (const auto& id : ids) rd.strata.push_back({{id}, 0, std::nullopt});
  for (auto& s : added) rd.strata.push_back(std::move(s));
}

// Multiplicities of the reduced equation of strict component S along the
// exceptional components.
std::vector<std::int64_t> strict_row(const ResolutionData& rd, const CurvetteMatrix& a, std::size_t strict_index) {
  const auto exceptional = rd.indices_of(ComponentKind::exceptional);
  if (exceptional.empty()) return {};
  const auto strict = rd.indices_of(ComponentKind::strict);
  if (rd.ambient_dim == 2 && !rd.branches.empty()) {
    const auto pos = static_cast<std::size_t>(std::find(strict.begin(), strict.end(), strict_index) - strict.begin());
    const auto& b = rd.branches[pos];
    if (!b.host) throw ValidationError("branch without host has no pullback row");
    return a.row(*rd.exceptional_position(*b.host));
  }
  if (strict.size() == 1) {
    const auto NS = rd.components[strict_index].N;
    std::vector<std::int64_t> row;
    for (auto i : exceptional) {
      if (rd.components[i].N % NS != 0) throw ValidationError("strict multiplicity does not divide N of " + rd.components[i].id);
      row.push_back(rd.components[i].N / NS);
    }
    return row;
  }
  throw ValidationError("cannot pull back the equation of " + rd.components[strict_index].id);
}

}  // namespace

ResolutionData apply_form(const ResolutionData& rd, const CurvetteMatrix& a, const FormSpec& w) {
  if (w.terms.empty()) return rd;
  require_valid(rd);
  const auto exceptional = rd.indices_of(ComponentKind::exceptional);
  if (a.rows() != exceptional.size() || a.cols() != exceptional.size())
    throw ValidationError("curvette matrix does not match the exceptional components");

  ResolutionData out = rd;
  if (rd.ambient_dim != 2) {
    if (!rd.indices_of(ComponentKind::curvette).empty())
      throw ValidationError("data already carries curvettes; cannot place hypersurfaces generically");
    std::set<Key> support;
    for (const auto& t : w.terms) {
      if (rd.component(t.host).kind != ComponentKind::exceptional) continue;
      for (const auto& [key, c] : sections_for(rd, t.host)) {
        (void)c;
        if (!support.insert(key).second)
          throw ValidationError("hypersurface families of two terms meet a common stratum");
      }
    }
  }

  for (const auto& t : w.terms) {
    if (t.m < 0) throw ValidationError("negative exponent on " + t.host);
    if (t.copies < 1) throw ValidationError("copies must be positive on " + t.host);
    const auto hi = *rd.index_of(rd.component(t.host).id);
    const auto kind = rd.components[hi].kind;
    if (kind == ComponentKind::curvette) throw ValidationError("form term hosted on a curvette: " + t.host);
    std::vector<std::int64_t> row;
    if (kind == ComponentKind::exceptional) {
      row = a.row(*rd.exceptional_position(t.host));
    } else {
      if (t.copies != 1) throw ValidationError("strict host takes a single copy: " + t.host);
      row = strict_row(rd, a, hi);
      out.components[hi].nu += t.m;
    }
    for (std::size_t p = 0; p < exceptional.size(); ++p) out.components[exceptional[p]].nu += row[p] * t.m;
    if (kind == ComponentKind::exceptional) add_curvettes(out, t.host, t.m, t.copies);
  }
  return out;
}

const PoleInfo* ZetaResult::pole_at(const BigRational& s0) const {
  for (const auto& p : poles)
    if (p.s0 == s0) return &p;
  return nullptr;
}

RationalFunction strata_sum(const ResolutionData& rd, bool local) {
  require_valid(rd);
  // Common denominator: every factor nu + N s at its largest multiplicity
  // within one stratum.
  using Factor = std::pair<std::int64_t, std::int64_t>;
  std::vector<std::pair<std::int64_t, std::map<Factor, int>>> terms;
  std::map<Factor, int> top;
  for (const auto& s : rd.strata) {
    std::int64_t chi = 0;
    if (local) {
      chi = s.chi_local;
    } else {
      if (!s.chi_global) throw ValidationError("missing chi_global on a stratum");
      chi = *s.chi_global;
    }
    if (chi == 0) continue;
    std::map<Factor, int> count;
    for (const auto& id : s.components) {
      const auto& c = rd.component(id);
      ++count[{c.nu, c.N}];
    }
    for (const auto& [f, k] : count) top[f] = std::max(top[f], k);
    terms.emplace_back(chi, std::move(count));
  }

  auto factor = [](const Factor& f) { return UniPoly::linear(BigRational(f.first), BigRational(f.second)); };
  UniPoly den{1};
  for (const auto& [f, k] : top) den = den * factor(f).pow(static_cast<unsigned>(k));
  UniPoly num;
  for (const auto& [chi, count] : terms) {
    UniPoly part = UniPoly::constant(BigRational(chi));
    for (const auto& [f, k] : top) {
      auto it = count.find(f);
      const int have = it == count.end() ? 0 : it->second;
      if (k > have) part = part * factor(f).pow(static_cast<unsigned>(k - have));
    }
    num += part;
  }
  return rf_normalize(num, den);
}

ZetaResult topological_zeta(const ResolutionData& rd, bool local) {
  ZetaResult z;
  z.rf = strata_sum(rd, local);
  z.factored_numerator = z.rf.numerator();
  for (const auto& p : rf_poles(z.rf)) {
    PoleInfo info{p.location, p.order, rf_laurent_leading(z.rf, p.location, p.order), {}};
    const Component* shown = nullptr;
    for (const auto& c : rd.components) {
      if (c.N < 1 || BigRational(-c.nu, c.N) != p.location) continue;
      info.components.push_back(c.id);
      if (!shown || c.N < shown->N) shown = &c;
    }
    if (!shown) throw MathError("pole " + p.location.str() + " is not a candidate pole");
    z.factored_denominator.push_back({shown->nu, shown->N, p.order});
    BigRational scale(1);
    for (int k = 0; k < p.order; ++k) scale *= BigRational(shown->N);
    z.factored_numerator = z.factored_numerator * scale;
    z.poles.push_back(std::move(info));
  }
  return z;
}

}  // namespace zetalab
