#include "zetalab/resolution.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "zetalab/errors.hpp"

namespace zetalab {

std::string_view to_string(ComponentKind kind) {
  switch (kind) {
    case ComponentKind::exceptional: return "exceptional";
    case ComponentKind::strict: return "strict";
    case ComponentKind::curvette: return "curvette";
  }
  return "?";
}

ComponentKind component_kind_from(std::string_view name) {
  if (name == "exceptional") return ComponentKind::exceptional;
  if (name == "strict") return ComponentKind::strict;
  if (name == "curvette") return ComponentKind::curvette;
  throw ValidationError("unknown component kind \"" + std::string(name) + "\"");
}

std::optional<std::size_t> ResolutionData::index_of(std::string_view id) const {
  for (std::size_t i = 0; i < components.size(); ++i)
    if (components[i].id == id) return i;
  return std::nullopt;
}

const Component& ResolutionData::component(std::string_view id) const {
  auto i = index_of(id);
  if (!i) throw ValidationError("unknown component \"" + std::string(id) + "\"");
  return components[*i];
}

std::vector<std::size_t> ResolutionData::indices_of(ComponentKind kind) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < components.size(); ++i)
    if (components[i].kind == kind) out.push_back(i);
  return out;
}

std::optional<std::size_t> ResolutionData::exceptional_position(std::string_view id) const {
  std::size_t pos = 0;
  for (const auto& c : components) {
    if (c.kind != ComponentKind::exceptional) continue;
    if (c.id == id) return pos;
    ++pos;
  }
  return std::nullopt;
}

std::vector<std::size_t> ResolutionData::key_of(const std::vector<std::string>& ids) const {
  std::vector<std::size_t> key;
  key.reserve(ids.size());
  for (const auto& id : ids) {
    auto i = index_of(id);
    if (!i) throw ValidationError("unknown component \"" + id + "\"");
    key.push_back(*i);
  }
  std::sort(key.begin(), key.end());
  return key;
}

const Stratum* ResolutionData::find_stratum(const std::vector<std::string>& ids) const {
  auto key = key_of(ids);
  for (const auto& s : strata)
    if (key_of(s.components) == key) return &s;
  return nullptr;
}

Stratum* ResolutionData::find_stratum(const std::vector<std::string>& ids) {
  return const_cast<Stratum*>(std::as_const(*this).find_stratum(ids));
}

std::int64_t ResolutionData::singleton_chi(std::string_view id) const {
  const Stratum* s = find_stratum({std::string(id)});
  return s ? s->chi_local : 0;
}

void ResolutionData::canonicalize() {
  for (auto& s : strata) {
    auto key = key_of(s.components);
    s.components.clear();
    for (auto i : key) s.components.push_back(components[i].id);
  }
  for (auto& h : hypersurfaces) {
    for (auto& sec : h.sections) {
      auto key = key_of(sec.components);
      sec.components.clear();
      for (auto i : key) sec.components.push_back(components[i].id);
    }
  }
}

std::int64_t ResolutionData::strict_gcd() const {
  std::int64_t g = 0;
  for (const auto& c : components)
    if (c.kind == ComponentKind::strict) g = std::gcd(g, c.N);
  return g;
}

namespace {

std::string describe(const std::vector<std::string>& ids) {
  std::string out = "{";
  for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? "," : "") + ids[i];
  return out + "}";
}

}  // namespace

std::vector<std::string> validate(const ResolutionData& rd) {
  std::vector<std::string> v;
  if (rd.ambient_dim < 1) v.push_back("ambient_dim must be positive");

  std::set<std::string> ids;
  for (const auto& c : rd.components) {
    if (!ids.insert(c.id).second) v.push_back("duplicate component id: " + c.id);
    if (c.nu < 1) v.push_back("nu < 1 on component: " + c.id);
    if (c.kind == ComponentKind::curvette && c.N != 0) v.push_back("curvette with nonzero N: " + c.id);
    if (c.kind != ComponentKind::curvette && c.N < 1) v.push_back("component not in divisor of f (N < 1): " + c.id);
  }
  if (rd.indices_of(ComponentKind::strict).empty()) v.push_back("no strict component");

  std::set<std::vector<std::size_t>> seen;
  for (const auto& s : rd.strata) {
    bool known = true;
    for (const auto& id : s.components) {
      if (!ids.count(id)) {
        v.push_back("stratum " + describe(s.components) + " references unknown component: " + id);
        known = false;
      }
    }
    if (!known) continue;
    if (s.components.empty()) {
      if (s.chi_local != 0 || !s.chi_global) v.push_back("empty stratum must carry chi_local 0 and a chi_global");
    }
    auto key = rd.key_of(s.components);
    if (std::adjacent_find(key.begin(), key.end()) != key.end())
      v.push_back("stratum " + describe(s.components) + " repeats a component");
    if (!seen.insert(key).second) v.push_back("duplicate stratum " + describe(s.components));
    if (rd.ambient_dim == 2) {
      if (s.components.size() > 2) v.push_back("stratum " + describe(s.components) + " has more than two components in dimension 2");
      if (s.components.size() == 2 && s.chi_local < 1)
        v.push_back("stratum " + describe(s.components) + " must count at least one intersection point");
    }
  }
  for (const auto& c : rd.components) {
    if (!seen.count(rd.key_of({c.id}))) v.push_back("missing singleton stratum for " + c.id);
  }

  const auto exceptional = rd.indices_of(ComponentKind::exceptional);
  if (rd.curvette_matrix) {
    const auto& a = *rd.curvette_matrix;
    if (a.rows() != exceptional.size() || a.cols() != exceptional.size())
      v.push_back("curvette_matrix must be " + std::to_string(exceptional.size()) + "x" +
                  std::to_string(exceptional.size()));
  }

  const auto strict = rd.indices_of(ComponentKind::strict);
  if (!rd.branches.empty() && rd.branches.size() != strict.size())
    v.push_back("branches must list one entry per strict component");
  for (const auto& b : rd.branches) {
    if (b.mult < 1) v.push_back("branch multiplicity must be positive");
    if (b.host) {
      auto i = rd.index_of(*b.host);
      if (!i || rd.components[*i].kind != ComponentKind::exceptional)
        v.push_back("branch host is not an exceptional component: " + *b.host);
    }
  }

  for (const auto& h : rd.hypersurfaces) {
    auto i = rd.index_of(h.host);
    if (!i || rd.components[*i].kind != ComponentKind::exceptional)
      v.push_back("hypersurface host is not an exceptional component: " + h.host);
    for (const auto& sec : h.sections) {
      for (const auto& id : sec.components)
        if (!ids.count(id)) v.push_back("hypersurface section references unknown component: " + id);
    }
  }
  return v;
}

}  // namespace zetalab
