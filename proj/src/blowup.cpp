#include "zetalab/blowup.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "zetalab/errors.hpp"

namespace zetalab {

std::string exceptional_id(std::size_t one_based) { return "E" + std::to_string(one_based); }
std::string strict_id(std::size_t one_based) { return "S" + std::to_string(one_based); }

namespace {

int parse_exceptional(const std::string& id, std::size_t count) {
  if (id.size() < 2 || id[0] != 'E') throw ValidationError("branch host is not an exceptional id: " + id);
  std::size_t pos = 0;
  int k = 0;
  try {
    k = std::stoi(id.substr(1), &pos);
  } catch (const std::exception&) {
    throw ValidationError("branch host is not an exceptional id: " + id);
  }
  if (pos != id.size() - 1 || k < 1 || static_cast<std::size_t>(k) > count)
    throw ValidationError("branch host out of range: " + id);
  return k;
}

}  // namespace

DualGraph dual_graph(const BlowupProgram& p) {
  std::set<std::pair<int, int>> edges;
  const auto n = p.centers.size();
  for (std::size_t i = 0; i < n; ++i) {
    const int id = static_cast<int>(i) + 1;
    const auto& c = p.centers[i];
    if (c.m < 0) throw ValidationError("negative multiplicity at center " + std::to_string(id));
    if (c.J.size() > 2) throw ValidationError("center " + std::to_string(id) + " lies on more than two curves");
    if (c.J.empty() && i > 0) throw ValidationError("center " + std::to_string(id) + " is not infinitely near the origin");
    if (!c.J.empty() && i == 0) throw ValidationError("first center must be the origin");
    for (int j : c.J)
      if (j < 1 || j >= id) throw ValidationError("center " + std::to_string(id) + " references E" + std::to_string(j));
    if (c.J.size() == 2) {
      auto e = std::minmax(c.J[0], c.J[1]);
      if (e.first == e.second) throw ValidationError("center " + std::to_string(id) + " repeats a curve");
      if (!edges.erase(e)) throw ValidationError("satellite center on non-adjacent pair");
    }
    for (int j : c.J) edges.insert({j, id});
  }

  DualGraph g{{edges.begin(), edges.end()}, {}};
  std::size_t hostless = 0;
  for (const auto& b : p.branches) {
    if (b.mult < 1) throw ValidationError("branch multiplicity must be positive");
    if (!b.host) {
      if (n > 0) throw ValidationError("branch without host in a nonempty program");
      ++hostless;
      g.branch_hosts.push_back(0);
      continue;
    }
    g.branch_hosts.push_back(parse_exceptional(*b.host, n));
  }
  if (p.branches.empty()) throw ValidationError("program has no branches");
  if (hostless > 2) throw ValidationError("more than two branches through a smooth point");
  return g;
}

ResolutionData build_from_program(const BlowupProgram& p) {
  const DualGraph g = dual_graph(p);
  const auto n = p.centers.size();

  std::vector<std::int64_t> N(n), k(n);
  for (std::size_t i = 0; i < n; ++i) {
    N[i] = p.centers[i].m;
    k[i] = 1;
    for (int j : p.centers[i].J) {
      N[i] += N[static_cast<std::size_t>(j - 1)];
      k[i] += k[static_cast<std::size_t>(j - 1)];
    }
  }

  ResolutionData rd;
  rd.ambient_dim = 2;
  for (std::size_t i = 0; i < n; ++i) {
    if (N[i] < 1) throw ValidationError("component not in divisor of f: " + exceptional_id(i + 1));
    rd.components.push_back({exceptional_id(i + 1), ComponentKind::exceptional, N[i], k[i] + 1});
  }
  for (std::size_t b = 0; b < p.branches.size(); ++b)
    rd.components.push_back({strict_id(b + 1), ComponentKind::strict, p.branches[b].mult, 1});

  std::vector<int> valence(n + 1, 0);
  for (const auto& [a, b] : g.edges) ++valence[static_cast<std::size_t>(a)], ++valence[static_cast<std::size_t>(b)];
  for (int h : g.branch_hosts) ++valence[static_cast<std::size_t>(h)];

  for (std::size_t i = 1; i <= n; ++i) rd.strata.push_back({{exceptional_id(i)}, 2 - valence[i], std::nullopt});
  if (n == 0) {
    // Hostless branches are smooth transverse germs through the origin.
    const bool single = p.branches.size() == 1;
    for (std::size_t b = 1; b <= p.branches.size(); ++b) rd.strata.push_back({{strict_id(b)}, single ? 1 : 0, std::nullopt});
    if (!single) rd.strata.push_back({{strict_id(1), strict_id(2)}, 1, std::nullopt});
  } else {
    for (std::size_t b = 1; b <= p.branches.size(); ++b) rd.strata.push_back({{strict_id(b)}, 0, std::nullopt});
  }
  for (const auto& [a, b] : g.edges)
    rd.strata.push_back({{exceptional_id(static_cast<std::size_t>(a)), exceptional_id(static_cast<std::size_t>(b))}, 1, std::nullopt});
  for (std::size_t b = 0; b < p.branches.size(); ++b) {
    if (g.branch_hosts[b] == 0) continue;
    rd.strata.push_back({{exceptional_id(static_cast<std::size_t>(g.branch_hosts[b])), strict_id(b + 1)}, 1, std::nullopt});
  }
  rd.branches = p.branches;
  return rd;
}

IntersectionMatrix intersection_matrix(const BlowupProgram& p) {
  const DualGraph g = dual_graph(p);
  const auto n = p.centers.size();
  IntersectionMatrix M(n, n);
  for (std::size_t i = 0; i < n; ++i) M(i, i) = -1;
  for (const auto& c : p.centers)
    for (int j : c.J) M(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(j - 1)) -= 1;
  for (const auto& [a, b] : g.edges) {
    M(static_cast<std::size_t>(a - 1), static_cast<std::size_t>(b - 1)) += 1;
    M(static_cast<std::size_t>(b - 1), static_cast<std::size_t>(a - 1)) += 1;
  }
  return M;
}

}  // namespace zetalab
