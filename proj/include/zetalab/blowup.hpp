#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "zetalab/int_matrix.hpp"
#include "zetalab/resolution.hpp"

namespace zetalab {

/// Point blow-up creating E_i. J lists the 1-based ids of the earlier
/// exceptional curves through the center; m is the multiplicity of the
/// strict transform of f there.
struct Center {
  std::vector<int> J;
  std::int64_t m = 0;
  friend bool operator==(const Center&, const Center&) = default;
};

/// Branch hosts are exceptional ids "E<k>".
struct BlowupProgram {
  std::vector<Center> centers;
  std::vector<Branch> branches;
  friend bool operator==(const BlowupProgram&, const BlowupProgram&) = default;
};

/// E_i . E_j on the final surface, indexed by exceptional curve.
using IntersectionMatrix = IntMatrix;

std::string exceptional_id(std::size_t one_based);
std::string strict_id(std::size_t one_based);

/// Final dual graph among exceptional curves (1-based pairs i < j) and the
/// host index of every branch (0 when hostless).
struct DualGraph {
  std::vector<std::pair<int, int>> edges;
  std::vector<int> branch_hosts;
};

/// Checks the program invariants and replays the graph updates.
/// Throws ValidationError.
DualGraph dual_graph(const BlowupProgram& p);

ResolutionData build_from_program(const BlowupProgram& p);

IntersectionMatrix intersection_matrix(const BlowupProgram& p);

}  // namespace zetalab
