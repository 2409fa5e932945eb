#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "zetalab/blowup.hpp"
#include "zetalab/curvette.hpp"
#include "zetalab/resolution.hpp"

namespace zetalab {

/// build_from_program with the curvette matrix embedded.
ResolutionData resolve_program(const BlowupProgram& p);

/// Exceptional ids j where N_j != sum_b r_b a_{host(b),j}, one message each.
std::vector<std::string> n_consistency_violations(const BlowupProgram& p);

/// Replaces every m_i by the multiplicity that makes the branches curvettes
/// of their hosts.
BlowupProgram with_consistent_multiplicities(BlowupProgram p);

/// Minimal resolution of y^p - x^q (p < q coprime) by the Euclidean
/// algorithm. axis_hosts receives the hosts of {x=0} and {y=0}.
BlowupProgram pq_program(std::int64_t p, std::int64_t q, std::map<std::string, std::string>* axis_hosts = nullptr);

struct Family {
  std::string name;
  std::map<std::string, std::int64_t> params;
  std::optional<BlowupProgram> program;
  ResolutionData data;
  /// Coordinate hyperplane ("x", "y") -> component hosting it as a curvette,
  /// or the strict component it equals.
  std::map<std::string, std::string> axes;
};

const std::vector<std::string>& family_names();
/// Parameter names in positional order.
std::vector<std::string> family_params(std::string_view name);
/// Throws ValidationError naming the violated constraint.
Family make_family(std::string_view name, const std::map<std::string, std::int64_t>& params);

/// x^ex y^ey ... dx_1 ^ ... ^ dx_n through the axis hosts.
FormSpec monomial_form(const Family& fam, const std::map<std::string, std::int64_t>& exponents);

/// "trivial", "omega_b:b=..", "omega_i:i=..", "omega_ij:i=..,j=..".
FormSpec named_form(const Family& fam, std::string_view selector);

/// Form sets used by the worked examples, labelled by their selector.
std::vector<std::pair<std::string, FormSpec>> named_form_set(const Family& fam, std::string_view set);
std::vector<std::string> form_set_names(std::string_view family);

}  // namespace zetalab
