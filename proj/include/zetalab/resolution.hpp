#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "zetalab/int_matrix.hpp"

namespace zetalab {

enum class ComponentKind { exceptional, strict, curvette };

std::string_view to_string(ComponentKind kind);
/// Throws ValidationError on an unknown name.
ComponentKind component_kind_from(std::string_view name);

/// A divisor E_i of the resolution with its numerical data: N is the
/// multiplicity in div(pi^* f), nu - 1 the multiplicity in div(pi^* omega).
struct Component {
  std::string id;
  ComponentKind kind = ComponentKind::exceptional;
  std::int64_t N = 0;
  std::int64_t nu = 1;
  friend bool operator==(const Component&, const Component&) = default;
};

/// E°_I for the index set I = components, with its local Euler
/// characteristic (intersected with the fibre over the base point) and an
/// optional global one.
struct Stratum {
  std::vector<std::string> components;
  std::int64_t chi_local = 0;
  std::optional<std::int64_t> chi_global;
  friend bool operator==(const Stratum&, const Stratum&) = default;
};

/// A strict-transform branch attached as a curvette of its host. A branch
/// without host passes through the base point of an empty blow-up program.
struct Branch {
  std::optional<std::string> host;
  std::int64_t mult = 1;
  friend bool operator==(const Branch&, const Branch&) = default;
};

/// chi[k-1] = chi(E°_I ∩ H_1 ∩ ... ∩ H_k ∩ pi^{-1}(b)) for k general members
/// H_1..H_k of the hypersurface family hosted on an exceptional component.
struct HypersurfaceSection {
  std::vector<std::string> components;
  std::vector<std::int64_t> chi;
  friend bool operator==(const HypersurfaceSection&, const HypersurfaceSection&) = default;
};

/// Incidence data of the hypersurface family C_host with the strata. Only
/// needed above dimension two; plane curvettes are placed generically.
struct Hypersurface {
  std::string host;
  std::vector<HypersurfaceSection> sections;
  friend bool operator==(const Hypersurface&, const Hypersurface&) = default;
};

struct ResolutionData {
  int ambient_dim = 2;
  std::vector<Component> components;
  std::vector<Stratum> strata;
  /// Rows and columns follow the exceptional components in declaration order.
  std::optional<IntMatrix> curvette_matrix;
  /// Parallel to the strict components in declaration order.
  std::vector<Branch> branches;
  std::vector<Hypersurface> hypersurfaces;

  friend bool operator==(const ResolutionData&, const ResolutionData&) = default;

  std::optional<std::size_t> index_of(std::string_view id) const;
  /// Throws ValidationError for an unknown id.
  const Component& component(std::string_view id) const;
  std::vector<std::size_t> indices_of(ComponentKind kind) const;
  /// Position of an exceptional component among the exceptional ones.
  std::optional<std::size_t> exceptional_position(std::string_view id) const;

  /// Declaration indices of the given ids, sorted. Throws on unknown ids.
  std::vector<std::size_t> key_of(const std::vector<std::string>& ids) const;
  const Stratum* find_stratum(const std::vector<std::string>& ids) const;
  Stratum* find_stratum(const std::vector<std::string>& ids);
  /// chi_local of the singleton stratum, 0 if absent.
  std::int64_t singleton_chi(std::string_view id) const;
  /// Reorders stratum members into declaration order.
  void canonicalize();

  /// gcd of N over the strict components (0 if there are none).
  std::int64_t strict_gcd() const;
};

struct FormTerm {
  std::string host;
  std::int64_t m = 0;
  std::int64_t copies = 1;
  friend bool operator==(const FormTerm&, const FormTerm&) = default;
};

/// omega = (prod g_host^m) dx_1 ^ ... ^ dx_n. A term on an exceptional host
/// multiplies by equations of `copies` general curvettes of that host whose
/// exponents add up to m; a term on a strict host multiplies by the reduced
/// equation of that branch.
struct FormSpec {
  std::vector<FormTerm> terms;
  friend bool operator==(const FormSpec&, const FormSpec&) = default;
};

/// Empty iff all invariants of the data model hold.
std::vector<std::string> validate(const ResolutionData& rd);

}  // namespace zetalab
