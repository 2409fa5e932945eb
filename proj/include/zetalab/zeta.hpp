#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "zetalab/cyclotomic.hpp"
#include "zetalab/curvette.hpp"
#include "zetalab/polynomial.hpp"
#include "zetalab/resolution.hpp"

namespace zetalab {

/// prod_i (t^{N_i} - 1)^{chi_local(E°_i)} over components with N_i >= 1.
CyclotomicDivisor acampo_zeta(const ResolutionData& rd);

struct EigenvalueReport {
  CyclotomicDivisor zeta;
  /// d -> order of zeta at a primitive d-th root, for every divisor d of some N_i.
  std::map<std::int64_t, std::int64_t> orders;
  std::set<std::int64_t> eigenvalue_orders;
};

EigenvalueReport eigenvalue_report(const ResolutionData& rd);

/// All primitive roots of unity whose order is an eigenvalue order.
std::vector<RootOfUnity> eigenvalues(const EigenvalueReport& report);

/// Twists the numerical data by the form: nu shifts through the curvette
/// matrix and the strata gain the general curvettes the form is built from.
ResolutionData apply_form(const ResolutionData& rd, const CurvetteMatrix& a, const FormSpec& w);

/// The factor (nu + N s)^power.
struct LinearFactor {
  std::int64_t nu = 0;
  std::int64_t N = 0;
  int power = 1;
  friend bool operator==(const LinearFactor&, const LinearFactor&) = default;
};

struct PoleInfo {
  BigRational s0;
  int order = 0;
  /// Coefficient of (s - s0)^(-order); the residue for simple poles.
  BigRational leading;
  /// Components whose candidate pole -nu/N equals s0.
  std::vector<std::string> components;
};

/// rf = factored_numerator / prod factored_denominator.
struct ZetaResult {
  RationalFunction rf;
  UniPoly factored_numerator;
  std::vector<LinearFactor> factored_denominator;
  std::vector<PoleInfo> poles;

  const PoleInfo* pole_at(const BigRational& s0) const;
};

/// Exact strata sum. local=false uses chi_global and requires it everywhere.
/// Throws ValidationError on invalid data.
ZetaResult topological_zeta(const ResolutionData& rd, bool local = true);

/// Strata sum as a normalized rational function, without pole analysis.
RationalFunction strata_sum(const ResolutionData& rd, bool local = true);

}  // namespace zetalab
