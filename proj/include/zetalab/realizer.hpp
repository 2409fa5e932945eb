#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "zetalab/cyclotomic.hpp"
#include "zetalab/curvette.hpp"
#include "zetalab/resolution.hpp"
#include "zetalab/zeta.hpp"

namespace zetalab {

/// E_j0 with d | N_j0 and chi_local < 0 (chi_local != 0 above dimension 2),
/// smallest N first, then declaration order. Throws NotRealizable.
std::string select_component(const ResolutionData& rd, std::int64_t d);

struct CongruenceSolution {
  std::vector<std::int64_t> base;
  std::int64_t modulus = 0;
};

/// Lexicographically smallest nonnegative m with
/// nu + sum coeffs[l] m[l] = -u N / d (mod N), target_turns = u/d, d | N.
CongruenceSolution solve_congruence(std::span<const std::int64_t> coeffs, std::int64_t nu, std::int64_t N,
                                    const BigRational& target_turns);

/// True iff -nu'_j0/N_j0 differs from -nu'_i/N_i for every other component
/// with N_i >= 1. m is indexed by exceptional position.
bool collision_filter(const ResolutionData& rd, const CurvetteMatrix& a, const std::string& j0,
                      std::span<const std::int64_t> m);

/// Residue at s0 = -nu'_j0/N_j0 for one general curvette per exceptional
/// host with exponent m[host] (plane case). Throws MathError("collision at
/// neighbor") when some neighbouring candidate coincides with s0.
BigRational residue_formula(const ResolutionData& rd, const CurvetteMatrix& a, const std::string& j0,
                            std::span<const std::int64_t> m);

/// Form with one term per positive exponent, hosts in exceptional order.
FormSpec form_from_exponents(const ResolutionData& rd, std::span<const std::int64_t> m, std::int64_t copies = 1);

struct SearchStats {
  long long candidates = 0;
  int radius = 0;
  std::int64_t copies = 1;
};

struct RealizationCertificate {
  RootOfUnity target;
  std::string j0;
  FormSpec form;
  BigRational s0;
  int pole_order = 0;
  BigRational residue;
  ZetaResult zeta;
  SearchStats search_stats;
};

/// Throws NotRealizable when the order of target is not an eigenvalue order
/// and RadiusExhausted when no candidate within radius K works.
RealizationCertificate realize(const ResolutionData& rd, const CurvetteMatrix& a, const RootOfUnity& target, int K = 4);

/// Recomputes the certificate from scratch; empty iff sound.
std::vector<std::string> check_certificate(const ResolutionData& rd, const CurvetteMatrix& a,
                                           const RealizationCertificate& cert);

struct PoleWitness {
  std::string form;
  BigRational s0;
  int order = 0;
};

struct PrincipleReport {
  /// Every pole exponentiates to a monodromy eigenvalue.
  bool poles_are_eigenvalues = true;
  /// Every monodromy eigenvalue is realized by some pole.
  bool eigenvalues_hit = true;
  std::set<std::int64_t> eigenvalue_orders;
  std::vector<PoleWitness> stray_poles;
  std::map<RootOfUnity, PoleWitness> witnesses;
  std::vector<RootOfUnity> missing;
};

PrincipleReport verify_principle(const ResolutionData& rd, const CurvetteMatrix& a,
                                 const std::vector<std::pair<std::string, FormSpec>>& forms);

}  // namespace zetalab
