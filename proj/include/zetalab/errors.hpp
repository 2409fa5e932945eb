#pragma once

#include <stdexcept>
#include <string>

namespace zetalab {

/// Malformed input documents, invalid parameters, broken data invariants.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arithmetic contract violations (zero denominators, order mismatches,
/// non-unimodular matrices).
class MathError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The requested eigenvalue cannot be realized from the supplied data.
class NotRealizable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The lattice search finished without an accepted candidate.
class RadiusExhausted : public std::runtime_error {
 public:
  RadiusExhausted(const std::string& what, long long candidates, int radius)
      : std::runtime_error(what), candidates_(candidates), radius_(radius) {}
  long long candidates() const { return candidates_; }
  int radius() const { return radius_; }

 private:
  long long candidates_;
  int radius_;
};

}  // namespace zetalab
