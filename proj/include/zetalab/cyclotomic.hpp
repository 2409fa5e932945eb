#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "zetalab/big_rational.hpp"

namespace zetalab {

/// A root of unity exp(2*pi*i*e) stored as its reduced fraction of a turn
/// e in [0, 1).
class RootOfUnity {
 public:
  RootOfUnity() = default;
  /// Reduces any rational modulo 1.
  explicit RootOfUnity(const BigRational& turns) : turns_(turns.frac()) {}
  static RootOfUnity from_fraction(std::int64_t u, std::int64_t d) { return RootOfUnity(BigRational(u, d)); }
  /// The root exp(2*pi*i*s0).
  static RootOfUnity exp_of(const BigRational& s0) { return RootOfUnity(s0); }

  const BigRational& turns() const { return turns_; }
  std::int64_t order() const { return to_int64(turns_.denominator()); }
  std::string str() const { return turns_.str(); }

  friend bool operator==(const RootOfUnity&, const RootOfUnity&) = default;
  friend auto operator<=>(const RootOfUnity& a, const RootOfUnity& b) { return a.turns_ <=> b.turns_; }

 private:
  BigRational turns_;
};

/// Formal product prod_N (t^N - 1)^{e_N}. Zero exponents are never stored.
class CyclotomicDivisor {
 public:
  CyclotomicDivisor() = default;

  /// Multiplies in (t^N - 1)^e.
  void add(std::int64_t N, std::int64_t e);
  void merge(const CyclotomicDivisor& other);

  const std::map<std::int64_t, std::int64_t>& factors() const { return factors_; }
  bool empty() const { return factors_.empty(); }
  /// sum_N e_N * N, the degree of the divisor.
  std::int64_t degree() const;

  friend bool operator==(const CyclotomicDivisor&, const CyclotomicDivisor&) = default;
  std::string str() const;

 private:
  std::map<std::int64_t, std::int64_t> factors_;
};

/// Order of vanishing of z at any primitive d-th root of unity (negative
/// values are poles).
std::int64_t cyc_order_at(const CyclotomicDivisor& z, std::int64_t d);

/// Positive divisors of n in increasing order.
std::vector<std::int64_t> divisors_of(std::int64_t n);

}  // namespace zetalab
