#pragma once

#include <cstddef>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "zetalab/big_rational.hpp"

namespace zetalab {

/// Dense univariate polynomial over the rationals. Coefficients are stored
/// low degree first; trailing zeros are never kept, so the zero polynomial
/// has no coefficients.
class UniPoly {
 public:
  UniPoly() = default;
  UniPoly(std::initializer_list<BigRational> coeffs);
  explicit UniPoly(std::vector<BigRational> coeffs);
  static UniPoly constant(const BigRational& c);
  /// a + b*s
  static UniPoly linear(const BigRational& a, const BigRational& b);

  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<BigRational>& coefficients() const { return c_; }
  BigRational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : BigRational(); }
  BigRational leading() const { return c_.empty() ? BigRational() : c_.back(); }

  BigRational eval(const BigRational& s) const;
  UniPoly derivative() const;
  UniPoly monic() const;
  UniPoly pow(unsigned e) const;

  /// Euclidean division; throws MathError on a zero divisor.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const BigRational& k);
  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(UniPoly a, const BigRational& k) { return a *= k; }
  friend UniPoly operator-(const UniPoly& a) { return a * BigRational(-1); }
  friend bool operator==(const UniPoly& a, const UniPoly& b) = default;

  std::string str(char var = 's') const;
  friend std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.str(); }

 private:
  void trim();
  std::vector<BigRational> c_;
};

/// Monic gcd (zero only when both inputs are zero).
UniPoly gcd(UniPoly a, UniPoly b);

/// Rational function kept in normal form: coprime numerator and monic
/// denominator. Construct through rf_normalize.
class RationalFunction {
 public:
  RationalFunction() : num_(), den_(UniPoly{1}) {}
  RationalFunction(const BigRational& c)  // NOLINT(google-explicit-constructor)
      : num_(UniPoly::constant(c)), den_(UniPoly{1}) {}

  const UniPoly& numerator() const { return num_; }
  const UniPoly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  /// Throws MathError when s is a root of the denominator.
  BigRational eval(const BigRational& s) const;

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) = default;

  std::string str(char var = 's') const;
  friend std::ostream& operator<<(std::ostream& os, const RationalFunction& r) { return os << r.str(); }

 private:
  friend RationalFunction rf_normalize(const UniPoly& num, const UniPoly& den);
  UniPoly num_;
  UniPoly den_;
};

/// Cancels common factors and makes the denominator monic.
/// Throws MathError("division by zero polynomial") if den is zero.
RationalFunction rf_normalize(const UniPoly& num, const UniPoly& den);

struct Pole {
  BigRational location;
  int order = 0;
  friend bool operator==(const Pole&, const Pole&) = default;
};

/// All rational roots of the denominator with multiplicities, ascending.
/// Throws MathError("non-linear denominator factor") if the denominator does
/// not split into rational linear factors.
std::vector<Pole> rf_poles(const RationalFunction& r);

/// Coefficient of (s - s0)^(-k) in the Laurent expansion at s0. The pole at
/// s0 must have order exactly k, else MathError("pole order mismatch").
BigRational rf_laurent_leading(const RationalFunction& r, const BigRational& s0, int k);

/// Multiplicity of s0 as a root of p (0 if not a root). p must be nonzero.
int root_multiplicity(const UniPoly& p, const BigRational& s0);

}  // namespace zetalab
