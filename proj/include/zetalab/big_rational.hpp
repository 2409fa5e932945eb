#pragma once

#include <compare>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace zetalab {

using BigInt = mpz_class;

/// Arbitrary precision rational, always in lowest terms with a positive
/// denominator. Thin value wrapper over GMP's mpq_class.
class BigRational {
 public:
  BigRational() = default;
  BigRational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  BigRational(int v) : q_(v) {}   // NOLINT(google-explicit-constructor)
  BigRational(std::int64_t num, std::int64_t den);
  BigRational(const BigInt& num, const BigInt& den);
  explicit BigRational(const BigInt& v) : q_(v) {}
  explicit BigRational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Accepts "p", "-p" or "p/q" with q != 0.
  static BigRational parse(std::string_view text);

  const mpq_class& value() const { return q_; }
  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  int sign() const { return sgn(q_); }

  /// Largest integer not above this value.
  BigInt floor() const;
  /// Fractional part in [0, 1).
  BigRational frac() const;
  BigRational abs() const { return BigRational(mpq_class(::abs(q_))); }
  BigRational inverse() const;

  /// "p" when the denominator is one, otherwise "p/q".
  std::string str() const;

  BigRational& operator+=(const BigRational& o) { q_ += o.q_; return *this; }
  BigRational& operator-=(const BigRational& o) { q_ -= o.q_; return *this; }
  BigRational& operator*=(const BigRational& o) { q_ *= o.q_; return *this; }
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  friend BigRational operator-(const BigRational& a) { return BigRational(mpq_class(-a.q_)); }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.str(); }

 private:
  mpq_class q_;
};

/// Converts a GMP integer known to fit into 64 bits; throws MathError otherwise.
std::int64_t to_int64(const BigInt& v);

}  // namespace zetalab
