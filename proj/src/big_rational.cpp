#include "zetalab/big_rational.hpp"

#include <string>

#include "zetalab/errors.hpp"

namespace zetalab {

BigRational::BigRational(std::int64_t num, std::int64_t den)
    : BigRational(BigInt(std::to_string(num)), BigInt(std::to_string(den))) {}

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw MathError("division by zero");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
  std::string s(text);
  auto slash = s.find('/');
  auto parse_int = [&](const std::string& part) {
    if (part.empty()) throw ValidationError("malformed rational \"" + s + "\"");
    std::size_t start = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (start == part.size()) throw ValidationError("malformed rational \"" + s + "\"");
    for (std::size_t i = start; i < part.size(); ++i) {
      if (part[i] < '0' || part[i] > '9') throw ValidationError("malformed rational \"" + s + "\"");
    }
    return BigInt(part[0] == '+' ? part.substr(1) : part);
  };
  if (slash == std::string::npos) return BigRational(parse_int(s));
  BigInt den = parse_int(s.substr(slash + 1));
  if (den == 0) throw ValidationError("zero denominator in \"" + s + "\"");
  return BigRational(parse_int(s.substr(0, slash)), den);
}

BigInt BigRational::floor() const {
  BigInt r;
  mpz_fdiv_q(r.get_mpz_t(), q_.get_num_mpz_t(), q_.get_den_mpz_t());
  return r;
}

BigRational BigRational::frac() const { return *this - BigRational(floor()); }

BigRational BigRational::inverse() const {
  if (is_zero()) throw MathError("division by zero");
  return BigRational(mpq_class(1 / q_));
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw MathError("division by zero");
  q_ /= o.q_;
  return *this;
}

std::string BigRational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::int64_t to_int64(const BigInt& v) {
  if (!mpz_fits_slong_p(v.get_mpz_t())) throw MathError("integer overflow: " + v.get_str());
  return static_cast<std::int64_t>(v.get_si());
}

}  // namespace zetalab
