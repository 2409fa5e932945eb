#include "zetalab/cyclotomic.hpp"

#include <algorithm>

#include "zetalab/errors.hpp"

namespace zetalab {

void CyclotomicDivisor::add(std::int64_t N, std::int64_t e) {
  if (N < 1) throw MathError("cyclotomic factor with non-positive N");
  if (e == 0) return;
  auto& slot = factors_[N];
  slot += e;
  if (slot == 0) factors_.erase(N);
}

void CyclotomicDivisor::merge(const CyclotomicDivisor& other) {
  for (const auto& [N, e] : other.factors_) add(N, e);
}

std::int64_t CyclotomicDivisor::degree() const {
  std::int64_t deg = 0;
  for (const auto& [N, e] : factors_) deg += N * e;
  return deg;
}

std::string CyclotomicDivisor::str() const {
  if (factors_.empty()) return "1";
  std::string out;
  for (const auto& [N, e] : factors_) {
    if (!out.empty()) out += "*";
    out += "(t^" + std::to_string(N) + "-1)";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

std::int64_t cyc_order_at(const CyclotomicDivisor& z, std::int64_t d) {
  if (d < 1) throw MathError("root of unity order must be positive");
  std::int64_t order = 0;
  for (const auto& [N, e] : z.factors()) {
    if (N % d == 0) order += e;
  }
  return order;
}

std::vector<std::int64_t> divisors_of(std::int64_t n) {
  std::vector<std::int64_t> out;
  if (n < 1) return out;
  for (std::int64_t k = 1; k * k <= n; ++k) {
    if (n % k != 0) continue;
    out.push_back(k);
    if (k != n / k) out.push_back(n / k);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace zetalab
