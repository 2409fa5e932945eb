#include "zetalab/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "zetalab/errors.hpp"

namespace zetalab {

UniPoly::UniPoly(std::initializer_list<BigRational> coeffs) : c_(coeffs) { trim(); }
UniPoly::UniPoly(std::vector<BigRational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const BigRational& c) { return UniPoly{c}; }
UniPoly UniPoly::linear(const BigRational& a, const BigRational& b) { return UniPoly{a, b}; }

void UniPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

BigRational UniPoly::eval(const BigRational& s) const {
  BigRational acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * s + *it;
  return acc;
}

UniPoly UniPoly::derivative() const {
  std::vector<BigRational> d;
  for (std::size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * BigRational(static_cast<long>(k)));
  return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return *this;
  return *this * leading().inverse();
}

UniPoly UniPoly::pow(unsigned e) const {
  UniPoly result{1};
  for (unsigned i = 0; i < e; ++i) result = result * *this;
  return result;
}

std::pair<UniPoly, UniPoly> UniPoly::divmod(const UniPoly& divisor) const {
  if (divisor.is_zero()) throw MathError("division by zero polynomial");
  std::vector<BigRational> rem = c_;
  int dd = divisor.degree();
  if (degree() < dd) return {UniPoly(), *this};
  std::vector<BigRational> quot(static_cast<std::size_t>(degree() - dd + 1));
  BigRational lead_inv = divisor.leading().inverse();
  for (int k = degree() - dd; k >= 0; --k) {
    BigRational q = rem[static_cast<std::size_t>(k + dd)] * lead_inv;
    quot[static_cast<std::size_t>(k)] = q;
    if (q.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(k + j)] -= q * divisor.c_[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(dd));
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const BigRational& k) {
  for (auto& c : c_) c *= k;
  trim();
  return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
  if (a.is_zero() || b.is_zero()) return UniPoly();
  std::vector<BigRational> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return UniPoly(std::move(out));
}

std::string UniPoly::str(char var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const BigRational& c = c_[k];
    if (c.is_zero()) continue;
    BigRational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << "-";
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    bool unit = mag == BigRational(1);
    if (k == 0 || !unit) os << mag.str();
    if (k >= 1) {
      if (!unit) os << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  return os.str();
}

UniPoly gcd(UniPoly a, UniPoly b) {
  while (!b.is_zero()) {
    UniPoly r = a.divmod(b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

RationalFunction rf_normalize(const UniPoly& num, const UniPoly& den) {
  if (den.is_zero()) throw MathError("division by zero polynomial");
  RationalFunction r;
  if (num.is_zero()) return r;
  UniPoly g = gcd(num, den);
  UniPoly n = num.divmod(g).first;
  UniPoly d = den.divmod(g).first;
  BigRational lead = d.leading();
  r.num_ = n * lead.inverse();
  r.den_ = d.monic();
  return r;
}

BigRational RationalFunction::eval(const BigRational& s) const {
  BigRational d = den_.eval(s);
  if (d.is_zero()) throw MathError("evaluation at a pole: " + s.str());
  return num_.eval(s) / d;
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  return rf_normalize(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}
RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
  return rf_normalize(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}
RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  return rf_normalize(a.num_ * b.num_, a.den_ * b.den_);
}
RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) throw MathError("division by zero polynomial");
  return rf_normalize(a.num_ * b.den_, a.den_ * b.num_);
}

std::string RationalFunction::str(char var) const {
  if (den_ == UniPoly{1}) return num_.str(var);
  return "(" + num_.str(var) + ")/(" + den_.str(var) + ")";
}

int root_multiplicity(const UniPoly& p, const BigRational& s0) {
  if (p.is_zero()) throw MathError("multiplicity of a root of the zero polynomial");
  UniPoly lin = UniPoly::linear(-s0, BigRational(1));
  UniPoly cur = p;
  int k = 0;
  for (;;) {
    auto [q, r] = cur.divmod(lin);
    if (!r.is_zero()) return k;
    cur = std::move(q);
    ++k;
  }
}

namespace {

// Number of sign changes of a Sturm sequence evaluated at x, zeros skipped.
int sign_variations(const std::vector<UniPoly>& chain, const BigRational& x) {
  int changes = 0;
  int last = 0;
  for (const auto& p : chain) {
    int s = p.eval(x).sign();
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

std::vector<UniPoly> sturm_chain(const UniPoly& p) {
  std::vector<UniPoly> chain{p, p.derivative()};
  while (!chain.back().is_zero()) {
    UniPoly r = chain[chain.size() - 2].divmod(chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

}  // namespace

std::vector<Pole> rf_poles(const RationalFunction& r) {
  const UniPoly& den = r.denominator();
  if (den.degree() <= 0) return {};

  // Square-free part, scaled to a primitive integer polynomial with leading
  // coefficient L. Every rational root has a denominator dividing L, so the
  // substitution s = x / L maps the roots to integers, which are isolated by
  // Sturm counting on integer intervals.
  UniPoly sqfree = den.divmod(gcd(den, den.derivative())).first.monic();
  BigInt lcm_den = 1;
  for (const auto& c : sqfree.coefficients()) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.denominator().get_mpz_t());
  std::vector<BigInt> ints;
  BigInt content = 0;
  for (const auto& c : sqfree.coefficients()) {
    BigInt v = c.numerator() * (lcm_den / c.denominator());
    ints.push_back(v);
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), v.get_mpz_t());
  }
  for (auto& v : ints) v /= content;
  const BigInt lead = ints.back();
  const int n = static_cast<int>(ints.size()) - 1;

  // H(x) = L^(n-1) G(x/L), monic with integer coefficients.
  std::vector<BigRational> h(ints.size());
  for (int k = 0; k <= n; ++k) {
    BigInt scale;
    mpz_pow_ui(scale.get_mpz_t(), lead.get_mpz_t(), static_cast<unsigned long>(n - k));
    h[static_cast<std::size_t>(k)] = BigRational(BigInt(ints[static_cast<std::size_t>(k)] * scale / lead));
  }
  UniPoly hp(std::move(h));

  // Cauchy bound for integer roots.
  BigInt bound = 1;
  for (int k = 0; k < n; ++k) {
    BigInt a = abs(hp.coeff(static_cast<std::size_t>(k)).numerator());
    if (a + 1 > bound) bound = a + 1;
  }

  auto chain = sturm_chain(hp);
  std::vector<BigInt> roots;
  // Roots in the half-open integer interval (lo, hi].
  std::function<void(const BigInt&, const BigInt&, int, int)> isolate =
      [&](const BigInt& lo, const BigInt& hi, int vlo, int vhi) {
        int count = vlo - vhi;
        if (count <= 0) return;
        if (hi - lo == 1) {
          if (count != 1 || !hp.eval(BigRational(hi)).is_zero()) throw MathError("non-linear denominator factor");
          roots.push_back(hi);
          return;
        }
        BigInt mid = lo + (hi - lo) / 2;
        int vmid = sign_variations(chain, BigRational(mid));
        isolate(lo, mid, vlo, vmid);
        isolate(mid, hi, vmid, vhi);
      };
  BigInt lo = -bound - 1;
  isolate(lo, bound, sign_variations(chain, BigRational(lo)), sign_variations(chain, BigRational(bound)));
  if (static_cast<int>(roots.size()) != n) throw MathError("non-linear denominator factor");

  std::vector<Pole> poles;
  for (const auto& x : roots) {
    BigRational s0(x, lead);
    poles.push_back({s0, root_multiplicity(den, s0)});
  }
  std::sort(poles.begin(), poles.end(), [](const Pole& a, const Pole& b) { return a.location < b.location; });
  return poles;
}

BigRational rf_laurent_leading(const RationalFunction& r, const BigRational& s0, int k) {
  if (k < 1) throw MathError("pole order mismatch");
  UniPoly den = r.denominator();
  UniPoly lin = UniPoly::linear(-s0, BigRational(1));
  for (int i = 0; i < k; ++i) {
    auto [q, rem] = den.divmod(lin);
    if (!rem.is_zero()) throw MathError("pole order mismatch");
    den = std::move(q);
  }
  BigRational rest = den.eval(s0);
  if (rest.is_zero()) throw MathError("pole order mismatch");
  return r.numerator().eval(s0) / rest;
}

}  // namespace zetalab
