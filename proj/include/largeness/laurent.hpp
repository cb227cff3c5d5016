#pragma once

// One-variable Laurent polynomials over Z or Z/p.

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "largeness/errors.hpp"
#include "largeness/integer.hpp"
#include "largeness/polynomial.hpp"

namespace largeness {

/// sum c[i] t^(low + i). Coefficients are trimmed at both ends, so the zero
/// polynomial has no coefficients. A nonzero modulus means coefficients are
/// residues in [0, modulus).
class LaurentPoly {
 public:
  LaurentPoly() = default;
  LaurentPoly(long low, std::vector<Integer> coefs, Integer modulus = 0)
      : low_(low), c_(std::move(coefs)), mod_(std::move(modulus)) {
    normalize();
  }

  static LaurentPoly constant(Integer v, Integer modulus = 0) {
    return LaurentPoly(0, {std::move(v)}, std::move(modulus));
  }
  static LaurentPoly monomial(Integer v, long exponent, Integer modulus = 0) {
    return LaurentPoly(exponent, {std::move(v)}, std::move(modulus));
  }
  static LaurentPoly from_terms(const std::map<long, Integer>& terms, Integer modulus = 0) {
    if (terms.empty()) return LaurentPoly(0, {}, std::move(modulus));
    const long lo = terms.begin()->first;
    std::vector<Integer> c(static_cast<std::size_t>(terms.rbegin()->first - lo + 1), 0);
    for (const auto& [e, v] : terms) c[static_cast<std::size_t>(e - lo)] += v;
    return LaurentPoly(lo, std::move(c), std::move(modulus));
  }
  static LaurentPoly from_poly(const IntPoly& p) { return LaurentPoly(0, p.c); }

  bool is_zero() const { return c_.empty(); }
  long low() const { return low_; }
  long high() const { return low_ + static_cast<long>(c_.size()) - 1; }
  const std::vector<Integer>& coefficients() const { return c_; }
  const Integer& modulus() const { return mod_; }

  Integer coef(long e) const {
    if (e < low_ || e > high()) return 0;
    return c_[static_cast<std::size_t>(e - low_)];
  }

  /// Terms as exponent -> coefficient.
  std::map<long, Integer> terms() const {
    std::map<long, Integer> out;
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (c_[i] != 0) out[low_ + static_cast<long>(i)] = c_[i];
    }
    return out;
  }

  Integer eval_at_one() const {
    Integer s = 0;
    for (const auto& x : c_) s += x;
    return reduce(s);
  }

  Integer content() const {
    Integer g = 0;
    for (const auto& x : c_) g = igcd(g, x);
    return g;
  }

  /// Polynomial part t^-low * this.
  IntPoly shifted_poly() const { return IntPoly(c_); }

  /// Multiply by a unit +-t^k so that the lowest exponent is 0 and the
  /// leading coefficient is positive; over Z/p the result is monic.
  LaurentPoly canonical() const {
    if (is_zero()) return LaurentPoly(0, {}, mod_);
    std::vector<Integer> c = c_;
    if (mod_ == 0) {
      if (c.back() < 0) {
        for (auto& x : c) x = -x;
      }
    } else {
      const Integer inv = inverse_mod(c.back(), mod_);
      for (auto& x : c) x = (x * inv) % mod_;
    }
    return LaurentPoly(0, std::move(c), mod_);
  }

  bool is_unit() const {
    if (c_.size() != 1) return false;
    if (mod_ == 0) return c_[0] == 1 || c_[0] == -1;
    return c_[0] != 0;
  }

  /// Coefficientwise reduction into Z/p.
  LaurentPoly reduce_mod(const Integer& p) const {
    if (p < 2) throw DomainError("reduce_mod: modulus must be at least 2");
    return LaurentPoly(low_, c_, p);
  }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return b.with_mod(a.mod_);
    if (b.is_zero()) return a.with_mod(b.mod_);
    const long lo = std::min(a.low_, b.low_);
    const long hi = std::max(a.high(), b.high());
    std::vector<Integer> c(static_cast<std::size_t>(hi - lo + 1), 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) c[static_cast<std::size_t>(a.low_ - lo) + i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) c[static_cast<std::size_t>(b.low_ - lo) + i] += b.c_[i];
    return LaurentPoly(lo, std::move(c), common_mod(a, b));
  }
  friend LaurentPoly operator-(const LaurentPoly& a) {
    std::vector<Integer> c = a.c_;
    for (auto& x : c) x = -x;
    return LaurentPoly(a.low_, std::move(c), a.mod_);
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    const Integer m = common_mod(a, b);
    if (a.is_zero() || b.is_zero()) return LaurentPoly(0, {}, m);
    std::vector<Integer> c(a.c_.size() + b.c_.size() - 1, 0);
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == 0) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return LaurentPoly(a.low_ + b.low_, std::move(c), m);
  }
  LaurentPoly& operator+=(const LaurentPoly& b) { return *this = *this + b; }

  /// Structural equality; compare canonical() forms for equality up to units.
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  std::string to_string(const std::string& var = "t") const {
    if (is_zero()) return "0";
    std::string out;
    for (long e = high(); e >= low_; --e) {
      const Integer& a = c_[static_cast<std::size_t>(e - low_)];
      if (a == 0) continue;
      const bool neg = a < 0;
      const Integer mag = neg ? Integer(-a) : a;
      if (out.empty()) {
        if (neg) out += "-";
      } else {
        out += neg ? " - " : " + ";
      }
      if (e == 0 || mag != 1) out += mag.str();
      if (e != 0) out += var;
      if (e != 0 && e != 1) out += "^" + std::to_string(e);
    }
    return out;
  }

  static Integer inverse_mod(Integer a, const Integer& m) {
    a %= m;
    if (a < 0) a += m;
    Integer g = m, x = 0, x1 = 1, r = a;
    while (r != 0) {
      const Integer q = g / r;
      Integer t = g - q * r;
      g = r;
      r = t;
      t = x - q * x1;
      x = x1;
      x1 = t;
    }
    if (g != 1) throw DomainError("inverse_mod: not invertible");
    x %= m;
    if (x < 0) x += m;
    return x;
  }

 private:
  static Integer common_mod(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.mod_ != 0 && b.mod_ != 0 && a.mod_ != b.mod_)
      throw DomainError("LaurentPoly: mixed moduli");
    return a.mod_ != 0 ? a.mod_ : b.mod_;
  }
  LaurentPoly with_mod(const Integer& m) const {
    if (m == 0 || m == mod_) return *this;
    return LaurentPoly(low_, c_, m);
  }
  Integer reduce(Integer x) const {
    if (mod_ == 0) return x;
    x %= mod_;
    if (x < 0) x += mod_;
    return x;
  }
  void normalize() {
    if (mod_ != 0) {
      for (auto& x : c_) x = reduce(x);
    }
    std::size_t first = 0;
    while (first < c_.size() && c_[first] == 0) ++first;
    if (first == c_.size()) {
      c_.clear();
      low_ = 0;
      return;
    }
    while (c_.back() == 0) c_.pop_back();
    if (first) {
      c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(first));
      low_ += static_cast<long>(first);
    }
  }

  long low_ = 0;
  std::vector<Integer> c_;
  Integer mod_ = 0;
};

/// gcd in Z[t, t^-1], returned in canonical form.
inline LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
  if (a.modulus() != 0 || b.modulus() != 0) throw DomainError("gcd: integer polynomials only");
  if (a.is_zero()) return b.canonical();
  if (b.is_zero()) return a.canonical();
  return LaurentPoly::from_poly(gcd(a.shifted_poly(), b.shifted_poly())).canonical();
}

}  // namespace largeness
