#pragma once

// Dense univariate polynomials with integer or rational coefficients.
// Coefficients are stored lowest degree first with no trailing zeros; the
// zero polynomial has no coefficients.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "largeness/errors.hpp"
#include "largeness/integer.hpp"

namespace largeness {

template <class Coef>
struct Poly {
  std::vector<Coef> c;

  Poly() = default;
  explicit Poly(std::vector<Coef> coefs) : c(std::move(coefs)) { trim(); }

  static Poly constant(Coef v) { return Poly(std::vector<Coef>{std::move(v)}); }
  static Poly monomial(Coef v, std::size_t degree) {
    std::vector<Coef> cs(degree + 1, Coef(0));
    cs[degree] = std::move(v);
    return Poly(std::move(cs));
  }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }

  bool is_zero() const { return c.empty(); }
  long degree() const { return static_cast<long>(c.size()) - 1; }
  const Coef& lead() const { return c.back(); }
  Coef coef(std::size_t i) const { return i < c.size() ? c[i] : Coef(0); }

  Coef operator()(const Coef& x) const {
    Coef acc = 0;
    for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  friend Poly operator+(const Poly& a, const Poly& b) {
    std::vector<Coef> out(std::max(a.c.size(), b.c.size()), Coef(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) out[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) out[i] += b.c[i];
    return Poly(std::move(out));
  }
  friend Poly operator-(const Poly& a) {
    Poly r = a;
    for (auto& x : r.c) x = -x;
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) { return a + (-b); }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Coef> out(a.c.size() + b.c.size() - 1, Coef(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) {
      if (a.c[i] == 0) continue;
      for (std::size_t j = 0; j < b.c.size(); ++j) out[i + j] += a.c[i] * b.c[j];
    }
    return Poly(std::move(out));
  }
  friend Poly operator*(const Coef& s, const Poly& a) {
    Poly r = a;
    for (auto& x : r.c) x *= s;
    r.trim();
    return r;
  }

  Poly derivative() const {
    if (c.size() <= 1) return {};
    std::vector<Coef> out(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) out[i - 1] = c[i] * Coef(static_cast<long>(i));
    return Poly(std::move(out));
  }

  /// x^deg * p(1/x).
  Poly reversed() const {
    std::vector<Coef> out(c.rbegin(), c.rend());
    return Poly(std::move(out));
  }

  friend bool operator==(const Poly&, const Poly&) = default;
};

using IntPoly = Poly<Integer>;
using RatPoly = Poly<Rational>;

inline Integer content(const IntPoly& p) {
  Integer g = 0;
  for (const auto& x : p.c) g = igcd(g, x);
  return g;
}

/// p / content(p) with positive leading coefficient.
inline IntPoly primitive_part(const IntPoly& p) {
  if (p.is_zero()) return p;
  Integer g = content(p);
  if (p.lead() < 0) g = -g;
  IntPoly r = p;
  for (auto& x : r.c) x /= g;
  return r;
}

/// Pseudo-remainder of a by b: lc(b)^(deg a - deg b + 1) a mod b.
inline IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  if (b.is_zero()) throw DomainError("pseudo_remainder by zero");
  const long db = b.degree();
  while (!a.is_zero() && a.degree() >= db) {
    const long shift = a.degree() - db;
    const Integer la = a.lead();
    a = b.lead() * a;
    a = a - IntPoly::monomial(la, static_cast<std::size_t>(shift)) * b;
  }
  return a;
}

/// Greatest common divisor in Z[x], normalized with positive leading
/// coefficient (zero when both inputs are zero).
inline IntPoly gcd(IntPoly a, IntPoly b) {
  if (a.is_zero()) return content(b) * primitive_part(b);
  if (b.is_zero()) return content(a) * primitive_part(a);
  const Integer cont = igcd(content(a), content(b));
  a = primitive_part(a);
  b = primitive_part(b);
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_remainder(a, b);
    a = std::move(b);
    b = primitive_part(r);
  }
  return cont * primitive_part(a);
}

/// Exact quotient a / b in Z[x]; throws if b does not divide a.
inline IntPoly divide_exact(IntPoly a, const IntPoly& b) {
  if (b.is_zero()) throw DomainError("division by zero polynomial");
  if (a.is_zero()) return a;
  if (a.degree() < b.degree()) throw InternalError("divide_exact: not divisible");
  std::vector<Integer> q(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const long shift = a.degree() - b.degree();
    if (a.lead() % b.lead() != 0) throw InternalError("divide_exact: not divisible");
    const Integer f = a.lead() / b.lead();
    q[static_cast<std::size_t>(shift)] = f;
    a = a - IntPoly::monomial(f, static_cast<std::size_t>(shift)) * b;
  }
  if (!a.is_zero()) throw InternalError("divide_exact: not divisible");
  return IntPoly(std::move(q));
}

inline RatPoly to_rational(const IntPoly& p) {
  std::vector<Rational> cs;
  cs.reserve(p.c.size());
  for (const auto& x : p.c) cs.emplace_back(x);
  return RatPoly(std::move(cs));
}

/// Euclidean remainder over Q.
inline RatPoly remainder(RatPoly a, const RatPoly& b) {
  if (b.is_zero()) throw DomainError("remainder by zero polynomial");
  while (!a.is_zero() && a.degree() >= b.degree()) {
    const long shift = a.degree() - b.degree();
    const Rational f = a.lead() / b.lead();
    a = a - RatPoly::monomial(f, static_cast<std::size_t>(shift)) * b;
  }
  return a;
}

inline RatPoly gcd(RatPoly a, RatPoly b) {
  while (!b.is_zero()) {
    RatPoly r = remainder(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  const Rational l = a.lead();
  for (auto& x : a.c) x /= l;
  return a;
}

/// Human-readable form in the variable `var`, highest degree first.
template <class Coef>
std::string format_poly(const Poly<Coef>& p, const std::string& var = "t") {
  if (p.is_zero()) return "0";
  std::string out;
  for (long i = p.degree(); i >= 0; --i) {
    const Coef& a = p.c[static_cast<std::size_t>(i)];
    if (a == 0) continue;
    const bool neg = a < 0;
    const Coef mag = neg ? Coef(-a) : a;
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    if (i == 0 || mag != 1) out += mag.str();
    if (i >= 1) out += var;
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

}  // namespace largeness
