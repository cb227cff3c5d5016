#pragma once

// Exact root location for integer polynomials relative to the unit circle.
//
// The Cayley map z = (w - i)/(w + i) sends the real line to the unit circle
// and the upper half plane to the open disk. Writing
//   q(w) = sum a_k (w - i)^k (w + i)^(n - k) = A(w) + i B(w)
// roots of p on the circle become common real roots of A and B, and the
// number of roots inside the disk is (n - Ind(B/A)) / 2, with the Cauchy
// index read off a Sturm sequence.

#include <utility>
#include <vector>

#include "largeness/errors.hpp"
#include "largeness/integer.hpp"
#include "largeness/polynomial.hpp"

namespace largeness {

namespace detail {

/// Polynomial with Gaussian-integer coefficients as (real, imaginary).
using GaussPoly = std::pair<IntPoly, IntPoly>;

inline GaussPoly gauss_mul(const GaussPoly& a, const GaussPoly& b) {
  return {a.first * b.first - a.second * b.second, a.first * b.second + a.second * b.first};
}

inline int sign_at_infinity(const RatPoly& p, bool negative) {
  if (p.is_zero()) return 0;
  int s = p.lead() > 0 ? 1 : -1;
  if (negative && p.degree() % 2 != 0) s = -s;
  return s;
}

/// Generalized Sturm sequence a, b, -rem(a, b), ...
inline std::vector<RatPoly> sturm_chain(RatPoly a, RatPoly b) {
  std::vector<RatPoly> chain = {a, b};
  while (!b.is_zero()) {
    RatPoly r = -remainder(a, b);
    a = std::move(b);
    b = std::move(r);
    if (!b.is_zero()) chain.push_back(b);
  }
  return chain;
}

inline int variations_at_infinity(const std::vector<RatPoly>& chain, bool negative) {
  int v = 0, last = 0;
  for (const RatPoly& p : chain) {
    const int s = sign_at_infinity(p, negative);
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

/// Number of distinct real roots.
inline int real_root_count(const RatPoly& p) {
  if (p.degree() < 1) return 0;
  const auto chain = sturm_chain(p, p.derivative());
  return variations_at_infinity(chain, true) - variations_at_infinity(chain, false);
}

}  // namespace detail

/// Roots of p (with multiplicity) inside, on and outside the unit circle.
struct UnitCircleCount {
  int inside = 0;
  bool on_circle = false;
  int outside = 0;
};

inline UnitCircleCount unit_circle_count(const IntPoly& p) {
  using detail::GaussPoly;
  if (p.degree() < 1) throw DomainError("unit_circle_count: polynomial of degree < 1");
  const auto n = static_cast<std::size_t>(p.degree());
  UnitCircleCount out;
  // z = 1 is the point at infinity of the Cayley map
  Integer at_one = 0, at_minus_one = 0;
  for (std::size_t k = 0; k <= n; ++k) {
    at_one += p.c[k];
    at_minus_one += (k % 2 == 0 ? p.c[k] : Integer(-p.c[k]));
  }
  if (at_one == 0 || at_minus_one == 0) {
    out.on_circle = true;
    return out;
  }
  // a root on the circle is shared with the reversed polynomial
  const IntPoly common = gcd(p, p.reversed());
  const bool may_touch = common.degree() >= 1;

  const GaussPoly minus{IntPoly({0, 1}), IntPoly::constant(-1)};  // w - i
  const GaussPoly plus{IntPoly({0, 1}), IntPoly::constant(1)};  // w + i
  std::vector<GaussPoly> mpow = {{IntPoly::constant(1), IntPoly()}}, ppow = mpow;
  for (std::size_t k = 1; k <= n; ++k) {
    mpow.push_back(detail::gauss_mul(mpow.back(), minus));
    ppow.push_back(detail::gauss_mul(ppow.back(), plus));
  }
  IntPoly a, b;
  for (std::size_t k = 0; k <= n; ++k) {
    if (p.c[k] == 0) continue;
    const GaussPoly term = detail::gauss_mul(mpow[k], ppow[n - k]);
    a = a + p.c[k] * term.first;
    b = b + p.c[k] * term.second;
  }
  const RatPoly ra = to_rational(a), rb = to_rational(b);
  if (may_touch) {
    const RatPoly g = gcd(ra, rb);
    if (detail::real_root_count(g) > 0) {
      out.on_circle = true;
      return out;
    }
  }
  const auto chain = detail::sturm_chain(ra, rb);
  const int index = detail::variations_at_infinity(chain, true) - detail::variations_at_infinity(chain, false);
  out.inside = (static_cast<int>(n) - index) / 2;
  out.outside = static_cast<int>(n) - out.inside;
  return out;
}

/// Monic, exactly one root of modulus > 1 (with multiplicity), none of
/// modulus 1.
inline bool is_pv_polynomial(const IntPoly& p) {
  if (p.degree() < 1 || p.lead() != 1) throw DomainError("is_pv_polynomial: polynomial must be monic of degree >= 1");
  const UnitCircleCount c = unit_circle_count(p);
  return !c.on_circle && c.outside == 1;
}

}  // namespace largeness
