#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace largeness {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline Integer iabs(const Integer& x) { return x < 0 ? Integer(-x) : x; }

inline Integer igcd(Integer a, Integer b) {
  a = iabs(a);
  b = iabs(b);
  while (b != 0) {
    Integer r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// Floor division for arbitrary signs.
inline Integer floor_div(const Integer& a, const Integer& b) {
  Integer q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

inline std::string to_string(const Integer& x) { return x.str(); }

/// Smallest prime factor of |n| >= 2 by trial division.
inline Integer smallest_prime_factor(Integer n) {
  n = iabs(n);
  if (n < 2) return n;
  if (n % 2 == 0) return 2;
  for (Integer d = 3; d * d <= n; d += 2) {
    if (n % d == 0) return d;
  }
  return n;
}

}  // namespace largeness
