#pragma once

// Word-size modular arithmetic for multimodular linear algebra.

#include <cstdint>
#include <utility>
#include <vector>

#include "largeness/errors.hpp"

namespace largeness::modular {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mul(u64 a, u64 b, u64 q) { return static_cast<u64>(static_cast<u128>(a) * b % q); }
inline u64 add(u64 a, u64 b, u64 q) {
  const u64 s = a + b;
  return s >= q ? s - q : s;
}
inline u64 sub(u64 a, u64 b, u64 q) { return a >= b ? a - b : a + q - b; }

inline u64 pow(u64 a, u64 e, u64 q) {
  u64 r = 1 % q;
  a %= q;
  while (e) {
    if (e & 1) r = mul(r, a, q);
    a = mul(a, a, q);
    e >>= 1;
  }
  return r;
}

/// q prime.
inline u64 inv(u64 a, u64 q) {
  if (a % q == 0) throw DomainError("modular inverse of zero");
  return pow(a, q - 2, q);
}

/// Deterministic Miller-Rabin for 64-bit inputs.
inline bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = pow(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mul(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// The largest `count` primes below 2^61, descending.
inline std::vector<u64> large_primes(std::size_t count) {
  std::vector<u64> out;
  for (u64 n = (1ULL << 61) - 1; out.size() < count; n -= 2) {
    if (is_prime(n)) out.push_back(n);
  }
  return out;
}

/// Determinant over Z/q by Gaussian elimination; a is row-major n x n and
/// is destroyed.
inline u64 determinant(std::vector<u64>& a, std::size_t n, u64 q) {
  u64 det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a[p * n + k] == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a[p * n + j], a[k * n + j]);
      det = q - det;
      if (det == q) det = 0;
    }
    det = mul(det, a[k * n + k], q);
    const u64 piv_inv = inv(a[k * n + k], q);
    for (std::size_t i = k + 1; i < n; ++i) {
      const u64 f = mul(a[i * n + k], piv_inv, q);
      if (f == 0) continue;
      for (std::size_t j = k + 1; j < n; ++j) a[i * n + j] = sub(a[i * n + j], mul(f, a[k * n + j], q), q);
    }
  }
  return det;
}

}  // namespace largeness::modular
