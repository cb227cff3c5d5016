#pragma once

// Fox calculus and Alexander polynomials relative to a map onto Z.

#include <algorithm>
#include <limits>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "largeness/errors.hpp"
#include "largeness/integer.hpp"
#include "largeness/laurent.hpp"
#include "largeness/modular.hpp"
#include "largeness/presentation.hpp"
#include "largeness/word.hpp"

namespace largeness {

namespace detail {

inline void add_geometric(std::map<long, Integer>& acc, long start, long step, Exp count, long sign) {
  if (step == 0) {
    acc[start] += Integer(sign) * count;
    return;
  }
  for (Exp i = 0; i < count; ++i) acc[start + static_cast<long>(i) * step] += sign;
}

}  // namespace detail

/// All Fox derivatives of w at once, mapped through x -> t^chi(x); entries
/// that vanish are omitted.
inline std::map<Gen, LaurentPoly> fox_row(const Word& w, const Chi& chi) {
  std::map<Gen, std::map<long, Integer>> acc;
  long prefix = 0;
  for (const Run& r : w.runs()) {
    const long c = static_cast<long>(chi.values.at(static_cast<std::size_t>(r.gen)));
    if (r.exp > 0) {
      detail::add_geometric(acc[r.gen], prefix, c, r.exp, 1);
    } else {
      // d(g^-1) = -g^-1, so g^-e contributes -(t^(P-c) + ... + t^(P-e c))
      detail::add_geometric(acc[r.gen], prefix - c, -c, -r.exp, -1);
    }
    prefix += c * static_cast<long>(r.exp);
  }
  std::map<Gen, LaurentPoly> out;
  for (auto& [g, terms] : acc) {
    LaurentPoly p = LaurentPoly::from_terms(terms);
    if (!p.is_zero()) out.emplace(g, std::move(p));
  }
  return out;
}

/// d w / d x_g evaluated at x -> t^chi(x).
inline LaurentPoly fox_derivative_eval(const Word& w, Gen g, const Chi& chi) {
  const auto row = fox_row(w, chi);
  const auto it = row.find(g);
  return it == row.end() ? LaurentPoly() : it->second;
}

/// Sparse Alexander matrix: one map column -> entry per relator.
using SparseLaurentMatrix = std::vector<std::map<Gen, LaurentPoly>>;

inline SparseLaurentMatrix alexander_matrix(const Presentation& p, const Chi& chi) {
  SparseLaurentMatrix m;
  m.reserve(p.relators().size());
  for (const Word& r : p.relators()) m.push_back(fox_row(r, chi));
  return m;
}

/// Determinant of a square matrix over Z[t, t^-1] by evaluation at points
/// modulo word-size primes, interpolation and Chinese remaindering.
inline LaurentPoly laurent_determinant(const std::vector<std::vector<LaurentPoly>>& a) {
  using namespace modular;
  const std::size_t n = a.size();
  if (n == 0) return LaurentPoly::constant(1);
  for (const auto& row : a) {
    if (row.size() != n) throw DomainError("laurent_determinant: matrix is not square");
  }
  // zero rows / columns
  for (std::size_t i = 0; i < n; ++i) {
    bool row_zero = true, col_zero = true;
    for (std::size_t j = 0; j < n; ++j) {
      row_zero = row_zero && a[i][j].is_zero();
      col_zero = col_zero && a[j][i].is_zero();
    }
    if (row_zero || col_zero) return LaurentPoly();
  }

  // shift each row into Z[t]; bound degree and coefficient size
  std::vector<long> shift(n);
  long shift_total = 0;
  std::size_t degree = 0;
  Integer bound = 1;
  for (std::size_t i = 0; i < n; ++i) {
    long lo = 0, hi = 0;
    bool first = true;
    Integer norm = 0;
    for (const auto& e : a[i]) {
      if (e.is_zero()) continue;
      lo = first ? e.low() : std::min(lo, e.low());
      hi = first ? e.high() : std::max(hi, e.high());
      first = false;
      for (const auto& x : e.coefficients()) norm += iabs(x);
    }
    shift[i] = lo;
    shift_total += lo;
    degree += static_cast<std::size_t>(hi - lo);
    bound *= norm;
  }

  std::vector<Integer> result(degree + 1, 0);
  Integer modulus = 1;
  const Integer target = 2 * bound + 1;
  std::size_t primes_needed = 0;
  for (Integer m = 1; m < target; m *= Integer(1ULL << 60)) ++primes_needed;
  const auto primes = large_primes(std::max<std::size_t>(primes_needed, 1));

  std::vector<std::vector<u64>> residues;  // per prime: coefficients mod q
  for (u64 q : primes) {
    // entries reduced mod q, as polynomials in the shifted row
    std::vector<std::vector<u64>> red(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const LaurentPoly& e = a[i][j];
        if (e.is_zero()) continue;
        auto& r = red[i * n + j];
        r.assign(static_cast<std::size_t>(e.low() - shift[i]), 0);
        for (const auto& x : e.coefficients()) {
          Integer v = x % q;
          if (v < 0) v += q;
          r.push_back(static_cast<u64>(v));
        }
      }
    std::vector<u64> values(degree + 1);
    std::vector<u64> m(n * n);
    for (std::size_t x = 0; x <= degree; ++x) {
      for (std::size_t ij = 0; ij < n * n; ++ij) {
        u64 v = 0;
        const auto& r = red[ij];
        for (auto it = r.rbegin(); it != r.rend(); ++it) v = add(mul(v, x, q), *it, q);
        m[ij] = v;
      }
      values[x] = determinant(m, n, q);
    }
    // Newton divided differences on nodes 0..degree
    std::vector<u64> dd = values;
    for (std::size_t k = 1; k <= degree; ++k)
      for (std::size_t i = degree; i >= k; --i) {
        dd[i] = mul(sub(dd[i], dd[i - 1], q), inv(k % q, q), q);
        if (i == k) break;
      }
    // expand Newton form into monomial coefficients
    std::vector<u64> coef(degree + 1, 0);
    for (std::size_t k = degree + 1; k-- > 0;) {
      // coef = coef * (x - k) + dd[k]
      std::vector<u64> next(degree + 1, 0);
      for (std::size_t i = 0; i <= degree; ++i) {
        if (coef[i] == 0) continue;
        if (i + 1 <= degree) next[i + 1] = add(next[i + 1], coef[i], q);
        next[i] = sub(next[i], mul(coef[i], k % q, q), q);
      }
      next[0] = add(next[0], dd[k], q);
      coef = std::move(next);
    }
    residues.push_back(std::move(coef));
  }

  // Chinese remaindering into the symmetric range
  for (std::size_t pi = 0; pi < primes.size(); ++pi) {
    const Integer q = primes[pi];
    if (pi == 0) {
      for (std::size_t i = 0; i <= degree; ++i) result[i] = residues[0][i];
      modulus = q;
      continue;
    }
    const Integer minv = LaurentPoly::inverse_mod(modulus % q, q);
    for (std::size_t i = 0; i <= degree; ++i) {
      Integer diff = (Integer(residues[pi][i]) - result[i]) % q;
      if (diff < 0) diff += q;
      result[i] += modulus * ((diff * minv) % q);
    }
    modulus *= q;
  }
  for (auto& x : result) {
    if (x > modulus / 2) x -= modulus;
  }
  return LaurentPoly(shift_total, std::move(result));
}

namespace detail {

/// Picks the rows in `rows` and the columns in `cols` of a sparse matrix.
inline std::vector<std::vector<LaurentPoly>> dense_minor(const SparseLaurentMatrix& m,
                                                         const std::vector<std::size_t>& rows,
                                                         const std::vector<Gen>& cols) {
  std::vector<std::vector<LaurentPoly>> out(rows.size(), std::vector<LaurentPoly>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = m[rows[i]];
    for (std::size_t j = 0; j < cols.size(); ++j) {
      const auto it = row.find(cols[j]);
      if (it != row.end()) out[i][j] = it->second;
    }
  }
  return out;
}

}  // namespace detail

/// Limits for the gcd-of-minors route on non-square Alexander matrices.
struct MinorLimits {
  int max_generators = 12;
  std::size_t max_minors = 20000;
  /// Presentations with more generators are first shrunk by Tietze
  /// elimination (which leaves Delta unchanged up to units).
  int reduce_above = 24;
};

/// Delta_{G,chi}: gcd of the (m-1)-minors of the Alexander matrix with one
/// column deleted, in canonical form. When a generator has chi = +-1 its
/// column is deleted directly; otherwise the basis is first changed so that
/// chi becomes a coordinate projection.
inline LaurentPoly alexander_polynomial(const Presentation& p, const Chi& chi, MinorLimits limits = {}) {
  require_valid_chi(p, chi);
  if (p.generator_count() > limits.reduce_above) {
    TietzeReduction red = tietze_reduce(p);
    if (red.presentation.generator_count() < p.generator_count()) {
      Chi sub;
      for (Gen g : red.kept) sub.values.push_back(chi.values[static_cast<std::size_t>(g)]);
      MinorLimits inner = limits;
      inner.reduce_above = std::numeric_limits<int>::max();
      if (sub.is_surjective()) return alexander_polynomial(red.presentation, sub, inner);
    }
  }
  std::optional<Gen> pivot;
  for (Gen g = 0; g < p.generator_count(); ++g) {
    const Exp v = chi.values[static_cast<std::size_t>(g)];
    if (v == 1 || v == -1) {
      pivot = g;
      break;
    }
  }
  if (!pivot) {
    const ChiBasis rebased = abelianized_chi_basis(p, chi);
    return alexander_polynomial(rebased.presentation, rebased.chi, limits);
  }

  const int m = p.generator_count();
  const std::size_t n = p.relators().size();
  const std::size_t k = static_cast<std::size_t>(m - 1);
  if (n < k) return LaurentPoly();  // a zero column pads every minor
  std::vector<Gen> cols;
  for (Gen g = 0; g < m; ++g) {
    if (g != *pivot) cols.push_back(g);
  }
  const SparseLaurentMatrix mat = alexander_matrix(p, chi);
  for (Gen c : cols) {
    const bool empty = std::none_of(mat.begin(), mat.end(), [c](const auto& row) { return row.count(c) > 0; });
    if (empty) return LaurentPoly();
  }
  if (n == k) {
    std::vector<std::size_t> rows(n);
    for (std::size_t i = 0; i < n; ++i) rows[i] = i;
    return laurent_determinant(detail::dense_minor(mat, rows, cols)).canonical();
  }
  if (m > limits.max_generators)
    throw ResourceLimit("alexander_polynomial: non-square Alexander matrix with more than " +
                        std::to_string(limits.max_generators) + " generators");
  if (k == 0) return LaurentPoly::constant(1);

  // enumerate k-subsets of rows in lexicographic order
  std::vector<std::size_t> rows(k);
  for (std::size_t i = 0; i < k; ++i) rows[i] = i;
  LaurentPoly g;
  std::size_t count = 0;
  for (;;) {
    if (++count > limits.max_minors) throw ResourceLimit("alexander_polynomial: too many minors");
    const LaurentPoly d = laurent_determinant(detail::dense_minor(mat, rows, cols));
    g = gcd(g, d);
    if (g.is_unit()) return g;
    std::size_t i = k;
    while (i > 0 && rows[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++rows[i - 1];
    for (std::size_t j = i; j < k; ++j) rows[j] = rows[j - 1] + 1;
  }
  return g.canonical();
}

/// Integer Alexander polynomial reduced mod p, canonical (monic).
/// Deficiency-1 presentations only.
inline LaurentPoly alexander_mod_p(const Presentation& p, const Chi& chi, const Integer& prime) {
  if (deficiency(p) != 1) throw DomainError("alexander_mod_p: presentation must have deficiency 1");
  if (prime < 2 || smallest_prime_factor(prime) != prime) throw DomainError("alexander_mod_p: modulus is not prime");
  return alexander_polynomial(p, chi).reduce_mod(prime).canonical();
}

}  // namespace largeness
