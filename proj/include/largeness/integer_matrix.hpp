#pragma once

// Exact integer matrices: Smith normal form, abelian invariants of a
// presentation, characteristic polynomials.

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "largeness/errors.hpp"
#include "largeness/integer.hpp"
#include "largeness/polynomial.hpp"
#include "largeness/presentation.hpp"

namespace largeness {

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, 0) {}
  IntMatrix(std::size_t rows, std::size_t cols, std::vector<Integer> entries)
      : rows_(rows), cols_(cols), a_(std::move(entries)) {
    if (a_.size() != rows * cols) throw DomainError("IntMatrix: entry count != rows * cols");
  }
  IntMatrix(std::initializer_list<std::initializer_list<long>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DomainError("IntMatrix: ragged initializer");
      for (long x : r) a_.emplace_back(x);
    }
  }

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Integer& operator()(std::size_t r, std::size_t c) { return a_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return a_[r * cols_ + c]; }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
  }
  /// row i += f * row j
  void add_row(std::size_t i, std::size_t j, const Integer& f) {
    if (f == 0) return;
    for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) += f * (*this)(j, c);
  }
  /// col i += f * col j
  void add_col(std::size_t i, std::size_t j, const Integer& f) {
    if (f == 0) return;
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, i) += f * (*this)(r, j);
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
  }

  friend IntMatrix operator*(const IntMatrix& x, const IntMatrix& y) {
    if (x.cols_ != y.rows_) throw DomainError("IntMatrix: shape mismatch in product");
    IntMatrix out(x.rows_, y.cols_);
    for (std::size_t i = 0; i < x.rows_; ++i)
      for (std::size_t k = 0; k < x.cols_; ++k) {
        if (x(i, k) == 0) continue;
        for (std::size_t j = 0; j < y.cols_; ++j) out(i, j) += x(i, k) * y(k, j);
      }
    return out;
  }

  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> a_;
};

/// Fraction-free (Bareiss) determinant.
inline Integer determinant(IntMatrix m) {
  if (m.rows() != m.cols()) throw DomainError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  Integer sign = 1;
  Integer prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && m(p, k) == 0) ++p;
    if (p == n) return 0;
    if (p != k) {
      m.swap_rows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = (m(i, j) * m(k, k) - m(i, k) * m(k, j)) / prev;
      m(i, k) = 0;
    }
    prev = m(k, k);
  }
  return n == 0 ? Integer(1) : sign * m(n - 1, n - 1);
}

struct SmithForm {
  IntMatrix d;
  IntMatrix u;  // rows x rows, unimodular
  IntMatrix v;  // cols x cols, unimodular
};

/// Smith normal form with transforms: u * m * v == d, d diagonal with
/// nonnegative entries d1 | d2 | ... . Pivots are chosen as the entry of
/// smallest magnitude, first in row-major order, so d, u and v are
/// deterministic. Pass want_transforms = false to skip u and v.
inline SmithForm smith_normal_form(const IntMatrix& m, bool want_transforms = true) {
  const std::size_t R = m.rows();
  const std::size_t C = m.cols();
  IntMatrix d = m;
  IntMatrix u = want_transforms ? IntMatrix::identity(R) : IntMatrix();
  IntMatrix v = want_transforms ? IntMatrix::identity(C) : IntMatrix();
  auto row_swap = [&](std::size_t i, std::size_t j) {
    d.swap_rows(i, j);
    if (want_transforms) u.swap_rows(i, j);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    d.swap_cols(i, j);
    if (want_transforms) v.swap_cols(i, j);
  };
  auto row_add = [&](std::size_t i, std::size_t j, const Integer& f) {
    d.add_row(i, j, f);
    if (want_transforms) u.add_row(i, j, f);
  };
  auto col_add = [&](std::size_t i, std::size_t j, const Integer& f) {
    d.add_col(i, j, f);
    if (want_transforms) v.add_col(i, j, f);
  };

  const std::size_t steps = std::min(R, C);
  for (std::size_t k = 0; k < steps; ++k) {
    for (;;) {
      // smallest nonzero magnitude in the trailing block
      std::optional<std::pair<std::size_t, std::size_t>> piv;
      Integer best;
      for (std::size_t i = k; i < R; ++i)
        for (std::size_t j = k; j < C; ++j) {
          if (d(i, j) == 0) continue;
          Integer a = iabs(d(i, j));
          if (!piv || a < best) {
            best = a;
            piv = {i, j};
            if (best == 1) goto found;
          }
        }
    found:
      if (!piv) return {std::move(d), std::move(u), std::move(v)};
      row_swap(k, piv->first);
      col_swap(k, piv->second);

      bool clean = true;
      for (std::size_t i = k + 1; i < R; ++i) {
        if (d(i, k) == 0) continue;
        row_add(i, k, -floor_div(d(i, k), d(k, k)));
        if (d(i, k) != 0) clean = false;
      }
      for (std::size_t j = k + 1; j < C; ++j) {
        if (d(k, j) == 0) continue;
        col_add(j, k, -floor_div(d(k, j), d(k, k)));
        if (d(k, j) != 0) clean = false;
      }
      if (!clean) continue;

      // divisibility: fold an offending row into row k and go again
      std::optional<std::size_t> bad;
      for (std::size_t i = k + 1; i < R && !bad; ++i)
        for (std::size_t j = k + 1; j < C; ++j) {
          if (d(i, j) % d(k, k) != 0) {
            bad = i;
            break;
          }
        }
      if (!bad) break;
      row_add(k, *bad, 1);
    }
    if (d(k, k) < 0) {
      d.negate_row(k);
      if (want_transforms) u.negate_row(k);
    }
  }
  return {std::move(d), std::move(u), std::move(v)};
}

/// Finitely generated abelian group Z^rank + Z/d1 + ... with 2 <= d1 | d2 | ...
struct AbelianInvariants {
  long rank = 0;
  std::vector<Integer> torsion;

  long min_generators() const { return rank + static_cast<long>(torsion.size()); }
  Integer torsion_order() const {
    Integer o = 1;
    for (const auto& t : torsion) o *= t;
    return o;
  }
  std::string to_string() const {
    std::string s = "Z^" + std::to_string(rank);
    for (const auto& t : torsion) s += " x Z/" + t.str();
    return s;
  }
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

/// Relators-by-generators matrix of exponent sums.
inline IntMatrix relation_matrix(const Presentation& p) {
  const auto m = static_cast<std::size_t>(p.generator_count());
  IntMatrix a(p.relators().size(), m);
  for (std::size_t i = 0; i < p.relators().size(); ++i)
    for (const Run& r : p.relators()[i].runs()) a(i, static_cast<std::size_t>(r.gen)) += r.exp;
  return a;
}

inline AbelianInvariants invariants_of_cokernel(const IntMatrix& a) {
  const SmithForm s = smith_normal_form(a, false);
  AbelianInvariants inv;
  long nonzero = 0;
  for (std::size_t k = 0; k < std::min(a.rows(), a.cols()); ++k) {
    const Integer& x = s.d(k, k);
    if (x == 0) continue;
    ++nonzero;
    if (x > 1) inv.torsion.push_back(x);
  }
  inv.rank = static_cast<long>(a.cols()) - nonzero;
  return inv;
}

inline AbelianInvariants abelian_invariants(const Presentation& p) {
  return invariants_of_cokernel(relation_matrix(p));
}

/// Basis of Hom(G, Z): integer vectors on the generators vanishing on all
/// relators, read off the column transform of the Smith form.
inline std::vector<std::vector<Integer>> hom_to_z_basis(const Presentation& p) {
  const IntMatrix a = relation_matrix(p);
  const SmithForm s = smith_normal_form(a, true);
  std::size_t nonzero = 0;
  for (std::size_t k = 0; k < std::min(a.rows(), a.cols()); ++k) {
    if (s.d(k, k) != 0) ++nonzero;
  }
  std::vector<std::vector<Integer>> basis;
  for (std::size_t j = nonzero; j < a.cols(); ++j) {
    std::vector<Integer> col(a.cols());
    for (std::size_t i = 0; i < a.cols(); ++i) col[i] = s.v(i, j);
    basis.push_back(std::move(col));
  }
  return basis;
}

/// Characteristic polynomial det(tI - m) by Faddeev-LeVerrier; the
/// divisions are exact over Z.
inline IntPoly char_poly(const IntMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("char_poly of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Integer> c(n + 1, 0);
  c[n] = 1;
  IntMatrix mk(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    IntMatrix next = m * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = std::move(next);
    const IntMatrix am = m * mk;
    Integer tr = 0;
    for (std::size_t i = 0; i < n; ++i) tr += am(i, i);
    c[n - k] = -tr / static_cast<long>(k);
  }
  return IntPoly(std::move(c));
}

}  // namespace largeness
