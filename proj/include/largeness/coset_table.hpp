#pragma once

// Coset tables and Todd-Coxeter enumeration (HLT strategy with the
// union-find coincidence procedure).

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "largeness/errors.hpp"
#include "largeness/presentation.hpp"
#include "largeness/word.hpp"

namespace largeness {

/// Column 2g is the action of generator g, column 2g+1 that of g^-1.
inline int column_of(Gen g, Exp sign) { return 2 * g + (sign > 0 ? 0 : 1); }
inline int inverse_column(int col) { return col ^ 1; }

/// Letters of w as table columns.
inline std::vector<int> word_columns(const Word& w) {
  std::vector<int> cols;
  cols.reserve(static_cast<std::size_t>(w.length()));
  for (const Run& r : w.runs()) {
    const int c = column_of(r.gen, r.exp);
    for (Exp i = 0; i < (r.exp > 0 ? r.exp : -r.exp); ++i) cols.push_back(c);
  }
  return cols;
}

/// Right action of the generators on the cosets 0..index-1 of a subgroup;
/// coset 0 is the subgroup itself. Entries of a complete table are >= 0.
class CosetTable {
 public:
  CosetTable() = default;
  CosetTable(int generators, std::size_t index, std::vector<int> data,
             std::vector<Word> subgroup_generators = {})
      : gens_(generators), index_(index), data_(std::move(data)),
        subgroup_generators_(std::move(subgroup_generators)) {
    if (data_.size() != index_ * columns()) throw DomainError("CosetTable: data size mismatch");
  }

  /// The one-coset table of the whole group.
  static CosetTable trivial(int generators) {
    std::vector<int> d(static_cast<std::size_t>(2 * generators), 0);
    return CosetTable(generators, 1, std::move(d));
  }

  int generator_count() const { return gens_; }
  std::size_t index() const { return index_; }
  std::size_t columns() const { return static_cast<std::size_t>(2 * gens_); }
  const std::vector<int>& data() const { return data_; }
  const std::vector<Word>& subgroup_generators() const { return subgroup_generators_; }
  void set_subgroup_generators(std::vector<Word> g) { subgroup_generators_ = std::move(g); }

  int at(std::size_t coset, int col) const { return data_[coset * columns() + static_cast<std::size_t>(col)]; }
  int act(std::size_t coset, Gen g, Exp sign = 1) const { return at(coset, column_of(g, sign)); }

  /// Coset reached from `coset` by reading w.
  std::size_t image(std::size_t coset, const Word& w) const {
    for (const Run& r : w.runs()) {
      const int col = column_of(r.gen, r.exp);
      for (Exp i = 0; i < (r.exp > 0 ? r.exp : -r.exp); ++i) coset = static_cast<std::size_t>(at(coset, col));
    }
    return coset;
  }

  /// Tables are equal when their actions agree; defining generators are
  /// bookkeeping only.
  friend bool operator==(const CosetTable& a, const CosetTable& b) {
    return a.gens_ == b.gens_ && a.index_ == b.index_ && a.data_ == b.data_;
  }
  /// Orders by index, then row-major entries.
  friend bool operator<(const CosetTable& a, const CosetTable& b) {
    if (a.index_ != b.index_) return a.index_ < b.index_;
    return a.data_ < b.data_;
  }

 private:
  int gens_ = 0;
  std::size_t index_ = 0;
  std::vector<int> data_;
  std::vector<Word> subgroup_generators_;
};

/// Renumbers the cosets in order of first appearance in a row-major scan
/// from `base`, keeping only cosets reachable from it. Entries may be -1 in
/// partial tables; those stay -1.
inline std::vector<int> standard_numbering(const std::vector<int>& data, std::size_t columns,
                                           std::size_t rows, std::size_t base) {
  std::vector<int> label(rows, -1);
  std::vector<std::size_t> order = {base};
  label[base] = 0;
  for (std::size_t k = 0; k < order.size(); ++k) {
    for (std::size_t c = 0; c < columns; ++c) {
      const int d = data[order[k] * columns + c];
      if (d >= 0 && label[static_cast<std::size_t>(d)] < 0) {
        label[static_cast<std::size_t>(d)] = static_cast<int>(order.size());
        order.push_back(static_cast<std::size_t>(d));
      }
    }
  }
  return label;
}

inline CosetTable standardize(const CosetTable& t, std::size_t base = 0) {
  const std::size_t cols = t.columns();
  const auto label = standard_numbering(t.data(), cols, t.index(), base);
  std::size_t n = 0;
  for (int l : label) n += l >= 0;
  std::vector<int> out(n * cols, -1);
  for (std::size_t r = 0; r < t.index(); ++r) {
    if (label[r] < 0) continue;
    for (std::size_t c = 0; c < cols; ++c) {
      const int d = t.at(r, static_cast<int>(c));
      out[static_cast<std::size_t>(label[r]) * cols + c] = d < 0 ? -1 : label[static_cast<std::size_t>(d)];
    }
  }
  return CosetTable(t.generator_count(), n, std::move(out), t.subgroup_generators());
}

/// Reason a table fails to be a complete standardized coset table for p, or
/// nullopt when it is one.
inline std::optional<std::string> table_defect(const Presentation& p, const CosetTable& t) {
  if (t.generator_count() != p.generator_count()) return "generator count differs from the presentation";
  if (t.index() == 0) return "empty table";
  const std::size_t n = t.index();
  for (std::size_t c = 0; c < n; ++c)
    for (int col = 0; col < static_cast<int>(t.columns()); ++col) {
      const int d = t.at(c, col);
      if (d < 0 || static_cast<std::size_t>(d) >= n) return "table is incomplete";
      if (t.at(static_cast<std::size_t>(d), inverse_column(col)) != static_cast<int>(c))
        return "generator action is not a bijection";
    }
  for (const Word& r : p.relators())
    for (std::size_t c = 0; c < n; ++c) {
      if (t.image(c, r) != c) return "a relator moves coset " + std::to_string(c);
    }
  for (const Word& w : t.subgroup_generators()) {
    if (t.image(0, w) != 0) return "a subgroup generator does not fix coset 0";
  }
  if (standardize(t) != t) return "table is not standardized";
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Todd-Coxeter

namespace detail {

class ToddCoxeter {
 public:
  ToddCoxeter(const Presentation& p, std::size_t max_cosets)
      : cols_(static_cast<std::size_t>(2 * p.generator_count())), max_(max_cosets) {
    for (const Word& r : p.relators()) relators_.push_back(word_columns(r));
    new_coset();
  }

  CosetTable run(const std::vector<Word>& gens, int generator_count) {
    for (const Word& w : gens) scan_and_fill(0, word_columns(w));
    for (std::size_t a = 0; a < forward_.size(); ++a) {
      for (const auto& r : relators_) {
        if (!live(a)) break;
        scan_and_fill(a, r);
      }
      if (!live(a)) continue;
      for (std::size_t c = 0; c < cols_; ++c) {
        if (!live(a)) break;
        if (entry(a, c) < 0) define(a, c);
      }
    }
    // compact live cosets, then standardize
    std::vector<int> label(forward_.size(), -1);
    std::size_t n = 0;
    for (std::size_t a = 0; a < forward_.size(); ++a) {
      if (live(a)) label[a] = static_cast<int>(n++);
    }
    std::vector<int> data(n * cols_);
    for (std::size_t a = 0; a < forward_.size(); ++a) {
      if (!live(a)) continue;
      for (std::size_t c = 0; c < cols_; ++c)
        data[static_cast<std::size_t>(label[a]) * cols_ + c] = label[static_cast<std::size_t>(entry(a, c))];
    }
    return standardize(CosetTable(generator_count, n, std::move(data), gens));
  }

 private:
  bool live(std::size_t a) const { return forward_[a] == static_cast<int>(a); }
  int& entry(std::size_t a, std::size_t c) { return table_[a * cols_ + c]; }

  std::size_t new_coset() {
    if (forward_.size() >= max_)
      throw ResourceLimit("todd_coxeter: coset limit " + std::to_string(max_) + " exceeded");
    const std::size_t a = forward_.size();
    forward_.push_back(static_cast<int>(a));
    table_.resize(table_.size() + cols_, -1);
    return a;
  }

  void define(std::size_t a, std::size_t c) {
    const std::size_t b = new_coset();
    entry(a, c) = static_cast<int>(b);
    entry(b, c ^ 1) = static_cast<int>(a);
  }

  std::size_t rep(std::size_t k) {
    std::size_t l = k;
    while (forward_[l] != static_cast<int>(l)) l = static_cast<std::size_t>(forward_[l]);
    while (forward_[k] != static_cast<int>(l)) {
      const std::size_t next = static_cast<std::size_t>(forward_[k]);
      forward_[k] = static_cast<int>(l);
      k = next;
    }
    return l;
  }

  void merge(std::size_t k, std::size_t l, std::vector<std::size_t>& queue) {
    k = rep(k);
    l = rep(l);
    if (k == l) return;
    if (l < k) std::swap(k, l);
    forward_[l] = static_cast<int>(k);
    queue.push_back(l);
  }

  void coincidence(std::size_t a, std::size_t b) {
    std::vector<std::size_t> queue;
    merge(a, b, queue);
    for (std::size_t i = 0; i < queue.size(); ++i) {
      const std::size_t g = queue[i];
      for (std::size_t c = 0; c < cols_; ++c) {
        const int d0 = entry(g, c);
        if (d0 < 0) continue;
        const auto d = static_cast<std::size_t>(d0);
        if (entry(d, c ^ 1) == static_cast<int>(g)) entry(d, c ^ 1) = -1;
        const std::size_t mu = rep(g);
        const std::size_t nu = rep(d);
        if (entry(mu, c) >= 0) {
          merge(nu, static_cast<std::size_t>(entry(mu, c)), queue);
        } else if (entry(nu, c ^ 1) >= 0) {
          merge(mu, static_cast<std::size_t>(entry(nu, c ^ 1)), queue);
        } else {
          entry(mu, c) = static_cast<int>(nu);
          entry(nu, c ^ 1) = static_cast<int>(mu);
        }
      }
    }
  }

  void scan_and_fill(std::size_t a, const std::vector<int>& w) {
    if (w.empty()) return;
    std::size_t f = a, b = a;
    std::size_t i = 0;
    std::ptrdiff_t j = static_cast<std::ptrdiff_t>(w.size()) - 1;
    for (;;) {
      while (static_cast<std::ptrdiff_t>(i) <= j && entry(f, static_cast<std::size_t>(w[i])) >= 0)
        f = static_cast<std::size_t>(entry(f, static_cast<std::size_t>(w[i++])));
      if (static_cast<std::ptrdiff_t>(i) > j) {
        if (f != b) coincidence(f, b);
        return;
      }
      while (j >= static_cast<std::ptrdiff_t>(i) &&
             entry(b, static_cast<std::size_t>(w[static_cast<std::size_t>(j)] ^ 1)) >= 0)
        b = static_cast<std::size_t>(entry(b, static_cast<std::size_t>(w[static_cast<std::size_t>(j--)] ^ 1)));
      if (j < static_cast<std::ptrdiff_t>(i)) {
        coincidence(f, b);
        return;
      }
      if (j == static_cast<std::ptrdiff_t>(i)) {
        entry(f, static_cast<std::size_t>(w[i])) = static_cast<int>(b);
        entry(b, static_cast<std::size_t>(w[i] ^ 1)) = static_cast<int>(f);
        return;
      }
      define(f, static_cast<std::size_t>(w[i]));
    }
  }

  std::size_t cols_;
  std::size_t max_;
  std::vector<std::vector<int>> relators_;
  std::vector<int> forward_;  // union-find parent; forward_[a] == a iff a is live
  std::vector<int> table_;
};

}  // namespace detail

inline constexpr std::size_t kDefaultMaxCosets = 1000000;

/// Enumerates the cosets of <gens> in the group presented by p. Throws
/// ResourceLimit when more than max_cosets cosets are defined.
inline CosetTable todd_coxeter(const Presentation& p, const std::vector<Word>& gens,
                               std::size_t max_cosets = kDefaultMaxCosets) {
  for (const Word& w : gens) {
    if (w.max_gen() >= p.generator_count()) throw DomainError("todd_coxeter: subgroup generator outside presentation");
  }
  detail::ToddCoxeter tc(p, max_cosets);
  return tc.run(gens, p.generator_count());
}

}  // namespace largeness
