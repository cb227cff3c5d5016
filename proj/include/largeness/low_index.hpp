#pragma once

// Low-index subgroups: depth-first extension of partial coset tables with
// relator deductions and first-in-class pruning.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "largeness/coset_table.hpp"
#include "largeness/errors.hpp"
#include "largeness/presentation.hpp"

namespace largeness {

struct LowIndexOptions {
  std::size_t max_index = 1;
  /// Stop after this many search nodes (0 = unlimited); exceeding it throws
  /// ResourceLimit.
  std::uint64_t max_nodes = 0;
};

namespace detail {

class LowIndexSearch {
 public:
  LowIndexSearch(const Presentation& p, const LowIndexOptions& opt)
      : gens_(p.generator_count()), cols_(static_cast<std::size_t>(2 * p.generator_count())), opt_(opt) {
    if (opt.max_index == 0) throw DomainError("low_index_subgroups: max_index must be positive");
    by_first_.resize(cols_);
    for (const Word& r : p.relators()) {
      for (const Word& w : {r, r.inverse()}) {
        const auto cols = word_columns(w);
        for (std::size_t k = 0; k < cols.size(); ++k) {
          std::vector<int> rot(cols.begin() + static_cast<std::ptrdiff_t>(k), cols.end());
          rot.insert(rot.end(), cols.begin(), cols.begin() + static_cast<std::ptrdiff_t>(k));
          auto& bucket = by_first_[static_cast<std::size_t>(rot.front())];
          if (std::find(bucket.begin(), bucket.end(), rot) == bucket.end()) bucket.push_back(std::move(rot));
        }
      }
    }
    relators_ = p.relators();
    table_.assign(opt.max_index * cols_, -1);
  }

  void run(const std::function<void(CosetTable)>& emit) {
    emit_ = &emit;
    n_ = 1;
    if (gens_ == 0) {
      (*emit_)(CosetTable(0, 1, {}));
      return;
    }
    search(0);
  }

 private:
  int& entry(std::size_t c, std::size_t col) { return table_[c * cols_ + col]; }

  void set(std::size_t c, std::size_t col, std::size_t d) {
    entry(c, col) = static_cast<int>(d);
    entry(d, col ^ 1) = static_cast<int>(c);
    trail_.push_back(c * cols_ + col);
    trail_.push_back(d * cols_ + (col ^ 1));
    pending_.emplace_back(c, col);
  }

  void undo(std::size_t mark) {
    while (trail_.size() > mark) {
      table_[trail_.back()] = -1;
      trail_.pop_back();
    }
  }

  /// Scans rotation w from coset c; fills a single gap, reports conflicts.
  bool scan(std::size_t c, const std::vector<int>& w) {
    std::size_t f = c, i = 0;
    const std::size_t len = w.size();
    while (i < len && entry(f, static_cast<std::size_t>(w[i])) >= 0) f = static_cast<std::size_t>(entry(f, static_cast<std::size_t>(w[i++])));
    if (i == len) return f == c;
    std::size_t b = c;
    std::size_t j = len;  // letters [i, j) remain
    while (j > i && entry(b, static_cast<std::size_t>(w[j - 1] ^ 1)) >= 0) b = static_cast<std::size_t>(entry(b, static_cast<std::size_t>(w[--j] ^ 1)));
    if (j == i) return f == b;
    if (j == i + 1) {
      const auto col = static_cast<std::size_t>(w[i]);
      if (entry(b, col ^ 1) >= 0) return false;
      set(f, col, b);
    }
    return true;
  }

  bool process_deductions() {
    while (!pending_.empty()) {
      const auto [c, col] = pending_.back();
      pending_.pop_back();
      for (const auto& w : by_first_[col]) {
        if (!scan(c, w)) return false;
      }
      const std::size_t d = static_cast<std::size_t>(entry(c, col));
      for (const auto& w : by_first_[col ^ 1]) {
        if (!scan(d, w)) return false;
      }
    }
    return true;
  }

  /// False when renumbering from some other base coset gives a smaller
  /// partial table, so this branch cannot lead to a class representative.
  bool is_canonical() {
    std::vector<int> label(n_), order(n_);
    for (std::size_t base = 1; base < n_; ++base) {
      std::fill(label.begin(), label.end(), -1);
      label[base] = 0;
      order[0] = static_cast<int>(base);
      std::size_t next = 1;
      for (std::size_t r = 0; r < n_; ++r) {
        if (r >= next) return true;  // cannot happen in a connected table
        const auto src = static_cast<std::size_t>(order[r]);
        for (std::size_t col = 0; col < cols_; ++col) {
          const int d = entry(src, col);
          const int mine = entry(r, col);
          if (d < 0 || mine < 0) goto next_base;  // undecided
          if (label[static_cast<std::size_t>(d)] < 0) {
            label[static_cast<std::size_t>(d)] = static_cast<int>(next);
            order[next++] = d;
          }
          const int relabeled = label[static_cast<std::size_t>(d)];
          if (relabeled < mine) return false;
          if (relabeled > mine) goto next_base;
        }
      }
    next_base:;
    }
    return true;
  }

  void search(std::size_t from) {
    if (opt_.max_nodes && ++nodes_ > opt_.max_nodes)
      throw ResourceLimit("low_index_subgroups: search node limit exceeded");
    // first undefined entry, row-major
    std::size_t pos = from;
    const std::size_t limit = n_ * cols_;
    while (pos < limit && table_[pos] >= 0) ++pos;
    if (pos == limit) {
      std::vector<int> data(table_.begin(), table_.begin() + static_cast<std::ptrdiff_t>(limit));
      CosetTable t(gens_, n_, std::move(data));
      for (const Word& r : relators_)
        for (std::size_t c = 0; c < n_; ++c) {
          if (t.image(c, r) != c) throw InternalError("low_index_subgroups: relator check failed on a complete table");
        }
      (*emit_)(std::move(t));
      return;
    }
    const std::size_t c = pos / cols_, col = pos % cols_;
    const std::size_t options = n_ + (n_ < opt_.max_index ? 1 : 0);
    for (std::size_t d = 0; d < options; ++d) {
      if (entry(d, col ^ 1) >= 0 && d < n_) continue;
      const std::size_t mark = trail_.size();
      const std::size_t saved_n = n_;
      if (d == n_) ++n_;
      pending_.clear();
      set(c, col, d);
      if (process_deductions() && is_canonical()) search(pos + 1);
      pending_.clear();
      undo(mark);
      n_ = saved_n;
    }
  }

  int gens_;
  std::size_t cols_;
  LowIndexOptions opt_;
  std::vector<std::vector<std::vector<int>>> by_first_;
  std::vector<Word> relators_;
  std::vector<int> table_;
  std::vector<std::size_t> trail_;
  std::vector<std::pair<std::size_t, std::size_t>> pending_;
  std::size_t n_ = 1;
  std::uint64_t nodes_ = 0;
  const std::function<void(CosetTable)>* emit_ = nullptr;
};

}  // namespace detail

/// Calls `visit` once per conjugacy class of subgroups of index at most
/// max_index, in search order, with a standardized complete table.
inline void for_each_low_index_subgroup(const Presentation& p, const LowIndexOptions& opt,
                                        const std::function<void(CosetTable)>& visit) {
  detail::LowIndexSearch s(p, opt);
  s.run(visit);
}

/// One standardized table per conjugacy class of subgroups of index at most
/// max_index, ordered by index and then lexicographically by entries.
inline std::vector<CosetTable> low_index_subgroups(const Presentation& p, std::size_t max_index,
                                                   std::uint64_t max_nodes = 0) {
  std::vector<CosetTable> out;
  for_each_low_index_subgroup(p, {max_index, max_nodes}, [&](CosetTable t) { out.push_back(std::move(t)); });
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace largeness
