#pragma once

// Free-group words in run-length form, plus Nielsen reduction of tuples.

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "largeness/errors.hpp"

namespace largeness {

using Gen = int;
using Exp = std::int64_t;

/// A maximal block g^e of one generator, e != 0.
struct Run {
  Gen gen = 0;
  Exp exp = 0;
  friend bool operator==(const Run&, const Run&) = default;
  friend auto operator<=>(const Run&, const Run&) = default;
};

/// Freely reduced word of a free group. Adjacent runs always carry distinct
/// generators and no run has exponent 0; the empty word is the identity.
class Word {
 public:
  Word() = default;
  Word(std::initializer_list<Run> runs) {
    for (const Run& r : runs) push(r.gen, r.exp);
  }

  static Word letter(Gen g, Exp e = 1) {
    Word w;
    w.push(g, e);
    return w;
  }

  /// Builds a word from a sequence of signed letters (+(g+1) for g, -(g+1)
  /// for g^-1).
  static Word from_letters(std::span<const int> letters) {
    Word w;
    for (int l : letters) w.push(std::abs(l) - 1, l > 0 ? 1 : -1);
    return w;
  }

  /// Appends g^e with free reduction against the tail.
  void push(Gen g, Exp e) {
    if (e == 0) return;
    if (!runs_.empty() && runs_.back().gen == g) {
      runs_.back().exp += e;
      if (runs_.back().exp == 0) runs_.pop_back();
    } else {
      runs_.push_back({g, e});
    }
  }

  void append(const Word& v) {
    for (const Run& r : v.runs_) push(r.gen, r.exp);
  }

  const std::vector<Run>& runs() const { return runs_; }
  bool is_identity() const { return runs_.empty(); }
  std::size_t run_count() const { return runs_.size(); }

  /// Number of letters.
  Exp length() const {
    Exp n = 0;
    for (const Run& r : runs_) n += r.exp < 0 ? -r.exp : r.exp;
    return n;
  }

  Word inverse() const {
    Word w;
    w.runs_.reserve(runs_.size());
    for (auto it = runs_.rbegin(); it != runs_.rend(); ++it)
      w.runs_.push_back({it->gen, -it->exp});
    return w;
  }

  Word pow(Exp k) const {
    if (k == 0 || is_identity()) return {};
    const Word base = k > 0 ? *this : inverse();
    Word out;
    for (Exp i = 0; i < (k > 0 ? k : -k); ++i) out.append(base);
    return out;
  }

  /// Largest generator index used, or -1 for the identity.
  Gen max_gen() const {
    Gen m = -1;
    for (const Run& r : runs_) m = std::max(m, r.gen);
    return m;
  }

  bool involves(Gen g) const {
    return std::any_of(runs_.begin(), runs_.end(),
                       [g](const Run& r) { return r.gen == g; });
  }

  /// Expanded letters in the signed encoding of from_letters.
  std::vector<int> letters() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(length()));
    for (const Run& r : runs_) {
      const int l = r.exp > 0 ? r.gen + 1 : -(r.gen + 1);
      for (Exp i = 0; i < (r.exp > 0 ? r.exp : -r.exp); ++i) out.push_back(l);
    }
    return out;
  }

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    return a.runs_ <=> b.runs_;
  }

 private:
  std::vector<Run> runs_;
};

inline Word multiply(const Word& u, const Word& v) {
  Word w = u;
  w.append(v);
  return w;
}

inline Word operator*(const Word& u, const Word& v) { return multiply(u, v); }

inline Word commutator(const Word& u, const Word& v) {
  return u * v * u.inverse() * v.inverse();
}

inline Exp exponent_sum(const Word& w, Gen g) {
  Exp s = 0;
  for (const Run& r : w.runs()) {
    if (r.gen == g) s += r.exp;
  }
  return s;
}

struct CyclicReduction {
  Word core;
  Word conjugator;
};

/// Returns (core, c) with core cyclically reduced and w = c core c^-1.
inline CyclicReduction cyclic_reduce(const Word& w) {
  std::vector<Run> runs = w.runs();
  Word conj;
  std::size_t lo = 0;
  std::size_t hi = runs.size();
  while (hi - lo >= 2 && runs[lo].gen == runs[hi - 1].gen) {
    const Run first = runs[lo];
    conj.push(first.gen, first.exp);
    runs[hi - 1].exp += first.exp;
    ++lo;
    if (runs[hi - 1].exp == 0) --hi;
  }
  Word core;
  for (std::size_t i = lo; i < hi; ++i) core.push(runs[i].gen, runs[i].exp);
  return {std::move(core), std::move(conj)};
}

inline bool is_cyclically_reduced(const Word& w) {
  const auto& r = w.runs();
  return r.size() < 2 || r.front().gen != r.back().gen;
}

/// Cyclic rotation moving the first `k` letters to the end.
inline Word rotate(const Word& w, Exp k) {
  const auto letters = w.letters();
  if (letters.empty()) return w;
  const auto n = static_cast<Exp>(letters.size());
  k = ((k % n) + n) % n;
  std::vector<int> rotated(letters.begin() + k, letters.end());
  rotated.insert(rotated.end(), letters.begin(), letters.begin() + k);
  return Word::from_letters(rotated);
}

/// Substitutes images[g] for every generator g.
inline Word substitute(const Word& w, std::span<const Word> images) {
  Word out;
  for (const Run& r : w.runs()) {
    if (r.gen < 0 || static_cast<std::size_t>(r.gen) >= images.size())
      throw DomainError("substitute: generator without image");
    out.append(images[static_cast<std::size_t>(r.gen)].pow(r.exp));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Nielsen reduction

/// Elementary Nielsen move on a tuple: target := (source^power) * target when
/// `left`, target := target * (source^power) otherwise. power is +1 or -1.
/// A move with source == target and power == -1 inverts the target.
struct NielsenMove {
  std::size_t target = 0;
  std::size_t source = 0;
  int power = 1;
  bool left = false;
  friend bool operator==(const NielsenMove&, const NielsenMove&) = default;
};

inline void apply_move(std::vector<Word>& tuple, const NielsenMove& m) {
  if (m.source == m.target) {
    tuple[m.target] = tuple[m.target].inverse();
    return;
  }
  const Word s = m.power > 0 ? tuple[m.source] : tuple[m.source].inverse();
  tuple[m.target] = m.left ? s * tuple[m.target] : tuple[m.target] * s;
}

struct NielsenResult {
  std::vector<Word> tuple;
  std::vector<NielsenMove> moves;
  std::vector<std::size_t> identity_positions;
};

inline Exp total_length(std::span<const Word> tuple) {
  Exp n = 0;
  for (const Word& w : tuple) n += w.length();
  return n;
}

/// Greedy Nielsen reduction: applies the move with the largest strict length
/// decrease until none exists. Ties resolve to the first move in
/// (target, source, power, side) order, so the result is deterministic.
inline NielsenResult nielsen_reduce(std::vector<Word> tuple) {
  NielsenResult res;
  for (;;) {
    std::optional<NielsenMove> best;
    Exp best_gain = 0;
    for (std::size_t i = 0; i < tuple.size(); ++i) {
      const Exp li = tuple[i].length();
      if (li == 0) continue;
      for (std::size_t j = 0; j < tuple.size(); ++j) {
        if (i == j || tuple[j].is_identity()) continue;
        for (int power : {1, -1}) {
          const Word s = power > 0 ? tuple[j] : tuple[j].inverse();
          for (bool left : {false, true}) {
            const Exp gain = li - (left ? s * tuple[i] : tuple[i] * s).length();
            if (gain > best_gain) {
              best_gain = gain;
              best = NielsenMove{i, j, power, left};
            }
          }
        }
      }
    }
    if (!best) break;
    apply_move(tuple, *best);
    res.moves.push_back(*best);
  }
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (tuple[i].is_identity()) res.identity_positions.push_back(i);
  }
  res.tuple = std::move(tuple);
  return res;
}

}  // namespace largeness
