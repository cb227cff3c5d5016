#pragma once

#include <random>
#include <vector>

#include "largeness/word.hpp"

namespace largeness::support {

/// Random freely reduced word with `letters` letters over `rank` generators.
inline Word random_word(std::mt19937_64& rng, int rank, int letters) {
  std::uniform_int_distribution<int> gen(0, rank - 1);
  std::uniform_int_distribution<int> sign(0, 1);
  Word w;
  while (static_cast<int>(w.length()) < letters) {
    w.push(gen(rng), sign(rng) ? 1 : -1);
  }
  return w;
}

/// Random word whose exponent sum in generator `g` is zero: a product of
/// conjugates and commutator-like pieces.
inline Word random_zero_sum_word(std::mt19937_64& rng, int rank, Gen g, int letters) {
  for (;;) {
    Word w = random_word(rng, rank, letters);
    const Exp s = exponent_sum(w, g);
    w.push(g, -s);
    if (!w.is_identity()) return w;
  }
}

}  // namespace largeness::support
