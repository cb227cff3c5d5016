#pragma once

// Finite presentations, homomorphisms onto Z, and the Tietze moves the
// drivers rely on.

#include <cstdint>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "largeness/errors.hpp"
#include "largeness/word.hpp"

namespace largeness {

/// Generators are named; relators are freely and cyclically reduced,
/// non-identity words over generator indices < generator_count().
class Presentation {
 public:
  Presentation() = default;
  Presentation(std::vector<std::string> names, std::vector<Word> relators)
      : names_(std::move(names)) {
    for (Word& r : relators) add_relator(std::move(r));
  }

  /// Adds the cyclic core of `r`; identity relators are dropped.
  void add_relator(Word r) {
    if (r.max_gen() >= generator_count())
      throw DomainError("relator uses a generator outside the presentation");
    Word core = cyclic_reduce(r).core;
    if (!core.is_identity()) relators_.push_back(std::move(core));
  }

  int generator_count() const { return static_cast<int>(names_.size()); }
  int relator_count() const { return static_cast<int>(relators_.size()); }
  const std::vector<std::string>& names() const { return names_; }
  const std::vector<Word>& relators() const { return relators_; }
  const std::string& name(Gen g) const { return names_.at(static_cast<std::size_t>(g)); }

  std::optional<Gen> find(const std::string& name) const {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i] == name) return static_cast<Gen>(i);
    }
    return std::nullopt;
  }

  Gen index_of(const std::string& name) const {
    if (auto g = find(name)) return *g;
    throw DomainError("unknown generator '" + name + "'");
  }

  friend bool operator==(const Presentation&, const Presentation&) = default;

 private:
  std::vector<std::string> names_;
  std::vector<Word> relators_;
};

inline int deficiency(const Presentation& p) {
  return p.generator_count() - p.relator_count();
}

/// Exponent-sum row of a word, one entry per generator.
inline std::vector<Exp> exponent_vector(const Word& w, int generators) {
  std::vector<Exp> v(static_cast<std::size_t>(generators), 0);
  for (const Run& r : w.runs()) v[static_cast<std::size_t>(r.gen)] += r.exp;
  return v;
}

// ---------------------------------------------------------------------------
// Homomorphisms onto Z

/// Integer value per generator. Valid for a presentation when it vanishes on
/// every relator; surjective when the values have gcd 1.
struct Chi {
  std::vector<Exp> values;

  Exp operator()(const Word& w) const {
    Exp s = 0;
    for (const Run& r : w.runs()) s += values.at(static_cast<std::size_t>(r.gen)) * r.exp;
    return s;
  }

  Exp content() const {
    Exp g = 0;
    for (Exp v : values) g = std::gcd(g, v);
    return g;
  }

  bool is_surjective() const { return content() == 1; }

  friend bool operator==(const Chi&, const Chi&) = default;
};

inline bool vanishes_on_relators(const Presentation& p, const Chi& chi) {
  if (static_cast<int>(chi.values.size()) != p.generator_count()) return false;
  for (const Word& r : p.relators()) {
    if (chi(r) != 0) return false;
  }
  return true;
}

/// Throws DomainError unless chi is a surjection from the presented group.
inline void require_valid_chi(const Presentation& p, const Chi& chi) {
  if (static_cast<int>(chi.values.size()) != p.generator_count())
    throw DomainError("chi has the wrong number of values");
  if (!vanishes_on_relators(p, chi))
    throw DomainError("chi does not vanish on every relator");
  if (!chi.is_surjective()) throw DomainError("chi is not surjective");
}

// ---------------------------------------------------------------------------
// Tietze moves

/// Removes generator g using relator r, which must contain g exactly once
/// (a single letter g or g^-1). The other relators are rewritten with the
/// solved expression for g; any that become trivial are dropped.
inline Presentation eliminate_generator(const Presentation& p, Gen g, int r) {
  if (g < 0 || g >= p.generator_count() || r < 0 || r >= p.relator_count())
    throw DomainError("eliminate_generator: index out of range");
  const Word& rel = p.relators()[static_cast<std::size_t>(r)];
  const auto letters = rel.letters();
  std::optional<std::size_t> pos;
  for (std::size_t i = 0; i < letters.size(); ++i) {
    if (std::abs(letters[i]) - 1 != g) continue;
    if (pos) throw DomainError("eliminate_generator: generator occurs more than once in relator");
    pos = i;
  }
  if (!pos) throw DomainError("eliminate_generator: generator does not occur in relator");

  // Rotate so the relator reads g^e * w with w free of g; then g = w^-e.
  const Word rotated = rotate(rel, static_cast<Exp>(*pos));
  const int sign = letters[*pos] > 0 ? 1 : -1;
  Word rest = rotated;
  rest = Word::letter(g, -sign) * rest;
  const Word solved = sign > 0 ? rest.inverse() : rest;

  std::vector<Word> images;
  std::vector<std::string> names;
  for (Gen h = 0; h < p.generator_count(); ++h) {
    if (h == g) {
      images.emplace_back();
      continue;
    }
    images.push_back(Word::letter(h < g ? h : h - 1));
    names.push_back(p.name(h));
  }
  // solved only mentions generators other than g; renumber them first.
  images[static_cast<std::size_t>(g)] = substitute(solved, images);

  std::vector<Word> relators;
  for (int i = 0; i < p.relator_count(); ++i) {
    if (i == r) continue;
    relators.push_back(substitute(p.relators()[static_cast<std::size_t>(i)], images));
  }
  return Presentation(std::move(names), std::move(relators));
}

/// Finds the shortest relator in which g occurs exactly once and eliminates
/// g with it.
inline Presentation eliminate_generator(const Presentation& p, Gen g) {
  std::optional<int> best;
  for (int i = 0; i < p.relator_count(); ++i) {
    const Word& rel = p.relators()[static_cast<std::size_t>(i)];
    Exp occurrences = 0;
    for (const Run& run : rel.runs()) {
      if (run.gen == g) occurrences += std::abs(run.exp);
    }
    if (occurrences != 1) continue;
    if (!best || rel.length() < p.relators()[static_cast<std::size_t>(*best)].length()) best = i;
  }
  if (!best) throw DomainError("eliminate_generator: no relator solves for '" + p.name(g) + "'");
  return eliminate_generator(p, g, *best);
}

/// Repeated generator elimination, always choosing the move giving the
/// shortest total relator length, while total length stays within
/// `growth_cap` times the input's.
inline Presentation simplify(Presentation p, double growth_cap = 4.0) {
  Exp start = 0;
  for (const Word& r : p.relators()) start += r.length();
  const auto cap = static_cast<Exp>(growth_cap * static_cast<double>(std::max<Exp>(start, 1)));
  for (;;) {
    std::optional<Presentation> best;
    Exp best_len = 0;
    for (Gen g = 0; g < p.generator_count(); ++g) {
      for (int i = 0; i < p.relator_count(); ++i) {
        Exp occurrences = 0;
        for (const Run& run : p.relators()[static_cast<std::size_t>(i)].runs()) {
          if (run.gen == g) occurrences += std::abs(run.exp);
        }
        if (occurrences != 1) continue;
        Presentation q = eliminate_generator(p, g, i);
        Exp len = 0;
        for (const Word& r : q.relators()) len += r.length();
        if (len > cap) continue;
        if (!best || len < best_len) {
          best_len = len;
          best = std::move(q);
        }
      }
    }
    if (!best) return p;
    p = std::move(*best);
  }
}

struct TietzeReduction {
  Presentation presentation;
  std::vector<Gen> kept;  // surviving generators, as indices of the input
};

/// Cheap elimination for large presentations: repeatedly solve the shortest
/// relator for a generator occurring in it once, while total relator length
/// stays within `growth_cap` times the input's.
inline TietzeReduction tietze_reduce(Presentation p, double growth_cap = 4.0) {
  std::vector<Gen> kept(static_cast<std::size_t>(p.generator_count()));
  std::iota(kept.begin(), kept.end(), 0);
  Exp total = 0;
  for (const Word& r : p.relators()) total += r.length();
  const auto cap = static_cast<Exp>(growth_cap * static_cast<double>(std::max<Exp>(total, 1)));
  for (;;) {
    std::vector<int> order(static_cast<std::size_t>(p.relator_count()));
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      return p.relators()[static_cast<std::size_t>(a)].length() < p.relators()[static_cast<std::size_t>(b)].length();
    });
    bool moved = false;
    for (int i : order) {
      const Word& rel = p.relators()[static_cast<std::size_t>(i)];
      std::vector<Exp> count(static_cast<std::size_t>(p.generator_count()), 0);
      for (const Run& run : rel.runs()) count[static_cast<std::size_t>(run.gen)] += std::abs(run.exp);
      for (const Run& run : rel.runs()) {
        if (count[static_cast<std::size_t>(run.gen)] != 1) continue;
        Presentation q = eliminate_generator(p, run.gen, i);
        Exp len = 0;
        for (const Word& r : q.relators()) len += r.length();
        if (len > cap) continue;
        kept.erase(kept.begin() + run.gen);
        p = std::move(q);
        moved = true;
        break;
      }
      if (moved) break;
    }
    if (!moved) return {std::move(p), std::move(kept)};
  }
}

// ---------------------------------------------------------------------------
// Normalizing chi

/// One step of the basis change: generator `target` is replaced by
/// target * source^power (as an element of the old basis).
struct BasisMove {
  Gen target = 0;
  Gen source = 0;
  Exp power = 0;  // power == 0 with target == source means: invert target
};

struct ChiBasis {
  Presentation presentation;
  Gen t_index = 0;
  Chi chi;
  std::vector<BasisMove> moves;
  /// Old generators as words in the new basis.
  std::vector<Word> old_in_new;
};

/// Changes the free basis so that chi becomes (0,..,0,1,0,..,0). The moves
/// run Euclid's algorithm on the chi values; relators are rewritten through
/// the inverse substitution, so the presented group is unchanged.
inline ChiBasis abelianized_chi_basis(const Presentation& p, const Chi& chi) {
  require_valid_chi(p, chi);
  const int m = p.generator_count();
  std::vector<Exp> vals = chi.values;
  // old generator x_i expressed in the current basis
  std::vector<Word> old_in_new;
  for (Gen g = 0; g < m; ++g) old_in_new.push_back(Word::letter(g));
  std::vector<BasisMove> moves;
  std::vector<bool> renamed(static_cast<std::size_t>(m), false);

  auto nonzero = [&] {
    std::vector<Gen> nz;
    for (Gen g = 0; g < m; ++g) {
      if (vals[static_cast<std::size_t>(g)] != 0) nz.push_back(g);
    }
    return nz;
  };
  for (auto nz = nonzero(); nz.size() > 1; nz = nonzero()) {
    Gen pivot = nz.front();
    for (Gen g : nz) {
      if (std::abs(vals[static_cast<std::size_t>(g)]) < std::abs(vals[static_cast<std::size_t>(pivot)])) pivot = g;
    }
    const Exp pv = vals[static_cast<std::size_t>(pivot)];
    for (Gen g : nz) {
      if (g == pivot) continue;
      const Exp q = vals[static_cast<std::size_t>(g)] / pv;
      if (q == 0) continue;
      // new x_g := x_g * x_pivot^-q, so old x_g = new x_g * x_pivot^q
      vals[static_cast<std::size_t>(g)] -= q * pv;
      moves.push_back({g, pivot, -q});
      renamed[static_cast<std::size_t>(g)] = true;
      const Word back = Word::letter(g) * Word::letter(pivot, q);
      std::vector<Word> images;
      for (Gen h = 0; h < m; ++h) images.push_back(h == g ? back : Word::letter(h));
      for (Word& w : old_in_new) w = substitute(w, images);
    }
  }
  const auto nz = nonzero();
  const Gen t = nz.front();
  if (vals[static_cast<std::size_t>(t)] < 0) {
    vals[static_cast<std::size_t>(t)] = 1;
    moves.push_back({t, t, 0});
    renamed[static_cast<std::size_t>(t)] = true;
    std::vector<Word> images;
    for (Gen h = 0; h < m; ++h) images.push_back(h == t ? Word::letter(t, -1) : Word::letter(h));
    for (Word& w : old_in_new) w = substitute(w, images);
  }

  std::vector<std::string> names = p.names();
  for (Gen g = 0; g < m; ++g) {
    if (renamed[static_cast<std::size_t>(g)]) names[static_cast<std::size_t>(g)] += "'";
  }
  std::vector<Word> relators;
  for (const Word& r : p.relators()) relators.push_back(substitute(r, old_in_new));
  return {Presentation(std::move(names), std::move(relators)), t, Chi{std::move(vals)},
          std::move(moves), std::move(old_in_new)};
}

}  // namespace largeness
