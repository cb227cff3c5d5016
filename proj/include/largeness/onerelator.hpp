#pragma once

// Two-generator one-relator groups: height of a zero-exponent relator, the
// height-1 largeness driver, the standard families and finite-image scans.

#include <algorithm>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "largeness/certificate.hpp"
#include "largeness/errors.hpp"
#include "largeness/fox.hpp"
#include "largeness/integer_matrix.hpp"
#include "largeness/laurent.hpp"
#include "largeness/low_index.hpp"
#include "largeness/permutation.hpp"
#include "largeness/presentation.hpp"
#include "largeness/reidemeister_schreier.hpp"
#include "largeness/word.hpp"

namespace largeness {

/// A letter a_i = t^i a t^-i raised to a power.
struct SubscriptedRun {
  long subscript = 0;
  Exp exp = 0;
  friend auto operator<=>(const SubscriptedRun&, const SubscriptedRun&) = default;
};

struct HeightData {
  std::vector<SubscriptedRun> rewritten;  // normalized: smallest subscript is 0
  long min_sub = 0;
  long max_sub = 0;
  long height = 0;
  std::size_t length = 0;       // k, when height == 1
  std::vector<Exp> exponents;   // i_1 .. i_2k, when height == 1
};

/// Rewrites a relator with zero t-exponent sum in the letters a_i. The
/// cyclic sequence is normalized to the lexicographically greatest
/// representative over rotations and inversion, so for height 1 it starts
/// with an a_1 run and the exponents read i_1, i_2, ... with odd positions
/// on a_1.
inline HeightData moldavanskii_rewrite(const Word& w, Gen a, Gen t) {
  const Word core = cyclic_reduce(w).core;
  if (exponent_sum(core, t) != 0) throw DomainError("moldavanskii_rewrite: nonzero t-exponent sum");
  if (core.is_identity()) throw DomainError("moldavanskii_rewrite: trivial relator");
  std::vector<SubscriptedRun> seq;
  long s = 0;
  for (const Run& r : core.runs()) {
    if (r.gen == t) {
      s += static_cast<long>(r.exp);
    } else if (r.gen == a) {
      if (!seq.empty() && seq.back().subscript == s) {
        seq.back().exp += r.exp;
        if (seq.back().exp == 0) seq.pop_back();
      } else {
        seq.push_back({s, r.exp});
      }
    } else {
      throw DomainError("moldavanskii_rewrite: word uses a generator other than a and t");
    }
  }
  while (seq.size() > 1 && seq.front().subscript == seq.back().subscript) {
    seq.front().exp += seq.back().exp;
    seq.pop_back();
    if (seq.front().exp == 0) seq.erase(seq.begin());
  }
  if (seq.empty()) throw InternalError("moldavanskii_rewrite: rewritten word is empty");

  long lo = seq.front().subscript, hi = lo;
  for (const auto& x : seq) {
    lo = std::min(lo, x.subscript);
    hi = std::max(hi, x.subscript);
  }
  for (auto& x : seq) x.subscript -= lo;

  std::vector<SubscriptedRun> inv(seq.rbegin(), seq.rend());
  for (auto& x : inv) x.exp = -x.exp;
  std::vector<SubscriptedRun> best;
  for (const auto* src : {&seq, &inv}) {
    for (std::size_t k = 0; k < src->size(); ++k) {
      std::vector<SubscriptedRun> rot(src->begin() + static_cast<std::ptrdiff_t>(k), src->end());
      rot.insert(rot.end(), src->begin(), src->begin() + static_cast<std::ptrdiff_t>(k));
      if (best.empty() || rot > best) best = std::move(rot);
    }
  }

  HeightData h;
  h.rewritten = std::move(best);
  h.min_sub = 0;
  h.max_sub = hi - lo;
  h.height = hi - lo;
  if (h.height == 1) {
    if (h.rewritten.size() % 2 != 0) throw InternalError("moldavanskii_rewrite: height-1 word of odd length");
    h.length = h.rewritten.size() / 2;
    for (std::size_t i = 0; i < h.rewritten.size(); ++i) {
      if (h.rewritten[i].subscript != (i % 2 == 0 ? 1 : 0))
        throw InternalError("moldavanskii_rewrite: subscripts do not alternate");
      h.exponents.push_back(h.rewritten[i].exp);
    }
  }
  return h;
}

/// A rebasing of a 2-generator 1-relator presentation in which generator t
/// has zero exponent sum in the relator.
struct ZeroSumCandidate {
  Presentation presentation;
  Gen a = 0;
  Gen t = 1;
  Chi chi;  // on the original generators; sends the new t to 1 and a to 0
};

/// Bases of F_2 in which the relator has zero exponent sum in one letter:
/// one when beta_1 = 1 (Euclid on the exponent pair), both letters when the
/// relator lies in the commutator subgroup.
inline std::vector<ZeroSumCandidate> zero_exponent_basis(const Presentation& p) {
  if (p.generator_count() != 2 || p.relator_count() != 1)
    throw DomainError("zero_exponent_basis: need a 2-generator 1-relator presentation");
  const Word& r = p.relators().front();
  if (r.is_identity()) throw DomainError("zero_exponent_basis: empty relator");
  const Exp sx = exponent_sum(r, 0), sy = exponent_sum(r, 1);
  std::vector<ZeroSumCandidate> out;
  if (sx == 0 && sy == 0) {
    out.push_back({p, 1, 0, Chi{{1, 0}}});
    out.push_back({p, 0, 1, Chi{{0, 1}}});
    return out;
  }
  const Exp g = std::gcd(sx, sy);
  Chi chi{{sy / g, -sx / g}};
  const Exp lead = chi.values[0] != 0 ? chi.values[0] : chi.values[1];
  if (lead < 0) chi.values = {-chi.values[0], -chi.values[1]};
  const ChiBasis b = abelianized_chi_basis(p, chi);
  const Gen t = b.t_index;
  const Gen a = 1 - t;
  if (exponent_sum(b.presentation.relators().front(), t) != 0)
    throw InternalError("zero_exponent_basis: rebased relator has nonzero t-sum");
  out.push_back({b.presentation, a, t, chi});
  return out;
}

/// (i_1 + i_3 + ...) t + (i_2 + i_4 + ...), canonical.
inline LaurentPoly height1_alexander(const HeightData& h) {
  if (h.height != 1) throw DomainError("height1_alexander: height is not 1");
  Integer c = 0, d = 0;
  for (std::size_t i = 0; i < h.exponents.size(); ++i) (i % 2 == 0 ? c : d) += h.exponents[i];
  return LaurentPoly(0, {d, c}).canonical();
}

// ---------------------------------------------------------------------------
// Families

/// <a, t | t a^m t^-1 a^-n>
inline Presentation baumslag_solitar(Exp m, Exp n) {
  if (m == 0 || n == 0) throw DomainError("baumslag_solitar: exponents must be nonzero");
  Word r = Word::letter(1) * Word::letter(0, m) * Word::letter(1, -1) * Word::letter(0, -n);
  return Presentation({"a", "t"}, {r});
}

/// <a, t | t a^i1 t^-1 a^i2 t a^i3 t^-1 a^i4 ...> from nonzero exponents
/// i_1 .. i_2k.
inline Presentation height_one_presentation(const std::vector<Exp>& exponents) {
  if (exponents.empty() || exponents.size() % 2 != 0)
    throw DomainError("height_one_presentation: need an even, positive number of exponents");
  Word r;
  for (std::size_t i = 0; i < exponents.size(); i += 2) {
    if (exponents[i] == 0 || exponents[i + 1] == 0) throw DomainError("height_one_presentation: zero exponent");
    r = r * Word::letter(1) * Word::letter(0, exponents[i]) * Word::letter(1, -1) * Word::letter(0, exponents[i + 1]);
  }
  return Presentation({"a", "t"}, {r});
}

/// v^k w^m v^-k w^-n, cyclically reduced. With proabelian_preserving the
/// exponents must differ by one.
inline Word higman_relator(const Word& w, const Word& v, Exp k, Exp m, Exp n, bool proabelian_preserving = false) {
  if (proabelian_preserving && std::abs(m - n) != 1)
    throw DomainError("higman_relator: |m - n| must be 1");
  return cyclic_reduce(v.pow(k) * w.pow(m) * v.pow(-k) * w.pow(-n)).core;
}

/// <a, t | (t a t^-1) a^m (t a t^-1)^-1 a^-n>
inline Presentation cmn(Exp m, Exp n) {
  const Word a = Word::letter(0), t = Word::letter(1);
  return Presentation({"a", "t"}, {higman_relator(a, t * a * t.inverse(), 1, m, n)});
}

/// Replaces t by s a s^-1 in the single relator of <a, t | w>; the new
/// stable letter s takes t's position. Delta goes from c t + d to c + d,
/// which is checked.
inline Presentation hnn_conjugate_extension(const Presentation& p, Gen a, Gen t) {
  if (p.generator_count() != 2 || p.relator_count() != 1 || a == t || a < 0 || t < 0 || a > 1 || t > 1)
    throw DomainError("hnn_conjugate_extension: need <a, t | w>");
  const Word& w = p.relators().front();
  if (exponent_sum(w, t) != 0) throw DomainError("hnn_conjugate_extension: nonzero t-exponent sum");
  std::vector<Word> images(2);
  images[static_cast<std::size_t>(a)] = Word::letter(a);
  images[static_cast<std::size_t>(t)] = Word::letter(t) * Word::letter(a) * Word::letter(t, -1);
  std::vector<std::string> names = p.names();
  std::string s = "s";
  while (s == names[static_cast<std::size_t>(a)]) s += "'";
  names[static_cast<std::size_t>(t)] = s;
  Presentation out(std::move(names), {substitute(w, images)});

  Chi chi{{0, 0}};
  chi.values[static_cast<std::size_t>(t)] = 1;
  const LaurentPoly before = alexander_polynomial(p, chi);
  const LaurentPoly after = alexander_polynomial(out, chi);
  if (after != LaurentPoly::constant(before.eval_at_one()).canonical())
    throw InternalError("hnn_conjugate_extension: Alexander polynomial did not transform as c t + d -> c + d");
  return out;
}

/// Applies hnn_conjugate_extension `times` times to <a, t | w>.
inline Presentation hnn_iterate(Presentation p, Gen a, Gen t, int times) {
  for (int i = 0; i < times; ++i) p = hnn_conjugate_extension(p, a, t);
  return p;
}

// ---------------------------------------------------------------------------
// Finite images

/// Image of every transitive permutation representation of degree <= D,
/// one per conjugacy class of point stabilizers, in low-index order.
inline std::vector<FiniteImage> finite_image_scan(const Presentation& p, std::size_t max_degree) {
  if (max_degree > 8) throw DomainError("finite_image_scan: degree above 8");
  std::vector<FiniteImage> out;
  if (max_degree == 0) return out;
  for (const CosetTable& t : low_index_subgroups(p, max_degree)) {
    const PermGroup g(table_permutations(t), t.index());
    FiniteImage f;
    f.degree = t.index();
    f.order = g.order();
    f.abelian = g.is_abelian();
    f.metabelian = f.abelian || g.is_metabelian();
    f.metacyclic = f.metabelian && g.is_metacyclic();
    out.push_back(f);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Height-1 driver

struct DriverBudget {
  std::size_t max_index = 8;
  std::size_t max_perm_degree = 5;
};

/// The first zero-sum rebasing in which the relator has height 1.
inline std::optional<std::pair<ZeroSumCandidate, HeightData>> height_one_form(const Presentation& p) {
  for (ZeroSumCandidate& c : zero_exponent_basis(p)) {
    HeightData h = moldavanskii_rewrite(c.presentation.relators().front(), c.a, c.t);
    if (h.height == 1) return std::make_pair(std::move(c), std::move(h));
  }
  return std::nullopt;
}

/// Content test on the closed-form Alexander polynomial, then a low-index
/// search for a subgroup whose abelianization needs 3 or more generators.
/// Never asserts non-largeness: failure gives Unknown with the evidence.
inline Verdict height1_largeness_driver(const Presentation& p, const DriverBudget& budget = {}) {
  const auto form = height_one_form(p);
  if (!form) throw DomainError("height1_largeness_driver: relator does not have height 1");
  const auto& [cand, h] = *form;
  Evidence ev;
  ev.max_index = budget.max_index;
  ev.max_perm_degree = budget.max_perm_degree;
  ev.chi_set.push_back(cand.chi);

  const LaurentPoly delta = height1_alexander(h);
  const HowieResult howie = howie_large_test(p, cand.chi);
  if (howie.delta != delta) throw InternalError("height1_largeness_driver: closed form disagrees with Fox calculus");
  ev.observations.push_back("alexander polynomial " + delta.to_string());
  if (howie.large) return Verdict::certified(AlexanderVanishes{{}, cand.chi, howie.prime}, std::move(ev));

  for (const CosetTable& t : low_index_subgroups(p, budget.max_index)) {
    AbelianInvariants inv = abelian_invariants(rs_presentation(p, t));
    ev.scans.push_back({t.index(), inv});
    if (inv.min_generators() >= 3) {
      ev.observations.push_back("subgroup of index " + std::to_string(t.index()) + " has abelianization " +
                                inv.to_string());
      return Verdict::certified(HeightOneBigAbelianization{t, std::move(inv)}, std::move(ev));
    }
  }
  ev.finite_images = finite_image_scan(p, budget.max_perm_degree);
  const bool all_metacyclic = std::all_of(ev.finite_images.begin(), ev.finite_images.end(),
                                          [](const FiniteImage& f) { return f.metacyclic; });
  ev.observations.push_back(all_metacyclic ? "all scanned finite images are metacyclic"
                                           : "some scanned finite image is not metacyclic");
  return Verdict::unknown(std::move(ev));
}

}  // namespace largeness
