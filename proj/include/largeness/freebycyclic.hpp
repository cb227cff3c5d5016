#pragma once

// Free-group endomorphisms, mapping tori F_n x| Z, doubling, and the
// reducible-automorphism largeness certifier.

#include <algorithm>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "largeness/certificate.hpp"
#include "largeness/coset_table.hpp"
#include "largeness/errors.hpp"
#include "largeness/fox.hpp"
#include "largeness/integer_matrix.hpp"
#include "largeness/presentation.hpp"
#include "largeness/pv.hpp"
#include "largeness/reidemeister_schreier.hpp"
#include "largeness/word.hpp"

namespace largeness {

/// x_i -> images[i] on the free group with basis names[0..n-1].
struct FreeEndomorphism {
  std::vector<std::string> names;
  std::vector<Word> images;

  FreeEndomorphism() = default;
  FreeEndomorphism(std::vector<std::string> basis, std::vector<Word> imgs)
      : names(std::move(basis)), images(std::move(imgs)) {
    if (names.size() != images.size()) throw DomainError("FreeEndomorphism: one image per basis element");
    for (const Word& w : images) {
      if (w.max_gen() >= rank()) throw DomainError("FreeEndomorphism: image uses a letter outside the basis");
    }
  }

  static FreeEndomorphism identity(std::vector<std::string> basis) {
    std::vector<Word> imgs;
    for (std::size_t i = 0; i < basis.size(); ++i) imgs.push_back(Word::letter(static_cast<Gen>(i)));
    return FreeEndomorphism(std::move(basis), std::move(imgs));
  }

  int rank() const { return static_cast<int>(names.size()); }
  Word operator()(const Word& w) const { return substitute(w, images); }

  /// (f * g)(w) = f(g(w)).
  friend FreeEndomorphism operator*(const FreeEndomorphism& f, const FreeEndomorphism& g) {
    if (f.rank() != g.rank()) throw DomainError("composing endomorphisms of different rank");
    std::vector<Word> imgs;
    for (const Word& w : g.images) imgs.push_back(f(w));
    return FreeEndomorphism(f.names, std::move(imgs));
  }

  FreeEndomorphism pow(unsigned k) const {
    FreeEndomorphism r = identity(names);
    for (unsigned i = 0; i < k; ++i) r = *this * r;
    return r;
  }

  friend bool operator==(const FreeEndomorphism& a, const FreeEndomorphism& b) { return a.images == b.images; }
};

inline std::vector<std::string> default_basis_names(int n) {
  std::vector<std::string> out;
  for (int i = 1; i <= n; ++i) out.push_back("x" + std::to_string(i));
  return out;
}

/// Column j holds the exponent sums of f(x_j).
inline IntMatrix abelianized_matrix(const FreeEndomorphism& f) {
  const auto n = static_cast<std::size_t>(f.rank());
  IntMatrix m(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (const Run& r : f.images[j].runs()) m(static_cast<std::size_t>(r.gen), j) += r.exp;
  return m;
}

namespace detail {

/// Stallings folding of the bouquet of images. Every edge carries a tag, a
/// word in symbols s_j standing for images[j], such that the tags along a
/// closed path at the base multiply to a word whose image is the label.
/// Returns, when the images form a basis, the tag of the loop x_i at the
/// base for each i, i.e. f^-1(x_i) as a word in the x's.
inline std::optional<std::vector<Word>> fold_inverse(const std::vector<Word>& images, int rank) {
  struct Edge {
    int src, dst;
    Gen gen;
    Word tag;
    bool alive = true;
  };
  std::vector<Edge> edges;
  int vertices = 1;
  for (std::size_t j = 0; j < images.size(); ++j) {
    const auto letters = images[j].letters();
    if (letters.empty()) return std::nullopt;
    int cur = 0;
    for (std::size_t k = 0; k < letters.size(); ++k) {
      const int next = k + 1 == letters.size() ? 0 : vertices++;
      const Gen g = std::abs(letters[k]) - 1;
      Word tag = k == 0 ? Word::letter(static_cast<Gen>(j)) : Word{};
      if (letters[k] > 0) {
        edges.push_back({cur, next, g, std::move(tag)});
      } else {
        edges.push_back({next, cur, g, tag.inverse()});
      }
      cur = next;
    }
  }
  // half-edge (vertex, gen, outgoing?) -> edge
  for (;;) {
    std::map<std::tuple<int, Gen, bool>, std::size_t> seen;
    bool folded = false;
    for (std::size_t e = 0; e < edges.size() && !folded; ++e) {
      if (!edges[e].alive) continue;
      for (bool out : {true, false}) {
        const int at = out ? edges[e].src : edges[e].dst;
        auto [it, fresh] = seen.emplace(std::make_tuple(at, edges[e].gen, out), e);
        if (fresh) continue;
        const std::size_t e1 = it->second, e2 = e;
        // orient both as leaving `at`
        auto far = [&](std::size_t x) { return out ? edges[x].dst : edges[x].src; };
        auto tag_out = [&](std::size_t x) { return out ? edges[x].tag : edges[x].tag.inverse(); };
        int v1 = far(e1), v2 = far(e2);
        std::size_t keep = e1, drop = e2;
        if (v1 == v2) {
          if (!(tag_out(e1) == tag_out(e2))) return std::nullopt;  // a relation among the images
          edges[e2].alive = false;
          folded = true;
          break;
        }
        if (v2 == 0) {
          std::swap(v1, v2);
          std::swap(keep, drop);
        }
        // gauge v2 by g so that drop's tag matches keep's, then merge v2 into v1
        const Word g = tag_out(keep).inverse() * tag_out(drop);
        for (Edge& x : edges) {
          if (!x.alive) continue;
          if (x.src == v2) x.tag = g * x.tag;
          if (x.dst == v2) x.tag = x.tag * g.inverse();
        }
        for (Edge& x : edges) {
          if (x.src == v2) x.src = v1;
          if (x.dst == v2) x.dst = v1;
        }
        edges[drop].alive = false;
        folded = true;
        break;
      }
    }
    if (!folded) break;
  }
  std::vector<std::optional<Word>> loop(static_cast<std::size_t>(rank));
  for (const Edge& e : edges) {
    if (!e.alive) continue;
    if (e.src != 0 || e.dst != 0) return std::nullopt;  // proper subgroup
    loop[static_cast<std::size_t>(e.gen)] = e.tag;
  }
  std::vector<Word> out;
  for (auto& w : loop) {
    if (!w) return std::nullopt;
    out.push_back(std::move(*w));
  }
  return out;
}

}  // namespace detail

/// The inverse automorphism, or nothing when f is not an automorphism.
/// Greedy Nielsen reduction of the image tuple decides most cases and its
/// replayed moves give the inverse; Stallings folding settles the rest.
inline std::optional<FreeEndomorphism> is_automorphism(const FreeEndomorphism& f) {
  const Integer d = determinant(abelianized_matrix(f));
  if (d != 1 && d != -1) return std::nullopt;
  const int n = f.rank();
  const NielsenResult red = nielsen_reduce(f.images);
  bool signed_perm = red.identity_positions.empty();
  std::vector<int> slot(static_cast<std::size_t>(n), -1);
  for (std::size_t i = 0; signed_perm && i < red.tuple.size(); ++i) {
    const Word& w = red.tuple[i];
    if (w.length() != 1 || slot[static_cast<std::size_t>(w.runs()[0].gen)] >= 0) {
      signed_perm = false;
      break;
    }
    slot[static_cast<std::size_t>(w.runs()[0].gen)] = static_cast<int>(i);
  }
  std::vector<Word> inv(static_cast<std::size_t>(n));
  if (signed_perm) {
    // the same moves on the formal basis give words W_i with f(W_i) = tuple_i
    std::vector<Word> formal;
    for (Gen g = 0; g < n; ++g) formal.push_back(Word::letter(g));
    for (const NielsenMove& m : red.moves) apply_move(formal, m);
    for (Gen g = 0; g < n; ++g) {
      const auto i = static_cast<std::size_t>(slot[static_cast<std::size_t>(g)]);
      inv[static_cast<std::size_t>(g)] = red.tuple[i].runs()[0].exp > 0 ? formal[i] : formal[i].inverse();
    }
  } else {
    auto folded = detail::fold_inverse(f.images, n);
    if (!folded) return std::nullopt;
    inv = std::move(*folded);
  }
  FreeEndomorphism g(f.names, std::move(inv));
  const FreeEndomorphism id = FreeEndomorphism::identity(f.names);
  if (!(f * g == id) || !(g * f == id)) throw InternalError("is_automorphism: computed inverse does not invert");
  return g;
}

/// <t, x_1..x_n | t x_i t^-1 = f(x_i)>, generator 0 is t.
inline Presentation mapping_torus(const FreeEndomorphism& f, const std::string& stable = "t") {
  if (!is_automorphism(f)) throw DomainError("mapping_torus: map is not an automorphism");
  std::vector<std::string> names = {stable};
  names.insert(names.end(), f.names.begin(), f.names.end());
  std::vector<Word> shift;
  for (Gen g = 0; g < f.rank(); ++g) shift.push_back(Word::letter(g + 1));
  const Word t = Word::letter(0);
  std::vector<Word> relators;
  for (Gen g = 0; g < f.rank(); ++g) {
    relators.push_back(t * Word::letter(g + 1) * t.inverse() * substitute(f.images[static_cast<std::size_t>(g)], shift).inverse());
  }
  Presentation p(std::move(names), std::move(relators));
  if (p.relator_count() != f.rank()) throw InternalError("mapping_torus: a relator collapsed");
  return p;
}

/// f on the first n letters and an index-shifted copy of f on the next n.
/// Names of the copy are `copy_names` (default: primed names).
inline FreeEndomorphism double_map(const FreeEndomorphism& f, std::vector<std::string> copy_names = {}) {
  const int n = f.rank();
  if (copy_names.empty()) {
    for (const auto& s : f.names) copy_names.push_back(s + "'");
  }
  if (static_cast<int>(copy_names.size()) != n) throw DomainError("double_map: wrong number of copy names");
  std::vector<std::string> names = f.names;
  names.insert(names.end(), copy_names.begin(), copy_names.end());
  std::vector<Word> shift;
  for (Gen g = 0; g < n; ++g) shift.push_back(Word::letter(g + n));
  std::vector<Word> imgs = f.images;
  for (const Word& w : f.images) imgs.push_back(substitute(w, shift));
  return FreeEndomorphism(std::move(names), std::move(imgs));
}

/// Restriction to the invariant prefix x_1..x_r and the induced map on the
/// quotient by its normal closure.
inline std::pair<FreeEndomorphism, FreeEndomorphism> restriction_and_quotient(const FreeEndomorphism& f, int r) {
  const int n = f.rank();
  if (r <= 0 || r >= n) throw DomainError("restriction_and_quotient: split must satisfy 0 < r < rank");
  for (Gen g = 0; g < r; ++g) {
    if (f.images[static_cast<std::size_t>(g)].max_gen() >= r)
      throw DomainError("restriction_and_quotient: image of '" + f.names[static_cast<std::size_t>(g)] +
                        "' leaves the prefix");
  }
  std::vector<std::string> rn(f.names.begin(), f.names.begin() + r), qn(f.names.begin() + r, f.names.end());
  std::vector<Word> ri(f.images.begin(), f.images.begin() + r);
  // pi kills the prefix and renumbers the rest from 0
  std::vector<Word> pi;
  for (Gen g = 0; g < n; ++g) pi.push_back(g < r ? Word{} : Word::letter(g - r));
  std::vector<Word> qi;
  for (Gen g = r; g < n; ++g) qi.push_back(substitute(f.images[static_cast<std::size_t>(g)], pi));
  FreeEndomorphism fr(std::move(rn), std::move(ri)), fq(std::move(qn), std::move(qi));
  if (!is_automorphism(fq)) throw InternalError("restriction_and_quotient: quotient map is not an automorphism");
  return {std::move(fr), std::move(fq)};
}

inline IntPoly characteristic_polynomial(const FreeEndomorphism& f) { return char_poly(abelianized_matrix(f)); }

// ---------------------------------------------------------------------------
// Certifier for reducible automorphisms

namespace detail {

/// Table of the index-j subgroup <t^j, F_n> of a mapping torus (t is
/// generator 0).
inline CosetTable cyclic_cover_table(int generators, std::size_t j) {
  std::vector<int> data;
  for (std::size_t c = 0; c < j; ++c)
    for (Gen g = 0; g < generators; ++g) {
      if (g == 0) {
        data.push_back(static_cast<int>((c + 1) % j));
        data.push_back(static_cast<int>((c + j - 1) % j));
      } else {
        data.push_back(static_cast<int>(c));
        data.push_back(static_cast<int>(c));
      }
    }
  return standardize(CosetTable(generators, j, std::move(data)));
}

/// Length of the t-cycle through coset 0, i.e. the least k with t^k in H.
inline std::size_t stable_cycle(const CosetTable& t) {
  std::size_t c = static_cast<std::size_t>(t.act(0, 0)), k = 1;
  while (c != 0) {
    c = static_cast<std::size_t>(t.act(c, 0));
    ++k;
  }
  return k;
}

}  // namespace detail

/// Builds, for f = (A * B) with f(A) = A and f(B) inside the normal closure
/// of B, the subgroup K of the mapping torus G cut out by the witnesses on
/// the restricted and quotient tori and the index-j cyclic cover, and a chi
/// on K factoring through the quotient torus and killing t^j. Delta_{K,chi}
/// is zero in the situation of the reducible-automorphism argument.
inline Verdict certify_reducible_largeness(const FreeEndomorphism& f, int r, const CosetTable& witness_r,
                                           const CosetTable& witness_q) {
  const auto [fr, fq] = restriction_and_quotient(f, r);
  const Presentation g = mapping_torus(f), pr = mapping_torus(fr), pq = mapping_torus(fq);
  for (const auto& [p, w, label] : {std::tuple{&pr, &witness_r, "restricted"}, std::tuple{&pq, &witness_q, "quotient"}}) {
    if (auto d = table_defect(*p, *w)) throw DomainError(std::string("certify_reducible_largeness: ") + label + " witness: " + *d);
    const AbelianInvariants inv = abelian_invariants(rs_presentation(*p, *w));
    if (inv.rank < 2)
      throw DomainError(std::string("certify_reducible_largeness: ") + label + " witness has first Betti number " +
                        std::to_string(inv.rank));
  }
  const int n = f.rank();
  Evidence ev;
  // theta_r kills B, theta_q kills A; generator 0 of every torus is t
  std::vector<Word> theta_r = {Word::letter(0)}, theta_q = {Word::letter(0)};
  for (Gen x = 0; x < n; ++x) {
    theta_r.push_back(x < r ? Word::letter(x + 1) : Word{});
    theta_q.push_back(x < r ? Word{} : Word::letter(x - r + 1));
  }
  for (Gen x = r; x < n; ++x) {
    std::vector<Word> kill_b;
    for (Gen y = 0; y < n; ++y) kill_b.push_back(y < r ? Word::letter(y) : Word{});
    if (!substitute(f.images[static_cast<std::size_t>(x)], kill_b).is_identity()) {
      ev.observations.push_back("image of '" + f.names[static_cast<std::size_t>(x)] +
                                "' is not in the normal closure of the complementary factor; restriction map undefined");
      return Verdict::unknown(std::move(ev));
    }
  }

  const std::size_t j = std::lcm(detail::stable_cycle(witness_r), detail::stable_cycle(witness_q));
  ev.observations.push_back("stable letter power j = " + std::to_string(j));
  const CosetTable hq = intersect(witness_q, detail::cyclic_cover_table(pq.generator_count(), j));
  const CosetTable jr = intersect(preimage(g, theta_r, witness_r), detail::cyclic_cover_table(g.generator_count(), j));
  const CosetTable k = intersect(jr, preimage(g, theta_q, hq));
  ev.observations.push_back("subgroup index " + std::to_string(k.index()));

  // chi~ on H_q vanishing on s^j
  const Presentation hp = rs_presentation(pq, hq);
  const SchreierTransversal hs = schreier_transversal(hq);
  const std::vector<Exp> sj = exponent_vector(rewrite(hq, hs, 0, Word::letter(0, static_cast<Exp>(j))), hp.generator_count());
  const auto basis = hom_to_z_basis(hp);
  std::vector<Integer> chi_h;
  std::vector<Integer> dots;
  for (const auto& b : basis) {
    Integer d = 0;
    for (std::size_t i = 0; i < b.size(); ++i) d += b[i] * sj[i];
    dots.push_back(d);
  }
  for (std::size_t i = 0; i < basis.size() && chi_h.empty(); ++i) {
    if (dots[i] == 0) chi_h = basis[i];
  }
  if (chi_h.empty() && basis.size() >= 2) {
    chi_h.assign(basis[0].size(), 0);
    for (std::size_t i = 0; i < chi_h.size(); ++i) chi_h[i] = dots[1] * basis[0][i] - dots[0] * basis[1][i];
  }
  if (chi_h.empty()) {
    ev.observations.push_back("no homomorphism of the quotient witness kills the stable letter power");
    return Verdict::unknown(std::move(ev));
  }

  // chi on K's Schreier generators through theta_q
  Chi chi;
  for (const Word& w : schreier_generators(k)) {
    const Word image = substitute(w, theta_q);
    const std::vector<Exp> e = exponent_vector(rewrite(hq, hs, 0, image), hp.generator_count());
    Integer v = 0;
    for (std::size_t i = 0; i < e.size(); ++i) v += chi_h[i] * e[i];
    chi.values.push_back(static_cast<Exp>(v));
  }
  const Exp c = chi.content();
  if (c == 0) {
    ev.observations.push_back("induced homomorphism on the subgroup is trivial");
    return Verdict::unknown(std::move(ev));
  }
  for (Exp& v : chi.values) v /= c;
  ev.chi_set.push_back(chi);

  const Presentation kp = rs_presentation(g, k);
  const LaurentPoly delta = alexander_polynomial(kp, chi);
  ev.observations.push_back("alexander polynomial " + (delta.is_zero() ? std::string("0") : delta.to_string()));
  if (!delta.is_zero()) return Verdict::unknown(std::move(ev));
  return Verdict::certified(AlexanderVanishes{{k}, std::move(chi), std::nullopt}, std::move(ev));
}

}  // namespace largeness
