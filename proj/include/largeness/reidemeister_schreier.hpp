#pragma once

// Subgroup presentations from coset tables, plus intersections and
// preimages of finite-index subgroups.

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "largeness/coset_table.hpp"
#include "largeness/errors.hpp"
#include "largeness/presentation.hpp"
#include "largeness/word.hpp"

namespace largeness {

/// Spanning tree of a complete standardized table: the tree edge into each
/// coset d > 0 is its first appearance in the row-major scan.
struct SchreierTransversal {
  std::vector<Word> representatives;     // coset -> word reaching it from 0
  std::vector<int> generator_of_edge;    // (coset * gens + g) -> Schreier generator or -1 on tree edges
  std::vector<std::pair<std::size_t, Gen>> edges;  // Schreier generator -> (coset, gen)
};

inline SchreierTransversal schreier_transversal(const CosetTable& t) {
  const std::size_t n = t.index();
  const int m = t.generator_count();
  SchreierTransversal s;
  s.representatives.assign(n, Word{});
  std::vector<bool> seen(n, false);
  std::vector<bool> tree(n * static_cast<std::size_t>(m), false);
  seen[0] = true;
  for (std::size_t c = 0; c < n; ++c)
    for (int col = 0; col < static_cast<int>(t.columns()); ++col) {
      const auto d = static_cast<std::size_t>(t.at(c, col));
      if (seen[d]) continue;
      seen[d] = true;
      const Gen g = col / 2;
      if (col % 2 == 0) {
        s.representatives[d] = s.representatives[c] * Word::letter(g);
        tree[c * static_cast<std::size_t>(m) + static_cast<std::size_t>(g)] = true;
      } else {
        s.representatives[d] = s.representatives[c] * Word::letter(g, -1);
        tree[d * static_cast<std::size_t>(m) + static_cast<std::size_t>(g)] = true;
      }
    }
  s.generator_of_edge.assign(n * static_cast<std::size_t>(m), -1);
  for (std::size_t c = 0; c < n; ++c)
    for (Gen g = 0; g < m; ++g) {
      const std::size_t e = c * static_cast<std::size_t>(m) + static_cast<std::size_t>(g);
      if (tree[e]) continue;
      s.generator_of_edge[e] = static_cast<int>(s.edges.size());
      s.edges.emplace_back(c, g);
    }
  return s;
}

/// Schreier generators rep(c) x rep(c x)^-1 of the subgroup, as words in
/// the ambient generators, in the order of rs_presentation's generators.
inline std::vector<Word> schreier_generators(const CosetTable& t) {
  const SchreierTransversal s = schreier_transversal(t);
  std::vector<Word> out;
  out.reserve(s.edges.size());
  for (const auto& [c, g] : s.edges) {
    const auto d = static_cast<std::size_t>(t.act(c, g));
    out.push_back(s.representatives[c] * Word::letter(g) * s.representatives[d].inverse());
  }
  return out;
}

/// Rewrites a word read from coset `start` into the Schreier generators.
inline Word rewrite(const CosetTable& t, const SchreierTransversal& s, std::size_t start, const Word& w) {
  const auto m = static_cast<std::size_t>(t.generator_count());
  Word out;
  std::size_t c = start;
  for (const Run& r : w.runs()) {
    const auto g = static_cast<std::size_t>(r.gen);
    for (Exp i = 0; i < (r.exp > 0 ? r.exp : -r.exp); ++i) {
      if (r.exp > 0) {
        const int sg = s.generator_of_edge[c * m + g];
        if (sg >= 0) out.push(sg, 1);
        c = static_cast<std::size_t>(t.act(c, r.gen));
      } else {
        const auto d = static_cast<std::size_t>(t.act(c, r.gen, -1));
        const int sg = s.generator_of_edge[d * m + g];
        if (sg >= 0) out.push(sg, -1);
        c = d;
      }
    }
  }
  return out;
}

/// Reidemeister-Schreier presentation of the subgroup described by a
/// complete table: one generator "<gen>_<coset>" per non-tree edge, one
/// relator per (coset, relator) pair. Each rewritten relator is conjugate to
/// a nontrivial free-group element, so none is dropped and a deficiency-1
/// input gives a deficiency-1 output. With simplify_output the result is
/// passed through generator elimination.
inline Presentation rs_presentation(const Presentation& p, const CosetTable& t, bool simplify_output = false) {
  if (auto defect = table_defect(p, t)) throw DomainError("rs_presentation: " + *defect);
  const SchreierTransversal s = schreier_transversal(t);
  std::vector<std::string> names;
  names.reserve(s.edges.size());
  for (const auto& [c, g] : s.edges) names.push_back(p.name(g) + "_" + std::to_string(c));
  std::vector<Word> relators;
  for (std::size_t c = 0; c < t.index(); ++c)
    for (const Word& r : p.relators()) relators.push_back(rewrite(t, s, c, r));
  Presentation out(std::move(names), std::move(relators));
  if (out.relator_count() != static_cast<int>(t.index()) * p.relator_count())
    throw InternalError("rs_presentation: a rewritten relator collapsed");
  return simplify_output ? simplify(std::move(out)) : out;
}

/// Intersection of two subgroups given by complete tables over the same
/// presentation: the orbit of (0,0) in the product action.
inline CosetTable intersect(const CosetTable& a, const CosetTable& b) {
  if (a.generator_count() != b.generator_count()) throw DomainError("intersect: tables over different presentations");
  const std::size_t cols = a.columns();
  std::map<std::pair<int, int>, int> id;
  std::vector<std::pair<int, int>> order = {{0, 0}};
  id[{0, 0}] = 0;
  std::vector<int> data;
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto [x, y] = order[k];
    for (std::size_t c = 0; c < cols; ++c) {
      const std::pair<int, int> next{a.at(static_cast<std::size_t>(x), static_cast<int>(c)),
                                     b.at(static_cast<std::size_t>(y), static_cast<int>(c))};
      auto it = id.find(next);
      if (it == id.end()) {
        it = id.emplace(next, static_cast<int>(order.size())).first;
        order.push_back(next);
      }
      data.push_back(it->second);
    }
  }
  return standardize(CosetTable(a.generator_count(), order.size(), std::move(data)));
}

/// Preimage of the subgroup of tq under the homomorphism sending generator
/// g of p to theta[g] (a word over tq's presentation). Throws DomainError
/// when some relator of p moves a coset of tq, i.e. theta does not induce
/// an action.
inline CosetTable preimage(const Presentation& p, const std::vector<Word>& theta, const CosetTable& tq) {
  if (static_cast<int>(theta.size()) != p.generator_count())
    throw DomainError("preimage: need one image per generator");
  const std::size_t n = tq.index();
  const auto m = static_cast<std::size_t>(p.generator_count());
  std::vector<std::vector<int>> perm(m, std::vector<int>(n));
  for (std::size_t g = 0; g < m; ++g) {
    if (theta[g].max_gen() >= tq.generator_count()) throw DomainError("preimage: image uses an unknown generator");
    for (std::size_t c = 0; c < n; ++c) perm[g][c] = static_cast<int>(tq.image(c, theta[g]));
  }
  std::vector<std::vector<int>> inv(m, std::vector<int>(n));
  for (std::size_t g = 0; g < m; ++g)
    for (std::size_t c = 0; c < n; ++c) inv[g][static_cast<std::size_t>(perm[g][c])] = static_cast<int>(c);
  // relators of p must act trivially
  for (const Word& r : p.relators()) {
    for (std::size_t c = 0; c < n; ++c) {
      std::size_t x = c;
      for (const Run& run : r.runs()) {
        const auto& pg = run.exp > 0 ? perm[static_cast<std::size_t>(run.gen)] : inv[static_cast<std::size_t>(run.gen)];
        for (Exp i = 0; i < (run.exp > 0 ? run.exp : -run.exp); ++i) x = static_cast<std::size_t>(pg[x]);
      }
      if (x != c) throw DomainError("preimage: theta is inconsistent with the table (a relator moves a coset)");
    }
  }
  std::vector<int> data(n * 2 * m);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t g = 0; g < m; ++g) {
      data[c * 2 * m + 2 * g] = perm[g][c];
      data[c * 2 * m + 2 * g + 1] = inv[g][c];
    }
  return standardize(CosetTable(p.generator_count(), n, std::move(data)));
}

}  // namespace largeness
