#pragma once

// Small permutation groups by explicit closure: structure flags for finite
// images and the exhaustive order-lemma search.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "largeness/coset_table.hpp"
#include "largeness/errors.hpp"

namespace largeness {

using Perm = std::vector<int>;

/// Apply a then b (right action): x -> b[a[x]].
inline Perm compose(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[static_cast<std::size_t>(a[i])];
  return out;
}

inline Perm invert(const Perm& a) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[static_cast<std::size_t>(a[i])] = static_cast<int>(i);
  return out;
}

inline Perm identity_perm(std::size_t n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

inline Perm perm_pow(const Perm& a, long long k) {
  Perm base = k >= 0 ? a : invert(a);
  unsigned long long e = static_cast<unsigned long long>(k >= 0 ? k : -k);
  Perm r = identity_perm(a.size());
  while (e) {
    if (e & 1) r = compose(r, base);
    base = compose(base, base);
    e >>= 1;
  }
  return r;
}

inline std::size_t perm_order(const Perm& a) {
  std::size_t ord = 1;
  std::vector<bool> seen(a.size(), false);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (seen[i]) continue;
    std::size_t len = 0;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(a[j])) {
      seen[j] = true;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

/// All elements of <gens>, sorted. Throws ResourceLimit past max_order.
inline std::vector<Perm> group_elements(const std::vector<Perm>& gens, std::size_t degree,
                                        std::size_t max_order = 100000) {
  std::set<Perm> seen = {identity_perm(degree)};
  std::vector<Perm> frontier = {identity_perm(degree)};
  while (!frontier.empty()) {
    std::vector<Perm> next;
    for (const Perm& x : frontier)
      for (const Perm& g : gens) {
        Perm y = compose(x, g);
        if (seen.insert(y).second) {
          if (seen.size() > max_order) throw ResourceLimit("permutation group order exceeds " + std::to_string(max_order));
          next.push_back(std::move(y));
        }
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

/// Finite permutation group held as its full element list.
class PermGroup {
 public:
  PermGroup(std::vector<Perm> gens, std::size_t degree, std::size_t max_order = 100000)
      : gens_(std::move(gens)), degree_(degree), elements_(group_elements(gens_, degree, max_order)) {}

  std::size_t order() const { return elements_.size(); }
  std::size_t degree() const { return degree_; }
  const std::vector<Perm>& generators() const { return gens_; }
  const std::vector<Perm>& elements() const { return elements_; }
  bool contains(const Perm& p) const { return std::binary_search(elements_.begin(), elements_.end(), p); }

  bool is_abelian() const { return generators_commute(gens_); }

  /// Generators of the derived subgroup: normal closure of the generator
  /// commutators.
  std::vector<Perm> derived_generators() const {
    std::vector<Perm> s;
    for (std::size_t i = 0; i < gens_.size(); ++i)
      for (std::size_t j = i + 1; j < gens_.size(); ++j) {
        const Perm& a = gens_[i];
        const Perm& b = gens_[j];
        Perm c = compose(compose(compose(a, b), invert(a)), invert(b));
        if (c != identity_perm(degree_)) s.push_back(std::move(c));
      }
    return normal_closure(s);
  }

  bool is_metabelian() const {
    if (is_abelian()) return true;
    return generators_commute(derived_generators());
  }

  /// Some cyclic normal subgroup <g> has cyclic quotient.
  bool is_metacyclic() const {
    if (!is_metabelian()) return false;
    const std::size_t n = order();
    for (const Perm& g : elements_) {
      // <g> normal?
      bool normal = true;
      const std::set<Perm> cyc = cyclic_set(g);
      for (const Perm& h : gens_) {
        if (!cyc.count(compose(compose(invert(h), g), h))) {
          normal = false;
          break;
        }
      }
      if (!normal) continue;
      const std::size_t want = n / cyc.size();
      for (const Perm& h : elements_) {
        // order of h modulo <g>
        Perm x = h;
        std::size_t k = 1;
        while (!cyc.count(x)) {
          x = compose(x, h);
          ++k;
        }
        if (k == want) return true;
      }
    }
    return false;
  }

 private:
  std::set<Perm> cyclic_set(const Perm& g) const {
    std::set<Perm> out;
    Perm x = identity_perm(degree_);
    do {
      out.insert(x);
      x = compose(x, g);
    } while (!out.count(x));
    return out;
  }

  static bool generators_commute(const std::vector<Perm>& gs) {
    for (std::size_t i = 0; i < gs.size(); ++i)
      for (std::size_t j = i + 1; j < gs.size(); ++j) {
        if (compose(gs[i], gs[j]) != compose(gs[j], gs[i])) return false;
      }
    return true;
  }

  std::vector<Perm> normal_closure(std::vector<Perm> s) const {
    if (s.empty()) return s;
    for (;;) {
      const std::vector<Perm> elems = group_elements(s, degree_);
      bool grew = false;
      for (const Perm& x : std::vector<Perm>(s))
        for (const Perm& h : gens_) {
          Perm c = compose(compose(invert(h), x), h);
          if (!std::binary_search(elems.begin(), elems.end(), c)) {
            s.push_back(std::move(c));
            grew = true;
          }
        }
      if (!grew) return s;
    }
  }

  std::vector<Perm> gens_;
  std::size_t degree_;
  std::vector<Perm> elements_;
};

/// Generator permutations of a complete coset table.
inline std::vector<Perm> table_permutations(const CosetTable& t) {
  std::vector<Perm> out;
  for (Gen g = 0; g < t.generator_count(); ++g) {
    Perm p(t.index());
    for (std::size_t c = 0; c < t.index(); ++c) p[c] = t.act(c, g);
    out.push_back(std::move(p));
  }
  return out;
}

struct OrderLemmaCounterexample {
  Perm g, h;
  long long k = 0, m = 0, n = 0;
};

/// Searches for g, h of equal order > 1 with h^k g^m h^-k = g^n, |m - n| = 1,
/// 1 <= k <= k_max and |m|, |n| <= mn_max. A finite group never has one.
inline std::optional<OrderLemmaCounterexample> verify_order_lemma(const std::vector<Perm>& gens, std::size_t degree,
                                                                  long long k_max, long long mn_max,
                                                                  std::size_t max_order = 10000) {
  const std::vector<Perm> elems = group_elements(gens, degree, max_order);
  std::vector<std::size_t> ord(elems.size());
  for (std::size_t i = 0; i < elems.size(); ++i) ord[i] = perm_order(elems[i]);
  for (std::size_t gi = 0; gi < elems.size(); ++gi) {
    if (ord[gi] == 1) continue;
    const Perm& g = elems[gi];
    std::vector<Perm> gp;  // g^e for e in [-mn_max-1, mn_max+1]
    for (long long e = -mn_max - 1; e <= mn_max + 1; ++e) gp.push_back(perm_pow(g, e));
    auto gpow = [&](long long e) -> const Perm& { return gp[static_cast<std::size_t>(e + mn_max + 1)]; };
    for (std::size_t hi = 0; hi < elems.size(); ++hi) {
      if (ord[hi] != ord[gi]) continue;
      const Perm& h = elems[hi];
      for (long long k = 1; k <= k_max; ++k) {
        const Perm hk = perm_pow(h, k), hk_inv = invert(hk);
        for (long long m = -mn_max; m <= mn_max; ++m) {
          const Perm lhs = compose(compose(hk_inv, gpow(m)), hk);  // as words: h^k g^m h^-k under right action
          for (long long n : {m - 1, m + 1}) {
            if (n < -mn_max || n > mn_max) continue;
            if (lhs == gpow(n)) return OrderLemmaCounterexample{g, h, k, m, n};
          }
        }
      }
    }
  }
  return std::nullopt;
}

}  // namespace largeness
