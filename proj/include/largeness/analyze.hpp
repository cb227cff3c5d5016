#pragma once

// Top-level dispatch for a single presentation, and the height-1 census.

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "largeness/certificate.hpp"
#include "largeness/errors.hpp"
#include "largeness/integer_matrix.hpp"
#include "largeness/low_index.hpp"
#include "largeness/onerelator.hpp"
#include "largeness/presentation.hpp"
#include "largeness/reidemeister_schreier.hpp"

namespace largeness {

struct AnalyzeOptions {
  std::size_t max_index = 8;
  std::size_t max_perm_degree = 5;
  std::size_t max_chi = 200;
  /// chi candidates tried on each scanned subgroup
  std::size_t max_subgroup_chi = 20;
};

/// Primitive combinations, coefficients in [-2, 2], of a Hom(G, Z) basis,
/// one per sign class, first nonzero coefficient positive, at most `cap`.
/// Ordered by number of nonzero coefficients, then lexicographically.
inline std::vector<Chi> chi_candidates(const Presentation& p, std::size_t cap) {
  const auto basis = hom_to_z_basis(p);
  const std::size_t r = basis.size();
  std::vector<std::vector<int>> coefs;
  if (r == 0 || cap == 0) return {};
  std::vector<int> c(r, -2);
  for (;;) {
    int g = 0;
    for (int x : c) g = std::gcd(g, std::abs(x));
    const auto first = std::find_if(c.begin(), c.end(), [](int x) { return x != 0; });
    if (g == 1 && *first > 0) coefs.push_back(c);
    std::size_t i = 0;
    while (i < r && c[i] == 2) c[i++] = -2;
    if (i == r) break;
    ++c[i];
  }
  std::stable_sort(coefs.begin(), coefs.end(), [](const auto& a, const auto& b) {
    auto nz = [](const std::vector<int>& v) { return std::count_if(v.begin(), v.end(), [](int x) { return x != 0; }); };
    auto weight = [](const std::vector<int>& v) {
      int s = 0;
      for (int x : v) s += std::abs(x);
      return s;
    };
    if (nz(a) != nz(b)) return nz(a) < nz(b);
    if (weight(a) != weight(b)) return weight(a) < weight(b);
    return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
  });
  std::vector<Chi> out;
  for (const auto& k : coefs) {
    if (out.size() == cap) break;
    Chi chi;
    chi.values.assign(static_cast<std::size_t>(p.generator_count()), 0);
    for (std::size_t j = 0; j < r; ++j)
      for (std::size_t i = 0; i < chi.values.size(); ++i)
        chi.values[i] += static_cast<Exp>(k[j] * basis[j][i]);
    const Exp g = chi.content();
    if (g == 0) continue;
    for (Exp& v : chi.values) v /= g;
    if (std::find(out.begin(), out.end(), chi) == out.end()) out.push_back(std::move(chi));
  }
  return out;
}

namespace detail {

inline std::string chi_string(const Chi& chi) {
  std::string s = "(";
  for (std::size_t i = 0; i < chi.values.size(); ++i) s += (i ? "," : "") + std::to_string(chi.values[i]);
  return s + ")";
}

/// First candidate whose Alexander polynomial certifies largeness.
inline std::optional<std::pair<Chi, HowieResult>> first_howie_success(const Presentation& p, const std::vector<Chi>& cands,
                                                                      std::vector<std::string>* notes) {
  for (const Chi& chi : cands) {
    try {
      HowieResult h = howie_large_test(p, chi);
      if (notes) notes->push_back("chi " + chi_string(chi) + ": alexander polynomial " + h.delta.to_string());
      if (h.large) return std::make_pair(chi, std::move(h));
    } catch (const ResourceLimit& e) {
      if (notes) notes->push_back("chi " + chi_string(chi) + ": " + e.what());
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Deficiency >= 2; the height-1 driver for 2-generator 1-relator height-1
/// input; the Alexander test over the chi candidates; then the same test on
/// every subgroup of index <= max_index. Unknown carries what was searched.
inline Verdict analyze(const Presentation& p, const AnalyzeOptions& opt = {}) {
  if (deficiency(p) >= 2) {
    Evidence ev;
    ev.observations.push_back("deficiency " + std::to_string(deficiency(p)));
    return Verdict::certified(DeficiencyAtLeastTwo{p, {}}, std::move(ev));
  }
  if (p.generator_count() == 2 && p.relator_count() == 1 && height_one_form(p)) {
    return height1_largeness_driver(p, {opt.max_index, std::min<std::size_t>(opt.max_perm_degree, 8)});
  }

  Evidence ev;
  ev.max_index = opt.max_index;
  ev.chi_set = chi_candidates(p, opt.max_chi);
  if (ev.chi_set.empty()) ev.observations.push_back("first Betti number 0");
  if (auto hit = detail::first_howie_success(p, ev.chi_set, &ev.observations)) {
    return Verdict::certified(AlexanderVanishes{{}, hit->first, hit->second.prime}, std::move(ev));
  }

  // level by level, so a certificate at small index ends the search early
  for (std::size_t level = 2; level <= opt.max_index; ++level) {
    std::vector<CosetTable> subgroups;
    try {
      subgroups = low_index_subgroups(p, level);
    } catch (const ResourceLimit& e) {
      ev.observations.push_back(std::string("low-index search stopped: ") + e.what());
      break;
    }
    for (const CosetTable& t : subgroups) {
      if (t.index() != level) continue;
      const Presentation sub = rs_presentation(p, t);
      const AbelianInvariants inv = abelian_invariants(sub);
      ev.scans.push_back({t.index(), inv});
      if (inv.rank == 0) continue;
      const auto cands = chi_candidates(sub, opt.max_subgroup_chi);
      if (auto hit = detail::first_howie_success(sub, cands, nullptr)) {
        ev.observations.push_back("subgroup of index " + std::to_string(t.index()) + ", chi " +
                                  detail::chi_string(hit->first) + ": alexander polynomial " +
                                  hit->second.delta.to_string());
        return Verdict::certified(AlexanderVanishes{{t}, hit->first, hit->second.prime}, std::move(ev));
      }
    }
  }
  ev.max_perm_degree = std::min<std::size_t>(opt.max_perm_degree, 8);
  try {
    ev.finite_images = finite_image_scan(p, ev.max_perm_degree);
  } catch (const ResourceLimit& e) {
    ev.observations.push_back(std::string("finite image scan stopped: ") + e.what());
  }
  return Verdict::unknown(std::move(ev));
}

// ---------------------------------------------------------------------------
// Census

struct CensusOptions {
  int k = 1;           // relator t a^i1 t^-1 a^i2 ... has 2k exponents
  Exp bound = 4;       // exponents drawn from [-bound, bound] minus 0
  std::size_t samples = 100;
  std::uint64_t seed = 1;
  DriverBudget budget;
};

struct CensusSample {
  std::vector<Exp> exponents;
  Status status = Status::Unknown;
  std::string kind;  // certificate kind, empty when Unknown
  std::optional<Integer> prime;
};

struct CensusReport {
  CensusOptions options;
  std::vector<CensusSample> samples;
  std::map<std::string, std::size_t> histogram;
  std::size_t certified = 0;
  std::size_t unknown = 0;
};

/// Uniform nonzero exponents from a seeded mt19937_64; each sample goes
/// through the height-1 driver.
inline CensusReport run_census(const CensusOptions& opt) {
  if (opt.k < 1 || opt.bound < 1) throw DomainError("census: k and bound must be positive");
  CensusReport rep;
  rep.options = opt;
  std::mt19937_64 rng(opt.seed);
  // draw an index into the 2*bound nonzero values so the stream is
  // independent of the standard library's distribution implementation
  const auto width = static_cast<std::uint64_t>(2 * opt.bound);
  for (std::size_t s = 0; s < opt.samples; ++s) {
    CensusSample sample;
    for (int i = 0; i < 2 * opt.k; ++i) {
      std::uint64_t x;
      const std::uint64_t limit = UINT64_MAX - UINT64_MAX % width;
      do x = rng(); while (x >= limit);
      const auto v = static_cast<Exp>(x % width) - opt.bound;
      sample.exponents.push_back(v >= 0 ? v + 1 : v);
    }
    const Verdict v = height1_largeness_driver(height_one_presentation(sample.exponents), opt.budget);
    sample.status = v.status;
    if (v.certificate) {
      sample.kind = certificate_kind(*v.certificate);
      if (const auto* av = std::get_if<AlexanderVanishes>(&*v.certificate)) sample.prime = av->prime;
      ++rep.certified;
      ++rep.histogram[sample.kind];
    } else {
      ++rep.unknown;
    }
    rep.samples.push_back(std::move(sample));
  }
  return rep;
}

}  // namespace largeness
