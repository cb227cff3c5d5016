#pragma once

// Verdicts and largeness certificates, plus the Alexander-polynomial
// vanishing test that produces most of them.

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "largeness/coset_table.hpp"
#include "largeness/fox.hpp"
#include "largeness/integer.hpp"
#include "largeness/integer_matrix.hpp"
#include "largeness/presentation.hpp"

namespace largeness {

/// One generator elimination: remove `generator` using relator `relator`
/// (indices refer to the presentation at that step).
struct EliminationMove {
  Gen generator = 0;
  int relator = 0;
  friend bool operator==(const EliminationMove&, const EliminationMove&) = default;
};

struct DeficiencyAtLeastTwo {
  Presentation presentation;
  std::vector<EliminationMove> moves;
};

/// chain[0] is a subgroup of the input group, chain[i] a subgroup of the
/// Reidemeister-Schreier presentation of chain[i-1]; chi lives on the last
/// one (the input group itself when the chain is empty). No prime means the
/// integer polynomial is zero.
struct AlexanderVanishes {
  std::vector<CosetTable> chain;
  Chi chi;
  std::optional<Integer> prime;
};

struct HeightOneBigAbelianization {
  CosetTable subgroup;
  AbelianInvariants invariants;
};

using Certificate = std::variant<DeficiencyAtLeastTwo, AlexanderVanishes, HeightOneBigAbelianization>;

inline std::string certificate_kind(const Certificate& c) {
  switch (c.index()) {
    case 0: return "DeficiencyAtLeastTwo";
    case 1: return "AlexanderVanishes";
    default: return "HeightOneBigAbelianization";
  }
}

struct SubgroupScan {
  std::size_t index = 0;
  AbelianInvariants invariants;
};

struct FiniteImage {
  std::size_t degree = 0;
  std::size_t order = 0;
  bool abelian = false;
  bool metabelian = false;
  bool metacyclic = false;
};

/// What was searched. Unknown verdicts carry only this.
struct Evidence {
  std::size_t max_index = 0;
  std::vector<Chi> chi_set;
  std::vector<SubgroupScan> scans;
  std::size_t max_perm_degree = 0;
  std::vector<FiniteImage> finite_images;
  std::vector<std::string> observations;
};

enum class Status { LargeCertified, Unknown };

inline std::string to_string(Status s) { return s == Status::LargeCertified ? "LargeCertified" : "Unknown"; }

struct Verdict {
  Status status = Status::Unknown;
  std::optional<Certificate> certificate;
  Evidence evidence;

  static Verdict certified(Certificate c, Evidence e = {}) {
    return {Status::LargeCertified, std::move(c), std::move(e)};
  }
  static Verdict unknown(Evidence e) { return {Status::Unknown, std::nullopt, std::move(e)}; }
};

struct HowieResult {
  LaurentPoly delta;
  bool large = false;
  std::optional<Integer> prime;  // set when delta is nonzero with content divisible by it
};

/// Delta_{G,chi} is zero, or vanishes mod the smallest prime dividing its
/// content: either way the group is large.
inline HowieResult howie_large_test(const Presentation& p, const Chi& chi, MinorLimits limits = {}) {
  HowieResult r;
  r.delta = alexander_polynomial(p, chi, limits);
  if (r.delta.is_zero()) {
    r.large = true;
    return r;
  }
  const Integer c = r.delta.content();
  if (c > 1) {
    r.large = true;
    r.prime = smallest_prime_factor(c);
  }
  return r;
}

}  // namespace largeness
