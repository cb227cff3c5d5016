#pragma once

// Independent replay of largeness certificates.

#include <string>
#include <utility>
#include <variant>

#include "largeness/certificate.hpp"
#include "largeness/coset_table.hpp"
#include "largeness/errors.hpp"
#include "largeness/fox.hpp"
#include "largeness/integer_matrix.hpp"
#include "largeness/onerelator.hpp"
#include "largeness/presentation.hpp"
#include "largeness/reidemeister_schreier.hpp"

namespace largeness {

struct CheckResult {
  bool ok = false;
  std::string reason;
  explicit operator bool() const { return ok; }
};

struct CheckOptions {
  std::size_t max_cosets = kDefaultMaxCosets;
};

namespace detail {

/// The table is complete over p and coset enumeration of its Schreier
/// generators reproduces it exactly.
inline std::optional<std::string> table_replays(const Presentation& p, const CosetTable& t, std::size_t max_cosets) {
  if (auto d = table_defect(p, t)) return "subgroup table invalid: " + *d;
  const CosetTable again = todd_coxeter(p, schreier_generators(t), max_cosets);
  if (!(again == t)) return "coset enumeration of the subgroup does not reproduce the recorded table";
  return std::nullopt;
}

inline CheckResult fail(std::string why) { return {false, std::move(why)}; }

inline CheckResult check(const Presentation& p, const DeficiencyAtLeastTwo& c, const CheckOptions&) {
  Presentation cur = p;
  for (const EliminationMove& m : c.moves) cur = eliminate_generator(cur, m.generator, m.relator);
  if (!(cur == c.presentation)) return fail("replayed eliminations do not give the recorded presentation");
  if (deficiency(cur) < 2) return fail("deficiency " + std::to_string(deficiency(cur)) + " is below 2");
  return {true, "deficiency " + std::to_string(deficiency(cur))};
}

inline CheckResult check(const Presentation& p, const AlexanderVanishes& c, const CheckOptions& opt) {
  Presentation cur = p;
  for (std::size_t i = 0; i < c.chain.size(); ++i) {
    if (auto why = table_replays(cur, c.chain[i], opt.max_cosets)) return fail("chain link " + std::to_string(i) + ": " + *why);
    cur = rs_presentation(cur, c.chain[i]);
  }
  if (!vanishes_on_relators(cur, c.chi) || !c.chi.is_surjective()) return fail("chi is not a surjection onto Z");
  const LaurentPoly delta = alexander_polynomial(cur, c.chi);
  if (!c.prime) {
    if (!delta.is_zero()) return fail("Alexander polynomial is " + delta.to_string() + ", not zero");
    return {true, "Alexander polynomial is zero"};
  }
  const Integer& q = *c.prime;
  if (q < 2 || smallest_prime_factor(q) != q) return fail("recorded modulus " + q.str() + " is not prime");
  if (!delta.reduce_mod(q).is_zero()) return fail("Alexander polynomial " + delta.to_string() + " is nonzero mod " + q.str());
  return {true, "Alexander polynomial vanishes mod " + q.str()};
}

inline CheckResult check(const Presentation& p, const HeightOneBigAbelianization& c, const CheckOptions& opt) {
  try {
    if (!height_one_form(p)) return fail("relator does not have height 1");
  } catch (const DomainError& e) {
    return fail(std::string("not a height-1 presentation: ") + e.what());
  }
  if (auto why = table_replays(p, c.subgroup, opt.max_cosets)) return fail(*why);
  const AbelianInvariants inv = abelian_invariants(rs_presentation(p, c.subgroup));
  if (!(inv == c.invariants)) return fail("abelianization recomputes as " + inv.to_string());
  if (inv.min_generators() < 3) return fail("abelianization " + inv.to_string() + " needs fewer than 3 generators");
  return {true, "index " + std::to_string(c.subgroup.index()) + " subgroup with abelianization " + inv.to_string()};
}

}  // namespace detail

/// Replays a certificate against p from scratch. Never throws on bad
/// certificates; resource exhaustion while replaying is reported as failure.
inline CheckResult check_certificate(const Presentation& p, const Certificate& c, const CheckOptions& opt = {}) {
  try {
    return std::visit([&](const auto& x) { return detail::check(p, x, opt); }, c);
  } catch (const ResourceLimit& e) {
    return detail::fail(std::string("resource limit while replaying: ") + e.what());
  } catch (const DomainError& e) {
    return detail::fail(e.what());
  }
}

}  // namespace largeness
