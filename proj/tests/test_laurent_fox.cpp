#include <gtest/gtest.h>

#include <random>

#include "largeness/fox.hpp"
#include "largeness/integer_matrix.hpp"
#include "largeness/parse.hpp"
#include "test_support.hpp"

using namespace largeness;

namespace {

LaurentPoly L(std::initializer_list<long> coefs, long low = 0) {
  std::vector<Integer> c;
  for (long x : coefs) c.emplace_back(x);
  return LaurentPoly(low, std::move(c));
}

Presentation bs(long m, long n) {
  return Presentation({"a", "t"}, {Word{{1, 1}, {0, m}, {1, -1}, {0, -n}}});
}

const Chi kT{{0, 1}};

/// Cofactor expansion along the first row: slow independent oracle.
LaurentPoly cofactor_det(const std::vector<std::vector<LaurentPoly>>& a) {
  const std::size_t n = a.size();
  if (n == 0) return L({1});
  LaurentPoly acc;
  for (std::size_t j = 0; j < n; ++j) {
    if (a[0][j].is_zero()) continue;
    std::vector<std::vector<LaurentPoly>> sub;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<LaurentPoly> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != j) row.push_back(a[i][k]);
      }
      sub.push_back(std::move(row));
    }
    const LaurentPoly term = a[0][j] * cofactor_det(sub);
    acc = j % 2 == 0 ? acc + term : acc - term;
  }
  return acc;
}

}  // namespace

TEST(Laurent, CanonicalForm) {
  EXPECT_EQ(L({3, -2}, 4).canonical(), L({-3, 2}).canonical());
  EXPECT_EQ(L({3, -2}).canonical(), L({-3, 2}));
  EXPECT_EQ(L({0, 0}).canonical(), LaurentPoly());
  EXPECT_EQ(L({-3, 2}).to_string(), "2t - 3");
  EXPECT_EQ(L({1, 0, -1}, -1).to_string(), "-t + t^-1");
  EXPECT_EQ(L({-1}).canonical(), L({1}));
  EXPECT_TRUE(L({-1}, 5).is_unit());
}

TEST(Laurent, ModP) {
  const LaurentPoly p = L({-3, 2}).reduce_mod(2);
  EXPECT_EQ(p.canonical(), LaurentPoly::constant(1, 2));
  EXPECT_TRUE(L({-4, 2}).reduce_mod(2).is_zero());
  EXPECT_EQ(L({-2, 1}).reduce_mod(3).canonical(), LaurentPoly(0, {1, 1}, 3));
  EXPECT_EQ(L({-2, 1}).reduce_mod(3).canonical().to_string(), "t + 1");
}

TEST(Laurent, Arithmetic) {
  const LaurentPoly a = L({1, 2}, -1), b = L({3, 0, -1}, 2);
  EXPECT_EQ(a * b, L({3, 6, -1, -2}, 1));
  EXPECT_EQ(a + b - b, a);
  EXPECT_EQ(gcd(L({-1, 0, 1}), L({-1, 1}, 3)), L({-1, 1}).canonical());
}

TEST(Fox, Examples) {
  const Word bs23 = Word{{1, 1}, {0, 2}, {1, -1}, {0, -3}};
  EXPECT_EQ(fox_derivative_eval(bs23, 0, kT), L({-3, 2}));
  EXPECT_EQ(fox_derivative_eval(Word::letter(0), 0, Chi{{5, 1}}), L({1}));
  EXPECT_EQ(fox_derivative_eval(Word::letter(0, -1), 0, Chi{{2, 1}}), L({-1}, -2));
  const Presentation bg = parse_presentation("<a,t | t a t^-1 a t a^-1 t^-1 a^-2>");
  EXPECT_EQ(fox_derivative_eval(bg.relators()[0], 0, kT), L({-1}));
}

TEST(Fox, ProductRuleAndFundamentalIdentity) {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> cv(-2, 2);
  for (int i = 0; i < 500; ++i) {
    const Chi chi{{cv(rng), cv(rng), cv(rng)}};
    const Word u = support::random_word(rng, 3, 10), v = support::random_word(rng, 3, 10);
    const LaurentPoly eu = LaurentPoly::monomial(1, static_cast<long>(chi(u)));
    for (Gen g = 0; g < 3; ++g) {
      EXPECT_EQ(fox_derivative_eval(u * v, g, chi), fox_derivative_eval(u, g, chi) + eu * fox_derivative_eval(v, g, chi));
    }
    LaurentPoly sum;
    for (Gen g = 0; g < 3; ++g) {
      sum += fox_derivative_eval(u, g, chi) * (LaurentPoly::monomial(1, static_cast<long>(chi.values[static_cast<std::size_t>(g)])) - L({1}));
    }
    EXPECT_EQ(sum, LaurentPoly::monomial(1, static_cast<long>(chi(u))) - L({1}));
  }
}

TEST(Alexander, Examples) {
  EXPECT_EQ(alexander_polynomial(bs(2, 3), kT), L({-3, 2}).canonical());
  EXPECT_EQ(alexander_polynomial(bs(2, 3), kT).to_string(), "2t - 3");
  EXPECT_EQ(alexander_polynomial(bs(1, 2), kT), L({-2, 1}).canonical());
  const Presentation tm2 = parse_presentation("<a,t | t a^2 t^-1 a^-1 t a^-1 t^-1 a^-1>");
  EXPECT_EQ(alexander_polynomial(tm2, kT), L({-2, 1}).canonical());
  const Presentation z3 = parse_presentation("<a,b,t | [t,a], [t,b]>");
  EXPECT_TRUE(alexander_polynomial(z3, Chi{{1, 0, 0}}).is_zero());
  EXPECT_THROW(alexander_polynomial(bs(2, 3), Chi{{1, 0}}), DomainError);
}

TEST(Alexander, ModP) {
  EXPECT_TRUE(alexander_mod_p(bs(2, 4), kT, 2).is_zero());
  EXPECT_EQ(alexander_mod_p(bs(2, 3), kT, 2), LaurentPoly::constant(1, 2));
  const Presentation tm2 = parse_presentation("<a,t | t a^2 t^-1 a^-1 t a^-1 t^-1 a^-1>");
  EXPECT_EQ(alexander_mod_p(tm2, kT, 3), LaurentPoly(0, {1, 1}, 3));
  EXPECT_THROW(alexander_mod_p(parse_presentation("<a,b,t | [t,a]>"), Chi{{0, 0, 1}}, 2), DomainError);
  EXPECT_THROW(alexander_mod_p(bs(2, 4), kT, 4), DomainError);
}

TEST(Alexander, RebasingRouteAgrees) {
  // chi = (2,3) forces the basis change; compare with chi' on the rebased group
  const Presentation p = parse_presentation("<x,y | x^3 y^-2 x y x^-1 y^-1>");
  const Chi chi{{2, 3}};
  const ChiBasis b = abelianized_chi_basis(p, chi);
  EXPECT_EQ(alexander_polynomial(p, chi), alexander_polynomial(b.presentation, b.chi));
  EXPECT_EQ(alexander_polynomial(p, chi).eval_at_one(), 1);
}

TEST(Alexander, DeterminantMatchesCofactorOracle) {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> c(-6, 6), lo(-3, 3), len(0, 3);
  for (int t = 0; t < 60; ++t) {
    const std::size_t n = 1 + rng() % 5;
    std::vector<std::vector<LaurentPoly>> a(n, std::vector<LaurentPoly>(n));
    for (auto& row : a)
      for (auto& e : row) {
        std::vector<Integer> cs;
        for (int k = len(rng); k >= 0; --k) cs.emplace_back(c(rng));
        e = LaurentPoly(lo(rng), std::move(cs));
      }
    EXPECT_EQ(laurent_determinant(a), cofactor_det(a));
  }
  // big coefficients force several primes
  std::vector<std::vector<LaurentPoly>> big(3, std::vector<LaurentPoly>(3));
  Integer huge = Integer(1) << 90;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) big[i][j] = LaurentPoly(static_cast<long>(i), {huge + static_cast<long>(i * 3 + j), Integer(-7) * static_cast<long>(j + 1)});
  EXPECT_EQ(laurent_determinant(big), cofactor_det(big));
}

TEST(Alexander, TorsionOrderAtOne) {
  std::mt19937_64 rng(31);
  int checked = 0;
  for (int t = 0; t < 400 && checked < 60; ++t) {
    const int m = 2 + static_cast<int>(rng() % 2);
    std::vector<Word> rels;
    for (int k = 0; k < m - 1; ++k) rels.push_back(support::random_word(rng, m, 4 + static_cast<int>(rng() % 6)));
    std::vector<std::string> names;
    for (int g = 0; g < m; ++g) names.push_back("x" + std::to_string(g));
    const Presentation p(names, rels);
    if (deficiency(p) != 1) continue;
    const AbelianInvariants inv = abelian_invariants(p);
    if (inv.rank != 1) continue;
    const auto basis = hom_to_z_basis(p);
    Chi chi;
    for (const auto& v : basis[0]) chi.values.push_back(static_cast<Exp>(v));
    const LaurentPoly d = alexander_polynomial(p, chi);
    EXPECT_EQ(iabs(d.eval_at_one()), inv.torsion_order()) << format_presentation(p);
    ++checked;
  }
  EXPECT_GE(checked, 30);
}

TEST(Alexander, InvariantUnderRelatorSymmetries) {
  std::mt19937_64 rng(37);
  for (int t = 0; t < 100; ++t) {
    const Word r = support::random_zero_sum_word(rng, 2, 1, 10);
    const Presentation p({"a", "t"}, {r});
    if (p.relator_count() == 0) continue;
    const LaurentPoly d = alexander_polynomial(p, kT);
    const Word core = p.relators()[0];
    const Presentation rot({"a", "t"}, {rotate(core, 3)});
    const Presentation inv({"a", "t"}, {core.inverse()});
    EXPECT_EQ(alexander_polynomial(rot, kT), d);
    EXPECT_EQ(alexander_polynomial(inv, kT), d);
  }
}

TEST(Alexander, InvariantUnderElimination) {
  const Presentation p = parse_presentation("<a,b,t | b a^-2, t b t^-1 a^-3>");
  const Presentation q = eliminate_generator(p, 1, 0);
  EXPECT_EQ(alexander_polynomial(p, Chi{{0, 0, 1}}), alexander_polynomial(q, kT));
}
