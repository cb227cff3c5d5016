#include <gtest/gtest.h>

#include <random>

#include "largeness/parse.hpp"
#include "largeness/word.hpp"
#include "test_support.hpp"

using namespace largeness;

namespace {

const std::vector<std::string> kAT = {"a", "t"};
const std::vector<std::string> kXYZ = {"x", "y", "z"};

Word W(std::string_view s, const std::vector<std::string>& names = kAT) { return parse_word(s, names); }

}  // namespace

TEST(ParseWord, RunsAndSugar) {
  EXPECT_EQ(W("t a^2 t^-1 a^-1").runs(), (std::vector<largeness::Run>{{1, 1}, {0, 2}, {1, -1}, {0, -1}}));
  EXPECT_EQ(W("[a,t]"), W("a t a^-1 t^-1"));
  EXPECT_TRUE(W("a a^-1").is_identity());
  EXPECT_EQ(W("(a t)^2"), W("a t a t"));
  EXPECT_EQ(W("ta^{-2}"), W("t a^-2"));
  EXPECT_EQ(W("a = t"), W("a t^-1"));
  EXPECT_TRUE(W("1").is_identity());
}

TEST(ParseWord, Errors) {
  EXPECT_THROW(W("a b"), ParseError);
  EXPECT_THROW(W("a^"), ParseError);
  EXPECT_THROW(W("(a t"), ParseError);
  try {
    W("a ^ x");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4u);
  }
}

TEST(Word, Multiply) {
  EXPECT_EQ(W("a t") * W("t^-1 a"), W("a^2"));
  const Word w = W("t a^3 t^-2 a");
  EXPECT_TRUE((w * w.inverse()).is_identity());
  EXPECT_EQ(W("a^2") * W("a^3"), W("a^5"));
}

TEST(Word, CyclicReduce) {
  auto c = cyclic_reduce(W("t a t^-1"));
  EXPECT_EQ(c.core, W("a"));
  EXPECT_EQ(c.conjugator, W("t"));
  c = cyclic_reduce(W("t a^2 t^-1 a^-1"));
  EXPECT_EQ(c.core, W("t a^2 t^-1 a^-1"));
  EXPECT_TRUE(c.conjugator.is_identity());
  c = cyclic_reduce(W("a t a^-1 t^-1"));
  EXPECT_EQ(c.core, W("a t a^-1 t^-1"));
  EXPECT_TRUE(c.conjugator.is_identity());
  c = cyclic_reduce(W("a^3 t a^-1"));
  EXPECT_EQ(c.core.length(), 3);
  EXPECT_EQ(c.conjugator * c.core * c.conjugator.inverse(), W("a^3 t a^-1"));
}

TEST(Word, ExponentSum) {
  const Word w = W("t^6 a t^-4 a^-1 t^-2 a^-1");
  EXPECT_EQ(exponent_sum(w, 1), 0);
  EXPECT_EQ(exponent_sum(w, 0), -1);
  EXPECT_EQ(exponent_sum(Word{}, 0), 0);
}

TEST(Nielsen, Examples) {
  const Word x = Word::letter(0), y = Word::letter(1), z = Word::letter(2);
  auto r = nielsen_reduce({x * y, y});
  EXPECT_EQ(r.tuple, (std::vector<Word>{x, y}));
  EXPECT_EQ(r.moves.size(), 1u);

  r = nielsen_reduce({x, y, Word{}});
  EXPECT_EQ(r.tuple, (std::vector<Word>{x, y, Word{}}));
  EXPECT_EQ(r.identity_positions, (std::vector<std::size_t>{2}));

  r = nielsen_reduce({y, z, x * y});
  EXPECT_EQ(total_length(r.tuple), 3);
  std::vector<bool> seen(3, false);
  for (const Word& w : r.tuple) {
    ASSERT_EQ(w.length(), 1);
    seen[static_cast<std::size_t>(w.runs()[0].gen)] = true;
  }
  EXPECT_EQ(seen, (std::vector<bool>{true, true, true}));
}

TEST(WordProperties, Arithmetic) {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 500; ++i) {
    const Word u = support::random_word(rng, 3, 12), v = support::random_word(rng, 3, 9),
               w = support::random_word(rng, 3, 15);
    EXPECT_EQ((u * v) * w, u * (v * w));
    EXPECT_LE((u * v).length(), u.length() + v.length());
    EXPECT_EQ(u * Word{}, u);
    const auto c = cyclic_reduce(u);
    EXPECT_EQ(cyclic_reduce(c.core).core, c.core);
    EXPECT_TRUE(is_cyclically_reduced(c.core));
    EXPECT_EQ(c.conjugator * c.core * c.conjugator.inverse(), u);
    for (Gen g = 0; g < 3; ++g) EXPECT_EQ(exponent_sum(u * v, g), exponent_sum(u, g) + exponent_sum(v, g));
    // free reduction is idempotent
    Word again;
    again.append(u);
    EXPECT_EQ(again, u);
    EXPECT_EQ(Word::from_letters(u.letters()), u);
  }
}

TEST(WordProperties, NielsenReplay) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    std::vector<Word> tuple;
    for (int j = 0; j < 3; ++j) tuple.push_back(support::random_word(rng, 3, 1 + static_cast<int>(rng() % 8)));
    const auto r = nielsen_reduce(tuple);
    std::vector<Word> replay = tuple;
    Exp len = total_length(replay);
    for (const auto& m : r.moves) {
      apply_move(replay, m);
      const Exp next = total_length(replay);
      EXPECT_LE(next, len);
      len = next;
    }
    EXPECT_EQ(replay, r.tuple);
  }
}

TEST(Presentation, FormatRoundTrip) {
  const Presentation p = parse_presentation("< a, t | t a^2 t^-1 = a^3, [a,t]^2 >");
  const Presentation q = parse_presentation(format_presentation(p));
  EXPECT_EQ(p, q);
  EXPECT_EQ(format_word(p.relators()[0], p.names()), "t a^2 t^-1 a^-3");
  const Presentation u = parse_presentation("\xE2\x9F\xA8 a, t | t a t^-1 a^-2 \xE2\x9F\xA9");
  EXPECT_EQ(u.relator_count(), 1);
  EXPECT_THROW(parse_presentation("< a, a | a >"), ParseError);
  EXPECT_THROW(parse_presentation("< a | b >"), ParseError);
  EXPECT_THROW(parse_presentation("< a | a > x"), ParseError);
}
