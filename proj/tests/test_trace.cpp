#include <gtest/gtest.h>

#include <coxheap/trace.hpp>

#include "oracles.hpp"

using namespace coxheap;

namespace {
CommutationAlphabet example_alphabet() {
  return parse_alphabet("symbols: a b c d\ncommute: a b\ncommute: c d\ncommute: a d\n");
}
}  // namespace

TEST(ParseAlphabet, Basics) {
  const auto alpha = example_alphabet();
  EXPECT_EQ(alpha.size(), 4u);
  EXPECT_TRUE(alpha.commutes(0, 1));
  EXPECT_TRUE(alpha.commutes(1, 0));
  EXPECT_TRUE(alpha.commutes(3, 0));
  EXPECT_FALSE(alpha.commutes(0, 2));
  EXPECT_FALSE(alpha.commutes(0, 0));
  EXPECT_EQ(alpha.find("c"), 2);
  EXPECT_FALSE(alpha.find("e").has_value());
}

TEST(ParseAlphabet, Errors) {
  EXPECT_THROW(parse_alphabet(""), ParseError);
  EXPECT_THROW(parse_alphabet("symbols: a a"), ParseError);
  EXPECT_THROW(parse_alphabet("symbols: a b\ncommute: a c"), ParseError);
  EXPECT_THROW(parse_alphabet("symbols: a b\ncommute: a a"), ParseError);
  EXPECT_THROW(parse_alphabet("symbols: a b\ncommute: a"), ParseError);
  EXPECT_THROW(parse_alphabet("letters: a b"), ParseError);
}

TEST(ParseSymbols, ContiguousAndSpaced) {
  const auto alpha = example_alphabet();
  EXPECT_EQ(parse_symbols(alpha, "abcd"), (Word{0, 1, 2, 3}));
  EXPECT_EQ(parse_symbols(alpha, "d c"), (Word{3, 2}));
  EXPECT_THROW(parse_symbols(alpha, "abx"), ParseError);
  const CommutationAlphabet multi({"x1", "x2"});
  EXPECT_EQ(parse_symbols(multi, "x2 x1"), (Word{1, 0}));
  EXPECT_EQ(format_symbols(multi, {1, 0}), "x2 x1");
  EXPECT_EQ(format_symbols(alpha, {0, 2}), "ac");
}

TEST(CountClass, Examples) {
  const auto alpha = example_alphabet();
  EXPECT_EQ(count_class(parse_symbols(alpha, "aaa"), alpha), 1);
  auto all = parse_alphabet("symbols: a b c\ncommute: a b\ncommute: a c\ncommute: b c");
  EXPECT_EQ(count_class(parse_symbols(all, "abc"), all), 6);
  ASSERT_EQ(oracle_enumerate_class(parse_symbols(alpha, "abcd"), alpha).size(), 5u);
  EXPECT_EQ(count_class(parse_symbols(alpha, "abcd"), alpha), 5);
  EXPECT_THROW(count_class({7}, alpha), InvalidArgument);
}

TEST(SameClass, Examples) {
  const auto alpha = example_alphabet();
  const Word w = parse_symbols(alpha, "abcd");
  EXPECT_TRUE(same_class(w, w, alpha));
  EXPECT_TRUE(same_class(parse_symbols(alpha, "ab"), parse_symbols(alpha, "ba"), alpha));
  ASSERT_TRUE(oracle_enumerate_class(w, alpha).contains(parse_symbols(alpha, "badc")));
  EXPECT_TRUE(same_class(w, parse_symbols(alpha, "badc"), alpha));
  EXPECT_FALSE(same_class(w, parse_symbols(alpha, "acbd"), alpha));
  EXPECT_FALSE(same_class(w, parse_symbols(alpha, "abc"), alpha));
}

TEST(OracleEnumerateClass, Examples) {
  const auto alpha = example_alphabet();
  EXPECT_EQ(oracle_enumerate_class(parse_symbols(alpha, "aa"), alpha), (std::set<Word>{{0, 0}}));
  EXPECT_EQ(oracle_enumerate_class(parse_symbols(alpha, "ab"), alpha), (std::set<Word>{{0, 1}, {1, 0}}));
  const auto cls = oracle_enumerate_class(parse_symbols(alpha, "abcd"), alpha);
  // abcd, bacd, badc, bdac, abdc: swaps of a-b, c-d, a-d only.
  EXPECT_EQ(cls, (std::set<Word>{{0, 1, 2, 3}, {1, 0, 2, 3}, {1, 0, 3, 2}, {1, 3, 0, 2}, {0, 1, 3, 2}}));
}

TEST(OracleEnumerateClass, CapExceededIsReported) {
  auto all = parse_alphabet("symbols: a b c d e f\ncommute: a b\ncommute: a c\ncommute: a d\ncommute: a e\n"
                            "commute: a f\ncommute: b c\ncommute: b d\ncommute: b e\ncommute: b f\n"
                            "commute: c d\ncommute: c e\ncommute: c f\ncommute: d e\ncommute: d f\ncommute: e f");
  EXPECT_THROW(oracle_enumerate_class(parse_symbols(all, "abcdef"), all, 100), BudgetExceeded);
  EXPECT_EQ(oracle_enumerate_class(parse_symbols(all, "abcdef"), all, 720).size(), 720u);
}

TEST(TraceProperties, RandomCorpus) {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 200; ++trial) {
    const auto inst = oracle::random_trace_instance(rng);
    const auto cls = oracle_enumerate_class(inst.word, inst.alphabet);
    EXPECT_EQ(count_class(inst.word, inst.alphabet), cls.size());
    std::vector<int> counts(inst.alphabet.size(), 0);
    for (Letter a : inst.word) ++counts[static_cast<std::size_t>(a)];
    for (const auto& v : cls) {
      EXPECT_TRUE(same_class(inst.word, v, inst.alphabet));
      EXPECT_EQ(v.size(), inst.word.size());
      std::vector<int> c(inst.alphabet.size(), 0);
      for (Letter a : v) ++c[static_cast<std::size_t>(a)];
      EXPECT_EQ(c, counts);
    }
    // A random word of the same length: same_class iff it is in the BFS set.
    Word other = inst.word;
    std::shuffle(other.begin(), other.end(), rng);
    EXPECT_EQ(same_class(inst.word, other, inst.alphabet), cls.contains(other));
  }
}
