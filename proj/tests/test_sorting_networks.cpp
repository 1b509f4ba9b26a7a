#include <gtest/gtest.h>

#include <cmath>

#include <coxheap/sorting_networks.hpp>

#include "test_helpers.hpp"

using namespace coxheap;

TEST(W0Word, Examples) {
  EXPECT_EQ(w0_word(1), Word{});
  EXPECT_EQ(w0_word(2), W("1"));
  EXPECT_EQ(w0_word(4), W("1 2 1 3 2 1"));
  EXPECT_TRUE(is_reduced(type_a(4), w0_word(4)));
  EXPECT_THROW(w0_word(0), InvalidArgument);
}

TEST(W0Word, IsTheLongestElement) {
  for (std::size_t n = 1; n <= 7; ++n) {
    const Word w = w0_word(n);
    const auto g = type_a(n);
    EXPECT_EQ(w.size(), staircase_length(n));
    EXPECT_TRUE(is_reduced(g, w));
    // Every generator is a left descent of the longest element.
    EXPECT_EQ(left_descents(g, w).size(), n - 1);
  }
}

TEST(PN, Values) {
  EXPECT_EQ(p_n(1), 1);
  EXPECT_EQ(p_n(4), 8);
  EXPECT_EQ(p_n(8), 1232944);
  EXPECT_THROW(p_n(0), InvalidArgument);
}

TEST(PSequence, Values) {
  EXPECT_EQ(p_sequence(3), (std::vector<BigInt>{1, 1, 2}));
  EXPECT_EQ(p_sequence(6), (std::vector<BigInt>{1, 1, 2, 8, 62, 908}));
  const auto seq = p_sequence(8);
  EXPECT_EQ(seq[6], 24698);
  EXPECT_EQ(seq[7], 1232944);
  EXPECT_TRUE(std::is_sorted(seq.begin(), seq.end()));
}

TEST(LimitLowerBound, Values) {
  EXPECT_EQ(limit_lower_bound(2, 1), 0.0);
  EXPECT_NEAR(limit_lower_bound(12, BigInt("2894710651370536")), 0.53941, 1e-5);
  // log(1232944) / 28
  EXPECT_NEAR(limit_lower_bound(8, 1232944), 0.5008898344083791, 1e-12);
  EXPECT_THROW(limit_lower_bound(1, 1), InvalidArgument);
  EXPECT_THROW(limit_lower_bound(4, 0), InvalidArgument);
}

TEST(LimitLowerBound, MonotoneAndExactForHugeValues) {
  double prev = -1;
  for (int p = 1; p < 2000; p += 37) {
    const double v = limit_lower_bound(6, p);
    EXPECT_GT(v, prev);
    prev = v;
  }
  BigInt huge = 1;
  for (int i = 0; i < 500; ++i) huge *= 7;
  EXPECT_NEAR(limit_lower_bound(40, huge), 500 * std::log(7.0) / 780.0, 1e-12);
}

TEST(GraphCodes, CountsUpToRelabeling) {
  // Simple graphs on n vertices up to isomorphism: 1, 2, 4, 11, 34.
  const std::vector<std::size_t> simple{1, 2, 4, 11, 34};
  for (std::size_t n = 1; n <= 5; ++n) EXPECT_EQ(detail::graph_codes(n, 2).size(), simple[n - 1]) << n;
  // Three edge colours on three vertices: multisets of size 3 from 3 colours.
  EXPECT_EQ(detail::graph_codes(3, 3).size(), 10u);
  // Three edge colours on four and five vertices (Burnside counts).
  EXPECT_EQ(detail::graph_codes(4, 3).size(), 66u);
  EXPECT_EQ(detail::graph_codes(5, 3).size(), 792u);
}

TEST(GraphCodes, CanonicalCodeIsInvariant) {
  // The path a-b-c with its centre in any position has one canonical code.
  const auto c1 = detail::canonical_code({1, 0, 1}, 3);
  const auto c2 = detail::canonical_code({1, 1, 0}, 3);
  const auto c3 = detail::canonical_code({0, 1, 1}, 3);
  EXPECT_EQ(c1, c2);
  EXPECT_EQ(c2, c3);
  EXPECT_EQ(c1, (std::vector<int>{0, 1, 1}));
}

TEST(SearchM, SmallValues) {
  const std::vector<int> labels{2, 3, kInfinity};
  EXPECT_EQ(search_M(0, labels, 0).value, 1);
  EXPECT_EQ(search_M(1, labels, 1).value, 1);
  EXPECT_EQ(search_M(2, labels, 2).value, 1);
  EXPECT_EQ(search_M(3, labels, 3).value, 2);
  EXPECT_EQ(search_M(4, labels, 4).value, 2);
  const auto five = search_M(5, labels, 5);
  EXPECT_EQ(five.value, 3);
  EXPECT_EQ(count_classes(five.witness_graph, five.witness_word), 3);
  EXPECT_EQ(five.witness_word.size(), 5u);
}

TEST(SearchM, SixHasTypeA3Witness) {
  const auto res = search_M(6, {2, 3, kInfinity}, 6);
  EXPECT_EQ(res.value, 8);
  const auto& g = res.witness_graph;
  ASSERT_EQ(g.rank(), 3u);
  // A path of two edges labelled 3.
  int threes = 0;
  int twos = 0;
  for (Letter i = 0; i < 3; ++i)
    for (Letter j = i + 1; j < 3; ++j) {
      threes += g.label(i, j) == 3;
      twos += g.label(i, j) == 2;
    }
  EXPECT_EQ(threes, 2);
  EXPECT_EQ(twos, 1);
  EXPECT_EQ(count_classes(g, res.witness_word), 8);
  EXPECT_EQ(res.witness_word.size(), 6u);
}

TEST(SearchM, DominatesPN) {
  // P(n) <= M(k_n).
  EXPECT_LE(p_n(3), search_M(staircase_length(3), {2, 3, kInfinity}, 3).value);
  EXPECT_LE(p_n(4), search_M(staircase_length(4), {2, 3, kInfinity}, 6).value);
}

TEST(SearchM, RestrictedSpaces) {
  // Only commuting generators: every element has a single class.
  EXPECT_EQ(search_M(4, {2}, 4).value, 1);
  // Rank 1 has no element of length 2.
  EXPECT_EQ(search_M(2, {2, 3}, 1).value, 0);
  // Rank <= 2 with labels {3}: the longest element of S3.
  EXPECT_EQ(search_M(3, {3}, 2).value, 2);
  EXPECT_THROW(search_M(3, {}, 3), InvalidArgument);
  EXPECT_THROW(search_M(3, {1}, 3), InvalidArgument);
}

TEST(SearchM, BudgetIsReported) {
  SearchOptions tight;
  tight.node_budget = 50;
  EXPECT_THROW(search_M(6, {2, 3, kInfinity}, 6, tight), BudgetExceeded);
}
