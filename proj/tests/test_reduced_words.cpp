#include <gtest/gtest.h>

#include <coxheap/reduced_words.hpp>
#include <coxheap/sorting_networks.hpp>
#include <coxheap/trace.hpp>

#include "oracles.hpp"
#include "test_helpers.hpp"

using namespace coxheap;

TEST(WpSet, Identity) {
  const auto set = wp_set(type_a(3), {});
  ASSERT_EQ(set.size(), 1u);
  EXPECT_TRUE(set.posets.begin()->second.empty());
  EXPECT_EQ(set.element.word, Word{});
}

TEST(WpSet, LongestElementOfS3) {
  const auto g = type_a(2);
  const auto set = wp_set(g, W("1 2 1"));
  ASSERT_EQ(set.size(), 2u);
  const auto alpha = CommutationAlphabet::from_graph(g);
  for (const auto& [word, poset] : set.posets) {
    EXPECT_EQ(poset.covers().size(), 2u);  // a 3-element chain
    EXPECT_EQ(count_linear_extensions(poset), 1);
    EXPECT_TRUE(validate(poset, alpha).empty());
  }
  EXPECT_EQ(set.posets.begin()->first, W("1 2 1"));
  EXPECT_EQ(std::next(set.posets.begin())->first, W("2 1 2"));
}

TEST(WpSet, LongestElementOfS4) {
  const auto g = type_a(3);
  const auto set = wp_set(g, w0_word(4));
  EXPECT_EQ(set.size(), 8u);
  EXPECT_EQ(set.element.word, W("1 2 1 3 2 1"));
}

TEST(WpSet, RejectsNonReduced) { EXPECT_THROW(wp_set(type_a(2), W("1 1")), NotReducedError); }

TEST(WpSet, PosetsAreReducedWordPosetsOfTheElement) {
  const auto g = type_b(3);
  const auto alpha = CommutationAlphabet::from_graph(g);
  for (const Word& w : elements_up_to_length(g, 64)) {
    const auto set = wp_set(g, w);
    for (const auto& [key, poset] : set.posets) {
      EXPECT_EQ(poset.size(), w.size());
      EXPECT_TRUE(validate(poset, alpha).empty());
      EXPECT_EQ(canonical_word(poset), key);
      for (const Word& u : enumerate_linear_extensions(poset)) {
        EXPECT_TRUE(is_reduced(g, u));
        EXPECT_TRUE(same_element(g, u, w));
      }
    }
  }
}

TEST(CountReducedWords, Examples) {
  EXPECT_EQ(count_reduced_words(type_a(2), {}), 1);
  const auto a2 = oracle_reduced(type_a(2), W("1 2 1"));
  ASSERT_EQ(a2.reduced_words, (std::set<Word>{W("1 2 1"), W("2 1 2")}));
  EXPECT_EQ(count_reduced_words(type_a(2), W("1 2 1")), 2);
  const auto s4 = oracle_reduced(type_a(3), w0_word(4));
  ASSERT_EQ(s4.reduced_words.size(), 16u);
  EXPECT_EQ(count_reduced_words(type_a(3), w0_word(4)), 16);
}

TEST(CountReducedWords, MatchesRewritingOracle) {
  // Tits rewriting (deletions plus braid moves) is independent of both the
  // braid BFS and the poset formula.
  for (const auto& g : {type_a(3), type_b(3), dihedral(5)}) {
    for (const Word& w : elements_up_to_length(g, 7)) {
      const auto words = oracle::shortest_equivalents(g, w);
      EXPECT_EQ(count_reduced_words(g, w), words.size()) << format_word(w);
    }
  }
}

TEST(CountClasses, Examples) {
  EXPECT_EQ(count_classes(type_a(3), {}), 1);
  // D = {1, 2}, only singletons independent: C(2 1) + C(1 2) = 2.
  EXPECT_EQ(left_descents(type_a(2), W("1 2 1")), (std::vector<Letter>{0, 1}));
  EXPECT_EQ(count_classes(type_a(2), W("2 1")), 1);
  EXPECT_EQ(count_classes(type_a(2), W("1 2")), 1);
  EXPECT_EQ(count_classes(type_a(2), W("1 2 1")), 2);
  EXPECT_EQ(count_classes(type_a(3), w0_word(4)), 8);
}

TEST(CountClasses, IndependentDescentsUseInclusionExclusion) {
  // Commuting generators 1, 3: element 1 3 has D = {1, 3}, independent, and
  // C = C(3) + C(1) - C(identity) = 1.
  EXPECT_EQ(count_classes(type_a(3), W("1 3")), 1);
  EXPECT_EQ(count_classes(CoxeterGraph(4), W("1 2 3 4")), 1);
}

TEST(CountClasses, MemoCapIsReported) {
  EngineOptions tiny;
  tiny.class_memo_cap = 3;
  EXPECT_THROW(count_classes(type_a(4), w0_word(5), tiny), BudgetExceeded);
  tiny.poset_memo_cap = 3;
  EXPECT_THROW(wp_set(type_a(4), w0_word(5), tiny), BudgetExceeded);
}

TEST(OracleReduced, Examples) {
  const auto id = oracle_reduced(type_a(2), {});
  EXPECT_EQ(id.reduced_words, (std::set<Word>{Word{}}));
  EXPECT_EQ(id.classes, 1u);
  const auto a2 = oracle_reduced(type_a(2), W("1 2 1"));
  EXPECT_EQ(a2.reduced_words, (std::set<Word>{W("1 2 1"), W("2 1 2")}));
  EXPECT_EQ(a2.classes, 2u);
  const auto b2 = oracle_reduced(dihedral(4), W("1 2 1 2"));
  EXPECT_EQ(b2.reduced_words, (std::set<Word>{W("1 2 1 2"), W("2 1 2 1")}));
  EXPECT_EQ(b2.classes, 2u);
  EXPECT_THROW(oracle_reduced(type_a(4), w0_word(5), 100), BudgetExceeded);
}

TEST(OracleReduced, CommutationMovesPreserveReducedness) {
  const auto g = type_b(3);
  const auto alpha = CommutationAlphabet::from_graph(g);
  for (const Word& w : elements_up_to_length(g, 64))
    for (const Word& u : oracle_enumerate_class(w, alpha)) EXPECT_TRUE(is_reduced(g, u));
}

TEST(ReducedWords, AgreeWithOracleOnS4AndB3) {
  for (const auto& g : {type_a(3), type_b(3)}) {
    ReducedWordCounter counter(g);
    for (const Word& w : elements_up_to_length(g, 64)) {
      const auto oracle = oracle_reduced(g, w);
      EXPECT_EQ(counter.count_reduced_words(w), oracle.reduced_words.size());
      EXPECT_EQ(counter.count_classes(w), oracle.classes);
      EXPECT_EQ(counter.wp_set(w).size(), oracle.classes);
    }
  }
}

TEST(ReducedWords, FloatingPointPathOnH3) {
  const auto g = type_h3();
  ReducedWordCounter counter(g);
  for (const Word& w : elements_up_to_length(g, 9)) {
    const auto oracle = oracle_reduced(g, w);
    EXPECT_EQ(counter.count_reduced_words(w), oracle.reduced_words.size());
    EXPECT_EQ(counter.count_classes(w), oracle.classes);
  }
}

TEST(ReducedWords, InfiniteGroups) {
  // Affine A2 (triangle of 3s) and a graph with an infinite label.
  CoxeterGraph affine(3);
  affine.set_label(0, 1, 3).set_label(1, 2, 3).set_label(0, 2, 3);
  CoxeterGraph mixed(3);
  mixed.set_label(0, 1, kInfinity).set_label(1, 2, 3);
  for (const auto& g : {affine, mixed}) {
    ReducedWordCounter counter(g);
    for (const Word& w : elements_up_to_length(g, 7)) {
      const auto oracle = oracle_reduced(g, w);
      EXPECT_EQ(counter.count_classes(w), oracle.classes);
      EXPECT_EQ(counter.count_reduced_words(w), oracle.reduced_words.size());
    }
  }
}

TEST(BoundCheck, Examples) {
  EXPECT_TRUE(bound_check(type_a(2), W("1")));
  EXPECT_TRUE(bound_check(type_a(3), w0_word(4)));
  // 9 * 8^2 = 576 <= 4 * 3^6 = 2916
  EXPECT_TRUE(bound_holds(8, 6));
  EXPECT_FALSE(bound_holds(19, 6));
  EXPECT_TRUE(bound_holds(18, 6));
  // l = 1: only C = 1 fits under (2/3) sqrt 3.
  EXPECT_TRUE(bound_holds(1, 1));
  EXPECT_FALSE(bound_holds(2, 1));
  EXPECT_THROW(bound_check(type_a(2), {}), InvalidArgument);
}

TEST(BoundCheck, AllOfS5) {
  const auto g = type_a(4);
  const auto elements = elements_up_to_length(g, 64);
  ASSERT_EQ(elements.size(), 120u);
  ReducedWordCounter counter(g);
  for (const Word& w : elements) {
    if (w.empty()) continue;
    EXPECT_TRUE(bound_holds(counter.count_classes(w), w.size())) << format_word(w);
  }
}
