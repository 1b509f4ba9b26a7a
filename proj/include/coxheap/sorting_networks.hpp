#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "bigint.hpp"
#include "coxeter.hpp"
#include "errors.hpp"
#include "reduced_words.hpp"

namespace coxheap {

// Staircase word (1)(2 1)(3 2 1)...(n-1 ... 1) for the longest element of
// type A_{n-1}, 0-based. Its length is n(n-1)/2.
inline Word w0_word(std::size_t n) {
  if (n < 1) throw InvalidArgument("w0_word needs n >= 1");
  Word w;
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = i; j >= 1; --j) w.push_back(static_cast<Letter>(j - 1));
  return w;
}

inline std::size_t staircase_length(std::size_t n) { return n * (n - 1) / 2; }

// Number of primitive sorting networks on n elements: the class count of the
// longest element of S_n.
inline BigInt p_n(std::size_t n, EngineOptions options = {}) {
  if (n < 1) throw InvalidArgument("p_n needs n >= 1");
  return count_classes(type_a(std::max<std::size_t>(n - 1, 1)), w0_word(n), options);
}

inline std::vector<BigInt> p_sequence(std::size_t n_max, EngineOptions options = {}) {
  if (n_max < 1) throw InvalidArgument("p_sequence needs n_max >= 1");
  std::vector<BigInt> out;
  for (std::size_t n = 1; n <= n_max; ++n) out.push_back(p_n(n, options));
  return out;
}

// (1/k_m) log P(m) with k_m = m(m-1)/2, natural logarithm.
inline double limit_lower_bound(std::size_t m, const BigInt& p_m) {
  if (m < 2) throw InvalidArgument("limit_lower_bound needs m > 1");
  if (p_m < 1) throw InvalidArgument("limit_lower_bound needs P(m) >= 1");
  return log_bigint(p_m) / static_cast<double>(staircase_length(m));
}

struct SearchOptions {
  // Elements enumerated plus memo entries created, summed over all graphs.
  std::size_t node_budget = 200'000'000;
  EngineOptions engine{};
};

struct SearchResult {
  std::size_t k = 0;
  BigInt value = 1;
  CoxeterGraph witness_graph{1};
  Word witness_word;
  std::size_t graphs_examined = 0;
  std::size_t elements_examined = 0;
};

namespace detail {

inline std::size_t pair_index(std::size_t i, std::size_t j, std::size_t r) {
  // Row-major position of (i, j), i < j, among the pairs of r vertices.
  return i * r - i * (i + 1) / 2 + (j - i - 1);
}

// Lexicographically least relabeling of a graph code (label indices over
// pairs i < j in row-major order).
inline std::vector<int> canonical_code(const std::vector<int>& code, std::size_t r) {
  std::vector<std::size_t> perm(r);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best = code;
  std::vector<int> cur(code.size());
  do {
    bool smaller = false;
    bool decided = false;
    std::size_t idx = 0;
    for (std::size_t i = 0; i < r && !decided; ++i)
      for (std::size_t j = i + 1; j < r; ++j, ++idx) {
        const std::size_t a = std::min(perm[i], perm[j]);
        const std::size_t b = std::max(perm[i], perm[j]);
        const int v = code[pair_index(a, b, r)];
        cur[idx] = v;
        if (smaller) continue;
        if (v < best[idx]) {
          smaller = true;
        } else if (v > best[idx]) {
          decided = true;
          break;
        }
      }
    if (smaller) best = cur;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Canonical codes of all graphs on r vertices with `colours` edge labels, up
// to relabeling, in increasing lexicographic order. Every graph on r vertices
// is a one-vertex extension of a graph on r - 1 vertices.
inline std::vector<std::vector<int>> graph_codes(std::size_t r, std::size_t colours) {
  std::set<std::vector<int>> level{{}};
  for (std::size_t n = 2; n <= r; ++n) {
    std::set<std::vector<int>> next;
    std::size_t combos = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) combos *= colours;
    for (const auto& small : level)
      for (std::size_t c = 0; c < combos; ++c) {
        std::vector<int> code(n * (n - 1) / 2);
        for (std::size_t i = 0; i + 1 < n; ++i)
          for (std::size_t j = i + 1; j + 1 < n; ++j)
            code[pair_index(i, j, n)] = small[pair_index(i, j, n - 1)];
        std::size_t rest = c;
        for (std::size_t i = 0; i + 1 < n; ++i) {
          code[pair_index(i, n - 1, n)] = static_cast<int>(rest % colours);
          rest /= colours;
        }
        next.insert(canonical_code(code, n));
      }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

inline CoxeterGraph graph_from_code(const std::vector<int>& code, std::size_t r, const std::vector<int>& labels) {
  CoxeterGraph g(r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = i + 1; j < r; ++j)
      g.set_label(static_cast<Letter>(i), static_cast<Letter>(j),
                  labels[static_cast<std::size_t>(code[pair_index(i, j, r)])]);
  return g;
}

inline std::uint64_t support_of(const std::string& key) {
  std::uint64_t s = 0;
  for (char c : key) s |= std::uint64_t{1} << static_cast<unsigned char>(c);
  return s;
}

// Elements of length k whose support is all r generators, as sorted
// canonical words. Layers are pruned when the remaining letters cannot
// complete the support.
inline std::vector<Word> full_support_elements(const CoxeterGraph& g, std::size_t k, std::size_t& nodes,
                                               std::size_t budget) {
  const std::size_t r = g.rank();
  return with_representation(g, [&](const auto& rep) {
    std::vector<std::string> layer{std::string{}};
    for (std::size_t len = 0; len < k; ++len) {
      std::vector<std::string> keys;
      for (const auto& key : layer) {
        auto e = element_from_word(rep, key_to_word(key));
        const std::uint64_t support = support_of(key);
        for (Letter a = 0; a < static_cast<Letter>(r); ++a) {
          const std::uint64_t grown = support | (std::uint64_t{1} << a);
          if (static_cast<std::size_t>(std::popcount(grown)) + (k - len - 1) < r) continue;
          if (e.is_left_descent(a)) continue;
          auto child = e;
          child.multiply_left_known(a, false);
          keys.push_back(child.canonical_key());
        }
      }
      std::sort(keys.begin(), keys.end());
      keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
      nodes += keys.size();
      if (nodes > budget) throw BudgetExceeded("search_M exceeded node budget of " + std::to_string(budget));
      layer = std::move(keys);
    }
    std::vector<Word> out;
    for (const auto& key : layer)
      if (static_cast<std::size_t>(std::popcount(support_of(key))) == r) out.push_back(key_to_word(key));
    return out;
  });
}

}  // namespace detail

// Lower bound for M(k): the largest class count over every element of length
// k in every Coxeter graph of rank <= max_rank with labels from `labels`.
// Graphs are taken up to relabeling; only elements using every generator of
// their graph are examined, since others live in a smaller graph. Ties keep
// the least (rank, graph code, canonical word). Labels are finite values >= 2
// or kInfinity. The value is 0 when the space has no element of length k.
inline SearchResult search_M(std::size_t k, std::vector<int> labels, std::size_t max_rank, SearchOptions options = {}) {
  if (labels.empty()) throw InvalidArgument("search_M needs at least one label");
  for (int m : labels)
    if (m != kInfinity && m < 2) throw InvalidArgument("labels must be >= 2 or inf");
  if (max_rank > 64) throw InvalidArgument("search_M supports max_rank <= 64");
  // 2 < 3 < ... < inf
  std::sort(labels.begin(), labels.end(), [](int a, int b) {
    const long x = a == kInfinity ? (1L << 40) : a;
    const long y = b == kInfinity ? (1L << 40) : b;
    return x < y;
  });
  labels.erase(std::unique(labels.begin(), labels.end()), labels.end());

  SearchResult best;
  best.k = k;
  if (k == 0) return best;

  std::size_t nodes = 0;
  bool found = false;
  const std::size_t top = std::min(max_rank, k);
  for (std::size_t r = 1; r <= top; ++r) {
    const auto codes = detail::graph_codes(r, labels.size());
    if (r == k) {
      // Every full-support element has each generator once; no braid move
      // applies to such a word, so C = 1. The least witness is the least graph
      // with the word 1 2 ... k.
      best.graphs_examined += codes.size();
      if (!found) {
        best.value = 1;
        best.witness_graph = detail::graph_from_code(codes.front(), r, labels);
        best.witness_word.resize(k);
        std::iota(best.witness_word.begin(), best.witness_word.end(), 0);
        found = true;
      }
      continue;
    }
    for (const auto& code : codes) {
      ++best.graphs_examined;
      const CoxeterGraph g = detail::graph_from_code(code, r, labels);
      const auto elements = detail::full_support_elements(g, k, nodes, options.node_budget);
      ReducedWordCounter counter(g, options.engine);
      for (const Word& w : elements) {
        ++best.elements_examined;
        const BigInt c = counter.count_classes(w);
        if (!found || c > best.value) {
          best.value = c;
          best.witness_graph = g;
          best.witness_word = w;
          found = true;
        }
      }
      nodes += counter.class_memo_size();
      if (nodes > options.node_budget)
        throw BudgetExceeded("search_M exceeded node budget of " + std::to_string(options.node_budget));
    }
  }
  if (!found) {
    // No element of length k exists anywhere in the search space.
    best.value = 0;
    best.witness_word.clear();
  }
  return best;
}

}  // namespace coxheap
