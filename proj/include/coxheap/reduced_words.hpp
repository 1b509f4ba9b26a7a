#pragma once

#include <bit>
#include <cstdint>
#include <deque>
#include <map>
#include <memory>
#include <numeric>
#include <set>
#include <string>
#include <unordered_map>
#include <variant>
#include <vector>

#include "alphabet.hpp"
#include "bigint.hpp"
#include "coxeter.hpp"
#include "element.hpp"
#include "errors.hpp"
#include "word_poset.hpp"

namespace coxheap {

// Reduced word posets of one element keyed by canonical word, so each
// commutation class appears once.
using PosetMap = std::map<Word, WordPoset>;

// WP(w) for one group element.
struct WPSet {
  CanonicalElement element;
  PosetMap posets;

  std::size_t size() const noexcept { return posets.size(); }
};

struct EngineOptions {
  // Entry caps for the class-count and poset-set memo tables.
  std::size_t class_memo_cap = 50'000'000;
  std::size_t poset_memo_cap = 5'000'000;
};

namespace detail {

template <class Scalar>
class Engine {
 public:
  Engine(const CoxeterGraph& g, EngineOptions options)
      : graph_(g),
        alphabet_(CommutationAlphabet::from_graph(g)),
        rep_(std::make_unique<Representation<Scalar>>(g)),
        options_(options),
        commuting_(g.rank(), 0) {
    if (g.rank() > 64) throw InvalidArgument("counting supports rank <= 64");
    for (Letter a = 0; a < static_cast<Letter>(g.rank()); ++a)
      for (Letter b = 0; b < static_cast<Letter>(g.rank()); ++b)
        if (g.commutes(a, b)) commuting_[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
  }

  const CoxeterGraph& graph() const noexcept { return graph_; }
  const CommutationAlphabet& alphabet() const noexcept { return alphabet_; }

  Element<Scalar> element(const Word& w) const {
    require_reduced(graph_, w);
    if (w.size() > kMaxWordLength)
      throw BudgetExceeded("word length " + std::to_string(w.size()) + " exceeds cap 64");
    return element_from_word(*rep_, w);
  }

  // Pairwise commuting subset of generators.
  bool independent(std::uint64_t set) const {
    for (std::uint64_t rest = set; rest; rest &= rest - 1) {
      const auto a = static_cast<std::size_t>(std::countr_zero(rest));
      if ((set & ~(std::uint64_t{1} << a)) & ~commuting_[a]) return false;
    }
    return true;
  }

  // C(w) = sum over nonempty independent T in D(w) of (-1)^{|T|+1} C(Tw).
  BigInt count_classes(const Element<Scalar>& e) {
    if (e.length() == 0) return BigInt{1};
    std::string key = e.canonical_key();
    if (auto it = class_memo_.find(key); it != class_memo_.end()) return it->second;
    const std::uint64_t descents = e.left_descent_mask();
    BigInt total = 0;
    for (std::uint64_t t = descents; t; t = (t - 1) & descents) {
      if (!independent(t)) continue;
      Element<Scalar> child = e;
      // Generators of T commute pairwise, so each one stays a descent while
      // the others are stripped; apply in increasing index.
      for (std::uint64_t rest = t; rest; rest &= rest - 1) {
        const auto a = static_cast<Letter>(std::countr_zero(rest));
        if (!child.is_left_descent(a))
          throw std::logic_error("generator of an independent descent subset stopped being a descent");
        child.multiply_left_known(a, true);
      }
      if (std::popcount(t) % 2 == 1)
        total += count_classes(child);
      else
        total -= count_classes(child);
    }
    if (class_memo_.size() >= options_.class_memo_cap)
      throw BudgetExceeded("class-count memo exceeded " + std::to_string(options_.class_memo_cap) + " entries");
    class_memo_.emplace(std::move(key), total);
    return total;
  }

  // WP(w): adjoin a minimal a to every poset of WP(aw), for a in D(w), and
  // deduplicate by canonical word.
  std::shared_ptr<const PosetMap> wp_set(const Element<Scalar>& e) {
    if (e.length() == 0) {
      static const auto identity = std::make_shared<const PosetMap>(PosetMap{{Word{}, WordPoset{}}});
      return identity;
    }
    std::string key = e.canonical_key();
    if (auto it = poset_memo_.find(key); it != poset_memo_.end()) return it->second;
    auto result = std::make_shared<PosetMap>();
    for (Letter a = 0; a < static_cast<Letter>(graph_.rank()); ++a) {
      if (!e.is_left_descent(a)) continue;
      Element<Scalar> child = e;
      child.multiply_left_known(a, true);
      const auto below = wp_set(child);
      for (const auto& [word, poset] : *below) {
        WordPoset bigger = adjoin_min(poset, a, alphabet_);
        Word cw = canonical_word(bigger);
        result->emplace(std::move(cw), std::move(bigger));
      }
    }
    if (poset_memo_.size() >= options_.poset_memo_cap)
      throw BudgetExceeded("poset-set memo exceeded " + std::to_string(options_.poset_memo_cap) + " entries");
    std::shared_ptr<const PosetMap> frozen = std::move(result);
    poset_memo_.emplace(std::move(key), frozen);
    return frozen;
  }

  std::size_t class_memo_size() const noexcept { return class_memo_.size(); }

 private:
  CoxeterGraph graph_;
  CommutationAlphabet alphabet_;
  std::unique_ptr<Representation<Scalar>> rep_;
  EngineOptions options_;
  std::vector<std::uint64_t> commuting_;
  std::unordered_map<std::string, BigInt> class_memo_;
  std::unordered_map<std::string, std::shared_ptr<const PosetMap>> poset_memo_;
};

}  // namespace detail

// Counts commutation classes and reduced words for elements of one Coxeter
// group, sharing memo tables across queries. Not thread safe; use one per
// thread.
class ReducedWordCounter {
 public:
  explicit ReducedWordCounter(const CoxeterGraph& g, EngineOptions options = {}) {
    if (g.is_crystallographic())
      impl_ = std::make_unique<detail::Engine<std::int64_t>>(g, options);
    else
      impl_ = std::make_unique<detail::Engine<double>>(g, options);
  }

  BigInt count_classes(const Word& w) {
    return std::visit([&](auto& e) { return e->count_classes(e->element(w)); }, impl_);
  }

  WPSet wp_set(const Word& w) {
    return std::visit(
        [&](auto& e) {
          auto elem = e->element(w);
          return WPSet{CanonicalElement{elem.canonical_word()}, *e->wp_set(elem)};
        },
        impl_);
  }

  // Sum of E(P) over WP(w).
  BigInt count_reduced_words(const Word& w) {
    return std::visit(
        [&](auto& e) {
          BigInt total = 0;
          for (const auto& [word, poset] : *e->wp_set(e->element(w))) total += count_linear_extensions(poset);
          return total;
        },
        impl_);
  }

  const CommutationAlphabet& alphabet() const {
    return std::visit([](const auto& e) -> const CommutationAlphabet& { return e->alphabet(); }, impl_);
  }

  std::size_t class_memo_size() const {
    return std::visit([](const auto& e) { return e->class_memo_size(); }, impl_);
  }

 private:
  std::variant<std::unique_ptr<detail::Engine<std::int64_t>>, std::unique_ptr<detail::Engine<double>>> impl_;
};

inline WPSet wp_set(const CoxeterGraph& g, const Word& w, EngineOptions options = {}) {
  return ReducedWordCounter(g, options).wp_set(w);
}

inline BigInt count_reduced_words(const CoxeterGraph& g, const Word& w, EngineOptions options = {}) {
  return ReducedWordCounter(g, options).count_reduced_words(w);
}

inline BigInt count_classes(const CoxeterGraph& g, const Word& w, EngineOptions options = {}) {
  return ReducedWordCounter(g, options).count_classes(w);
}

// Result of the braid-move oracle.
struct OracleResult {
  std::set<Word> reduced_words;
  std::size_t classes = 0;
};

// All reduced words of w, found by breadth-first search over braid moves
// (aba... = bab... of length m(a,b), including commutations m = 2), and the
// number of components under commutation moves alone. Uses only the graph
// labels, never the root machinery.
inline OracleResult oracle_reduced(const CoxeterGraph& g, const Word& w, std::size_t cap = 1'000'000) {
  detail::require_reduced(g, w);
  auto braid_neighbours = [&](const Word& cur, bool commutations_only, auto&& emit) {
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      const Letter a = cur[i];
      const Letter b = cur[i + 1];
      if (a == b) continue;
      const int m = g.label(a, b);
      if (m == kInfinity || (commutations_only && m != 2)) continue;
      const auto len = static_cast<std::size_t>(m);
      if (i + len > cur.size()) continue;
      bool alternating = true;
      for (std::size_t k = 0; k < len && alternating; ++k) alternating = cur[i + k] == (k % 2 == 0 ? a : b);
      if (!alternating) continue;
      Word next = cur;
      for (std::size_t k = 0; k < len; ++k) next[i + k] = (k % 2 == 0 ? b : a);
      emit(std::move(next));
    }
  };

  OracleResult out;
  std::deque<Word> frontier{w};
  out.reduced_words.insert(w);
  while (!frontier.empty()) {
    Word cur = std::move(frontier.front());
    frontier.pop_front();
    braid_neighbours(cur, false, [&](Word next) {
      if (out.reduced_words.insert(next).second) {
        if (out.reduced_words.size() > cap)
          throw BudgetExceeded("reduced-word oracle exceeded cap of " + std::to_string(cap) + " words");
        frontier.push_back(std::move(next));
      }
    });
  }

  std::set<Word> unvisited = out.reduced_words;
  while (!unvisited.empty()) {
    ++out.classes;
    std::deque<Word> queue{*unvisited.begin()};
    unvisited.erase(unvisited.begin());
    while (!queue.empty()) {
      Word cur = std::move(queue.front());
      queue.pop_front();
      braid_neighbours(cur, true, [&](Word next) {
        if (auto it = unvisited.find(next); it != unvisited.end()) {
          unvisited.erase(it);
          queue.push_back(std::move(next));
        }
      });
    }
  }
  return out;
}

// Checks C(w) <= (2/3) 3^{l(w)/2} in the exact form 9 C(w)^2 <= 4 3^{l(w)}.
inline bool bound_holds(const BigInt& classes, std::size_t length) {
  BigInt power = 1;
  for (std::size_t i = 0; i < length; ++i) power *= 3;
  return 9 * classes * classes <= 4 * power;
}

inline bool bound_check(const CoxeterGraph& g, const Word& w, EngineOptions options = {}) {
  if (w.empty()) throw InvalidArgument("bound applies only to elements of positive length");
  return bound_holds(count_classes(g, w, options), w.size());
}

}  // namespace coxheap
