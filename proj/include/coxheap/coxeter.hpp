#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <string>
#include <vector>

#include "coxeter_graph.hpp"
#include "element.hpp"
#include "errors.hpp"

namespace coxheap {

// Length cap for words handled by the counting machinery, so that position
// sets of a word fit in one 64-bit mask.
inline constexpr std::size_t kMaxWordLength = 64;

// Lexicographically least reduced word of a group element; the identity key
// for memo tables over group elements. Build it with canonical_form.
struct CanonicalElement {
  Word word;

  std::size_t length() const noexcept { return word.size(); }
  friend auto operator<=>(const CanonicalElement&, const CanonicalElement&) = default;
};

namespace detail {

// Element for w = w[0] w[1] ... w[k-1], built by left multiplication from the
// right end.
template <class Scalar>
Element<Scalar> element_from_word(const Representation<Scalar>& rep, const Word& w) {
  Element<Scalar> e(rep);
  for (auto it = w.rbegin(); it != w.rend(); ++it) e.multiply_left(*it);
  return e;
}

// Length of the longest reduced prefix of w. Left-multiplying by w[0], w[1],
// ... builds the inverse of each prefix, and a prefix is reduced exactly when
// its inverse is.
template <class Scalar>
std::size_t reduced_prefix_length(const Representation<Scalar>& rep, const Word& w) {
  Element<Scalar> inverse(rep);
  for (std::size_t i = 0; i < w.size(); ++i)
    if (!inverse.multiply_left(w[i])) return i;
  return w.size();
}

inline void require_reduced(const CoxeterGraph& g, const Word& w) {
  g.check_word(w);
  const std::size_t ok = with_representation(g, [&](const auto& rep) { return reduced_prefix_length(rep, w); });
  if (ok != w.size()) {
    Word prefix(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(ok + 1));
    throw NotReducedError("word is not reduced: prefix [" + format_word(prefix) + "] is not reduced", ok);
  }
}

}  // namespace detail

// True iff w has minimal length among all words for its element. Exactly: the
// roots w[0..i-1](alpha_{w[i]}) are all positive.
inline bool is_reduced(const CoxeterGraph& g, const Word& w) {
  g.check_word(w);
  return with_representation(g, [&](const auto& rep) {
    return detail::reduced_prefix_length(rep, w) == w.size();
  });
}

// Length of the longest reduced prefix of w.
inline std::size_t reduced_prefix_length(const CoxeterGraph& g, const Word& w) {
  g.check_word(w);
  return with_representation(g, [&](const auto& rep) { return detail::reduced_prefix_length(rep, w); });
}

// A reduced word for the element represented by w (the lexicographically
// least one).
inline Word element_of(const CoxeterGraph& g, const Word& w) {
  g.check_word(w);
  return with_representation(g, [&](const auto& rep) {
    return detail::element_from_word(rep, w).canonical_word();
  });
}

// Length of the element represented by an arbitrary word.
inline std::size_t element_length(const CoxeterGraph& g, const Word& w) {
  g.check_word(w);
  return with_representation(g, [&](const auto& rep) { return detail::element_from_word(rep, w).length(); });
}

// D(w) = { a : l(aw) < l(w) }, ascending.
inline std::vector<Letter> left_descents(const CoxeterGraph& g, const Word& w) {
  detail::require_reduced(g, w);
  return with_representation(g, [&](const auto& rep) {
    return detail::element_from_word(rep, w).left_descents();
  });
}

inline CanonicalElement canonical_form(const CoxeterGraph& g, const Word& w) {
  detail::require_reduced(g, w);
  return {element_of(g, w)};
}

// Reduced word (canonical) for a w; its length is l(w) + 1 or l(w) - 1.
inline Word multiply_left(const CoxeterGraph& g, Letter a, const Word& w) {
  g.check_generator(a);
  detail::require_reduced(g, w);
  return with_representation(g, [&](const auto& rep) {
    auto e = detail::element_from_word(rep, w);
    e.multiply_left(a);
    return e.canonical_word();
  });
}

// True iff u and v represent the same group element.
inline bool same_element(const CoxeterGraph& g, const Word& u, const Word& v) {
  return element_of(g, u) == element_of(g, v);
}

// Elements of length 0, 1, ..., max_length as canonical words, one sorted
// layer per length. Stops early once a layer is empty (finite groups).
// Throws BudgetExceeded once more than `max_elements` have been produced.
inline std::vector<std::vector<Word>> element_layers(const CoxeterGraph& g, std::size_t max_length,
                                                     std::size_t max_elements = 10'000'000) {
  std::vector<std::vector<Word>> layers{{Word{}}};
  std::size_t produced = 1;
  with_representation(g, [&](const auto& rep) {
    while (layers.size() <= max_length) {
      std::vector<std::string> keys;
      for (const Word& w : layers.back()) {
        auto e = detail::element_from_word(rep, w);
        for (Letter a = 0; a < static_cast<Letter>(g.rank()); ++a) {
          if (e.is_left_descent(a)) continue;
          auto child = e;
          child.multiply_left_known(a, false);
          keys.push_back(child.canonical_key());
        }
      }
      std::sort(keys.begin(), keys.end());
      keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
      if (keys.empty()) break;
      produced += keys.size();
      if (produced > max_elements)
        throw BudgetExceeded("element enumeration exceeded " + std::to_string(max_elements) + " elements");
      std::vector<Word> next;
      next.reserve(keys.size());
      for (const auto& k : keys) next.push_back(key_to_word(k));
      layers.push_back(std::move(next));
    }
  });
  return layers;
}

// All elements of length <= max_length, in order of increasing length.
inline std::vector<Word> elements_up_to_length(const CoxeterGraph& g, std::size_t max_length,
                                               std::size_t max_elements = 10'000'000) {
  std::vector<Word> out;
  for (auto& layer : element_layers(g, max_length, max_elements))
    for (auto& w : layer) out.push_back(std::move(w));
  return out;
}

}  // namespace coxheap

template <>
struct std::hash<coxheap::CanonicalElement> {
  std::size_t operator()(const coxheap::CanonicalElement& c) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (auto a : c.word) h = (h ^ static_cast<std::size_t>(a)) * 1099511628211ull;
    return h;
  }
};
