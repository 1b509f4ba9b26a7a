#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <sstream>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "alphabet.hpp"
#include "bigint.hpp"
#include "coxeter_graph.hpp"
#include "errors.hpp"

namespace coxheap {

// Positions of a word poset are numbered 0..size-1 and must fit one mask.
inline constexpr std::size_t kMaxPositions = 64;

using PositionSet = std::uint64_t;

inline constexpr PositionSet bit(std::size_t i) { return PositionSet{1} << i; }

inline constexpr PositionSet all_positions(std::size_t n) {
  return n >= 64 ? ~PositionSet{0} : bit(n) - 1;
}

// A finite labeled poset. The order is stored as strict-predecessor sets
// closed under transitivity; covers are the transitive reduction.
//
// A word poset additionally satisfies, for the alphabet it is used with:
//   (a) elements whose labels are equal or do not commute are comparable;
//   (b) the two labels of every cover are equal or do not commute.
// Posets built by this library satisfy both; `validate` checks them.
class WordPoset {
 public:
  WordPoset() = default;

  // Order generated by `relations` (pairs x < y). The closure is taken, so a
  // cycle yields x < x, which validate reports and counting rejects.
  static WordPoset from_relations(Word labels, const std::vector<std::pair<std::size_t, std::size_t>>& relations) {
    if (labels.size() > kMaxPositions)
      throw BudgetExceeded("poset size " + std::to_string(labels.size()) + " exceeds position cap 64");
    const std::size_t n = labels.size();
    std::vector<PositionSet> below(n, 0);
    for (auto [x, y] : relations) {
      if (x >= n || y >= n) throw InvalidArgument("relation index out of range");
      below[y] |= bit(x);
    }
    // Warshall closure on predecessor masks.
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t y = 0; y < n; ++y)
        if (below[y] & bit(k)) below[y] |= below[k];
    return WordPoset(std::move(labels), std::move(below));
  }

  std::size_t size() const noexcept { return labels_.size(); }
  bool empty() const noexcept { return labels_.empty(); }

  Letter label(std::size_t x) const { return labels_.at(x); }
  const Word& labels() const noexcept { return labels_; }

  // Strict predecessors of y.
  PositionSet below(std::size_t y) const { return below_.at(y); }

  bool less(std::size_t x, std::size_t y) const { return (below_.at(y) & bit(x)) != 0; }
  bool less_equal(std::size_t x, std::size_t y) const { return x == y || less(x, y); }
  bool comparable(std::size_t x, std::size_t y) const { return less_equal(x, y) || less(y, x); }

  // Immediate predecessors of y (the transitive reduction).
  PositionSet covered_by(std::size_t y) const {
    PositionSet strict = below_.at(y);
    PositionSet reduced = strict;
    for (PositionSet rest = strict; rest;) {
      const auto x = static_cast<std::size_t>(std::countr_zero(rest));
      rest &= rest - 1;
      reduced &= ~below_[x];
    }
    return reduced;
  }

  // All cover pairs (x, y) with x covered by y, sorted.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t y = 0; y < size(); ++y)
      for (PositionSet c = covered_by(y); c; c &= c - 1)
        out.emplace_back(static_cast<std::size_t>(std::countr_zero(c)), y);
    std::sort(out.begin(), out.end());
    return out;
  }

  // True when no element is below itself.
  bool acyclic() const {
    for (std::size_t x = 0; x < size(); ++x)
      if (below_[x] & bit(x)) return false;
    return true;
  }

  friend bool operator==(const WordPoset&, const WordPoset&) = default;

 private:
  friend WordPoset build_word_poset(const Word&, const CommutationAlphabet&);
  friend WordPoset adjoin_min(const WordPoset&, Letter, const CommutationAlphabet&);

  WordPoset(Word labels, std::vector<PositionSet> below)
      : labels_(std::move(labels)), below_(std::move(below)) {}

  Word labels_;
  std::vector<PositionSet> below_;
};

// Heap of a word: i < j iff i < j as positions and (i, j) is in the
// transitive closure of { (i, j) : i < j, labels equal or non-commuting }.
inline WordPoset build_word_poset(const Word& w, const CommutationAlphabet& alpha) {
  if (w.size() > kMaxPositions)
    throw BudgetExceeded("word length " + std::to_string(w.size()) + " exceeds position cap 64");
  for (Letter a : w) alpha.check(a);
  std::vector<PositionSet> below(w.size(), 0);
  for (std::size_t j = 0; j < w.size(); ++j)
    for (std::size_t i = 0; i < j; ++i)
      if (alpha.dependent(w[i], w[j])) below[j] |= bit(i) | below[i];
  return WordPoset(w, std::move(below));
}

// New minimal element x labeled a, placed at position 0 (old positions shift
// up by one). x lies below every element whose label equals a or does not
// commute with a, and below everything above those.
inline WordPoset adjoin_min(const WordPoset& p, Letter a, const CommutationAlphabet& alpha) {
  alpha.check(a);
  if (p.size() + 1 > kMaxPositions) throw BudgetExceeded("adjoin would exceed position cap 64");
  PositionSet direct = 0;
  for (std::size_t y = 0; y < p.size(); ++y)
    if (alpha.dependent(p.label(y), a)) direct |= bit(y);
  Word labels;
  labels.reserve(p.size() + 1);
  labels.push_back(a);
  labels.insert(labels.end(), p.labels().begin(), p.labels().end());
  std::vector<PositionSet> below(p.size() + 1, 0);
  for (std::size_t y = 0; y < p.size(); ++y) {
    PositionSet b = p.below(y) << 1;
    if ((direct & bit(y)) || (p.below(y) & direct)) b |= bit(0);
    below[y + 1] = b;
  }
  return WordPoset(std::move(labels), std::move(below));
}

enum class ViolationKind { kLabel, kOrder, kConditionA, kConditionB };

inline const char* to_string(ViolationKind k) {
  switch (k) {
    case ViolationKind::kLabel: return "label";
    case ViolationKind::kOrder: return "order";
    case ViolationKind::kConditionA: return "condition (a)";
    case ViolationKind::kConditionB: return "condition (b)";
  }
  return "?";
}

struct Violation {
  ViolationKind kind;
  std::size_t x;
  std::size_t y;
  std::string message;
};

// Every failure of the order axioms and of conditions (a) and (b).
inline std::vector<Violation> validate(const WordPoset& p, const CommutationAlphabet& alpha) {
  std::vector<Violation> out;
  const std::size_t n = p.size();
  bool labels_ok = true;
  for (std::size_t x = 0; x < n; ++x)
    if (!alpha.contains(p.label(x))) {
      out.push_back({ViolationKind::kLabel, x, x, "label of element " + std::to_string(x) + " not in alphabet"});
      labels_ok = false;
    }
  for (std::size_t x = 0; x < n; ++x) {
    if (p.less(x, x))
      out.push_back({ViolationKind::kOrder, x, x, "element " + std::to_string(x) + " lies below itself"});
    for (PositionSet rest = p.below(x); rest; rest &= rest - 1) {
      const auto z = static_cast<std::size_t>(std::countr_zero(rest));
      if ((p.below(z) & ~p.below(x)) != 0)
        out.push_back({ViolationKind::kOrder, z, x, "order not transitive through " + std::to_string(z)});
    }
  }
  if (!labels_ok) return out;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = x + 1; y < n; ++y)
      if (alpha.dependent(p.label(x), p.label(y)) && !p.comparable(x, y))
        out.push_back({ViolationKind::kConditionA, x, y,
                       "elements " + std::to_string(x) + " and " + std::to_string(y) +
                           " have equal or non-commuting labels but are incomparable"});
  if (p.acyclic())
    for (auto [x, y] : p.covers())
      if (alpha.commutes(p.label(x), p.label(y)))
        out.push_back({ViolationKind::kConditionB, x, y,
                       "cover " + std::to_string(x) + " < " + std::to_string(y) + " joins commuting labels"});
  return out;
}

inline bool is_valid(const WordPoset& p, const CommutationAlphabet& alpha) { return validate(p, alpha).empty(); }

namespace detail {
inline void require_acyclic(const WordPoset& p) {
  if (!p.acyclic()) throw InvalidArgument("poset order has a cycle");
}

// Elements not in `ideal` whose predecessors all are.
inline PositionSet minimal_outside(const WordPoset& p, PositionSet ideal) {
  PositionSet out = 0;
  for (std::size_t x = 0; x < p.size(); ++x)
    if (!(ideal & bit(x)) && (p.below(x) & ~ideal) == 0) out |= bit(x);
  return out;
}

// Minimal available elements ordered by (label, position).
inline std::vector<std::size_t> minimal_by_label(const WordPoset& p, PositionSet ideal) {
  std::vector<std::size_t> out;
  for (PositionSet m = minimal_outside(p, ideal); m; m &= m - 1)
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  std::stable_sort(out.begin(), out.end(), [&](std::size_t a, std::size_t b) { return p.label(a) < p.label(b); });
  return out;
}
}  // namespace detail

// E(P), by forward dynamic programming over order ideals keyed by their
// position masks; one layer of ideals is held at a time.
inline BigInt count_linear_extensions(const WordPoset& p) {
  detail::require_acyclic(p);
  const std::size_t n = p.size();
  std::unordered_map<PositionSet, BigInt> layer{{PositionSet{0}, BigInt{1}}};
  for (std::size_t step = 0; step < n; ++step) {
    std::unordered_map<PositionSet, BigInt> next;
    next.reserve(layer.size() * 2);
    for (const auto& [ideal, ways] : layer)
      for (PositionSet m = detail::minimal_outside(p, ideal); m; m &= m - 1)
        next[ideal | (m & (~m + 1))] += ways;
    layer = std::move(next);
  }
  return layer.at(all_positions(n));
}

// Calls visit(order, word) for each linear extension, in lexicographic order
// of the emitted word. `order[i]` is the element placed at step i (that is,
// e^{-1}(i)) and word[i] is its label. Returning false from visit stops the
// walk; the function returns false iff it was stopped.
inline bool for_each_linear_extension(
    const WordPoset& p,
    const std::function<bool(const std::vector<std::size_t>&, const Word&)>& visit) {
  detail::require_acyclic(p);
  std::vector<std::size_t> order;
  Word word;
  order.reserve(p.size());
  word.reserve(p.size());
  std::function<bool(PositionSet)> rec = [&](PositionSet ideal) -> bool {
    if (order.size() == p.size()) return visit(order, word);
    for (std::size_t x : detail::minimal_by_label(p, ideal)) {
      order.push_back(x);
      word.push_back(p.label(x));
      const bool go_on = rec(ideal | bit(x));
      order.pop_back();
      word.pop_back();
      if (!go_on) return false;
    }
    return true;
  };
  return rec(0);
}

// All words of the linear extensions, lexicographically ordered. Throws
// BudgetExceeded when there are more than `cap`.
inline std::vector<Word> enumerate_linear_extensions(const WordPoset& p, std::size_t cap = 1'000'000) {
  std::vector<Word> out;
  bool overflow = false;
  for_each_linear_extension(p, [&](const std::vector<std::size_t>&, const Word& w) {
    if (out.size() == cap) {
      overflow = true;
      return false;
    }
    out.push_back(w);
    return true;
  });
  if (overflow) throw BudgetExceeded("more than " + std::to_string(cap) + " linear extensions");
  return out;
}

// Lexicographically least linear-extension word. Greedy: emit the minimal
// element with the smallest label; condition (a) makes it unique.
inline Word canonical_word(const WordPoset& p) {
  detail::require_acyclic(p);
  Word out;
  out.reserve(p.size());
  PositionSet ideal = 0;
  while (out.size() < p.size()) {
    const auto mins = detail::minimal_by_label(p, ideal);
    out.push_back(p.label(mins.front()));
    ideal |= bit(mins.front());
  }
  return out;
}

// Word posets are isomorphic iff their canonical words agree.
inline bool isomorphic(const WordPoset& p, const WordPoset& q) {
  return p.size() == q.size() && canonical_word(p) == canonical_word(q);
}

// {"labels": [...], "covers": [[x, y], ...]} with 0-based positions.
inline nlohmann::json to_json(const WordPoset& p, const CommutationAlphabet& alpha) {
  nlohmann::json labels = nlohmann::json::array();
  for (Letter a : p.labels()) labels.push_back(alpha.contains(a) ? alpha.name(a) : std::to_string(a));
  nlohmann::json covers = nlohmann::json::array();
  for (auto [x, y] : p.covers()) covers.push_back({x, y});
  return {{"labels", labels}, {"covers", covers}};
}

inline WordPoset poset_from_json(const nlohmann::json& doc, const CommutationAlphabet& alpha) {
  if (!doc.is_object() || !doc.contains("labels") || !doc["labels"].is_array())
    throw ParseError("poset JSON needs a \"labels\" array");
  Word labels;
  for (const auto& l : doc["labels"]) {
    if (!l.is_string()) throw ParseError("poset labels must be strings");
    auto a = alpha.find(l.get<std::string>());
    if (!a) throw ParseError("poset label '" + l.get<std::string>() + "' not in alphabet");
    labels.push_back(*a);
  }
  std::vector<std::pair<std::size_t, std::size_t>> rel;
  if (doc.contains("covers")) {
    if (!doc["covers"].is_array()) throw ParseError("\"covers\" must be an array");
    for (const auto& c : doc["covers"]) {
      if (!c.is_array() || c.size() != 2 || !c[0].is_number_unsigned() || !c[1].is_number_unsigned())
        throw ParseError("cover must be [smaller, larger]");
      const auto x = c[0].get<std::size_t>();
      const auto y = c[1].get<std::size_t>();
      if (x >= labels.size() || y >= labels.size()) throw ParseError("cover position out of range");
      rel.emplace_back(x, y);
    }
  }
  return WordPoset::from_relations(std::move(labels), rel);
}

// Hasse diagram; edges point from the smaller element to the larger.
inline std::string to_dot(const WordPoset& p, const CommutationAlphabet& alpha) {
  std::ostringstream out;
  out << "digraph word_poset {\n  rankdir=BT;\n";
  for (std::size_t x = 0; x < p.size(); ++x)
    out << "  n" << x << " [label=\"" << alpha.name(p.label(x)) << "\"];\n";
  for (auto [x, y] : p.covers()) out << "  n" << x << " -> n" << y << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace coxheap
