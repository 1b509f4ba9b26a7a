#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "coxeter_graph.hpp"
#include "errors.hpp"

namespace coxheap {

// Ordered symbols with a symmetric, irreflexive commutation predicate. Symbols
// are ordered by declaration; that order drives every lexicographic notion.
class CommutationAlphabet {
 public:
  CommutationAlphabet() = default;

  explicit CommutationAlphabet(std::vector<std::string> names)
      : names_(std::move(names)), commutes_(names_.size() * names_.size(), false) {
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (names_[i].empty()) throw InvalidArgument("empty symbol name");
      if (!index_.emplace(names_[i], static_cast<Letter>(i)).second)
        throw InvalidArgument("duplicate symbol '" + names_[i] + "'");
    }
  }

  // Symbols "1".."n"; two generators commute iff m(i,j) = 2.
  static CommutationAlphabet from_graph(const CoxeterGraph& g) {
    std::vector<std::string> names;
    for (std::size_t i = 0; i < g.rank(); ++i) names.push_back(std::to_string(i + 1));
    CommutationAlphabet alpha(std::move(names));
    for (Letter i = 0; i < static_cast<Letter>(g.rank()); ++i)
      for (Letter j = i + 1; j < static_cast<Letter>(g.rank()); ++j)
        if (g.commutes(i, j)) alpha.set_commute(i, j);
    return alpha;
  }

  CommutationAlphabet& set_commute(Letter a, Letter b, bool value = true) {
    check(a);
    check(b);
    if (a == b) throw InvalidArgument("a symbol cannot commute with itself");
    commutes_[index(a, b)] = value;
    commutes_[index(b, a)] = value;
    return *this;
  }

  std::size_t size() const noexcept { return names_.size(); }
  const std::string& name(Letter a) const { return names_.at(static_cast<std::size_t>(a)); }

  bool contains(Letter a) const noexcept { return a >= 0 && static_cast<std::size_t>(a) < names_.size(); }

  void check(Letter a) const {
    if (!contains(a)) throw InvalidArgument("symbol index " + std::to_string(a) + " not in alphabet");
  }

  std::optional<Letter> find(std::string_view name) const {
    auto it = index_.find(std::string(name));
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  bool commutes(Letter a, Letter b) const { return a != b && commutes_[index(a, b)]; }

  // Labels that condition (a) forces to be comparable.
  bool dependent(Letter a, Letter b) const { return !commutes(a, b); }

  bool single_char_symbols() const {
    for (const auto& n : names_)
      if (n.size() != 1) return false;
    return true;
  }

 private:
  std::size_t index(Letter a, Letter b) const {
    return static_cast<std::size_t>(a) * names_.size() + static_cast<std::size_t>(b);
  }

  std::vector<std::string> names_;
  std::vector<bool> commutes_;
  std::unordered_map<std::string, Letter> index_;
};

// `symbols: a b c ...` followed by any number of `commute: x y` lines.
inline CommutationAlphabet parse_alphabet(std::string_view text) {
  std::optional<CommutationAlphabet> alpha;
  std::vector<std::pair<std::size_t, std::pair<std::string, std::string>>> pairs;
  for (auto [line_no, line] : detail::logical_lines(text)) {
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw detail::parse_error(line_no, "expected 'key: value'");
    const auto key = detail::trim(line.substr(0, colon));
    const auto fields = detail::split_ws(line.substr(colon + 1));
    if (key == "symbols") {
      if (alpha) throw detail::parse_error(line_no, "duplicate symbols line");
      if (fields.empty()) throw detail::parse_error(line_no, "no symbols listed");
      std::vector<std::string> names(fields.begin(), fields.end());
      try {
        alpha.emplace(std::move(names));
      } catch (const InvalidArgument& e) {
        throw detail::parse_error(line_no, e.what());
      }
    } else if (key == "commute") {
      if (fields.size() != 2) throw detail::parse_error(line_no, "expected 'commute: x y'");
      pairs.push_back({line_no, {std::string(fields[0]), std::string(fields[1])}});
    } else {
      throw detail::parse_error(line_no, "unknown key '" + std::string(key) + "'");
    }
  }
  if (!alpha) throw ParseError("missing 'symbols:' line");
  for (const auto& [line_no, p] : pairs) {
    auto a = alpha->find(p.first);
    auto b = alpha->find(p.second);
    if (!a || !b) throw detail::parse_error(line_no, "commute names an unknown symbol");
    if (*a == *b) throw detail::parse_error(line_no, "a symbol cannot commute with itself");
    alpha->set_commute(*a, *b);
  }
  return *std::move(alpha);
}

// Whitespace-separated symbol names, or a contiguous string when every symbol
// is a single character.
inline Word parse_symbols(const CommutationAlphabet& alpha, std::string_view text) {
  Word w;
  const auto tokens = detail::split_ws(text);
  const bool contiguous = tokens.size() == 1 && alpha.single_char_symbols();
  for (auto tok : tokens) {
    if (contiguous) {
      for (char c : tok) {
        auto a = alpha.find(std::string_view(&c, 1));
        if (!a) throw ParseError(std::string("symbol '") + c + "' not in alphabet");
        w.push_back(*a);
      }
    } else {
      auto a = alpha.find(tok);
      if (!a) throw ParseError("symbol '" + std::string(tok) + "' not in alphabet");
      w.push_back(*a);
    }
  }
  return w;
}

inline std::string format_symbols(const CommutationAlphabet& alpha, const Word& w) {
  std::string out;
  const bool contiguous = alpha.single_char_symbols();
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i && !contiguous) out += ' ';
    out += alpha.name(w[i]);
  }
  return out;
}

}  // namespace coxheap
