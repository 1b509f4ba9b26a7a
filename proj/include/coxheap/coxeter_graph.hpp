#pragma once

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "errors.hpp"

namespace coxheap {

// Generators are 0-based internally; files and the CLI use 1-based indices.
using Letter = int;
using Word = std::vector<Letter>;

// Edge label of a Coxeter graph. Finite labels are the relation lengths
// m(i,j) >= 2; `kInfinity` marks a pair with no relation.
inline constexpr int kInfinity = 0;

// A Coxeter presentation: rank n and the symmetric matrix m(i,j) with
// m(i,i) = 1 and m(i,j) in {2, 3, ...} u {inf} otherwise. Immutable.
class CoxeterGraph {
 public:
  static constexpr std::size_t kMaxRank = 255;

  CoxeterGraph() = default;

  // All pairs commute until set otherwise.
  explicit CoxeterGraph(std::size_t rank) : rank_(rank), labels_(rank * rank, 2) {
    if (rank == 0 || rank > kMaxRank)
      throw InvalidArgument("rank must be in [1, 255], got " + std::to_string(rank));
    for (std::size_t i = 0; i < rank; ++i) labels_[i * rank + i] = 1;
  }

  // Sets m(i,j) = m(j,i) = label, with label >= 2 or kInfinity.
  CoxeterGraph& set_label(Letter i, Letter j, int label) {
    check_generator(i);
    check_generator(j);
    if (i == j) throw InvalidArgument("cannot relabel a diagonal entry");
    if (label != kInfinity && label < 2)
      throw InvalidArgument("edge label must be >= 2 or inf");
    labels_[index(i, j)] = label;
    labels_[index(j, i)] = label;
    return *this;
  }

  std::size_t rank() const noexcept { return rank_; }

  int label(Letter i, Letter j) const { return labels_[index(i, j)]; }

  bool commutes(Letter i, Letter j) const { return i != j && label(i, j) == 2; }

  bool valid_generator(Letter a) const noexcept {
    return a >= 0 && static_cast<std::size_t>(a) < rank_;
  }

  void check_generator(Letter a) const {
    if (!valid_generator(a))
      throw InvalidArgument("generator index " + std::to_string(a + 1) +
                            " out of range [1, " + std::to_string(rank_) + "]");
  }

  void check_word(const Word& w) const {
    for (Letter a : w) check_generator(a);
  }

  // True when every label lies in {2, 3, 4, 6, inf}, so the geometric
  // representation has an integral Cartan matrix.
  bool is_crystallographic() const noexcept {
    for (int m : labels_)
      if (!(m == 1 || m == 2 || m == 3 || m == 4 || m == 6 || m == kInfinity)) return false;
    return true;
  }

  // Integral Cartan entries a(i,j) with a(i,j) a(j,i) = 4 cos^2(pi/m); the
  // larger magnitude sits below the diagonal. Infinity uses -2 on both sides.
  int integral_cartan(Letter i, Letter j) const {
    if (i == j) return 2;
    switch (label(i, j)) {
      case 2: return 0;
      case 3: return -1;
      case 4: return i < j ? -1 : -2;
      case 6: return i < j ? -1 : -3;
      case kInfinity: return -2;
      default: throw InvalidArgument("label has no integral Cartan entry");
    }
  }

  // Symmetric real entries -2 cos(pi/m); -2 for infinity.
  double real_cartan(Letter i, Letter j) const {
    if (i == j) return 2.0;
    const int m = label(i, j);
    if (m == kInfinity) return -2.0;
    if (m == 2) return 0.0;
    return -2.0 * std::cos(std::numbers::pi / m);
  }

  friend bool operator==(const CoxeterGraph&, const CoxeterGraph&) = default;

 private:
  std::size_t index(Letter i, Letter j) const {
    return static_cast<std::size_t>(i) * rank_ + static_cast<std::size_t>(j);
  }

  std::size_t rank_ = 0;
  std::vector<int> labels_;
};

// Standard graphs used throughout the tests and the CLI.
inline CoxeterGraph type_a(std::size_t n) {
  CoxeterGraph g(n);
  for (std::size_t i = 0; i + 1 < n; ++i)
    g.set_label(static_cast<Letter>(i), static_cast<Letter>(i + 1), 3);
  return g;
}

// Linear graph with labels 3, ..., 3, `last` on the final edge (B_n for 4,
// H_3 for 5 when n = 3).
inline CoxeterGraph linear_graph(std::size_t n, int last) {
  CoxeterGraph g = type_a(n);
  if (n >= 2) g.set_label(static_cast<Letter>(n - 2), static_cast<Letter>(n - 1), last);
  return g;
}

inline CoxeterGraph type_b(std::size_t n) { return linear_graph(n, 4); }
inline CoxeterGraph type_h3() { return linear_graph(3, 5); }

inline CoxeterGraph dihedral(int m) {
  CoxeterGraph g(2);
  g.set_label(0, 1, m);
  return g;
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

inline std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i;
    std::size_t j = i;
    while (j < s.size() && !std::isspace(static_cast<unsigned char>(s[j]))) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

inline std::optional<long> parse_long(std::string_view s) {
  long v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

// Splits a description into logical lines: newlines or ';' separate, '#'
// starts a comment running to the end of the physical line.
inline std::vector<std::pair<std::size_t, std::string_view>> logical_lines(std::string_view text) {
  std::vector<std::pair<std::size_t, std::string_view>> out;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++line_no;
    std::string_view line = text.substr(pos, end - pos);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    std::size_t start = 0;
    while (start <= line.size()) {
      std::size_t semi = line.find(';', start);
      if (semi == std::string_view::npos) semi = line.size();
      std::string_view piece = trim(line.substr(start, semi - start));
      if (!piece.empty()) out.emplace_back(line_no, piece);
      start = semi + 1;
    }
    pos = end + 1;
  }
  return out;
}

inline ParseError parse_error(std::size_t line, const std::string& msg) {
  return ParseError("line " + std::to_string(line) + ": " + msg);
}

struct RawEdge {
  std::size_t line;
  long i, j;
  int label;
};

inline CoxeterGraph assemble_graph(long rank, const std::vector<RawEdge>& edges) {
  if (rank < 1 || rank > static_cast<long>(CoxeterGraph::kMaxRank))
    throw ParseError("generators must be in [1, 255], got " + std::to_string(rank));
  CoxeterGraph g(static_cast<std::size_t>(rank));
  std::vector<bool> seen(static_cast<std::size_t>(rank * rank), false);
  for (const auto& e : edges) {
    if (e.i < 1 || e.i > rank || e.j < 1 || e.j > rank)
      throw parse_error(e.line, "edge index out of range [1, " + std::to_string(rank) + "]");
    if (e.i == e.j) throw parse_error(e.line, "edge joins a generator to itself");
    if (e.label != kInfinity && e.label < 3)
      throw parse_error(e.line, "explicit edge label must be >= 3 or inf");
    const auto a = static_cast<Letter>(e.i - 1);
    const auto b = static_cast<Letter>(e.j - 1);
    const auto key = static_cast<std::size_t>(std::min(a, b) * rank + std::max(a, b));
    if (seen[key] && g.label(a, b) != e.label)
      throw parse_error(e.line, "conflicting labels for edge " + std::to_string(e.i) + " " +
                                    std::to_string(e.j));
    seen[key] = true;
    g.set_label(a, b, e.label);
  }
  return g;
}

inline CoxeterGraph parse_graph_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid JSON graph: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("rank") || !doc["rank"].is_number_integer())
    throw ParseError("JSON graph needs an integer \"rank\"");
  std::vector<RawEdge> edges;
  if (doc.contains("edges")) {
    if (!doc["edges"].is_array()) throw ParseError("\"edges\" must be an array");
    std::size_t n = 0;
    for (const auto& e : doc["edges"]) {
      ++n;
      if (!e.is_array() || e.size() != 3 || !e[0].is_number_integer() ||
          !e[1].is_number_integer())
        throw parse_error(n, "edge must be [i, j, m]");
      int label = 0;
      if (e[2].is_string() && e[2].get<std::string>() == "inf") {
        label = kInfinity;
      } else if (e[2].is_number_integer()) {
        label = e[2].get<int>();
        if (label < 3) throw parse_error(n, "explicit edge label must be >= 3 or inf");
      } else {
        throw parse_error(n, "edge label must be an integer or \"inf\"");
      }
      edges.push_back({n, e[0].get<long>(), e[1].get<long>(), label});
    }
  }
  return assemble_graph(doc["rank"].get<long>(), edges);
}

}  // namespace detail

// Parses the text graph format (`generators: n`, `edge: i j m`, `#`
// comments) or its JSON equivalent. Unlisted pairs commute.
inline CoxeterGraph parse_graph(std::string_view text) {
  if (auto t = detail::trim(text); !t.empty() && t.front() == '{')
    return detail::parse_graph_json(t);

  std::optional<long> rank;
  std::vector<detail::RawEdge> edges;
  for (auto [line_no, line] : detail::logical_lines(text)) {
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) throw detail::parse_error(line_no, "expected 'key: value'");
    const auto key = detail::trim(line.substr(0, colon));
    const auto fields = detail::split_ws(line.substr(colon + 1));
    if (key == "generators") {
      if (rank) throw detail::parse_error(line_no, "duplicate generators line");
      if (fields.size() != 1) throw detail::parse_error(line_no, "expected 'generators: n'");
      rank = detail::parse_long(fields[0]);
      if (!rank) throw detail::parse_error(line_no, "generator count is not an integer");
    } else if (key == "edge") {
      if (fields.size() != 3) throw detail::parse_error(line_no, "expected 'edge: i j m'");
      auto i = detail::parse_long(fields[0]);
      auto j = detail::parse_long(fields[1]);
      if (!i || !j) throw detail::parse_error(line_no, "edge endpoints must be integers");
      int label = 0;
      if (fields[2] == "inf") {
        label = kInfinity;
      } else {
        auto m = detail::parse_long(fields[2]);
        if (!m) throw detail::parse_error(line_no, "edge label must be an integer or inf");
        if (*m < 3) throw detail::parse_error(line_no, "explicit edge label must be >= 3 or inf");
        label = static_cast<int>(std::min(*m, 1L << 30));
      }
      edges.push_back({line_no, *i, *j, label});
    } else {
      throw detail::parse_error(line_no, "unknown key '" + std::string(key) + "'");
    }
  }
  if (!rank) throw ParseError("missing 'generators: n' line");
  return detail::assemble_graph(*rank, edges);
}

inline std::string label_string(int m) { return m == kInfinity ? "inf" : std::to_string(m); }

// Text form accepted by parse_graph.
inline std::string to_text(const CoxeterGraph& g) {
  std::ostringstream out;
  out << "generators: " << g.rank() << '\n';
  for (Letter i = 0; i < static_cast<Letter>(g.rank()); ++i)
    for (Letter j = i + 1; j < static_cast<Letter>(g.rank()); ++j)
      if (g.label(i, j) != 2)
        out << "edge: " << i + 1 << ' ' << j + 1 << ' ' << label_string(g.label(i, j)) << '\n';
  return out.str();
}

inline nlohmann::json to_json(const CoxeterGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (Letter i = 0; i < static_cast<Letter>(g.rank()); ++i)
    for (Letter j = i + 1; j < static_cast<Letter>(g.rank()); ++j)
      if (const int m = g.label(i, j); m != 2) {
        if (m == kInfinity)
          edges.push_back({i + 1, j + 1, "inf"});
        else
          edges.push_back({i + 1, j + 1, m});
      }
  return {{"rank", g.rank()}, {"edges", edges}};
}

// Words as 1-based generator indices separated by whitespace or commas.
inline Word parse_word(std::string_view text) {
  std::string cleaned(text);
  for (char& c : cleaned)
    if (c == ',' || c == '[' || c == ']') c = ' ';
  Word w;
  for (auto tok : detail::split_ws(cleaned)) {
    auto v = detail::parse_long(tok);
    if (!v || *v < 1 || *v > static_cast<long>(CoxeterGraph::kMaxRank))
      throw ParseError("bad generator index '" + std::string(tok) + "'");
    w.push_back(static_cast<Letter>(*v - 1));
  }
  return w;
}

inline std::string format_word(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w[i] + 1);
  }
  return out;
}

}  // namespace coxheap
