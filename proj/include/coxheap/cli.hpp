#pragma once

#include <cstdint>
#include <fstream>
#include <iomanip>
#include <iterator>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "coxheap.hpp"

namespace coxheap::cli {

enum ExitCode : int { kOk = 0, kUsage = 1, kBudget = 2, kMismatch = 3 };

namespace detail {

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot read file '" + path + "'");
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

inline nlohmann::json word_json(const Word& w) {
  nlohmann::json out = nlohmann::json::array();
  for (Letter a : w) out.push_back(a + 1);
  return out;
}

// Labels as "2,3,inf" or "2 3 inf".
inline std::vector<int> parse_labels(const std::string& text) {
  std::string cleaned = text;
  for (char& c : cleaned)
    if (c == ',' || c == '{' || c == '}') c = ' ';
  std::vector<int> out;
  for (auto tok : ::coxheap::detail::split_ws(cleaned)) {
    if (tok == "inf") {
      out.push_back(kInfinity);
      continue;
    }
    auto v = ::coxheap::detail::parse_long(tok);
    if (!v || *v < 2) throw ParseError("bad label '" + std::string(tok) + "'");
    out.push_back(static_cast<int>(*v));
  }
  if (out.empty()) throw ParseError("no labels given");
  return out;
}

struct Output {
  std::ostream& out;
  std::string format;
  std::string command;
  nlohmann::json input;

  bool json() const { return format == "json"; }

  // A counting result: one decimal integer per line, or {command, input, value}.
  void value(const BigInt& v, nlohmann::json extra = nlohmann::json::object()) const {
    if (json()) {
      nlohmann::json doc = {{"command", command}, {"input", input}, {"value", to_string(v)}};
      doc.update(extra);
      out << doc.dump() << '\n';
    } else {
      out << to_string(v) << '\n';
    }
  }
};

}  // namespace detail

// Runs one command. `args` excludes the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Commutation classes of words and of reduced words in Coxeter groups", "coxheap"};
  app.require_subcommand(1);

  std::string graph_file;
  std::string alphabet_file;
  std::string word_text;
  std::string format = "text";
  std::size_t n = 0;
  std::size_t m = 0;
  std::string pm_text;
  std::size_t k = 0;
  std::string labels_text = "2,3,inf";
  std::size_t max_rank = 0;
  std::size_t budget = SearchOptions{}.node_budget;
  std::size_t cap = 1'000'000;

  auto add_graph_word = [&](CLI::App* sub) {
    sub->add_option("--graph", graph_file, "Coxeter graph file (text or JSON)")->required();
    sub->add_option("--word", word_text, "space-separated 1-based generator indices")->required();
  };
  auto add_format = [&](CLI::App* sub, std::vector<std::string> choices) {
    sub->add_option("--format", format, "output format")->check(CLI::IsMember(choices));
  };

  auto* count_classes_cmd = app.add_subcommand("count-classes", "number of commutation classes of reduced words");
  add_graph_word(count_classes_cmd);
  add_format(count_classes_cmd, {"text", "json"});

  auto* count_reduced_cmd = app.add_subcommand("count-reduced", "number of reduced words");
  add_graph_word(count_reduced_cmd);
  add_format(count_reduced_cmd, {"text", "json"});

  auto* enum_classes_cmd = app.add_subcommand("enum-classes", "canonical word of every commutation class");
  add_graph_word(enum_classes_cmd);
  add_format(enum_classes_cmd, {"text", "json"});

  auto* trace_cmd = app.add_subcommand("trace-count", "size of a commutation class in a trace monoid");
  trace_cmd->add_option("--alphabet", alphabet_file, "alphabet file")->required();
  trace_cmd->add_option("--word", word_text, "word as symbols")->required();
  add_format(trace_cmd, {"text", "json"});

  auto* poset_cmd = app.add_subcommand("poset", "word poset of a word");
  add_graph_word(poset_cmd);
  add_format(poset_cmd, {"text", "json", "dot"});

  auto* pn_cmd = app.add_subcommand("pn", "number of primitive sorting networks on n elements");
  pn_cmd->add_option("--n", n, "n >= 1")->required();
  add_format(pn_cmd, {"text", "json"});

  auto* pseq_cmd = app.add_subcommand("pseq", "P(1), ..., P(n)");
  pseq_cmd->add_option("--n", n, "n >= 1")->required();
  add_format(pseq_cmd, {"text", "json"});

  auto* limit_cmd = app.add_subcommand("limit-bound", "(1/k_m) log P(m)");
  limit_cmd->add_option("--m", m, "m > 1")->required();
  limit_cmd->add_option("--pm", pm_text, "P(m); computed when omitted");
  add_format(limit_cmd, {"text", "json"});

  auto* search_cmd = app.add_subcommand("search-mk", "lower bound for M(k) over a restricted graph space");
  search_cmd->add_option("--k", k, "element length")->required();
  search_cmd->add_option("--labels", labels_text, "edge labels, e.g. 2,3,inf");
  search_cmd->add_option("--max-rank", max_rank, "largest rank searched")->required();
  search_cmd->add_option("--budget", budget, "node budget");
  add_format(search_cmd, {"text", "json"});

  auto* check_cmd = app.add_subcommand("check", "cross-check counts against the braid-move oracle and the bound");
  add_graph_word(check_cmd);
  check_cmd->add_option("--cap", cap, "oracle word cap");
  add_format(check_cmd, {"text", "json"});

  std::vector<const char*> argv{"coxheap"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  auto* sub = app.get_subcommands().front();
  detail::Output report{out, format, sub->get_name(), nlohmann::json::object()};

  try {
    auto load_graph = [&] {
      report.input["graph"] = graph_file;
      report.input["word"] = word_text;
      return parse_graph(detail::read_file(graph_file));
    };
    auto load_word = [&](const CoxeterGraph& g) {
      Word w = parse_word(word_text);
      g.check_word(w);
      return w;
    };

    if (sub == count_classes_cmd) {
      const auto g = load_graph();
      report.value(count_classes(g, load_word(g)));
    } else if (sub == count_reduced_cmd) {
      const auto g = load_graph();
      report.value(count_reduced_words(g, load_word(g)));
    } else if (sub == enum_classes_cmd) {
      const auto g = load_graph();
      const auto set = wp_set(g, load_word(g));
      if (report.json()) {
        nlohmann::json classes = nlohmann::json::array();
        for (const auto& [word, poset] : set.posets) classes.push_back(detail::word_json(word));
        out << nlohmann::json{{"command", report.command}, {"input", report.input},
                              {"value", std::to_string(set.size())}, {"classes", classes}}
                   .dump()
            << '\n';
      } else {
        for (const auto& [word, poset] : set.posets) out << format_word(word) << '\n';
      }
    } else if (sub == trace_cmd) {
      report.input = {{"alphabet", alphabet_file}, {"word", word_text}};
      const auto alpha = parse_alphabet(detail::read_file(alphabet_file));
      report.value(count_class(parse_symbols(alpha, word_text), alpha));
    } else if (sub == poset_cmd) {
      const auto g = load_graph();
      const auto alpha = CommutationAlphabet::from_graph(g);
      const auto p = build_word_poset(load_word(g), alpha);
      if (format == "json") {
        out << to_json(p, alpha).dump() << '\n';
      } else if (format == "dot") {
        out << to_dot(p, alpha);
      } else {
        out << "labels:";
        for (Letter a : p.labels()) out << ' ' << alpha.name(a);
        out << "\ncovers:";
        for (auto [x, y] : p.covers()) out << ' ' << x << '<' << y;
        out << '\n';
      }
    } else if (sub == pn_cmd) {
      report.input = {{"n", n}};
      const BigInt v = p_n(n);
      report.value(v, {{"n", n}, {"p_n", to_string(v)}});
    } else if (sub == pseq_cmd) {
      report.input = {{"n", n}};
      const auto seq = p_sequence(n);
      if (report.json()) {
        nlohmann::json values = nlohmann::json::array();
        for (const auto& v : seq) values.push_back(to_string(v));
        out << nlohmann::json{{"command", report.command}, {"input", report.input}, {"value", values}}.dump()
            << '\n';
      } else {
        for (const auto& v : seq) out << to_string(v) << '\n';
      }
    } else if (sub == limit_cmd) {
      BigInt pm;
      if (pm_text.empty()) {
        pm = p_n(m);
      } else {
        try {
          pm = BigInt(pm_text);
        } catch (const std::exception&) {
          throw ParseError("--pm must be a decimal integer");
        }
      }
      report.input = {{"m", m}, {"pm", to_string(pm)}};
      const double bound = limit_lower_bound(m, pm);
      if (report.json()) {
        out << nlohmann::json{{"command", report.command}, {"input", report.input}, {"value", bound}}.dump()
            << '\n';
      } else {
        out << std::setprecision(10) << bound << '\n';
      }
    } else if (sub == search_cmd) {
      report.input = {{"k", k}, {"labels", labels_text}, {"max_rank", max_rank}};
      SearchOptions options;
      options.node_budget = budget;
      const auto res = search_M(k, detail::parse_labels(labels_text), max_rank, options);
      report.value(res.value, {{"k", k},
                               {"witness_graph", to_json(res.witness_graph)},
                               {"witness_word", detail::word_json(res.witness_word)}});
    } else if (sub == check_cmd) {
      const auto g = load_graph();
      const Word w = load_word(g);
      ReducedWordCounter counter(g);
      const auto oracle = oracle_reduced(g, w, cap);
      const BigInt reduced = counter.count_reduced_words(w);
      const BigInt classes = counter.count_classes(w);
      const std::size_t posets = counter.wp_set(w).size();
      const bool reduced_ok = reduced == oracle.reduced_words.size();
      const bool classes_ok = classes == oracle.classes && classes == posets;
      const bool bound_ok = w.empty() || bound_holds(classes, w.size());
      if (report.json()) {
        out << nlohmann::json{{"command", report.command},
                              {"input", report.input},
                              {"value", reduced_ok && classes_ok && bound_ok ? "PASS" : "FAIL"},
                              {"reduced_words", {{"formula", to_string(reduced)}, {"oracle", oracle.reduced_words.size()}}},
                              {"classes",
                               {{"recursion", to_string(classes)}, {"posets", posets}, {"oracle", oracle.classes}}},
                              {"bound", w.empty() ? "skip" : (bound_ok ? "pass" : "fail")}}
                   .dump()
            << '\n';
      } else {
        out << (reduced_ok ? "PASS" : "FAIL") << " reduced-words formula=" << to_string(reduced)
            << " oracle=" << oracle.reduced_words.size() << '\n';
        out << (classes_ok ? "PASS" : "FAIL") << " classes recursion=" << to_string(classes)
            << " posets=" << posets << " oracle=" << oracle.classes << '\n';
        out << (w.empty() ? "SKIP" : (bound_ok ? "PASS" : "FAIL")) << " bound" << '\n';
        out << (reduced_ok && classes_ok && bound_ok ? "PASS" : "FAIL") << '\n';
      }
      if (!(reduced_ok && classes_ok && bound_ok)) return kMismatch;
    }
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const NumericError& e) {
    err << "error: " << e.what() << '\n';
    return kBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kOk;
}

}  // namespace coxheap::cli
