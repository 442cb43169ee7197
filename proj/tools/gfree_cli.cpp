// gfree command-line driver. Talks to the library only through gfree.h.
//
// Exit codes: 0 all checks passed, 1 a checked claim failed, 2 usage,
// format or I/O error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gfree/gfree.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct CliError {
  std::string message;
};

struct GraphDeleter {
  void operator()(gf_graph* g) const { gf_graph_free(g); }
};
using GraphPtr = std::unique_ptr<gf_graph, GraphDeleter>;

void check(gf_status s) {
  if (s != GF_OK) throw CliError{std::string(gf_status_name(s)) + ": " + gf_last_error()};
}

std::string take(char* s) {
  std::string out(s);
  gf_string_free(s);
  return out;
}

bool checked_failure(const std::string& report) {
  auto j = nlohmann::json::parse(report);
  return !j.at("pass").get<bool>() && j.at("status").get<std::string>() == "checked";
}

void emit(const std::string& text, const std::string& path) {
  if (path.empty()) {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path);
  if (!out) throw CliError{"io: cannot write " + path};
  out << text << "\n";
}

// Calls f(index, graph) for every record of a graph6 file.
template <typename F>
void for_each_record(const std::string& path, F&& f) {
  gf_corpus* corpus = nullptr;
  check(gf_corpus_open(path.c_str(), 0, &corpus));
  std::unique_ptr<gf_corpus, void (*)(gf_corpus*)> guard(corpus, gf_corpus_close);
  for (;;) {
    gf_graph* raw = nullptr;
    size_t index = 0;
    check(gf_corpus_next(corpus, &raw, &index));
    if (raw == nullptr) break;
    f(index, GraphPtr(raw));
  }
}

GraphPtr load_graph_arg(const std::string& spec) {
  gf_graph* g = nullptr;
  if (spec.find(':') != std::string::npos && (spec.rfind("h", 0) == 0 || spec.rfind("gp", 0) == 0)) {
    check(gf_graph_from_family(spec.c_str(), &g));
  } else {
    check(gf_graph_from_pattern(spec.c_str(), &g));
  }
  return GraphPtr(g);
}

std::pair<int, int> parse_range(const std::string& text) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw CliError{"usage: bad range '" + text + "' (expected A or A..B)"};
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"gfree: induced-tree freeness toolkit for girth-5 graphs"};
  app.require_subcommand(1);

  std::string family;
  std::string format = "g6";
  std::string out_path;
  auto* gen = app.add_subcommand("gen", "Emit a family graph or catalog pattern");
  gen->add_option("--family", family, "h1:<s>, h2:<s>, h3:<s>, h4:<s>, gp:<n>, or a pattern id")->required();
  gen->add_option("--format", format, "g6 or dot")->check(CLI::IsMember({"g6", "dot"}));
  gen->add_option("--out", out_path, "Write to file instead of stdout");

  std::string host_path;
  std::string pattern_id;
  std::string expect;
  auto* chk = app.add_subcommand("check", "Test each host record for an induced copy of a pattern");
  chk->add_option("--host", host_path, "graph6 file")->required();
  chk->add_option("--pattern", pattern_id, "Pattern id")->required();
  chk->add_option("--expect", expect, "Fail (exit 1) unless every host is free / contains")
      ->check(CLI::IsMember({"free", "contains"}));

  std::string input_path;
  std::size_t cap = 24;
  bool exact = false;
  auto* chi = app.add_subcommand("chi", "Chromatic number of each record");
  chi->add_option("--input", input_path, "graph6 file")->required();
  chi->add_option("--cap", cap, "Largest component handed to the exact search");
  chi->add_flag("--exact", exact, "Run the exact search on the whole graph");

  std::string lemma;
  std::string s_range;
  std::string report_path;
  auto* ver = app.add_subcommand("verify", "Run a lemma check over a range of s");
  ver->add_option("--lemma", lemma, "2.2i, 2.2w, 2.3, 2.4, 2.5, 2.5p, 4.1, 5.1, 5.3")->required();
  ver->add_option("--s", s_range, "A or A..B");
  ver->add_option("--report", report_path, "Write the JSON report here");

  std::string corpus_path;
  std::string tree_id;
  unsigned jobs = 1;
  bool lenient = false;
  auto* scan = app.add_subcommand("scan", "Filter a graph6 corpus down to the tree-free girth-5 members");
  scan->add_option("--corpus", corpus_path, "graph6 file")->required();
  scan->add_option("--tree", tree_id, "Tree pattern id")->required();
  scan->add_option("--jobs", jobs, "Worker threads")->check(CLI::Range(1U, 256U));
  scan->add_flag("--lenient", lenient, "Skip malformed records instead of stopping");
  scan->add_option("--report", report_path, "Write the JSON report here");

  std::string which;
  bool assume = false;
  auto* thm = app.add_subcommand("theorem", "Check the diameter or max-degree implications on each record");
  thm->add_option("--input", input_path, "graph6 file")->required();
  thm->add_option("--which", which, "diam or maxdeg")->required()->check(CLI::IsMember({"diam", "maxdeg"}));
  thm->add_flag("--assume-hypothesis", assume, "Run the searches even below the max-degree thresholds");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*gen) {
      GraphPtr g = load_graph_arg(family);
      char* text = nullptr;
      check(format == "dot" ? gf_graph_to_dot(g.get(), &text) : gf_graph_to_graph6(g.get(), &text));
      std::string s = take(text);
      if (!s.empty() && s.back() == '\n') s.pop_back();
      emit(s, out_path);
      return kExitPass;
    }
    if (*chk) {
      GraphPtr pattern = load_graph_arg(pattern_id);
      const size_t k = gf_graph_order(pattern.get());
      bool mismatch = false;
      for_each_record(host_path, [&](size_t index, GraphPtr host) {
        int found = 0;
        std::vector<uint32_t> map(k);
        check(gf_find_induced(pattern.get(), host.get(), &found, map.data()));
        std::string line = found ? "contains" : "free";
        if (found) {
          for (size_t a = 0; a < k; ++a) line += (a == 0 ? " " : ",") + std::to_string(map[a]);
        }
        std::cout << index << " " << line << "\n";
        if (!expect.empty() && (expect == "free") == (found != 0)) mismatch = true;
      });
      return mismatch ? kExitFail : kExitPass;
    }
    if (*chi) {
      for_each_record(input_path, [&](size_t index, GraphPtr g) {
        int value = 0;
        check(gf_chromatic_number(g.get(), cap, exact ? 0 : 1, &value));
        std::cout << index << " " << value << "\n";
      });
      return kExitPass;
    }
    if (*ver) {
      auto [lo, hi] = s_range.empty() ? std::pair{0, 0} : parse_range(s_range);
      char* json = nullptr;
      check(gf_verify_lemma(lemma.c_str(), lo, hi, &json));
      std::string report = take(json);
      emit(report, report_path);
      if (!report_path.empty()) std::cout << report << "\n";
      return checked_failure(report) ? kExitFail : kExitPass;
    }
    if (*scan) {
      char* json = nullptr;
      check(gf_scan_corpus(corpus_path.c_str(), tree_id.c_str(), jobs, lenient ? 1 : 0, &json));
      std::string report = take(json);
      emit(report, report_path);
      if (!report_path.empty()) std::cout << report << "\n";
      return checked_failure(report) ? kExitFail : kExitPass;
    }
    if (*thm) {
      bool failed = false;
      for_each_record(input_path, [&](size_t, GraphPtr g) {
        char* json = nullptr;
        check(gf_check_theorem(g.get(), which.c_str(), assume ? 1 : 0, &json));
        std::string report = take(json);
        std::cout << report << "\n";
        failed = failed || checked_failure(report);
      });
      return failed ? kExitFail : kExitPass;
    }
  } catch (const CliError& e) {
    std::cerr << "gfree: " << e.message << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
