#include "gfree/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <thread>
#include <vector>

#include "gfree/embed.hpp"
#include "gfree/error.hpp"
#include "gfree/families.hpp"
#include "gfree/graph_io.hpp"
#include "gfree/patterns.hpp"
#include "gfree/witness.hpp"

namespace gfree {

namespace {

using nlohmann::json;

struct LemmaSpec {
  std::string_view id;
  LemmaRange range;
};

constexpr LemmaSpec kLemmas[] = {
    {"2.2i", {5, 8}}, {"2.2w", {5, 8}}, {"2.3", {3, 5}}, {"2.4", {4, 6}}, {"2.5", {3, 5}},
    {"2.5p", {3, 5}}, {"4.1", {2, 8}},  {"5.1", {2, 8}}, {"5.3", {2, 8}},
};

// Outcome of one s: pass flag, detail record, witness for the report, and the
// host graph when it failed.
struct Instance {
  bool pass = true;
  json detail;
  json witness;
};

json named_embedding(const LabeledGraph& host, const Embedding& map) {
  json out = json::array();
  for (Vertex h : map) out.push_back(host.names[h]);
  return out;
}

Instance freeness(const LabeledGraph& host, std::initializer_list<PatternId> patterns) {
  Instance inst;
  inst.detail = json::object();
  for (const auto& id : patterns) {
    auto found = find_induced(make(id), host.graph);
    inst.detail[id.to_string()] = found ? "contained" : "free";
    if (found && inst.pass) {
      inst.pass = false;
      inst.witness = {{"pattern", id.to_string()}, {"embedding", named_embedding(host, *found)}};
    }
  }
  return inst;
}

struct NamedWitness {
  PatternId pattern;
  std::vector<std::string> names;
};

std::string un(int i, int j) { return "u^(" + std::to_string(i) + ")_" + std::to_string(j); }

std::vector<NamedWitness> known_witnesses() {
  return {
      {PatternId::tstar(9),
       {un(1, 6), un(1, 1), "v_1", un(4, 6), un(4, 1), un(2, 1), un(2, 6), un(2, 5), "v_2", un(5, 3),
        un(5, 2), un(3, 2), un(3, 3)}},
      {PatternId::s(8, {0, 0, 0, 1}),
       {un(1, 6), un(1, 1), "v_1", un(4, 6), un(4, 1), un(2, 1), un(2, 6), un(2, 5), "v_2", un(3, 2),
        un(3, 5)}},
      {PatternId::of(PatternKind::S8_1),
       {un(1, 6), un(1, 1), "v_1", un(4, 6), un(4, 1), un(2, 1), un(2, 6), un(2, 2), un(2, 3), "v_2",
        un(3, 3), un(3, 2), un(5, 2), un(5, 3)}},
  };
}

Instance witness_replay(const LabeledGraph& host) {
  Instance inst;
  inst.detail = json::object();
  inst.witness = json::object();
  for (const auto& w : known_witnesses()) {
    VertexSet s = host.set(w.names);
    bool ok = s.count() == w.names.size() && is_isomorphic(induced(host.graph, s), make(w.pattern));
    inst.detail[w.pattern.to_string()] = ok;
    inst.witness[w.pattern.to_string()] = w.names;
    inst.pass = inst.pass && ok;
  }
  return inst;
}

Instance petersen_blocks(const LabeledGraph& host, int s) {
  Instance inst;
  inst.detail = json::array();
  const Graph petersen = petersen_graph();
  for (int i = 1; i <= s; ++i) {
    std::vector<std::string> names{"z"};
    for (int j = 1; j <= 6; ++j) names.push_back("~u^(" + std::to_string(i) + ")_" + std::to_string(j));
    for (int h = 1; h <= 3; ++h) names.push_back("v^(" + std::to_string(i) + ")_" + std::to_string(h));
    bool ok = is_isomorphic(induced(host.graph, host.set(names)), petersen);
    inst.detail.push_back({{"block", i}, {"petersen", ok}});
    inst.pass = inst.pass && ok;
  }
  return inst;
}

Instance path_pair_sweep(const Graph& g) {
  Instance inst;
  std::size_t pairs = 0;
  std::size_t violations = 0;
  for (Vertex v = 0; v < g.order(); ++v) {
    for (Vertex w = 0; w < g.order(); ++w) {
      if (v == w || g.adjacent(v, w)) continue;
      for (int k : {4, 5}) {
        auto paths = vw_paths(g, v, w, k);
        for (const auto& q1 : paths) {
          for (const auto& q2 : paths) {
            if (q1[1] == q2[1]) continue;
            ++pairs;
            for (const auto& c : path_pair_clauses(g, q1, q2)) {
              if (c.holds) continue;
              if (violations++ == 0) inst.witness = {{"q1", q1}, {"q2", q2}, {"clause", c.clause}};
            }
          }
        }
      }
    }
  }
  inst.pass = violations == 0;
  inst.detail = {{"path_pairs", pairs}, {"violations", violations}};
  return inst;
}

Vertex max_degree_vertex(const Graph& g) {
  Vertex best = 0;
  for (Vertex v = 1; v < g.order(); ++v) {
    if (g.degree(v) > g.degree(best)) best = v;
  }
  return best;
}

// Connected vertex sets X inside N_{>=2}(w): every edge, plus (when
// with_triples) every 3-vertex path.
std::vector<VertexSet> connected_bases(const Graph& g, Vertex w, bool with_triples) {
  VertexSet far = layer_at_least(g, w, 2);
  std::vector<VertexSet> out;
  for (auto [a, b] : g.edges()) {
    if (!far.contains(a) || !far.contains(b)) continue;
    VertexSet x(g.order());
    x.insert(a);
    x.insert(b);
    out.push_back(x);
  }
  if (with_triples) {
    far.for_each([&](Vertex mid) {
      auto nb = (g.neighborhood(mid) & far).to_vector();
      for (std::size_t i = 0; i < nb.size(); ++i) {
        for (std::size_t j = i + 1; j < nb.size(); ++j) {
          VertexSet x(g.order());
          x.insert(mid);
          x.insert(nb[i]);
          x.insert(nb[j]);
          out.push_back(x);
        }
      }
    });
  }
  return out;
}

Instance witness_sweep(const Graph& g, bool with_triples) {
  Instance inst;
  Vertex w = max_degree_vertex(g);
  auto bases = connected_bases(g, w, with_triples);
  std::size_t violations = 0;
  for (const auto& x : bases) {
    Report r = check_witness_sets(g, w, x);
    if (r.pass) continue;
    if (violations++ == 0) inst.witness = {{"X", x.to_vector()}, {"details", r.details}};
  }
  inst.pass = violations == 0;
  inst.detail = {{"w", w}, {"bases", bases.size()}, {"violations", violations}};
  return inst;
}

Instance run_lemma(std::string_view id, int s) {
  if (id == "2.2i") return freeness(h1(s).labeled, {PatternId::path(10)});
  if (id == "2.2w") return witness_replay(h1(s).labeled);
  if (id == "2.3") return freeness(h2(s).labeled, {PatternId::s(8, {0, 0, 0, 1}), PatternId::tstar(8)});
  if (id == "2.4") return freeness(h3(s).labeled, {PatternId::s(7, {1, 0, 1})});
  if (id == "2.5") return freeness(h4(s).labeled, {PatternId::of(PatternKind::S8_2)});
  if (id == "2.5p") return petersen_blocks(h4(s).labeled, s);
  if (id == "4.1") return path_pair_sweep(h1(s).graph());
  if (id == "5.1") return witness_sweep(h1(s).graph(), false);
  return witness_sweep(h1(s).graph(), true);  // 5.3
}

Graph lemma_host(std::string_view id, int s) {
  if (id == "2.3") return h2(s).graph();
  if (id == "2.4") return h3(s).graph();
  if (id == "2.5" || id == "2.5p") return h4(s).graph();
  return h1(s).graph();
}

struct Gate {
  bool ok = true;
  std::string reason;
};

Gate hypothesis_gate(const Graph& g) {
  auto st = stats(g);
  if (g.order() == 0 || !st.connected) return {false, "host is disconnected"};
  if (st.min_degree < 3) return {false, "host has minimum degree " + std::to_string(st.min_degree)};
  if (!is_c3c4_free(g)) return {false, "host contains C3 or C4"};
  return {};
}

struct Clause {
  long long threshold;
  PatternId pattern;
};

// Shared implication driver: clause i applies when measure >= threshold.
Report implications(std::string check_id, const Graph& g, const char* measure_name, long long measure,
                    std::initializer_list<Clause> clauses, bool force, const Gate& gate) {
  Stopwatch clock;
  Report r;
  r.check_id = std::move(check_id);
  r.params[measure_name] = measure;
  json thresholds = json::array();
  for (const auto& c : clauses) thresholds.push_back(c.threshold);
  r.params["thresholds"] = thresholds;
  if (force) r.params["assume_hypothesis"] = true;

  if (!gate.ok) {
    r.status = Status::Vacuous;
    r.details.push_back({{"reason", gate.reason}});
    r.runtime_ms = clock.elapsed_ms();
    return r;
  }
  bool any = false;
  bool all = true;
  json witness = json::object();
  for (const auto& c : clauses) {
    const std::string name = c.pattern.to_string();
    json d = {{"pattern", name}, {"threshold", c.threshold}};
    if (!force && measure < c.threshold) {
      d["status"] = "vacuous";
      r.details.push_back(d);
      continue;
    }
    any = true;
    auto found = find_induced(make(c.pattern), g);
    d["status"] = "checked";
    d["found"] = found.has_value();
    if (found) {
      witness[name] = *found;
    } else {
      all = false;
    }
    r.details.push_back(d);
  }
  if (!any) {
    r.status = Status::Vacuous;
  } else {
    r.pass = all;
    if (all) {
      r.witness = witness;
    } else {
      r.counterexample = emit_graph6(g);
    }
  }
  r.runtime_ms = clock.elapsed_ms();
  return r;
}

enum class Verdict { Member, Disconnected, LowDegree, ShortCycle, ContainsTree };

Verdict classify(const Graph& g, const Graph& tree) {
  auto st = stats(g);
  if (g.order() == 0 || !st.connected) return Verdict::Disconnected;
  if (st.min_degree < 3) return Verdict::LowDegree;
  if (!is_c3c4_free(g)) return Verdict::ShortCycle;
  if (find_induced(tree, g)) return Verdict::ContainsTree;
  return Verdict::Member;
}

}  // namespace

LemmaRange lemma_range(std::string_view id) {
  for (const auto& l : kLemmas) {
    if (l.id == id) return l.range;
  }
  fail(ErrorKind::Usage, "unknown lemma id '" + std::string(id) + "'");
}

Report verify_lemma(std::string_view id, std::optional<std::pair<int, int>> s) {
  Stopwatch clock;
  LemmaRange range = lemma_range(id);
  auto [lo, hi] = s.value_or(std::pair{range.lo, range.hi});
  if (lo > hi) fail(ErrorKind::Usage, "empty s range");
  if (lo < range.lo || hi > range.hi) {
    fail(ErrorKind::Construction, "lemma " + std::string(id) + " supports s in " + std::to_string(range.lo) +
                                      ".." + std::to_string(range.hi));
  }
  Report r;
  r.check_id = std::string(id);
  r.params = {{"s_from", lo}, {"s_to", hi}};
  r.pass = true;
  json witnesses = json::object();
  for (int v = lo; v <= hi; ++v) {
    Instance inst = run_lemma(id, v);
    r.details.push_back({{"s", v}, {"pass", inst.pass}, {"result", inst.detail}});
    if (!inst.witness.is_null()) witnesses[std::to_string(v)] = inst.witness;
    if (!inst.pass) {
      r.pass = false;
      r.counterexample = emit_graph6(lemma_host(id, v));
      break;
    }
  }
  if (!witnesses.empty()) r.witness = witnesses;
  r.runtime_ms = clock.elapsed_ms();
  return r;
}

Report check_diam_theorem(const Graph& g) {
  Gate gate = hypothesis_gate(g);
  long long diam = gate.ok ? static_cast<long long>(diameter(g)) : -1;
  return implications("diam", g, "diameter", diam,
                      {{20, PatternId::of(PatternKind::T8_1)},
                       {16, PatternId::of(PatternKind::T8_2)},
                       {12, PatternId::t(9)}},
                      false, gate);
}

Report check_maxdeg_theorem(const Graph& g, bool assume_hypothesis) {
  Gate gate = hypothesis_gate(g);
  auto maxdeg = static_cast<long long>(stats(g).max_degree);
  return implications("maxdeg", g, "max_degree", maxdeg,
                      {{943218, PatternId::of(PatternKind::T8_1)},
                       {190375, PatternId::of(PatternKind::T8_2)},
                       {197433, PatternId::t(9)}},
                      assume_hypothesis, gate);
}

Report scan_corpus(std::istream& in, std::string_view tree_id, const ScanOptions& options) {
  Stopwatch clock;
  LabeledGraph pattern = make_pattern(PatternId::parse(tree_id));
  if (!is_tree(pattern.graph)) fail(ErrorKind::Usage, "'" + std::string(tree_id) + "' is not a tree");
  const Graph& tree = pattern.graph;

  Report r;
  r.check_id = "scan";
  r.params = {{"tree", std::string(tree_id)}, {"jobs", options.jobs}, {"lenient", options.lenient}};

  CorpusStream stream(in, options.lenient);
  constexpr std::size_t kBatch = 4096;
  const unsigned jobs = std::max(1U, options.jobs);
  std::vector<std::size_t> tally(5, 0);
  json members = json::array();
  std::size_t records = 0;

  std::vector<std::pair<std::size_t, Graph>> batch;
  std::vector<std::string> raw;
  auto flush = [&]() {
    std::vector<Verdict> verdicts(batch.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
      for (std::size_t i = next++; i < batch.size(); i = next++) verdicts[i] = classify(batch[i].second, tree);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < std::min<std::size_t>(jobs, batch.size()); ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (std::size_t i = 0; i < batch.size(); ++i) {
      ++tally[static_cast<std::size_t>(verdicts[i])];
      if (verdicts[i] == Verdict::Member) members.push_back({{"index", batch[i].first}, {"graph6", raw[i]}});
    }
    batch.clear();
    raw.clear();
  };
  while (auto rec = stream.next()) {
    ++records;
    batch.push_back(std::move(*rec));
    raw.push_back(stream.last_record());
    if (batch.size() == kBatch) flush();
  }
  flush();

  r.pass = true;
  r.witness = {{"members", members}};
  r.details.push_back({{"records", records},
                       {"members", tally[0]},
                       {"rejected_disconnected", tally[1]},
                       {"rejected_min_degree", tally[2]},
                       {"rejected_c3c4", tally[3]},
                       {"rejected_contains_tree", tally[4]},
                       {"format_errors", stream.errors()}});
  r.runtime_ms = clock.elapsed_ms();
  return r;
}

}  // namespace gfree
