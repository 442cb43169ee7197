#include "gfree/gfree.h"

#include <cstring>
#include <fstream>
#include <memory>
#include <new>
#include <string>

#include "gfree/chromatic.hpp"
#include "gfree/embed.hpp"
#include "gfree/error.hpp"
#include "gfree/families.hpp"
#include "gfree/graph_io.hpp"
#include "gfree/patterns.hpp"
#include "gfree/verify.hpp"
#include "gfree/witness.hpp"

struct gf_graph {
  gfree::Graph graph;
  std::vector<std::string> names;  // empty for anonymous graphs
};

struct gf_corpus {
  std::ifstream file;
  gfree::CorpusStream stream;

  gf_corpus(const char* path, bool lenient) : file(path), stream(file, lenient) {}
};

namespace {

thread_local std::string last_error;

gf_status status_of(gfree::ErrorKind kind) {
  using gfree::ErrorKind;
  switch (kind) {
    case ErrorKind::Construction: return GF_ERR_CONSTRUCTION;
    case ErrorKind::Disconnected: return GF_ERR_DISCONNECTED;
    case ErrorKind::MissingEdge: return GF_ERR_MISSING_EDGE;
    case ErrorKind::Format: return GF_ERR_FORMAT;
    case ErrorKind::Capacity: return GF_ERR_CAPACITY;
    case ErrorKind::NotATree: return GF_ERR_NOT_A_TREE;
    case ErrorKind::AdjacentEndpoints: return GF_ERR_ADJACENT_ENDPOINTS;
    case ErrorKind::InvalidWitness: return GF_ERR_INVALID_WITNESS;
    case ErrorKind::Domain: return GF_ERR_DOMAIN;
    case ErrorKind::UnsupportedRamsey: return GF_ERR_UNSUPPORTED_RAMSEY;
    case ErrorKind::Usage: return GF_ERR_USAGE;
    case ErrorKind::Io: return GF_ERR_IO;
  }
  return GF_ERR_INTERNAL;
}

gf_status set_error(gf_status s, std::string message) {
  last_error = std::move(message);
  return s;
}

// Runs f, translating exceptions into status codes.
template <typename F>
gf_status guard(F&& f) {
  try {
    f();
    return GF_OK;
  } catch (const gfree::Error& e) {
    return set_error(status_of(e.kind()), std::string(gfree::error_kind_name(e.kind())) + ": " + e.what());
  } catch (const std::bad_alloc&) {
    return set_error(GF_ERR_CAPACITY, "out of memory");
  } catch (const std::exception& e) {
    return set_error(GF_ERR_INTERNAL, e.what());
  }
}

gf_status null_argument(const char* what) {
  return set_error(GF_ERR_NULL_ARGUMENT, std::string("null argument: ") + what);
}

char* copy_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

gf_graph* wrap(gfree::Graph g, std::vector<std::string> names = {}) {
  return new gf_graph{std::move(g), std::move(names)};
}

}  // namespace

extern "C" {

const char* gf_version(void) { return "0.1.0"; }

const char* gf_status_name(gf_status status) {
  switch (status) {
    case GF_OK: return "ok";
    case GF_ERR_CONSTRUCTION: return "construction";
    case GF_ERR_DISCONNECTED: return "disconnected";
    case GF_ERR_MISSING_EDGE: return "missing_edge";
    case GF_ERR_FORMAT: return "format";
    case GF_ERR_CAPACITY: return "capacity";
    case GF_ERR_NOT_A_TREE: return "not_a_tree";
    case GF_ERR_ADJACENT_ENDPOINTS: return "adjacent_endpoints";
    case GF_ERR_INVALID_WITNESS: return "invalid_witness";
    case GF_ERR_DOMAIN: return "domain";
    case GF_ERR_UNSUPPORTED_RAMSEY: return "unsupported_ramsey";
    case GF_ERR_USAGE: return "usage";
    case GF_ERR_IO: return "io";
    case GF_ERR_NULL_ARGUMENT: return "null_argument";
    case GF_ERR_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* gf_last_error(void) { return last_error.c_str(); }

void gf_string_free(char* s) { delete[] s; }

gf_status gf_graph_build(size_t n, const uint32_t* edges, size_t m, gf_graph** out) {
  if (out == nullptr) return null_argument("out");
  if (edges == nullptr && m > 0) return null_argument("edges");
  return guard([&] {
    std::vector<gfree::Edge> list;
    list.reserve(m);
    for (size_t i = 0; i < m; ++i) list.emplace_back(edges[2 * i], edges[2 * i + 1]);
    *out = wrap(gfree::Graph::build(n, list));
  });
}

gf_status gf_graph_from_graph6(const char* record, gf_graph** out) {
  if (record == nullptr) return null_argument("record");
  if (out == nullptr) return null_argument("out");
  return guard([&] { *out = wrap(gfree::parse_graph6(record)); });
}

gf_status gf_graph_from_pattern(const char* id, gf_graph** out) {
  if (id == nullptr) return null_argument("id");
  if (out == nullptr) return null_argument("out");
  return guard([&] {
    auto p = gfree::make_pattern(gfree::PatternId::parse(id));
    *out = wrap(std::move(p.graph), std::move(p.names));
  });
}

gf_status gf_graph_from_family(const char* spec, gf_graph** out) {
  if (spec == nullptr) return null_argument("spec");
  if (out == nullptr) return null_argument("out");
  return guard([&] {
    auto f = gfree::make_family(spec);
    *out = wrap(std::move(f.labeled.graph), std::move(f.labeled.names));
  });
}

gf_status gf_graph_clone(const gf_graph* g, gf_graph** out) {
  if (g == nullptr) return null_argument("g");
  if (out == nullptr) return null_argument("out");
  return guard([&] { *out = new gf_graph(*g); });
}

void gf_graph_free(gf_graph* g) { delete g; }

size_t gf_graph_order(const gf_graph* g) { return g == nullptr ? 0 : g->graph.order(); }
size_t gf_graph_size(const gf_graph* g) { return g == nullptr ? 0 : g->graph.size(); }

int gf_graph_adjacent(const gf_graph* g, uint32_t u, uint32_t v) {
  if (g == nullptr || u >= g->graph.order() || v >= g->graph.order()) return 0;
  return g->graph.adjacent(u, v) ? 1 : 0;
}

gf_status gf_graph_vertex_name(const gf_graph* g, uint32_t v, char** out) {
  if (g == nullptr) return null_argument("g");
  if (out == nullptr) return null_argument("out");
  if (v >= g->graph.order()) return set_error(GF_ERR_DOMAIN, "vertex out of range");
  *out = copy_string(g->names.empty() ? std::to_string(v) : g->names[v]);
  return GF_OK;
}

gf_status gf_graph_to_graph6(const gf_graph* g, char** out) {
  if (g == nullptr) return null_argument("g");
  if (out == nullptr) return null_argument("out");
  return guard([&] { *out = copy_string(gfree::emit_graph6(g->graph)); });
}

gf_status gf_graph_to_dot(const gf_graph* g, char** out) {
  if (g == nullptr) return null_argument("g");
  if (out == nullptr) return null_argument("out");
  return guard([&] {
    gfree::VertexNames names;
    for (gfree::Vertex v = 0; v < g->names.size(); ++v) names.emplace(v, g->names[v]);
    *out = copy_string(gfree::emit_dot(g->graph, names));
  });
}

gf_status gf_graph_stats(const gf_graph* g, gf_stats* out) {
  if (g == nullptr) return null_argument("g");
  if (out == nullptr) return null_argument("out");
  return guard([&] {
    auto st = gfree::stats(g->graph);
    *out = gf_stats{st.min_degree, st.max_degree, st.connected ? 1 : 0, st.bipartite ? 1 : 0};
  });
}

int gf_graph_is_c3c4_free(const gf_graph* g) { return g != nullptr && gfree::is_c3c4_free(g->graph) ? 1 : 0; }

gf_status gf_graph_diameter(const gf_graph* g, size_t* out) {
  if (g == nullptr) return null_argument("g");
  if (out == nullptr) return null_argument("out");
  return guard([&] { *out = gfree::diameter(g->graph); });
}

gf_status gf_graph_girth(const gf_graph* g, size_t* out, int* acyclic) {
  if (g == nullptr) return null_argument("g");
  if (out == nullptr) return null_argument("out");
  if (acyclic == nullptr) return null_argument("acyclic");
  return guard([&] {
    auto girth = gfree::girth(g->graph);
    *acyclic = girth ? 0 : 1;
    *out = girth.value_or(0);
  });
}

gf_status gf_find_induced(const gf_graph* pattern, const gf_graph* host, int* found, uint32_t* map) {
  if (pattern == nullptr) return null_argument("pattern");
  if (host == nullptr) return null_argument("host");
  if (found == nullptr) return null_argument("found");
  return guard([&] {
    auto emb = gfree::find_induced(pattern->graph, host->graph);
    *found = emb ? 1 : 0;
    if (emb && map != nullptr) std::copy(emb->begin(), emb->end(), map);
  });
}

gf_status gf_is_isomorphic(const gf_graph* a, const gf_graph* b, int* out) {
  if (a == nullptr || b == nullptr) return null_argument("graph");
  if (out == nullptr) return null_argument("out");
  return guard([&] { *out = gfree::is_isomorphic(a->graph, b->graph) ? 1 : 0; });
}

gf_status gf_chromatic_number(const gf_graph* g, size_t cap, int structured, int* out) {
  if (g == nullptr) return null_argument("g");
  if (out == nullptr) return null_argument("out");
  return guard([&] {
    *out = structured != 0 ? gfree::chi_structured(g->graph, cap) : gfree::chi_exact(g->graph, cap);
  });
}

gf_status gf_verify_lemma(const char* id, int s_from, int s_to, char** report_json) {
  if (id == nullptr) return null_argument("id");
  if (report_json == nullptr) return null_argument("report_json");
  return guard([&] {
    std::optional<std::pair<int, int>> range;
    if (s_from != 0 || s_to != 0) range = std::pair{s_from, s_to};
    *report_json = copy_string(gfree::verify_lemma(id, range).dump());
  });
}

gf_status gf_check_theorem(const gf_graph* g, const char* which, int assume_hypothesis, char** report_json) {
  if (g == nullptr) return null_argument("g");
  if (which == nullptr) return null_argument("which");
  if (report_json == nullptr) return null_argument("report_json");
  return guard([&] {
    std::string w(which);
    gfree::Report r;
    if (w == "diam") {
      r = gfree::check_diam_theorem(g->graph);
    } else if (w == "maxdeg") {
      r = gfree::check_maxdeg_theorem(g->graph, assume_hypothesis != 0);
    } else {
      gfree::fail(gfree::ErrorKind::Usage, "unknown theorem '" + w + "' (expected diam or maxdeg)");
    }
    *report_json = copy_string(r.dump());
  });
}

gf_status gf_scan_corpus(const char* path, const char* tree_id, unsigned jobs, int lenient, char** report_json) {
  if (path == nullptr) return null_argument("path");
  if (tree_id == nullptr) return null_argument("tree_id");
  if (report_json == nullptr) return null_argument("report_json");
  return guard([&] {
    std::ifstream in(path);
    if (!in) gfree::fail(gfree::ErrorKind::Io, std::string("cannot open ") + path);
    gfree::ScanOptions opts;
    opts.jobs = jobs;
    opts.lenient = lenient != 0;
    *report_json = copy_string(gfree::scan_corpus(in, tree_id, opts).dump());
  });
}

gf_status gf_verify_ramsey(int t, char** report_json) {
  if (report_json == nullptr) return null_argument("report_json");
  return guard([&] { *report_json = copy_string(gfree::verify_ramsey_small(t).dump()); });
}

gf_status gf_check_constants(char** report_json) {
  if (report_json == nullptr) return null_argument("report_json");
  return guard([&] { *report_json = copy_string(gfree::check_constants().dump()); });
}

gf_status gf_corpus_open(const char* path, int lenient, gf_corpus** out) {
  if (path == nullptr) return null_argument("path");
  if (out == nullptr) return null_argument("out");
  return guard([&] {
    auto c = std::make_unique<gf_corpus>(path, lenient != 0);
    if (!c->file) gfree::fail(gfree::ErrorKind::Io, std::string("cannot open ") + path);
    *out = c.release();
  });
}

gf_status gf_corpus_next(gf_corpus* c, gf_graph** out, size_t* index) {
  if (c == nullptr) return null_argument("c");
  if (out == nullptr) return null_argument("out");
  return guard([&] {
    *out = nullptr;
    if (auto rec = c->stream.next()) {
      if (index != nullptr) *index = rec->first;
      *out = wrap(std::move(rec->second));
    }
  });
}

void gf_corpus_close(gf_corpus* c) { delete c; }

}  // extern "C"
