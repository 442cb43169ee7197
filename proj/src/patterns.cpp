#include "gfree/patterns.hpp"

#include <algorithm>
#include <charconv>
#include <unordered_map>

#include "gfree/embed.hpp"
#include "gfree/error.hpp"

namespace gfree {

namespace {

class NamedBuilder {
 public:
  Vertex add(std::string name) {
    auto id = static_cast<Vertex>(names_.size());
    index_.emplace(name, id);
    names_.push_back(std::move(name));
    return id;
  }
  void edge(std::string_view a, std::string_view b) {
    edges_.emplace_back(index_.at(std::string(a)), index_.at(std::string(b)));
  }
  /// Appends a path hanging off `anchor`: anchor - names[0] - names[1] ...
  void hang(std::string_view anchor, std::initializer_list<std::string> chain) {
    std::string prev(anchor);
    for (const auto& n : chain) {
      add(n);
      edge(prev, n);
      prev = n;
    }
  }
  LabeledGraph finish() && {
    return {Graph::build(names_.size(), edges_), std::move(names_)};
  }

 private:
  std::vector<std::string> names_;
  std::unordered_map<std::string, Vertex> index_;
  std::vector<Edge> edges_;
};

std::string u(int i) { return "u_" + std::to_string(i); }

NamedBuilder spine(int n) {
  NamedBuilder b;
  for (int i = 1; i <= n; ++i) {
    b.add(u(i));
    if (i > 1) b.edge(u(i - 1), u(i));
  }
  return b;
}

// T_n: path u_1..u_n plus u_3 - v_3 - v'_3.
NamedBuilder t_base(int n) {
  NamedBuilder b = spine(n);
  b.hang(u(3), {"v_3", "v'_3"});
  return b;
}

[[noreturn]] void range_error(const std::string& what) {
  fail(ErrorKind::Construction, what);
}

LabeledGraph anonymous(Graph g) {
  std::vector<std::string> names;
  for (Vertex v = 0; v < g.order(); ++v) names.push_back(std::to_string(v));
  return {std::move(g), std::move(names)};
}

int parse_int(std::string_view s, std::string_view whole) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || ptr != s.data() + s.size() || s.empty()) {
    fail(ErrorKind::Usage, "bad pattern id '" + std::string(whole) + "'");
  }
  return value;
}

}  // namespace

Vertex LabeledGraph::at(std::string_view name) const {
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) fail(ErrorKind::Domain, "no vertex named '" + std::string(name) + "'");
  return static_cast<Vertex>(it - names.begin());
}

VertexSet LabeledGraph::set(std::initializer_list<std::string_view> list) const {
  VertexSet s(graph.order());
  for (auto n : list) s.insert(at(n));
  return s;
}

VertexSet LabeledGraph::set(const std::vector<std::string>& list) const {
  VertexSet s(graph.order());
  for (const auto& n : list) s.insert(at(n));
  return s;
}

VertexNames LabeledGraph::name_map() const {
  VertexNames m;
  for (Vertex v = 0; v < names.size(); ++v) m.emplace(v, names[v]);
  return m;
}

PatternId PatternId::parse(std::string_view text) {
  auto starts = [&](std::string_view p) { return text.substr(0, p.size()) == p; };
  if (text == "petersen") return of(PatternKind::Petersen);
  if (text == "heawood") return of(PatternKind::Heawood);
  if (text == "contracted_heawood") return of(PatternKind::ContractedHeawood);
  if (text == "S8_1") return of(PatternKind::S8_1);
  if (text == "S8_2") return of(PatternKind::S8_2);
  if (text == "T8_1") return of(PatternKind::T8_1);
  if (text == "T8_2") return of(PatternKind::T8_2);
  if (starts("T8star:")) {
    auto rest = text.substr(7);
    auto comma = rest.find(',');
    if (comma == std::string_view::npos) fail(ErrorKind::Usage, "bad pattern id '" + std::string(text) + "'");
    return t8star(parse_int(rest.substr(0, comma), text), parse_int(rest.substr(comma + 1), text));
  }
  if (starts("Tstar")) return tstar(parse_int(text.substr(5), text));
  if (starts("S")) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) fail(ErrorKind::Usage, "bad pattern id '" + std::string(text) + "'");
    int n = parse_int(text.substr(1, colon - 1), text);
    std::vector<int> flags;
    for (char c : text.substr(colon + 1)) {
      if (c != '0' && c != '1') fail(ErrorKind::Usage, "bad pattern id '" + std::string(text) + "'");
      flags.push_back(c - '0');
    }
    return s(n, std::move(flags));
  }
  if (starts("T")) return t(parse_int(text.substr(1), text));
  if (starts("P")) return path(parse_int(text.substr(1), text));
  if (starts("C")) return cycle(parse_int(text.substr(1), text));
  fail(ErrorKind::Usage, "unknown pattern id '" + std::string(text) + "'");
}

std::string PatternId::to_string() const {
  switch (kind) {
    case PatternKind::Path: return "P" + std::to_string(n);
    case PatternKind::Cycle: return "C" + std::to_string(n);
    case PatternKind::T: return "T" + std::to_string(n);
    case PatternKind::TStar: return "Tstar" + std::to_string(n);
    case PatternKind::S: {
      std::string out = "S" + std::to_string(n) + ":";
      for (int f : flags) out.push_back(static_cast<char>('0' + f));
      return out;
    }
    case PatternKind::S8_1: return "S8_1";
    case PatternKind::S8_2: return "S8_2";
    case PatternKind::T8_1: return "T8_1";
    case PatternKind::T8_2: return "T8_2";
    case PatternKind::T8Star: return "T8star:" + std::to_string(p1) + "," + std::to_string(p2);
    case PatternKind::Petersen: return "petersen";
    case PatternKind::Heawood: return "heawood";
    case PatternKind::ContractedHeawood: return "contracted_heawood";
  }
  return "?";
}

LabeledGraph make_pattern(const PatternId& id) {
  switch (id.kind) {
    case PatternKind::Path: {
      if (id.n < 1) range_error("P<n> needs n >= 1");
      return std::move(spine(id.n)).finish();
    }
    case PatternKind::Cycle: {
      if (id.n < 3) range_error("C<n> needs n >= 3");
      NamedBuilder b = spine(id.n);
      b.edge(u(id.n), u(1));
      return std::move(b).finish();
    }
    case PatternKind::T: {
      if (id.n < 4) range_error("T<n> needs n >= 4");
      return std::move(t_base(id.n)).finish();
    }
    case PatternKind::TStar: {
      if (id.n < 6) range_error("Tstar<n> needs n >= 6");
      NamedBuilder b = t_base(id.n);
      std::string k = std::to_string(id.n - 2);
      b.hang(u(id.n - 2), {"w_" + k, "w'_" + k});
      return std::move(b).finish();
    }
    case PatternKind::S: {
      if (id.n < 5) range_error("S<n> needs n >= 5");
      if (static_cast<int>(id.flags.size()) != id.n - 4) {
        range_error("S" + std::to_string(id.n) + " needs " + std::to_string(id.n - 4) + " flags p_4..p_" +
                    std::to_string(id.n - 1));
      }
      NamedBuilder b = t_base(id.n);
      for (int i = 4; i <= id.n - 1; ++i) {
        if (id.flags[i - 4] != 0) b.hang(u(i), {"w_" + std::to_string(i)});
      }
      return std::move(b).finish();
    }
    case PatternKind::S8_1: {
      NamedBuilder b = t_base(8);
      b.hang(u(4), {"w_4"});
      b.hang(u(5), {"w_5"});
      b.hang(u(6), {"w_6", "w'_6"});
      return std::move(b).finish();
    }
    case PatternKind::S8_2: {
      NamedBuilder b = spine(8);
      b.hang(u(4), {"w_4"});
      b.hang(u(5), {"w_5"});
      return std::move(b).finish();
    }
    case PatternKind::T8_1: {
      NamedBuilder b = t_base(8);
      b.hang(u(5), {"w_5"});
      b.hang(u(6), {"w_6"});
      return std::move(b).finish();
    }
    case PatternKind::T8_2: {
      NamedBuilder b = t_base(8);
      b.hang(u(4), {"w_4"});
      return std::move(b).finish();
    }
    case PatternKind::T8Star: {
      if (id.p1 < 1 || id.p2 < 1) range_error("T8star needs p1, p2 >= 1");
      // Center v with p1+2 neighbors a_i; a_1..a_{p1+1} carry pendant x_i,
      // a_1 continues a_1 - b_1 - w, and w carries p2 branches c_j - y_j.
      NamedBuilder b;
      b.add("v");
      for (int i = 1; i <= id.p1 + 2; ++i) b.hang("v", {"a_" + std::to_string(i)});
      for (int i = 1; i <= id.p1 + 1; ++i) b.hang("a_" + std::to_string(i), {"x_" + std::to_string(i)});
      b.hang("a_1", {"b_1", "w"});
      for (int j = 1; j <= id.p2; ++j) b.hang("w", {"c_" + std::to_string(j), "y_" + std::to_string(j)});
      return std::move(b).finish();
    }
    case PatternKind::Petersen:
    case PatternKind::Heawood:
    case PatternKind::ContractedHeawood:
      return anonymous(named_graph(id.kind));
  }
  range_error("unknown pattern kind");
}

Graph petersen_graph() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 5; ++i) {
    e.emplace_back(i, (i + 1) % 5);
    e.emplace_back(5 + i, 5 + (i + 2) % 5);
    e.emplace_back(i, 5 + i);
  }
  return Graph::build(10, e);
}

Graph heawood_graph() {
  std::vector<Edge> e;
  for (Vertex i = 0; i < 14; ++i) {
    e.emplace_back(i, (i + 1) % 14);
    if (i % 2 == 0) e.emplace_back(i, (i + 5) % 14);
  }
  return Graph::build(14, e);
}

Graph contracted_heawood_graph() { return contract_edge(heawood_graph(), {0, 1}); }

Graph named_graph(PatternKind kind) {
  switch (kind) {
    case PatternKind::Petersen: return petersen_graph();
    case PatternKind::Heawood: return heawood_graph();
    case PatternKind::ContractedHeawood: return contracted_heawood_graph();
    default: fail(ErrorKind::Usage, "not a named graph");
  }
}

bool is_caterpillar(const Graph& t) {
  if (!is_tree(t)) fail(ErrorKind::NotATree, "is_caterpillar expects a tree");
  if (t.order() <= 2) return true;
  // Removing every leaf must leave a path (possibly a single vertex).
  std::vector<Vertex> inner;
  for (Vertex v = 0; v < t.order(); ++v) {
    if (t.degree(v) > 1) inner.push_back(v);
  }
  Graph core = induced(t, inner);
  for (Vertex v = 0; v < core.order(); ++v) {
    if (core.degree(v) > 2) return false;
  }
  return true;
}

bool is_subtree(const Graph& t, const Graph& host) {
  if (!is_tree(t) || !is_tree(host)) fail(ErrorKind::NotATree, "is_subtree expects two trees");
  if (t.order() > host.order()) return false;
  return find_induced(t, host).has_value();
}

}  // namespace gfree
