#include "gfree/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "gfree/error.hpp"

namespace gfree {

VertexSet::VertexSet(std::size_t n, std::span<const Vertex> members)
    : VertexSet(n) {
  for (Vertex v : members) {
    if (v >= n) {
      fail(ErrorKind::Domain, "vertex " + std::to_string(v) +
                                  " outside universe of size " +
                                  std::to_string(n));
    }
    insert(v);
  }
}

VertexSet VertexSet::full(std::size_t n) {
  VertexSet s(n);
  for (std::size_t w = 0; w < s.words_.size(); ++w) s.words_[w] = ~std::uint64_t{0};
  if (n % 64 != 0 && !s.words_.empty()) {
    s.words_.back() = (std::uint64_t{1} << (n % 64)) - 1;
  }
  return s;
}

std::size_t VertexSet::count() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(),
                     [](std::uint64_t w) { return w == 0; });
}

std::optional<Vertex> VertexSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    if (words_[w] != 0) {
      return static_cast<Vertex>(w * 64 + std::countr_zero(words_[w]));
    }
  }
  return std::nullopt;
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t o = w < other.words_.size() ? other.words_[w] : 0;
    if ((words_[w] & ~o) != 0) return false;
  }
  return true;
}

VertexSet& VertexSet::operator|=(const VertexSet& o) {
  for (std::size_t w = 0; w < words_.size() && w < o.words_.size(); ++w) words_[w] |= o.words_[w];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& o) {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    words_[w] &= w < o.words_.size() ? o.words_[w] : 0;
  }
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& o) {
  for (std::size_t w = 0; w < words_.size() && w < o.words_.size(); ++w) words_[w] &= ~o.words_[w];
  return *this;
}

Graph Graph::build(std::size_t n, std::span<const Edge> edges) {
  if (n > kMaxVertices) {
    fail(ErrorKind::Construction,
         "graph order " + std::to_string(n) + " exceeds cap " + std::to_string(kMaxVertices));
  }
  Graph g;
  g.n_ = n;
  g.stride_ = words_for(n);
  g.bits_.assign(n * g.stride_, 0);
  g.degrees_.assign(n, 0);
  for (auto [u, v] : edges) {
    if (u >= n || v >= n) {
      fail(ErrorKind::Construction, "edge (" + std::to_string(u) + "," + std::to_string(v) +
                                        ") has an endpoint outside 0.." + std::to_string(n));
    }
    if (u == v) fail(ErrorKind::Construction, "self-loop at vertex " + std::to_string(u));
    if (g.adjacent(u, v)) continue;
    g.bits_[u * g.stride_ + (v >> 6)] |= std::uint64_t{1} << (v & 63);
    g.bits_[v * g.stride_ + (u >> 6)] |= std::uint64_t{1} << (u & 63);
    ++g.degrees_[u];
    ++g.degrees_[v];
    ++g.m_;
  }
  return g;
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
  std::vector<Vertex> out;
  out.reserve(degrees_[v]);
  auto r = row(v);
  for (std::size_t w = 0; w < r.size(); ++w) {
    std::uint64_t bits = r[w];
    while (bits != 0) {
      out.push_back(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
      bits &= bits - 1;
    }
  }
  return out;
}

VertexSet Graph::neighborhood(Vertex v) const {
  VertexSet s(n_);
  auto r = row(v);
  std::copy(r.begin(), r.end(), s.words().begin());
  return s;
}

VertexSet Graph::neighborhood(const VertexSet& s) const {
  VertexSet out(n_);
  auto ow = out.words();
  s.for_each([&](Vertex v) {
    auto r = row(v);
    for (std::size_t w = 0; w < r.size(); ++w) ow[w] |= r[w];
  });
  return out;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(m_);
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.emplace_back(u, v);
    }
  }
  return out;
}

bool is_c3c4_free(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Vertex> seen(n, 0);
  // Stamp with u+1 so the buffer never needs clearing.
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex x : g.neighbors(u)) {
      for (Vertex y : g.neighbors(x)) {
        if (y == u) continue;
        if (g.adjacent(u, y)) return false;  // triangle u x y
        if (seen[y] == u + 1) return false;  // second common neighbor: C4
        seen[y] = u + 1;
      }
    }
  }
  return true;
}

std::vector<int> bfs_distances(const Graph& g, Vertex source) {
  std::vector<int> dist(g.order(), kUnreachable);
  std::vector<Vertex> queue;
  queue.reserve(g.order());
  dist[source] = 0;
  queue.push_back(source);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex x = queue[head];
    for (Vertex y : g.neighbors(x)) {
      if (dist[y] == kUnreachable) {
        dist[y] = dist[x] + 1;
        queue.push_back(y);
      }
    }
  }
  return dist;
}

std::optional<std::size_t> distance(const Graph& g, Vertex u, Vertex v) {
  int d = bfs_distances(g, u)[v];
  if (d == kUnreachable) return std::nullopt;
  return static_cast<std::size_t>(d);
}

std::size_t diameter(const Graph& g) {
  return diameter_path(g).size() - 1;
}

std::vector<Vertex> diameter_path(const Graph& g) {
  if (g.order() == 0) fail(ErrorKind::Disconnected, "empty graph has no diameter");
  int best = -1;
  Vertex bu = 0;
  Vertex bv = 0;
  for (Vertex u = 0; u < g.order(); ++u) {
    auto dist = bfs_distances(g, u);
    for (Vertex v = 0; v < g.order(); ++v) {
      if (dist[v] == kUnreachable) {
        fail(ErrorKind::Disconnected, "graph is disconnected; diameter undefined");
      }
      if (dist[v] > best) {
        best = dist[v];
        bu = u;
        bv = v;
      }
    }
  }
  // Walk back from bv choosing the lowest-id predecessor at each level.
  auto dist = bfs_distances(g, bu);
  std::vector<Vertex> path{bv};
  Vertex cur = bv;
  while (cur != bu) {
    for (Vertex p : g.neighbors(cur)) {
      if (dist[p] == dist[cur] - 1) {
        cur = p;
        break;
      }
    }
    path.push_back(cur);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

std::optional<std::size_t> girth(const Graph& g) {
  const std::size_t n = g.order();
  std::size_t best = SIZE_MAX;
  std::vector<int> dist(n);
  std::vector<Vertex> parent(n);
  std::vector<Vertex> queue;
  queue.reserve(n);
  for (Vertex s = 0; s < n && best > 3; ++s) {
    std::fill(dist.begin(), dist.end(), kUnreachable);
    queue.clear();
    dist[s] = 0;
    parent[s] = s;
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex x = queue[head];
      // Cycles found from deeper levels cannot beat the current best.
      if (2 * static_cast<std::size_t>(dist[x]) + 1 >= best) break;
      for (Vertex y : g.neighbors(x)) {
        if (dist[y] == kUnreachable) {
          dist[y] = dist[x] + 1;
          parent[y] = x;
          queue.push_back(y);
        } else if (parent[x] != y) {
          best = std::min(best, static_cast<std::size_t>(dist[x] + dist[y] + 1));
        }
      }
    }
  }
  if (best == SIZE_MAX) return std::nullopt;
  return best;
}

Graph contract_edge(const Graph& g, Edge e) {
  auto [a, b] = e;
  if (a >= g.order() || b >= g.order() || a == b || !g.adjacent(a, b)) {
    fail(ErrorKind::MissingEdge,
         "(" + std::to_string(a) + "," + std::to_string(b) + ") is not an edge");
  }
  Vertex keep = std::min(a, b);
  Vertex gone = std::max(a, b);
  auto map = [&](Vertex x) -> Vertex {
    if (x == gone) return keep;
    return x > gone ? x - 1 : x;
  };
  std::vector<Edge> out;
  for (auto [u, v] : g.edges()) {
    Vertex mu = map(u);
    Vertex mv = map(v);
    if (mu != mv) out.emplace_back(mu, mv);
  }
  return Graph::build(g.order() - 1, out);
}

std::vector<std::vector<Vertex>> components(const Graph& g) {
  std::vector<std::vector<Vertex>> out;
  std::vector<bool> seen(g.order(), false);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> comp{s};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Vertex y : g.neighbors(comp[head])) {
        if (!seen[y]) {
          seen[y] = true;
          comp.push_back(y);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const Graph& g) {
  if (g.order() == 0) return false;
  auto dist = bfs_distances(g, 0);
  return std::none_of(dist.begin(), dist.end(), [](int d) { return d == kUnreachable; });
}

bool is_bipartite(const Graph& g) {
  std::vector<int> side(g.order(), -1);
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < g.order(); ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    queue.assign(1, s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      Vertex x = queue[head];
      for (Vertex y : g.neighbors(x)) {
        if (side[y] == -1) {
          side[y] = 1 - side[x];
          queue.push_back(y);
        } else if (side[y] == side[x]) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_tree(const Graph& g) {
  return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g);
}

GraphStats stats(const Graph& g) {
  GraphStats s;
  if (g.order() > 0) {
    s.min_degree = SIZE_MAX;
    for (Vertex v = 0; v < g.order(); ++v) {
      s.min_degree = std::min(s.min_degree, g.degree(v));
      s.max_degree = std::max(s.max_degree, g.degree(v));
    }
  }
  s.connected = is_connected(g);
  s.bipartite = is_bipartite(g);
  return s;
}

Graph induced(const Graph& g, const VertexSet& s) {
  return induced(g, s.to_vector());
}

Graph induced(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> sorted(vertices.begin(), vertices.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    if (sorted[i] >= g.order()) {
      fail(ErrorKind::Domain, "vertex " + std::to_string(sorted[i]) + " not in host");
    }
    for (std::size_t j = i + 1; j < sorted.size(); ++j) {
      if (g.adjacent(sorted[i], sorted[j])) {
        edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
      }
    }
  }
  return Graph::build(sorted.size(), edges);
}

VertexSet layer(const Graph& g, Vertex u, std::size_t d) {
  VertexSet s(g.order());
  auto dist = bfs_distances(g, u);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (dist[v] == static_cast<int>(d)) s.insert(v);
  }
  return s;
}

VertexSet layer_at_least(const Graph& g, Vertex u, std::size_t d) {
  VertexSet s(g.order());
  auto dist = bfs_distances(g, u);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (dist[v] != kUnreachable && dist[v] >= static_cast<int>(d)) s.insert(v);
  }
  return s;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) fail(ErrorKind::Domain, "permutation size mismatch");
  std::vector<Edge> edges;
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph::build(g.order(), edges);
}

Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 1; i < n; ++i) e.emplace_back(i - 1, i);
  return Graph::build(n, e);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) fail(ErrorKind::Construction, "cycle needs at least 3 vertices");
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return Graph::build(n, e);
}

Graph complete_graph(std::size_t n) {
  std::vector<Edge> e;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) e.emplace_back(i, j);
  return Graph::build(n, e);
}

}  // namespace gfree
