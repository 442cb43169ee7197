#pragma once

// Brute-force reference implementations used to cross-check the library.
// Each one deliberately takes a different route from the code under test.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "gfree/graph.hpp"

namespace oracle {

using gfree::Edge;
using gfree::Graph;
using gfree::Vertex;

inline Graph random_graph(std::size_t n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> e;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) {
      if (coin(rng)) e.emplace_back(u, v);
    }
  }
  return Graph::build(n, e);
}

inline Graph random_connected_graph(std::size_t n, double p, std::mt19937_64& rng) {
  for (;;) {
    Graph g = random_graph(n, p, rng);
    if (n > 0 && gfree::is_connected(g)) return g;
  }
}

inline std::vector<Vertex> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

/// Floyd-Warshall; -1 for unreachable.
inline std::vector<std::vector<int>> all_pairs(const Graph& g) {
  const std::size_t n = g.order();
  const int inf = 1 << 28;
  std::vector<std::vector<int>> d(n, std::vector<int>(n, inf));
  for (Vertex u = 0; u < n; ++u) {
    d[u][u] = 0;
    for (Vertex v = 0; v < n; ++v) {
      if (g.adjacent(u, v)) d[u][v] = 1;
    }
  }
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) d[i][j] = std::min(d[i][j], d[i][k] + d[k][j]);
    }
  }
  for (auto& row : d) {
    for (int& x : row) {
      if (x >= inf) x = -1;
    }
  }
  return d;
}

/// Explicit search for 3- and 4-cycles over vertex tuples.
inline bool has_c3_or_c4(const Graph& g) {
  const std::size_t n = g.order();
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) {
      if (b == a || !g.adjacent(a, b)) continue;
      for (Vertex c = 0; c < n; ++c) {
        if (c == a || c == b || !g.adjacent(b, c)) continue;
        if (g.adjacent(c, a)) return true;
        for (Vertex d = 0; d < n; ++d) {
          if (d == a || d == b || d == c) continue;
          if (g.adjacent(c, d) && g.adjacent(d, a)) return true;
        }
      }
    }
  }
  return false;
}

/// Shortest cycle through each edge: remove it, BFS between its ends.
inline std::optional<std::size_t> girth(const Graph& g) {
  std::optional<std::size_t> best;
  auto edges = g.edges();
  for (std::size_t skip = 0; skip < edges.size(); ++skip) {
    std::vector<Edge> rest;
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (i != skip) rest.push_back(edges[i]);
    }
    Graph h = Graph::build(g.order(), rest);
    auto d = all_pairs(h)[edges[skip].first][edges[skip].second];
    if (d >= 0 && (!best || static_cast<std::size_t>(d + 1) < *best)) best = d + 1;
  }
  return best;
}

/// Tries every 2-coloring (n <= 20).
inline bool bipartite(const Graph& g) {
  const std::size_t n = g.order();
  for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << n); ++mask) {
    bool ok = true;
    for (auto [u, v] : g.edges()) ok = ok && (((mask >> u) ^ (mask >> v)) & 1U);
    if (ok) return true;
  }
  return n == 0;
}

/// Every vertex permutation (n <= 10).
inline bool isomorphic(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<Vertex> perm(a.order());
  std::iota(perm.begin(), perm.end(), 0);
  auto edges = a.edges();
  do {
    bool ok = true;
    for (auto [u, v] : edges) {
      if (!b.adjacent(perm[u], perm[v])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

/// Smallest k admitting a proper k-coloring, by trying all k^n assignments.
inline int chromatic(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return 0;
  auto edges = g.edges();
  for (int k = 1;; ++k) {
    std::vector<int> c(n, 0);
    for (;;) {
      bool ok = true;
      for (auto [u, v] : edges) ok = ok && c[u] != c[v];
      if (ok) return k;
      std::size_t i = 0;
      while (i < n && ++c[i] == k) c[i++] = 0;
      if (i == n) break;
    }
  }
}

/// 3-core by peeling vertices in an arbitrary order given by `rng`.
inline std::set<Vertex> random_peel_core(const Graph& g, std::mt19937_64& rng) {
  std::set<Vertex> alive;
  for (Vertex v = 0; v < g.order(); ++v) alive.insert(v);
  for (;;) {
    std::vector<Vertex> low;
    for (Vertex v : alive) {
      std::size_t d = 0;
      for (Vertex y : alive) d += g.adjacent(v, y) ? 1 : 0;
      if (d <= 2) low.push_back(v);
    }
    if (low.empty()) return alive;
    std::uniform_int_distribution<std::size_t> pick(0, low.size() - 1);
    alive.erase(low[pick(rng)]);
  }
}

/// Second vertices of induced v-w paths on k vertices, by trying every
/// ordered tuple of k-2 distinct interior vertices.
inline std::set<Vertex> mk(const Graph& g, Vertex v, Vertex w, int k) {
  std::set<Vertex> out;
  std::vector<Vertex> path{v};
  std::function<void()> rec = [&]() {
    if (static_cast<int>(path.size()) == k - 1) {
      path.push_back(w);
      bool induced = true;
      for (std::size_t i = 0; i < path.size() && induced; ++i) {
        for (std::size_t j = i + 1; j < path.size() && induced; ++j) {
          induced = path[i] != path[j] && g.adjacent(path[i], path[j]) == (j == i + 1);
        }
      }
      if (induced) out.insert(path[1]);
      path.pop_back();
      return;
    }
    for (Vertex x = 0; x < g.order(); ++x) {
      if (x == w || std::find(path.begin(), path.end(), x) != path.end()) continue;
      path.push_back(x);
      rec();
      path.pop_back();
    }
  };
  rec();
  return out;
}

/// L(U) by trying every pair of middle vertices.
inline std::set<Vertex> l_set(const Graph& g, Vertex w, const std::set<Vertex>& u) {
  auto d = all_pairs(g);
  std::set<Vertex> out;
  const std::size_t n = g.order();
  for (Vertex v = 0; v < n; ++v) {
    if (d[w][v] != 2 && d[w][v] != 3) continue;
    for (Vertex b = 0; b < n; ++b) {
      for (Vertex c = 0; c < n; ++c) {
        std::set<Vertex> q{v, b, c, w};
        if (q.size() != 4) continue;
        bool avoids = std::none_of(q.begin(), q.end(), [&](Vertex x) { return u.count(x) > 0; });
        if (avoids && g.adjacent(v, b) && g.adjacent(b, c) && g.adjacent(c, w)) out.insert(v);
      }
    }
  }
  return out;
}

/// A tree is a caterpillar iff some path between two vertices leaves no edge
/// outside it; tries every pair of endpoints.
inline bool caterpillar(const Graph& t) {
  const std::size_t n = t.order();
  if (n <= 2) return true;
  auto d = all_pairs(t);
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = 0; b < n; ++b) {
      std::vector<bool> on(n, false);
      for (Vertex x = 0; x < n; ++x) on[x] = d[a][x] + d[x][b] == d[a][b];
      bool ok = true;
      for (auto [u, v] : t.edges()) ok = ok && (on[u] || on[v]);
      if (ok) return true;
    }
  }
  return false;
}

}  // namespace oracle
