#include "gfree/chromatic.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <set>
#include <string>

#include "gfree/error.hpp"

namespace gfree {

namespace {

class Colorer {
 public:
  explicit Colorer(const Graph& g) : n_(g.order()), adj_(g.order(), 0) {
    for (auto [u, v] : g.edges()) {
      adj_[u] |= std::uint64_t{1} << v;
      adj_[v] |= std::uint64_t{1} << u;
    }
  }

  int solve() {
    if (n_ == 0) return 0;
    lower_ = greedy_clique();
    color_.assign(n_, -1);
    best_ = greedy_dsatur();
    if (best_ > lower_) {
      color_.assign(n_, -1);
      search(0, 0);
    }
    return best_;
  }

 private:
  int greedy_clique() const {
    int best = 1;
    for (std::size_t v = 0; v < n_; ++v) {
      std::uint64_t cand = adj_[v];
      int size = 1;
      while (cand != 0) {
        // Keep the candidate with the most neighbors among the rest.
        int pick = -1;
        int pick_deg = -1;
        for (std::uint64_t rest = cand; rest != 0; rest &= rest - 1) {
          int x = std::countr_zero(rest);
          int d = std::popcount(adj_[x] & cand);
          if (d > pick_deg) {
            pick = x;
            pick_deg = d;
          }
        }
        ++size;
        cand &= adj_[pick];
      }
      best = std::max(best, size);
    }
    return best;
  }

  std::size_t pick_vertex() const {
    std::size_t best = n_;
    int best_sat = -1;
    int best_deg = -1;
    for (std::size_t v = 0; v < n_; ++v) {
      if (color_[v] >= 0) continue;
      int sat = std::popcount(forbidden(v));
      int deg = 0;
      for (std::uint64_t rest = adj_[v]; rest != 0; rest &= rest - 1) {
        deg += color_[std::countr_zero(rest)] < 0 ? 1 : 0;
      }
      if (sat > best_sat || (sat == best_sat && deg > best_deg)) {
        best = v;
        best_sat = sat;
        best_deg = deg;
      }
    }
    return best;
  }

  std::uint64_t forbidden(std::size_t v) const {
    std::uint64_t mask = 0;
    for (std::uint64_t rest = adj_[v]; rest != 0; rest &= rest - 1) {
      int c = color_[std::countr_zero(rest)];
      if (c >= 0) mask |= std::uint64_t{1} << c;
    }
    return mask;
  }

  int greedy_dsatur() {
    int used = 0;
    for (std::size_t k = 0; k < n_; ++k) {
      std::size_t v = pick_vertex();
      int c = std::countr_one(forbidden(v));
      color_[v] = c;
      used = std::max(used, c + 1);
    }
    return used;
  }

  void search(std::size_t colored, int used) {
    if (used >= best_) return;
    if (colored == n_) {
      best_ = used;
      return;
    }
    std::size_t v = pick_vertex();
    std::uint64_t blocked = forbidden(v);
    for (int c = 0; c <= used; ++c) {
      if ((blocked >> c) & 1U) continue;
      if (c == used && used + 1 >= best_) break;  // a new color cannot improve
      color_[v] = c;
      search(colored + 1, std::max(used, c + 1));
      color_[v] = -1;
      if (best_ == lower_) return;
    }
  }

  std::size_t n_;
  std::vector<std::uint64_t> adj_;
  std::vector<int> color_;
  int lower_ = 1;
  int best_ = 0;
};

}  // namespace

PeelDecomposition peel(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> degree(n);
  for (Vertex v = 0; v < n; ++v) degree[v] = g.degree(v);
  PeelDecomposition out;
  out.core_vertices = VertexSet::full(n);
  std::set<Vertex> low;
  for (Vertex v = 0; v < n; ++v) {
    if (degree[v] <= 2) low.insert(v);
  }
  while (!low.empty()) {
    Vertex v = *low.begin();
    low.erase(low.begin());
    out.core_vertices.erase(v);
    out.order.push_back(v);
    for (Vertex y : g.neighbors(v)) {
      if (out.core_vertices.contains(y) && --degree[y] <= 2) low.insert(y);
    }
  }
  Graph core = induced(g, out.core_vertices);
  for (const auto& comp : components(core)) out.core_components.push_back(induced(core, comp));
  return out;
}

int chi_exact(const Graph& g, std::size_t cap) {
  cap = std::min(cap, kChiHardCap);
  if (g.order() > cap) {
    fail(ErrorKind::Capacity,
         "chi_exact: graph has " + std::to_string(g.order()) + " vertices; cap is " + std::to_string(cap));
  }
  return Colorer(g).solve();
}

int chi_structured(const Graph& g, std::size_t cap) {
  if (g.order() == 0) return 0;
  if (g.size() == 0) return 1;
  if (is_bipartite(g)) return 2;
  int chi = 3;
  for (const Graph& comp : peel(g).core_components) {
    if (comp.order() > std::min(cap, kChiHardCap)) {
      fail(ErrorKind::Capacity, "chi_structured: core component has " + std::to_string(comp.order()) +
                                    " vertices; cap is " + std::to_string(cap));
    }
    chi = std::max(chi, chi_exact(comp, cap));
  }
  return chi;
}

}  // namespace gfree
