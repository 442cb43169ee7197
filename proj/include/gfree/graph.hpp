#pragma once

// Immutable simple undirected graphs over dense vertex ids, stored as one
// packed bitset row per vertex.

#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace gfree {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;
using VertexNames = std::map<Vertex, std::string>;

inline constexpr std::size_t kMaxVertices = 65535;

inline std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

/// Bitset over the vertex ids 0..n-1 of some host graph.
class VertexSet {
 public:
  VertexSet() = default;
  explicit VertexSet(std::size_t n) : n_(n), words_(words_for(n), 0) {}
  VertexSet(std::size_t n, std::span<const Vertex> members);
  static VertexSet full(std::size_t n);

  std::size_t universe() const { return n_; }
  bool contains(Vertex v) const {
    return v < n_ && ((words_[v >> 6] >> (v & 63)) & 1U);
  }
  void insert(Vertex v) { words_[v >> 6] |= std::uint64_t{1} << (v & 63); }
  void erase(Vertex v) { words_[v >> 6] &= ~(std::uint64_t{1} << (v & 63)); }
  std::size_t count() const;
  bool empty() const;
  std::optional<Vertex> first() const;

  std::vector<Vertex> to_vector() const;
  std::span<const std::uint64_t> words() const { return words_; }
  std::span<std::uint64_t> words() { return words_; }

  bool is_subset_of(const VertexSet& other) const;

  VertexSet& operator|=(const VertexSet& o);
  VertexSet& operator&=(const VertexSet& o);
  VertexSet& operator-=(const VertexSet& o);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      std::uint64_t bits = words_[w];
      while (bits != 0) {
        f(static_cast<Vertex>(w * 64 + std::countr_zero(bits)));
        bits &= bits - 1;
      }
    }
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> words_;
};

class Graph {
 public:
  Graph() = default;

  /// Throws ConstructionError on loops, out-of-range endpoints, or n over the
  /// vertex cap. Duplicate and reversed pairs collapse to one edge.
  static Graph build(std::size_t n, std::span<const Edge> edges);
  static Graph build(std::size_t n, std::initializer_list<Edge> edges) {
    return build(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const { return n_; }
  std::size_t size() const { return m_; }

  bool adjacent(Vertex u, Vertex v) const {
    return (bits_[u * stride_ + (v >> 6)] >> (v & 63)) & 1U;
  }
  std::span<const std::uint64_t> row(Vertex v) const {
    return {bits_.data() + v * stride_, stride_};
  }
  std::size_t stride() const { return stride_; }
  std::size_t degree(Vertex v) const { return degrees_[v]; }
  std::vector<Vertex> neighbors(Vertex v) const;
  VertexSet neighborhood(Vertex v) const;
  /// N(U): union of neighborhoods.
  VertexSet neighborhood(const VertexSet& s) const;

  /// Edges (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.n_ == b.n_ && a.bits_ == b.bits_;
  }

 private:
  std::size_t n_ = 0;
  std::size_t m_ = 0;
  std::size_t stride_ = 0;
  std::vector<std::uint64_t> bits_;
  std::vector<std::uint32_t> degrees_;
};

struct GraphStats {
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  bool connected = false;
  bool bipartite = true;

  friend bool operator==(const GraphStats&, const GraphStats&) = default;
};

inline constexpr int kUnreachable = -1;

/// No triangle and no 4-cycle: every N(u) independent and every two distinct
/// vertices share at most one neighbor.
bool is_c3c4_free(const Graph& g);

std::vector<int> bfs_distances(const Graph& g, Vertex source);
std::optional<std::size_t> distance(const Graph& g, Vertex u, Vertex v);
/// Throws DisconnectedError when g is disconnected. Empty graph has no
/// diameter and is treated as disconnected.
std::size_t diameter(const Graph& g);
/// A shortest path u..v with dist(u, v) = diam(g); u is the lowest id
/// achieving the maximum eccentricity, v the lowest id at that distance.
std::vector<Vertex> diameter_path(const Graph& g);
/// Length of a shortest cycle, nullopt for forests.
std::optional<std::size_t> girth(const Graph& g);

/// Merges the endpoints of e into the smaller id; vertices above the larger id
/// shift down by one. Throws MissingEdgeError if e is not an edge.
Graph contract_edge(const Graph& g, Edge e);

GraphStats stats(const Graph& g);
bool is_connected(const Graph& g);
bool is_bipartite(const Graph& g);
bool is_tree(const Graph& g);
std::vector<std::vector<Vertex>> components(const Graph& g);

/// G[S] relabeled 0..|S|-1 in ascending original id.
Graph induced(const Graph& g, const VertexSet& s);
Graph induced(const Graph& g, std::span<const Vertex> vertices);

/// Vertices at exactly distance d from u (N_d(u)).
VertexSet layer(const Graph& g, Vertex u, std::size_t d);
/// Vertices at distance >= d from u within u's component.
VertexSet layer_at_least(const Graph& g, Vertex u, std::size_t d);

Graph relabel(const Graph& g, std::span<const Vertex> perm);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);

}  // namespace gfree
