#pragma once

#include <cstddef>
#include <vector>

#include "gfree/graph.hpp"

namespace gfree {

inline constexpr std::size_t kDefaultChiCap = 24;
inline constexpr std::size_t kChiHardCap = 64;

struct PeelDecomposition {
  /// Removed vertices; each had degree <= 2 when removed.
  std::vector<Vertex> order;
  /// The 3-core, as original vertex ids.
  VertexSet core_vertices;
  /// Each component of the 3-core, relabeled ascending.
  std::vector<Graph> core_components;
};

/// Repeatedly removes the lowest-id vertex of current degree <= 2.
PeelDecomposition peel(const Graph& g);

/// Exact chromatic number by DSATUR branch and bound with a greedy clique
/// lower bound. Throws CapacityError when g has more than cap vertices (cap
/// itself is limited to kChiHardCap).
int chi_exact(const Graph& g, std::size_t cap = kDefaultChiCap);

/// 0 for the empty graph, 1 for edgeless, 2 for bipartite with an edge,
/// otherwise max(3, chi of each 3-core component). Throws CapacityError
/// naming the size of the first core component above cap.
int chi_structured(const Graph& g, std::size_t cap = kDefaultChiCap);

}  // namespace gfree
