#pragma once

// Induced-subgraph containment (H < G), witness search and small-graph
// isomorphism.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "gfree/graph.hpp"

namespace gfree {

/// map[a] is the host image of pattern vertex a.
using Embedding = std::vector<Vertex>;

inline constexpr std::size_t kPatternCap = 16;
inline constexpr std::size_t kIsomorphismCap = 64;
inline constexpr std::size_t kOraclePatternCap = 8;
inline constexpr std::size_t kOracleHostCap = 40;

/// First induced copy of `pattern` in `host`, or nullopt. Deterministic:
/// pattern vertices are matched in a fixed connected order and host
/// candidates are scanned in ascending id. Throws CapacityError when the
/// pattern has more than kPatternCap vertices.
std::optional<Embedding> find_induced(const Graph& pattern, const Graph& host);

/// True iff host contains no induced copy of pattern.
bool is_free(const Graph& host, const Graph& pattern);

/// Calls `visit` for every induced embedding (as labeled maps, so automorphic
/// copies are reported separately) until it returns false. Returns the number
/// of embeddings visited.
std::size_t for_each_induced(const Graph& pattern, const Graph& host,
                             const std::function<bool(const Embedding&)>& visit);

/// Exact isomorphism test for graphs up to kIsomorphismCap vertices.
bool is_isomorphic(const Graph& g, const Graph& h);
std::optional<Embedding> find_isomorphism(const Graph& g, const Graph& h);

/// Unpruned exhaustive assignment in pattern-id order; only for cross-checking
/// find_induced. Caps: pattern <= 8, host <= 40 vertices.
std::optional<Embedding> oracle_find_induced(const Graph& pattern, const Graph& host);

/// Injective, and (a,b) in E(pattern) iff (map[a], map[b]) in E(host).
bool verify_embedding(const Graph& pattern, const Graph& host, const Embedding& map);

}  // namespace gfree
