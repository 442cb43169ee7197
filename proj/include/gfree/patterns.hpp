#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "gfree/graph.hpp"

namespace gfree {

/// A graph whose vertices carry conventional names
/// (e.g. "u_3", "v'_3", "u^(2)_6"), so witness sets can be written by name.
struct LabeledGraph {
  Graph graph;
  std::vector<std::string> names;

  /// Throws DomainError for an unknown name.
  Vertex at(std::string_view name) const;
  VertexSet set(std::initializer_list<std::string_view> names) const;
  VertexSet set(const std::vector<std::string>& names) const;
  VertexNames name_map() const;
};

enum class PatternKind : std::uint8_t {
  Path,
  Cycle,
  T,
  TStar,
  S,
  S8_1,
  S8_2,
  T8_1,
  T8_2,
  T8Star,
  Petersen,
  Heawood,
  ContractedHeawood,
};

struct PatternId {
  PatternKind kind = PatternKind::Path;
  int n = 0;               // Path/Cycle/T/TStar/S order parameter
  std::vector<int> flags;  // S: p_4..p_{n-1}
  int p1 = 0;              // T8Star
  int p2 = 0;

  static PatternId path(int n) { return {PatternKind::Path, n, {}, 0, 0}; }
  static PatternId cycle(int n) { return {PatternKind::Cycle, n, {}, 0, 0}; }
  static PatternId t(int n) { return {PatternKind::T, n, {}, 0, 0}; }
  static PatternId tstar(int n) { return {PatternKind::TStar, n, {}, 0, 0}; }
  static PatternId s(int n, std::vector<int> flags) { return {PatternKind::S, n, std::move(flags), 0, 0}; }
  static PatternId t8star(int p1, int p2) { return {PatternKind::T8Star, 0, {}, p1, p2}; }
  static PatternId of(PatternKind k) { return {k, 0, {}, 0, 0}; }

  /// Parses the CLI grammar: P<n>, C<n>, T<n>, Tstar<n>, S<n>:<bits>, S8_1,
  /// S8_2, T8_1, T8_2, T8star:<p1>,<p2>, petersen, heawood,
  /// contracted_heawood. Unknown ids throw UsageError.
  static PatternId parse(std::string_view text);
  std::string to_string() const;

  friend bool operator==(const PatternId&, const PatternId&) = default;
};

/// Builds the pattern with its standard labeling. Throws ConstructionError when
/// parameters are out of range (T: n>=4, TStar: n>=6, S: n>=5 with n-4 flags,
/// T8Star: p1,p2>=1, Path: n>=1, Cycle: n>=3).
LabeledGraph make_pattern(const PatternId& id);
inline Graph make(const PatternId& id) { return make_pattern(id).graph; }

/// Petersen as GP(5,2): outer u_0..u_4 = 0..4, inner v_i = 5+i.
Graph petersen_graph();
/// Incidence graph of the Fano plane in its LCF [5,-5]^7 labeling: Hamiltonian
/// cycle 0..13, chords i ~ i+5 for even i.
Graph heawood_graph();
/// Heawood with edge (0,1) contracted.
Graph contracted_heawood_graph();
Graph named_graph(PatternKind kind);

/// Throws NotATreeError for non-trees.
bool is_caterpillar(const Graph& t);
/// Tree-in-tree subgraph test; for trees it coincides with induced
/// containment, so it runs on the embedding engine.
bool is_subtree(const Graph& t, const Graph& host);

}  // namespace gfree
