#pragma once

// Induced v-w paths, M_k sets, L(U) and the Y/Z closures around a root w,
// with empirical checks of the properties built on them. Also the small Ramsey
// table and the geodesic properties of a diameter path.

#include <string>
#include <vector>

#include "gfree/graph.hpp"
#include "gfree/report.hpp"

namespace gfree {

using Path = std::vector<Vertex>;

/// Every induced v-w path with exactly k vertices, in lexicographic order.
/// Throws AdjacentEndpointsError if vw is an edge, DomainError if v == w or
/// k < 3.
std::vector<Path> vw_paths(const Graph& g, Vertex v, Vertex w, int k);

/// M_k^w(v): second vertices of the (v,w;k)-paths.
VertexSet compute_Mk(const Graph& g, Vertex v, Vertex w, int k);

/// True iff p is an induced path of g on distinct vertices.
bool is_induced_path(const Graph& g, const Path& p);

struct ClauseOutcome {
  std::string clause;  // "i" .. "v"
  bool applicable = false;
  bool holds = true;
};

/// Evaluates clauses (i)-(v) for two (v,w;k)-paths, k in {4,5}, with
/// distinct second vertices. Throws InvalidWitnessError otherwise.
std::vector<ClauseOutcome> path_pair_clauses(const Graph& g, const Path& q1, const Path& q2);

/// Report wrapper over path_pair_clauses. Vacuous when g has a C3 or C4.
Report check_path_pair(const Graph& g, const Path& q1, const Path& q2, int k);

/// L(U): v in N_2(w) u N_3(w) joined to w by a 4-vertex path (not
/// necessarily induced) avoiding U entirely.
VertexSet compute_L(const Graph& g, Vertex w, const VertexSet& u);

struct WitnessSets {
  Vertex w = 0;
  VertexSet x;
  VertexSet y1, y2, z1, z2, z3;
};

/// Throws DomainError unless X is inside N_{>=2}(w).
WitnessSets derived_sets(const Graph& g, Vertex w, const VertexSet& x);

/// Checks on one (w, X): the closure containments Y1 <= Z2 and Y2 <= Z3, the
/// edge-emptiness conclusions for a in N(w) - Y2 and a in N(w) - Z3, the M_4
/// and M_5 covers of N(X) n N_2(w) and N(X) n L(X), and, for connected X with
/// |X| >= 2, the three counting inequalities. Vacuous on hosts with C3 or C4.
Report check_witness_sets(const Graph& g, Vertex w, const VertexSet& x);

/// R(3,t) for t = 1..4; UnsupportedRamseyError beyond.
int ramsey3(int t);
/// 2R(3,p1+2) + 3R(3,p2) + 2p2(p1+p2+1) + 3.
long long ramsey_threshold(int p1, int p2);

/// Confirms R(3,t) for t in {2,3,4}: every graph on R(3,t) vertices has a
/// triangle or an independent t-set, and an (R(3,t)-1)-vertex witness has
/// neither. t <= 3 enumerates all labeled graphs; t = 4 grows triangle-free
/// graphs vertex by vertex. Other t throw UnsupportedRamseyError.
Report verify_ramsey_small(int t);

/// Pure-number rechecks of the constants used in the degree bounds.
Report check_constants();

/// Geodesic properties of a diameter path P = u_0..u_d: every vertex off P
/// has at most one neighbor on P, and for every choice of off-path neighbors
/// a_i of u_i, a_i a_i' in E implies 2 <= i'-i <= 3. Throws
/// InvalidWitnessError unless P is a shortest path of length diam(g).
Report check_geodesic(const Graph& g, const Path& p);

}  // namespace gfree
