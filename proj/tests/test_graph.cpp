#include <doctest.h>

#include <random>

#include "gfree/error.hpp"
#include "gfree/graph.hpp"
#include "gfree/patterns.hpp"
#include "oracles.hpp"

using namespace gfree;

namespace {

ErrorKind kind_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Io;
}

}  // namespace

TEST_SUITE("graph") {
  TEST_CASE("build deduplicates and rejects loops and bad endpoints") {
    Graph k3 = Graph::build(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.order() == 3);
    CHECK(k3.size() == 3);
    CHECK(kind_of([] { Graph::build(2, {{0, 0}}); }) == ErrorKind::Construction);
    CHECK(kind_of([] { Graph::build(2, {{0, 2}}); }) == ErrorKind::Construction);
    Graph one = Graph::build(4, {{0, 1}, {1, 0}});
    CHECK(one.size() == 1);
    CHECK(one.adjacent(1, 0));
  }

  TEST_CASE("adjacency is symmetric, loop-free, and degree is the row popcount") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
      Graph g = oracle::random_graph(1 + trial % 70, 0.2, rng);
      for (Vertex u = 0; u < g.order(); ++u) {
        CHECK_FALSE(g.adjacent(u, u));
        std::size_t count = 0;
        for (Vertex v = 0; v < g.order(); ++v) {
          CHECK(g.adjacent(u, v) == g.adjacent(v, u));
          count += g.adjacent(u, v) ? 1 : 0;
        }
        CHECK(g.degree(u) == count);
        CHECK(g.neighborhood(u).count() == count);
      }
    }
  }

  TEST_CASE("C3/C4 freeness on the small named graphs") {
    CHECK_FALSE(is_c3c4_free(complete_graph(3)));
    CHECK(is_c3c4_free(cycle_graph(5)));
    CHECK(is_c3c4_free(petersen_graph()));
    CHECK_FALSE(oracle::has_c3_or_c4(petersen_graph()));
    CHECK_FALSE(is_c3c4_free(cycle_graph(4)));
  }

  TEST_CASE("C3/C4 freeness agrees with cycle search and the neighborhood criterion") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 300; ++trial) {
      Graph g = oracle::random_graph(4 + trial % 12, 0.08 + 0.002 * trial, rng);
      bool free = is_c3c4_free(g);
      CHECK(free == !oracle::has_c3_or_c4(g));
      bool criterion = true;
      for (Vertex u = 0; u < g.order(); ++u) {
        auto nu = g.neighbors(u);
        for (Vertex a : nu) {
          for (Vertex b : nu) criterion = criterion && !g.adjacent(a, b);
        }
        for (Vertex v = u + 1; v < g.order(); ++v) {
          criterion = criterion && (g.neighborhood(u) & g.neighborhood(v)).count() <= 1;
        }
      }
      CHECK(free == criterion);
    }
  }

  TEST_CASE("distance examples") {
    CHECK(distance(cycle_graph(6), 0, 3) == 3);
    CHECK(distance(petersen_graph(), 4, 4) == 0);
    Graph two = Graph::build(4, {{0, 1}, {2, 3}});
    CHECK_FALSE(distance(two, 0, 3).has_value());
  }

  TEST_CASE("distance is a metric and matches Floyd-Warshall") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
      Graph g = oracle::random_graph(3 + trial % 15, 0.25, rng);
      auto ref = oracle::all_pairs(g);
      for (Vertex u = 0; u < g.order(); ++u) {
        auto row = bfs_distances(g, u);
        for (Vertex v = 0; v < g.order(); ++v) {
          CHECK(row[v] == ref[u][v]);
          CHECK(row[v] == bfs_distances(g, v)[u]);
          CHECK((row[v] == 0) == (u == v));
          for (Vertex x = 0; x < g.order(); ++x) {
            if (row[v] >= 0 && ref[v][x] >= 0) CHECK(ref[u][x] <= row[v] + ref[v][x]);
          }
        }
      }
    }
  }

  TEST_CASE("diameter examples and errors") {
    CHECK(diameter(path_graph(5)) == 4);
    CHECK(diameter(petersen_graph()) == 2);
    CHECK(diameter(path_graph(1)) == 0);
    CHECK(kind_of([] { diameter(Graph::build(3, {{0, 1}})); }) == ErrorKind::Disconnected);
    // Floyd-Warshall oracle on Petersen.
    int worst = 0;
    for (const auto& row : oracle::all_pairs(petersen_graph())) {
      for (int d : row) worst = std::max(worst, d);
    }
    CHECK(worst == 2);
  }

  TEST_CASE("diameter path is a shortest path of diameter length") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 30; ++trial) {
      Graph g = oracle::random_connected_graph(2 + trial % 14, 0.3, rng);
      auto p = diameter_path(g);
      REQUIRE(p.size() == diameter(g) + 1);
      for (std::size_t i = 1; i < p.size(); ++i) CHECK(g.adjacent(p[i - 1], p[i]));
      CHECK(distance(g, p.front(), p.back()) == diameter(g));
    }
  }

  TEST_CASE("girth examples and oracle agreement") {
    CHECK(girth(heawood_graph()) == 6);
    CHECK(oracle::girth(heawood_graph()) == 6);
    CHECK_FALSE(girth(path_graph(6)).has_value());
    CHECK(girth(cycle_graph(7)) == 7);
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 60; ++trial) {
      Graph g = oracle::random_graph(3 + trial % 12, 0.2, rng);
      CHECK(girth(g) == oracle::girth(g));
    }
  }

  TEST_CASE("contract_edge merges endpoints and stays simple") {
    Graph h = contract_edge(heawood_graph(), {0, 1});
    CHECK(h.order() == 13);
    Graph k2 = contract_edge(complete_graph(3), {0, 1});
    CHECK(k2.order() == 2);
    CHECK(k2.size() == 1);
    CHECK(kind_of([] { contract_edge(Graph::build(2, {}), {0, 1}); }) == ErrorKind::MissingEdge);
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 40; ++trial) {
      Graph g = oracle::random_graph(4 + trial % 10, 0.4, rng);
      auto edges = g.edges();
      if (edges.empty()) continue;
      auto [a, b] = edges[trial % edges.size()];
      Graph c = contract_edge(g, {a, b});
      CHECK(c.order() == g.order() - 1);
      for (Vertex v = 0; v < c.order(); ++v) CHECK_FALSE(c.adjacent(v, v));
      // Edge count: drop the contracted edge and one copy of each common neighbor.
      std::size_t common = (g.neighborhood(a) & g.neighborhood(b)).count();
      CHECK(c.size() == g.size() - 1 - common);
    }
  }

  TEST_CASE("stats examples") {
    CHECK(stats(petersen_graph()) == GraphStats{3, 3, true, false});
    CHECK(stats(heawood_graph()) == GraphStats{3, 3, true, true});
    CHECK(stats(Graph::build(4, {})) == GraphStats{0, 0, false, true});
    CHECK(oracle::bipartite(heawood_graph()));
    CHECK_FALSE(oracle::bipartite(petersen_graph()));
  }

  TEST_CASE("bipartite test agrees with exhaustive 2-coloring") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 100; ++trial) {
      Graph g = oracle::random_graph(2 + trial % 11, 0.25, rng);
      CHECK(is_bipartite(g) == oracle::bipartite(g));
    }
  }

  TEST_CASE("induced subgraph examples") {
    std::vector<Vertex> four{0, 1, 2, 3};
    Graph p4 = induced(cycle_graph(5), four);
    CHECK(p4 == path_graph(4));
    Graph pet = petersen_graph();
    CHECK(induced(pet, VertexSet::full(10)) == pet);
    CHECK(induced(pet, VertexSet(10)).order() == 0);
  }

  TEST_CASE("induced keeps exactly the edges inside the set") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 50; ++trial) {
      Graph g = oracle::random_graph(5 + trial % 20, 0.3, rng);
      VertexSet s(g.order());
      std::bernoulli_distribution coin(0.5);
      for (Vertex v = 0; v < g.order(); ++v) {
        if (coin(rng)) s.insert(v);
      }
      auto members = s.to_vector();
      Graph h = induced(g, s);
      REQUIRE(h.order() == members.size());
      for (Vertex i = 0; i < h.order(); ++i) {
        for (Vertex j = 0; j < h.order(); ++j) CHECK(h.adjacent(i, j) == g.adjacent(members[i], members[j]));
      }
    }
  }

  TEST_CASE("layers around a vertex") {
    Graph c8 = cycle_graph(8);
    CHECK(layer(c8, 0, 2).to_vector() == std::vector<Vertex>{2, 6});
    CHECK(layer_at_least(c8, 0, 3).to_vector() == std::vector<Vertex>{3, 4, 5});
  }
}
