// Exercises the shared library through its C header only.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <string>
#include <vector>

#include "gfree/gfree.h"

namespace {

struct Owned {
  gf_graph* g = nullptr;
  ~Owned() { gf_graph_free(g); }
};

std::string take(char* s) {
  std::string out(s);
  gf_string_free(s);
  return out;
}

// The status is evaluated before *json is read.
nlohmann::json report(gf_status st, char** json) {
  REQUIRE(st == GF_OK);
  return nlohmann::json::parse(take(*json));
}

}  // namespace

TEST_SUITE("capi") {
  TEST_CASE("build and inspect") {
    const uint32_t edges[] = {0, 1, 1, 2, 2, 0};
    Owned k3;
    REQUIRE(gf_graph_build(3, edges, 3, &k3.g) == GF_OK);
    CHECK(gf_graph_order(k3.g) == 3);
    CHECK(gf_graph_size(k3.g) == 3);
    CHECK(gf_graph_adjacent(k3.g, 0, 2) == 1);
    char* g6 = nullptr;
    REQUIRE(gf_graph_to_graph6(k3.g, &g6) == GF_OK);
    CHECK(take(g6) == "Bw");
    CHECK(gf_graph_is_c3c4_free(k3.g) == 0);
    size_t girth = 0;
    int acyclic = -1;
    REQUIRE(gf_graph_girth(k3.g, &girth, &acyclic) == GF_OK);
    CHECK(girth == 3);
    CHECK(acyclic == 0);
  }

  TEST_CASE("errors map to status codes") {
    gf_graph* g = nullptr;
    const uint32_t loop[] = {1, 1};
    CHECK(gf_graph_build(2, loop, 1, &g) == GF_ERR_CONSTRUCTION);
    CHECK(g == nullptr);
    CHECK(std::string(gf_last_error()).find("ConstructionError") != std::string::npos);
    CHECK(gf_graph_from_graph6("!!", &g) == GF_ERR_FORMAT);
    CHECK(gf_graph_from_pattern("X9", &g) == GF_ERR_USAGE);
    CHECK(gf_graph_from_pattern("T3", &g) == GF_ERR_CONSTRUCTION);
    CHECK(gf_graph_from_family("gp:6", &g) == GF_ERR_CONSTRUCTION);
    CHECK(gf_graph_from_family(nullptr, &g) == GF_ERR_NULL_ARGUMENT);
    CHECK(std::string(gf_status_name(GF_ERR_CAPACITY)) == "capacity");
    Owned two;
    REQUIRE(gf_graph_build(2, nullptr, 0, &two.g) == GF_OK);
    size_t d = 0;
    CHECK(gf_graph_diameter(two.g, &d) == GF_ERR_DISCONNECTED);
    char* json = nullptr;
    CHECK(gf_verify_ramsey(7, &json) == GF_ERR_UNSUPPORTED_RAMSEY);
  }

  TEST_CASE("families and patterns") {
    Owned h;
    REQUIRE(gf_graph_from_family("h1:5", &h.g) == GF_OK);
    CHECK(gf_graph_order(h.g) == 33);
    char* name = nullptr;
    REQUIRE(gf_graph_vertex_name(h.g, 0, &name) == GF_OK);
    CHECK(take(name) == "u^(1)_1");
    gf_stats st{};
    REQUIRE(gf_graph_stats(h.g, &st) == GF_OK);
    CHECK(st.min_degree == 3);
    CHECK(st.max_degree == 10);
    CHECK(st.connected == 1);

    Owned p10;
    REQUIRE(gf_graph_from_pattern("P10", &p10.g) == GF_OK);
    int found = -1;
    CHECK(gf_find_induced(p10.g, h.g, &found, nullptr) == GF_OK);
    CHECK(found == 0);

    Owned t9;
    REQUIRE(gf_graph_from_pattern("Tstar9", &t9.g) == GF_OK);
    std::vector<uint32_t> map(gf_graph_order(t9.g));
    CHECK(gf_find_induced(t9.g, h.g, &found, map.data()) == GF_OK);
    CHECK(found == 1);
    for (uint32_t a = 0; a < map.size(); ++a) {
      for (uint32_t b = a + 1; b < map.size(); ++b) {
        CHECK(gf_graph_adjacent(t9.g, a, b) == gf_graph_adjacent(h.g, map[a], map[b]));
      }
    }
  }

  TEST_CASE("isomorphism, chromatic number and DOT") {
    Owned pet;
    Owned gp5;
    REQUIRE(gf_graph_from_pattern("petersen", &pet.g) == GF_OK);
    REQUIRE(gf_graph_from_family("gp:5", &gp5.g) == GF_OK);
    int iso = 0;
    REQUIRE(gf_is_isomorphic(pet.g, gp5.g, &iso) == GF_OK);
    CHECK(iso == 1);
    int chi = 0;
    REQUIRE(gf_chromatic_number(pet.g, 24, 1, &chi) == GF_OK);
    CHECK(chi == 3);
    REQUIRE(gf_chromatic_number(pet.g, 24, 0, &chi) == GF_OK);
    CHECK(chi == 3);
    Owned big;
    REQUIRE(gf_graph_from_family("gp:25", &big.g) == GF_OK);
    CHECK(gf_chromatic_number(big.g, 24, 1, &chi) == GF_ERR_CAPACITY);
    char* dot = nullptr;
    REQUIRE(gf_graph_to_dot(pet.g, &dot) == GF_OK);
    CHECK(take(dot).rfind("graph G {", 0) == 0);
    Owned copy;
    REQUIRE(gf_graph_clone(pet.g, &copy.g) == GF_OK);
    CHECK(gf_graph_size(copy.g) == 15);
  }

  TEST_CASE("reports") {
    char* json = nullptr;
    auto lemma = report(gf_verify_lemma("2.3", 3, 3, &json), &json);
    CHECK(lemma["check_id"] == "2.3");
    CHECK(lemma["pass"] == true);
    for (const char* key : {"params", "status", "witness", "counterexample", "runtime_ms"}) CHECK(lemma.contains(key));
    auto all = report(gf_verify_lemma("2.4", 0, 0, &json), &json);
    CHECK(all["details"].size() == 3);
    CHECK(gf_verify_lemma("2.4", 1, 9, &json) == GF_ERR_CONSTRUCTION);
    auto consts = report(gf_check_constants(&json), &json);
    CHECK(consts["pass"] == true);
    auto ramsey = report(gf_verify_ramsey(3, &json), &json);
    CHECK(ramsey["pass"] == true);

    Owned g;
    REQUIRE(gf_graph_from_family("gp:49", &g.g) == GF_OK);
    auto diam = report(gf_check_theorem(g.g, "diam", 0, &json), &json);
    CHECK(diam["status"] == "checked");
    CHECK(diam["pass"] == true);
    auto maxdeg = report(gf_check_theorem(g.g, "maxdeg", 0, &json), &json);
    CHECK(maxdeg["status"] == "vacuous");
    CHECK(gf_check_theorem(g.g, "girth", 0, &json) == GF_ERR_USAGE);
  }

  TEST_CASE("corpus files") {
    const char* path = "capi_corpus.g6";
    {
      std::ofstream out(path);
      out << "Bw\n\nDhc\n";
    }
    gf_corpus* c = nullptr;
    REQUIRE(gf_corpus_open(path, 0, &c) == GF_OK);
    gf_graph* g = nullptr;
    size_t index = 0;
    REQUIRE(gf_corpus_next(c, &g, &index) == GF_OK);
    CHECK(index == 1);
    CHECK(gf_graph_order(g) == 3);
    gf_graph_free(g);
    REQUIRE(gf_corpus_next(c, &g, &index) == GF_OK);
    CHECK(index == 2);
    CHECK(gf_graph_order(g) == 5);
    gf_graph_free(g);
    REQUIRE(gf_corpus_next(c, &g, &index) == GF_OK);
    CHECK(g == nullptr);
    gf_corpus_close(c);

    char* json = nullptr;
    auto scan = report(gf_scan_corpus(path, "P8", 2, 0, &json), &json);
    CHECK(scan["witness"]["members"].empty());
    CHECK(gf_corpus_open("does/not/exist.g6", 0, &c) == GF_ERR_IO);
    std::remove(path);
  }
}
