/* C interface to the gfree graph toolkit.
 *
 * Graphs are opaque handles owned by the caller and released with
 * gf_graph_free. Every fallible call returns a gf_status; on failure the
 * message is available from gf_last_error() on the same thread until the
 * next failing call. Strings returned through char** are heap copies owned
 * by the caller and released with gf_string_free. */
#ifndef GFREE_H
#define GFREE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define GF_API __declspec(dllexport)
#else
#define GF_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct gf_graph gf_graph;
typedef struct gf_corpus gf_corpus;

typedef enum gf_status {
  GF_OK = 0,
  GF_ERR_CONSTRUCTION = 1,
  GF_ERR_DISCONNECTED = 2,
  GF_ERR_MISSING_EDGE = 3,
  GF_ERR_FORMAT = 4,
  GF_ERR_CAPACITY = 5,
  GF_ERR_NOT_A_TREE = 6,
  GF_ERR_ADJACENT_ENDPOINTS = 7,
  GF_ERR_INVALID_WITNESS = 8,
  GF_ERR_DOMAIN = 9,
  GF_ERR_UNSUPPORTED_RAMSEY = 10,
  GF_ERR_USAGE = 11,
  GF_ERR_IO = 12,
  GF_ERR_NULL_ARGUMENT = 13,
  GF_ERR_INTERNAL = 14
} gf_status;

typedef struct gf_stats {
  size_t min_degree;
  size_t max_degree;
  int connected;
  int bipartite;
} gf_stats;

GF_API const char* gf_version(void);
GF_API const char* gf_status_name(gf_status status);
GF_API const char* gf_last_error(void);
GF_API void gf_string_free(char* s);

/* Construction. edges holds m pairs as 2*m consecutive vertex ids. */
GF_API gf_status gf_graph_build(size_t n, const uint32_t* edges, size_t m, gf_graph** out);
GF_API gf_status gf_graph_from_graph6(const char* record, gf_graph** out);
/* Pattern ids: P<n>, C<n>, T<n>, Tstar<n>, S<n>:<bits>, S8_1, S8_2, T8_1,
 * T8_2, T8star:<p1>,<p2>, petersen, heawood, contracted_heawood. */
GF_API gf_status gf_graph_from_pattern(const char* id, gf_graph** out);
/* Families: h1:<s>, h2:<s>, h3:<s>, h4:<s>, gp:<n>. */
GF_API gf_status gf_graph_from_family(const char* spec, gf_graph** out);
GF_API gf_status gf_graph_clone(const gf_graph* g, gf_graph** out);
GF_API void gf_graph_free(gf_graph* g);

GF_API size_t gf_graph_order(const gf_graph* g);
GF_API size_t gf_graph_size(const gf_graph* g);
GF_API int gf_graph_adjacent(const gf_graph* g, uint32_t u, uint32_t v);
/* Name of vertex v for pattern and family graphs, its decimal id otherwise. */
GF_API gf_status gf_graph_vertex_name(const gf_graph* g, uint32_t v, char** out);

GF_API gf_status gf_graph_to_graph6(const gf_graph* g, char** out);
GF_API gf_status gf_graph_to_dot(const gf_graph* g, char** out);

/* Metrics. */
GF_API gf_status gf_graph_stats(const gf_graph* g, gf_stats* out);
GF_API int gf_graph_is_c3c4_free(const gf_graph* g);
GF_API gf_status gf_graph_diameter(const gf_graph* g, size_t* out);
/* *acyclic is set to 1 (and *out to 0) for forests. */
GF_API gf_status gf_graph_girth(const gf_graph* g, size_t* out, int* acyclic);

/* Induced containment. map, when non-null, must hold order(pattern) slots. */
GF_API gf_status gf_find_induced(const gf_graph* pattern, const gf_graph* host, int* found, uint32_t* map);
GF_API gf_status gf_is_isomorphic(const gf_graph* a, const gf_graph* b, int* out);

/* Chromatic number: structured = 1 uses the peeling procedure, 0 the exact
 * search on the whole graph. */
GF_API gf_status gf_chromatic_number(const gf_graph* g, size_t cap, int structured, int* out);

/* Checks returning JSON reports. s_from = s_to = 0 selects the lemma's full
 * supported range. which is "diam" or "maxdeg". */
GF_API gf_status gf_verify_lemma(const char* id, int s_from, int s_to, char** report_json);
GF_API gf_status gf_check_theorem(const gf_graph* g, const char* which, int assume_hypothesis, char** report_json);
GF_API gf_status gf_scan_corpus(const char* path, const char* tree_id, unsigned jobs, int lenient,
                                char** report_json);
GF_API gf_status gf_verify_ramsey(int t, char** report_json);
GF_API gf_status gf_check_constants(char** report_json);

/* Streaming graph6 files. gf_corpus_next sets *out to NULL at end of input. */
GF_API gf_status gf_corpus_open(const char* path, int lenient, gf_corpus** out);
GF_API gf_status gf_corpus_next(gf_corpus* c, gf_graph** out, size_t* index);
GF_API void gf_corpus_close(gf_corpus* c);

#ifdef __cplusplus
}
#endif

#endif /* GFREE_H */
