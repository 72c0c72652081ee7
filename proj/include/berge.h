/* C interface to the berge hypergraph library.
 *
 * All objects are opaque handles created and destroyed through this API.
 * Functions return BERGE_OK on success; on failure berge_last_error() holds
 * a thread-local message naming the precise error. Strings returned through
 * char** out-parameters are heap-allocated and must be released with
 * berge_string_free().
 */
#ifndef BERGE_H
#define BERGE_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define BERGE_API __declspec(dllexport)
#else
#define BERGE_API __attribute__((visibility("default")))
#endif

typedef enum berge_status {
  BERGE_OK = 0,
  BERGE_E_INVALID = 1,      /* bad parameters or pattern */
  BERGE_E_PARSE = 2,        /* malformed input text */
  BERGE_E_VALIDATE = 3,     /* hypergraph/graph invariant violation */
  BERGE_E_PRECONDITION = 4, /* operation preconditions not met */
  BERGE_E_TOO_LARGE = 5,    /* beyond hard size caps */
  BERGE_E_INTERNAL = 6
} berge_status;

typedef struct berge_hypergraph berge_hypergraph;
typedef struct berge_graph berge_graph;
typedef struct berge_bluered berge_bluered;

BERGE_API const char* berge_version(void);
BERGE_API const char* berge_status_name(berge_status s);
BERGE_API const char* berge_last_error(void);
BERGE_API void berge_string_free(char* s);

/* ---- hypergraphs ---- */

BERGE_API berge_status berge_hypergraph_parse(const char* json,
                                              berge_hypergraph** out);
/* vertices holds edge_count*r entries, one hyperedge after another. */
BERGE_API berge_status berge_hypergraph_create(int n, int r, const int* vertices,
                                               int edge_count,
                                               berge_hypergraph** out);
BERGE_API berge_status berge_hypergraph_to_json(const berge_hypergraph* h,
                                                char** out);
BERGE_API int berge_hypergraph_n(const berge_hypergraph* h);
BERGE_API int berge_hypergraph_r(const berge_hypergraph* h);
BERGE_API int berge_hypergraph_edge_count(const berge_hypergraph* h);
BERGE_API void berge_hypergraph_free(berge_hypergraph* h);

/* ---- graphs ---- */

BERGE_API berge_status berge_graph_parse(const char* json, berge_graph** out);
BERGE_API berge_status berge_graph_create(int n, const int* endpoints,
                                          int edge_count, berge_graph** out);
/* K<k>, P<k>, C<k>, S<k>: clique/path/cycle by vertex count, star by edges */
BERGE_API berge_status berge_graph_named(const char* name, berge_graph** out);
BERGE_API berge_status berge_graph_to_json(const berge_graph* g, char** out);
BERGE_API int berge_graph_n(const berge_graph* g);
BERGE_API int berge_graph_edge_count(const berge_graph* g);
BERGE_API void berge_graph_free(berge_graph* g);

/* ---- shadow and heavy graph ---- */

/* JSON array of [u, v, multiplicity] triples for every covered pair. */
BERGE_API berge_status berge_shadow_multiplicity_json(const berge_hypergraph* h,
                                                      char** out);
BERGE_API berge_status berge_heavy_graph(const berge_hypergraph* h, int t,
                                         berge_graph** out);

/* ---- detection ---- */

/* mode is "heavy" or "berge". found receives 0/1; when found and
 * witness_json is non-NULL it receives the witness. */
BERGE_API berge_status berge_find_copy(const berge_hypergraph* h,
                                       const berge_graph* f, int t,
                                       const char* mode, int* found,
                                       char** witness_json);
BERGE_API berge_status berge_verify_witness(const berge_hypergraph* h,
                                            const berge_graph* f, int t,
                                            const char* mode,
                                            const char* witness_json,
                                            int* valid);
BERGE_API berge_status berge_extract_berge_from_heavy(const berge_hypergraph* h,
                                                      const berge_graph* f,
                                                      int t,
                                                      char** witness_json);
BERGE_API berge_status berge_extract_expansion3(const berge_hypergraph* h,
                                                const berge_graph* f, int t,
                                                char** result_json);
BERGE_API berge_status berge_strip_representatives(const berge_hypergraph* h,
                                                   char** result_json);
BERGE_API berge_status berge_greedy_certificate(const berge_hypergraph* h, int t,
                                                char** result_json);
BERGE_API berge_status berge_brute_force_detect(const berge_hypergraph* h,
                                                const berge_graph* f, int t,
                                                const char* mode, int* found);

/* ---- constructions ----
 *
 * name: turan | Q | c1 | c2 | c3 | c4 | sts | packing.
 * params_json example: {"n":6,"parts":3,"r":3,"t":2}. c1 takes "seed" (a
 * hypergraph object); c3 takes "seed" (a graph object) plus optional
 * "matching" (pair list) or uses the builtin seed; c4 takes "pattern"
 * (a graph object) or "pattern_name". packing takes "lambda".
 */
BERGE_API berge_status berge_generate(const char* name, const char* params_json,
                                      berge_hypergraph** out);
/* Same dispatch, also returning {"size":..,"predicted_size":..,"freeness":..}. */
BERGE_API berge_status berge_generate_with_report(const char* name,
                                                  const char* params_json,
                                                  berge_hypergraph** out,
                                                  char** report_json);

/* ---- bounds and symmetrization ---- */

BERGE_API berge_status berge_bluered_parse(const char* json, berge_bluered** out);
BERGE_API berge_status berge_bluered_to_json(const berge_bluered* g, char** out);
BERGE_API void berge_bluered_free(berge_bluered* g);

BERGE_API berge_status berge_count_cliques(const berge_graph* g, int r,
                                           int64_t* out);
BERGE_API berge_status berge_g_value(const berge_bluered* g, int r, int t,
                                     int64_t* out);
BERGE_API berge_status berge_symmetrize(const berge_bluered* g, int k, int r,
                                        int t, char** result_json);
BERGE_API berge_status berge_theorem_bounds(int n, int r, int t,
                                            const char* pattern,
                                            char** report_json);

/* ---- exact search ---- */

BERGE_API berge_status berge_exact_turan(int n, int r, const berge_graph* f,
                                         int t, const char* mode,
                                         int64_t node_budget,
                                         char** result_json);

/* ---- acceptance battery ----
 *
 * criteria selects a comma-separated subset ("1,3,7"); NULL runs all.
 * include_timing adds per-criterion seconds to the report.
 */
BERGE_API berge_status berge_selftest(const char* criteria, int include_timing,
                                      char** report_json);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* BERGE_H */
