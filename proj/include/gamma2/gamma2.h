/* C interface to the gamma2 curvature library.
 *
 * All functions return a g2_status; on failure g2_last_error() holds a
 * thread-local message. Graphs are opaque handles owned by the caller and
 * released with g2_graph_free(). Strings returned through char** are
 * heap-allocated and released with g2_string_free().
 */
#ifndef GAMMA2_H
#define GAMMA2_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct g2_graph g2_graph;

typedef enum g2_status {
    G2_OK = 0,
    G2_CHECK_FAILED = 1,   /* a verification run had failing required checks */
    G2_INVALID_INPUT = 2,
    G2_CAP_EXCEEDED = 3,
    G2_INTERNAL_ERROR = 4
} g2_status;

const char* g2_last_error(void);
void g2_string_free(char* s);
void g2_graph_free(g2_graph* g);

/* thread pool size; 0 = hardware default (GAMMA2_THREADS env as fallback) */
int32_t g2_threads(void);
void g2_set_threads(int32_t n);

/* --- graph I/O ---------------------------------------------------------- */

g2_status g2_graph_parse_edge_list(const char* text, g2_graph** out);
g2_status g2_graph_parse_json(const char* text, g2_graph** out);
g2_status g2_graph_edge_list(const g2_graph* g, char** out);
g2_status g2_graph_json(const g2_graph* g, char** out);
g2_status g2_graph_counts(const g2_graph* g, int32_t* vertices, int64_t* edges);

/* --- generators ---------------------------------------------------------- */

g2_status g2_gen_hypercube(int32_t n, g2_graph** out);
g2_status g2_gen_complete(int32_t n, g2_graph** out);
g2_status g2_gen_cycle(int32_t n, g2_graph** out);
g2_status g2_gen_path(int32_t n, g2_graph** out);
g2_status g2_gen_slice(int32_t n, int32_t k, g2_graph** out);
g2_status g2_gen_middle_slice(int32_t n, g2_graph** out);
g2_status g2_gen_dyck(int32_t n, g2_graph** out);
g2_status g2_gen_tree(int32_t d, int32_t depth, g2_graph** out);
g2_status g2_gen_sn_special(int32_t n, g2_graph** out);
g2_status g2_gen_sn_transpositions(int32_t n, g2_graph** out);

/* generators is row-major: ngens rows of norders entries each */
g2_status g2_gen_abelian_cayley(const int32_t* orders, int32_t norders,
                                const int32_t* generators, int32_t ngens,
                                g2_graph** out);

/* generators is row-major: ngens one-line permutations of length symbols */
g2_status g2_gen_perm_cayley(int32_t symbols, const int32_t* generators,
                             int32_t ngens, g2_graph** out);

/* --- analyses (canonical JSON out) --------------------------------------- */

g2_status g2_curvature_json(const g2_graph* g, int32_t interior_only, char** out);
g2_status g2_spectrum_json(const g2_graph* g, char** out);

/* method: "exact" or "sweep"; exact_cap <= 0 selects the default (22) */
g2_status g2_cheeger_json(const g2_graph* g, const char* method, int32_t exact_cap,
                          char** out);

g2_status g2_sn_test_set_json(int32_t n, char** out);

/* JSON lines, one record per check plus a summary line. Returns
 * G2_CHECK_FAILED (with the report still written) when a required check
 * fails. tol_scale scales every tolerance; pass 1.0 for the defaults. */
g2_status g2_verify_jsonl(const char* corpus, uint64_t seed, double tol_scale,
                          char** out);

#ifdef __cplusplus
}
#endif

#endif /* GAMMA2_H */
