/* cliquevec: clique vectors of k-connected chordal graphs.
 *
 * C interface to the whole library: graphs and graph I/O, chordality and
 * connectivity, the c <-> b basis change with its validator and realizer,
 * SD-words and threshold graphs, B(n,d,k) enumeration, face-ring Betti
 * numbers, and the exhaustive verification sweeps.
 *
 * Conventions:
 *   - Functions returning cqv_status report failure through the status and
 *     leave a message readable via cqv_last_error() (thread-local, sticky
 *     until the next failing call on the same thread).
 *   - Every char** output is a NUL-terminated string owned by the caller;
 *     release it with cqv_string_free. Handles have their own _free.
 *   - Integer vectors cross this interface as comma-separated decimal
 *     strings ("10,14,11,3"), exact at any magnitude.
 *   - Plain int getters (vertex counts, table lookups, ...) require a valid
 *     non-NULL handle and cannot fail.
 */

#ifndef CLIQUEVEC_H
#define CLIQUEVEC_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define CQV_API __attribute__((visibility("default")))

typedef enum cqv_status {
    CQV_OK = 0,
    CQV_EINVAL = 1,    /* unusable arguments or unsupported size */
    CQV_EPARSE = 2,    /* malformed textual input */
    CQV_EREJECTED = 3, /* input is well-formed but fails validation */
    CQV_EINTERNAL = 4  /* internal invariant violated (a bug) */
} cqv_status;

typedef struct cqv_graph cqv_graph;
typedef struct cqv_betti_table cqv_betti_table;
typedef struct cqv_bvector_enum cqv_bvector_enum;

CQV_API const char* cqv_version(void);
CQV_API const char* cqv_status_name(cqv_status s);
CQV_API const char* cqv_last_error(void);
CQV_API void cqv_string_free(char* s);

/* ---- graphs (simple, undirected, at most 64 vertices) ---- */

CQV_API cqv_status cqv_graph_new(int n, cqv_graph** out);
CQV_API void cqv_graph_free(cqv_graph* g);
CQV_API cqv_status cqv_graph_add_edge(cqv_graph* g, int u, int v);
CQV_API int cqv_graph_vertex_count(const cqv_graph* g);
CQV_API int cqv_graph_edge_count(const cqv_graph* g);
CQV_API int cqv_graph_has_edge(const cqv_graph* g, int u, int v);
CQV_API int cqv_graph_component_count(const cqv_graph* g);

/* format: "edge-list", "graph6", or (parse only) "auto", which treats text
 * whose first non-space character is a digit as an edge list. */
CQV_API cqv_status cqv_graph_parse(const char* text, const char* format, cqv_graph** out);
CQV_API cqv_status cqv_graph_format(const cqv_graph* g, const char* format, char** out);

/* Induced subgraph on verts[0..count), relabeled 0..count-1 in ascending
 * order of the originals. Rejects duplicates and out-of-range vertices. */
CQV_API cqv_status cqv_graph_induced(const cqv_graph* g, const int* verts, int count,
                                     cqv_graph** out);
CQV_API cqv_status cqv_graph_cone(const cqv_graph* g, cqv_graph** out);
CQV_API cqv_status cqv_graph_add_isolated(const cqv_graph* g, cqv_graph** out);

/* ---- chordality, clique counting, connectivity ---- */

/* Chordal: *out = perfect elimination order "v0,v1,...". Not chordal:
 * *out = NULL (status stays CQV_OK). */
CQV_API cqv_status cqv_graph_chordal_peo(const cqv_graph* g, char** out);

/* Clique vector "c1,c2,...". Uses the elimination-order fast path on
 * chordal graphs unless force_bruteforce is nonzero. */
CQV_API cqv_status cqv_graph_clique_vector(const cqv_graph* g, int force_bruteforce,
                                           char** out);

/* Vertex connectivity. classical = 0: kappa(K_n) = n; nonzero: n - 1.
 * The two agree on every non-complete graph. */
CQV_API cqv_status cqv_graph_connectivity(const cqv_graph* g, int classical, int* out);

/* ---- the c <-> b transform ---- */

CQV_API cqv_status cqv_clique_to_b(const char* c_csv, char** out);
CQV_API cqv_status cqv_b_to_clique(const char* b_csv, char** out);

/* *out_valid = 1 and *out_reason = NULL when c is the clique vector of some
 * k-connected chordal graph; otherwise 0 and the first violated condition.
 * A malformed vector or negative k is CQV_EPARSE / CQV_EINVAL, not a
 * rejection. */
CQV_API cqv_status cqv_validate(const char* c_csv, int k, int* out_valid, char** out_reason);

CQV_API cqv_status cqv_binomial(int64_t n, int64_t k, char** out);

/* ---- SD-words and threshold graphs ---- */

CQV_API cqv_status cqv_word_to_graph(const char* word, cqv_graph** out);

/* Threshold: *out_is_threshold = 1 and *out_word gets the unique word.
 * Not threshold: *out_is_threshold = 0, *out_word = NULL, status CQV_OK. */
CQV_API cqv_status cqv_graph_to_word(const cqv_graph* g, char** out_word,
                                     int* out_is_threshold);

CQV_API cqv_status cqv_word_to_bvector(const char* word, char** out);
CQV_API cqv_status cqv_bvector_to_word(const char* b_csv, char** out);
CQV_API cqv_status cqv_word_is_k_connected(const char* word, int k, int* out);

/* Builds a k-connected chordal graph with clique vector exactly c, plus the
 * SD-word that produced it. No such graph: CQV_EREJECTED with the
 * validator's reason in cqv_last_error(). */
CQV_API cqv_status cqv_realize(const char* c_csv, int k, cqv_graph** out_graph,
                               char** out_word);

/* ---- B(n,d,k): positive vectors, sum n, length d, first k entries 1 ---- */

CQV_API cqv_status cqv_bvector_enum_new(int64_t n, int d, int k, cqv_bvector_enum** out);
/* Lexicographic stream; at the end *out = NULL with status CQV_OK. */
CQV_API cqv_status cqv_bvector_enum_next(cqv_bvector_enum* e, char** out);
CQV_API void cqv_bvector_enum_free(cqv_bvector_enum* e);
CQV_API cqv_status cqv_bvector_count(int64_t n, int d, int k, char** out);

/* ---- face ring of the clique complex ---- */

/* Reduced rational homology ranks "h0,h1,..." (clique complex, n <= 10). */
CQV_API cqv_status cqv_graph_homology(const cqv_graph* g, char** out);

/* Linear strand "s0,s1,...,s(n-1)" with s_i = beta_{i,i+1} (n <= 24). */
CQV_API cqv_status cqv_graph_betti_strand(const cqv_graph* g, char** out);

/* Full graded Betti table via the subset-homology sum (n <= 8). */
CQV_API cqv_status cqv_graph_betti_table(const cqv_graph* g, cqv_betti_table** out);
CQV_API void cqv_betti_table_free(cqv_betti_table* t);
CQV_API int cqv_betti_table_size(const cqv_betti_table* t);
/* Entries indexed 0..size-1 in (i, j) order. */
CQV_API cqv_status cqv_betti_table_entry(const cqv_betti_table* t, int idx, int* out_i,
                                         int* out_j, uint64_t* out_value);
CQV_API int cqv_betti_table_projective_dimension(const cqv_betti_table* t);
CQV_API int cqv_betti_table_depth(const cqv_betti_table* t);
CQV_API int cqv_betti_table_two_linear(const cqv_betti_table* t);
CQV_API cqv_status cqv_betti_table_json(const cqv_betti_table* t, char** out);

/* Connectivity recovered from the vanishing of the linear strand. */
CQV_API cqv_status cqv_graph_connectivity_from_betti(const cqv_graph* g, int* out);

/* ---- exhaustive verification ---- */

/* theorem: "main", "froberg", "betti-connectivity", or "counting".
 * *out_json gets the full report; *out_pass its pass flag. A failed sweep
 * (counterexamples found) still returns CQV_OK. */
CQV_API cqv_status cqv_verify(const char* theorem, int n_max, int jobs, char** out_json,
                              int* out_pass);

#ifdef __cplusplus
}
#endif

#endif /* CLIQUEVEC_H */
