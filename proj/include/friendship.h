#ifndef FRIENDSHIP_H
#define FRIENDSHIP_H

/* C interface to the friendship-hypergraph library.
 *
 * Conventions:
 *   - Every function that can fail returns fh_status; FH_OK means the
 *     operation ran and, for verification calls, the verdict was PASS.
 *   - Verification calls hand back a certificate JSON document through an
 *     out-parameter whenever a certificate exists, including on
 *     FH_VERIFY_FAIL (verdict FAIL) and FH_ERR_INVALID (verdict ERROR).
 *   - Any other status leaves out-parameters untouched; fh_last_error()
 *     returns a thread-local description of the most recent failure.
 *   - Strings returned through char** out-parameters are heap-allocated;
 *     release them with fh_string_free.  Handles have their own _free.
 */

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum fh_status {
  FH_OK = 0,
  FH_VERIFY_FAIL = 1,
  FH_ERR_INVALID = 2,
  FH_ERR_PARSE = 3,
  FH_ERR_UNAVAILABLE = 4,
  FH_ERR_IO = 5,
  FH_ERR_INTERNAL = 6
} fh_status;

typedef struct fh_hypergraph fh_hypergraph;
typedef struct fh_search_outcome fh_search_outcome;

const char* fh_last_error(void);
void fh_string_free(char* s);
void fh_hypergraph_free(fh_hypergraph* h);
void fh_search_outcome_free(fh_search_outcome* s);

/* ---- hypergraphs and .hg documents ---- */

/* edge_vertices holds edge_count * r vertex indices, edge by edge. */
fh_status fh_hypergraph_make(int n, int r, const int* edge_vertices, size_t edge_count,
                             fh_hypergraph** out);
fh_status fh_hypergraph_parse(const char* text, fh_hypergraph** out);
fh_status fh_hypergraph_read_file(const char* path, fh_hypergraph** out);
/* steiner_t > 0 adds the "# steiner t=<t>" annotation; pass 0 for none. */
fh_status fh_hypergraph_to_text(const fh_hypergraph* h, int steiner_t, char** out);
fh_status fh_hypergraph_write_file(const fh_hypergraph* h, const char* path, int steiner_t);

int fh_hypergraph_n(const fh_hypergraph* h);
int fh_hypergraph_r(const fh_hypergraph* h);
uint64_t fh_hypergraph_edge_count(const fh_hypergraph* h);
/* Annotation carried by the document this handle was parsed from, 0 if none. */
int fh_hypergraph_steiner_t(const fh_hypergraph* h);
/* SHA-256 (lowercase hex) of the canonical serialization, annotation excluded. */
fh_status fh_hypergraph_sha256(const fh_hypergraph* h, char** out);

fh_status fh_hypergraph_link(const fh_hypergraph* h, int vertex, fh_hypergraph** out);
/* {"k":..., "sets":[[...],...], "degrees":[...], "min":..., "max":..., "total":...} */
fh_status fh_degree_profile(const fh_hypergraph* h, int k, char** json);
/* {"r_set":[...], "friends":[...]} for one r-subset of the vertices. */
fh_status fh_friends_of(const fh_hypergraph* h, const int* r_set, size_t len, char** json);

/* ---- generators ---- */

/* Steiner systems: S(2,3,n) for n == 1,3 (mod 6); S(3,4,8); S(5,6,12).
 * The handle carries the t annotation.  FH_ERR_UNAVAILABLE otherwise. */
fh_status fh_make_steiner(int t, int k, int n, fh_hypergraph** out);

fh_status fh_construct_universal(int t, int k, int n, fh_hypergraph** out);
fh_status fh_construct_complete(int r, fh_hypergraph** out);
/* a, b, c: the three removed points of S(r+1, r+2, 2r+4); pass -1, -1, -1
 * for the default (the three highest). */
fh_status fh_construct_truncated(int r, int a, int b, int c, fh_hypergraph** out);
/* k is the cube dimension, 3 <= k <= 6. */
fh_status fh_construct_cube(int k, fh_hypergraph** out);
/* The k-sets meeting {0..l-1}: the canonical saturated family. */
fh_status fh_construct_m(int n, int k, int l, fh_hypergraph** out);

/* ---- verification (certificate JSON out-parameters) ---- */

fh_status fh_verify_friendship(const fh_hypergraph* h, int jobs, char** cert_json);
/* Checks the defining property of S(t, r, n) where r is the uniformity. */
fh_status fh_verify_steiner_property(const fh_hypergraph* blocks, int t, char** cert_json);
/* {"certificate":..., "decomposition":...} - decomposition null unless PASS. */
fh_status fh_decompose(const fh_hypergraph* h, char** json);
/* {"certificate":..., "universal_vertex":..., "steiner_blocks":...} */
fh_status fh_is_universal(const fh_hypergraph* h, char** json);
fh_status fh_verify_saturated(const fh_hypergraph* g, int l, char** cert_json);
/* Decomposes h, then checks the outside-vertex clique cap on the cover. */
fh_status fh_shadow_check(const fh_hypergraph* h, char** cert_json);
/* Sociable/unsociable classification of the clique cover; FH_VERIFY_FAIL
 * with the decomposition certificate when h has no cover. */
fh_status fh_sociable_report(const fh_hypergraph* h, char** json);
/* Full structural report; FH_VERIFY_FAIL when the friendship check refuses. */
fh_status fh_audit(const fh_hypergraph* h, int jobs, char** json);

fh_status fh_check_path_components(int max_n, char** cert_json);
fh_status fh_check_clique_complement(int max_r, char** cert_json);

/* ---- bounds ---- */

fh_status fh_bounds_table(int r, int n_from, int n_to, char** json);
/* Exact values as decimal strings ("p" or "p/q"). */
fh_status fh_min_edges_bound(int n, int r, char** value);
fh_status fh_max_cliques_bound(int n, int r, char** value);
fh_status fh_max_edges_bound(int n, int r, char** value);
fh_status fh_lrss_bound(int n, char** value);
fh_status fh_truncated_clique_count(int r, char** value);

/* ---- search ---- */

/* max_solutions = 0 means unlimited; symmetry != 0 forces the least
 * candidate clique into every solution. */
fh_status fh_search(int n, int r, uint64_t node_budget, uint64_t max_solutions, int symmetry,
                    int jobs, fh_search_outcome** out);
fh_status fh_search_outcome_json(const fh_search_outcome* s, char** json);
uint64_t fh_search_solution_count(const fh_search_outcome* s);
int fh_search_exhausted(const fh_search_outcome* s);
fh_status fh_search_solution(const fh_search_outcome* s, uint64_t index, fh_hypergraph** out);
fh_status fh_search_census(const fh_search_outcome* s, char** cert_json);

#ifdef __cplusplus
}
#endif

#endif /* FRIENDSHIP_H */
