/* C API for the wormhole-graph invariant engine.
 *
 * All functions returning wht_rc set a thread-local error message
 * retrievable via wht_last_error() on failure. Strings returned through
 * out-parameters are heap-allocated; release them with wht_string_free().
 */
#ifndef WHT_H
#define WHT_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  WHT_OK = 0,
  WHT_ERR_PARSE = 1,    /* DSL syntax or validation failure (has line info) */
  WHT_ERR_INVALID = 2,  /* structurally invalid request (boundaries, ids) */
  WHT_ERR_DOMAIN = 3,   /* mathematically undefined (poles, colors, bases) */
  WHT_ERR_INTERNAL = 4  /* broken invariant inside the engine */
} wht_rc;

typedef struct wht_diagram wht_diagram;

const char* wht_version(void);

/* Message describing the most recent failure on this thread. */
const char* wht_last_error(void);

void wht_string_free(char* s);

wht_rc wht_diagram_parse(const char* text, wht_diagram** out);
void wht_diagram_free(wht_diagram* d);

/* Canonical DSL text of the diagram. */
wht_rc wht_diagram_pretty(const wht_diagram* d, char** out);

/* Invariant of a closed diagram. use_oracle forces the brute-force
 * evaluator. pretty_out / json_out may each be NULL if not wanted. */
wht_rc wht_eval(const wht_diagram* d, int use_oracle, char** pretty_out,
                char** json_out);

/* Dimension of V(sphere with the given point colors). */
wht_rc wht_dim(const int* colors, int n, long* out);

/* Gram matrix of the Catalan basis on 2n points colored 1 as JSON;
 * want_det adds determinant, its degree in the loop value, and the
 * degree-law check. */
wht_rc wht_gram(int n, int want_det, char** json_out);

/* Morphism matrix of a tangle in the tree bases of its boundaries,
 * plus trace when source equals target. */
wht_rc wht_matrix(const wht_diagram* d, char** json_out);

/* Per-r comparison of the specialized bracket against the omega-cabled
 * surgery computation; all_pass receives 1 iff no row failed. */
wht_rc wht_wrt_check(const wht_diagram* d, int r_lo, int r_hi, double tol,
                     char** json_out, int* all_pass);

#ifdef __cplusplus
}
#endif

#endif /* WHT_H */
