#ifndef SIGNDOM_H
#define SIGNDOM_H

/* Generated by cbindgen from crates/ffi. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SdAlgorithm {
  SD_ALGORITHM_AUTO = 0,
  SD_ALGORITHM_BRUTE = 1,
  SD_ALGORITHM_BNB = 2,
} SdAlgorithm;

typedef enum SdBound {
  SD_BOUND_PRIOR_HALFN = 0,
  SD_BOUND_PRIOR_DELTACEIL = 1,
  SD_BOUND_PRIOR_HUA = 2,
  SD_BOUND_NN1 = 3,
  SD_BOUND_NN2 = 4,
  SD_BOUND_NN3 = 5,
  SD_BOUND_NN4 = 6,
  SD_BOUND_NN5 = 7,
  SD_BOUND_KSUB1 = 8,
  SD_BOUND_KSUB2 = 9,
  SD_BOUND_REGULAR = 10,
} SdBound;

typedef enum SdMode {
  /**
   * f(N[v]) >= 0
   */
  SD_MODE_NONNEG = 0,
  /**
   * f(N[v]) >= 1
   */
  SD_MODE_SIGNED = 1,
} SdMode;

typedef enum SdStatus {
  SD_STATUS_OK = 0,
  SD_STATUS_NULL_POINTER = 1,
  SD_STATUS_INVALID_UTF8 = 2,
  SD_STATUS_PARSE = 3,
  SD_STATUS_VALIDATION = 4,
  SD_STATUS_PARAMETER = 5,
  SD_STATUS_K_OUT_OF_RANGE = 6,
  SD_STATUS_BRUTE_FORCE_CAP = 7,
  SD_STATUS_PANIC = 8,
} SdStatus;

/**
 * Opaque graph handle.
 */
typedef struct SdGraph SdGraph;

typedef struct SdDegreeProfile {
  size_t n;
  size_t m;
  size_t min_degree;
  size_t max_degree;
  size_t even_count;
  size_t odd_count;
} SdDegreeProfile;

typedef struct SdSolveResult {
  int64_t optimum;
  size_t satisfied_count;
  uint64_t nodes;
  uint64_t prunes_weight;
  uint64_t prunes_satisfiability;
  uint64_t prunes_global_bound;
} SdSolveResult;

/**
 * Exact rational bound `numerator / denominator` (denominator > 0) with its
 * integer ceiling and parity lift.
 */
typedef struct SdBoundValue {
  int64_t numerator;
  int64_t denominator;
  int64_t ceil;
  int64_t parity_lifted;
  bool applicable;
} SdBoundValue;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failed call on this thread ("" after a success).
 * The pointer stays valid until the next `sd_*` call on this thread.
 */
const char *sd_last_error_message(void);

/**
 * Parses 0-based `u v` lines (`#` comments).
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum SdStatus sd_graph_from_edge_list(const char *text, struct SdGraph **out);

/**
 * Parses DIMACS `p edge n m` / `e u v` text with 1-based ids.
 *
 * # Safety
 * `text` must be a NUL-terminated string; `out` must be writable.
 */
enum SdStatus sd_graph_from_dimacs(const char *text, struct SdGraph **out);

/**
 * Builds a graph from `edge_count` pairs laid out as `u0 v0 u1 v1 ...`.
 *
 * # Safety
 * `pairs` must point to `2 * edge_count` readable values (may be null when
 * `edge_count` is 0); `out` must be writable.
 */
enum SdStatus sd_graph_from_edges(size_t order,
                                  const size_t *pairs,
                                  size_t edge_count,
                                  struct SdGraph **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum SdStatus sd_graph_complete(size_t n, struct SdGraph **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum SdStatus sd_graph_cycle(size_t n, struct SdGraph **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum SdStatus sd_graph_path(size_t n, struct SdGraph **out);

/**
 * 2t-cycle with one extra vertex on every edge (order 4t).
 *
 * # Safety
 * `out` must be writable.
 */
enum SdStatus sd_graph_sun(size_t t, struct SdGraph **out);

/**
 * # Safety
 * `out` must be writable.
 */
enum SdStatus sd_graph_hajos(struct SdGraph **out);

/**
 * # Safety
 * `offsets` must point to `offset_count` readable values; `out` must be
 * writable.
 */
enum SdStatus sd_graph_circulant(size_t n,
                                 const size_t *offsets,
                                 size_t offset_count,
                                 struct SdGraph **out);

/**
 * Seeded G(n, p); identical arguments give identical graphs.
 *
 * # Safety
 * `out` must be writable.
 */
enum SdStatus sd_graph_gnp(size_t n, double p, uint64_t seed, struct SdGraph **out);

/**
 * # Safety
 * `graph` must be null or a handle from an `sd_graph_*` constructor that
 * has not been freed.
 */
void sd_graph_free(struct SdGraph *graph);

/**
 * Vertex count, or 0 for a null handle.
 *
 * # Safety
 * `graph` must be null or a live handle.
 */
size_t sd_graph_order(const struct SdGraph *graph);

/**
 * Edge count, or 0 for a null handle.
 *
 * # Safety
 * `graph` must be null or a live handle.
 */
size_t sd_graph_size(const struct SdGraph *graph);

/**
 * # Safety
 * `graph` must be null or a live handle.
 */
bool sd_graph_is_connected(const struct SdGraph *graph);

/**
 * # Safety
 * `graph` must be a live handle; `out` must be writable.
 */
enum SdStatus sd_graph_degree_profile(const struct SdGraph *graph, struct SdDegreeProfile *out);

/**
 * Canonical edge-list (`dimacs == false`) or DIMACS text.
 *
 * # Safety
 * `graph` must be a live handle; `out` must be writable. Free the result
 * with `sd_string_free`.
 */
enum SdStatus sd_graph_serialize(const struct SdGraph *graph, bool dimacs, char **out);

/**
 * Exact minimum weight over functions satisfying at least `k` vertices.
 *
 * `workers == 1` gives the canonical witness; `brute_cap` bounds the
 * brute-force order (0 selects the default). When `witness_out` is non-null
 * it receives one sign (+1/−1) per vertex.
 *
 * # Safety
 * `graph` must be a live handle; `out` must be writable; `witness_out`
 * must be null or point to `sd_graph_order(graph)` writable bytes.
 */
enum SdStatus sd_solve(const struct SdGraph *graph,
                       size_t k,
                       enum SdMode mode,
                       enum SdAlgorithm algorithm,
                       size_t brute_cap,
                       size_t workers,
                       struct SdSolveResult *out,
                       int8_t *witness_out);

/**
 * Weight and satisfied-vertex count of a sign vector.
 *
 * # Safety
 * `graph` must be a live handle; `signs` must point to `len` readable
 * values; `weight_out` and `satisfied_out` must be writable.
 */
enum SdStatus sd_evaluate(const struct SdGraph *graph,
                          const int8_t *signs,
                          size_t len,
                          enum SdMode mode,
                          int64_t *weight_out,
                          size_t *satisfied_out);

/**
 * One named bound at parameter `k`. `Regular` on a non-regular graph
 * reports `SD_STATUS_PARAMETER`.
 *
 * # Safety
 * `graph` must be a live handle; `out` must be writable.
 */
enum SdStatus sd_bound(const struct SdGraph *graph,
                       size_t k,
                       enum SdBound bound,
                       struct SdBoundValue *out);

/**
 * Full bound report as a JSON object with `bound.<name>.<field>` keys.
 *
 * # Safety
 * `graph` must be a live handle; `out` must be writable. Free the result
 * with `sd_string_free`.
 */
enum SdStatus sd_bound_report_json(const struct SdGraph *graph, size_t k, char **out);

/**
 * # Safety
 * `s` must be null or a string returned by this library, not yet freed.
 */
void sd_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SIGNDOM_H */
