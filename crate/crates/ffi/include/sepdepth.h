#ifndef SEPDEPTH_H
#define SEPDEPTH_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

#define SD_PRUNE_TWO_TW 0

#define SD_PRUNE_NONE 1

#define SD_TW_EXACT 0

#define SD_TW_HEURISTIC 1

enum sd_status
#if defined(__cplusplus) || __STDC_VERSION__ >= 202311L
  : int32_t
#endif // defined(__cplusplus) || __STDC_VERSION__ >= 202311L
 {
  SD_STATUS_OK = 0,
  /**
   * Malformed input or a domain error.
   */
  SD_STATUS_INPUT = 1,
  /**
   * Budget or memo limit exceeded.
   */
  SD_STATUS_BUDGET = 2,
  /**
   * The decomposition failed verification.
   */
  SD_STATUS_VERIFY = 3,
  /**
   * A required pointer was null.
   */
  SD_STATUS_NULL = 4,
  /**
   * The library panicked; this is a bug.
   */
  SD_STATUS_PANIC = 5,
};
#ifndef __cplusplus
#if __STDC_VERSION__ >= 202311L
typedef enum sd_status sd_status;
#else
typedef int32_t sd_status;
#endif // __STDC_VERSION__ >= 202311L
#endif // __cplusplus

/**
 * Opaque graph handle.
 */
typedef struct sd_graph sd_graph;

/**
 * Opaque treedepth decomposition handle.
 */
typedef struct sd_treedepth sd_treedepth;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread; empty if none. The pointer
 * stays valid until the next failing call on the same thread.
 */
const char *sd_last_error(void);

/**
 * Builds a graph on `n` vertices from `count` edges given as `2 * count`
 * zero-based endpoints.
 *
 * # Safety
 * `edges` must point to `2 * count` readable values (it may be null when
 * `count` is 0) and `out` must be writable.
 */
sd_status sd_graph_new(size_t n, const size_t *edges, size_t count, struct sd_graph **out);

/**
 * Parses a NUL-terminated `.gr` document.
 *
 * # Safety
 * `text` must be a valid C string and `out` must be writable.
 */
sd_status sd_graph_from_gr(const char *text, struct sd_graph **out);

/**
 * # Safety
 * `g` must be null or a handle from this library that was not yet freed.
 */
void sd_graph_free(struct sd_graph *g);

/**
 * # Safety
 * `g` must be null or a live graph handle.
 */
size_t sd_graph_vertex_count(const struct sd_graph *g);

/**
 * # Safety
 * `g` must be null or a live graph handle.
 */
size_t sd_graph_edge_count(const struct sd_graph *g);

/**
 * Exact treedepth. `prune` is `SD_PRUNE_TWO_TW` or `SD_PRUNE_NONE`,
 * `tw_mode` is `SD_TW_EXACT` or `SD_TW_HEURISTIC`.
 *
 * # Safety
 * `g` must be a live graph handle and `out` must be writable.
 */
sd_status sd_solve(const struct sd_graph *g,
                   int32_t prune,
                   int32_t tw_mode,
                   struct sd_treedepth **out);

/**
 * # Safety
 * `t` must be null or a decomposition handle from this library that was not
 * yet freed.
 */
void sd_treedepth_free(struct sd_treedepth *t);

/**
 * Height of the decomposition; 0 for a null handle.
 *
 * # Safety
 * `t` must be null or a live decomposition handle.
 */
size_t sd_treedepth_depth(const struct sd_treedepth *t);

/**
 * Writes 1-based parents (0 for roots) into `buf`, which must hold one
 * entry per vertex.
 *
 * # Safety
 * `t` must be a live decomposition handle and `buf` must have `len`
 * writable entries.
 */
sd_status sd_treedepth_parents(const struct sd_treedepth *t, size_t *buf, size_t len);

/**
 * Tree document text; release it with [`sd_string_free`]. Null on a null
 * handle.
 *
 * # Safety
 * `t` must be null or a live decomposition handle.
 */
char *sd_treedepth_to_string(const struct sd_treedepth *t);

/**
 * # Safety
 * `s` must be null or a string returned by this library that was not yet
 * freed.
 */
void sd_string_free(char *s);

/**
 * Minimum-degree lower bound and min-fill upper bound on treewidth.
 *
 * # Safety
 * `g` must be a live graph handle; `lower` and `upper` must be writable.
 */
sd_status sd_treewidth_bounds(const struct sd_graph *g, ptrdiff_t *lower, ptrdiff_t *upper);

/**
 * Number of minimal separators with at most `max_size` vertices; pass
 * `SIZE_MAX` for no bound.
 *
 * # Safety
 * `g` must be a live graph handle and `out` must be writable.
 */
sd_status sd_minimal_separators_count(const struct sd_graph *g, size_t max_size, size_t *out);

/**
 * Checks 1-based `parents` (0 for roots) as a treedepth decomposition of
 * `g`. Returns `Ok` if valid and `Verify` otherwise; the recomputed height
 * is written to `height` in both cases (0 if the parents form a cycle).
 *
 * # Safety
 * `g` must be a live graph handle, `parents` must have `len` readable
 * entries and `height` must be writable.
 */
sd_status sd_verify_tree(const struct sd_graph *g,
                         const size_t *parents,
                         size_t len,
                         size_t *height);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SEPDEPTH_H */
