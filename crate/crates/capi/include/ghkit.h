/* C interface to the ghkit metric-geometry toolkit. */

#ifndef GHKIT_H
#define GHKIT_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

// Status code returned by every fallible entry point.
typedef enum GhkStatus {
  GHK_STATUS_OK = 0,
  GHK_STATUS_NULL_ARGUMENT = 1,
  GHK_STATUS_INVALID_ARGUMENT = 2,
  GHK_STATUS_AXIOM_VIOLATION = 3,
  GHK_STATUS_SIZE_GUARD_EXCEEDED = 4,
  GHK_STATUS_OVERFLOW_GUARD = 5,
  GHK_STATUS_INDEX_OUT_OF_RANGE = 6,
} GhkStatus;

// Result of an exact Gromov-Hausdorff computation (opaque).
typedef struct GhkGhResult GhkGhResult;

// A validated finite metric space (opaque).
typedef struct GhkMetricSpace GhkMetricSpace;

// A finite subset of the real line (opaque).
typedef struct GhkPointSet GhkPointSet;

// An optimal line isometry: apply `x -> -x` first when `reflect` is
// nonzero, then translate by `shift`; `value` is the Hausdorff distance
// achieved.
typedef struct GhkAlignment {
  double value;
  double shift;
  int32_t reflect;
} GhkAlignment;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Library version as a static C string.
const char *ghk_version(void);

// Builds a point set from `len` values. The values need not be sorted;
// duplicates and non-finite values are rejected with
// `InvalidArgument`.
//
// # Safety
// `values` must point to `len` readable doubles and `out` must be a
// valid destination pointer.
enum GhkStatus ghk_point_set_new(const double *values, size_t len, struct GhkPointSet **out);

// # Safety
// `ps` must be null or a pointer returned by `ghk_point_set_new`.
void ghk_point_set_free(struct GhkPointSet *ps);

// Number of points in the set; 0 for a null handle.
//
// # Safety
// `ps` must be null or a live point-set handle.
size_t ghk_point_set_len(const struct GhkPointSet *ps);

// Validates a row-major `n x n` matrix as a finite metric space.
// Returns `AxiomViolation` when an axiom fails beyond tolerance.
//
// # Safety
// `entries` must point to `n * n` readable doubles and `out` must be a
// valid destination pointer.
enum GhkStatus ghk_metric_space_from_matrix(const double *entries,
                                            size_t n,
                                            struct GhkMetricSpace **out);

// Realizes a point set on the line as a metric space.
//
// # Safety
// `ps` must be a live point-set handle and `out` a valid destination.
enum GhkStatus ghk_metric_space_from_points(const struct GhkPointSet *ps,
                                            struct GhkMetricSpace **out);

// # Safety
// `space` must be null or a live metric-space handle.
void ghk_metric_space_free(struct GhkMetricSpace *space);

// Number of points; 0 for a null handle.
//
// # Safety
// `space` must be null or a live metric-space handle.
size_t ghk_metric_space_size(const struct GhkMetricSpace *space);

// Hausdorff distance between two point sets.
//
// # Safety
// `x` and `y` must be live point-set handles, `out` a valid destination.
enum GhkStatus ghk_hausdorff(const struct GhkPointSet *x, const struct GhkPointSet *y, double *out);

// Exact Euclidean-Hausdorff distance: the optimal alignment of `y`
// against `x` over all isometries of the line.
//
// # Safety
// `x` and `y` must be live point-set handles, `out` a valid destination.
enum GhkStatus ghk_eh_distance(const struct GhkPointSet *x,
                               const struct GhkPointSet *y,
                               struct GhkAlignment *out);

// Exact Gromov-Hausdorff distance. `guard` caps the per-space size of
// the branch-and-bound search (8 is the library default); larger
// inputs return `SizeGuardExceeded`.
//
// # Safety
// `x` and `y` must be live metric-space handles, `out` a valid
// destination pointer.
enum GhkStatus ghk_gh_exact(const struct GhkMetricSpace *x,
                            const struct GhkMetricSpace *y,
                            size_t guard,
                            struct GhkGhResult **out);

// # Safety
// `result` must be null or a live result handle.
void ghk_gh_result_free(struct GhkGhResult *result);

// The distance value; NaN for a null handle.
//
// # Safety
// `result` must be null or a live result handle.
double ghk_gh_result_value(const struct GhkGhResult *result);

// Lower bound from the distance-set invariant.
//
// # Safety
// `result` must be null or a live result handle.
double ghk_gh_result_lower_bound_distance_set(const struct GhkGhResult *result);

// Lower bound from the diameter gap.
//
// # Safety
// `result` must be null or a live result handle.
double ghk_gh_result_lower_bound_diameter(const struct GhkGhResult *result);

// Number of pairs in the witness correspondence.
//
// # Safety
// `result` must be null or a live result handle.
size_t ghk_gh_result_witness_len(const struct GhkGhResult *result);

// Fetches witness pair `index` into `(i_out, j_out)`.
//
// # Safety
// `result` must be a live result handle and the out parameters valid
// destinations.
enum GhkStatus ghk_gh_result_witness_pair(const struct GhkGhResult *result,
                                          size_t index,
                                          size_t *i_out,
                                          size_t *j_out);

// Ordinal of the cube block `(m, n)` in the diagonal enumeration;
// `InvalidArgument` when either side is zero.
//
// # Safety
// `out` must be a valid destination pointer.
enum GhkStatus ghk_block_ordinal(uint64_t m, uint64_t n, uint64_t *out);

// Inverse of `ghk_block_ordinal`.
//
// # Safety
// `m_out` and `n_out` must be valid destination pointers.
enum GhkStatus ghk_block_from_ordinal(uint64_t k, uint64_t *m_out, uint64_t *n_out);

// The separation constant of block `(m, n)`; `OverflowGuard` when the
// ordinal exceeds the 64-bit recursion guard.
//
// # Safety
// `out` must be a valid destination pointer.
enum GhkStatus ghk_separation_constant(uint64_t m, uint64_t n, uint64_t *out);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* GHKIT_H */
