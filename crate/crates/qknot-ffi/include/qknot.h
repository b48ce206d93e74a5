#ifndef QKNOT_H
#define QKNOT_H

/* Generated by cbindgen from qknot-ffi. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status code returned by every fallible function.
 */
typedef enum QkStatus {
  QK_STATUS_OK = 0,
  QK_STATUS_NULL_POINTER = 1,
  QK_STATUS_UTF8 = 2,
  QK_STATUS_PARSE = 3,
  QK_STATUS_INVALID = 4,
  QK_STATUS_NOT_ON_QUADRIC = 5,
  QK_STATUS_ON_CURVE = 6,
  QK_STATUS_DEGENERATE = 7,
  QK_STATUS_EXHAUSTED = 8,
  QK_STATUS_PARITY = 9,
  QK_STATUS_CENTER_DISAGREEMENT = 10,
  QK_STATUS_NUMERIC = 11,
  QK_STATUS_NOT_FOUND = 12,
  QK_STATUS_PANIC = 13,
} QkStatus;

/**
 * Opaque curve handle.
 */
typedef struct QkCurve QkCurve;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message of the last failed call on this thread, or null. The pointer stays
 * valid until the next call into the library from this thread.
 */
const char *qk_last_error(void);

/**
 * Library version as a static string.
 */
const char *qk_version(void);

/**
 * # Safety
 * `s` must be null or a string returned by this library.
 */
void qk_string_free(char *s);

/**
 * # Safety
 * `c` must be null or a handle returned by this library.
 */
void qk_curve_free(struct QkCurve *c);

/**
 * Parse a curve document.
 *
 * # Safety
 * `json` must be a nul-terminated string and `out` writable.
 */
enum QkStatus qk_curve_from_json(const char *json, struct QkCurve **out);

/**
 * Serialize a curve; free the result with `qk_string_free`.
 *
 * # Safety
 * `c` must be a valid handle and `out` writable.
 */
enum QkStatus qk_curve_to_json(const struct QkCurve *c, char **out);

/**
 * Curve of a catalog entry.
 *
 * # Safety
 * `id` must be a nul-terminated string and `out` writable.
 */
enum QkStatus qk_catalog_curve(const char *id, struct QkCurve **out);

/**
 * # Safety
 * `c` must be a valid handle and `out` writable.
 */
enum QkStatus qk_curve_degree(const struct QkCurve *c, size_t *out);

/**
 * True for a curve in RP4, false for a curve in the slice x0 = 0.
 *
 * # Safety
 * `c` must be a valid handle and `out` writable.
 */
enum QkStatus qk_curve_in_rp4(const struct QkCurve *c, bool *out);

/**
 * Whether the curve lies on the quadric, decided exactly.
 *
 * # Safety
 * `c` must be a valid handle and `out` writable.
 */
enum QkStatus qk_curve_on_quadric(const struct QkCurve *c, bool *out);

/**
 * Whether the curve has no double points and no cusps.
 *
 * # Safety
 * `c` must be a valid handle and `out` writable.
 */
enum QkStatus qk_curve_is_knot(const struct QkCurve *c, bool *out);

/**
 * Number of double points, real and complex, without multiplicity.
 *
 * # Safety
 * `c` must be a valid handle and `out` writable.
 */
enum QkStatus qk_curve_double_points(const struct QkCurve *c, size_t *out);

/**
 * Writhe of a knot. Curves on the quadric are projected first.
 *
 * # Safety
 * `c` must be a valid handle and `out` writable.
 */
enum QkStatus qk_curve_writhe(const struct QkCurve *c, int64_t *out);

/**
 * Project a quadric curve from a quadric point off it. `point` is written
 * as `[a:b:c:d:e]` with rational or `a+b√2` entries.
 *
 * # Safety
 * `c` must be a valid handle, `point` a nul-terminated string, `out` writable.
 */
enum QkStatus qk_curve_project(const struct QkCurve *c, const char *point, struct QkCurve **out);

/**
 * Lift a slice curve back to the quadric.
 *
 * # Safety
 * `c` must be a valid handle and `out` writable.
 */
enum QkStatus qk_curve_pullback(const struct QkCurve *c, struct QkCurve **out);

/**
 * Glue two knots meeting in one point. Both must live in the same ambient.
 *
 * # Safety
 * `a` and `b` must be valid handles and `out` writable.
 */
enum QkStatus qk_glue(const struct QkCurve *a,
                      const struct QkCurve *b,
                      bool reverse,
                      struct QkCurve **out);

/**
 * Exact rank of the differential of the quadric equation at the curve and
 * the full-rank value `2d + 1`.
 *
 * # Safety
 * `c` must be a valid handle; `rank` and `expected` must be writable.
 */
enum QkStatus qk_curve_jacobian_rank(const struct QkCurve *c, size_t *rank, size_t *expected);

#ifdef __cplusplus
} // extern "C"
#endif // __cplusplus

#endif /* QKNOT_H */
