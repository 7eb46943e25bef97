#ifndef TRIREC_H
#define TRIREC_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum TrirecStatus {
  TRIREC_STATUS_OK = 0,
  TRIREC_STATUS_NULL_POINTER = 1,
  TRIREC_STATUS_INVALID_ARGUMENT = 2,
  TRIREC_STATUS_UNKNOWN_NAME = 3,
  TRIREC_STATUS_PARSE = 4,
  TRIREC_STATUS_NEGATIVE_WEIGHT = 5,
  TRIREC_STATUS_OUT_OF_RANGE = 6,
  TRIREC_STATUS_BUFFER_TOO_SMALL = 7,
  TRIREC_STATUS_PANIC = 8,
} TrirecStatus;

typedef enum TrirecCondition {
  TRIREC_CONDITION_KURTZ = 0,
  TRIREC_CONDITION_SAGAN = 1,
  TRIREC_CONDITION_MAIN = 2,
  /**
   * Direct row scan.
   */
  TRIREC_CONDITION_ROW_SCAN = 3,
} TrirecCondition;

/**
 * Rows `n0..=max_n` of a built array.
 */
typedef struct TrirecArray TrirecArray;

/**
 * Weights plus anchor.
 */
typedef struct TrirecSpec TrirecSpec;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Static description of a status code.
 */
const char *trirec_status_message(enum TrirecStatus status);

/**
 * Message of the last failed call on this thread (empty after a success).
 *
 * # Safety
 * `buf` must be writable for `len` bytes; `needed` may be null.
 */
enum TrirecStatus trirec_last_error(char *buf, size_t len, size_t *needed);

/**
 * Catalog family `name` with exponent `l` and shift `r`; other parameters take their defaults.
 *
 * # Safety
 * `name` must be a NUL-terminated string and `out` a valid pointer.
 */
enum TrirecStatus trirec_spec_from_catalog(const char *name,
                                           uint32_t l,
                                           uint32_t r,
                                           struct TrirecSpec **out);

/**
 * `c=EXPR;d=EXPR` raised to the power `l`, anchored at `(n0, k0)`.
 *
 * # Safety
 * `src` must be a NUL-terminated string and `out` a valid pointer.
 */
enum TrirecStatus trirec_spec_from_inline(const char *src,
                                          uint32_t l,
                                          int64_t n0,
                                          int64_t k0,
                                          struct TrirecSpec **out);

/**
 * `c = (p0 n + p1 k + p2)^l`, `d = (p3 n + p4 k + p5)^l`, anchored at `(n0, k0)`.
 *
 * # Safety
 * `params` must point to six integers and `out` must be valid.
 */
enum TrirecStatus trirec_spec_from_affine(const int64_t *params,
                                          uint32_t l,
                                          int64_t n0,
                                          int64_t k0,
                                          struct TrirecSpec **out);

/**
 * # Safety
 * `spec` must come from a `trirec_spec_from_*` call and not be used afterwards.
 */
void trirec_spec_free(struct TrirecSpec *spec);

/**
 * # Safety
 * `spec` must be a live handle; `buf` writable for `len` bytes.
 */
enum TrirecStatus trirec_spec_description(const struct TrirecSpec *spec,
                                          char *buf,
                                          size_t len,
                                          size_t *needed);

/**
 * # Safety
 * `spec` must be a live handle and `n0`, `k0` valid pointers.
 */
enum TrirecStatus trirec_spec_anchor(const struct TrirecSpec *spec, int64_t *n0, int64_t *k0);

/**
 * Runs a sufficient-condition checker (or the row scan) up to row `max_n`.
 * `which` is a [`TrirecCondition`] value.
 *
 * # Safety
 * `spec` must be a live handle and `holds` a valid pointer.
 */
enum TrirecStatus trirec_check(const struct TrirecSpec *spec,
                               uint32_t which,
                               int64_t max_n,
                               bool *holds);

/**
 * Builds rows `n0..=max_n`.
 *
 * # Safety
 * `spec` must be a live handle and `out` a valid pointer.
 */
enum TrirecStatus trirec_array_build(const struct TrirecSpec *spec,
                                     int64_t max_n,
                                     struct TrirecArray **out);

/**
 * # Safety
 * `array` must come from [`trirec_array_build`] and not be used afterwards.
 */
void trirec_array_free(struct TrirecArray *array);

/**
 * Last built row, or -1 for a null handle.
 *
 * # Safety
 * `array` must be null or a live handle.
 */
int64_t trirec_array_max_n(const struct TrirecArray *array);

/**
 * `T(n,k)` as a decimal string; zero outside the triangle.
 *
 * # Safety
 * `array` must be a live handle; `buf` writable for `len` bytes.
 */
enum TrirecStatus trirec_array_get(const struct TrirecArray *array,
                                   int64_t n,
                                   int64_t k,
                                   char *buf,
                                   size_t len,
                                   size_t *needed);

/**
 * Row `n` (structural columns) as comma-separated decimals.
 *
 * # Safety
 * `array` must be a live handle; `buf` writable for `len` bytes.
 */
enum TrirecStatus trirec_array_row(const struct TrirecArray *array,
                                   int64_t n,
                                   char *buf,
                                   size_t len,
                                   size_t *needed);

/**
 * Whether row `n` is log-concave.
 *
 * # Safety
 * `array` must be a live handle and `out` a valid pointer.
 */
enum TrirecStatus trirec_array_row_log_concave(const struct TrirecArray *array,
                                               int64_t n,
                                               bool *out);

/**
 * Coefficients of the `(l)`-Eulerian polynomial of row `n`, comma-separated.
 *
 * # Safety
 * `buf` must be writable for `len` bytes; `needed` may be null.
 */
enum TrirecStatus trirec_eulerian_row(uint32_t n,
                                      uint32_t l,
                                      char *buf,
                                      size_t len,
                                      size_t *needed);

/**
 * Maps a subexceedant function to a permutation, or back when `inverse` is set.
 * Words use one-line digits, comma-separated beyond 9.
 *
 * # Safety
 * `word` must be a NUL-terminated string; `buf` writable for `len` bytes.
 */
enum TrirecStatus trirec_lambda(const char *word,
                                bool inverse,
                                char *buf,
                                size_t len,
                                size_t *needed);

/**
 * Library version, NUL-terminated.
 */
const char *trirec_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* TRIREC_H */
