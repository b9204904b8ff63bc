#ifndef HITWORK_H
#define HITWORK_H

/* Generated by cbindgen from crates/ffi. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes.
 */
typedef enum HwStatus {
  HW_STATUS_OK = 0,
  HW_STATUS_NULL_POINTER = 1,
  HW_STATUS_INVALID_ARGUMENT = 2,
  HW_STATUS_PARSE_ERROR = 3,
  HW_STATUS_BUFFER_TOO_SMALL = 4,
  HW_STATUS_DEGREE_CAP = 5,
  HW_STATUS_INTERNAL = 6,
} HwStatus;

/**
 * `Q_k(d)`, opaque to C.
 */
typedef struct HwQuotient HwQuotient;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Computes `Q_k(d)` and stores a new handle in `*out`.
 *
 * # Safety
 * `out` must be null or writable.
 */
enum HwStatus hw_quotient_new(uint32_t k, uint32_t d, struct HwQuotient **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `q` must be null or a handle from [`hw_quotient_new`] not yet freed.
 */
void hw_quotient_free(struct HwQuotient *q);

/**
 * `dim Q_k(d)`, or 0 for a null handle.
 *
 * # Safety
 * `q` must be null or a live handle.
 */
size_t hw_quotient_dim(const struct HwQuotient *q);

/**
 * Sets `*out` to whether `poly` (text form, e.g. `(2,1,0,5)+(1,1,0,6)`) is hit.
 *
 * # Safety
 * `q` a live handle, `poly` a NUL-terminated string, `out` writable.
 */
enum HwStatus hw_quotient_is_hit(const struct HwQuotient *q, const char *poly, bool *out);

/**
 * Dimension of the `GL_k`-invariants of the quotient.
 *
 * # Safety
 * `q` a live handle, `out` writable.
 */
enum HwStatus hw_quotient_invariants_dim(const struct HwQuotient *q, size_t *out);

/**
 * Writes representative `index` (ascending lexicographic order) as text.
 *
 * # Safety
 * `q` a live handle; `buf` valid for `len` bytes; `needed` null or writable.
 */
enum HwStatus hw_quotient_rep(const struct HwQuotient *q,
                              size_t index,
                              char *buf,
                              size_t len,
                              size_t *needed);

/**
 * Applies the antipode of `Sq^n` to `poly` in `k` variables and writes the result.
 *
 * # Safety
 * `poly` a NUL-terminated string; `buf` valid for `len` bytes; `needed` null or writable.
 */
enum HwStatus hw_chi_apply(uint32_t n,
                           uint32_t k,
                           const char *poly,
                           char *buf,
                           size_t len,
                           size_t *needed);

/**
 * Copies the calling thread's last error message into `buf` (truncated to
 * fit) and returns its full length including the NUL.
 *
 * # Safety
 * `buf` must be null or valid for `len` bytes.
 */
size_t hw_last_error(char *buf, size_t len);

/**
 * Library version as a static NUL-terminated string.
 */
const char *hw_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HITWORK_H */
