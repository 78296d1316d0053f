#ifndef BRAIDKNOT_H
#define BRAIDKNOT_H

/* Generated by cbindgen from crates/ffi/src/lib.rs. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum BraidknotStatus {
  BRAIDKNOT_STATUS_OK = 0,
  BRAIDKNOT_STATUS_NULL_POINTER = 1,
  BRAIDKNOT_STATUS_INVALID_UTF8 = 2,
  BRAIDKNOT_STATUS_PARSE = 3,
  BRAIDKNOT_STATUS_INVALID_ARGUMENT = 4,
  BRAIDKNOT_STATUS_RESOURCE_LIMIT = 5,
  /**
   * A suite ran but some case had an unexpected verdict.
   */
  BRAIDKNOT_STATUS_MISMATCH = 6,
  BRAIDKNOT_STATUS_INTERNAL = 7,
} BraidknotStatus;

/**
 * Opaque braid word.
 */
typedef struct BraidknotBraid BraidknotBraid;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses `n: e1 e2 ...` into a new handle.
 *
 * # Safety
 * `text` must be a NUL-terminated string and `out` a valid pointer.
 */
enum BraidknotStatus braidknot_braid_parse(const char *text, struct BraidknotBraid **out);

/**
 * Builds a family braid from a spec such as `ttk 8 3 7 -1` or
 * `klink 3,2 2,1`. `relaxed` nonzero skips the families' standing
 * hypotheses.
 *
 * # Safety
 * `spec` must be a NUL-terminated string and `out` a valid pointer.
 */
enum BraidknotStatus braidknot_braid_build(const char *spec,
                                           int32_t relaxed,
                                           struct BraidknotBraid **out);

/**
 * Releases a handle. Null is ignored.
 *
 * # Safety
 * `braid` must come from this library and not be used afterwards.
 */
void braidknot_braid_free(struct BraidknotBraid *braid);

/**
 * # Safety
 * `braid` must be a live handle and `out` a valid pointer.
 */
enum BraidknotStatus braidknot_braid_strands(const struct BraidknotBraid *braid, size_t *out);

/**
 * # Safety
 * `braid` must be a live handle and `out` a valid pointer.
 */
enum BraidknotStatus braidknot_braid_components(const struct BraidknotBraid *braid, size_t *out);

/**
 * The word in `n: e1 e2 ...` form.
 *
 * # Safety
 * `braid` must be a live handle and `out` a valid pointer.
 */
enum BraidknotStatus braidknot_braid_to_string(const struct BraidknotBraid *braid, char **out);

/**
 * Normalized Alexander polynomial, rendered as text.
 *
 * # Safety
 * `braid` must be a live handle and `out` a valid pointer.
 */
enum BraidknotStatus braidknot_alexander(const struct BraidknotBraid *braid, char **out);

/**
 * Jones polynomial, rendered as text. Subject to the environment limits.
 *
 * # Safety
 * `braid` must be a live handle and `out` a valid pointer.
 */
enum BraidknotStatus braidknot_jones(const struct BraidknotBraid *braid, char **out);

/**
 * Invariant fingerprint as JSON. `full` nonzero includes Jones when within
 * limits.
 *
 * # Safety
 * `braid` must be a live handle and `out` a valid pointer.
 */
enum BraidknotStatus braidknot_fingerprint_json(const struct BraidknotBraid *braid,
                                                int32_t full,
                                                char **out);

/**
 * Compares two closures; the verdict is written as JSON.
 *
 * # Safety
 * `a` and `b` must be live handles and `out` a valid pointer.
 */
enum BraidknotStatus braidknot_check_equivalent(const struct BraidknotBraid *a,
                                                const struct BraidknotBraid *b,
                                                int32_t full,
                                                char **out);

/**
 * Runs a suite and writes its report as JSON. `params` may be null for the
 * suite defaults, or hold tuples like `"5,2,1;7,3,1"`. Returns
 * `Mismatch` (with the report written) when a case had an unexpected
 * verdict.
 *
 * # Safety
 * `suite` must be a NUL-terminated string, `params` null or one, and `out`
 * a valid pointer.
 */
enum BraidknotStatus braidknot_verify_suite(const char *suite, const char *params, char **out);

/**
 * Releases a string returned by this library. Null is ignored.
 *
 * # Safety
 * `s` must come from this library and not be used afterwards.
 */
void braidknot_string_free(char *s);

/**
 * Message for the last failed call on this thread, or an empty string
 * after a successful call. The pointer stays valid for the thread's
 * lifetime; its contents change with each call. Messages are truncated to
 * 511 bytes.
 */
const char *braidknot_last_error(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* BRAIDKNOT_H */
