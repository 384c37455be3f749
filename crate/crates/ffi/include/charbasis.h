/* C interface to the charbasis library. All json out-parameters are
 * NUL-terminated UTF-8 owned by the library; release them with
 * charbasis_string_free. */

#ifndef CHARBASIS_H
#define CHARBASIS_H

/* Generated by cbindgen; do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes; nonzero values describe the failure class.
 */
typedef enum CharbasisStatus {
  CHARBASIS_STATUS_OK = 0,
  CHARBASIS_STATUS_INTERNAL_ERROR = 1,
  CHARBASIS_STATUS_RESOURCE_LIMIT = 2,
  CHARBASIS_STATUS_VERIFICATION_FAILED = 3,
  CHARBASIS_STATUS_INVALID_ARGUMENT = 4,
  CHARBASIS_STATUS_NULL_POINTER = 5,
} CharbasisStatus;

/**
 * Opaque configuration handle.
 */
typedef struct CharbasisContext CharbasisContext;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Library version as a static string; do not free.
 */
const char *charbasis_version(void);

/**
 * Most recent error message on this thread, or NULL. Owned by the caller;
 * release with `charbasis_string_free`.
 */
char *charbasis_last_error_message(void);

/**
 * Creates a context with the default resource bounds.
 */
struct CharbasisContext *charbasis_context_new(void);

/**
 * Destroys a context. NULL is tolerated.
 *
 * # Safety
 * `ctx` must be NULL or a pointer obtained from `charbasis_context_new`
 * that has not been freed yet.
 */
void charbasis_context_free(struct CharbasisContext *ctx);

/**
 * Overrides the resource bounds: `n_max` governs symmetric and alternating
 * checks, `w_max` the mixed wreath check.
 *
 * # Safety
 * `ctx` must be a live pointer from `charbasis_context_new`.
 */
enum CharbasisStatus charbasis_context_set_bounds(struct CharbasisContext *ctx,
                                                  uint32_t n_max,
                                                  uint32_t w_max);

/**
 * Writes the exact character table of the group ("sn" or "an") on `n`
 * letters as JSON.
 *
 * # Safety
 * `group` must be a NUL-terminated string; `out_json` a valid pointer.
 */
enum CharbasisStatus charbasis_table_json(const struct CharbasisContext *ctx,
                                          const char *group,
                                          uint32_t n,
                                          char **out_json);

/**
 * Writes the basic-set listing for "sn" or "an" as JSON.
 *
 * # Safety
 * `group` must be a NUL-terminated string; `out_json` a valid pointer.
 */
enum CharbasisStatus charbasis_basic_set_json(const struct CharbasisContext *_ctx,
                                              const char *group,
                                              uint32_t n,
                                              char **out_json);

/**
 * Writes the 2-block structure of the symmetric group on `n` letters.
 *
 * # Safety
 * `out_json` must be a valid pointer.
 */
enum CharbasisStatus charbasis_blocks_json(uint32_t n, char **out_json);

/**
 * Writes the 2-core, 2-quotient and membership data of one partition,
 * given in "4+2+1" or "[4,2,1]" form.
 *
 * # Safety
 * `partition` must be a NUL-terminated string; `out_json` a valid pointer.
 */
enum CharbasisStatus charbasis_quotient_json(const char *partition, char **out_json);

/**
 * Runs one verification claim ("sn", "an", "base", "isometry", "wreath",
 * or "main") at one parameter value and writes the certificates. Returns
 * `VERIFICATION_FAILED` when a certificate reports failure; the JSON is
 * still written in that case.
 *
 * # Safety
 * `claim` must be a NUL-terminated string; `out_json` a valid pointer.
 */
enum CharbasisStatus charbasis_verify_json(const struct CharbasisContext *ctx,
                                           const char *claim,
                                           uint32_t parameter,
                                           char **out_json);

/**
 * Releases a string returned by this library. NULL is tolerated.
 *
 * # Safety
 * `s` must be NULL or a pointer produced by this library that has not
 * been freed yet.
 */
void charbasis_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CHARBASIS_H */
