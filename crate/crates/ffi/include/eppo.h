/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#ifndef EPPO_H
#define EPPO_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum EppoStatus {
  EPPO_STATUS_OK = 0,
  EPPO_STATUS_NULL_POINTER = 1,
  EPPO_STATUS_INVALID_UTF8 = 2,
  EPPO_STATUS_PARSE = 3,
  EPPO_STATUS_INVALID_SOURCE = 4,
  EPPO_STATUS_THRESHOLD_EXCEEDED = 5,
  EPPO_STATUS_IO = 6,
  EPPO_STATUS_INVALID_ARGUMENT = 7,
  /**
   * The output buffer is too small; the required length was written.
   */
  EPPO_STATUS_BUFFER_TOO_SMALL = 8,
  EPPO_STATUS_INTERNAL = 9,
} EppoStatus;

typedef enum EppoVerdict {
  EPPO_VERDICT_EPPO = 0,
  EPPO_VERDICT_NOT_EPPO = 1,
  /**
   * Sampled elements all had prime power order; not a proof.
   */
  EPPO_VERDICT_SAMPLED_CONSISTENT = 2,
} EppoVerdict;

/**
 * Opaque group handle.
 */
typedef struct EppoGroup EppoGroup;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Parses a permutation group in the text format: a `degree N` line, then
 * one generator per line in 1-based cycle notation.
 *
 * # Safety
 * `text` must be a nul-terminated string and `out` a valid pointer.
 */
enum EppoStatus eppo_group_from_text(const char *text, struct EppoGroup **out);

/**
 * Loads `file:<path>`, `catalog:<name>` or a constructor spec such as
 * `metacyclic p=7 a=1 q=3 b=1`.
 *
 * # Safety
 * `source` must be a nul-terminated string and `out` a valid pointer.
 */
enum EppoStatus eppo_group_from_source(const char *source, struct EppoGroup **out);

/**
 * Releases a handle; null is ignored.
 *
 * # Safety
 * `group` must come from `eppo_group_from_*` and not be used afterwards.
 */
void eppo_group_free(struct EppoGroup *group);

/**
 * # Safety
 * `group` must be a live handle and `out` a valid pointer.
 */
enum EppoStatus eppo_group_order(const struct EppoGroup *group, uint64_t *out);

/**
 * Number of points the group acts on (the order, for constructed groups).
 *
 * # Safety
 * `group` must be a live handle and `out` a valid pointer.
 */
enum EppoStatus eppo_group_degree(const struct EppoGroup *group, uint64_t *out);

/**
 * Decides whether every element has prime power order. Groups above
 * `threshold` (0 selects the default) are sampled with `samples` random
 * elements; `samples = 0` refuses them. `witness_order` may be null; it
 * receives the composite order found, or 0.
 *
 * # Safety
 * `group` must be a live handle; `verdict` a valid pointer.
 */
enum EppoStatus eppo_is_eppo(const struct EppoGroup *group,
                             uint64_t threshold,
                             uint64_t samples,
                             uint64_t seed,
                             enum EppoVerdict *verdict,
                             uint64_t *witness_order);

/**
 * Writes the sorted element orders into `orders` and their count into
 * `len`. When `capacity` is too small, only `len` is written and
 * `BufferTooSmall` returned.
 *
 * # Safety
 * `orders` must have room for `capacity` values; `len` must be valid.
 */
enum EppoStatus eppo_spectrum(const struct EppoGroup *group,
                              uint64_t threshold,
                              uint64_t *orders,
                              uintptr_t capacity,
                              uintptr_t *len);

/**
 * Orders seen among `samples` random elements drawn with `seed`; a subset
 * of the spectrum.
 *
 * # Safety
 * As for `eppo_spectrum`.
 */
enum EppoStatus eppo_spectrum_sampled(const struct EppoGroup *group,
                                      uint64_t samples,
                                      uint64_t seed,
                                      uint64_t *orders,
                                      uintptr_t capacity,
                                      uintptr_t *len);

/**
 * Classification report as `key: value` lines. The string is owned by the
 * caller and released with `eppo_string_free`.
 *
 * # Safety
 * `group` must be a live handle and `report` a valid pointer.
 */
enum EppoStatus eppo_classify(const struct EppoGroup *group,
                              uint64_t threshold,
                              uint64_t samples,
                              uint64_t seed,
                              char **report);

/**
 * # Safety
 * `s` must come from this library and not be used afterwards; null is ignored.
 */
void eppo_string_free(char *s);

/**
 * Whether a normal 2-subgroup of order `2^exponent` is arithmetically
 * allowed below the named simple quotient (`PSL2(5)`, `PSL2(8)`,
 * `PSL2(17)`, `Sz(8)`, `Sz(32)`). `exponent` ranges over 1 to 127.
 *
 * # Safety
 * `simple` must be a nul-terminated string and `out` a valid pointer.
 */
enum EppoStatus eppo_extension_constraint(const char *simple, uint32_t exponent, bool *out);

/**
 * Message for the last failed call on this thread, or an empty string.
 * Valid until the next call into the library from this thread.
 */
const char *eppo_last_error_message(void);

/**
 * Library version, a static string.
 */
const char *eppo_version(void);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* EPPO_H */
