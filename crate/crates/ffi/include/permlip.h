#ifndef PERMLIP_H
#define PERMLIP_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Counting engine selector, passed as its integer value.
 */
typedef enum PermlipEngine {
  PERMLIP_ENGINE_BRUTE = 0,
  PERMLIP_ENGINE_CLOSED = 1,
  PERMLIP_ENGINE_RECURRENCE = 2,
  PERMLIP_ENGINE_GF = 3,
} PermlipEngine;

/*
 Result of every fallible call.
 */
typedef enum PermlipStatus {
  PERMLIP_STATUS_OK = 0,
  /*
   Bad `n`, `m`, engine, tolerance or permutation.
   */
  PERMLIP_STATUS_INVALID_ARGUMENT = 1,
  /*
   Brute force was asked for `n` above the enumeration ceiling.
   */
  PERMLIP_STATUS_CEILING_EXCEEDED = 2,
  /*
   A required pointer argument was null.
   */
  PERMLIP_STATUS_NULL_POINTER = 3,
  /*
   The requested value does not exist (for example no growth estimate).
   */
  PERMLIP_STATUS_UNAVAILABLE = 4,
  /*
   A numerical routine failed (no dominant root, overflow, ...).
   */
  PERMLIP_STATUS_NUMERIC = 5,
  /*
   Internal error; the library caught a panic.
   */
  PERMLIP_STATUS_PANIC = 6,
} PermlipStatus;

/*
 Opaque growth profile for one adjacency bound.
 */
typedef struct PermlipProfile PermlipProfile;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the last failed call on this thread; empty after success.
 Never null. Do not free.
 */
const char *permlip_last_error(void);

/*
 Releases a string returned by this library. Null is a no-op.

 # Safety
 `s` must come from this library and must not be freed twice.
 */
void permlip_string_free(char *s);

/*
 Library version as a static NUL-terminated string.
 */
const char *permlip_version(void);

/*
 Writes the decimal string of `A_n^(m)` computed by `engine` (a
 [`PermlipEngine`] value) to `*out`. Brute force honours the
 `PERMLIP_CEILING` environment variable.

 # Safety
 `out` must be valid for a pointer write.
 */
enum PermlipStatus permlip_count(size_t n, uint32_t m, uint32_t engine, char **out);

/*
 Sets `*out` to whether the permutation `word[0..len]` (one-line
 notation over `1..=len`) avoids 132.

 # Safety
 `word` must point to `len` readable `u32`s; `out` must be writable.
 */
enum PermlipStatus permlip_avoids_132(const uint32_t *word, size_t len, bool *out);

/*
 Sets `*out` to whether `word[0..len]` avoids 132 and has every pair of
 adjacent entries differing by at most `m`.

 # Safety
 `word` must point to `len` readable `u32`s; `out` must be writable.
 */
enum PermlipStatus permlip_in_class(const uint32_t *word, size_t len, uint32_t m, bool *out);

/*
 Dominant singularity `rho`, growth constant `alpha = 1/rho` and
 amplitude `C` for `m = 2`, computed to `tolerance` (in `(0, 1e-6)`).
 Any output pointer may be null to skip it.

 # Safety
 Non-null pointers must be writable.
 */
enum PermlipStatus permlip_asymptotics(double tolerance,
                                       double *rho,
                                       double *alpha,
                                       double *amplitude);

/*
 Builds the growth profile of `A^(m)` for `n = 1..=n_max` by brute force
 and stores a new handle in `*out`.

 # Safety
 `out` must be valid for a pointer write.
 */
enum PermlipStatus permlip_profile_build(uint32_t m, size_t n_max, struct PermlipProfile **out);

/*
 Releases a profile. Null is a no-op.

 # Safety
 `profile` must come from [`permlip_profile_build`] and not be freed twice.
 */
void permlip_profile_free(struct PermlipProfile *profile);

/*
 Number of terms in the profile (its `n_max`), or 0 for null.

 # Safety
 `profile` must be null or a live handle.
 */
size_t permlip_profile_len(const struct PermlipProfile *profile);

/*
 Writes the decimal string of `A_n^(m)`, `1 <= n <= len`, to `*out`.

 # Safety
 `profile` must be a live handle; `out` must be writable.
 */
enum PermlipStatus permlip_profile_term(const struct PermlipProfile *profile, size_t n, char **out);

/*
 Growth-constant estimate. `*low_confidence` (if non-null) is set to true
 when the estimate is a ratio of consecutive terms rather than the root
 of a fitted recurrence. Returns `UNAVAILABLE` when there is no estimate.

 # Safety
 `profile` must be a live handle; non-null outputs must be writable.
 */
enum PermlipStatus permlip_profile_alpha(const struct PermlipProfile *profile,
                                         double *alpha,
                                         bool *low_confidence);

/*
 Writes the profile as JSON to `*out` (counts as decimal strings).

 # Safety
 `profile` must be a live handle; `out` must be writable.
 */
enum PermlipStatus permlip_profile_to_json(const struct PermlipProfile *profile, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* PERMLIP_H */
