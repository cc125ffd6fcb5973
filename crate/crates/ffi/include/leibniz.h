#ifndef LEIBNIZ_H
#define LEIBNIZ_H

/* Generated by cbindgen from crates/ffi/src. Do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/*
 Output format for `lz_tabulate`.
 */
typedef enum LzFormat {
  LZ_FORMAT_TSV = 0,
  LZ_FORMAT_JSONL = 1,
} LzFormat;

/*
 Result codes shared by every function in this library.
 */
typedef enum LzStatus {
  LZ_STATUS_OK = 0,
  LZ_STATUS_NULL_POINTER = 1,
  LZ_STATUS_INVALID_UTF8 = 2,
  LZ_STATUS_PARSE_ERROR = 3,
  LZ_STATUS_DOMAIN_ERROR = 4,
  LZ_STATUS_EVAL_ERROR = 5,
  /*
   A sweep ran and found a counterexample.
   */
  LZ_STATUS_FAIL = 6,
  LZ_STATUS_OVERFLOW = 7,
  LZ_STATUS_PANIC = 8,
} LzStatus;

/*
 A parsed and built arithmetic function.
 */
typedef struct LzFunction LzFunction;

/*
 Smallest-prime-factor sieve shared by evaluations.
 */
typedef struct LzSieve LzSieve;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/*
 Message for the last failed call on this thread, or NULL. The pointer is
 valid until the next call into this library from the same thread.
 */
const char *lz_last_error(void);

/*
 Releases a string returned by this library. NULL is ignored.

 # Safety
 `s` must come from this library and not have been freed.
 */
void lz_string_free(char *s);

/*
 Builds a sieve covering `2..=limit` (`limit >= 2`).

 # Safety
 `out` must be a valid pointer to writable storage.
 */
enum LzStatus lz_sieve_new(size_t limit, struct LzSieve **out);

/*
 # Safety
 `sieve` must come from `lz_sieve_new` and not have been freed. NULL is ignored.
 */
void lz_sieve_free(struct LzSieve *sieve);

/*
 Parses a function expression such as `"conv(D, N)"`. On a syntax error
 the byte offset is stored in `error_position` when it is non-NULL.

 # Safety
 `spec` must be a NUL-terminated string; `out` must be writable.
 */
enum LzStatus lz_function_parse(const char *spec, struct LzFunction **out, size_t *error_position);

/*
 # Safety
 `f` must come from `lz_function_parse` and not have been freed. NULL is ignored.
 */
void lz_function_free(struct LzFunction *f);

/*
 Evaluates `f` at the decimal positive integer `n`. The value is written
 as `a` or `a/b` in lowest terms.

 # Safety
 Pointers must be valid; `n` NUL-terminated.
 */
enum LzStatus lz_function_eval(const struct LzFunction *f,
                               const struct LzSieve *sieve,
                               const char *n,
                               char **out);

/*
 Arithmetic derivative of `n >= 1` as a 64-bit integer. Returns
 `LZ_STATUS_OVERFLOW` when the value does not fit.

 # Safety
 `sieve` and `out` must be valid.
 */
enum LzStatus lz_arithmetic_derivative(const struct LzSieve *sieve, uint64_t n, uint64_t *out);

/*
 Tabulates `f` on `from..=to` in the given format.

 # Safety
 Pointers must be valid.
 */
enum LzStatus lz_tabulate(const struct LzFunction *f,
                          const struct LzSieve *sieve,
                          uint64_t from,
                          uint64_t to,
                          enum LzFormat format,
                          char **out);

/*
 Sweeps an identity (`"leibniz"`, `"schwab"`, `"gen-schwab"`, `"cor33"`,
 `"square-conv"`, `"tau"`, `"distributivity"`). `fn_spec`, `h_spec`, `u_spec`
 and `v_spec` may be NULL; missing tables are random from `seed`. A `limit`
 of 0 selects the default. The report line is written to `report`.
 Returns `LZ_STATUS_OK` on PASS and `LZ_STATUS_FAIL` on FAIL.

 # Safety
 Pointers must be valid or NULL where allowed.
 */
enum LzStatus lz_verify(const char *identity,
                        const char *fn_spec,
                        const char *h_spec,
                        const char *u_spec,
                        const char *v_spec,
                        uint64_t limit,
                        uint64_t seed,
                        const struct LzSieve *sieve,
                        char **report);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* LEIBNIZ_H */
