#ifndef CHOWCHECK_H
#define CHOWCHECK_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum ChowArithOp {
  CHOW_ARITH_OP_ADD = 0,
  CHOW_ARITH_OP_SUB = 1,
  CHOW_ARITH_OP_MUL = 2,
} ChowArithOp;

typedef enum ChowStatus {
  CHOW_STATUS_OK = 0,
  CHOW_STATUS_NULL_POINTER = 1,
  CHOW_STATUS_INVALID_UTF8 = 2,
  CHOW_STATUS_PARSE = 3,
  CHOW_STATUS_CONTEXT_MISMATCH = 4,
  CHOW_STATUS_UNKNOWN_CHECK = 5,
  CHOW_STATUS_OUT_OF_RANGE = 6,
  CHOW_STATUS_INVALID_ARGUMENT = 7,
  CHOW_STATUS_INTERNAL = 8,
  CHOW_STATUS_PANIC = 9,
} ChowStatus;

// Variables plus a coefficient ring.
typedef struct ChowContext ChowContext;

typedef struct ChowPolynomial ChowPolynomial;

typedef struct ChowReport ChowReport;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the last failed call on this thread; empty after a success.
// Valid until the next call on the same thread.
const char *chow_last_error(void);

// # Safety
// `s` is null or was returned by this library and not yet freed.
void chow_string_free(char *s);

// Creates a context over `Z` (`modulus == 0`) or `Z/modulus`.
//
// # Safety
// `names` points to `count` valid strings; `out` is valid for writes.
enum ChowStatus chow_context_new(const char *const *names,
                                 uintptr_t count,
                                 uint64_t modulus,
                                 struct ChowContext **out);

// # Safety
// `ctx` is null or was returned by [`chow_context_new`] and not yet freed.
void chow_context_free(struct ChowContext *ctx);

// # Safety
// `ctx` is a live context, `text` a valid string, `out` valid for writes.
enum ChowStatus chow_poly_parse(const struct ChowContext *ctx,
                                const char *text,
                                struct ChowPolynomial **out);

// # Safety
// `a`, `b` are live polynomials; `out` is valid for writes.
enum ChowStatus chow_poly_arith(const struct ChowPolynomial *a,
                                const struct ChowPolynomial *b,
                                enum ChowArithOp op,
                                struct ChowPolynomial **out);

// # Safety
// `p` is a live polynomial; `out` is valid for writes.
enum ChowStatus chow_poly_is_zero(const struct ChowPolynomial *p, bool *out);

// Canonical text; free with [`chow_string_free`].
//
// # Safety
// `p` is a live polynomial; `out` is valid for writes.
enum ChowStatus chow_poly_to_string(const struct ChowPolynomial *p, char **out);

// # Safety
// `p` is null or a polynomial from this library not yet freed.
void chow_poly_free(struct ChowPolynomial *p);

uintptr_t chow_check_count(void);

// Name of the check at `index` in registry order.
//
// # Safety
// `out` is valid for writes.
enum ChowStatus chow_check_name(uintptr_t index, char **out);

// Runs one check; a negative `max_degree` keeps the defaults.
//
// # Safety
// `name` is a valid string; `out` is valid for writes.
enum ChowStatus chow_run_check(const char *name, int32_t max_degree, struct ChowReport **out);

// Runs every check; a negative `max_degree` keeps the defaults.
//
// # Safety
// `out` is valid for writes.
enum ChowStatus chow_run_all(int32_t max_degree, struct ChowReport **out);

// Pass, fail and error counts.
//
// # Safety
// `r` is a live report; the out pointers are valid for writes.
enum ChowStatus chow_report_counts(const struct ChowReport *r,
                                   uintptr_t *pass,
                                   uintptr_t *fail,
                                   uintptr_t *error);

// The report in the CLI's JSON layout; free with [`chow_string_free`].
//
// # Safety
// `r` is a live report; `out` is valid for writes.
enum ChowStatus chow_report_json(const struct ChowReport *r, char **out);

// # Safety
// `r` is null or a report from this library not yet freed.
void chow_report_free(struct ChowReport *r);

// Graded components `0..=max_degree`, one line each. `spec` is
// `builtin:Rstar` or config text holding exactly one `[presentation]`.
//
// # Safety
// `spec` is a valid string; `out` is valid for writes.
enum ChowStatus chow_hilbert(const char *spec, uint32_t max_degree, char **out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* CHOWCHECK_H */
