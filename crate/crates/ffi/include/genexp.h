#ifndef GENEXP_H
#define GENEXP_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stddef.h>
#include <stdint.h>

typedef enum GenexpStatus {
  GENEXP_STATUS_OK = 0,
  GENEXP_STATUS_NULL_POINTER = 1,
  GENEXP_STATUS_MALFORMED_INPUT = 2,
  GENEXP_STATUS_INCOMPATIBLE = 3,
  GENEXP_STATUS_CUTOFF_EXCEEDED = 4,
  GENEXP_STATUS_OUT_OF_RANGE = 5,
  GENEXP_STATUS_INTERNAL = 6,
  GENEXP_STATUS_PANIC = 7,
} GenexpStatus;

/*
 A polynomial in `t` with integer coefficients; series carry a cutoff.
 */
typedef struct GenexpPoly GenexpPoly;

/*
 Type `C_n` generalized exponent of `lambda` (comma-separated parts).

 # Safety
 `lambda` must be a NUL-terminated string and `out` a valid pointer.
 */
enum GenexpStatus genexp_c_poly(const char *lambda, size_t rank, struct GenexpPoly **out);

/*
 Type `A_{n-1}` generalized exponent.

 # Safety
 As [`genexp_c_poly`].
 */
enum GenexpStatus genexp_a_poly(const char *lambda, size_t rank, struct GenexpPoly **out);

/*
 Type `C_n` value from the Weyl-group alternating sum.

 # Safety
 As [`genexp_c_poly`].
 */
enum GenexpStatus genexp_oracle_c(const char *lambda, size_t rank, struct GenexpPoly **out);

/*
 Type `A_{n-1}` value from the Weyl-group alternating sum.

 # Safety
 As [`genexp_c_poly`].
 */
enum GenexpStatus genexp_oracle_a(const char *lambda, size_t rank, struct GenexpPoly **out);

/*
 Stable type C series, exact through `t^cutoff`.

 # Safety
 As [`genexp_c_poly`].
 */
enum GenexpStatus genexp_stable_c(const char *lambda, size_t cutoff, struct GenexpPoly **out);

/*
 Stable type B series, exact through `t^cutoff`.

 # Safety
 As [`genexp_c_poly`].
 */
enum GenexpStatus genexp_stable_b(const char *lambda, size_t cutoff, struct GenexpPoly **out);

/*
 Lowest power of `t` in the type C generalized exponent.

 # Safety
 `lambda` must be a NUL-terminated string and `out` a valid pointer.
 */
enum GenexpStatus genexp_min_power(const char *lambda, size_t rank, uint32_t *out);

/*
 Highest power of `t` in the type C generalized exponent.

 # Safety
 As [`genexp_min_power`].
 */
enum GenexpStatus genexp_max_power(const char *lambda, size_t rank, uint32_t *out);

/*
 Multiplicity of the `sp_{2n}` module `lambda` in the `gl_{2n}` module `nu`.

 # Safety
 `lambda` and `nu` must be NUL-terminated strings and `out` a valid pointer.
 */
enum GenexpStatus genexp_branching(const char *lambda, const char *nu, size_t rank, uint64_t *out);

/*
 Number of nonzero terms.

 # Safety
 `p` must be null or a live handle.
 */
size_t genexp_poly_num_terms(const struct GenexpPoly *p);

/*
 The `index`-th term in increasing degree.

 # Safety
 `p` must be a live handle; `exponent` and `coefficient` valid pointers.
 */
enum GenexpStatus genexp_poly_term(const struct GenexpPoly *p,
                                   size_t index,
                                   uint32_t *exponent,
                                   int64_t *coefficient);

/*
 Coefficient of `t^exponent`; zero for a null handle.

 # Safety
 `p` must be null or a live handle.
 */
int64_t genexp_poly_coeff(const struct GenexpPoly *p, uint32_t exponent);

/*
 Value at `t = 1`.

 # Safety
 `p` must be null or a live handle.
 */
int64_t genexp_poly_eval_one(const struct GenexpPoly *p);

/*
 Cutoff of a series, or -1 for an exact polynomial.

 # Safety
 `p` must be null or a live handle.
 */
int64_t genexp_poly_cutoff(const struct GenexpPoly *p);

/*
 Text form such as `t^2 + t^4`; free with [`genexp_string_free`].

 # Safety
 `p` must be null or a live handle.
 */
char *genexp_poly_to_string(const struct GenexpPoly *p);

/*
 # Safety
 `p` must be null or a handle not yet freed.
 */
void genexp_poly_free(struct GenexpPoly *p);

/*
 # Safety
 `s` must be null or a string returned by this library and not yet freed.
 */
void genexp_string_free(char *s);

/*
 Message for the last failure on this thread, or null. Valid until the
 next failing call on the same thread.
 */
const char *genexp_last_error(void);

const char *genexp_version(void);

#endif  /* GENEXP_H */
