#ifndef HULLCOUNT_H
#define HULLCOUNT_H

/* Generated by cbindgen from src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Form selector, passed to functions as a `uint32_t`.
 */
typedef enum HcForm {
  HC_FORM_EUCLIDEAN = 0,
  HC_FORM_HERMITIAN = 1,
  HC_FORM_SYMPLECTIC = 2,
} HcForm;

typedef enum HcStatus {
  HC_STATUS_OK = 0,
  HC_STATUS_NULL_POINTER = 1,
  HC_STATUS_INVALID_ARGUMENT = 2,
  HC_STATUS_OUT_OF_RANGE = 3,
  HC_STATUS_WORK_LIMIT_EXCEEDED = 4,
  HC_STATUS_UNSUPPORTED = 5,
  HC_STATUS_PANIC = 6,
} HcStatus;

/**
 * Opaque finite field.
 */
typedef struct HcField HcField;

/**
 * Opaque exhaustive hull spectrum.
 */
typedef struct HcSpectrum HcSpectrum;

/**
 * Parameters `[[n, k, d; c]]_q` of an entanglement-assisted code. The
 * distance is not tracked across the ABI.
 */
typedef struct HcEaqecc {
  uint32_t n;
  uint32_t k_logical;
  uint32_t c;
  uint64_t q;
} HcEaqecc;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Message for the last failure on this thread, or NULL. The pointer stays
 * valid until the next failing call on the same thread.
 */
const char *hc_last_error(void);

/**
 * Releases a string returned by this library. NULL is ignored.
 *
 * # Safety
 * `s` must come from this library and not have been freed.
 */
void hc_string_free(char *s);

/**
 * Creates `F_{p^m}` with the canonical modulus.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum HcStatus hc_field_new(uint64_t p, uint32_t m, struct HcField **out);

/**
 * # Safety
 * `field` must come from [`hc_field_new`] and not have been freed.
 */
void hc_field_free(struct HcField *field);

/**
 * Field order, or 0 for NULL.
 *
 * # Safety
 * `field` must be NULL or a live handle.
 */
uint64_t hc_field_order(const struct HcField *field);

/**
 * Applies a binary field operation (`op`: 0 add, 1 subtract, 2 multiply) to
 * elements given by their integer encodings.
 *
 * # Safety
 * `field` must be a live handle and `out` a valid pointer.
 */
enum HcStatus hc_field_op(const struct HcField *field,
                          uint32_t op,
                          uint16_t x,
                          uint16_t y,
                          uint16_t *out);

/**
 * Multiplicative inverse; `OutOfRange` for zero.
 *
 * # Safety
 * `field` must be a live handle and `out` a valid pointer.
 */
enum HcStatus hc_field_inv(const struct HcField *field, uint16_t x, uint16_t *out);

/**
 * Closed-form count of codes with hull dimension `l`, as a decimal string.
 * For the symplectic form `n` is the ambient length `2n`. The Euclidean form
 * has no closed form and yields `Unsupported`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum HcStatus hc_count(uint32_t form, uint32_t n, uint32_t k, uint32_t l, uint64_t q, char **out);

/**
 * Ratio factor `alpha` for the step from `l`, as `"num/den"`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum HcStatus hc_alpha(uint32_t form, uint32_t n, uint32_t k, uint32_t l, uint64_t q, char **out);

/**
 * Enumerates every `[n, k]` code for the given form and records its hull
 * dimension. `work_limit = 0` uses the default budget.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum HcStatus hc_spectrum_compute(uint32_t form,
                                  uint32_t n,
                                  uint32_t k,
                                  uint64_t q,
                                  uint64_t work_limit,
                                  struct HcSpectrum **out);

/**
 * Number of codes with hull dimension `l` (zero when absent).
 *
 * # Safety
 * `spectrum` must be a live handle and `out` a valid pointer.
 */
enum HcStatus hc_spectrum_count(const struct HcSpectrum *spectrum, uint32_t l, char **out);

/**
 * Total number of codes enumerated.
 *
 * # Safety
 * `spectrum` must be a live handle and `out` a valid pointer.
 */
enum HcStatus hc_spectrum_total(const struct HcSpectrum *spectrum, char **out);

/**
 * # Safety
 * `spectrum` must come from [`hc_spectrum_compute`] and not have been freed.
 */
void hc_spectrum_free(struct HcSpectrum *spectrum);

/**
 * Both entanglement-assisted codes from a Hermitian `[n, k]` code with hull
 * dimension `l`.
 *
 * # Safety
 * `code` and `dual` must be valid pointers.
 */
enum HcStatus hc_gjg_map(uint32_t n,
                         uint32_t k,
                         uint32_t l,
                         uint64_t q,
                         struct HcEaqecc *code,
                         struct HcEaqecc *dual);

/**
 * The entanglement-assisted code from a symplectic `[2n, k]` code with hull
 * dimension `l`; `ambient` is `2n`.
 *
 * # Safety
 * `out` must be a valid pointer.
 */
enum HcStatus hc_wilde_brun_map(uint32_t ambient,
                                uint32_t k,
                                uint32_t l,
                                uint64_t q,
                                struct HcEaqecc *out);

/**
 * Ebits required by a binary check matrix `[H_Z | H_X]` given row-major as
 * `rows * cols` bytes, each 0 or 1.
 *
 * # Safety
 * `data` must point to `rows * cols` readable bytes and `out` be valid.
 */
enum HcStatus hc_ebits(size_t rows, size_t cols, const uint8_t *data, uint32_t *out);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* HULLCOUNT_H */
