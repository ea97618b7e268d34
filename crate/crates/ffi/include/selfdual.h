#ifndef SELFDUAL_H
#define SELFDUAL_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>

/*
 Result codes.
 */
typedef enum SdStatus {
  SD_STATUS_OK = 0,
  SD_STATUS_NULL_POINTER = 1,
  SD_STATUS_INVALID_ARGUMENT = 2,
  SD_STATUS_CHARACTERISTIC_TWO = 3,
  SD_STATUS_INVARIANT_VIOLATION = 4,
  SD_STATUS_OUT_OF_RANGE = 5,
  SD_STATUS_HYPOTHESIS_UNMET = 6,
  SD_STATUS_PANIC = 7,
} SdStatus;

/*
 The factorization of `x^n - a` into monic irreducibles.
 */
typedef struct SdFactorization SdFactorization;

/*
 A finite field `F_{p^s}`.
 */
typedef struct SdField SdField;

/*
 Creates the field `F_{p^s}`.

 # Safety
 `out` must be a valid pointer to writable storage for one handle.
 */
enum SdStatus sd_field_new(uint64_t p, uint32_t s, struct SdField **out);

/*
 Releases a field handle; null is ignored.

 # Safety
 `field` must be null or a handle from [`sd_field_new`] not yet freed.
 */
void sd_field_free(struct SdField *field);

/*
 Number of elements of the field, or 0 for a null handle.

 # Safety
 `field` must be null or a live handle.
 */
uint64_t sd_field_order(const struct SdField *field);

/*
 Factors `x^n - constant` for `constant` in {1, -1}.

 # Safety
 `field` must be a live handle and `out` valid for one write.
 */
enum SdStatus sd_factor(const struct SdField *field,
                        uint64_t n,
                        int64_t constant,
                        struct SdFactorization **out);

/*
 Releases a factorization handle; null is ignored.

 # Safety
 `fz` must be null or a handle from [`sd_factor`] not yet freed.
 */
void sd_factorization_free(struct SdFactorization *fz);

/*
 Number of distinct irreducible factors, or 0 for a null handle.

 # Safety
 `fz` must be null or a live handle.
 */
uintptr_t sd_factorization_len(const struct SdFactorization *fz);

/*
 Number of self-reciprocal factors and of reciprocal pairs.

 # Safety
 `fz` must be a live handle; `self_reciprocal` and `pairs` valid for one write.
 */
enum SdStatus sd_factorization_pairing(const struct SdFactorization *fz,
                                       uintptr_t *self_reciprocal,
                                       uintptr_t *pairs);

/*
 Factor `index` in textual form and its multiplicity. The string is owned
 by the handle and valid until it is freed.

 # Safety
 `fz` must be a live handle; `poly` and `multiplicity` valid for one write.
 */
enum SdStatus sd_factorization_factor(const struct SdFactorization *fz,
                                      uintptr_t index,
                                      const char **poly,
                                      uint64_t *multiplicity);

/*
 Whether a self-dual code of length `n` exists in `F[x]/(x^n - constant)`.

 # Safety
 `field` must be a live handle and `out` valid for one write.
 */
enum SdStatus sd_exists_selfdual(const struct SdField *field,
                                 uint64_t n,
                                 int64_t constant,
                                 bool *out);

/*
 Number of self-dual codes; `OutOfRange` when it exceeds 64 bits.

 # Safety
 `field` must be a live handle and `out` valid for one write.
 */
enum SdStatus sd_count_selfdual(const struct SdField *field,
                                uint64_t n,
                                int64_t constant,
                                uint64_t *out);

/*
 Generators of all self-dual codes as a JSON array of strings. Release
 the result with [`sd_string_free`].

 # Safety
 `field` must be a live handle and `out` valid for one write.
 */
enum SdStatus sd_enumerate_selfdual(const struct SdField *field,
                                    uint64_t n,
                                    int64_t constant,
                                    char **out);

/*
 Multiplicative order of `q` modulo `m`.

 # Safety
 `out` must be valid for one write.
 */
enum SdStatus sd_mult_order(uint64_t q, uint64_t m, uint64_t *out);

/*
 The claims report as JSON lines. Release with [`sd_string_free`].

 # Safety
 `out` must be valid for one write.
 */
enum SdStatus sd_claims_json(uintptr_t max_n, char **out);

/*
 Releases a string returned by this library; null is ignored.

 # Safety
 `s` must be null or a string allocated by this library and not yet freed.
 */
void sd_string_free(char *s);

/*
 Message for the last failed call on this thread, or an empty string. The
 pointer stays valid until the next library call on the same thread.
 */
const char *sd_last_error(void);

#endif  /* SELFDUAL_H */
