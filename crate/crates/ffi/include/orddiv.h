#ifndef ORDDIV_H
#define ORDDIV_H

/* Generated by cbindgen from crates/ffi. Do not edit by hand. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum OrddivStatus {
  ORDDIV_STATUS_OK = 0,
  ORDDIV_STATUS_NULL_POINTER = 1,
  ORDDIV_STATUS_INVALID_UTF8 = 2,
  ORDDIV_STATUS_PARSE = 3,
  ORDDIV_STATUS_PRECONDITION = 4,
  ORDDIV_STATUS_DOMAIN = 5,
  ORDDIV_STATUS_RESOURCE = 6,
  ORDDIV_STATUS_OUT_OF_RANGE = 7,
  ORDDIV_STATUS_PANIC = 8,
} OrddivStatus;

typedef enum OrddivMode {
  ORDDIV_MODE_DIVIDES = 0,
  ORDDIV_MODE_DIVIDED_BY = 1,
  ORDDIV_MODE_GEQ = 2,
  ORDDIV_MODE_LEQ = 3,
} OrddivMode;

typedef struct OrddivCertificate OrddivCertificate;

typedef struct OrddivGroup OrddivGroup;

typedef struct OrddivMap OrddivMap;

typedef struct OrddivReport OrddivReport;

typedef struct OrddivSpectrum OrddivSpectrum;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Message for the most recent failing call on this thread; empty after a
// successful call. Valid until the next `orddiv_*` call on this thread.
const char *orddiv_last_error_message(void);

// # Safety
// `s` must be null or a string returned by this library, not yet freed.
void orddiv_string_free(char *s);

// Parses a descriptor such as `Z6`, `D8`, `Q12` or `Z3xZ6`.
//
// # Safety
// `descriptor` must be a NUL-terminated string; `out` must be writable.
enum OrddivStatus orddiv_group_parse(const char *descriptor, struct OrddivGroup **out);

// # Safety
// `g` must be null or a live handle from `orddiv_group_parse`.
void orddiv_group_free(struct OrddivGroup *g);

// # Safety
// `g` must be a live group handle; `out` must be writable.
enum OrddivStatus orddiv_group_order(const struct OrddivGroup *g, uint64_t *out);

// # Safety
// `g` must be a live group handle; `out` must be writable.
enum OrddivStatus orddiv_group_is_cyclic(const struct OrddivGroup *g, bool *out);

// Canonical descriptor; free with `orddiv_string_free`. Null if `g` is null.
//
// # Safety
// `g` must be null or a live group handle.
char *orddiv_group_descriptor(const struct OrddivGroup *g);

// # Safety
// `g` must be a live group handle; `out` must be writable.
enum OrddivStatus orddiv_group_spectrum(const struct OrddivGroup *g, struct OrddivSpectrum **out);

// Number of distinct element orders. 0 if `s` is null.
//
// # Safety
// `s` must be null or a live spectrum handle.
size_t orddiv_spectrum_len(const struct OrddivSpectrum *s);

// Entry `index` in ascending order of element order.
//
// # Safety
// `s` must be a live spectrum handle; `order` and `count` must be writable.
enum OrddivStatus orddiv_spectrum_entry(const struct OrddivSpectrum *s,
                                        size_t index,
                                        uint64_t *order,
                                        uint64_t *count);

// # Safety
// `s` must be null or a live spectrum handle.
void orddiv_spectrum_free(struct OrddivSpectrum *s);

// `f(s^a r^b) = k a + 2 b` on `D_2n -> Z_2n`; `k` must be odd.
//
// # Safety
// `out` must be writable.
enum OrddivStatus orddiv_map_dihedral(uint64_t n, int64_t k, struct OrddivMap **out);

// `f((a, b)) = m k a + p b` on `Z_p x Z_kp -> Z_kp^2`.
//
// # Safety
// `out` must be writable.
enum OrddivStatus orddiv_map_product(uint64_t p, uint64_t k, int64_t m, struct OrddivMap **out);

// Arbitrary linear map `coeff_a * first + coeff_b * second` from a dihedral
// or two-factor product group onto the cyclic group of the same order.
//
// # Safety
// `domain` must be a live group handle; `out` must be writable.
enum OrddivStatus orddiv_map_linear(const struct OrddivGroup *domain,
                                    int64_t coeff_a,
                                    int64_t coeff_b,
                                    struct OrddivMap **out);

// # Safety
// `map` must be null or a live map handle.
void orddiv_map_free(struct OrddivMap *map);

// # Safety
// `map` must be a live map handle; `out` must be writable.
enum OrddivStatus orddiv_map_verify(const struct OrddivMap *map,
                                    enum OrddivMode mode,
                                    struct OrddivReport **out);

// False if `r` is null.
//
// # Safety
// `r` must be null or a live report handle.
bool orddiv_report_verdict(const struct OrddivReport *r);

// # Safety
// `r` must be null or a live report handle.
bool orddiv_report_bijective(const struct OrddivReport *r);

// # Safety
// `r` must be null or a live report handle.
size_t orddiv_report_row_count(const struct OrddivReport *r);

// Row `index` in canonical element order.
//
// # Safety
// `r` must be a live report handle; all output pointers must be writable.
enum OrddivStatus orddiv_report_row(const struct OrddivReport *r,
                                    size_t index,
                                    uint64_t *domain_order,
                                    uint64_t *image,
                                    uint64_t *image_order,
                                    bool *holds);

// Report as JSON (same document as the CLI's `--format json`); free with
// `orddiv_string_free`. Null if `r` is null.
//
// # Safety
// `r` must be null or a live report handle.
char *orddiv_report_to_json(const struct OrddivReport *r);

// # Safety
// `r` must be null or a live report handle.
void orddiv_report_free(struct OrddivReport *r);

// Existence certificate for a bijection `source -> target` respecting `mode`.
//
// # Safety
// `source` and `target` must be live group handles; `out` must be writable.
enum OrddivStatus orddiv_exists(const struct OrddivGroup *source,
                                const struct OrddivGroup *target,
                                enum OrddivMode mode,
                                struct OrddivCertificate **out);

// # Safety
// `c` must be null or a live certificate handle.
bool orddiv_certificate_feasible(const struct OrddivCertificate *c);

// Certificate as JSON; free with `orddiv_string_free`. Null if `c` is null.
//
// # Safety
// `c` must be null or a live certificate handle.
char *orddiv_certificate_to_json(const struct OrddivCertificate *c);

// # Safety
// `c` must be null or a live certificate handle.
void orddiv_certificate_free(struct OrddivCertificate *c);

// Exhaustive swapped-coefficient search on `D_2n -> Z_2n`.
//
// # Safety
// All output pointers must be writable.
enum OrddivStatus orddiv_conjecture_test(uint64_t n,
                                         bool *holds,
                                         uint64_t *valid_pairs,
                                         uint64_t *counterexamples);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* ORDDIV_H */
