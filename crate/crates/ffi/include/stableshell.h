#ifndef STABLESHELL_H
#define STABLESHELL_H

#include <stdarg.h>
#include <stdbool.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Status codes.
 */
typedef enum SsStatus {
  SS_STATUS_OK = 0,
  SS_STATUS_NULL_ARGUMENT = 1,
  SS_STATUS_INVALID_ARGUMENT = 2,
  SS_STATUS_OUT_OF_RANGE = 3,
  SS_STATUS_BUDGET_EXCEEDED = 4,
  SS_STATUS_INVALID_COMPLEX = 5,
  SS_STATUS_PARSE = 6,
  SS_STATUS_UNSUPPORTED = 7,
  SS_STATUS_PANIC = 8,
} SsStatus;

/**
 * Subdivision selector for [`ss_scenario_subdivided_h`].
 */
typedef enum SsSubdivision {
  SS_SUBDIVISION_TRIVIAL = 0,
  SS_SUBDIVISION_BARYCENTRIC = 1,
  SS_SUBDIVISION_EDGEWISE = 2,
} SsSubdivision;

/**
 * Opaque polynomial with integer coefficients.
 */
typedef struct SsPolynomial SsPolynomial;

/**
 * Opaque cell complex with a shelling order.
 */
typedef struct SsScenario SsScenario;

/**
 * Message of the last failed call on this thread, or null. Valid until the
 * next call on this thread.
 */
const char *ss_last_error_message(void);

/**
 * Frees a string returned by this library.
 *
 * # Safety
 * `s` must come from this library and not be freed already.
 */
void ss_string_free(char *s);

/**
 * Builds a polynomial from `len` coefficients, constant term first.
 *
 * # Safety
 * `coeffs` must point to `len` readable values; `out` must be writable.
 */
enum SsStatus ss_poly_new(const int64_t *coeffs, uintptr_t len, struct SsPolynomial **out);

/**
 * # Safety
 * `p` must come from this library and not be freed already.
 */
void ss_poly_free(struct SsPolynomial *p);

/**
 * Degree of `p`; -1 for the zero polynomial.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum SsStatus ss_poly_degree(const struct SsPolynomial *p, int64_t *out);

/**
 * Coefficient of `x^k`; `OutOfRange` if it does not fit in 64 bits.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum SsStatus ss_poly_coeff(const struct SsPolynomial *p, uintptr_t k, int64_t *out);

/**
 * Renders `p` as text, e.g. `6x+2x^2`. Free with [`ss_string_free`].
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum SsStatus ss_poly_to_string(const struct SsPolynomial *p, char **out);

/**
 * Whether all roots of `p` are real. The zero polynomial counts as real-rooted.
 *
 * # Safety
 * `p` must be a live handle; `out` must be writable.
 */
enum SsStatus ss_poly_is_real_rooted(const struct SsPolynomial *p, bool *out);

/**
 * Whether `p` interlaces `q` (`q` has the larger roots).
 *
 * # Safety
 * `p` and `q` must be live handles; `out` must be writable.
 */
enum SsStatus ss_poly_interlaces(const struct SsPolynomial *p,
                                 const struct SsPolynomial *q,
                                 bool *out);

/**
 * The colored Eulerian polynomial `A^(r)_(d,l)`.
 *
 * # Safety
 * `out` must be writable.
 */
enum SsStatus ss_colored_eulerian(uintptr_t d, uintptr_t l, uintptr_t r, struct SsPolynomial **out);

/**
 * Builds a named construction, e.g. `"pile"` with parameters `[2, 1]`.
 *
 * # Safety
 * `name` must be a NUL-terminated string; `params` must point to `len`
 * values; `out` must be writable.
 */
enum SsStatus ss_scenario_construct(const char *name,
                                    const uintptr_t *params,
                                    uintptr_t len,
                                    struct SsScenario **out);

/**
 * Parses a scenario from its JSON form.
 *
 * # Safety
 * `json` must be a NUL-terminated string; `out` must be writable.
 */
enum SsStatus ss_scenario_from_json(const char *json, struct SsScenario **out);

/**
 * # Safety
 * `s` must come from this library and not be freed already.
 */
void ss_scenario_free(struct SsScenario *s);

/**
 * Number of maximal cells.
 *
 * # Safety
 * `s` must be a live handle; `out` must be writable.
 */
enum SsStatus ss_scenario_cell_count(const struct SsScenario *s, uintptr_t *out);

/**
 * Whether the scenario's order is a shelling and whether it is stable.
 *
 * # Safety
 * `s` must be a live handle; the out pointers must be writable.
 */
enum SsStatus ss_scenario_check(const struct SsScenario *s,
                                bool *is_shelling_out,
                                bool *is_stable_out);

/**
 * h-polynomial of the subdivided complex. `r` is used only for `Edgewise`.
 *
 * # Safety
 * `s` must be a live handle; `out` must be writable.
 */
enum SsStatus ss_scenario_subdivided_h(const struct SsScenario *s,
                                       enum SsSubdivision kind,
                                       uintptr_t r,
                                       struct SsPolynomial **out);

/**
 * Runs a verification suite by id and reports whether all its checks passed.
 *
 * # Safety
 * `id` must be a NUL-terminated string; `passed` must be writable.
 */
enum SsStatus ss_verify_suite(const char *id, uint64_t seed, bool *passed);

#endif  /* STABLESHELL_H */
