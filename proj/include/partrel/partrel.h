/*
Copyright 2026 The partrel Authors

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#ifndef PARTREL_PARTREL_H
#define PARTREL_PARTREL_H

/*
 * C interface to the partrel library: restricted partition counts, the
 * (m+1)-term linear relations between them, and their exact and numerical
 * verification.
 *
 * Conventions
 *  - Every fallible call returns a pr_status; PR_OK is 0. On failure the
 *    calling thread's pr_last_error_message() describes the problem.
 *  - Exact values (counts, rationals) cross the boundary as decimal strings
 *    in canonical "p/q" form ("p" when q = 1).
 *  - Strings returned through char** are owned by the caller and released
 *    with pr_string_free(). Strings returned as const char* are owned by
 *    the handle they came from and live as long as it does.
 *  - Handles are immutable once created and may be read from several
 *    threads at once.
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(PARTREL_BUILDING_LIBRARY)
#    define PARTREL_API __declspec(dllexport)
#  else
#    define PARTREL_API __declspec(dllimport)
#  endif
#else
#  define PARTREL_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum pr_status {
  PR_OK = 0,
  PR_ERR_INVALID_ARGUMENT = 1,   /* malformed input, violated precondition */
  PR_ERR_INVALID_DELTA = 2,      /* multiplier vector fails the admissibility rules */
  PR_ERR_DEGENERATE_INPUT = 3,   /* a vanishing product in the conjecture check */
  PR_ERR_DIVISION_UNDEFINED = 4, /* zero divisor in exact arithmetic */
  PR_ERR_INDEX_OUT_OF_RANGE = 5,
  PR_ERR_INTERNAL = 6
} pr_status;

typedef struct pr_relation pr_relation;
typedef struct pr_report pr_report;
typedef struct pr_profile pr_profile;

PARTREL_API const char* pr_version(void);
PARTREL_API const char* pr_status_name(pr_status status);
/* Message of the last failed call on this thread; "" if none. */
PARTREL_API const char* pr_last_error_message(void);
PARTREL_API void pr_string_free(char* str);

/* ---- counts ------------------------------------------------------------ */

/* W(s, d), zero for s < 0. */
PARTREL_API pr_status pr_denumerant(const int64_t* d, size_t m, int64_t s, char** count_out);
/* Exhaustive-enumeration oracle; requires s >= 0. */
PARTREL_API pr_status pr_brute_force_count(const int64_t* d, size_t m, int64_t s,
                                           char** count_out);

/* ---- reports ------------------------------------------------------------
 *
 * A report carries a pass flag, an ordered list of violations (key/detail
 * string pairs) and an ordered list of named entries, each a list of
 * exact values (a scalar is a list of length one, a polynomial lists its
 * coefficients from s^0 upward).
 */
PARTREL_API int pr_report_passed(const pr_report* report);
PARTREL_API size_t pr_report_violation_count(const pr_report* report);
PARTREL_API pr_status pr_report_violation(const pr_report* report, size_t index,
                                          const char** key, const char** detail);
PARTREL_API size_t pr_report_entry_count(const pr_report* report);
PARTREL_API pr_status pr_report_entry_name(const pr_report* report, size_t index,
                                           const char** name);
PARTREL_API pr_status pr_report_entry_length(const pr_report* report, size_t index,
                                             size_t* length);
PARTREL_API pr_status pr_report_entry_value(const pr_report* report, size_t index, size_t k,
                                            const char** value);
/* Looks an entry up by name; PR_ERR_INDEX_OUT_OF_RANGE if absent. */
PARTREL_API pr_status pr_report_find(const pr_report* report, const char* name, size_t* index);
PARTREL_API void pr_report_free(pr_report* report);

/* ---- relations --------------------------------------------------------- */

/* Violations keyed "non_coprime" or "collinear"; detail is a message such
 * as "columns 1,2 collinear". Passed iff delta is admissible. */
PARTREL_API pr_status pr_validate_delta(const int64_t* d, const int64_t* delta, size_t m,
                                        pr_report** out);

/* PR_ERR_INVALID_DELTA when delta is inadmissible; the message lists the
 * violations. */
PARTREL_API pr_status pr_relation_create(const int64_t* d, const int64_t* delta, size_t m,
                                         pr_relation** out);
PARTREL_API void pr_relation_free(pr_relation* relation);
PARTREL_API size_t pr_relation_size(const pr_relation* relation);
/* Term i (0-based): raw_out receives its m signed generators, d_i first and
 * then d_{i,j} for j != i in increasing j. */
PARTREL_API pr_status pr_relation_term(const pr_relation* relation, size_t i, int64_t* raw_out,
                                       int64_t* s_multiplier, int* sign, int64_t* shift);

/* Violations keyed by s, detail is the nonzero residual w(s). */
PARTREL_API pr_status pr_relation_verify_integer(const pr_relation* relation, int64_t s_min,
                                                 int64_t s_max, pr_report** out);
/* Entries "base", "term_1".."term_m", "residual" (polynomials in s). */
PARTREL_API pr_status pr_relation_verify_poly(const pr_relation* relation, pr_report** out);
/* Entry "bernoulli" with m values, k = 0..m-1; passed iff all are zero. */
PARTREL_API pr_status pr_relation_verify_bernoulli(const pr_relation* relation,
                                                   pr_report** out);
/* Entries "sigma_sum_ratio", "lead_term", "second_term", "third_term" (each
 * absent when not applicable), plus the per-term pieces "sigma1_terms",
 * "sigma2_terms", "lead_summands", "second_prefactor", "second_summands",
 * "third_prefactor", "third_summands". Passed iff every identity is 1. */
PARTREL_API pr_status pr_relation_identities(const pr_relation* relation, pr_report** out);

PARTREL_API pr_status pr_relation_profile(const pr_relation* relation, double s_lo, double s_hi,
                                          double step, pr_profile** out);
PARTREL_API size_t pr_profile_size(const pr_profile* profile);
PARTREL_API pr_status pr_profile_sample(const pr_profile* profile, size_t index, double* s,
                                        double* w, int* is_integer);
PARTREL_API void pr_profile_free(pr_profile* profile);

/* ---- quasipolynomial and Bernoulli/Bell -------------------------------- */

/* Parity and negative-zero check on the exact continuation; violations are
 * keyed by s. Entry "sigma1". */
PARTREL_API pr_status pr_check_parity(const int64_t* d, size_t m, int64_t s_max,
                                      pr_report** out);
/* W_1(s, d) coefficients, s^0 first. Entry "poly_part". */
PARTREL_API pr_status pr_poly_part(const int64_t* d, size_t m, pr_report** out);

/* x and y are m rational strings each. PR_ERR_DEGENERATE_INPUT when a
 * product in the expression vanishes. */
PARTREL_API pr_status pr_check_bell_conjecture(const char* const* x, const char* const* y,
                                               size_t m, size_t k, char** value_out);
/* Random draws; nonzero values become violations keyed "k=<k>" with the x,
 * y and value in the detail. Entries "seed", "draws", "evaluations",
 * "rejected_degenerate". */
PARTREL_API pr_status pr_conjecture_suite(size_t m, size_t draws, uint64_t seed,
                                          pr_report** out);

#ifdef __cplusplus
}
#endif

#endif /* PARTREL_PARTREL_H */
