/*
 * Copyright 2026 The fflab authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * C interface to the fflab core: finite fields and extension towers, exact
 * character sums, trace/norm counts of irreducible polynomials, cubic point
 * counts, class numbers, and the verification suites.
 *
 * All objects are opaque handles created/destroyed through this interface.
 * Functions return FFLAB_OK or an error code; fflab_last_error() carries a
 * thread-local human-readable detail message for the most recent failure.
 *
 * Field spec strings: "p", "p^r" or "p^r:c_r,...,c_1,c_0" (monic modulus
 * coefficients over F_p, most significant first, decimal). Field elements
 * are integers in [0, q) encoding coefficient vectors over F_p, least
 * significant digit first: value = sum c_i p^i.
 */

#ifndef FFLAB_H
#define FFLAB_H

#include <stdint.h>
#include <stddef.h>

#if defined(_WIN32)
#define FFLAB_API __declspec(dllexport)
#else
#define FFLAB_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct fflab_field fflab_field;
typedef struct fflab_tower fflab_tower;
typedef struct fflab_report fflab_report;

typedef enum fflab_status {
  FFLAB_OK = 0,
  FFLAB_E_INVALID_ARGUMENT,
  FFLAB_E_NON_PRIME,
  FFLAB_E_REDUCIBLE_MODULUS,
  FFLAB_E_NON_PRIMITIVE_ROOT,
  FFLAB_E_SIZE_OVERFLOW,
  FFLAB_E_ZERO_LOG,
  FFLAB_E_NOT_IN_SUBFIELD,
  FFLAB_E_NOT_RATIONAL,
  FFLAB_E_ORDER_MISMATCH,
  FFLAB_E_OVERFLOW,
  FFLAB_E_PRECONDITION,
  FFLAB_E_WRONG_CHARACTERISTIC,
  FFLAB_E_NON_INTEGRAL,
  FFLAB_E_SINGULAR_MODEL,
  FFLAB_E_UNSUPPORTED_CHARACTERISTIC,
  FFLAB_E_INVALID_DISCRIMINANT,
  FFLAB_E_CONFIG,
  FFLAB_E_INTERNAL
} fflab_status;

FFLAB_API const char* fflab_status_name(fflab_status status);
/* Detail message for the most recent error on this thread. */
FFLAB_API const char* fflab_last_error(void);

/* ---- fields ---- */

FFLAB_API fflab_status fflab_field_create(const char* spec, fflab_field** out);
FFLAB_API void fflab_field_destroy(fflab_field* field);

FFLAB_API uint32_t fflab_field_q(const fflab_field* field);
FFLAB_API uint32_t fflab_field_p(const fflab_field* field);
FFLAB_API uint32_t fflab_field_degree(const fflab_field* field);
FFLAB_API uint32_t fflab_field_generator(const fflab_field* field);
/* Canonical spec string including the modulus; owned by the handle. */
FFLAB_API const char* fflab_field_spec(const fflab_field* field);

FFLAB_API fflab_status fflab_field_add(const fflab_field* field, uint32_t x,
                                       uint32_t y, uint32_t* out);
FFLAB_API fflab_status fflab_field_mul(const fflab_field* field, uint32_t x,
                                       uint32_t y, uint32_t* out);
FFLAB_API fflab_status fflab_field_inv(const fflab_field* field, uint32_t x,
                                       uint32_t* out);
FFLAB_API fflab_status fflab_field_pow(const fflab_field* field, uint32_t x,
                                       uint64_t e, uint32_t* out);
/* Discrete log with respect to the generator; x must be nonzero. */
FFLAB_API fflab_status fflab_field_dlog(const fflab_field* field, uint32_t x,
                                        uint32_t* out);
FFLAB_API fflab_status fflab_field_abs_trace(const fflab_field* field, uint32_t x,
                                             uint32_t* out);

/* ---- towers ---- */

FFLAB_API fflab_status fflab_tower_create(const char* base_spec, uint32_t t,
                                          fflab_tower** out);
FFLAB_API void fflab_tower_destroy(fflab_tower* tower);

FFLAB_API uint32_t fflab_tower_base_q(const fflab_tower* tower);
FFLAB_API uint32_t fflab_tower_top_q(const fflab_tower* tower);
FFLAB_API uint32_t fflab_tower_degree(const fflab_tower* tower);

/* Trace/norm of a top-field element, returned in base-field encoding. */
FFLAB_API fflab_status fflab_tower_trace(const fflab_tower* tower, uint32_t x,
                                         uint32_t* out);
FFLAB_API fflab_status fflab_tower_norm(const fflab_tower* tower, uint32_t x,
                                        uint32_t* out);
FFLAB_API fflab_status fflab_tower_embed(const fflab_tower* tower, uint32_t base_x,
                                         uint32_t* out);
/* Solves (m/t) i = ind_g(b) mod (q-1). Unsolvable is a valid outcome:
 * *solvable is 0 and *i0 is unspecified. */
FFLAB_API fflab_status fflab_tower_solve_congruence(const fflab_tower* tower,
                                                    uint64_t m, uint32_t b,
                                                    uint32_t* d, int* solvable,
                                                    uint32_t* i0);

/* ---- scalar computations ---- */

/* n-dimensional Kloosterman sum as an integer (errors when irrational). */
FFLAB_API fflab_status fflab_kloosterman(const char* spec, uint32_t n, uint32_t c,
                                         int64_t* out);
FFLAB_API fflab_status fflab_class_number_h(int64_t d, int64_t* out);
FFLAB_API fflab_status fflab_kronecker_class_number(int64_t d, int64_t* out);
/* Projective point count of y^2 + cy + xy = x^3 over the given field. */
FFLAB_API fflab_status fflab_cubic_point_count(const char* spec, uint32_t c,
                                               int64_t* total, int64_t* trace);
/* Isomorphism classes of y^2 = x^3 + Ax + B with q + 1 + trace points. */
FFLAB_API fflab_status fflab_deuring_class_count(const char* spec, int64_t trace,
                                                 int64_t* out);

/* ---- reports (rectangular result tables) ---- */

typedef enum fflab_value_kind {
  FFLAB_VALUE_INT = 0,
  FFLAB_VALUE_BOOL = 1,
  FFLAB_VALUE_TEXT = 2,
  FFLAB_VALUE_OPT_INT = 3 /* empty cell when absent */
} fflab_value_kind;

FFLAB_API fflab_status fflab_report_field(const char* spec, fflab_report** out);
/* One row per (a, b) when has_ab is 0 (the full sweep), else a single row. */
FFLAB_API fflab_status fflab_report_count(const char* spec, uint32_t m, int has_ab,
                                          uint32_t a, uint32_t b, fflab_report** out);
FFLAB_API fflab_status fflab_report_kloosterman(const char* spec, uint32_t n,
                                                int has_c, uint32_t c,
                                                fflab_report** out);
FFLAB_API fflab_status fflab_report_curve(const char* spec, int has_c, uint32_t c,
                                          fflab_report** out);
FFLAB_API fflab_status fflab_report_classnum(int64_t d, fflab_report** out);
FFLAB_API fflab_status fflab_report_distribution(const char* spec, fflab_report** out);
FFLAB_API fflab_status fflab_report_verify(const char* suite, int extended,
                                           fflab_report** out);
/* Newline-separated list of verification suite names; static storage. */
FFLAB_API const char* fflab_verify_suites(void);

FFLAB_API int32_t fflab_report_rows(const fflab_report* report);
FFLAB_API int32_t fflab_report_cols(const fflab_report* report);
FFLAB_API const char* fflab_report_col_name(const fflab_report* report, int32_t col);
FFLAB_API fflab_value_kind fflab_report_col_kind(const fflab_report* report,
                                                 int32_t col);
/* Cell text: decimal integers, "true"/"false", plain text, or "" for an
 * absent optional. Owned by the report handle. */
FFLAB_API const char* fflab_report_cell(const fflab_report* report, int32_t row,
                                        int32_t col);
/* 1 when every per-row pass flag in the report holds. */
FFLAB_API int fflab_report_pass(const fflab_report* report);
FFLAB_API void fflab_report_destroy(fflab_report* report);

#ifdef __cplusplus
}
#endif

#endif /* FFLAB_H */
