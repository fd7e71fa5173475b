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

#include "fflab.h"

#include <string>

#include "fflab/charsum.hpp"
#include "fflab/classnum.hpp"
#include "fflab/counting.hpp"
#include "fflab/curves.hpp"
#include "fflab/field.hpp"
#include "fflab/verify.hpp"

using namespace fflab;

struct fflab_field {
  FieldPtr ctx;
  std::string spec_string;
};

struct fflab_tower {
  TowerPtr ctx;
};

struct fflab_report {
  Report table;
};

namespace {

thread_local std::string t_last_error;

fflab_status map_code(errc code) {
  switch (code) {
    case errc::invalid_argument: return FFLAB_E_INVALID_ARGUMENT;
    case errc::non_prime: return FFLAB_E_NON_PRIME;
    case errc::reducible_modulus: return FFLAB_E_REDUCIBLE_MODULUS;
    case errc::non_primitive_root: return FFLAB_E_NON_PRIMITIVE_ROOT;
    case errc::size_overflow: return FFLAB_E_SIZE_OVERFLOW;
    case errc::zero_log: return FFLAB_E_ZERO_LOG;
    case errc::not_in_subfield: return FFLAB_E_NOT_IN_SUBFIELD;
    case errc::not_rational: return FFLAB_E_NOT_RATIONAL;
    case errc::order_mismatch: return FFLAB_E_ORDER_MISMATCH;
    case errc::coefficient_overflow: return FFLAB_E_OVERFLOW;
    case errc::precondition: return FFLAB_E_PRECONDITION;
    case errc::wrong_characteristic: return FFLAB_E_WRONG_CHARACTERISTIC;
    case errc::non_integral: return FFLAB_E_NON_INTEGRAL;
    case errc::singular_model: return FFLAB_E_SINGULAR_MODEL;
    case errc::unsupported_characteristic: return FFLAB_E_UNSUPPORTED_CHARACTERISTIC;
    case errc::invalid_discriminant: return FFLAB_E_INVALID_DISCRIMINANT;
    case errc::config: return FFLAB_E_CONFIG;
    case errc::internal: return FFLAB_E_INTERNAL;
  }
  return FFLAB_E_INTERNAL;
}

template <typename Fn>
fflab_status guarded(Fn&& fn) {
  try {
    fn();
    return FFLAB_OK;
  } catch (const Error& e) {
    t_last_error = e.what();
    return map_code(e.code());
  } catch (const std::exception& e) {
    t_last_error = e.what();
    return FFLAB_E_INTERNAL;
  } catch (...) {
    t_last_error = "unknown error";
    return FFLAB_E_INTERNAL;
  }
}

fflab_status require(bool ok, const char* message) {
  if (!ok) {
    t_last_error = message;
    return FFLAB_E_INVALID_ARGUMENT;
  }
  return FFLAB_OK;
}

}  // namespace

extern "C" {

const char* fflab_status_name(fflab_status status) {
  switch (status) {
    case FFLAB_OK: return "ok";
    case FFLAB_E_INVALID_ARGUMENT: return "invalid_argument";
    case FFLAB_E_NON_PRIME: return "non_prime";
    case FFLAB_E_REDUCIBLE_MODULUS: return "reducible_modulus";
    case FFLAB_E_NON_PRIMITIVE_ROOT: return "non_primitive_root";
    case FFLAB_E_SIZE_OVERFLOW: return "size_overflow";
    case FFLAB_E_ZERO_LOG: return "zero_log";
    case FFLAB_E_NOT_IN_SUBFIELD: return "not_in_subfield";
    case FFLAB_E_NOT_RATIONAL: return "not_rational";
    case FFLAB_E_ORDER_MISMATCH: return "order_mismatch";
    case FFLAB_E_OVERFLOW: return "overflow";
    case FFLAB_E_PRECONDITION: return "precondition";
    case FFLAB_E_WRONG_CHARACTERISTIC: return "wrong_characteristic";
    case FFLAB_E_NON_INTEGRAL: return "non_integral";
    case FFLAB_E_SINGULAR_MODEL: return "singular_model";
    case FFLAB_E_UNSUPPORTED_CHARACTERISTIC: return "unsupported_characteristic";
    case FFLAB_E_INVALID_DISCRIMINANT: return "invalid_discriminant";
    case FFLAB_E_CONFIG: return "config";
    case FFLAB_E_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* fflab_last_error(void) { return t_last_error.c_str(); }

fflab_status fflab_field_create(const char* spec, fflab_field** out) {
  if (spec == nullptr || out == nullptr) return require(false, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto ctx = get_field(FieldSpec::parse(spec));
    *out = new fflab_field{ctx, ctx->spec().str()};
  });
}

void fflab_field_destroy(fflab_field* field) { delete field; }

uint32_t fflab_field_q(const fflab_field* field) { return field->ctx->q(); }
uint32_t fflab_field_p(const fflab_field* field) { return field->ctx->p(); }
uint32_t fflab_field_degree(const fflab_field* field) { return field->ctx->r(); }
uint32_t fflab_field_generator(const fflab_field* field) { return field->ctx->gamma(); }
const char* fflab_field_spec(const fflab_field* field) {
  return field->spec_string.c_str();
}

static fflab_status element_guard(const fflab_field* field, uint32_t x) {
  if (x >= field->ctx->q()) {
    t_last_error = "element out of range";
    return FFLAB_E_INVALID_ARGUMENT;
  }
  return FFLAB_OK;
}

fflab_status fflab_field_add(const fflab_field* field, uint32_t x, uint32_t y,
                             uint32_t* out) {
  if (auto rc = element_guard(field, x); rc != FFLAB_OK) return rc;
  if (auto rc = element_guard(field, y); rc != FFLAB_OK) return rc;
  return guarded([&] { *out = field->ctx->add(x, y); });
}

fflab_status fflab_field_mul(const fflab_field* field, uint32_t x, uint32_t y,
                             uint32_t* out) {
  if (auto rc = element_guard(field, x); rc != FFLAB_OK) return rc;
  if (auto rc = element_guard(field, y); rc != FFLAB_OK) return rc;
  return guarded([&] { *out = field->ctx->mul(x, y); });
}

fflab_status fflab_field_inv(const fflab_field* field, uint32_t x, uint32_t* out) {
  if (auto rc = element_guard(field, x); rc != FFLAB_OK) return rc;
  return guarded([&] { *out = field->ctx->inv(x); });
}

fflab_status fflab_field_pow(const fflab_field* field, uint32_t x, uint64_t e,
                             uint32_t* out) {
  if (auto rc = element_guard(field, x); rc != FFLAB_OK) return rc;
  return guarded([&] { *out = field->ctx->pow(x, e); });
}

fflab_status fflab_field_dlog(const fflab_field* field, uint32_t x, uint32_t* out) {
  if (auto rc = element_guard(field, x); rc != FFLAB_OK) return rc;
  return guarded([&] { *out = field->ctx->dlog(x); });
}

fflab_status fflab_field_abs_trace(const fflab_field* field, uint32_t x,
                                   uint32_t* out) {
  if (auto rc = element_guard(field, x); rc != FFLAB_OK) return rc;
  return guarded([&] { *out = field->ctx->abs_trace(x); });
}

fflab_status fflab_tower_create(const char* base_spec, uint32_t t, fflab_tower** out) {
  if (base_spec == nullptr || out == nullptr) return require(false, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new fflab_tower{get_tower(FieldSpec::parse(base_spec), t)};
  });
}

void fflab_tower_destroy(fflab_tower* tower) { delete tower; }

uint32_t fflab_tower_base_q(const fflab_tower* tower) { return tower->ctx->base().q(); }
uint32_t fflab_tower_top_q(const fflab_tower* tower) { return tower->ctx->top().q(); }
uint32_t fflab_tower_degree(const fflab_tower* tower) { return tower->ctx->t(); }

fflab_status fflab_tower_trace(const fflab_tower* tower, uint32_t x, uint32_t* out) {
  if (x >= tower->ctx->top().q()) return require(false, "element out of range");
  return guarded([&] { *out = tower->ctx->trace(x); });
}

fflab_status fflab_tower_norm(const fflab_tower* tower, uint32_t x, uint32_t* out) {
  if (x >= tower->ctx->top().q()) return require(false, "element out of range");
  return guarded([&] { *out = tower->ctx->norm(x); });
}

fflab_status fflab_tower_embed(const fflab_tower* tower, uint32_t base_x,
                               uint32_t* out) {
  if (base_x >= tower->ctx->base().q()) return require(false, "element out of range");
  return guarded([&] { *out = tower->ctx->embed(base_x); });
}

fflab_status fflab_tower_solve_congruence(const fflab_tower* tower, uint64_t m,
                                          uint32_t b, uint32_t* d, int* solvable,
                                          uint32_t* i0) {
  if (b >= tower->ctx->base().q()) return require(false, "element out of range");
  return guarded([&] {
    auto sol = tower->ctx->solve_norm_congruence(m, b);
    *d = sol.d;
    *solvable = sol.solvable ? 1 : 0;
    *i0 = sol.i0;
  });
}

fflab_status fflab_kloosterman(const char* spec, uint32_t n, uint32_t c,
                               int64_t* out) {
  if (spec == nullptr || out == nullptr) return require(false, "null argument");
  return guarded([&] {
    auto F = get_field(FieldSpec::parse(spec));
    *out = kloosterman_int(*F, n, c);
  });
}

fflab_status fflab_class_number_h(int64_t d, int64_t* out) {
  if (out == nullptr) return require(false, "null argument");
  return guarded([&] { *out = class_number_h(d); });
}

fflab_status fflab_kronecker_class_number(int64_t d, int64_t* out) {
  if (out == nullptr) return require(false, "null argument");
  return guarded([&] { *out = kronecker_class_number(d); });
}

fflab_status fflab_cubic_point_count(const char* spec, uint32_t c, int64_t* total,
                                     int64_t* trace) {
  if (spec == nullptr || total == nullptr || trace == nullptr)
    return require(false, "null argument");
  return guarded([&] {
    auto F = get_field(FieldSpec::parse(spec));
    PointCount pc = count_points(CubicModel{F, c});
    *total = pc.total;
    *trace = pc.trace;
  });
}

fflab_status fflab_deuring_class_count(const char* spec, int64_t trace, int64_t* out) {
  if (spec == nullptr || out == nullptr) return require(false, "null argument");
  return guarded([&] {
    auto F = get_field(FieldSpec::parse(spec));
    *out = deuring_class_count(*F, trace);
  });
}

fflab_status fflab_report_field(const char* spec, fflab_report** out) {
  if (spec == nullptr || out == nullptr) return require(false, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new fflab_report{field_report(spec)}; });
}

fflab_status fflab_report_count(const char* spec, uint32_t m, int has_ab, uint32_t a,
                                uint32_t b, fflab_report** out) {
  if (spec == nullptr || out == nullptr) return require(false, "null argument");
  *out = nullptr;
  return guarded([&] {
    std::optional<std::pair<Elem, Elem>> ab;
    if (has_ab) ab = std::make_pair(a, b);
    *out = new fflab_report{count_report(spec, m, ab)};
  });
}

fflab_status fflab_report_kloosterman(const char* spec, uint32_t n, int has_c,
                                      uint32_t c, fflab_report** out) {
  if (spec == nullptr || out == nullptr) return require(false, "null argument");
  *out = nullptr;
  return guarded([&] {
    std::optional<Elem> copt;
    if (has_c) copt = c;
    *out = new fflab_report{kloosterman_report(spec, n, copt)};
  });
}

fflab_status fflab_report_curve(const char* spec, int has_c, uint32_t c,
                                fflab_report** out) {
  if (spec == nullptr || out == nullptr) return require(false, "null argument");
  *out = nullptr;
  return guarded([&] {
    std::optional<Elem> copt;
    if (has_c) copt = c;
    *out = new fflab_report{curve_report(spec, copt)};
  });
}

fflab_status fflab_report_classnum(int64_t d, fflab_report** out) {
  if (out == nullptr) return require(false, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new fflab_report{classnum_report(d)}; });
}

fflab_status fflab_report_distribution(const char* spec, fflab_report** out) {
  if (spec == nullptr || out == nullptr) return require(false, "null argument");
  *out = nullptr;
  return guarded([&] { *out = new fflab_report{distribution_report(spec)}; });
}

fflab_status fflab_report_verify(const char* suite, int extended, fflab_report** out) {
  if (suite == nullptr || out == nullptr) return require(false, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new fflab_report{verify_suite_report(suite, extended != 0)};
  });
}

const char* fflab_verify_suites(void) {
  static const std::string* names = [] {
    auto* joined = new std::string();
    for (const auto& name : suite_names()) {
      if (!joined->empty()) *joined += "\n";
      *joined += name;
    }
    return joined;
  }();
  return names->c_str();
}

int32_t fflab_report_rows(const fflab_report* report) {
  return static_cast<int32_t>(report->table.rows());
}

int32_t fflab_report_cols(const fflab_report* report) {
  return static_cast<int32_t>(report->table.columns().size());
}

const char* fflab_report_col_name(const fflab_report* report, int32_t col) {
  return report->table.columns()[col].name.c_str();
}

fflab_value_kind fflab_report_col_kind(const fflab_report* report, int32_t col) {
  return static_cast<fflab_value_kind>(
      static_cast<int>(report->table.columns()[col].kind));
}

const char* fflab_report_cell(const fflab_report* report, int32_t row, int32_t col) {
  return report->table.cell(row, col).c_str();
}

int fflab_report_pass(const fflab_report* report) {
  return report->table.pass() ? 1 : 0;
}

void fflab_report_destroy(fflab_report* report) { delete report; }

}  // extern "C"
