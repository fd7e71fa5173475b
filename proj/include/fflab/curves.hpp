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

#pragma once

#include <cstdint>
#include <utility>

#include "fflab/field.hpp"

namespace fflab {

/// The plane cubic y^2 + cy + xy = x^3 over F_q, c != 0. Singular exactly
/// when p != 3 and c = 1/27.
struct CubicModel {
  FieldPtr ctx;
  Elem c = 1;
};

/// Long Weierstrass form y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6.
struct WeierstrassModel {
  FieldPtr ctx;
  Elem a1 = 0, a2 = 0, a3 = 0, a4 = 0, a6 = 0;
};

struct PointCount {
  std::int64_t total = 0;  // projective points
  std::int64_t trace = 0;  // total - q - 1
};

WeierstrassModel to_weierstrass(const CubicModel& model);

/// Projective point count: per-x quadratic solving for the affine part plus
/// an explicit enumeration of the line Z = 0 on the homogenized cubic.
PointCount count_points(const WeierstrassModel& model);
PointCount count_points(const CubicModel& model);

/// Exhaustive search for a common zero of the three partial derivatives on
/// the projective curve.
bool is_singular(const WeierstrassModel& model);
bool is_singular(const CubicModel& model);

/// Number of irreducible cubics with trace a and norm b (both nonzero) via
/// the point count of the associated cubic with c = b a^{-3}.
std::int64_t p3_via_curve(const FieldCtx& ctx, Elem a, Elem b);

/// The degenerate cubic count for p != 3, b = (a/3)^3: (q +/- 1)/3 with plus
/// exactly when p = 2 mod 3 and the field degree is odd.
std::int64_t singular_case_p3(const FieldCtx& ctx, Elem a);

/// Char-3 model change: the cubic is isomorphic to y^2 = x^3 + x^2 - c.
WeierstrassModel to_char3_form(const CubicModel& model);

enum class ReducedKind {
  quadratic_term,  // y^2 = x^3 + A x^2 + B
  linear_term,     // y^2 = x^3 + A x  + B
};

struct ReducedChar3 {
  ReducedKind kind;
  Elem A = 0, B = 0;
};

/// Char-3 reduction of a long Weierstrass model: completes the square and,
/// when the x^2 coefficient survives, shifts x to kill the linear term.
ReducedChar3 reduce_char3(const WeierstrassModel& model);

/// j-invariant in characteristic 3: -A^3/B for the quadratic-term form,
/// 0 for the linear-term form. Errors on singular input.
Elem j_invariant(const WeierstrassModel& model);

/// j = 0 criterion in characteristic 3 (equivalent to 3 | trace).
bool is_supersingular(const WeierstrassModel& model);

/// For p = 3 and E: y^2 = x^3 + a x^2 + b (ab != 0), the point counts of E
/// and of its companion y^2 = x^3 + x^2 + b/a^3: equal when a is a square,
/// and summing to 2(q+1) otherwise.
std::pair<std::int64_t, std::int64_t> twist_counts(const FieldCtx& ctx, Elem a, Elem b);

/// k_1(c) read off the cubic's point count (p = 3): |X_c| - q - 1.
std::int64_t kloosterman_via_curve(const FieldCtx& ctx, Elem c);

/// Number of isomorphism classes of y^2 = x^3 + Ax + B over F_q (p >= 5,
/// q <= 13) with point count q + 1 + trace, classes taken under
/// (A, B) ~ (u^4 A, u^6 B).
std::int64_t deuring_class_count(const FieldCtx& ctx, std::int64_t trace);

}  // namespace fflab
