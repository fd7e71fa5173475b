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
#include <optional>
#include <string>
#include <vector>

#include "fflab/field.hpp"

namespace fflab {

/// A (q, m, t, a, b) counting instance: elements of F_{q^t}^* whose degree-m
/// trace is a and degree-m norm is b, for t | m, m >= 2, b != 0.
struct CountInstance {
  FieldPtr base;
  std::uint32_t m = 2;
  std::uint32_t t = 1;
  Elem a = 0;
  Elem b = 1;
};

void validate(const CountInstance& inst);

/// Exhaustive count inside F_{q^t}, applying the reductions
/// tr_m(x) = (m/t) tr_t(x) and N_m(x) = N_t(x)^{m/t} (with the zero-trace
/// case split when p divides m/t).
std::int64_t trace_norm_count_direct(const CountInstance& inst);

/// Closed evaluation through the congruence criterion, the p | m/t branch
/// count, the zero-trace power-sum form, and the nonzero-trace character sum.
/// Always defined; equals the direct count on every instance.
std::int64_t trace_norm_count_formula(const CountInstance& inst);

/// Number of solutions of x_1 + ... + x_t = 1, x_1 * ... * x_t = c in F_q^t
/// (all coordinates are forced nonzero). 1 <= t <= 4, c != 0.
std::int64_t system_solution_count(const FieldCtx& ctx, std::uint32_t t, Elem c);

/// Count via the symmetric-system route; requires a != 0, p not dividing m/t,
/// a solvable norm congruence and t <= 4.
std::int64_t trace_norm_count_system(const CountInstance& inst);

/// Number of monic irreducibles x^m - a x^{m-1} + ... + (-1)^m b over F_q
/// by direct enumeration of the free middle coefficients.
std::int64_t irreducible_count_direct(const FieldCtx& ctx, std::uint32_t m, Elem a, Elem b);

/// Moebius inversion over the divisors of m, with the formula route for each
/// divisor count. The division by m is exact; non-divisibility is a hard
/// error (it would prove a bug upstream, not a data issue).
std::int64_t irreducible_count_moebius(const FieldCtx& ctx, std::uint32_t m, Elem a, Elem b);

/// Closed forms where one applies: zero trace with m coprime to both p and
/// q-1; zero trace with m a power of p; and the hyper-Kloosterman form for
/// m = p^k > 2 with ab != 0. Empty when none applies.
std::optional<std::int64_t> irreducible_count_closed(const FieldCtx& ctx, std::uint32_t m,
                                                     Elem a, Elem b);

/// Deterministic irreducibility test for a monic polynomial over F_q
/// (coefficients constant-term-first): x^{q^m} = x mod f together with
/// gcd(x^{q^{m/l}} - x, f) = 1 for every prime l | m.
bool is_irreducible(const FieldCtx& ctx, const std::vector<Elem>& coeffs);

/// Histogram of monic irreducible degree-m polynomials with nonzero constant
/// term, indexed by trace * q + norm.
std::vector<std::int64_t> irreducible_histogram(const FieldCtx& ctx, std::uint32_t m);

/// One exact inequality verdict. Both sides are cleared of denominators and
/// square roots (squared comparison), so the verdict is an integer compare:
/// lhs <= rhs, or lhs < rhs for strict bounds. slack() = rhs - lhs.
struct BoundCheck {
  std::string name;
  long long lhs = 0;
  long long rhs = 0;
  bool strict = false;
  bool holds = false;
  long long slack() const { return rhs - lhs; }
};

struct BoundReport {
  std::vector<BoundCheck> checks;
  bool all_hold() const;
};

/// Evaluates every named inequality applicable at the instance's (m, a, b):
/// the effective irreducible-count bound ("wan"), the general trace/norm
/// count bound ("katz"), the sharpened zero-trace form ("zero_trace"), the
/// closed nonzero-trace form ("nonzero_trace", strict), the cubic
/// floor/ceiling bounds ("cubic_lower"/"cubic_upper"), the symmetric-system
/// bound ("system"), and the prime-power forms ("prime_power", "deligne").
BoundReport bounds_report(const CountInstance& inst);

}  // namespace fflab
