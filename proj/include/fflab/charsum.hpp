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

#include "fflab/cyclotomic.hpp"
#include "fflab/field.hpp"

namespace fflab {

/// A multiplicative character of F_q, indexed by j: lambda(gamma^k) =
/// zeta_{q-1}^{jk}. j = 0 is the trivial character; the characters with
/// j a multiple of (q-1)/n form the subgroup of order n.
struct MultCharIndex {
  std::uint32_t j = 0;
};

/// Canonical additive character zeta_p^{Tr(x)} with Tr the absolute trace.
CycInt additive_char(const FieldCtx& ctx, Elem x);

/// G(psi) = sum over nonzero x of e(x) psi(x), exact in Z[zeta_{p*ord(psi)}].
CycInt gauss_sum(const FieldCtx& ctx, MultCharIndex psi);

/// sum over nonzero x of e(coeff * x^s), exact in Z[zeta_p].
CycInt twisted_power_sum(const FieldCtx& ctx, Elem coeff, std::uint64_t s);

/// n-dimensional Kloosterman sum: sum of chi(x_1+...+x_n + c/(x_1...x_n))
/// over nonzero tuples. n = 0 degenerates to chi(c) (the empty product leaves
/// the single term c). Enumeration is capped at q^n <= 2^22.
CycInt kloosterman(const FieldCtx& ctx, std::uint32_t n, Elem c);
/// Same as an integer; errors with not_rational when the value is not one.
std::int64_t kloosterman_int(const FieldCtx& ctx, std::uint32_t n, Elem c);

/// The character-sum term of the trace/norm count formula:
///   sum over c in F_q^*, x in F_{q^t}^* of
///     chi(-c*a0) e(c gamma^{i0} x^{(q-1)/d}),  a0 = a/(m/t).
/// Requires p not dividing m/t and a solvable norm congruence; other cases
/// are handled by the closed branch counts, not by this sum.
CycInt trace_norm_char_sum(const TowerCtx& tw, std::uint64_t m, Elem a, Elem b);

/// Checks sum over x of e(alpha x^n) against the Gauss-sum decomposition over
/// the order-n character subgroup, exactly in Z[zeta_{lcm(p,q-1)}]. n | q-1.
bool verify_gauss_decomposition(const TowerCtx& tw, std::uint32_t n, Elem alpha);

/// Checks k_2(c) = k_1(c)^2 - q in characteristic 2.
bool verify_carlitz(const FieldCtx& ctx, Elem c);

/// Checks sum over x in F_{q^m}^* of e(alpha x^{q-1}) =
/// (-1)^{m-1} (q-1) k_{m-1}(N(alpha)), the norm lift of a Kloosterman sum.
bool verify_kloosterman_lift(const TowerCtx& tw, Elem alpha);

}  // namespace fflab
