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

#include "fflab/curves.hpp"

#include <vector>

#include "fflab/charsum.hpp"
#include "fflab/counting.hpp"
#include "fflab/detail/util.hpp"

namespace fflab {
namespace {

// x^3 + a2 x^2 + a4 x + a6
Elem rhs_cubic(const FieldCtx& F, const WeierstrassModel& m, Elem x) {
  Elem v = F.add(x, m.a2);
  v = F.add(F.mul(v, x), m.a4);
  return F.add(F.mul(v, x), m.a6);
}

// homogeneous F(X,Y,Z) = Y^2 Z + a1 XYZ + a3 Y Z^2 - X^3 - a2 X^2 Z
//                        - a4 X Z^2 - a6 Z^3
Elem hom_eval(const FieldCtx& F, const WeierstrassModel& m, Elem X, Elem Y, Elem Z) {
  Elem v = F.mul(F.mul(Y, Y), Z);
  v = F.add(v, F.mul(m.a1, F.mul(X, F.mul(Y, Z))));
  v = F.add(v, F.mul(m.a3, F.mul(Y, F.mul(Z, Z))));
  v = F.sub(v, F.mul(X, F.mul(X, X)));
  v = F.sub(v, F.mul(m.a2, F.mul(F.mul(X, X), Z)));
  v = F.sub(v, F.mul(m.a4, F.mul(X, F.mul(Z, Z))));
  v = F.sub(v, F.mul(m.a6, F.mul(Z, F.mul(Z, Z))));
  return v;
}

std::int64_t count_infinite(const FieldCtx& F, const WeierstrassModel& m) {
  std::int64_t n = 0;
  for (Elem x = 0; x < F.q(); ++x)
    if (hom_eval(F, m, x, 1, 0) == 0) ++n;
  if (hom_eval(F, m, 1, 0, 0) == 0) ++n;
  return n;
}

}  // namespace

WeierstrassModel to_weierstrass(const CubicModel& model) {
  if (model.c == 0) fail(errc::precondition, "cubic parameter c must be nonzero");
  return WeierstrassModel{model.ctx, 1, 0, model.c, 0, 0};
}

PointCount count_points(const WeierstrassModel& model) {
  const FieldCtx& F = *model.ctx;
  if (F.q() > (1u << 16)) fail(errc::precondition, "point count capped at q <= 2^16");
  std::int64_t affine = 0;
  if (F.p() == 2) {
    for (Elem x = 0; x < F.q(); ++x) {
      Elem B = F.add(F.mul(model.a1, x), model.a3);
      Elem rhs = rhs_cubic(F, model, x);
      if (B == 0) {
        ++affine;  // y -> y^2 is a bijection
      } else {
        Elem w = F.mul(rhs, F.inv(F.mul(B, B)));
        if (F.abs_trace(w) == 0) affine += 2;
      }
    }
  } else {
    for (Elem x = 0; x < F.q(); ++x) {
      Elem B = F.add(F.mul(model.a1, x), model.a3);
      Elem disc = F.add(F.mul(B, B), F.mul(F.scalar(4), rhs_cubic(F, model, x)));
      affine += 1 + F.quad_char(disc);
    }
  }
  PointCount pc;
  pc.total = affine + count_infinite(F, model);
  pc.trace = pc.total - F.q() - 1;
  return pc;
}

PointCount count_points(const CubicModel& model) {
  return count_points(to_weierstrass(model));
}

bool is_singular(const WeierstrassModel& model) {
  const FieldCtx& F = *model.ctx;
  if (F.q() > (1u << 12))
    fail(errc::precondition, "singularity scan capped at q <= 2^12");
  const Elem two = F.scalar(2), three = F.scalar(3);
  auto dX = [&](Elem X, Elem Y, Elem Z) {
    Elem v = F.mul(model.a1, F.mul(Y, Z));
    v = F.sub(v, F.mul(three, F.mul(X, X)));
    v = F.sub(v, F.mul(two, F.mul(model.a2, F.mul(X, Z))));
    return F.sub(v, F.mul(model.a4, F.mul(Z, Z)));
  };
  auto dY = [&](Elem X, Elem Y, Elem Z) {
    Elem v = F.mul(two, F.mul(Y, Z));
    v = F.add(v, F.mul(model.a1, F.mul(X, Z)));
    return F.add(v, F.mul(model.a3, F.mul(Z, Z)));
  };
  auto dZ = [&](Elem X, Elem Y, Elem Z) {
    Elem v = F.mul(Y, Y);
    v = F.add(v, F.mul(model.a1, F.mul(X, Y)));
    v = F.add(v, F.mul(two, F.mul(model.a3, F.mul(Y, Z))));
    v = F.sub(v, F.mul(model.a2, F.mul(X, X)));
    v = F.sub(v, F.mul(two, F.mul(model.a4, F.mul(X, Z))));
    return F.sub(v, F.mul(three, F.mul(model.a6, F.mul(Z, Z))));
  };
  auto singular_at = [&](Elem X, Elem Y, Elem Z) {
    return hom_eval(F, model, X, Y, Z) == 0 && dX(X, Y, Z) == 0 &&
           dY(X, Y, Z) == 0 && dZ(X, Y, Z) == 0;
  };
  for (Elem x = 0; x < F.q(); ++x)
    for (Elem y = 0; y < F.q(); ++y)
      if (singular_at(x, y, 1)) return true;
  for (Elem x = 0; x < F.q(); ++x)
    if (singular_at(x, 1, 0)) return true;
  return singular_at(1, 0, 0);
}

bool is_singular(const CubicModel& model) {
  return is_singular(to_weierstrass(model));
}

std::int64_t p3_via_curve(const FieldCtx& ctx, Elem a, Elem b) {
  if (a == 0 || b == 0) fail(errc::precondition, "a and b must be nonzero");
  auto ptr = get_field(ctx.spec());
  Elem c = ctx.mul(b, ctx.inv(ctx.pow(a, 3)));
  PointCount pc = count_points(CubicModel{ptr, c});
  std::int64_t eps = 0;
  if (ctx.p() != 3 && c == ctx.inv(ctx.scalar(27))) eps = 1;
  std::int64_t num = pc.total - eps;
  if (num % 3 != 0) fail(errc::internal, "curve count is not divisible by 3");
  return num / 3;
}

std::int64_t singular_case_p3(const FieldCtx& ctx, Elem a) {
  if (ctx.p() == 3) fail(errc::wrong_characteristic, "needs p != 3");
  if (a == 0) fail(errc::precondition, "a must be nonzero");
  bool plus = ctx.p() % 3 == 2 && ctx.r() % 2 == 1;
  std::int64_t num = static_cast<std::int64_t>(ctx.q()) + (plus ? 1 : -1);
  if (num % 3 != 0) fail(errc::internal, "degenerate count is not divisible by 3");
  return num / 3;
}

WeierstrassModel to_char3_form(const CubicModel& model) {
  const FieldCtx& F = *model.ctx;
  if (F.p() != 3) fail(errc::wrong_characteristic, "needs p = 3");
  if (model.c == 0) fail(errc::precondition, "cubic parameter c must be nonzero");
  return WeierstrassModel{model.ctx, 0, 1, 0, 0, F.neg(model.c)};
}

ReducedChar3 reduce_char3(const WeierstrassModel& model) {
  const FieldCtx& F = *model.ctx;
  if (F.p() != 3) fail(errc::wrong_characteristic, "needs p = 3");
  // complete the square: y -> y - (a1 x + a3)/2
  Elem quarter = F.inv(F.scalar(4));
  Elem half = F.inv(F.scalar(2));
  Elem A2 = F.add(model.a2, F.mul(F.mul(model.a1, model.a1), quarter));
  Elem A4 = F.add(model.a4, F.mul(F.mul(model.a1, model.a3), half));
  Elem A6 = F.add(model.a6, F.mul(F.mul(model.a3, model.a3), quarter));
  if (A2 == 0) return ReducedChar3{ReducedKind::linear_term, A4, A6};
  // x -> x + e with e = A4/A2 kills the linear term (cubes are additive here)
  Elem e = F.mul(A4, F.inv(A2));
  Elem b = F.add(F.add(F.pow(e, 3), F.mul(A2, F.mul(e, e))), F.add(F.mul(A4, e), A6));
  return ReducedChar3{ReducedKind::quadratic_term, A2, b};
}

Elem j_invariant(const WeierstrassModel& model) {
  const FieldCtx& F = *model.ctx;
  ReducedChar3 red = reduce_char3(model);
  if (red.kind == ReducedKind::linear_term) {
    if (red.A == 0) fail(errc::singular_model, "reduced model is singular");
    return 0;
  }
  if (red.A == 0 || red.B == 0) fail(errc::singular_model, "reduced model is singular");
  return F.neg(F.mul(F.pow(red.A, 3), F.inv(red.B)));
}

bool is_supersingular(const WeierstrassModel& model) {
  return j_invariant(model) == 0;
}

std::pair<std::int64_t, std::int64_t> twist_counts(const FieldCtx& ctx, Elem a, Elem b) {
  if (ctx.p() != 3) fail(errc::wrong_characteristic, "needs p = 3");
  if (a == 0 || b == 0) fail(errc::singular_model, "y^2 = x^3 + ax^2 + b needs ab != 0");
  auto ptr = get_field(ctx.spec());
  WeierstrassModel e{ptr, 0, a, 0, 0, b};
  WeierstrassModel companion{ptr, 0, 1, 0, 0, ctx.mul(b, ctx.inv(ctx.pow(a, 3)))};
  return {count_points(e).total, count_points(companion).total};
}

std::int64_t kloosterman_via_curve(const FieldCtx& ctx, Elem c) {
  if (ctx.p() != 3) fail(errc::wrong_characteristic, "needs p = 3");
  if (c == 0) fail(errc::precondition, "c must be nonzero");
  auto ptr = get_field(ctx.spec());
  return count_points(CubicModel{ptr, c}).trace;
}

std::int64_t deuring_class_count(const FieldCtx& ctx, std::int64_t trace) {
  if (ctx.p() < 5)
    fail(errc::unsupported_characteristic, "class census needs p >= 5");
  if (ctx.q() > 13) fail(errc::precondition, "class census capped at q <= 13");
  const std::uint32_t q = ctx.q();
  const std::int64_t wanted = static_cast<std::int64_t>(q) + 1 + trace;

  // point counts for every nonsingular y^2 = x^3 + Ax + B
  std::vector<std::int64_t> counts(q * q, -1);
  for (Elem A = 0; A < q; ++A) {
    for (Elem B = 0; B < q; ++B) {
      Elem disc = ctx.add(ctx.mul(ctx.scalar(4), ctx.pow(A, 3)),
                          ctx.mul(ctx.scalar(27), ctx.mul(B, B)));
      if (disc == 0) continue;
      std::int64_t n = q + 1;
      for (Elem x = 0; x < q; ++x) {
        Elem rhs = ctx.add(ctx.mul(ctx.add(ctx.mul(x, x), A), x), B);
        n += ctx.quad_char(rhs);
      }
      counts[A * q + B] = n;
    }
  }
  std::vector<bool> visited(q * q, false);
  std::int64_t classes = 0;
  for (std::uint32_t idx = 0; idx < q * q; ++idx) {
    if (counts[idx] < 0 || visited[idx]) continue;
    Elem A = static_cast<Elem>(idx / q), B = static_cast<Elem>(idx % q);
    if (counts[idx] == wanted) ++classes;
    for (std::uint64_t k = 0; k + 1 < q; ++k) {
      Elem u = ctx.exp(k);
      Elem A2 = ctx.mul(ctx.pow(u, 4), A);
      Elem B2 = ctx.mul(ctx.pow(u, 6), B);
      visited[A2 * q + B2] = true;
    }
  }
  return classes;
}

}  // namespace fflab
