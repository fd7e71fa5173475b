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

#include "fflab/charsum.hpp"

#include <numeric>
#include <vector>

#include "fflab/detail/util.hpp"

namespace fflab {

CycInt additive_char(const FieldCtx& ctx, Elem x) {
  return CycInt::root(ctx.p(), ctx.abs_trace(x));
}

CycInt gauss_sum(const FieldCtx& ctx, MultCharIndex psi) {
  const std::uint64_t group = ctx.q() - 1;
  const std::uint32_t p = ctx.p();
  const std::uint64_t j = psi.j % group;
  const std::uint64_t ord = group / std::gcd(j, group);  // j = 0 -> trivial
  const std::uint32_t n = static_cast<std::uint32_t>(std::uint64_t{p} * ord);
  CycInt out(n);
  const auto& exp = ctx.exp_table();
  for (std::uint64_t k = 0; k < group; ++k) {
    // zeta_p^tr * zeta_ord^mult = zeta_n^(tr*ord + mult*p), n = p*ord
    std::uint64_t mult_part = ord == 1 ? 0 : (j * k % group) / (group / ord);
    out.add_root(std::uint64_t{ctx.abs_trace(exp[k])} * ord + mult_part * p);
  }
  return out;
}

CycInt twisted_power_sum(const FieldCtx& ctx, Elem coeff, std::uint64_t s) {
  const std::uint64_t group = ctx.q() - 1;
  const std::uint32_t p = ctx.p();
  CycInt out(p);
  if (coeff == 0) {
    out.add_root(0, static_cast<std::int64_t>(group));
    return out;
  }
  // x^s ranges over the subgroup of index gcd(s, q-1), each value hit
  // gcd(s, q-1) times
  const std::uint64_t g0 = std::gcd(s, group);
  const std::uint64_t len = group / g0;
  std::vector<std::int64_t> hist(p, 0);
  const auto& exp = ctx.exp_table();
  std::uint64_t idx = ctx.dlog(coeff);
  for (std::uint64_t i = 0; i < len; ++i) {
    ++hist[ctx.abs_trace(exp[idx])];
    idx += g0;
    if (idx >= group) idx -= group;
  }
  for (std::uint32_t t = 0; t < p; ++t)
    if (hist[t] != 0) out.add_root(t, hist[t] * static_cast<std::int64_t>(g0));
  return out;
}

CycInt kloosterman(const FieldCtx& ctx, std::uint32_t n, Elem c) {
  if (c == 0) fail(errc::precondition, "Kloosterman sums need c != 0");
  if (n == 0) return additive_char(ctx, c);
  std::uint64_t work = 1;
  for (std::uint32_t i = 0; i < n; ++i) {
    work *= ctx.q();
    if (work > (std::uint64_t{1} << 22))
      fail(errc::precondition, "Kloosterman enumeration exceeds 2^22 terms");
  }
  const std::uint64_t group = ctx.q() - 1;
  const std::uint32_t p = ctx.p();
  const std::uint64_t logc = ctx.dlog(c);
  const auto& exp = ctx.exp_table();
  std::vector<std::int64_t> hist(p, 0);
  const std::uint64_t wrap = std::uint64_t{n} * group;
  auto rec = [&](auto&& self, std::uint32_t depth, Elem sum, std::uint64_t logprod) -> void {
    if (depth == n) {
      Elem y = exp[(logc + wrap - logprod) % group];
      ++hist[ctx.abs_trace(ctx.add(sum, y))];
      return;
    }
    for (std::uint64_t k = 0; k < group; ++k)
      self(self, depth + 1, ctx.add(sum, exp[k]), logprod + k);
  };
  rec(rec, 0, 0, 0);
  CycInt out(p);
  for (std::uint32_t t = 0; t < p; ++t)
    if (hist[t] != 0) out.add_root(t, hist[t]);
  return out;
}

std::int64_t kloosterman_int(const FieldCtx& ctx, std::uint32_t n, Elem c) {
  return kloosterman(ctx, n, c).to_integer();
}

CycInt trace_norm_char_sum(const TowerCtx& tw, std::uint64_t m, Elem a, Elem b) {
  const FieldCtx& base = tw.base();
  const FieldCtx& top = tw.top();
  const std::uint32_t p = base.p();
  if (m == 0 || m % tw.t() != 0) fail(errc::precondition, "t must divide m");
  const std::uint64_t mt = m / tw.t();
  if (mt % p == 0)
    fail(errc::precondition, "p divides m/t; this case has a closed count");
  auto sol = tw.solve_norm_congruence(m, b);
  if (!sol.solvable)
    fail(errc::precondition, "norm congruence unsolvable; the count is zero");

  // a0 = (t/m) a, i.e. a divided by the unit (m/t mod p)
  Elem a0 = base.mul(a, base.inv(base.scalar(mt % p)));
  const std::uint64_t s = (base.q() - 1) / sol.d;
  const Elem w0 = top.exp(sol.i0);

  CycInt total(p);
  for (std::uint64_t l = 0; l + 1 < base.q(); ++l) {
    Elem c = base.exp(l);
    std::uint32_t shift = base.abs_trace(base.neg(base.mul(c, a0)));
    CycInt inner = twisted_power_sum(top, top.mul(tw.embed(c), w0), s);
    total += inner * CycInt::root(p, shift);
  }
  return total;
}

bool verify_gauss_decomposition(const TowerCtx& tw, std::uint32_t n, Elem alpha) {
  const FieldCtx& base = tw.base();
  const FieldCtx& top = tw.top();
  const std::uint64_t qm1 = base.q() - 1;
  if (n == 0 || qm1 % n != 0) fail(errc::precondition, "n must divide q-1");
  if (alpha == 0) fail(errc::precondition, "alpha must be nonzero");

  const std::uint32_t p = base.p();
  const std::uint32_t big = static_cast<std::uint32_t>(std::uint64_t{p} * qm1);
  CycInt lhs = twisted_power_sum(top, alpha, n).embedded(big);

  const std::uint64_t top_group = top.q() - 1;
  const std::uint64_t index = tw.subfield_index();
  const std::uint64_t norm_exp = top.dlog(alpha) % qm1;  // N(alpha) = g^norm_exp
  CycInt rhs(big);
  for (std::uint32_t i = 0; i < n; ++i) {
    std::uint64_t j = qm1 / n * i;
    // conjugate character composed with the norm, as a top-field character
    std::uint64_t jp = (top_group - j * index % top_group) % top_group;
    CycInt g = gauss_sum(top, MultCharIndex{static_cast<std::uint32_t>(jp)});
    CycInt rot = CycInt::root(big, j * norm_exp % qm1 * (big / qm1));
    rhs += g.embedded(big) * rot;
  }
  return lhs == rhs;
}

bool verify_carlitz(const FieldCtx& ctx, Elem c) {
  if (ctx.p() != 2) fail(errc::wrong_characteristic, "identity is specific to char 2");
  if (c == 0) fail(errc::precondition, "c must be nonzero");
  std::int64_t k1 = kloosterman_int(ctx, 1, c);
  std::int64_t k2 = kloosterman_int(ctx, 2, c);
  return k2 == k1 * k1 - static_cast<std::int64_t>(ctx.q());
}

bool verify_kloosterman_lift(const TowerCtx& tw, Elem alpha) {
  if (alpha == 0) fail(errc::precondition, "alpha must be nonzero");
  const FieldCtx& base = tw.base();
  const std::uint32_t m = tw.t();
  const std::int64_t qm1 = static_cast<std::int64_t>(base.q()) - 1;
  CycInt lhs = twisted_power_sum(tw.top(), alpha, base.q() - 1);
  CycInt k = kloosterman(base, m - 1, tw.norm(alpha));
  CycInt rhs = k.scaled(m % 2 == 1 ? qm1 : -qm1);
  return lhs == rhs;
}

}  // namespace fflab
