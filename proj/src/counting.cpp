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

#include "fflab/counting.hpp"

#include <algorithm>
#include <numeric>

#include "fflab/charsum.hpp"
#include "fflab/detail/util.hpp"

namespace fflab {
namespace {

using i128 = __int128;

long long to_ll(i128 v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    fail(errc::size_overflow, "bound comparison exceeds 64 bits");
  return static_cast<long long>(v);
}

i128 ipow128(i128 base, std::uint32_t e) {
  i128 v = 1;
  for (std::uint32_t i = 0; i < e; ++i) v *= base;
  return v;
}

// (q^e - 1)/(q - 1)
i128 geometric(std::uint64_t q, std::uint32_t e) {
  i128 v = 0, qe = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    v += qe;
    qe *= static_cast<i128>(q);
  }
  return v;
}

// ---- dense polynomials over F_q (coefficients constant-first) ----

using QPoly = std::vector<Elem>;

void qtrim(QPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

// a * b reduced by the monic modulus f
QPoly qmulmod(const FieldCtx& F, const QPoly& a, const QPoly& b, const QPoly& f) {
  if (a.empty() || b.empty()) return {};
  QPoly acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j] != 0) acc[i + j] = F.add(acc[i + j], F.mul(a[i], b[j]));
  }
  const std::size_t deg = f.size() - 1;
  for (std::size_t i = acc.size(); i-- > deg;) {
    Elem c = acc[i];
    if (c == 0) continue;
    acc[i] = 0;
    for (std::size_t j = 0; j + 1 < f.size(); ++j)
      acc[i - deg + j] = F.sub(acc[i - deg + j], F.mul(c, f[j]));
  }
  acc.resize(std::min(acc.size(), deg));
  qtrim(acc);
  return acc;
}

QPoly qpowmod(const FieldCtx& F, QPoly base, std::uint64_t e, const QPoly& f) {
  QPoly result{1};
  while (e > 0) {
    if (e & 1) result = qmulmod(F, result, base, f);
    base = qmulmod(F, base, base, f);
    e >>= 1;
  }
  return result;
}

QPoly qsub(const FieldCtx& F, const QPoly& a, const QPoly& b) {
  QPoly out(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i)
    out[i] = F.sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0);
  qtrim(out);
  return out;
}

QPoly qgcd(const FieldCtx& F, QPoly a, QPoly b) {
  while (!b.empty()) {
    Elem lead_inv = F.inv(b.back());
    while (a.size() >= b.size() && !a.empty()) {
      Elem c = F.mul(a.back(), lead_inv);
      std::size_t shift = a.size() - b.size();
      for (std::size_t i = 0; i < b.size(); ++i)
        a[shift + i] = F.sub(a[shift + i], F.mul(c, b[i]));
      qtrim(a);
    }
    std::swap(a, b);
  }
  return a;
}

}  // namespace

void validate(const CountInstance& inst) {
  if (!inst.base) fail(errc::invalid_argument, "missing base field");
  if (inst.m < 2) fail(errc::precondition, "degree m must be at least 2");
  if (inst.t == 0 || inst.m % inst.t != 0)
    fail(errc::precondition, "t must divide m");
  if (inst.b == 0) fail(errc::precondition, "b must be nonzero");
  if (inst.a >= inst.base->q() || inst.b >= inst.base->q())
    fail(errc::invalid_argument, "element out of range");
}

std::int64_t trace_norm_count_direct(const CountInstance& inst) {
  validate(inst);
  const FieldCtx& base = *inst.base;
  auto tw = get_tower(base.spec(), inst.t);
  const FieldCtx& top = tw->top();
  const std::uint32_t p = base.p();
  const std::uint64_t group = base.q() - 1;
  const std::uint64_t mt = inst.m / inst.t;
  const std::uint64_t mtr = group == 0 ? 0 : mt % group;
  const std::uint32_t ind = tw->ind_g(inst.b);
  const auto& exp = top.exp_table();

  bool need_trace = true;
  Elem target = 0;
  if (inst.a != 0) {
    if (mt % p == 0) return 0;
    Elem a0 = base.mul(inst.a, base.inv(base.scalar(mt % p)));
    target = tw->embed(a0);
  } else if (mt % p == 0) {
    need_trace = false;
  }

  std::int64_t count = 0;
  for (std::uint64_t k = 0; k + 1 < top.q(); ++k) {
    if ((k % group) * mtr % group != ind) continue;
    if (need_trace && tw->trace_top(exp[k]) != target) continue;
    ++count;
  }
  return count;
}

std::int64_t trace_norm_count_formula(const CountInstance& inst) {
  validate(inst);
  const FieldCtx& base = *inst.base;
  auto tw = get_tower(base.spec(), inst.t);
  const std::uint32_t p = base.p();
  const std::uint64_t q = base.q();
  const std::uint64_t mt = inst.m / inst.t;

  if (inst.a != 0 && mt % p == 0) return 0;
  auto sol = tw->solve_norm_congruence(inst.m, inst.b);
  if (!sol.solvable) return 0;

  if (inst.a == 0 && mt % p == 0) {
    // every solution exponent class contributes a full norm fiber
    return static_cast<std::int64_t>(sol.d * tw->subfield_index());
  }

  if (inst.a == 0) {
    const std::uint64_t s = std::gcd<std::uint64_t>(inst.t, (q - 1) / sol.d);
    CycInt sum = CycInt::integer(p, 1) +
                 twisted_power_sum(tw->top(), tw->top().exp(sol.i0), s);
    i128 num = static_cast<i128>(sol.d) *
               (geometric(q, inst.t - 1) * static_cast<i128>(q) + sum.to_integer());
    if (num % static_cast<i128>(q) != 0 || num < 0)
      fail(errc::internal, "zero-trace count failed the integrality check");
    return static_cast<std::int64_t>(num / static_cast<i128>(q));
  }

  std::int64_t sigma = trace_norm_char_sum(*tw, inst.m, inst.a, inst.b).to_integer();
  i128 num = static_cast<i128>(sol.d) * (ipow128(q, inst.t) - 1 + sigma);
  i128 den = static_cast<i128>(q) * (q - 1);
  if (num % den != 0 || num < 0)
    fail(errc::internal, "trace/norm count failed the integrality check");
  return static_cast<std::int64_t>(num / den);
}

std::int64_t system_solution_count(const FieldCtx& ctx, std::uint32_t t, Elem c) {
  if (c == 0) fail(errc::precondition, "c must be nonzero");
  if (t == 0 || t > 4) fail(errc::precondition, "system degree must be 1..4");
  if (t >= 2 && detail::upow_checked(ctx.q(), t - 1) > kMaxFieldSize)
    fail(errc::precondition, "system enumeration exceeds 2^20");
  if (t == 1) return c == 1 ? 1 : 0;
  const std::uint64_t group = ctx.q() - 1;
  const auto& exp = ctx.exp_table();
  const std::uint64_t logc = ctx.dlog(c);
  const std::uint64_t wrap = std::uint64_t{t} * group;
  std::int64_t count = 0;
  auto rec = [&](auto&& self, std::uint32_t depth, Elem sum, std::uint64_t logprod) -> void {
    if (depth == t - 1) {
      Elem last = exp[(logc + wrap - logprod) % group];
      if (ctx.add(sum, last) == 1) ++count;
      return;
    }
    for (std::uint64_t k = 0; k < group; ++k)
      self(self, depth + 1, ctx.add(sum, exp[k]), logprod + k);
  };
  rec(rec, 0, 0, 0);
  return count;
}

std::int64_t trace_norm_count_system(const CountInstance& inst) {
  validate(inst);
  const FieldCtx& base = *inst.base;
  auto tw = get_tower(base.spec(), inst.t);
  const std::uint32_t p = base.p();
  const std::uint64_t q = base.q();
  const std::uint64_t mt = inst.m / inst.t;
  if (inst.a == 0) fail(errc::precondition, "system route needs a != 0");
  if (mt % p == 0) fail(errc::precondition, "system route needs p not dividing m/t");
  if (inst.t > 4) fail(errc::precondition, "system route needs t <= 4");
  auto sol = tw->solve_norm_congruence(inst.m, inst.b);
  if (!sol.solvable)
    fail(errc::precondition, "norm congruence unsolvable; the count is zero");

  Elem a0 = base.mul(inst.a, base.inv(base.scalar(mt % p)));
  Elem a0t_inv = base.inv(base.pow(a0, inst.t));
  std::int64_t system_total = 0;
  for (std::uint32_t i = 0; i < sol.d; ++i) {
    Elem ci = base.mul(base.exp((q - 1) / sol.d * i + sol.i0), a0t_inv);
    system_total += system_solution_count(base, inst.t, ci);
  }
  const int sign = inst.t % 2 == 1 ? 1 : -1;
  i128 den = static_cast<i128>(q) * (q - 1);
  i128 num = static_cast<i128>(sol.d) * (ipow128(q, inst.t) - 1) +
             sign * (den * system_total -
                     static_cast<i128>(sol.d) * ipow128(static_cast<i128>(q) - 1, inst.t));
  if (num % den != 0 || num < 0)
    fail(errc::internal, "system count failed the integrality check");
  return static_cast<std::int64_t>(num / den);
}

bool is_irreducible(const FieldCtx& ctx, const std::vector<Elem>& coeffs) {
  if (coeffs.size() < 2 || coeffs.back() != 1)
    fail(errc::invalid_argument, "expected a monic polynomial of positive degree");
  const std::uint32_t m = static_cast<std::uint32_t>(coeffs.size()) - 1;
  if (m == 1) return true;
  const QPoly& f = coeffs;
  QPoly x{0, 1};
  std::vector<QPoly> frob(m + 1);
  frob[0] = x;
  for (std::uint32_t j = 1; j <= m; ++j)
    frob[j] = qpowmod(ctx, frob[j - 1], ctx.q(), f);
  if (frob[m] != x) return false;
  for (auto [ell, e] : detail::factorize(m)) {
    (void)e;
    QPoly g = qgcd(ctx, qsub(ctx, frob[m / ell], x), f);
    if (g.size() != 1) return false;
  }
  return true;
}

std::int64_t irreducible_count_direct(const FieldCtx& ctx, std::uint32_t m, Elem a, Elem b) {
  if (m < 2) fail(errc::precondition, "degree m must be at least 2");
  if (b == 0) fail(errc::precondition, "b must be nonzero");
  if (a >= ctx.q() || b >= ctx.q()) fail(errc::invalid_argument, "element out of range");
  if (m > 2 && detail::upow_checked(ctx.q(), m - 2) > kMaxFieldSize)
    fail(errc::precondition, "enumeration exceeds 2^20 polynomials");

  std::vector<Elem> f(m + 1, 0);
  f[m] = 1;
  f[m - 1] = ctx.neg(a);
  f[0] = m % 2 == 0 ? b : ctx.neg(b);
  std::int64_t count = 0;
  // odometer over the free middle coefficients f[1..m-2]
  for (;;) {
    if (is_irreducible(ctx, f)) ++count;
    std::uint32_t i = 1;
    while (i + 1 < m && ++f[i] == ctx.q()) f[i++] = 0;
    if (i + 1 >= m) break;
  }
  return count;
}

std::int64_t irreducible_count_moebius(const FieldCtx& ctx, std::uint32_t m, Elem a, Elem b) {
  if (m < 2) fail(errc::precondition, "degree m must be at least 2");
  std::int64_t sum = 0;
  for (std::uint32_t u = 1; u <= m; ++u) {
    if (m % u != 0) continue;
    int mu = detail::moebius(m / u);
    if (mu == 0) continue;
    CountInstance inst{get_field(ctx.spec()), m, u, a, b};
    sum += mu * trace_norm_count_formula(inst);
  }
  if (sum % m != 0 || sum < 0)
    fail(errc::non_integral, "divisor-sum count is not divisible by m");
  return sum / m;
}

std::optional<std::int64_t> irreducible_count_closed(const FieldCtx& ctx, std::uint32_t m,
                                                     Elem a, Elem b) {
  if (m < 2) fail(errc::precondition, "degree m must be at least 2");
  if (b == 0) fail(errc::precondition, "b must be nonzero");
  const std::uint32_t p = ctx.p();
  const std::uint64_t q = ctx.q();
  std::uint32_t mm = m;
  while (mm % p == 0) mm /= p;
  const bool prime_power = mm == 1;

  if (a == 0) {
    if (m % p != 0 && std::gcd<std::uint64_t>(m, q - 1) == 1) {
      i128 sum = 0;
      for (std::uint32_t u = 1; u <= m; ++u) {
        if (m % u != 0) continue;
        sum += detail::moebius(m / u) * (ipow128(q, u - 1) - 1);
      }
      i128 den = static_cast<i128>(m) * (q - 1);
      if (sum % den != 0 || sum < 0)
        fail(errc::internal, "closed form failed the integrality check");
      return static_cast<std::int64_t>(sum / den);
    }
    if (prime_power) {
      i128 num = geometric(q, m - 1) - geometric(q, m / p);
      if (num % m != 0 || num < 0)
        fail(errc::internal, "closed form failed the integrality check");
      return static_cast<std::int64_t>(num / m);
    }
    return std::nullopt;
  }
  if (prime_power && m > 2) {
    Elem c = ctx.mul(b, ctx.inv(ctx.pow(a, m)));
    std::int64_t k = kloosterman_int(ctx, m - 2, c);
    i128 num = geometric(q, m - 1) + (m % 2 == 1 ? k : -k);
    if (num % m != 0 || num < 0)
      fail(errc::internal, "closed form failed the integrality check");
    return static_cast<std::int64_t>(num / m);
  }
  return std::nullopt;
}

std::vector<std::int64_t> irreducible_histogram(const FieldCtx& ctx, std::uint32_t m) {
  if (m < 2) fail(errc::precondition, "degree m must be at least 2");
  const std::uint64_t q = ctx.q();
  if (detail::upow_checked(q, m - 1) > kMaxFieldSize)
    fail(errc::precondition, "enumeration exceeds 2^20 polynomials");
  std::vector<std::int64_t> hist(q * q, 0);
  // slices by the x^{m-1} coefficient write to disjoint trace rows
  detail::parallel_for(q, [&](std::size_t lead) {
    std::vector<Elem> f(m + 1, 0);
    f[m] = 1;
    f[m - 1] = static_cast<Elem>(lead);
    Elem a = ctx.neg(f[m - 1]);
    for (;;) {
      if (f[0] != 0 && is_irreducible(ctx, f)) {
        Elem b = m % 2 == 0 ? f[0] : ctx.neg(f[0]);
        ++hist[std::uint64_t{a} * q + b];
      }
      std::uint32_t i = 0;
      while (i + 1 < m && ++f[i] == q) f[i++] = 0;
      if (i + 1 >= m) break;
    }
  });
  return hist;
}

bool BoundReport::all_hold() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const BoundCheck& c) { return c.holds; });
}

BoundReport bounds_report(const CountInstance& inst) {
  validate(inst);
  const FieldCtx& base = *inst.base;
  const std::uint32_t m = inst.m;
  const i128 q = base.q();
  const std::uint32_t p = base.p();
  CountInstance full{inst.base, m, m, inst.a, inst.b};
  const i128 N = trace_norm_count_direct(full);
  const i128 P = irreducible_count_direct(base, m, inst.a, inst.b);
  const i128 qm = ipow128(q, m);

  BoundReport report;
  auto push = [&](std::string name, i128 lhs, i128 rhs, bool strict) {
    BoundCheck c;
    c.name = std::move(name);
    c.lhs = to_ll(lhs);
    c.rhs = to_ll(rhs);
    c.strict = strict;
    c.holds = strict ? lhs < rhs : lhs <= rhs;
    report.checks.push_back(std::move(c));
  };
  auto sq = [](i128 v) { return v * v; };

  // |P - q^{m-1}/(m(q-1))| <= (3/m) q^{m/2}
  push("wan", sq(m * (q - 1) * P - ipow128(q, m - 1)), 9 * sq(q - 1) * qm, false);
  // |N - (q^m-1)/(q(q-1))| <= m q^{(m-2)/2}
  push("katz", sq(q * (q - 1) * N - (qm - 1)), sq(m) * sq(q - 1) * qm, false);

  if (inst.a == 0) {
    i128 s = std::gcd<std::uint64_t>(m, base.q() - 1);
    push("zero_trace", sq(N - geometric(base.q(), m - 1)),
         sq(s - 1) * ipow128(q, m - 2), false);
  } else {
    // closed form of the sharpened bound chain; strict
    push("nonzero_trace", sq(m * q * (q - 1) * P - (qm - 1)),
         4 * sq(m) * ipow128(q, m + 2), true);
  }

  if (m == 3) {
    // floor(2 sqrt(q)); q + 1 - f > 0, so plain ceil/floor division applies
    i128 f = detail::isqrt_u64(4 * base.q());
    i128 lower = 3 * ((q + 1 - f + 2) / 3);
    i128 upper = 3 * ((q + 1 + f) / 3);
    push("cubic_lower", lower, N, false);
    push("cubic_upper", N, upper, false);
  }

  if (inst.a != 0 && m <= 4 && (m % p) != 0) {
    // single system instance at t = m (the congruence has d = 1)
    Elem c0 = base.mul(inst.b, base.inv(base.pow(inst.a, m)));
    i128 Nc = system_solution_count(base, m, c0);
    push("system", sq(q * (q - 1) * Nc - ipow128(q - 1, m)),
         sq(m) * sq(q - 1) * qm, false);
  }

  std::uint32_t mm = m;
  while (mm % p == 0) mm /= p;
  if (mm == 1 && m > 2 && inst.a != 0) {
    push("prime_power", sq(N - geometric(base.q(), m - 1)),
         sq(m - 1) * ipow128(q, m - 2), false);
    Elem c = base.mul(inst.b, base.inv(base.pow(inst.a, m)));
    i128 k = kloosterman_int(base, m - 2, c);
    push("deligne", sq(k), sq(m - 1) * ipow128(q, m - 2), false);
  }
  return report;
}

}  // namespace fflab
