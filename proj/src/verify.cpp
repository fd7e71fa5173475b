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

#include "fflab/verify.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>

#include "fflab/charsum.hpp"
#include "fflab/classnum.hpp"
#include "fflab/counting.hpp"
#include "fflab/curves.hpp"
#include "fflab/detail/util.hpp"

namespace fflab {
namespace {

std::string kv(const char* k, std::int64_t v) {
  return std::string(k) + "=" + std::to_string(v);
}

std::int64_t mod3(std::int64_t t) { return ((t % 3) + 3) % 3; }
std::int64_t mod4(std::int64_t t) { return ((t % 4) + 4) % 4; }

// k_1(c) as a plain integer (p in {2,3}; rational by the value theory)
std::int64_t k1_int(const FieldCtx& F, Elem c) {
  const std::uint64_t group = F.q() - 1;
  const std::uint64_t logc = F.dlog(c);
  const auto& exp = F.exp_table();
  if (F.p() == 2) {
    std::int64_t v = 0;
    for (std::uint64_t k = 0; k < group; ++k) {
      Elem x = exp[k];
      Elem y = exp[(logc + group - k) % group];
      v += F.abs_trace(F.add(x, y)) == 0 ? 1 : -1;
    }
    return v;
  }
  std::int64_t hist[3] = {0, 0, 0};
  for (std::uint64_t k = 0; k < group; ++k) {
    Elem x = exp[k];
    Elem y = exp[(logc + group - k) % group];
    ++hist[F.abs_trace(F.add(x, y))];
  }
  if (hist[1] != hist[2])
    fail(errc::internal, "char-3 Kloosterman value is not rational");
  return hist[0] - hist[1];
}

}  // namespace

// ---- distribution tables and theorem checks ----

DistributionTable value_distribution(const FieldCtx& ctx) {
  const std::uint32_t p = ctx.p();
  if (p != 2 && p != 3)
    fail(errc::unsupported_characteristic, "value distribution needs p in {2,3}");
  if (p == 2 && ctx.r() == 1)
    fail(errc::precondition, "the char-2 distribution starts at q = 4");
  if (ctx.q() > 4096) fail(errc::precondition, "distribution capped at q <= 2^12");

  const std::uint32_t q = ctx.q();
  std::vector<std::int64_t> values(q - 1);
  detail::parallel_for(q - 1, [&](std::size_t i) {
    values[i] = k1_int(ctx, ctx.exp_table()[i]);
  });
  std::map<std::int64_t, std::int64_t> mult;
  for (auto v : values) ++mult[v];

  DistributionTable table;
  table.q = q;
  const std::int64_t qs = q;
  const std::int64_t f = detail::isqrt_u64(4 * qs);
  std::set<std::int64_t> admissible;
  for (std::int64_t t = -f; t <= f; ++t) {
    if (t * t >= 4 * qs) continue;
    bool cong = p == 3 ? mod3(t) == 2 : mod4(t) == 3;
    if (!cong) continue;
    admissible.insert(t);
    DistRow row;
    row.t = t;
    row.multiplicity = mult.count(t) ? mult[t] : 0;
    row.class_number = kronecker_class_number(t * t - 4 * qs);
    row.congruence_ok = true;
    table.rows.push_back(row);
  }
  table.multiplicities_match = std::all_of(
      table.rows.begin(), table.rows.end(),
      [](const DistRow& r) { return r.multiplicity == r.class_number; });
  std::int64_t total = 0;
  bool strays = false;
  for (auto [t, n] : mult) {
    total += n;
    if (!admissible.count(t)) strays = true;
  }
  table.totals_match = !strays && total == qs - 1;
  return table;
}

bool cubic_distribution_check(const FieldCtx& ctx) {
  if (ctx.p() != 3) fail(errc::wrong_characteristic, "needs p = 3");
  if (ctx.q() > 81) fail(errc::precondition, "cubic distribution capped at q <= 81");
  const std::int64_t q = ctx.q();
  auto hist = irreducible_histogram(ctx, 3);
  std::map<std::int64_t, std::int64_t> by_trace;
  for (Elem a = 1; a < q; ++a) {
    for (Elem b = 1; b < q; ++b) {
      std::int64_t t = 3 * hist[std::uint64_t{a} * q + b] - q - 1;
      if (t * t >= 4 * q || mod3(t) != 2) return false;
      ++by_trace[t];
    }
  }
  std::int64_t covered = 0;
  for (auto [t, n] : by_trace) {
    if (n != (q - 1) * kronecker_class_number(t * t - 4 * q)) return false;
    covered += n;
  }
  return covered == (q - 1) * (q - 1);
}

bool quartic_distribution_check(const FieldCtx& ctx) {
  if (ctx.p() != 2 || (ctx.q() != 4 && ctx.q() != 8 && ctx.q() != 16))
    fail(errc::precondition, "quartic distribution runs at q in {4,8,16}");
  const std::int64_t q = ctx.q();
  auto hist = irreducible_histogram(ctx, 4);
  std::map<std::int64_t, std::int64_t> by_t;
  for (Elem a = 1; a < q; ++a) {
    for (Elem b = 1; b < q; ++b) {
      std::int64_t v = (q + 1) * (q + 1) - 4 * hist[std::uint64_t{a} * q + b];
      std::int64_t t = detail::isqrt_u64(v);
      if (t * t != v || t % 2 != 1 || t * t >= 4 * q) return false;
      ++by_t[t];
    }
  }
  std::int64_t covered = 0;
  for (auto [t, n] : by_t) {
    if (n != (q - 1) * kronecker_class_number(t * t - 4 * q)) return false;
    covered += n;
  }
  return covered == (q - 1) * (q - 1);
}

bool kl_mod3_check(const FieldCtx& ctx) {
  if (ctx.p() != 2) fail(errc::wrong_characteristic, "needs p = 2");
  if (ctx.r() > 10) fail(errc::precondition, "divisibility check capped at r <= 10");
  const std::uint32_t q = ctx.q();
  const std::uint64_t group = q - 1;
  std::vector<std::int64_t> ks(q, 0);
  detail::parallel_for(group, [&](std::size_t i) {
    Elem b = ctx.exp_table()[i];
    ks[b] = k1_int(ctx, b);
  });
  const bool odd_degree = ctx.r() % 2 == 1;
  const std::uint64_t third = odd_degree ? detail::inv_mod(3 % group == 0 ? 1 : 3 % group, group) : 0;
  for (Elem b = 1; b < q; ++b) {
    bool divisible = ks[b] % 3 == 0;
    bool criterion;
    if (odd_degree) {
      Elem root = ctx.exp(third * ctx.dlog(b));
      criterion = ctx.abs_trace(root) == 0;
    } else {
      std::uint64_t lb = ctx.dlog(b);
      if (lb % 3 != 0) {
        criterion = false;
      } else {
        Elem a = ctx.exp(lb / 3);
        Elem tr4 = 0;
        for (std::uint32_t i = 0; i < ctx.r() / 2; ++i)
          tr4 = ctx.add(tr4, ctx.frobenius(a, 2 * i));
        criterion = tr4 != 0;
      }
    }
    if (divisible != criterion) return false;
  }
  return true;
}

bool t3_check(const FieldCtx& ctx, Elem b) {
  if (ctx.p() != 2) fail(errc::wrong_characteristic, "needs p = 2");
  if (ctx.q() > 256) fail(errc::precondition, "capped at q <= 256");
  if (b == 0) fail(errc::precondition, "b must be nonzero");
  const std::uint32_t q = ctx.q();
  std::int64_t direct = 0;
  for (Elem a = 0; a < q; ++a) {
    if (ctx.abs_trace(a) != 0) continue;
    for (Elem c = 0; c < q; ++c)
      if (is_irreducible(ctx, {b, c, a, 1})) ++direct;
  }
  std::int64_t cube_roots = 0;
  for (Elem x = 0; x < q; ++x)
    if (ctx.abs_trace(x) == 0 && ctx.pow(x, 3) == b) ++cube_roots;
  std::int64_t k = kloosterman_int(ctx, 1, b);
  std::int64_t s = std::int64_t{q} * q + 1 + k * k;
  if (s % 2 != 0) return false;
  std::int64_t h = s / 2 - cube_roots;
  return h % 3 == 0 && direct == h / 3;
}

// ---- harness ----

bool CheckSink::expect_equal(const std::string& check, const std::string& instance,
                             std::int64_t expected, std::int64_t actual) {
  CheckLine line;
  line.check = check;
  line.instance = instance;
  line.expected = std::to_string(expected);
  line.actual = std::to_string(actual);
  line.pass = expected == actual;
  lines_.push_back(std::move(line));
  return expected == actual;
}

bool CheckSink::expect_true(const std::string& check, const std::string& instance,
                            bool ok, const std::string& detail) {
  CheckLine line;
  line.check = check;
  line.instance = instance;
  line.expected = "true";
  line.actual = ok ? "true" : (detail.empty() ? "false" : detail);
  line.pass = ok;
  lines_.push_back(std::move(line));
  return ok;
}

bool CheckSink::all_pass() const {
  return std::all_of(lines_.begin(), lines_.end(),
                     [](const CheckLine& l) { return l.pass; });
}

namespace {

std::string pair_instance(std::uint32_t q, std::uint32_t m, Elem a, Elem b) {
  return kv("q", q) + " " + kv("m", m) + " " + kv("a", a) + " " + kv("b", b);
}

// ---- suite: paper-examples ----

void suite_paper_cubics_f3(CheckSink& sink) {
  auto F3 = get_field(FieldSpec::parse("3"));
  // the worked table lists pairs by displayed coefficients (x^3+ax^2+cx+b);
  // canonical trace/norm pairs are their negatives
  struct Fix {
    Elem a_disp, b_disp;
    std::int64_t count;
  };
  const Fix fixtures[] = {{1, 1, 1}, {2, 2, 1}, {1, 2, 2}, {2, 1, 2}, {0, 1, 1}, {0, 2, 1}};
  for (const auto& fx : fixtures) {
    Elem a = F3->neg(fx.a_disp), b = F3->neg(fx.b_disp);
    sink.expect_equal("cubic_table",
                      "displayed " + kv("a", fx.a_disp) + " " + kv("b", fx.b_disp),
                      fx.count, irreducible_count_direct(*F3, 3, a, b));
  }
  struct Listed {
    std::vector<Elem> coeffs;  // constant first
    Elem a_disp, b_disp;
  };
  const Listed listed[] = {
      {{1, 2, 1, 1}, 1, 1}, {{2, 2, 2, 1}, 2, 2}, {{2, 0, 1, 1}, 1, 2},
      {{2, 1, 1, 1}, 1, 2}, {{1, 0, 2, 1}, 2, 1}, {{1, 1, 2, 1}, 2, 1},
      {{1, 2, 0, 1}, 0, 1}, {{2, 2, 0, 1}, 0, 2}};
  for (const auto& lp : listed) {
    std::string inst = "displayed cubic " + kv("a", lp.a_disp) + " " + kv("b", lp.b_disp);
    bool ok = is_irreducible(*F3, lp.coeffs) && lp.coeffs[2] == lp.a_disp &&
              lp.coeffs[0] == lp.b_disp;
    sink.expect_true("cubic_listed_irreducible", inst, ok);
  }
  std::int64_t total = 0;
  for (Elem a = 0; a < 3; ++a)
    for (Elem b = 1; b < 3; ++b) total += irreducible_count_direct(*F3, 3, a, b);
  sink.expect_equal("cubic_total", "q=3 all pairs", 8, total);
  sink.expect_equal("class_number", "H(-11)", 1, kronecker_class_number(-11));
  sink.expect_equal("class_number", "H(-8)", 1, kronecker_class_number(-8));
}

void suite_paper_quartics_f4(CheckSink& sink) {
  auto F4 = get_field(FieldSpec::parse("2^2"));
  const std::pair<Elem, Elem> six[] = {{1, 2}, {1, 3}, {2, 1}, {2, 3}, {3, 1}, {3, 2}};
  for (auto [a, b] : six)
    sink.expect_equal("quartic_table", pair_instance(4, 4, a, b), 6,
                      irreducible_count_direct(*F4, 4, a, b));
  const std::pair<Elem, Elem> three[] = {{1, 1}, {2, 2}, {3, 3}};
  for (auto [a, b] : three)
    sink.expect_equal("quartic_table", pair_instance(4, 4, a, b), 4,
                      irreducible_count_direct(*F4, 4, a, b));
  for (Elem b = 1; b < 4; ++b)
    sink.expect_equal("quartic_table", pair_instance(4, 4, 0, b), 4,
                      irreducible_count_direct(*F4, 4, 0, b));
  std::int64_t total = 0;
  for (Elem a = 0; a < 4; ++a)
    for (Elem b = 1; b < 4; ++b) total += irreducible_count_direct(*F4, 4, a, b);
  sink.expect_equal("quartic_total", "q=4 all pairs", 60, total);
  sink.expect_equal("class_number", "H(-15)", 2, kronecker_class_number(-15));
  sink.expect_equal("class_number", "H(-7)", 1, kronecker_class_number(-7));
}

void suite_sharpness_f5(CheckSink& sink) {
  auto F5 = get_field(FieldSpec::parse("5"));
  const std::int64_t f = detail::isqrt_u64(20);  // floor(2 sqrt 5)
  const std::int64_t upper = 3 * ((5 + 1 + f) / 3);
  const std::int64_t lower = 3 * ((5 + 1 - f + 2) / 3);
  std::int64_t n11 = trace_norm_count_direct({F5, 3, 3, 1, 1});
  std::int64_t n12 = trace_norm_count_direct({F5, 3, 3, 1, 2});
  sink.expect_equal("sharp_upper_value", pair_instance(5, 3, 1, 1), 9, n11);
  sink.expect_equal("sharp_upper_bound", pair_instance(5, 3, 1, 1), upper, n11);
  sink.expect_equal("sharp_curve", pair_instance(5, 3, 1, 1), 9,
                    count_points(CubicModel{F5, 1}).total);
  sink.expect_equal("sharp_lower_value", pair_instance(5, 3, 1, 2), 3, n12);
  sink.expect_equal("sharp_lower_bound", pair_instance(5, 3, 1, 2), lower, n12);
  sink.expect_equal("sharp_curve", pair_instance(5, 3, 1, 2), 3,
                    count_points(CubicModel{F5, 2}).total);
}

// ---- suite: routes / bounds ----

const char* const kFullGrid[] = {"2", "3", "2^2", "5", "7", "2^3", "3^2"};
const char* const kSpotGrid[] = {"2^4", "5^2", "3^3"};

std::vector<std::pair<Elem, Elem>> grid_pairs(const FieldCtx& F, bool full) {
  std::vector<std::pair<Elem, Elem>> pairs;
  if (full) {
    for (Elem a = 0; a < F.q(); ++a)
      for (Elem b = 1; b < F.q(); ++b) pairs.emplace_back(a, b);
    return pairs;
  }
  Elem g = F.gamma();
  pairs.emplace_back(0, 1);
  pairs.emplace_back(1, 1);
  pairs.emplace_back(g, F.mul(g, g));
  pairs.emplace_back(F.mul(g, g), g);
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

std::string route_mismatch(const CountInstance& inst) {
  const FieldCtx& F = *inst.base;
  std::string err;
  std::int64_t direct = trace_norm_count_direct(inst);
  std::int64_t formula = trace_norm_count_formula(inst);
  if (direct != formula)
    err += " formula(t=" + std::to_string(inst.t) + ")=" + std::to_string(formula) +
           " direct=" + std::to_string(direct);
  const std::uint64_t mt = inst.m / inst.t;
  if (inst.a != 0 && mt % F.p() != 0 && inst.t <= 4) {
    auto tw = get_tower(F.spec(), inst.t);
    if (tw->solve_norm_congruence(inst.m, inst.b).solvable) {
      std::int64_t system = trace_norm_count_system(inst);
      if (system != direct)
        err += " system(t=" + std::to_string(inst.t) + ")=" + std::to_string(system) +
               " direct=" + std::to_string(direct);
    }
  }
  return err;
}

void suite_routes(CheckSink& sink, bool extended) {
  (void)extended;
  auto run_field = [&](const char* spec, bool full) {
    auto F = get_field(FieldSpec::parse(spec));
    for (std::uint32_t m : {2u, 3u, 4u}) {
      auto pairs = grid_pairs(*F, full);
      std::vector<std::string> errs(pairs.size());
      detail::parallel_for(pairs.size(), [&](std::size_t i) {
        auto [a, b] = pairs[i];
        std::string err;
        for (std::uint32_t t = 1; t <= m; ++t) {
          if (m % t != 0) continue;
          err += route_mismatch({F, m, t, a, b});
        }
        std::int64_t direct = irreducible_count_direct(*F, m, a, b);
        std::int64_t moebius = irreducible_count_moebius(*F, m, a, b);
        if (moebius != direct)
          err += " moebius=" + std::to_string(moebius) + " direct=" + std::to_string(direct);
        if (auto closed = irreducible_count_closed(*F, m, a, b); closed && *closed != direct)
          err += " closed=" + std::to_string(*closed) + " direct=" + std::to_string(direct);
        errs[i] = err;
      });
      for (std::size_t i = 0; i < pairs.size(); ++i)
        sink.expect_true("route_equivalence",
                         pair_instance(F->q(), m, pairs[i].first, pairs[i].second),
                         errs[i].empty(), errs[i]);
    }
  };
  for (const char* spec : kFullGrid) run_field(spec, true);
  for (const char* spec : kSpotGrid) run_field(spec, false);
}

void suite_bounds(CheckSink& sink, bool extended) {
  (void)extended;
  auto run_field = [&](const char* spec, bool full) {
    auto F = get_field(FieldSpec::parse(spec));
    const std::int64_t q = F->q();
    for (std::uint32_t m : {2u, 3u, 4u}) {
      auto pairs = grid_pairs(*F, full);
      std::vector<std::string> errs(pairs.size());
      detail::parallel_for(pairs.size(), [&](std::size_t i) {
        auto [a, b] = pairs[i];
        std::string err;
        BoundReport rep = bounds_report({F, m, m, a, b});
        for (const auto& check : rep.checks)
          if (!check.holds)
            err += " " + check.name + " lhs=" + std::to_string(check.lhs) +
                   " rhs=" + std::to_string(check.rhs);
        if (m == 3 && a != 0) {
          // Hasse-Weil on the associated cubic, nonsingular models only
          Elem c = F->mul(b, F->inv(F->pow(a, 3)));
          bool singular = F->p() != 3 && c == F->inv(F->scalar(27));
          if (!singular) {
            std::int64_t t = count_points(CubicModel{F, c}).trace;
            if (t * t > 4 * q) err += " hasse_weil t=" + std::to_string(t);
          }
        }
        errs[i] = err;
      });
      for (std::size_t i = 0; i < pairs.size(); ++i)
        sink.expect_true("bounds",
                         pair_instance(F->q(), m, pairs[i].first, pairs[i].second),
                         errs[i].empty(), errs[i]);
    }
  };
  for (const char* spec : kFullGrid) run_field(spec, true);
  for (const char* spec : kSpotGrid) run_field(spec, false);

  // symmetric-system bound sweep: n <= 4, q <= 16, every c
  for (const char* spec : {"2", "3", "2^2", "5", "7", "2^3", "3^2", "11", "13", "2^4"}) {
    auto F = get_field(FieldSpec::parse(spec));
    const std::int64_t q = F->q();
    bool ok = true;
    for (std::uint32_t n = 1; n <= 4 && ok; ++n) {
      for (Elem c = 1; c < F->q() && ok; ++c) {
        std::int64_t count = system_solution_count(*F, n, c);
        __int128 center = 1, qn = 1;
        for (std::uint32_t i = 0; i < n; ++i) {
          center *= q - 1;
          qn *= q;
        }
        // |q(q-1)N - (q-1)^n| <= n (q-1) q^{n/2}: squared comparison
        __int128 diff = static_cast<__int128>(q) * (q - 1) * count - center;
        ok = diff * diff <= static_cast<__int128>(n) * n * (q - 1) * (q - 1) * qn;
      }
    }
    sink.expect_true("system_bound_sweep", kv("q", F->q()) + " n<=4 all c", ok);
  }
}

// ---- suite: distributions ----

void suite_distributions(CheckSink& sink, bool extended, bool tables_only) {
  for (const char* spec :
       {"3", "3^2", "3^3", "3^4", "2^2", "2^3", "2^4", "2^6"}) {
    auto F = get_field(FieldSpec::parse(spec));
    DistributionTable table = value_distribution(*F);
    for (const auto& row : table.rows)
      sink.expect_true("value_distribution",
                       kv("q", table.q) + " " + kv("t", row.t),
                       row.multiplicity == row.class_number && row.congruence_ok,
                       "multiplicity=" + std::to_string(row.multiplicity) +
                           " H=" + std::to_string(row.class_number));
    sink.expect_true("value_distribution_totals", kv("q", table.q), table.totals_match);
  }
  if (tables_only) return;
  std::vector<const char*> cubic{"3", "3^2", "3^3"};
  if (extended) cubic.push_back("3^4");
  for (const char* spec : cubic) {
    auto F = get_field(FieldSpec::parse(spec));
    sink.expect_true("cubic_distribution", kv("q", F->q()),
                     cubic_distribution_check(*F));
  }
  for (const char* spec : {"2^2", "2^3", "2^4"}) {
    auto F = get_field(FieldSpec::parse(spec));
    sink.expect_true("quartic_distribution", kv("q", F->q()),
                     quartic_distribution_check(*F));
  }
}

// ---- suite: identities ----

void suite_identities(CheckSink& sink, bool extended) {
  (void)extended;
  for (const char* spec : {"2^2", "2^3", "2^4", "2^5"}) {
    auto F = get_field(FieldSpec::parse(spec));
    bool ok = true;
    for (Elem c = 1; c < F->q(); ++c) ok = ok && verify_carlitz(*F, c);
    sink.expect_true("carlitz", kv("q", F->q()) + " all c", ok);
  }

  // norm-lift identity over every tower with q^m <= 2^14, all alpha
  const char* const bases[] = {"2",   "3",   "2^2", "5",   "7",   "2^3", "3^2",
                               "11",  "13",  "2^4", "5^2", "3^3", "2^5", "7^2",
                               "2^6", "11^2", "5^3", "2^7", "3^4"};
  for (const char* spec : bases) {
    FieldSpec base = FieldSpec::parse(spec);
    auto F = get_field(base);
    std::uint64_t qm = F->q();
    for (std::uint32_t m = 1; qm <= (1u << 14); ++m, qm *= F->q()) {
      auto tw = get_tower(base, m);
      const std::uint64_t count = tw->top().q() - 1;
      std::vector<std::uint8_t> ok(count, 0);
      detail::parallel_for(count, [&](std::size_t i) {
        ok[i] = verify_kloosterman_lift(*tw, tw->top().exp_table()[i]) ? 1 : 0;
      });
      bool all = std::all_of(ok.begin(), ok.end(), [](std::uint8_t v) { return v != 0; });
      sink.expect_true("kloosterman_lift", kv("q", F->q()) + " " + kv("m", m) + " all alpha",
                       all);
    }
  }

  // Gauss-sum decomposition over towers with q^t <= 2^12, every n | q-1,
  // one representative per coset of n-th powers
  for (const char* spec : bases) {
    FieldSpec base = FieldSpec::parse(spec);
    auto F = get_field(base);
    std::uint64_t qt = F->q();
    for (std::uint32_t t = 1; qt <= (1u << 12); ++t, qt *= F->q()) {
      auto tw = get_tower(base, t);
      bool ok = true;
      for (std::uint32_t n = 1; n < F->q() && ok; ++n) {
        if ((F->q() - 1) % n != 0) continue;
        for (std::uint32_t i = 0; i < n && ok; ++i)
          ok = verify_gauss_decomposition(*tw, n, tw->top().exp(i));
      }
      sink.expect_true("gauss_decomposition",
                       kv("q", F->q()) + " " + kv("t", t) + " all n | q-1", ok);
    }
  }
}

// ---- suite: divisibility ----

void suite_divisibility(CheckSink& sink, bool extended) {
  (void)extended;
  FieldSpec spec;
  for (std::uint32_t r = 1; r <= 10; ++r) {
    spec = FieldSpec::parse("2^" + std::to_string(r));
    auto F = get_field(spec);
    sink.expect_true("kloosterman_mod3", kv("q", F->q()) + " all b",
                     kl_mod3_check(*F));
  }
}

// ---- suite: t3 ----

void suite_t3(CheckSink& sink, bool extended) {
  std::vector<const char*> specs{"2", "2^2", "2^3", "2^4"};
  if (extended) {
    specs.push_back("2^5");
    specs.push_back("2^6");
  }
  for (const char* spec : specs) {
    auto F = get_field(FieldSpec::parse(spec));
    bool ok = true;
    for (Elem b = 1; b < F->q(); ++b) ok = ok && t3_check(*F, b);
    sink.expect_true("trace_zero_cubics", kv("q", F->q()) + " all b", ok);
  }
}

// ---- suite: curves ----

void suite_curves(CheckSink& sink, bool extended) {
  (void)extended;
  for (const char* spec : kFullGrid) {
    auto F = get_field(FieldSpec::parse(spec));
    bool ok = true;
    for (Elem a = 1; a < F->q() && ok; ++a) {
      for (Elem b = 1; b < F->q() && ok; ++b) {
        Elem c = F->mul(b, F->inv(F->pow(a, 3)));
        std::int64_t pts = count_points(CubicModel{F, c}).total;
        ok = pts == trace_norm_count_direct({F, 3, 3, a, b});
      }
    }
    sink.expect_true("cubic_count_identity", kv("q", F->q()) + " all ab!=0", ok);
  }
  for (const char* spec : {"3", "3^2", "3^3"}) {
    auto F = get_field(FieldSpec::parse(spec));
    bool ok = true;
    for (Elem c = 1; c < F->q() && ok; ++c) {
      std::int64_t via_curve = kloosterman_via_curve(*F, c);
      ok = via_curve == kloosterman_int(*F, 1, c) && mod3(via_curve) == 2;
    }
    sink.expect_true("kloosterman_curve_route", kv("q", F->q()) + " all c", ok);
  }
  for (const char* spec : {"3", "3^2"}) {
    auto F = get_field(FieldSpec::parse(spec));
    const std::int64_t q = F->q();
    bool super_ok = true, twist_ok = true;
    for (Elem a = 1; a < q && super_ok; ++a) {
      for (Elem b = 1; b < q && super_ok; ++b) {
        WeierstrassModel e{F, 0, a, 0, 0, b};
        std::int64_t t = count_points(e).trace;
        super_ok = !is_supersingular(e) && t % 3 != 0;
      }
    }
    for (Elem c = 1; c < q && super_ok; ++c) {
      for (Elem b = 0; b < q && super_ok; ++b) {
        WeierstrassModel e{F, 0, 0, 0, c, b};
        std::int64_t t = count_points(e).trace;
        super_ok = is_supersingular(e) && t % 3 == 0;
      }
    }
    sink.expect_true("supersingular_criterion", kv("q", q) + " exhaustive", super_ok);
    for (Elem a = 1; a < q && twist_ok; ++a) {
      for (Elem b = 1; b < q && twist_ok; ++b) {
        auto [ce, cx] = twist_counts(*F, a, b);
        bool square = F->dlog(a) % 2 == 0;
        if (square)
          twist_ok = ce == cx && mod3(ce - q - 1) == 2;
        else
          twist_ok = ce + cx == 2 * (q + 1) && mod3(ce - q - 1) == 1;
      }
    }
    sink.expect_true("ordinary_twist_relation", kv("q", q) + " exhaustive", twist_ok);
  }
  for (const char* spec : {"2", "2^2", "2^3", "2^4"}) {
    auto F = get_field(FieldSpec::parse(spec));
    const std::int64_t q = F->q();
    std::int64_t chi1 = F->abs_trace(1) == 0 ? 1 : -1;
    bool ok = true;
    for (Elem a = 1; a < q && ok; ++a) {
      Elem b = F->pow(a, 3);  // (a/3)^3 with 3 = 1 here
      std::int64_t degenerate = singular_case_p3(*F, a);
      ok = degenerate == irreducible_count_direct(*F, 3, a, b) &&
           3 * degenerate == q - chi1;
    }
    sink.expect_true("degenerate_cubic_count", kv("q", q) + " all a!=0", ok);
  }
}

// ---- suite: deuring ----

void suite_deuring(CheckSink& sink, bool extended) {
  (void)extended;
  for (const char* spec : {"5", "7", "11", "13"}) {
    auto F = get_field(FieldSpec::parse(spec));
    const std::int64_t q = F->q();
    const std::int64_t f = detail::isqrt_u64(4 * q);
    bool ok = true;
    for (std::int64_t t = -f; t <= f && ok; ++t) {
      if (t == 0 || t * t >= 4 * q) continue;
      ok = deuring_class_count(*F, t) == kronecker_class_number(t * t - 4 * q);
    }
    sink.expect_true("class_census", kv("q", q) + " all admissible t", ok);

    // partition: every nonsingular pair has |trace| <= 2 sqrt(q)
    std::int64_t nonsingular = 0, in_range = 0;
    for (Elem A = 0; A < q; ++A) {
      for (Elem B = 0; B < q; ++B) {
        Elem disc = F->add(F->mul(F->scalar(4), F->pow(A, 3)),
                           F->mul(F->scalar(27), F->mul(B, B)));
        if (disc == 0) continue;
        ++nonsingular;
        std::int64_t n = q + 1;
        for (Elem x = 0; x < q; ++x)
          n += F->quad_char(F->add(F->mul(F->add(F->mul(x, x), A), x), B));
        std::int64_t t = n - q - 1;
        if (t * t <= 4 * q) ++in_range;
      }
    }
    sink.expect_equal("census_partition", kv("q", q), nonsingular, in_range);
  }
}

using SuiteFn = void (*)(CheckSink&, bool);

void suite_paper_examples(CheckSink& sink, bool extended) {
  (void)extended;
  suite_paper_cubics_f3(sink);
  suite_paper_quartics_f4(sink);
  suite_sharpness_f5(sink);
}

void suite_distributions_full(CheckSink& sink, bool extended) {
  suite_distributions(sink, extended, /*tables_only=*/false);
}

const std::vector<std::pair<std::string, SuiteFn>>& suite_table() {
  static const auto* table = new std::vector<std::pair<std::string, SuiteFn>>{
      {"paper-examples", suite_paper_examples},
      {"routes", suite_routes},
      {"distributions", suite_distributions_full},
      {"identities", suite_identities},
      {"divisibility", suite_divisibility},
      {"t3", suite_t3},
      {"bounds", suite_bounds},
      {"curves", suite_curves},
      {"deuring", suite_deuring},
  };
  return *table;
}

}  // namespace

std::vector<std::string> suite_names() {
  std::vector<std::string> names;
  for (const auto& [name, fn] : suite_table()) names.push_back(name);
  names.push_back("all");
  return names;
}

void run_suite(const std::string& name, bool extended, CheckSink& sink) {
  if (name == "all") {
    for (const auto& [suite, fn] : suite_table()) fn(sink, extended);
    return;
  }
  for (const auto& [suite, fn] : suite_table()) {
    if (suite == name) {
      fn(sink, extended);
      return;
    }
  }
  fail(errc::config, "unknown suite: " + name);
}

std::vector<Criterion> run_acceptance() {
  struct Entry {
    int index;
    const char* label;
    double limit;
    SuiteFn fn;
  };
  const Entry entries[] = {
      {1, "paper-example cubics over F_3", 1.0,
       [](CheckSink& s, bool) { suite_paper_cubics_f3(s); }},
      {2, "paper-example quartics over F_4", 1.0,
       [](CheckSink& s, bool) { suite_paper_quartics_f4(s); }},
      {3, "cubic count sharpness at q=5", 1.0,
       [](CheckSink& s, bool) { suite_sharpness_f5(s); }},
      {4, "route equivalence grid", 60.0, suite_routes},
      {5, "Kloosterman value distributions", 30.0,
       [](CheckSink& s, bool e) { suite_distributions(s, e, /*tables_only=*/true); }},
      {6, "character-sum identity suites", 60.0, suite_identities},
      {7, "divisibility criterion over F_2^r", 30.0, suite_divisibility},
      {8, "trace-zero cubic identity", 30.0, suite_t3},
      {9, "bound suites", 60.0, suite_bounds},
      {10, "curve correspondences", 30.0, suite_curves},
      {11, "isomorphism class census", 30.0, suite_deuring},
  };
  std::vector<Criterion> results;
  for (const auto& entry : entries) {
    CheckSink sink;
    auto start = std::chrono::steady_clock::now();
    entry.fn(sink, false);
    auto stop = std::chrono::steady_clock::now();
    Criterion crit;
    crit.index = entry.index;
    crit.label = entry.label;
    crit.seconds = std::chrono::duration<double>(stop - start).count();
    crit.limit = entry.limit;
    std::size_t failures = 0;
    for (const auto& line : sink.lines())
      if (!line.pass) ++failures;
    crit.pass = failures == 0 && crit.seconds < entry.limit;
    crit.detail = std::to_string(sink.lines().size()) + " checks, " +
                  std::to_string(failures) + " failures";
    results.push_back(std::move(crit));
  }
  return results;
}

// ---- CLI-facing report builders ----

Report field_report(const std::string& spec) {
  auto F = get_field(FieldSpec::parse(spec));
  Report report({{"spec", ValueKind::text},
                 {"p", ValueKind::integer},
                 {"r", ValueKind::integer},
                 {"q", ValueKind::integer},
                 {"gamma", ValueKind::integer},
                 {"modulus", ValueKind::text}});
  std::string modulus;
  const auto& coeffs = F->spec().modulus;
  for (std::size_t i = coeffs.size(); i-- > 0;) {
    modulus += std::to_string(coeffs[i]);
    if (i != 0) modulus += ",";
  }
  Report::RowBuilder row;
  row.add(F->spec().str())
      .add(std::int64_t{F->p()})
      .add(std::int64_t{F->r()})
      .add(std::int64_t{F->q()})
      .add(std::int64_t{F->gamma()})
      .add(modulus);
  report.add_row(std::move(row));
  return report;
}

Report count_report(const std::string& spec, std::uint32_t m,
                    std::optional<std::pair<Elem, Elem>> ab) {
  auto F = get_field(FieldSpec::parse(spec));
  Report report({{"q", ValueKind::integer},
                 {"m", ValueKind::integer},
                 {"a", ValueKind::integer},
                 {"b", ValueKind::integer},
                 {"N", ValueKind::integer},
                 {"P", ValueKind::integer},
                 {"n_direct", ValueKind::integer},
                 {"n_formula", ValueKind::integer},
                 {"n_system", ValueKind::optional_integer},
                 {"p_direct", ValueKind::integer},
                 {"p_moebius", ValueKind::integer},
                 {"p_closed", ValueKind::optional_integer},
                 {"katz_slack", ValueKind::integer},
                 {"wan_slack", ValueKind::integer},
                 {"bounds_ok", ValueKind::boolean},
                 {"routes_ok", ValueKind::boolean}});
  std::vector<std::pair<Elem, Elem>> pairs;
  if (ab) {
    pairs.push_back(*ab);
  } else {
    for (Elem a = 0; a < F->q(); ++a)
      for (Elem b = 1; b < F->q(); ++b) pairs.emplace_back(a, b);
  }
  for (auto [a, b] : pairs) {
    CountInstance inst{F, m, m, a, b};
    std::int64_t n_direct = trace_norm_count_direct(inst);
    std::int64_t n_formula = trace_norm_count_formula(inst);
    std::optional<std::int64_t> n_system;
    if (a != 0 && m <= 4) n_system = trace_norm_count_system(inst);
    std::int64_t p_direct = irreducible_count_direct(*F, m, a, b);
    std::int64_t p_moebius = irreducible_count_moebius(*F, m, a, b);
    std::optional<std::int64_t> p_closed = irreducible_count_closed(*F, m, a, b);
    BoundReport bounds = bounds_report(inst);
    std::int64_t katz_slack = 0, wan_slack = 0;
    for (const auto& check : bounds.checks) {
      if (check.name == "katz") katz_slack = check.slack();
      if (check.name == "wan") wan_slack = check.slack();
    }
    bool routes_ok = n_direct == n_formula && p_direct == p_moebius &&
                     (!n_system || *n_system == n_direct) &&
                     (!p_closed || *p_closed == p_direct);
    bool bounds_ok = bounds.all_hold();
    report.set_pass(routes_ok && bounds_ok);
    Report::RowBuilder row;
    row.add(std::int64_t{F->q()})
        .add(std::int64_t{m})
        .add(std::int64_t{a})
        .add(std::int64_t{b})
        .add(n_direct)
        .add(p_direct)
        .add(n_direct)
        .add(n_formula)
        .add(n_system)
        .add(p_direct)
        .add(p_moebius)
        .add(p_closed)
        .add(katz_slack)
        .add(wan_slack)
        .add(bounds_ok)
        .add(routes_ok);
    report.add_row(std::move(row));
  }
  return report;
}

Report kloosterman_report(const std::string& spec, std::uint32_t n,
                          std::optional<Elem> c) {
  auto F = get_field(FieldSpec::parse(spec));
  Report report({{"q", ValueKind::integer},
                 {"n", ValueKind::integer},
                 {"c", ValueKind::integer},
                 {"zeta_order", ValueKind::integer},
                 {"value", ValueKind::text},
                 {"rational", ValueKind::boolean},
                 {"int_value", ValueKind::optional_integer}});
  std::vector<Elem> cs;
  if (c) {
    cs.push_back(*c);
  } else {
    for (Elem v = 1; v < F->q(); ++v) cs.push_back(v);
  }
  for (Elem v : cs) {
    CycInt value = kloosterman(*F, n, v);
    bool rational = value.is_rational_integer();
    std::optional<std::int64_t> as_int;
    if (rational) as_int = value.to_integer();
    Report::RowBuilder row;
    row.add(std::int64_t{F->q()})
        .add(std::int64_t{n})
        .add(std::int64_t{v})
        .add(std::int64_t{value.order()})
        .add(value.str())
        .add(rational)
        .add(as_int);
    report.add_row(std::move(row));
  }
  return report;
}

Report curve_report(const std::string& spec, std::optional<Elem> c) {
  auto F = get_field(FieldSpec::parse(spec));
  Report report({{"q", ValueKind::integer},
                 {"c", ValueKind::integer},
                 {"points", ValueKind::integer},
                 {"trace", ValueKind::integer},
                 {"singular", ValueKind::boolean},
                 {"hasse_ok", ValueKind::boolean}});
  std::vector<Elem> cs;
  if (c) {
    cs.push_back(*c);
  } else {
    for (Elem v = 1; v < F->q(); ++v) cs.push_back(v);
  }
  for (Elem v : cs) {
    if (v == 0) fail(errc::precondition, "cubic parameter c must be nonzero");
    PointCount pc = count_points(CubicModel{F, v});
    bool singular = F->p() != 3 && v == F->inv(F->scalar(27));
    bool hasse = singular || pc.trace * pc.trace <= 4 * std::int64_t{F->q()};
    report.set_pass(hasse);
    Report::RowBuilder row;
    row.add(std::int64_t{F->q()})
        .add(std::int64_t{v})
        .add(pc.total)
        .add(pc.trace)
        .add(singular)
        .add(hasse);
    report.add_row(std::move(row));
  }
  return report;
}

Report classnum_report(std::int64_t d) {
  Report report({{"d", ValueKind::integer},
                 {"h", ValueKind::integer},
                 {"H", ValueKind::integer}});
  Report::RowBuilder row;
  row.add(d).add(class_number_h(d)).add(kronecker_class_number(d));
  report.add_row(std::move(row));
  return report;
}

Report distribution_report(const std::string& spec) {
  auto F = get_field(FieldSpec::parse(spec));
  DistributionTable table = value_distribution(*F);
  Report report({{"q", ValueKind::integer},
                 {"t", ValueKind::integer},
                 {"multiplicity", ValueKind::integer},
                 {"class_number", ValueKind::integer},
                 {"congruence_ok", ValueKind::boolean},
                 {"match", ValueKind::boolean}});
  for (const auto& r : table.rows) {
    bool match = r.multiplicity == r.class_number;
    Report::RowBuilder row;
    row.add(std::int64_t{table.q})
        .add(r.t)
        .add(r.multiplicity)
        .add(r.class_number)
        .add(r.congruence_ok)
        .add(match);
    report.add_row(std::move(row));
  }
  report.set_pass(table.pass());
  return report;
}

Report verify_suite_report(const std::string& suite, bool extended) {
  CheckSink sink;
  run_suite(suite, extended, sink);
  Report report({{"suite", ValueKind::text},
                 {"check", ValueKind::text},
                 {"instance", ValueKind::text},
                 {"expected", ValueKind::text},
                 {"actual", ValueKind::text},
                 {"pass", ValueKind::boolean}});
  for (const auto& line : sink.lines()) {
    report.set_pass(line.pass);
    Report::RowBuilder row;
    row.add(suite).add(line.check).add(line.instance).add(line.expected).add(line.actual).add(line.pass);
    report.add_row(std::move(row));
  }
  return report;
}

}  // namespace fflab
