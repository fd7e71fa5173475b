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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <functional>
#include <map>
#include <numeric>

#include "fflab/field.hpp"

using namespace fflab;

namespace {

errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return errc::internal;
}

}  // namespace

TEST_CASE("spec strings parse and round-trip") {
  FieldSpec s = FieldSpec::parse("5");
  CHECK(s.p == 5);
  CHECK(s.r == 1);
  CHECK(s.modulus.empty());
  CHECK(s.str() == "5");

  s = FieldSpec::parse("2^4");
  CHECK(s.p == 2);
  CHECK(s.r == 4);
  CHECK(s.str() == "2^4");

  s = FieldSpec::parse("3^2:1,1,2");
  CHECK(s.modulus == std::vector<std::uint32_t>{2, 1, 1});
  CHECK(s.str() == "3^2:1,1,2");

  CHECK(code_of([] { FieldSpec::parse("abc"); }) == errc::config);
  CHECK(code_of([] { FieldSpec::parse("5^"); }) == errc::config);
  CHECK(code_of([] { FieldSpec::parse("5^2:"); }) == errc::config);
}

TEST_CASE("prime field F_3 uses the smallest primitive root") {
  auto F = get_field(FieldSpec::parse("3"));
  CHECK(F->q() == 3);
  CHECK(F->gamma() == 2);
  CHECK(F->add(2, 2) == 1);
  CHECK(F->mul(2, 2) == 1);
}

TEST_CASE("F_4 with the standard modulus") {
  auto F = get_field(FieldSpec::parse("2^2:1,1,1"));
  CHECK(F->q() == 4);
  CHECK(F->gamma() == 2);
  CHECK(F->mul(2, 2) == 3);       // gamma^2 = gamma + 1
  CHECK(F->pow(2, 3) == 1);       // gamma^3 = 1
  CHECK(F->add(2, 3) == 1);
  auto def = get_field(FieldSpec::parse("2^2"));
  CHECK(def->spec().str() == "2^2:1,1,1");
}

TEST_CASE("bad constructions are rejected with specific codes") {
  CHECK(code_of([] { FieldCtx::create(FieldSpec::parse("4")); }) == errc::non_prime);
  CHECK(code_of([] { FieldCtx::create(FieldSpec::parse("2^2:1,0,1")); }) ==
        errc::reducible_modulus);
  // x^2 + 1 is irreducible over F_3 but its root has order 4, not 8
  CHECK(code_of([] { FieldCtx::create(FieldSpec::parse("3^2:1,0,1")); }) ==
        errc::non_primitive_root);
  CHECK(code_of([] { FieldCtx::create(FieldSpec::parse("2^21")); }) ==
        errc::size_overflow);
  CHECK(code_of([] { FieldCtx::create(FieldSpec::parse("2^2:1,1")); }) ==
        errc::invalid_argument);
}

TEST_CASE("construction is deterministic") {
  auto a = FieldCtx::create(FieldSpec::parse("3^3"));
  auto b = FieldCtx::create(FieldSpec::parse("3^3"));
  CHECK(a->spec() == b->spec());
  CHECK(a->gamma() == b->gamma());
  CHECK(a->exp_table() == b->exp_table());
  CHECK(a->log_table() == b->log_table());
}

TEST_CASE("exp/log tables satisfy the group law") {
  for (const char* spec : {"2", "3", "5", "2^2", "3^2", "2^4", "7", "5^2"}) {
    auto F = get_field(FieldSpec::parse(spec));
    const std::uint32_t group = F->q() - 1;
    for (std::uint32_t i = 0; i < group; ++i) {
      CHECK(F->dlog(F->exp(i)) == i);
      for (std::uint32_t j = 0; j < group; ++j)
        CHECK(F->mul(F->exp(i), F->exp(j)) == F->exp(i + j));
    }
  }
}

TEST_CASE("field axioms hold exhaustively on small fields") {
  for (const char* spec : {"2^3", "3^2", "5"}) {
    auto F = get_field(FieldSpec::parse(spec));
    for (Elem x = 0; x < F->q(); ++x) {
      CHECK(F->add(x, F->neg(x)) == 0);
      if (x != 0) CHECK(F->mul(x, F->inv(x)) == 1);
      for (Elem y = 0; y < F->q(); ++y) {
        CHECK(F->add(x, y) == F->add(y, x));
        CHECK(F->mul(x, y) == F->mul(y, x));
        for (Elem z = 0; z < F->q(); ++z) {
          CHECK(F->mul(x, F->add(y, z)) == F->add(F->mul(x, y), F->mul(x, z)));
        }
      }
    }
  }
}

TEST_CASE("absolute trace is additive and Frobenius-stable") {
  for (const char* spec : {"2^4", "3^3", "5^2"}) {
    auto F = get_field(FieldSpec::parse(spec));
    for (Elem x = 0; x < F->q(); ++x) {
      CHECK(F->abs_trace(F->frobenius(x, 1)) == F->abs_trace(x));
      for (Elem y = 0; y < F->q(); ++y) {
        std::uint32_t lhs = F->abs_trace(F->add(x, y));
        std::uint32_t rhs = (F->abs_trace(x) + F->abs_trace(y)) % F->p();
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("tower F_4 over F_2") {
  auto tw = get_tower(FieldSpec::parse("2"), 2);
  CHECK(tw->top().q() == 4);
  CHECK(tw->subfield_index() == 3);
  CHECK(tw->g_top() == 1);  // N(gamma) = gamma^3 = 1
  CHECK(tw->trace(2) == 1); // alpha + alpha^2 = 1
  CHECK(tw->trace(1) == 0); // 1 + 1 = 0
  CHECK(tw->trace(0) == 0);
  CHECK(tw->norm(2) == 1);
  CHECK(tw->norm(1) == 1);
  CHECK(tw->norm(0) == 0);
}

TEST_CASE("trivial towers are the identity") {
  auto tw = get_tower(FieldSpec::parse("3^2"), 1);
  for (Elem x = 0; x < 9; ++x) {
    CHECK(tw->trace(x) == x);
    CHECK(tw->norm(x) == x);
    CHECK(tw->embed(x) == x);
  }
}

TEST_CASE("tower norms land on primitive elements") {
  // F_125 over F_5: N(gamma) = gamma^31 generates F_5^*
  auto tw = get_tower(FieldSpec::parse("5"), 3);
  CHECK(tw->subfield_index() == 31);
  Elem g = tw->norm(tw->top().gamma());
  CHECK(tw->base().mult_order(g) == 4);

  // F_9 over F_3: N(gamma) = gamma^4 = -1 = 2
  auto tw9 = get_tower(FieldSpec::parse("3"), 2);
  CHECK(tw9->norm(tw9->top().gamma()) == 2);
}

TEST_CASE("trace and norm are surjective with uniform fibers") {
  for (std::uint32_t t : {2u, 3u}) {
    for (const char* spec : {"2", "3", "2^2", "5"}) {
      auto tw = get_tower(FieldSpec::parse(spec), t);
      const std::uint32_t q = tw->base().q();
      std::map<Elem, std::int64_t> trace_fibers, norm_fibers;
      for (Elem x = 0; x < tw->top().q(); ++x) {
        ++trace_fibers[tw->trace(x)];
        if (x != 0) ++norm_fibers[tw->norm(x)];
      }
      std::int64_t qt1 = 1;
      for (std::uint32_t i = 0; i + 1 < t; ++i) qt1 *= q;
      for (Elem a = 0; a < q; ++a) CHECK(trace_fibers[a] == qt1);
      CHECK(norm_fibers.size() == q - 1);
      for (Elem b = 1; b < q; ++b)
        CHECK(norm_fibers[b] == static_cast<std::int64_t>(tw->subfield_index()));
    }
  }
}

TEST_CASE("embeddings are field homomorphisms") {
  auto F4 = get_field(FieldSpec::parse("2^2"));
  auto F16 = get_field(FieldSpec::parse("2^4"));
  Embedding emb(F4, F16);
  for (Elem x = 0; x < 4; ++x) {
    CHECK(emb.retract(emb.apply(x)) == x);
    for (Elem y = 0; y < 4; ++y) {
      CHECK(emb.apply(F4->add(x, y)) == F16->add(emb.apply(x), emb.apply(y)));
      CHECK(emb.apply(F4->mul(x, y)) == F16->mul(emb.apply(x), emb.apply(y)));
    }
  }
  CHECK(code_of([&] { emb.retract(F16->gamma()); }) == errc::not_in_subfield);
}

TEST_CASE("trace and norm are transitive through refining towers") {
  struct Case {
    const char* base;
    std::uint32_t t, m;
  };
  for (const auto& tc : {Case{"2", 2, 4}, Case{"3", 1, 3}, Case{"3", 2, 4}, Case{"5", 1, 2}}) {
    FieldSpec base = FieldSpec::parse(tc.base);
    auto small = get_tower(base, tc.t);
    auto big = get_tower(base, tc.m);
    Embedding lift(small->top_ptr(), big->top_ptr());
    const FieldCtx& B = small->base();
    const std::uint32_t ratio = tc.m / tc.t;
    for (Elem x = 0; x < small->top().q(); ++x) {
      Elem lifted = lift.apply(x);
      CHECK(big->trace(lifted) == B.mul(B.scalar(ratio), small->trace(x)));
      CHECK(big->norm(lifted) == B.pow(small->norm(x), ratio));
    }
  }
}

TEST_CASE("norm congruence solving matches worked instances") {
  auto tw = get_tower(FieldSpec::parse("5"), 1);
  // m = 3, b = 2: d = gcd(4,3) = 1, 3 i = ind(2) = 1 mod 4 -> i0 = 3
  auto sol = tw->solve_norm_congruence(3, 2);
  CHECK(sol.d == 1);
  CHECK(sol.solvable);
  CHECK(sol.i0 == 3);
  // m = 2, b = 2: d = 2, ind(2) = 1 odd -> unsolvable
  sol = tw->solve_norm_congruence(2, 2);
  CHECK(sol.d == 2);
  CHECK(!sol.solvable);
  // m = t: i0 = ind_g(b)
  auto tw2 = get_tower(FieldSpec::parse("3"), 2);
  for (Elem b = 1; b < 3; ++b) {
    auto s = tw2->solve_norm_congruence(2, b);
    CHECK(s.d == 1);
    CHECK(s.solvable);
    CHECK(s.i0 == tw2->ind_g(b));
  }
}

TEST_CASE("solved congruences satisfy the defining identity") {
  for (const char* spec : {"3", "5", "2^2", "7"}) {
    FieldSpec base = FieldSpec::parse(spec);
    for (std::uint32_t t : {1u, 2u}) {
      auto tw = get_tower(base, t);
      const std::uint32_t q = tw->base().q();
      for (std::uint32_t mult : {1u, 2u, 3u, 4u}) {
        std::uint64_t m = std::uint64_t{t} * mult;
        for (Elem b = 1; b < q; ++b) {
          auto sol = tw->solve_norm_congruence(m, b);
          std::uint32_t ind = tw->ind_g(b);
          CHECK(sol.d == std::gcd<std::uint64_t>(q - 1, mult));
          CHECK(sol.solvable == (ind % sol.d == 0));
          if (sol.solvable) {
            CHECK(sol.i0 < (q - 1) / sol.d);
            // N(gamma^i0)^(m/t) = b
            Elem nrm = tw->norm(tw->top().exp(sol.i0));
            CHECK(tw->base().pow(nrm, mult) == b);
          }
        }
      }
    }
  }
}

TEST_CASE("discrete log errors and lookups") {
  auto F = get_field(FieldSpec::parse("3^2"));
  CHECK(code_of([&] { F->dlog(0); }) == errc::zero_log);
  CHECK(F->dlog(1) == 0);
  CHECK(F->dlog(F->gamma()) == 1);
  CHECK(F->dlog(F->mul(F->exp(5), F->exp(6))) == 3);  // 11 mod 8
}
