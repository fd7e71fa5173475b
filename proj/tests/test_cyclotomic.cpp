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

#include "fflab/cyclotomic.hpp"

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

TEST_CASE("root-of-unity relations") {
  // 1 + z + z^2 = 0 in Z[zeta_3]
  CycInt s = CycInt::root(3, 0) + CycInt::root(3, 1) + CycInt::root(3, 2);
  CHECK(s.is_zero());
  // zeta_4^2 = -1
  CHECK(CycInt::root(4, 1) * CycInt::root(4, 1) == CycInt::integer(4, -1));
  // zeta_6^3 = -1
  CHECK(CycInt::root(6, 3) == CycInt::integer(6, -1));
  // the full zeta_5 sum annihilates everything
  CycInt five(5);
  for (std::uint32_t k = 0; k < 5; ++k) five.add_root(k);
  CycInt probe = CycInt::root(5, 2).scaled(7) - CycInt::integer(5, 3);
  CHECK((five * probe).is_zero());
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic_polynomial(1) == std::vector<std::int64_t>{-1, 1});
  CHECK(cyclotomic_polynomial(2) == std::vector<std::int64_t>{1, 1});
  CHECK(cyclotomic_polynomial(3) == std::vector<std::int64_t>{1, 1, 1});
  CHECK(cyclotomic_polynomial(6) == std::vector<std::int64_t>{1, -1, 1});
  CHECK(cyclotomic_polynomial(12) == std::vector<std::int64_t>{1, 0, -1, 0, 1});
}

TEST_CASE("ring axioms on sampled values") {
  for (std::uint32_t order : {6u, 8u, 12u}) {
    auto mk = [order](int seed) {
      CycInt v(order);
      for (std::uint32_t k = 0; k < order; ++k)
        v.add_root(k, (seed * 7 + static_cast<int>(k) * 3) % 5 - 2);
      return v;
    };
    for (int i = 0; i < 4; ++i) {
      CycInt a = mk(i), b = mk(i + 1), c = mk(i + 2);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) * c == a * c + b * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK((a - a).is_zero());
    }
  }
}

TEST_CASE("conjugation is an involutive automorphism") {
  CycInt a = CycInt::root(12, 5).scaled(3) + CycInt::integer(12, 2) - CycInt::root(12, 1);
  CycInt b = CycInt::root(12, 7) + CycInt::root(12, 2).scaled(-4);
  CHECK(a.conjugate().conjugate() == a);
  CHECK((a * b).conjugate() == a.conjugate() * b.conjugate());
  CHECK(CycInt::root(12, 5).conjugate() == CycInt::root(12, 7));
}

TEST_CASE("order embedding is a ring map") {
  CHECK(CycInt::root(3, 1).embedded(6) == CycInt::root(6, 2));
  CycInt a = CycInt::root(3, 1) - CycInt::root(3, 2).scaled(2);
  CycInt b = CycInt::root(3, 2) + CycInt::integer(3, 5);
  CHECK((a * b).embedded(6) == a.embedded(6) * b.embedded(6));
  CHECK((a + b).embedded(6) == a.embedded(6) + b.embedded(6));
  CHECK(code_of([&] { (void)a.embedded(7); }) == errc::order_mismatch);
}

TEST_CASE("rationality detection and extraction") {
  CHECK(CycInt::integer(12, 7).is_rational_integer());
  CHECK(CycInt::integer(12, 7).to_integer() == 7);
  CHECK(CycInt(9).to_integer() == 0);
  CHECK(!CycInt::root(4, 1).is_rational_integer());
  CHECK(code_of([] { (void)CycInt::root(4, 1).to_integer(); }) == errc::not_rational);
  // 1 + z + z^2 over order 3 reduces to 0, a rational integer
  CycInt s = CycInt::root(3, 0) + CycInt::root(3, 1) + CycInt::root(3, 2);
  CHECK(s.is_rational_integer());
  CHECK(s.to_integer() == 0);
}

TEST_CASE("arithmetic requires matching orders") {
  CycInt a(3), b(4);
  CHECK(code_of([&] { (void)(a + b); }) == errc::order_mismatch);
  CHECK(code_of([&] { (void)(a * b); }) == errc::order_mismatch);
  CHECK(code_of([&] { (void)(a == b); }) == errc::order_mismatch);
}

TEST_CASE("canonical rendering") {
  CHECK(CycInt(5).str() == "0");
  CHECK(CycInt::integer(5, -3).str() == "-3");
  CHECK((CycInt::root(5, 1) + CycInt::integer(5, 2)).str() == "2+z^1");
  CHECK(CycInt::root(5, 1).scaled(-2).str() == "-2*z^1");
}
