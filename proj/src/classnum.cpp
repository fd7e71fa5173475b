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

#include "fflab/classnum.hpp"

#include <numeric>

#include "fflab/detail/util.hpp"
#include "fflab/errors.hpp"

namespace fflab {
namespace {

void check_discriminant(std::int64_t d) {
  if (d >= 0) fail(errc::invalid_discriminant, "discriminant must be negative");
  std::int64_t res = ((d % 4) + 4) % 4;
  if (res != 0 && res != 1)
    fail(errc::invalid_discriminant, "discriminant must be 0 or 1 mod 4");
}

}  // namespace

std::int64_t class_number_h(std::int64_t d) {
  check_discriminant(d);
  const std::int64_t abs_d = -d;
  std::int64_t count = 0;
  for (std::int64_t a = 1; 3 * a * a <= abs_d; ++a) {
    for (std::int64_t b = -a; b <= a; ++b) {
      std::int64_t num = b * b - d;
      if (num % (4 * a) != 0) continue;
      std::int64_t c = num / (4 * a);
      if (c < a) continue;
      if ((b < 0) && (-b == a || a == c)) continue;
      std::int64_t g = std::gcd(std::gcd(a, b < 0 ? -b : b), c);
      if (g != 1) continue;
      ++count;
    }
  }
  return count;
}

std::int64_t kronecker_class_number(std::int64_t d) {
  check_discriminant(d);
  std::int64_t total = 0;
  for (std::int64_t f = 1; f * f <= -d; ++f) {
    if (d % (f * f) != 0) continue;
    std::int64_t d2 = d / (f * f);
    std::int64_t res = ((d2 % 4) + 4) % 4;
    if (res != 0 && res != 1) continue;
    total += class_number_h(d2);
  }
  return total;
}

}  // namespace fflab
