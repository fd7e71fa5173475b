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

#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <utility>
#include <vector>

#include "fflab/errors.hpp"

namespace fflab::detail {

inline bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, unsigned>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      unsigned e = 0;
      while (n % d == 0) n /= d, ++e;
      out.emplace_back(d, e);
    }
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

inline int moebius(std::uint64_t n) {
  int mu = 1;
  for (auto [p, e] : factorize(n)) {
    (void)p;
    if (e > 1) return 0;
    mu = -mu;
  }
  return mu;
}

// x^(-1) mod m for gcd(x, m) = 1; inv mod 1 is 0.
inline std::uint64_t inv_mod(std::uint64_t x, std::uint64_t m) {
  if (m == 1) return 0;
  std::int64_t a = static_cast<std::int64_t>(x % m), b = static_cast<std::int64_t>(m);
  std::int64_t u = 1, v = 0;
  while (b != 0) {
    std::int64_t q = a / b;
    a -= q * b;
    std::swap(a, b);
    u -= q * v;
    std::swap(u, v);
  }
  if (a != 1) fail(errc::internal, "inv_mod of non-unit");
  std::int64_t mm = static_cast<std::int64_t>(m);
  return static_cast<std::uint64_t>(((u % mm) + mm) % mm);
}

inline std::uint64_t isqrt_u64(std::uint64_t n) {
  if (n == 0) return 0;
  std::uint64_t x = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (x > 0 && x * x > n) --x;
  while ((x + 1) * (x + 1) <= n) ++x;
  return x;
}

inline std::int64_t ck_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    fail(errc::coefficient_overflow, "64-bit overflow in exact arithmetic");
  return r;
}

inline std::int64_t ck_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r))
    fail(errc::coefficient_overflow, "64-bit overflow in exact arithmetic");
  return r;
}

inline std::int64_t ck_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    fail(errc::coefficient_overflow, "64-bit overflow in exact arithmetic");
  return r;
}

// q^e as u64, failing on overflow past 2^62.
inline std::uint64_t upow_checked(std::uint64_t q, std::uint32_t e) {
  std::uint64_t v = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    if (v > (std::uint64_t{1} << 62) / (q ? q : 1))
      fail(errc::size_overflow, "power exceeds 2^62");
    v *= q;
  }
  return v;
}

// Worker count for sweeps; FFLAB_THREADS caps it.
unsigned worker_count();

// Runs fn(i) for i in [0, n); work is split across workers, results must be
// written to disjoint slots by the caller. Exceptions propagate.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

}  // namespace fflab::detail
