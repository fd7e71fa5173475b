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

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>

#include "fflab/detail/util.hpp"
#include "fflab/errors.hpp"

namespace fflab {

const char* errc_name(errc code) {
  switch (code) {
    case errc::invalid_argument: return "invalid_argument";
    case errc::non_prime: return "non_prime";
    case errc::reducible_modulus: return "reducible_modulus";
    case errc::non_primitive_root: return "non_primitive_root";
    case errc::size_overflow: return "size_overflow";
    case errc::zero_log: return "zero_log";
    case errc::not_in_subfield: return "not_in_subfield";
    case errc::not_rational: return "not_rational";
    case errc::order_mismatch: return "order_mismatch";
    case errc::coefficient_overflow: return "coefficient_overflow";
    case errc::precondition: return "precondition";
    case errc::wrong_characteristic: return "wrong_characteristic";
    case errc::non_integral: return "non_integral";
    case errc::singular_model: return "singular_model";
    case errc::unsupported_characteristic: return "unsupported_characteristic";
    case errc::invalid_discriminant: return "invalid_discriminant";
    case errc::config: return "config";
    case errc::internal: return "internal";
  }
  return "unknown";
}

namespace detail {

unsigned worker_count() {
  static unsigned cached = [] {
    unsigned hw = std::thread::hardware_concurrency();
    if (hw == 0) hw = 1;
    if (const char* env = std::getenv("FFLAB_THREADS")) {
      char* end = nullptr;
      long v = std::strtol(env, &end, 10);
      if (end != env && v >= 1 && static_cast<unsigned long>(v) < hw)
        hw = static_cast<unsigned>(v);
    }
    return hw;
  }();
  return cached;
}

void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn) {
  const unsigned workers = worker_count();
  if (n == 0) return;
  if (workers <= 1 || n < 64) {
    for (std::size_t i = 0; i < n; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  const std::size_t chunk = std::max<std::size_t>(1, n / (workers * 8));
  auto body = [&] {
    for (;;) {
      std::size_t begin = next.fetch_add(chunk);
      if (begin >= n) return;
      std::size_t end = std::min(n, begin + chunk);
      try {
        for (std::size_t i = begin; i < end; ++i) fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (unsigned w = 1; w < workers; ++w) pool.emplace_back(body);
  body();
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace detail
}  // namespace fflab
