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
#include <string>
#include <vector>

#include "fflab/errors.hpp"

namespace fflab {

/// An exact element of Z[zeta_n], stored as an integer vector in
/// Z[x]/(x^n - 1). Values compare equal iff their difference vanishes modulo
/// the n-th cyclotomic polynomial; all arithmetic is exact with 64-bit
/// coefficients and overflow checks. Arithmetic requires matching orders;
/// lifting to a larger order is explicit via embedded().
class CycInt {
 public:
  explicit CycInt(std::uint32_t order);
  static CycInt integer(std::uint32_t order, std::int64_t value);
  static CycInt root(std::uint32_t order, std::uint64_t power, std::int64_t mult = 1);

  std::uint32_t order() const { return order_; }

  CycInt operator+(const CycInt& other) const;
  CycInt operator-(const CycInt& other) const;
  CycInt operator*(const CycInt& other) const;
  CycInt operator-() const;
  CycInt& operator+=(const CycInt& other);

  /// Accumulates mult * zeta^power without canonicalizing (histogram use).
  void add_root(std::uint64_t power, std::int64_t mult = 1);

  CycInt scaled(std::int64_t factor) const;
  /// Complex conjugation, zeta -> zeta^(-1).
  CycInt conjugate() const;
  /// Lift into Z[zeta_m] for order | m.
  CycInt embedded(std::uint32_t new_order) const;

  bool operator==(const CycInt& other) const;
  bool operator!=(const CycInt& other) const { return !(*this == other); }
  bool is_zero() const;
  bool is_rational_integer() const;
  /// The value as a plain integer; errors with not_rational otherwise.
  std::int64_t to_integer() const;

  /// Coefficients of the canonical representative, degree < phi(n), trimmed.
  std::vector<std::int64_t> canonical() const;
  /// Human-readable canonical form, e.g. "2-z^1+z^3" (z = zeta_n).
  std::string str() const;

 private:
  std::uint32_t order_;
  std::vector<std::int64_t> c_;
};

/// The n-th cyclotomic polynomial, integer coefficients, constant first.
const std::vector<std::int64_t>& cyclotomic_polynomial(std::uint32_t n);

}  // namespace fflab
