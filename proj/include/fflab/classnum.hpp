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

namespace fflab {

/// Ordinary form class number h(d) for a negative discriminant d = 0, 1
/// (mod 4): the number of primitive reduced binary quadratic forms
/// ax^2 + bxy + cy^2 with b^2 - 4ac = d, |b| <= a <= c, and b >= 0 whenever
/// |b| = a or a = c. Unweighted: h(-3) = h(-4) = 1.
std::int64_t class_number_h(std::int64_t d);

/// Kronecker class number H(d) = sum of h(d/f^2) over f with f^2 | d and
/// d/f^2 = 0, 1 (mod 4).
std::int64_t kronecker_class_number(std::int64_t d);

}  // namespace fflab
