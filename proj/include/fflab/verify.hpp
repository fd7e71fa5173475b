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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fflab/field.hpp"
#include "fflab/report.hpp"

namespace fflab {

struct DistRow {
  std::int64_t t = 0;
  std::int64_t multiplicity = 0;
  std::int64_t class_number = 0;
  bool congruence_ok = false;
};

/// Exhaustive k_1 value distribution over F_q for p in {2, 3}: one row per
/// admissible trace value t (|t| < 2 sqrt(q) and t = -1 mod 3 for p = 3,
/// t = -1 mod 4 for p = 2), with the observed multiplicity and the Kronecker
/// class number H(t^2 - 4q) computed independently from reduced forms.
struct DistributionTable {
  std::uint32_t q = 0;
  std::vector<DistRow> rows;
  bool multiplicities_match = false;  // every row has multiplicity == H
  bool totals_match = false;          // multiplicities sum to q-1, no strays
  bool pass() const { return multiplicities_match && totals_match; }
};

DistributionTable value_distribution(const FieldCtx& ctx);

/// For p = 3, q <= 81: the count of (a, b), ab != 0, with a given number of
/// irreducible cubics equals (q-1) H(t^2-4q) for the matching trace value.
bool cubic_distribution_check(const FieldCtx& ctx);

/// For q in {4, 8, 16}: the analogous quartic distribution.
bool quartic_distribution_check(const FieldCtx& ctx);

/// Divisibility of k_1 by three over F_{2^r}, r <= 10, against the cube-root
/// trace criterion.
bool kl_mod3_check(const FieldCtx& ctx);

/// Char-2 count of irreducible cubics x^3 + ax^2 + cx + b with Tr(a) = 0
/// against the closed expression in k_1(b).
bool t3_check(const FieldCtx& ctx, Elem b);

// ---- verification harness ----

struct CheckLine {
  std::string check;
  std::string instance;
  std::string expected;
  std::string actual;
  bool pass = false;
};

class CheckSink {
 public:
  bool expect_equal(const std::string& check, const std::string& instance,
                    std::int64_t expected, std::int64_t actual);
  bool expect_true(const std::string& check, const std::string& instance,
                   bool ok, const std::string& detail = "");
  const std::vector<CheckLine>& lines() const { return lines_; }
  bool all_pass() const;

 private:
  std::vector<CheckLine> lines_;
};

std::vector<std::string> suite_names();
void run_suite(const std::string& name, bool extended, CheckSink& sink);

struct Criterion {
  int index = 0;
  std::string label;
  bool pass = false;
  double seconds = 0;
  double limit = 0;
  std::string detail;
};

/// Runs the full acceptance battery (each criterion has a wall-clock limit
/// that is part of the verdict).
std::vector<Criterion> run_acceptance();

// ---- CLI-facing report builders ----

Report field_report(const std::string& spec);
Report count_report(const std::string& spec, std::uint32_t m,
                    std::optional<std::pair<Elem, Elem>> ab);
Report kloosterman_report(const std::string& spec, std::uint32_t n,
                          std::optional<Elem> c);
Report curve_report(const std::string& spec, std::optional<Elem> c);
Report classnum_report(std::int64_t d);
Report distribution_report(const std::string& spec);
Report verify_suite_report(const std::string& suite, bool extended);

}  // namespace fflab
