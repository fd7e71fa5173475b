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

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "fflab.h"

namespace {

// exit codes: 0 all checks pass, 1 a pass/fail flag is false, 2 usage error,
// 3 computation error
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr int kExitError = 3;

struct ReportDeleter {
  void operator()(fflab_report* r) const { fflab_report_destroy(r); }
};
using ReportPtr = std::unique_ptr<fflab_report, ReportDeleter>;

void csv_field(std::ostream& os, const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) {
    os << value;
    return;
  }
  os << '"';
  for (char ch : value) {
    if (ch == '"') os << '"';
    os << ch;
  }
  os << '"';
}

void emit_csv(const fflab_report* report) {
  const int32_t cols = fflab_report_cols(report);
  const int32_t rows = fflab_report_rows(report);
  for (int32_t c = 0; c < cols; ++c) {
    if (c) std::cout << ',';
    csv_field(std::cout, fflab_report_col_name(report, c));
  }
  std::cout << '\n';
  for (int32_t r = 0; r < rows; ++r) {
    for (int32_t c = 0; c < cols; ++c) {
      if (c) std::cout << ',';
      csv_field(std::cout, fflab_report_cell(report, r, c));
    }
    std::cout << '\n';
  }
}

void emit_jsonl(const fflab_report* report) {
  const int32_t cols = fflab_report_cols(report);
  const int32_t rows = fflab_report_rows(report);
  for (int32_t r = 0; r < rows; ++r) {
    nlohmann::ordered_json line;
    for (int32_t c = 0; c < cols; ++c) {
      const char* name = fflab_report_col_name(report, c);
      const std::string cell = fflab_report_cell(report, r, c);
      switch (fflab_report_col_kind(report, c)) {
        case FFLAB_VALUE_INT:
          line[name] = std::stoll(cell);
          break;
        case FFLAB_VALUE_BOOL:
          line[name] = cell == "true";
          break;
        case FFLAB_VALUE_OPT_INT:
          if (cell.empty())
            line[name] = nullptr;
          else
            line[name] = std::stoll(cell);
          break;
        case FFLAB_VALUE_TEXT:
        default:
          line[name] = cell;
          break;
      }
    }
    std::cout << line.dump() << '\n';
  }
}

int emit(fflab_status rc, fflab_report* raw, bool json) {
  if (rc != FFLAB_OK) {
    std::cerr << "fflab: " << fflab_status_name(rc) << ": " << fflab_last_error()
              << std::endl;
    return kExitError;
  }
  ReportPtr report(raw);
  if (json)
    emit_jsonl(report.get());
  else
    emit_csv(report.get());
  return fflab_report_pass(report.get()) ? 0 : kExitFail;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-field counting laboratory: trace/norm counts of "
               "irreducible polynomials, exact character sums, curve point "
               "counts, class numbers, and verification suites"};
  app.require_subcommand(1);
  bool json = false;
  app.add_flag("--json", json, "emit JSON lines instead of CSV");

  std::string field_spec;
  std::uint32_t m = 3, n = 1;
  std::optional<std::uint32_t> a_opt, b_opt, c_opt;
  std::int64_t d = -3;
  std::string suite = "all";
  bool extended = false;

  auto* field_cmd = app.add_subcommand("field", "field structure for a spec string");
  field_cmd->add_option("--field", field_spec, "field spec, e.g. 5 or 2^4 or 3^2:1,1,2")
      ->required();

  auto* count_cmd =
      app.add_subcommand("count", "trace/norm counts and irreducible counts");
  count_cmd->add_option("--field", field_spec)->required();
  count_cmd->add_option("--m", m, "polynomial degree (>= 2)")->required();
  count_cmd->add_option("--a", a_opt, "trace coefficient (omit with --b for a sweep)");
  count_cmd->add_option("--b", b_opt, "norm coefficient, nonzero");

  auto* kl_cmd = app.add_subcommand("kloosterman", "Kloosterman sums");
  kl_cmd->add_option("--field", field_spec)->required();
  kl_cmd->add_option("--n", n, "dimension (1 = classical)");
  kl_cmd->add_option("--c", c_opt, "parameter; omit for all c");

  auto* curve_cmd = app.add_subcommand("curve", "point counts of y^2+cy+xy=x^3");
  curve_cmd->add_option("--field", field_spec)->required();
  curve_cmd->add_option("--c", c_opt, "parameter; omit for all c");

  auto* class_cmd = app.add_subcommand("classnum", "form class numbers h and H");
  class_cmd->add_option("--d", d, "negative discriminant (0 or 1 mod 4)")->required();

  auto* dist_cmd =
      app.add_subcommand("distribution", "Kloosterman value distribution table");
  dist_cmd->add_option("--field", field_spec)->required();

  auto* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("--suite", suite, "suite name (see --list)");
  bool list_suites = false;
  verify_cmd->add_flag("--list", list_suites, "list suite names and exit");
  verify_cmd->add_flag("--extended", extended, "run the larger sweeps too");

  CLI11_PARSE(app, argc, argv);

  try {
    fflab_report* report = nullptr;
    if (field_cmd->parsed())
      return emit(fflab_report_field(field_spec.c_str(), &report), report, json);
    if (count_cmd->parsed()) {
      if (a_opt.has_value() != b_opt.has_value()) {
        std::cerr << "fflab: count needs both --a and --b, or neither" << std::endl;
        return kExitUsage;
      }
      int has_ab = a_opt.has_value() ? 1 : 0;
      return emit(fflab_report_count(field_spec.c_str(), m, has_ab,
                                     a_opt.value_or(0), b_opt.value_or(0), &report),
                  report, json);
    }
    if (kl_cmd->parsed())
      return emit(fflab_report_kloosterman(field_spec.c_str(), n,
                                           c_opt.has_value() ? 1 : 0,
                                           c_opt.value_or(0), &report),
                  report, json);
    if (curve_cmd->parsed())
      return emit(fflab_report_curve(field_spec.c_str(), c_opt.has_value() ? 1 : 0,
                                     c_opt.value_or(0), &report),
                  report, json);
    if (class_cmd->parsed())
      return emit(fflab_report_classnum(d, &report), report, json);
    if (dist_cmd->parsed())
      return emit(fflab_report_distribution(field_spec.c_str(), &report), report,
                  json);
    if (verify_cmd->parsed()) {
      if (list_suites) {
        std::cout << fflab_verify_suites() << std::endl;
        return 0;
      }
      return emit(fflab_report_verify(suite.c_str(), extended ? 1 : 0, &report),
                  report, json);
    }
  } catch (const std::exception& e) {
    std::cerr << "fflab: " << e.what() << std::endl;
    return kExitError;
  }
  return kExitUsage;
}
