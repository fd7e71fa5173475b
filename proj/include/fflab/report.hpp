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
#include <stdexcept>
#include <string>
#include <vector>

namespace fflab {

enum class ValueKind : int {
  integer = 0,
  boolean = 1,
  text = 2,
  optional_integer = 3,  // rendered empty / null when absent
};

struct Column {
  std::string name;
  ValueKind kind;
};

/// A rectangular, deterministic result table: fixed column schema, cells
/// pre-rendered as text (decimal integers, "true"/"false" booleans, plain
/// strings, empty for absent optionals), plus an aggregate pass flag.
class Report {
 public:
  explicit Report(std::vector<Column> columns) : columns_(std::move(columns)) {}

  const std::vector<Column>& columns() const { return columns_; }
  std::size_t rows() const { return cells_.size(); }
  const std::string& cell(std::size_t row, std::size_t col) const {
    return cells_[row][col];
  }
  bool pass() const { return pass_; }
  void set_pass(bool ok) { pass_ = pass_ && ok; }

  class RowBuilder {
   public:
    RowBuilder& add(std::int64_t v) {
      row_.push_back(std::to_string(v));
      return *this;
    }
    RowBuilder& add(bool v) {
      row_.push_back(v ? "true" : "false");
      return *this;
    }
    RowBuilder& add(std::string v) {
      row_.push_back(std::move(v));
      return *this;
    }
    RowBuilder& add(std::optional<std::int64_t> v) {
      row_.push_back(v ? std::to_string(*v) : std::string());
      return *this;
    }

   private:
    friend class Report;
    std::vector<std::string> row_;
  };

  void add_row(RowBuilder builder) {
    if (builder.row_.size() != columns_.size())
      throw std::logic_error("report row arity mismatch");
    cells_.push_back(std::move(builder.row_));
  }

 private:
  std::vector<Column> columns_;
  std::vector<std::vector<std::string>> cells_;
  bool pass_ = true;
};

}  // namespace fflab
