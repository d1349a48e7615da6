// Copyright 2026 The htable Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef HTABLE_VALUE_H_
#define HTABLE_VALUE_H_

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace htable {

// A table entry: a finite number, a text value, or missing.
class Value {
 public:
  Value() = default;

  static Value Number(double v);
  static Value Text(std::string s);
  static Value Missing() { return Value(); }

  bool is_number() const { return std::holds_alternative<double>(data_); }
  bool is_text() const { return std::holds_alternative<std::string>(data_); }
  bool is_missing() const {
    return std::holds_alternative<std::monostate>(data_);
  }

  double number() const { return std::get<double>(data_); }
  const std::string& text() const { return std::get<std::string>(data_); }
  std::optional<double> as_number() const {
    if (is_number()) return number();
    return std::nullopt;
  }

  friend bool operator==(const Value&, const Value&) = default;

 private:
  std::variant<std::monostate, double, std::string> data_;
};

// Locale-independent number parsing used by every importer: "." decimal
// separator, no thousands separators, surrounding whitespace ignored.
// Returns nullopt for anything that is not a complete finite number.
std::optional<double> ParseNumber(std::string_view text);

// Parses cell text: "" -> missing, numeric text -> number, otherwise text.
Value ParseCellText(std::string_view text);

// Dense row-major matrix.
template <typename T>
class Grid {
 public:
  Grid() = default;
  Grid(std::size_t rows, std::size_t cols, T fill = T())
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::size_t size() const { return data_.size(); }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  const std::vector<T>& data() const { return data_; }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ValueGrid = Grid<Value>;

}  // namespace htable

#endif  // HTABLE_VALUE_H_
