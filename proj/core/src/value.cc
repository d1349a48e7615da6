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

#include "htable/value.h"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace htable {

Value Value::Number(double v) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument("entry values must be finite");
  }
  Value out;
  out.data_ = v;
  return out;
}

Value Value::Text(std::string s) {
  Value out;
  out.data_ = std::move(s);
  return out;
}

std::optional<double> ParseNumber(std::string_view text) {
  auto is_space = [](char c) {
    return c == ' ' || c == '\t' || c == '\n' || c == '\r';
  };
  while (!text.empty() && is_space(text.front())) text.remove_prefix(1);
  while (!text.empty() && is_space(text.back())) text.remove_suffix(1);
  if (text.empty()) return std::nullopt;
  // from_chars accepts "inf"/"nan" and hex floats under some formats; only
  // plain decimal notation is a number here.
  for (char c : text) {
    bool ok = (c >= '0' && c <= '9') || c == '.' || c == '-' || c == 'e' ||
              c == 'E' || c == '+';
    if (!ok) return std::nullopt;
  }
  if (text.front() == '+') return std::nullopt;
  double v = 0;
  auto [ptr, ec] =
      std::from_chars(text.data(), text.data() + text.size(), v,
                      std::chars_format::general);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    return std::nullopt;
  }
  if (!std::isfinite(v)) return std::nullopt;
  return v;
}

Value ParseCellText(std::string_view text) {
  if (text.empty()) return Value::Missing();
  if (auto v = ParseNumber(text)) return Value::Number(*v);
  return Value::Text(std::string(text));
}

}  // namespace htable
