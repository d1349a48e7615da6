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

#include "htable/stats.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "htable/error.h"

namespace htable {
namespace {

std::vector<double> Numbers(const std::vector<Value>& values) {
  std::vector<double> out;
  out.reserve(values.size());
  for (const auto& v : values) {
    if (v.is_text()) {
      throw Error(ErrorCode::kNonNumeric,
                  "text value '" + v.text() + "' where a number is required",
                  {{"text", v.text()}});
    }
    if (v.is_number()) out.push_back(v.number());
  }
  return out;
}

}  // namespace

double Quantile(const std::vector<double>& sorted, double p) {
  const double pos = p * static_cast<double>(sorted.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted[lo] + (sorted[hi] - sorted[lo]) * frac;
}

SummaryStats ComputeSummaryStats(std::vector<double> values) {
  if (values.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no values to summarize");
  }
  std::sort(values.begin(), values.end());
  SummaryStats s;
  s.n = values.size();
  s.min = values.front();
  s.max = values.back();
  s.mean = std::accumulate(values.begin(), values.end(), 0.0) /
           static_cast<double>(s.n);
  s.q1 = Quantile(values, 0.25);
  s.median = Quantile(values, 0.5);
  s.q3 = Quantile(values, 0.75);
  return s;
}

SummaryStats ComputeSummaryStats(const std::vector<Value>& values) {
  return ComputeSummaryStats(Numbers(values));
}

nlohmann::json ToJson(const SummaryStats& s) {
  return {{"min", s.min},       {"max", s.max}, {"mean", s.mean},
          {"median", s.median}, {"q1", s.q1},   {"q3", s.q3},
          {"n", s.n}};
}

MinMaxScale FitScale(const std::vector<Value>& values) {
  auto nums = Numbers(values);
  if (nums.empty()) {
    throw Error(ErrorCode::kEmptyInput, "no numeric values to normalize");
  }
  auto [lo, hi] = std::minmax_element(nums.begin(), nums.end());
  return {*lo, *hi};
}

std::vector<std::pair<Block, std::optional<double>>> NormalizeUnitValues(
    const std::vector<std::pair<Block, Value>>& cells) {
  std::vector<Value> values;
  values.reserve(cells.size());
  for (const auto& c : cells) values.push_back(c.second);
  const MinMaxScale scale = FitScale(values);
  std::vector<std::pair<Block, std::optional<double>>> out;
  out.reserve(cells.size());
  for (const auto& [block, v] : cells) {
    out.emplace_back(block, v.is_number() ? std::optional(scale(v.number()))
                                          : std::nullopt);
  }
  return out;
}

}  // namespace htable
