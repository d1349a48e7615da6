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

#ifndef HTABLE_STATS_H_
#define HTABLE_STATS_H_

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "htable/model.h"
#include "htable/value.h"

namespace htable {

struct SummaryStats {
  double min = 0;
  double max = 0;
  double mean = 0;
  double median = 0;
  double q1 = 0;
  double q3 = 0;
  std::size_t n = 0;
};

// Quantiles interpolate linearly between order statistics at p * (n - 1).
// Throws kEmptyInput for an empty list.
SummaryStats ComputeSummaryStats(std::vector<double> values);
// Missing entries are dropped; text throws kNonNumeric.
SummaryStats ComputeSummaryStats(const std::vector<Value>& values);

double Quantile(const std::vector<double>& sorted, double p);

nlohmann::json ToJson(const SummaryStats& s);

// Min-max scale shared by a set of values; a constant set maps to 0.5.
struct MinMaxScale {
  double lo = 0;
  double hi = 0;

  double operator()(double v) const {
    return hi == lo ? 0.5 : (v - lo) / (hi - lo);
  }
};

// Scale over every numeric value; missing values are skipped. Throws
// kNonNumeric on text and kEmptyInput when nothing numeric remains.
MinMaxScale FitScale(const std::vector<Value>& values);

// Normalizes one value per unit against the whole set. Missing values stay
// missing.
std::vector<std::pair<Block, std::optional<double>>> NormalizeUnitValues(
    const std::vector<std::pair<Block, Value>>& cells);

}  // namespace htable

#endif  // HTABLE_STATS_H_
