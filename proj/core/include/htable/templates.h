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

#ifndef HTABLE_TEMPLATES_H_
#define HTABLE_TEMPLATES_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

namespace htable {

// Data roles a decomposed unit offers to a chart.
enum class Role { kXNominal, kYNominal, kValue };

std::string_view RoleName(Role role);
std::optional<Role> ParseRole(std::string_view name);

enum class TemplateCategory { kUnit, kOverview, kTrend, kCorrelation };
std::string_view CategoryName(TemplateCategory c);

enum class Aggregation { kNone, kMinMax, kQuartiles, kMean };
std::string_view AggregationName(Aggregation a);

// Positional channels are either horizontal or vertical. Horizontal ones
// accept only {x_nominal, value} and vertical ones only {y_nominal, value}.
enum class Orientation { kNone, kHorizontal, kVertical };

struct Channel {
  std::string name;
  Orientation orientation = Orientation::kNone;
  std::vector<Role> accepted;
  bool required = false;

  bool Accepts(Role role) const;
};

struct VisTemplate {
  std::string id;
  TemplateCategory category = TemplateCategory::kOverview;
  std::vector<Channel> channels;
  Aggregation aggregation = Aggregation::kNone;
  // Templates with a horizontal/vertical pair need a nominal role on one of
  // them and the value on the other.
  bool nominal_value_pair = false;

  const Channel* FindChannel(std::string_view name) const;
};

// Three unit variants followed by the overview, trend and correlation
// templates, in a stable order.
const std::vector<VisTemplate>& TemplateCatalog();

// Throws kUnknownTemplate.
const VisTemplate& FindTemplate(std::string_view id);

nlohmann::json ToJson(const VisTemplate& t);
nlohmann::json CatalogJson();

}  // namespace htable

#endif  // HTABLE_TEMPLATES_H_
