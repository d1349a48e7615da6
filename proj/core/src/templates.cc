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

#include "htable/templates.h"

#include <algorithm>

#include "htable/error.h"

namespace htable {
namespace {

using R = Role;
using O = Orientation;

Channel Horizontal(std::string name, bool required = true) {
  return {std::move(name), O::kHorizontal, {R::kXNominal, R::kValue}, required};
}
Channel Vertical(std::string name, bool required = true) {
  return {std::move(name), O::kVertical, {R::kYNominal, R::kValue}, required};
}
Channel Free(std::string name, std::vector<Role> accepted, bool required) {
  return {std::move(name), O::kNone, std::move(accepted), required};
}

std::vector<VisTemplate> BuildCatalog() {
  const std::vector<Role> nominal{R::kXNominal, R::kYNominal};
  using C = TemplateCategory;
  using A = Aggregation;
  std::vector<VisTemplate> t;
  // Unit visualizations encode a single cell in place.
  t.push_back({"unit_color", C::kUnit, {Free("color", {R::kValue}, true)},
               A::kNone, false});
  t.push_back({"unit_size", C::kUnit, {Free("size", {R::kValue}, true)},
               A::kNone, false});
  t.push_back({"unit_bar", C::kUnit,
               {{"x", O::kHorizontal, {R::kValue}, true}}, A::kNone, false});
  // Data overview.
  t.push_back({"bar", C::kOverview, {Horizontal("x"), Vertical("height")},
               A::kMean, true});
  t.push_back({"stacked_bar", C::kOverview,
               {Horizontal("x"), Vertical("height"), Free("color", nominal, true)},
               A::kNone, true});
  t.push_back({"ranged_dot", C::kOverview, {Horizontal("x"), Vertical("y")},
               A::kMinMax, true});
  t.push_back({"box_plot", C::kOverview, {Horizontal("x"), Vertical("y")},
               A::kQuartiles, true});
  t.push_back({"strip_plot", C::kOverview,
               {Horizontal("x"), Vertical("y"), Free("color", nominal, false)},
               A::kNone, true});
  t.push_back({"parallel_coordinates", C::kOverview,
               {{"x", O::kHorizontal, {R::kXNominal}, true},
                {"y", O::kVertical, {R::kValue}, true},
                Free("color", {R::kYNominal}, true)},
               A::kNone, false});
  t.push_back({"multi_line", C::kOverview,
               {Horizontal("x"), Vertical("y"), Free("color", nominal, true)},
               A::kNone, true});
  t.push_back({"pie", C::kOverview,
               {Free("theta", {R::kValue}, true), Free("color", nominal, true)},
               A::kNone, false});
  t.push_back({"radial", C::kOverview,
               {Free("theta", {R::kValue}, true), Free("color", nominal, true)},
               A::kNone, false});
  // Trend tracking over one row or one column.
  t.push_back({"horizon", C::kTrend, {Horizontal("x"), Vertical("y")},
               A::kNone, true});
  t.push_back({"line", C::kTrend, {Horizontal("x"), Vertical("y")}, A::kNone,
               true});
  // Correlation.
  t.push_back({"scatterplot", C::kCorrelation,
               {{"x", O::kHorizontal, {R::kValue}, true},
                {"y", O::kVertical, {R::kValue}, true},
                Free("color", nominal, false)},
               A::kNone, false});
  t.push_back({"heatmap", C::kCorrelation,
               {{"x", O::kHorizontal, {R::kXNominal}, true},
                {"y", O::kVertical, {R::kYNominal}, true},
                Free("color", {R::kValue}, true)},
               A::kNone, false});
  return t;
}

std::string_view OrientationName(Orientation o) {
  switch (o) {
    case Orientation::kHorizontal: return "horizontal";
    case Orientation::kVertical: return "vertical";
    case Orientation::kNone: break;
  }
  return "none";
}

}  // namespace

std::string_view RoleName(Role role) {
  switch (role) {
    case Role::kXNominal: return "x_nominal";
    case Role::kYNominal: return "y_nominal";
    case Role::kValue: return "value";
  }
  return "value";
}

std::optional<Role> ParseRole(std::string_view name) {
  if (name == "x_nominal") return Role::kXNominal;
  if (name == "y_nominal") return Role::kYNominal;
  if (name == "value") return Role::kValue;
  return std::nullopt;
}

std::string_view CategoryName(TemplateCategory c) {
  switch (c) {
    case TemplateCategory::kUnit: return "unit";
    case TemplateCategory::kOverview: return "overview";
    case TemplateCategory::kTrend: return "trend";
    case TemplateCategory::kCorrelation: return "correlation";
  }
  return "overview";
}

std::string_view AggregationName(Aggregation a) {
  switch (a) {
    case Aggregation::kNone: return "none";
    case Aggregation::kMinMax: return "min_max";
    case Aggregation::kQuartiles: return "quartiles";
    case Aggregation::kMean: return "mean";
  }
  return "none";
}

bool Channel::Accepts(Role role) const {
  return std::find(accepted.begin(), accepted.end(), role) != accepted.end();
}

const Channel* VisTemplate::FindChannel(std::string_view name) const {
  for (const auto& c : channels) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

const std::vector<VisTemplate>& TemplateCatalog() {
  static const std::vector<VisTemplate> catalog = BuildCatalog();
  return catalog;
}

const VisTemplate& FindTemplate(std::string_view id) {
  for (const auto& t : TemplateCatalog()) {
    if (t.id == id) return t;
  }
  throw Error(ErrorCode::kUnknownTemplate,
              "no template named '" + std::string(id) + "'",
              {{"template", id}});
}

nlohmann::json ToJson(const VisTemplate& t) {
  nlohmann::json channels = nlohmann::json::array();
  for (const auto& c : t.channels) {
    nlohmann::json roles = nlohmann::json::array();
    for (Role r : c.accepted) roles.push_back(RoleName(r));
    channels.push_back({{"name", c.name},
                        {"orientation", OrientationName(c.orientation)},
                        {"accepted_roles", std::move(roles)},
                        {"required", c.required}});
  }
  return {{"id", t.id},
          {"category", CategoryName(t.category)},
          {"aggregation", AggregationName(t.aggregation)},
          {"channels", std::move(channels)}};
}

nlohmann::json CatalogJson() {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& t : TemplateCatalog()) out.push_back(ToJson(t));
  return out;
}

}  // namespace htable
