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

#ifndef HTABLE_VISGEN_H_
#define HTABLE_VISGEN_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "htable/locator.h"
#include "htable/model.h"
#include "htable/stats.h"
#include "htable/templates.h"

namespace htable {

// A unit split into the labels along each direction and its values.
struct Decomposition {
  std::vector<std::string> x_nominal;  // bottom label per column leaf
  std::vector<std::string> y_nominal;  // bottom label per row leaf
  ValueGrid values;                    // y_nominal.size() x x_nominal.size()
  std::vector<std::vector<std::string>> row_label_paths;
  std::vector<std::vector<std::string>> col_label_paths;
};

Decomposition Decompose(const TableModel& model, const Block& block);

// Template choice plus channel -> role bindings. Recognized options:
//   "aggregate": "columns" | "rows"   default x/y bindings for aggregating
//                                      overview templates
//   "series": "columns" | "rows"      which lines form scatterplot series
//   "scheme": <string>                color scheme name passed through
struct VisConfig {
  std::string template_id;
  std::map<std::string, Role> bindings;
  nlohmann::json options = nlohmann::json::object();

  friend bool operator==(const VisConfig&, const VisConfig&) = default;
};

// Throws kForbiddenBinding on unknown roles.
VisConfig VisConfigFromJson(const nlohmann::json& j);
nlohmann::json ToJson(const VisConfig& config);

// Bindings after applying option defaults.
std::map<std::string, Role> EffectiveBindings(const VisTemplate& tmpl,
                                              const VisConfig& config);

// Checks the bindings against the template's channel table. Throws
// kForbiddenBinding or kMissingChannel.
void ValidateMapping(const VisTemplate& tmpl, const VisConfig& config,
                     const Decomposition& decomp);

struct CellGeometry {
  double cell_width = 80;
  double cell_height = 24;
  double origin_x = 0;
  double origin_y = 0;
};

struct Geometry {
  double x = 0;
  double y = 0;
  double width = 0;
  double height = 0;
  friend bool operator==(const Geometry&, const Geometry&) = default;
};

Geometry UnitGeometry(const Block& block, const CellGeometry& cells);

struct VisGrammarDoc {
  nlohmann::json doc;  // Vega-Lite v5 specification with inline data
  Geometry geometry;
  TableUnit unit;
};

// Emits the chart for one unit. Unit templates normalize against `scale`
// when given and against the unit itself otherwise. Throws the validation
// errors plus kShapeError, kNegativeValue and kNonNumeric.
VisGrammarDoc EmitSpec(const TableModel& model, const TableUnit& unit,
                       const VisConfig& config, const CellGeometry& cells = {},
                       std::optional<MinMaxScale> scale = std::nullopt);

// Emits `config` for every unit. Unit templates share one normalization
// computed over all units first.
std::vector<VisGrammarDoc> RebindAll(const TableModel& model,
                                     const VisConfig& config,
                                     const std::vector<TableUnit>& units,
                                     const CellGeometry& cells = {});

nlohmann::json ToJson(const Geometry& g);
nlohmann::json ToJson(const VisGrammarDoc& doc);
// Deterministic text of the chart specification.
std::string DumpDoc(const VisGrammarDoc& doc);

}  // namespace htable

#endif  // HTABLE_VISGEN_H_
