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

#include "htable/htj.h"

#include <algorithm>
#include <cmath>

#include "htable/error.h"
#include "htable/grid_doc.h"
#include "htable/structure.h"
#include "json_util.h"

namespace htable {
namespace {

using internal::Array;
using internal::Child;
using internal::Field;
using internal::SchemaFail;
using nlohmann::json;

HeadingNode NodeFromJson(const json& j, const std::string& ptr, int level,
                         int& max_level) {
  if (!j.is_object()) SchemaFail(ptr, "expected a heading object");
  for (const auto& [key, _] : j.items()) {
    if (key != "label" && key != "derived" && key != "children") {
      SchemaFail(Child(ptr, key), "unknown heading field");
    }
  }
  HeadingNode node;
  node.label.name = internal::String(Field(j, "label", ptr), Child(ptr, "label"));
  if (node.label.name.empty()) SchemaFail(Child(ptr, "label"), "empty label");
  if (j.contains("derived")) {
    const auto& d = j["derived"];
    auto stat = d.is_string() ? ParseStat(d.get<std::string>()) : std::nullopt;
    if (!stat) {
      SchemaFail(Child(ptr, "derived"), "expected one of sum, avg, min, max");
    }
    node.label.derived = stat;
  }
  max_level = std::max(max_level, level);
  if (j.contains("children")) {
    const std::string cptr = Child(ptr, "children");
    const auto& children = Array(j["children"], cptr);
    if (children.empty()) SchemaFail(cptr, "children must be non-empty");
    for (std::size_t i = 0; i < children.size(); ++i) {
      node.children.push_back(
          NodeFromJson(children[i], Child(cptr, i), level + 1, max_level));
    }
  }
  return node;
}

HeadingAxis AxisFromJson(const json& doc, const char* key,
                         const char* names_key) {
  const std::string ptr = Child("", key);
  const auto& roots = Array(Field(doc, key, ""), ptr);
  if (roots.empty()) SchemaFail(ptr, "at least one heading required");
  HeadingAxis axis;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    axis.roots.push_back(NodeFromJson(roots[i], Child(ptr, i), 1, axis.depth));
  }
  if (doc.contains("level_names")) {
    const auto& ln = doc["level_names"];
    if (!ln.is_object()) SchemaFail("/level_names", "expected an object");
    if (ln.contains(names_key)) {
      const std::string nptr = Child("/level_names", names_key);
      const auto& names = Array(ln[names_key], nptr);
      if (names.size() != static_cast<std::size_t>(axis.depth)) {
        SchemaFail(nptr, "expected " + std::to_string(axis.depth) +
                             " level names, got " +
                             std::to_string(names.size()));
      }
      for (std::size_t i = 0; i < names.size(); ++i) {
        axis.level_names.push_back(internal::String(names[i], Child(nptr, i)));
      }
    }
  }
  return axis;
}

json NodeToJson(const HeadingNode& node) {
  json j{{"label", node.label.name}};
  if (node.label.derived) j["derived"] = StatName(*node.label.derived);
  if (!node.is_leaf()) {
    json children = json::array();
    for (const auto& c : node.children) children.push_back(NodeToJson(c));
    j["children"] = std::move(children);
  }
  return j;
}

json ForestToJson(const HeadingAxis& axis) {
  json out = json::array();
  for (const auto& r : axis.roots) out.push_back(NodeToJson(r));
  return out;
}

}  // namespace

json ToJson(const Value& value) {
  if (value.is_missing()) return nullptr;
  if (value.is_text()) return value.text();
  double v = value.number();
  if (std::trunc(v) == v && std::fabs(v) < 9007199254740992.0) {
    return static_cast<std::int64_t>(v);
  }
  return v;
}

TableModel ParseHtj(const json& doc) {
  if (!doc.is_object()) SchemaFail("", "expected an object");
  const auto& version = Field(doc, "htj_version", "");
  if (!version.is_number_integer() || version.get<int>() != kHtjVersion) {
    SchemaFail("/htj_version", "unsupported version (expected " +
                                   std::to_string(kHtjVersion) + ")");
  }
  for (const auto& [key, _] : doc.items()) {
    if (key != "htj_version" && key != "level_names" &&
        key != "row_headings" && key != "column_headings" &&
        key != "entries" && key != "meta") {
      SchemaFail(Child("", key), "unknown field");
    }
  }
  HeadingAxis rows = AxisFromJson(doc, "row_headings", "row");
  HeadingAxis cols = AxisFromJson(doc, "column_headings", "column");
  const std::size_t n_rows = rows.leaf_count(), n_cols = cols.leaf_count();
  const auto& entries = Array(Field(doc, "entries", ""), "/entries");
  if (entries.size() != n_rows) {
    SchemaFail("/entries", "expected " + std::to_string(n_rows) +
                               " rows (one per row leaf), got " +
                               std::to_string(entries.size()));
  }
  ValueGrid grid(n_rows, n_cols);
  for (std::size_t r = 0; r < n_rows; ++r) {
    const std::string rptr = Child("/entries", r);
    const auto& row = Array(entries[r], rptr);
    if (row.size() != n_cols) {
      SchemaFail(rptr, "expected " + std::to_string(n_cols) +
                           " values (one per column leaf), got " +
                           std::to_string(row.size()));
    }
    for (std::size_t c = 0; c < n_cols; ++c) {
      const auto& v = row[c];
      if (v.is_number()) {
        double d = v.get<double>();
        if (!std::isfinite(d)) SchemaFail(Child(rptr, c), "non-finite number");
        grid(r, c) = Value::Number(d);
      } else if (v.is_string()) {
        grid(r, c) = Value::Text(v.get<std::string>());
      } else if (!v.is_null()) {
        SchemaFail(Child(rptr, c), "expected a number, string or null");
      }
    }
  }
  if (doc.contains("meta") && !doc["meta"].is_object()) {
    SchemaFail("/meta", "expected an object");
  }
  try {
    return MakeModel(std::move(rows), std::move(cols), std::move(grid));
  } catch (const Error& e) {
    // Structural violations (ragged depth, duplicate siblings) are schema
    // errors from the document's point of view.
    throw Error(ErrorCode::kSchemaError, e.message(),
                {{"pointer", ""}, {"violations", e.detail()}});
  }
}

TableModel ParseHtjText(std::string_view text) {
  json doc = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (doc.is_discarded()) SchemaFail("", "document is not valid JSON");
  return ParseHtj(doc);
}

json SerializeHtj(const TableModel& model) {
  json entries = json::array();
  for (std::size_t r = 0; r < model.entries.rows(); ++r) {
    json row = json::array();
    for (std::size_t c = 0; c < model.entries.cols(); ++c) {
      row.push_back(ToJson(model.entries(r, c)));
    }
    entries.push_back(std::move(row));
  }
  return json{{"htj_version", kHtjVersion},
              {"level_names",
               {{"row", model.row_axis.level_names},
                {"column", model.col_axis.level_names}}},
              {"row_headings", ForestToJson(model.row_axis)},
              {"column_headings", ForestToJson(model.col_axis)},
              {"entries", std::move(entries)}};
}

std::string DumpHtj(const TableModel& model) {
  return SerializeHtj(model).dump(2) + "\n";
}

TableModel ModelFromJson(const json& doc) {
  if (doc.is_object() && doc.contains("cells")) {
    return ParseGrid(GridDocFromJson(doc));
  }
  return ParseHtj(doc);
}

json ModelSummary(const TableModel& model) {
  auto axis_summary = [](const HeadingAxis& axis) {
    return json{{"depth", axis.depth},
                {"leaf_count", axis.leaf_count()},
                {"level_names", axis.level_names},
                {"structure", ToJson(DetectStructure(axis))}};
  };
  return json{{"version", model.version},
              {"rows", axis_summary(model.row_axis)},
              {"columns", axis_summary(model.col_axis)}};
}

}  // namespace htable
