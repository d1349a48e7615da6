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

#ifndef HTABLE_HTJ_H_
#define HTABLE_HTJ_H_

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "htable/model.h"

namespace htable {

inline constexpr int kHtjVersion = 1;

// Native interchange format. See docs/htj.schema.json.
//
//   {"htj_version": 1,
//    "level_names": {"row": [...], "column": [...]},
//    "row_headings": [{"label": "Asia", "children": [...]}, ...],
//    "column_headings": [{"label": "&", "derived": "sum"}, ...],
//    "entries": [[131, "text", null], ...],
//    "meta": {...}}
//
// "meta" is accepted and ignored. Schema violations throw kSchemaError whose
// detail carries the JSON pointer of the offending value.
TableModel ParseHtj(const nlohmann::json& doc);
TableModel ParseHtjText(std::string_view text);

// Canonical form: sorted keys, integral numbers written without a fraction.
nlohmann::json SerializeHtj(const TableModel& model);
// Two-space indented canonical text with a trailing newline.
std::string DumpHtj(const TableModel& model);

// Accepts either an HTJ document or a GridDoc (detected by its "cells" key).
TableModel ModelFromJson(const nlohmann::json& doc);

// Depths, leaf counts, level names and structure annotations of both axes.
nlohmann::json ModelSummary(const TableModel& model);

// JSON value of an entry; integral numbers become JSON integers.
nlohmann::json ToJson(const Value& value);

}  // namespace htable

#endif  // HTABLE_HTJ_H_
