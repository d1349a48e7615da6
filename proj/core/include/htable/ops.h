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

#ifndef HTABLE_OPS_H_
#define HTABLE_OPS_H_

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "htable/error.h"
#include "htable/model.h"

namespace htable {

struct SwapOp {
  AxisKind axis = AxisKind::kCol;
  int upper_level = 1;
  friend bool operator==(const SwapOp&, const SwapOp&) = default;
};
struct TransposeLevelOp {
  AxisKind source_axis = AxisKind::kCol;
  int level = 1;
  friend bool operator==(const TransposeLevelOp&,
                         const TransposeLevelOp&) = default;
};
struct TransposeTableOp {
  friend bool operator==(const TransposeTableOp&,
                         const TransposeTableOp&) = default;
};
struct ToLinearOp {
  AxisKind axis = AxisKind::kCol;
  int level = 1;
  Stat stat = Stat::kSum;
  friend bool operator==(const ToLinearOp&, const ToLinearOp&) = default;
};
struct ToStackedOp {
  AxisKind axis = AxisKind::kCol;
  int level = 1;
  friend bool operator==(const ToStackedOp&, const ToStackedOp&) = default;
};
struct FoldOp {
  int level = 1;
  friend bool operator==(const FoldOp&, const FoldOp&) = default;
};
struct UnfoldOp {
  std::size_t key_col_leaf = 0;
  std::size_t value_col_leaf = 0;
  std::optional<int> level;
  friend bool operator==(const UnfoldOp&, const UnfoldOp&) = default;
};

using TransformOp = std::variant<SwapOp, TransposeLevelOp, TransposeTableOp,
                                 ToLinearOp, ToStackedOp, FoldOp, UnfoldOp>;

TableModel Apply(const TableModel& model, const TransformOp& op);

// JSON encoding: {"op": "swap", "axis": "col", "upper_level": 1}. The tags
// are swap, transpose_level, transpose_table, to_linear, to_stacked, fold and
// unfold; see docs/ops.md. Throws kInvalidOp on malformed input.
nlohmann::json ToJson(const TransformOp& op);
TransformOp OpFromJson(const nlohmann::json& j);
std::vector<TransformOp> ScriptFromJson(const nlohmann::json& j);
nlohmann::json ToJson(const std::vector<TransformOp>& ops);
std::string OpName(const TransformOp& op);

struct ScriptResult {
  TableModel model;  // the result, or the last good model on failure
  // Set when an op failed: its index and the error it raised.
  std::optional<std::size_t> failed_index;
  std::optional<Error> error;

  bool ok() const { return !failed_index.has_value(); }
};

// Left fold of `ops` over `model`, stopping at the first failure.
ScriptResult ApplyScript(const TableModel& model,
                         const std::vector<TransformOp>& ops);

}  // namespace htable

#endif  // HTABLE_OPS_H_
