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

#ifndef HTABLE_TRANSFORM_H_
#define HTABLE_TRANSFORM_H_

#include <cstddef>
#include <optional>

#include "htable/model.h"

namespace htable {

// Structure-preserving rewrites. Each returns a new model whose version is one
// higher than the input's; the input is never modified. Levels are 1-based.

// Exchanges levels `upper_level` and `upper_level + 1` of `axis`. Siblings at
// `upper_level` that share a parent must have identical child label lists
// (kNotUniform otherwise).
TableModel Swap(const TableModel& model, AxisKind axis, int upper_level);

// Rows become columns and vice versa.
TableModel TransposeTable(const TableModel& model);

// Removes `level` from `source` and appends it as the new bottom level of the
// opposite axis. The level's label list must be identical under every parent
// and the subtrees below its labels must match (kNotUniform); an axis with a
// single level cannot give it up (kLastLevel).
TableModel TransposeLevel(const TableModel& model, AxisKind source, int level);

// Inserts a derived first child under every level-`level` node, padded to
// full depth with a chain of same-named nodes. Its entries aggregate the
// node's non-derived leaves, skipping missing values. Nodes that are
// themselves derived (or below a derived node) are left alone.
// Throws kNonNumeric, kDuplicateDerived, kInvalidOp.
TableModel ToLinear(const TableModel& model, AxisKind axis, int level,
                    Stat stat);

// Removes every derived child of level-`level` nodes. Throws
// kNothingToRemove when there is none.
TableModel ToStacked(const TableModel& model, AxisKind axis, int level);

// Key columns are column roots that form a single chain whose non-missing
// entries are all text. Every other column root belongs to the measure forest.
bool IsKeyColumn(const TableModel& model, std::size_t col_leaf);

// Melts column level `level` of the measure forest into entries: each row leaf
// gains a bottom child per label of that level (named after the column level),
// and a new leftmost key column holds the labels as text. Existing key
// columns follow it. If the measure forest had a single level, it is replaced
// by one column named "value". Throws kNotUniform, kDerivedPresent,
// kInvalidOp.
TableModel Fold(const TableModel& model, int level);

// Lifts the categorical column `key_col_leaf` back into the column headings:
// the key's distinct texts (first-appearance order) become a new column level
// inserted at `level` (default: bottom) of the measure forest. Rows are
// grouped by their path without the bottom row level named after the key
// when such a level exists, otherwise by the remaining key columns.
// `value_col_leaf` must be a numeric measure column.
// Throws kNotCategorical, kNotNumeric, kIrregularGroups, kInvalidOp.
TableModel Unfold(const TableModel& model, std::size_t key_col_leaf,
                  std::size_t value_col_leaf,
                  std::optional<int> level = std::nullopt);

}  // namespace htable

#endif  // HTABLE_TRANSFORM_H_
