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

#ifndef HTABLE_MODEL_H_
#define HTABLE_MODEL_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "htable/value.h"

namespace htable {

// Aggregate statistics a derived heading label can stand for.
enum class Stat { kSum, kAvg, kMin, kMax };

std::string_view StatName(Stat stat);
std::optional<Stat> ParseStat(std::string_view name);
// Display symbol of a derived label: "&" for sums, the stat name otherwise.
std::string_view DerivedSymbol(Stat stat);

struct Label {
  std::string name;
  std::optional<Stat> derived;

  static Label Plain(std::string name) { return Label{std::move(name), {}}; }
  static Label Derived(Stat stat) {
    return Label{std::string(DerivedSymbol(stat)), stat};
  }
  bool is_derived() const { return derived.has_value(); }

  friend bool operator==(const Label&, const Label&) = default;
};

using NodeId = std::uint32_t;

struct HeadingNode {
  Label label;
  std::vector<HeadingNode> children;
  NodeId id = 0;

  bool is_leaf() const { return children.empty(); }
};

// Convenience constructor used by fixtures and tests.
HeadingNode Node(std::string name, std::vector<HeadingNode> children = {});

enum class AxisKind { kRow, kCol };

std::string_view AxisName(AxisKind axis);
std::optional<AxisKind> ParseAxis(std::string_view name);
inline AxisKind Opposite(AxisKind axis) {
  return axis == AxisKind::kRow ? AxisKind::kCol : AxisKind::kRow;
}

// A heading forest. Levels are numbered from 1 at the roots; every leaf sits
// at level `depth`.
struct HeadingAxis {
  std::vector<HeadingNode> roots;
  int depth = 0;
  std::vector<std::string> level_names;

  std::size_t leaf_count() const;
  // Name of level `level` (1-based).
  const std::string& level_name(int level) const {
    return level_names.at(static_cast<std::size_t>(level - 1));
  }
};

std::string DefaultLevelName(AxisKind axis, int level);

// Rectangular group of cells as half-open leaf ranges.
struct Block {
  std::size_t row_start = 0;
  std::size_t row_end = 0;
  std::size_t col_start = 0;
  std::size_t col_end = 0;

  std::size_t rows() const { return row_end - row_start; }
  std::size_t cols() const { return col_end - col_start; }

  friend bool operator==(const Block&, const Block&) = default;
};

// Heading forests for both axes plus the entry matrix. Models are treated as
// immutable values: transformations return new models.
struct TableModel {
  HeadingAxis row_axis;
  HeadingAxis col_axis;
  ValueGrid entries;
  std::int64_t version = 1;

  const HeadingAxis& axis(AxisKind kind) const {
    return kind == AxisKind::kRow ? row_axis : col_axis;
  }
  HeadingAxis& axis(AxisKind kind) {
    return kind == AxisKind::kRow ? row_axis : col_axis;
  }

  bool Contains(const Block& block) const;
};

// Builds a model: fills a missing depth from the forest, fills absent level
// names with defaults, assigns fresh node ids and validates the result.
// Throws Error(kInvalidModel) listing every violation.
TableModel MakeModel(HeadingAxis rows, HeadingAxis cols, ValueGrid entries,
                     std::int64_t version = 1);

// Reassigns node ids in pre-order (rows first, then columns).
void RenumberNodes(TableModel& model);

// Returns every invariant violation; an empty list means the model is valid.
std::vector<std::string> ValidateModel(const TableModel& model);

// Content equality: headings (labels, derived kinds, order), level names and
// entries. Node ids and the version counter are ignored.
bool Equivalent(const TableModel& a, const TableModel& b);
bool Equivalent(const HeadingAxis& a, const HeadingAxis& b);

}  // namespace htable

#endif  // HTABLE_MODEL_H_
