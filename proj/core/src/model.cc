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

#include "htable/model.h"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_set>

#include "htable/error.h"

namespace htable {
namespace {

std::size_t CountLeaves(const HeadingNode& node) {
  if (node.is_leaf()) return 1;
  std::size_t n = 0;
  for (const auto& child : node.children) n += CountLeaves(child);
  return n;
}

int MaxDepth(const HeadingNode& node) {
  int d = 0;
  for (const auto& child : node.children) d = std::max(d, MaxDepth(child));
  return d + 1;
}

void CheckAxis(const HeadingAxis& axis, AxisKind kind,
               std::vector<std::string>& out) {
  const std::string tag(AxisName(kind));
  if (axis.depth < 1) {
    out.push_back(tag + " axis: depth must be positive");
  }
  if (axis.roots.empty()) {
    out.push_back(tag + " axis: leaf count must be at least 1");
    return;
  }
  if (axis.level_names.size() != static_cast<std::size_t>(axis.depth)) {
    out.push_back(tag + " axis: expected " + std::to_string(axis.depth) +
                  " level names, got " +
                  std::to_string(axis.level_names.size()));
  }
  bool ragged = false;
  // (level, node) walk.
  struct Frame {
    const std::vector<HeadingNode>* siblings;
    int level;
  };
  std::vector<Frame> stack{{&axis.roots, 1}};
  while (!stack.empty()) {
    Frame f = stack.back();
    stack.pop_back();
    std::set<std::string> names;
    for (const auto& node : *f.siblings) {
      if (node.label.name.empty()) {
        out.push_back(tag + " axis: empty label name at level " +
                      std::to_string(f.level));
      }
      if (!names.insert(node.label.name).second) {
        out.push_back(tag + " axis: duplicate sibling label '" +
                      node.label.name + "' at level " +
                      std::to_string(f.level));
      }
      if (node.is_leaf()) {
        if (f.level != axis.depth && !ragged) {
          ragged = true;
          out.push_back(tag + " axis: ragged depth (leaf '" + node.label.name +
                        "' at level " + std::to_string(f.level) +
                        ", expected " + std::to_string(axis.depth) + ")");
        }
      } else {
        if (f.level >= axis.depth && !ragged) {
          ragged = true;
          out.push_back(tag + " axis: ragged depth (node '" + node.label.name +
                        "' below level " + std::to_string(axis.depth) + ")");
        }
        stack.push_back({&node.children, f.level + 1});
      }
    }
  }
}

void CollectIds(const HeadingNode& node, std::unordered_set<NodeId>& seen,
                std::vector<std::string>& out) {
  if (!seen.insert(node.id).second) {
    out.push_back("id collision: node id " + std::to_string(node.id) +
                  " ('" + node.label.name + "') is not unique");
  }
  for (const auto& child : node.children) CollectIds(child, seen, out);
}

void Renumber(std::vector<HeadingNode>& nodes, NodeId& next) {
  for (auto& node : nodes) {
    node.id = next++;
    Renumber(node.children, next);
  }
}

bool SameForest(const std::vector<HeadingNode>& a,
                const std::vector<HeadingNode>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!(a[i].label == b[i].label)) return false;
    if (!SameForest(a[i].children, b[i].children)) return false;
  }
  return true;
}

}  // namespace

std::string_view StatName(Stat stat) {
  switch (stat) {
    case Stat::kSum: return "sum";
    case Stat::kAvg: return "avg";
    case Stat::kMin: return "min";
    case Stat::kMax: return "max";
  }
  return "sum";
}

std::optional<Stat> ParseStat(std::string_view name) {
  if (name == "sum") return Stat::kSum;
  if (name == "avg") return Stat::kAvg;
  if (name == "min") return Stat::kMin;
  if (name == "max") return Stat::kMax;
  return std::nullopt;
}

std::string_view DerivedSymbol(Stat stat) {
  return stat == Stat::kSum ? "&" : StatName(stat);
}

HeadingNode Node(std::string name, std::vector<HeadingNode> children) {
  HeadingNode n;
  n.label = Label::Plain(std::move(name));
  n.children = std::move(children);
  return n;
}

std::string_view AxisName(AxisKind axis) {
  return axis == AxisKind::kRow ? "row" : "col";
}

std::optional<AxisKind> ParseAxis(std::string_view name) {
  if (name == "row" || name == "rows") return AxisKind::kRow;
  if (name == "col" || name == "cols" || name == "column" ||
      name == "columns") {
    return AxisKind::kCol;
  }
  return std::nullopt;
}

std::size_t HeadingAxis::leaf_count() const {
  std::size_t n = 0;
  for (const auto& root : roots) n += CountLeaves(root);
  return n;
}

std::string DefaultLevelName(AxisKind axis, int level) {
  return std::string(axis == AxisKind::kRow ? "row" : "col") + "-level-" +
         std::to_string(level);
}

bool TableModel::Contains(const Block& block) const {
  return block.row_start < block.row_end &&
         block.row_end <= row_axis.leaf_count() &&
         block.col_start < block.col_end &&
         block.col_end <= col_axis.leaf_count();
}

void RenumberNodes(TableModel& model) {
  NodeId next = 1;
  Renumber(model.row_axis.roots, next);
  Renumber(model.col_axis.roots, next);
}

TableModel MakeModel(HeadingAxis rows, HeadingAxis cols, ValueGrid entries,
                     std::int64_t version) {
  for (auto [axis, kind] : {std::pair{&rows, AxisKind::kRow},
                            std::pair{&cols, AxisKind::kCol}}) {
    if (axis->depth == 0) {
      for (const auto& root : axis->roots) {
        axis->depth = std::max(axis->depth, MaxDepth(root));
      }
    }
    if (axis->level_names.empty()) {
      for (int l = 1; l <= axis->depth; ++l) {
        axis->level_names.push_back(DefaultLevelName(kind, l));
      }
    }
  }
  TableModel model{std::move(rows), std::move(cols), std::move(entries),
                   version};
  RenumberNodes(model);
  auto violations = ValidateModel(model);
  if (!violations.empty()) {
    std::ostringstream msg;
    for (std::size_t i = 0; i < violations.size(); ++i) {
      if (i) msg << "; ";
      msg << violations[i];
    }
    throw Error(ErrorCode::kInvalidModel, msg.str(), violations);
  }
  return model;
}

std::vector<std::string> ValidateModel(const TableModel& model) {
  std::vector<std::string> out;
  CheckAxis(model.row_axis, AxisKind::kRow, out);
  CheckAxis(model.col_axis, AxisKind::kCol, out);
  std::unordered_set<NodeId> seen;
  for (const auto& root : model.row_axis.roots) CollectIds(root, seen, out);
  for (const auto& root : model.col_axis.roots) CollectIds(root, seen, out);
  std::size_t r = model.row_axis.leaf_count();
  std::size_t c = model.col_axis.leaf_count();
  if (model.entries.rows() != r || model.entries.cols() != c) {
    out.push_back("shape mismatch: entries are " +
                  std::to_string(model.entries.rows()) + "x" +
                  std::to_string(model.entries.cols()) + " but headings have " +
                  std::to_string(r) + " row leaves and " + std::to_string(c) +
                  " column leaves");
  }
  if (model.version < 1) out.push_back("version must be positive");
  return out;
}

bool Equivalent(const HeadingAxis& a, const HeadingAxis& b) {
  return a.depth == b.depth && a.level_names == b.level_names &&
         SameForest(a.roots, b.roots);
}

bool Equivalent(const TableModel& a, const TableModel& b) {
  return Equivalent(a.row_axis, b.row_axis) &&
         Equivalent(a.col_axis, b.col_axis) && a.entries == b.entries;
}

}  // namespace htable
