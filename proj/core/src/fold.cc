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

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "htable/axis_index.h"
#include "htable/error.h"
#include "htable/transform.h"
#include "transform_util.h"

namespace htable {
namespace {

using internal::CheckLevel;
using internal::InvalidOp;
using internal::LeafTags;
using internal::TagLeaves;

constexpr const char* kPlaceholder = "value";

bool IsChain(const HeadingNode& node) {
  const HeadingNode* n = &node;
  while (!n->is_leaf()) {
    if (n->children.size() != 1) return false;
    n = &n->children[0];
  }
  return true;
}

std::vector<Label> ChainLabels(const HeadingNode& node) {
  std::vector<Label> out;
  for (const HeadingNode* n = &node;; n = &n->children[0]) {
    out.push_back(n->label);
    if (n->is_leaf()) break;
  }
  return out;
}

HeadingNode ChainFrom(const std::vector<Label>& labels, std::size_t from = 0) {
  HeadingNode node;
  node.label = labels[from];
  if (from + 1 < labels.size()) node.children.push_back(ChainFrom(labels, from + 1));
  return node;
}

bool TextColumn(const ValueGrid& e, std::size_t col) {
  bool any_text = false;
  for (std::size_t r = 0; r < e.rows(); ++r) {
    const Value& v = e(r, col);
    if (v.is_number()) return false;
    any_text |= v.is_text();
  }
  return any_text;
}

// Column roots split into categorical key chains and the measure forest.
struct ColumnSplit {
  std::vector<std::size_t> key_roots;      // root indices
  std::vector<std::size_t> key_leaves;     // leaf index of each key chain
  std::vector<std::size_t> measure_roots;  // root indices
};

ColumnSplit SplitColumns(const TableModel& model) {
  ColumnSplit split;
  std::size_t leaf = 0;
  const auto& roots = model.col_axis.roots;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (IsChain(roots[i]) && TextColumn(model.entries, leaf)) {
      split.key_roots.push_back(i);
      split.key_leaves.push_back(leaf);
      ++leaf;
    } else {
      split.measure_roots.push_back(i);
      leaf += LeafTags(roots[i]).size();
    }
  }
  return split;
}

bool HasDerivedAt(const std::vector<HeadingNode>& nodes, int cur, int level) {
  for (const auto& n : nodes) {
    if (cur == level) {
      if (n.label.is_derived()) return true;
    } else if (HasDerivedAt(n.children, cur + 1, level)) {
      return true;
    }
  }
  return false;
}

// Gives every old leaf k children and encodes new leaf tags as old * k + j.
void InsertLevel(std::vector<HeadingNode>& nodes, int cur, int level,
                 const std::vector<Label>& keys);

std::vector<HeadingNode> KeyedCopies(const std::vector<HeadingNode>& below,
                                     NodeId leaf_tag,
                                     const std::vector<Label>& keys) {
  std::vector<HeadingNode> out;
  const auto k = static_cast<NodeId>(keys.size());
  for (NodeId j = 0; j < k; ++j) {
    HeadingNode n;
    n.label = keys[j];
    n.children = below;
    if (n.children.empty()) {
      n.id = leaf_tag * k + j;
    } else {
      struct Retag {
        NodeId k, j;
        void Visit(std::vector<HeadingNode>& v) {
          for (auto& c : v) {
            if (c.is_leaf()) {
              c.id = c.id * k + j;
            } else {
              Visit(c.children);
            }
          }
        }
      } retag{k, j};
      retag.Visit(n.children);
    }
    out.push_back(std::move(n));
  }
  return out;
}

void InsertLevel(std::vector<HeadingNode>& nodes, int cur, int level,
                 const std::vector<Label>& keys) {
  for (auto& n : nodes) {
    if (cur + 1 < level) {
      InsertLevel(n.children, cur + 1, level, keys);
    } else {
      n.children = KeyedCopies(n.children, n.id, keys);
    }
  }
}

}  // namespace

bool IsKeyColumn(const TableModel& model, std::size_t col_leaf) {
  auto split = SplitColumns(model);
  return std::find(split.key_leaves.begin(), split.key_leaves.end(),
                   col_leaf) != split.key_leaves.end();
}

TableModel Fold(const TableModel& model, int level) {
  const HeadingAxis& cols = model.col_axis;
  const int depth = cols.depth;
  CheckLevel(cols, level, depth, "fold");
  ColumnSplit split = SplitColumns(model);
  if (split.measure_roots.empty()) {
    InvalidOp("fold: every column is a categorical key column");
  }
  std::vector<HeadingNode> all = cols.roots;
  TagLeaves(all);
  std::vector<HeadingNode> measure;
  for (std::size_t i : split.measure_roots) measure.push_back(all[i]);
  if (HasDerivedAt(measure, 1, level)) {
    throw Error(ErrorCode::kDerivedPresent,
                "column level " + std::to_string(level) +
                    " holds derived labels; remove them with to_stacked first",
                {{"level", level}});
  }
  const std::string key_name = cols.level_name(level);

  std::vector<Label> labels;
  std::vector<std::vector<NodeId>> groups;
  std::vector<HeadingNode> new_measure;
  HeadingAxis new_cols;
  if (depth == 1) {
    std::vector<NodeId> group;
    for (const auto& m : measure) {
      labels.push_back(m.label);
      group.push_back(m.id);
    }
    groups.push_back(std::move(group));
    new_measure.push_back(HeadingNode{Label::Plain(kPlaceholder), {}, 0});
    new_cols.depth = 1;
    new_cols.level_names = {kPlaceholder};
  } else {
    internal::LevelRemoval removal = internal::RemoveLevel(measure, level);
    labels = std::move(removal.labels);
    groups = std::move(removal.groups);
    new_measure = std::move(removal.roots);
    new_cols.depth = depth - 1;
    new_cols.level_names = cols.level_names;
    new_cols.level_names.erase(new_cols.level_names.begin() + (level - 1));
  }
  const std::size_t k = labels.size();

  new_cols.roots.push_back(ChainFrom(std::vector<Label>(
      static_cast<std::size_t>(new_cols.depth), Label::Plain(key_name))));
  for (std::size_t i : split.key_roots) {
    std::vector<Label> chain = ChainLabels(cols.roots[i]);
    if (depth > 1) chain.erase(chain.begin() + (level - 1));
    new_cols.roots.push_back(ChainFrom(chain));
  }
  const std::vector<NodeId> measure_tags = LeafTags(new_measure);
  for (auto& m : new_measure) new_cols.roots.push_back(std::move(m));

  HeadingAxis new_rows = model.row_axis;
  std::vector<HeadingNode> bottom;
  for (const auto& l : labels) {
    bottom.push_back(HeadingNode{Label::Plain(l.name), {}, 0});
  }
  struct Appender {
    const std::vector<HeadingNode>* bottom;
    void Visit(std::vector<HeadingNode>& nodes) {
      for (auto& n : nodes) {
        if (n.is_leaf()) {
          n.children = *bottom;
        } else {
          Visit(n.children);
        }
      }
    }
  } appender{&bottom};
  appender.Visit(new_rows.roots);
  new_rows.depth += 1;
  new_rows.level_names.push_back(key_name);

  const ValueGrid& old = model.entries;
  const std::size_t n_keys = split.key_leaves.size();
  ValueGrid e(old.rows() * k, 1 + n_keys + measure_tags.size());
  for (std::size_t t = 0; t < old.rows(); ++t) {
    for (std::size_t j = 0; j < k; ++j) {
      const std::size_t r = t * k + j;
      e(r, 0) = Value::Text(labels[j].name);
      for (std::size_t q = 0; q < n_keys; ++q) {
        e(r, 1 + q) = old(t, split.key_leaves[q]);
      }
      for (std::size_t s = 0; s < measure_tags.size(); ++s) {
        e(r, 1 + n_keys + s) = old(t, groups[measure_tags[s]][j]);
      }
    }
  }
  return MakeModel(std::move(new_rows), std::move(new_cols), std::move(e),
                   model.version + 1);
}

TableModel Unfold(const TableModel& model, std::size_t key_col_leaf,
                  std::size_t value_col_leaf, std::optional<int> level) {
  const HeadingAxis& cols = model.col_axis;
  const ValueGrid& old = model.entries;
  const std::size_t n_cols = old.cols();
  if (key_col_leaf >= n_cols || value_col_leaf >= n_cols ||
      key_col_leaf == value_col_leaf) {
    InvalidOp("unfold: key and value columns must be two distinct column "
              "leaves below " + std::to_string(n_cols));
  }
  ColumnSplit split = SplitColumns(model);
  auto key_pos = std::find(split.key_leaves.begin(), split.key_leaves.end(),
                           key_col_leaf);
  if (key_pos == split.key_leaves.end()) {
    throw Error(ErrorCode::kNotCategorical,
                "column " + std::to_string(key_col_leaf) +
                    " is not a categorical key column",
                {{"column", key_col_leaf}});
  }
  for (std::size_t r = 0; r < old.rows(); ++r) {
    if (old(r, value_col_leaf).is_text()) {
      throw Error(ErrorCode::kNotNumeric,
                  "column " + std::to_string(value_col_leaf) +
                      " holds text at row " + std::to_string(r),
                  {{"column", value_col_leaf}, {"row", r}});
    }
  }
  const std::size_t key_index =
      static_cast<std::size_t>(key_pos - split.key_leaves.begin());
  const std::size_t key_root = split.key_roots[key_index];
  const std::string key_name = cols.roots[key_root].label.name;
  std::vector<std::size_t> other_keys;  // positions within split.key_*
  for (std::size_t q = 0; q < split.key_leaves.size(); ++q) {
    if (q != key_index) other_keys.push_back(q);
  }
  const bool placeholder =
      cols.depth == 1 && split.measure_roots.size() == 1 &&
      cols.roots[split.measure_roots[0]].label.name == kPlaceholder &&
      cols.level_names[0] == kPlaceholder;
  const int depth = cols.depth;
  const int insert_at = level.value_or(depth + 1);
  if (!placeholder) CheckLevel(cols, insert_at, depth + 1, "unfold");

  // Distinct keys in first-appearance order.
  std::vector<Label> keys;
  std::map<std::string, std::size_t> key_slot;
  std::vector<std::size_t> row_key(old.rows());
  for (std::size_t r = 0; r < old.rows(); ++r) {
    const Value& v = old(r, key_col_leaf);
    if (!v.is_text() || v.text().empty()) {
      throw Error(ErrorCode::kIrregularGroups,
                  "row " + std::to_string(r) + " has no key value",
                  {{"row", r}});
    }
    auto [it, inserted] = key_slot.emplace(v.text(), keys.size());
    if (inserted) keys.push_back(Label::Plain(v.text()));
    row_key[r] = it->second;
  }
  const std::size_t k = keys.size();

  // Row groups.
  const HeadingAxis& rows = model.row_axis;
  const bool drop_level =
      rows.depth >= 2 && rows.level_names.back() == key_name;
  AxisIndex rindex(rows);
  std::vector<std::vector<std::optional<std::size_t>>> groups;
  std::vector<std::string> group_labels;
  {
    std::unordered_map<std::string, std::size_t> by_key;
    auto other_texts = [&](std::size_t r) {
      std::vector<std::string> texts;
      for (std::size_t q : other_keys) {
        const Value& v = old(r, split.key_leaves[q]);
        texts.push_back(v.is_text() ? v.text() : std::string());
      }
      return texts;
    };
    for (std::size_t r = 0; r < old.rows(); ++r) {
      std::string gkey;
      std::string label;
      if (drop_level) {
        gkey = std::to_string(rindex.at(rindex.leaf(r)).parent);
      } else {
        label = JoinPath(other_texts(r));
        gkey = label;
        if (label.empty()) label = "all";
      }
      auto [it, inserted] = by_key.emplace(gkey, groups.size());
      if (inserted) {
        groups.emplace_back(k);
        group_labels.push_back(label);
      }
      const std::size_t g = it->second;
      auto& slot = groups[g][row_key[r]];
      if (slot) {
        throw Error(ErrorCode::kIrregularGroups,
                    "rows " + std::to_string(*slot) + " and " +
                        std::to_string(r) + " share a group and the key '" +
                        keys[row_key[r]].name + "'",
                    {{"rows", {*slot, r}}});
      }
      slot = r;
    }
    for (std::size_t g = 0; g < groups.size(); ++g) {
      for (std::size_t j = 0; j < k; ++j) {
        if (!groups[g][j]) {
          throw Error(ErrorCode::kIrregularGroups,
                      "a row group lacks the key '" + keys[j].name + "'",
                      {{"key", keys[j].name}});
        }
      }
      if (drop_level) {
        const std::size_t first = *groups[g][0];
        for (std::size_t j = 1; j < k; ++j) {
          if (other_texts(*groups[g][j]) != other_texts(first)) {
            throw Error(ErrorCode::kIrregularGroups,
                        "key columns differ within one row group",
                        {{"rows", {first, *groups[g][j]}}});
          }
        }
      }
    }
  }

  HeadingAxis new_rows;
  if (drop_level) {
    new_rows = rows;
    struct Trim {
      int depth;
      void Visit(std::vector<HeadingNode>& nodes, int cur) {
        for (auto& n : nodes) {
          if (cur + 1 == depth) {
            n.children.clear();
          } else {
            Visit(n.children, cur + 1);
          }
        }
      }
    } trim{rows.depth};
    trim.Visit(new_rows.roots, 1);
    new_rows.depth -= 1;
    new_rows.level_names.pop_back();
  } else {
    new_rows.depth = 1;
    new_rows.level_names = {"group"};
    for (const auto& l : group_labels) new_rows.roots.push_back(Node(l));
  }

  HeadingAxis new_cols;
  std::vector<HeadingNode> measure;
  if (placeholder) {
    new_cols.depth = 1;
    new_cols.level_names = {key_name};
    for (std::size_t j = 0; j < k; ++j) {
      measure.push_back(HeadingNode{keys[j], {}, static_cast<NodeId>(j)});
    }
  } else {
    new_cols.depth = depth + 1;
    new_cols.level_names = cols.level_names;
    new_cols.level_names.insert(new_cols.level_names.begin() + (insert_at - 1),
                                key_name);
    std::vector<HeadingNode> all = cols.roots;
    TagLeaves(all);
    for (std::size_t i : split.measure_roots) measure.push_back(all[i]);
    if (insert_at == 1) {
      // The key level becomes the new root level above the whole forest.
      measure = KeyedCopies(measure, 0, keys);
    } else {
      InsertLevel(measure, 1, insert_at, keys);
    }
  }
  for (std::size_t q : other_keys) {
    std::vector<Label> chain = ChainLabels(cols.roots[split.key_roots[q]]);
    if (!placeholder) {
      const auto dup = static_cast<std::size_t>(std::min(insert_at, depth) - 1);
      chain.insert(chain.begin() + static_cast<std::ptrdiff_t>(dup), chain[dup]);
    }
    new_cols.roots.push_back(ChainFrom(chain));
  }
  const std::vector<NodeId> measure_tags = LeafTags(measure);
  for (auto& m : measure) new_cols.roots.push_back(std::move(m));

  ValueGrid e(groups.size(), other_keys.size() + measure_tags.size());
  for (std::size_t g = 0; g < groups.size(); ++g) {
    const std::size_t first = *groups[g][0];
    for (std::size_t q = 0; q < other_keys.size(); ++q) {
      e(g, q) = old(first, split.key_leaves[other_keys[q]]);
    }
    for (std::size_t s = 0; s < measure_tags.size(); ++s) {
      const NodeId tag = measure_tags[s];
      std::size_t src_col, j;
      if (placeholder) {
        src_col = value_col_leaf;
        j = tag;
      } else {
        src_col = tag / k;
        j = tag % k;
      }
      e(g, other_keys.size() + s) = old(*groups[g][j], src_col);
    }
  }
  return MakeModel(std::move(new_rows), std::move(new_cols), std::move(e),
                   model.version + 1);
}

}  // namespace htable
