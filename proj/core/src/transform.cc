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

#include "htable/transform.h"

#include <algorithm>
#include <limits>
#include <optional>
#include <utility>

#include "htable/error.h"
#include "htable/structure.h"
#include "transform_util.h"

namespace htable {
namespace internal {
namespace {

void TagInto(std::vector<HeadingNode>& nodes, NodeId& next) {
  for (auto& n : nodes) {
    if (n.is_leaf()) {
      n.id = next++;
    } else {
      TagInto(n.children, next);
    }
  }
}

void CollectTags(const HeadingNode& node, std::vector<NodeId>& out) {
  if (node.is_leaf()) {
    out.push_back(node.id);
    return;
  }
  for (const auto& c : node.children) CollectTags(c, out);
}

// Renumbers the leaves of `nodes` with fresh group indices, recording for
// each the tags of the matching leaves under every removed label.
void AssignGroups(std::vector<HeadingNode>& nodes,
                  const std::vector<std::vector<NodeId>>& per_label,
                  std::size_t& cursor, LevelRemoval& out) {
  for (auto& n : nodes) {
    if (!n.is_leaf()) {
      AssignGroups(n.children, per_label, cursor, out);
      continue;
    }
    std::vector<NodeId> group;
    group.reserve(per_label.size());
    for (const auto& tags : per_label) group.push_back(tags[cursor]);
    ++cursor;
    n.id = static_cast<NodeId>(out.groups.size());
    out.groups.push_back(std::move(group));
  }
}

struct Remover {
  int level;
  LevelRemoval* out;
  bool have_labels = false;

  void CheckLabels(const std::vector<HeadingNode>& siblings) {
    if (!have_labels) {
      for (const auto& s : siblings) out->labels.push_back(s.label);
      have_labels = true;
    } else {
      bool same = siblings.size() == out->labels.size();
      for (std::size_t j = 0; same && j < siblings.size(); ++j) {
        same = siblings[j].label == out->labels[j];
      }
      if (!same) {
        throw Error(ErrorCode::kNotUniform,
                    "level " + std::to_string(level) +
                        " does not hold the same labels under every parent");
      }
    }
    for (std::size_t j = 1; j < siblings.size(); ++j) {
      const auto& a = siblings[j].children;
      const auto& b = siblings[0].children;
      bool same_shape = a.size() == b.size();
      for (std::size_t c = 0; same_shape && c < a.size(); ++c) {
        same_shape = SameShape(a[c], b[c]);
      }
      if (!same_shape) {
        throw Error(ErrorCode::kNotUniform,
                    "subtrees below the level-" + std::to_string(level) +
                        " labels differ in shape");
      }
    }
  }

  // Replaces `siblings` (at `cur` level) by their rewrite. Returns the group
  // index when the parent of a bottom-level removal must become a leaf.
  std::vector<HeadingNode> Process(std::vector<HeadingNode> siblings, int cur,
                                   std::optional<NodeId>& leaf_group) {
    if (cur < level) {
      for (auto& n : siblings) {
        std::optional<NodeId> g;
        n.children = Process(std::move(n.children), cur + 1, g);
        if (g) n.id = *g;
      }
      return siblings;
    }
    CheckLabels(siblings);
    if (siblings[0].is_leaf()) {
      std::vector<NodeId> group;
      for (const auto& s : siblings) group.push_back(s.id);
      leaf_group = static_cast<NodeId>(out->groups.size());
      out->groups.push_back(std::move(group));
      return {};
    }
    std::vector<std::vector<NodeId>> per_label;
    for (const auto& s : siblings) per_label.push_back(LeafTags(s));
    std::vector<HeadingNode> replacement = std::move(siblings[0].children);
    std::size_t cursor = 0;
    AssignGroups(replacement, per_label, cursor, *out);
    return replacement;
  }
};

}  // namespace

void TagLeaves(std::vector<HeadingNode>& roots) {
  NodeId next = 0;
  TagInto(roots, next);
}

std::vector<NodeId> LeafTags(const std::vector<HeadingNode>& roots) {
  std::vector<NodeId> out;
  for (const auto& r : roots) CollectTags(r, out);
  return out;
}

std::vector<NodeId> LeafTags(const HeadingNode& node) {
  std::vector<NodeId> out;
  CollectTags(node, out);
  return out;
}

bool SameShape(const HeadingNode& a, const HeadingNode& b) {
  if (!(a.label == b.label) || a.children.size() != b.children.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    if (!SameShape(a.children[i], b.children[i])) return false;
  }
  return true;
}

LevelRemoval RemoveLevel(std::vector<HeadingNode> roots, int level) {
  LevelRemoval out;
  Remover remover{level, &out};
  std::optional<NodeId> unused;
  out.roots = remover.Process(std::move(roots), 1, unused);
  return out;
}

void CheckLevel(const HeadingAxis& axis, int level, int max_level,
                const char* op) {
  if (level < 1 || level > max_level) {
    InvalidOp(std::string(op) + ": level " + std::to_string(level) +
              " is out of range [1, " + std::to_string(max_level) +
              "] for an axis of depth " + std::to_string(axis.depth));
  }
}

}  // namespace internal

namespace {

using internal::CheckLevel;
using internal::InvalidOp;
using internal::LeafTags;
using internal::TagLeaves;

// Exchanges the level of `siblings` (when at `level`) with the level below.
std::vector<HeadingNode> SwapAt(std::vector<HeadingNode> siblings, int cur,
                                int level) {
  if (cur < level) {
    for (auto& n : siblings) {
      n.children = SwapAt(std::move(n.children), cur + 1, level);
    }
    return siblings;
  }
  std::vector<HeadingNode> out;
  const std::size_t m = siblings[0].children.size();
  for (std::size_t j = 0; j < m; ++j) {
    HeadingNode upper;
    upper.label = siblings[0].children[j].label;
    for (auto& a : siblings) {
      HeadingNode lower;
      lower.label = a.label;
      HeadingNode& old = a.children[j];
      lower.children = std::move(old.children);
      if (lower.children.empty()) lower.id = old.id;
      upper.children.push_back(std::move(lower));
    }
    out.push_back(std::move(upper));
  }
  return out;
}

// Copies entries along `axis`, taking new leaf i from old leaf tags[i].
ValueGrid PermuteAlong(const ValueGrid& old, AxisKind axis,
                       const std::vector<NodeId>& tags) {
  if (axis == AxisKind::kRow) {
    ValueGrid out(tags.size(), old.cols());
    for (std::size_t r = 0; r < tags.size(); ++r) {
      for (std::size_t c = 0; c < old.cols(); ++c) out(r, c) = old(tags[r], c);
    }
    return out;
  }
  ValueGrid out(old.rows(), tags.size());
  for (std::size_t r = 0; r < old.rows(); ++r) {
    for (std::size_t c = 0; c < tags.size(); ++c) out(r, c) = old(r, tags[c]);
  }
  return out;
}

TableModel Rebuilt(const TableModel& model, HeadingAxis rows, HeadingAxis cols,
                   ValueGrid entries) {
  return MakeModel(std::move(rows), std::move(cols), std::move(entries),
                   model.version + 1);
}

HeadingNode DerivedChain(Stat stat, int length, NodeId leaf_tag) {
  HeadingNode node;
  node.label = Label::Derived(stat);
  if (length > 1) {
    node.children.push_back(DerivedChain(stat, length - 1, leaf_tag));
  } else {
    node.id = leaf_tag;
  }
  return node;
}

void CollectPlainLeaves(const HeadingNode& node, std::vector<NodeId>& out) {
  if (node.label.is_derived()) return;
  if (node.is_leaf()) {
    out.push_back(node.id);
    return;
  }
  for (const auto& c : node.children) CollectPlainLeaves(c, out);
}

struct Linearizer {
  int level;
  int depth;
  Stat stat;
  NodeId agg_base;
  std::vector<std::vector<NodeId>> aggregates;

  void Visit(std::vector<HeadingNode>& siblings, int cur) {
    for (auto& n : siblings) {
      if (n.label.is_derived()) continue;
      if (cur < level) {
        Visit(n.children, cur + 1);
        continue;
      }
      for (const auto& c : n.children) {
        if (c.label.derived == stat || c.label.name == DerivedSymbol(stat)) {
          throw Error(ErrorCode::kDuplicateDerived,
                      "'" + n.label.name + "' already has a derived '" +
                          c.label.name + "' child",
                      {{"label", n.label.name}, {"stat", StatName(stat)}});
        }
      }
      std::vector<NodeId> plain;
      for (const auto& c : n.children) CollectPlainLeaves(c, plain);
      NodeId tag = agg_base + static_cast<NodeId>(aggregates.size());
      aggregates.push_back(std::move(plain));
      n.children.insert(n.children.begin(),
                        DerivedChain(stat, depth - level, tag));
    }
  }
};

Value Aggregate(Stat stat, const std::vector<const Value*>& values,
                const std::string& where) {
  double acc = 0;
  std::size_t n = 0;
  for (const Value* v : values) {
    if (v->is_missing()) continue;
    if (v->is_text()) {
      throw Error(ErrorCode::kNonNumeric,
                  "text entry '" + v->text() + "' inside the aggregated " +
                      where,
                  {{"text", v->text()}});
    }
    double x = v->number();
    if (n == 0) {
      acc = x;
    } else {
      switch (stat) {
        case Stat::kSum:
        case Stat::kAvg:
          acc += x;
          break;
        case Stat::kMin:
          acc = std::min(acc, x);
          break;
        case Stat::kMax:
          acc = std::max(acc, x);
          break;
      }
    }
    ++n;
  }
  if (n == 0) return Value::Missing();
  if (stat == Stat::kAvg) acc /= static_cast<double>(n);
  return Value::Number(acc);
}

// Removes derived children of level-`level` nodes; returns how many went.
std::size_t StripDerived(std::vector<HeadingNode>& siblings, int cur,
                         int level) {
  std::size_t removed = 0;
  for (auto& n : siblings) {
    if (n.label.is_derived()) continue;
    if (cur < level) {
      removed += StripDerived(n.children, cur + 1, level);
      continue;
    }
    auto it = std::remove_if(
        n.children.begin(), n.children.end(),
        [](const HeadingNode& c) { return c.label.is_derived(); });
    std::size_t k = static_cast<std::size_t>(n.children.end() - it);
    if (k == n.children.size() && k > 0) {
      InvalidOp("to_stacked: every child of '" + n.label.name +
                "' is derived; removing them would leave it empty");
    }
    n.children.erase(it, n.children.end());
    removed += k;
  }
  return removed;
}

}  // namespace

TableModel Swap(const TableModel& model, AxisKind axis, int upper_level) {
  const HeadingAxis& src = model.axis(axis);
  CheckLevel(src, upper_level, src.depth - 1, "swap");
  if (!SwapDefined(src, upper_level)) {
    throw Error(ErrorCode::kNotUniform,
                std::string(AxisName(axis)) + " levels " +
                    std::to_string(upper_level) + " and " +
                    std::to_string(upper_level + 1) +
                    " do not form a cross product",
                {{"axis", AxisName(axis)}, {"level", upper_level}});
  }
  HeadingAxis out = src;
  TagLeaves(out.roots);
  out.roots = SwapAt(std::move(out.roots), 1, upper_level);
  std::swap(out.level_names[static_cast<std::size_t>(upper_level - 1)],
            out.level_names[static_cast<std::size_t>(upper_level)]);
  ValueGrid entries = PermuteAlong(model.entries, axis, LeafTags(out.roots));
  if (axis == AxisKind::kRow) {
    return Rebuilt(model, std::move(out), model.col_axis, std::move(entries));
  }
  return Rebuilt(model, model.row_axis, std::move(out), std::move(entries));
}

TableModel TransposeTable(const TableModel& model) {
  const ValueGrid& e = model.entries;
  ValueGrid t(e.cols(), e.rows());
  for (std::size_t r = 0; r < e.rows(); ++r) {
    for (std::size_t c = 0; c < e.cols(); ++c) t(c, r) = e(r, c);
  }
  return Rebuilt(model, model.col_axis, model.row_axis, std::move(t));
}

TableModel TransposeLevel(const TableModel& model, AxisKind source,
                          int level) {
  const HeadingAxis& src = model.axis(source);
  const HeadingAxis& dst = model.axis(Opposite(source));
  if (src.depth == 1) {
    throw Error(ErrorCode::kLastLevel,
                std::string("the ") + std::string(AxisName(source)) +
                    " axis has a single level",
                {{"axis", AxisName(source)}});
  }
  CheckLevel(src, level, src.depth, "transpose_level");
  std::vector<HeadingNode> roots = src.roots;
  TagLeaves(roots);
  internal::LevelRemoval removal = internal::RemoveLevel(std::move(roots), level);

  HeadingAxis new_src;
  new_src.roots = std::move(removal.roots);
  new_src.depth = src.depth - 1;
  new_src.level_names = src.level_names;
  new_src.level_names.erase(new_src.level_names.begin() + (level - 1));

  HeadingAxis new_dst = dst;
  new_dst.depth = dst.depth + 1;
  new_dst.level_names.push_back(src.level_name(level));
  std::vector<HeadingNode> bottom;
  for (const auto& l : removal.labels) bottom.push_back(HeadingNode{l, {}, 0});
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
  appender.Visit(new_dst.roots);

  const std::vector<NodeId> groups = LeafTags(new_src.roots);
  const std::size_t k = removal.labels.size();
  const ValueGrid& old = model.entries;
  if (source == AxisKind::kCol) {
    ValueGrid e(old.rows() * k, groups.size());
    for (std::size_t t = 0; t < old.rows(); ++t) {
      for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t s = 0; s < groups.size(); ++s) {
          e(t * k + j, s) = old(t, removal.groups[groups[s]][j]);
        }
      }
    }
    return Rebuilt(model, std::move(new_dst), std::move(new_src), std::move(e));
  }
  ValueGrid e(groups.size(), old.cols() * k);
  for (std::size_t s = 0; s < groups.size(); ++s) {
    for (std::size_t t = 0; t < old.cols(); ++t) {
      for (std::size_t j = 0; j < k; ++j) {
        e(s, t * k + j) = old(removal.groups[groups[s]][j], t);
      }
    }
  }
  return Rebuilt(model, std::move(new_src), std::move(new_dst), std::move(e));
}

TableModel ToLinear(const TableModel& model, AxisKind axis, int level,
                    Stat stat) {
  const HeadingAxis& src = model.axis(axis);
  CheckLevel(src, level, src.depth - 1, "to_linear");
  HeadingAxis out = src;
  TagLeaves(out.roots);
  const std::size_t n_old = src.leaf_count();
  Linearizer lin{level, src.depth, stat, static_cast<NodeId>(n_old), {}};
  lin.Visit(out.roots, 1);

  const std::vector<NodeId> tags = LeafTags(out.roots);
  const ValueGrid& old = model.entries;
  const bool rows = axis == AxisKind::kRow;
  const std::size_t other = rows ? old.cols() : old.rows();
  ValueGrid e = rows ? ValueGrid(tags.size(), other)
                     : ValueGrid(other, tags.size());
  std::vector<const Value*> slice;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    for (std::size_t o = 0; o < other; ++o) {
      Value& dst = rows ? e(i, o) : e(o, i);
      if (tags[i] < n_old) {
        dst = rows ? old(tags[i], o) : old(o, tags[i]);
        continue;
      }
      slice.clear();
      for (NodeId leaf : lin.aggregates[tags[i] - n_old]) {
        slice.push_back(rows ? &old(leaf, o) : &old(o, leaf));
      }
      dst = Aggregate(stat, slice, std::string(AxisName(axis)) + " group");
    }
  }
  if (rows) return Rebuilt(model, std::move(out), model.col_axis, std::move(e));
  return Rebuilt(model, model.row_axis, std::move(out), std::move(e));
}

TableModel ToStacked(const TableModel& model, AxisKind axis, int level) {
  const HeadingAxis& src = model.axis(axis);
  CheckLevel(src, level, src.depth - 1, "to_stacked");
  HeadingAxis out = src;
  TagLeaves(out.roots);
  if (StripDerived(out.roots, 1, level) == 0) {
    throw Error(ErrorCode::kNothingToRemove,
                "no derived labels below " + std::string(AxisName(axis)) +
                    " level " + std::to_string(level),
                {{"axis", AxisName(axis)}, {"level", level}});
  }
  ValueGrid e = PermuteAlong(model.entries, axis, LeafTags(out.roots));
  if (axis == AxisKind::kRow) {
    return Rebuilt(model, std::move(out), model.col_axis, std::move(e));
  }
  return Rebuilt(model, model.row_axis, std::move(out), std::move(e));
}

}  // namespace htable
