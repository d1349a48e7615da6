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

#include "htable/axis_index.h"

#include <algorithm>

namespace htable {

AxisIndex::AxisIndex(const HeadingAxis& axis) : axis_(&axis) {
  struct Walker {
    AxisIndex* self;
    int Visit(const HeadingNode& node, int parent, int level) {
      int idx = static_cast<int>(self->entries_.size());
      Entry e;
      e.node = &node;
      e.parent = parent;
      e.level = level;
      e.leaf_begin = self->leaves_.size();
      self->entries_.push_back(std::move(e));
      if (node.is_leaf()) {
        self->leaves_.push_back(idx);
      } else {
        for (const auto& child : node.children) {
          int c = Visit(child, idx, level + 1);
          self->entries_[static_cast<std::size_t>(idx)].children.push_back(c);
        }
      }
      self->entries_[static_cast<std::size_t>(idx)].leaf_end =
          self->leaves_.size();
      return idx;
    }
  };
  Walker w{this};
  for (const auto& root : axis.roots) roots_.push_back(w.Visit(root, -1, 1));
}

std::vector<int> AxisIndex::NodesAtLevel(int level) const {
  std::vector<int> out;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].level == level) out.push_back(static_cast<int>(i));
  }
  return out;
}

std::vector<std::string> AxisIndex::PathNames(int node) const {
  std::vector<std::string> out;
  for (int n = node; n >= 0; n = at(n).parent) out.push_back(at(n).name());
  std::reverse(out.begin(), out.end());
  return out;
}

int AxisIndex::FindId(NodeId id) const {
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i].node->id == id) return static_cast<int>(i);
  }
  return -1;
}

std::string JoinPath(const std::vector<std::string>& names) {
  std::string out;
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (i) out += " / ";
    out += names[i];
  }
  return out;
}

}  // namespace htable
