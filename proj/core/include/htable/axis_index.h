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

#ifndef HTABLE_AXIS_INDEX_H_
#define HTABLE_AXIS_INDEX_H_

#include <cstddef>
#include <string>
#include <vector>

#include "htable/model.h"

namespace htable {

// Flattened, read-only view of a heading forest in pre-order. Holds pointers
// into the axis, which must outlive the index.
class AxisIndex {
 public:
  struct Entry {
    const HeadingNode* node = nullptr;
    int parent = -1;  // -1 for roots
    int level = 1;    // 1-based
    std::size_t leaf_begin = 0;
    std::size_t leaf_end = 0;
    std::vector<int> children;

    std::size_t leaf_count() const { return leaf_end - leaf_begin; }
    const std::string& name() const { return node->label.name; }
  };

  explicit AxisIndex(const HeadingAxis& axis);

  const HeadingAxis& axis() const { return *axis_; }
  int depth() const { return axis_->depth; }
  std::size_t leaf_count() const { return leaves_.size(); }

  const std::vector<Entry>& entries() const { return entries_; }
  const Entry& at(int i) const { return entries_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& roots() const { return roots_; }
  // Flat index of the node for leaf `leaf` (presentation order).
  int leaf(std::size_t leaf) const { return leaves_[leaf]; }

  std::vector<int> NodesAtLevel(int level) const;
  // Label names from the root down to `node`, inclusive.
  std::vector<std::string> PathNames(int node) const;
  // Flat index of the node with the given id, or -1.
  int FindId(NodeId id) const;

 private:
  const HeadingAxis* axis_;
  std::vector<Entry> entries_;
  std::vector<int> roots_;
  std::vector<int> leaves_;
};

// Leaf paths in presentation order, joined with " / " (used for tooltips).
std::string JoinPath(const std::vector<std::string>& names);

}  // namespace htable

#endif  // HTABLE_AXIS_INDEX_H_
