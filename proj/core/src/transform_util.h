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

#ifndef HTABLE_SRC_TRANSFORM_UTIL_H_
#define HTABLE_SRC_TRANSFORM_UTIL_H_

#include <cstddef>
#include <string>
#include <vector>

#include "htable/error.h"
#include "htable/model.h"

namespace htable::internal {

// Transformations rebuild forests while tracking where each new leaf's
// entries come from. Before rebuilding, every leaf's `id` is overwritten with
// its leaf index (a "tag"); after rebuilding the tags are read back in
// presentation order. MakeModel assigns real ids afterwards.
void TagLeaves(std::vector<HeadingNode>& roots);
std::vector<NodeId> LeafTags(const std::vector<HeadingNode>& roots);
std::vector<NodeId> LeafTags(const HeadingNode& node);

// Same label names, derived kinds and nesting.
bool SameShape(const HeadingNode& a, const HeadingNode& b);

// Result of deleting one level from a forest whose leaves are tagged.
struct LevelRemoval {
  std::vector<HeadingNode> roots;  // leaves tagged with group indices
  std::vector<Label> labels;       // the removed level's label list
  // groups[g][j]: old leaf tag under the j-th removed label.
  std::vector<std::vector<NodeId>> groups;
};

// Removes `level` (1-based) from a forest of depth >= 2. Every parent must
// hold the same label list at that level and the subtrees below those labels
// must share one shape; kNotUniform otherwise.
LevelRemoval RemoveLevel(std::vector<HeadingNode> roots, int level);

[[noreturn]] inline void InvalidOp(const std::string& message) {
  throw Error(ErrorCode::kInvalidOp, message);
}

void CheckLevel(const HeadingAxis& axis, int level, int max_level,
                const char* op);

}  // namespace htable::internal

#endif  // HTABLE_SRC_TRANSFORM_UTIL_H_
