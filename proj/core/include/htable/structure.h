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

#ifndef HTABLE_STRUCTURE_H_
#define HTABLE_STRUCTURE_H_

#include <optional>
#include <vector>

#include <nlohmann/json.hpp>

#include "htable/model.h"

namespace htable {

struct StructureAnnotation {
  // Levels bicluster_from..depth form a cross product of label lists.
  std::optional<int> bicluster_from;
  // uniform_boundaries[i-1] describes the boundary between levels i and i+1.
  std::vector<bool> uniform_boundaries;

  friend bool operator==(const StructureAnnotation&,
                         const StructureAnnotation&) = default;
};

// True iff every level-`upper_level` node has the same ordered list of child
// label names.
bool BoundaryUniform(const HeadingAxis& axis, int upper_level);

// True iff, under every level-(upper_level - 1) parent, the level-`upper_level`
// siblings share one ordered list of child label names. Weaker than
// BoundaryUniform and closed under Swap.
bool SwapDefined(const HeadingAxis& axis, int upper_level);

// True iff the ordered label names at `level` are identical under every parent
// (always true for level 1).
bool LevelUniform(const HeadingAxis& axis, int level);

StructureAnnotation DetectStructure(const HeadingAxis& axis);

nlohmann::json ToJson(const StructureAnnotation& s);

}  // namespace htable

#endif  // HTABLE_STRUCTURE_H_
