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

#include "htable/structure.h"

#include <algorithm>
#include <string>

#include "htable/axis_index.h"

namespace htable {
namespace {

std::vector<std::string> ChildNames(const AxisIndex& index, int node) {
  std::vector<std::string> names;
  for (int c : index.at(node).children) names.push_back(index.at(c).name());
  return names;
}

bool Uniform(const AxisIndex& index, int upper_level) {
  auto nodes = index.NodesAtLevel(upper_level);
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    if (ChildNames(index, nodes[i]) != ChildNames(index, nodes[0])) {
      return false;
    }
  }
  return true;
}

}  // namespace

bool BoundaryUniform(const HeadingAxis& axis, int upper_level) {
  if (upper_level < 1 || upper_level >= axis.depth) return false;
  AxisIndex index(axis);
  return Uniform(index, upper_level);
}

bool SwapDefined(const HeadingAxis& axis, int upper_level) {
  if (upper_level < 1 || upper_level >= axis.depth) return false;
  AxisIndex index(axis);
  auto nodes = index.NodesAtLevel(upper_level);
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    const auto& a = index.at(nodes[i]);
    const auto& b = index.at(nodes[i - 1]);
    if (a.parent == b.parent &&
        ChildNames(index, nodes[i]) != ChildNames(index, nodes[i - 1])) {
      return false;
    }
  }
  return true;
}

bool LevelUniform(const HeadingAxis& axis, int level) {
  if (level < 1 || level > axis.depth) return false;
  if (level == 1) return true;
  return BoundaryUniform(axis, level - 1);
}

StructureAnnotation DetectStructure(const HeadingAxis& axis) {
  AxisIndex index(axis);
  StructureAnnotation out;
  for (int i = 1; i < axis.depth; ++i) {
    out.uniform_boundaries.push_back(Uniform(index, i));
  }
  // Smallest k with every boundary >= k uniform and the level-k label lists
  // identical under all parents (boundary k-1 uniform, vacuous for k = 1).
  for (int k = 1; k <= axis.depth; ++k) {
    bool ok = true;
    for (int b = std::max(1, k - 1); b < axis.depth; ++b) {
      if (!out.uniform_boundaries[static_cast<std::size_t>(b - 1)]) {
        ok = false;
        break;
      }
    }
    if (ok) {
      out.bicluster_from = k;
      break;
    }
  }
  return out;
}

nlohmann::json ToJson(const StructureAnnotation& s) {
  nlohmann::json j;
  j["bicluster_from"] = s.bicluster_from ? nlohmann::json(*s.bicluster_from)
                                         : nlohmann::json(nullptr);
  j["uniform_boundaries"] = s.uniform_boundaries;
  return j;
}

}  // namespace htable
