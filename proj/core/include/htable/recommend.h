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

#ifndef HTABLE_RECOMMEND_H_
#define HTABLE_RECOMMEND_H_

#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "htable/locator.h"
#include "htable/model.h"

namespace htable {

enum class Mechanism { kTopology, kName };

std::string_view MechanismName(Mechanism m);
// Accepts "topology" (or "topo") and "name".
std::optional<Mechanism> ParseMechanism(std::string_view name);

// The last non-wildcard label of every sequence of a locator.
struct Descriptor {
  AxisKind axis = AxisKind::kRow;
  std::vector<NodeId> nodes;
  std::vector<std::string> names;
  int level = 0;
};

// Throws kLevelMismatch when the sequences end at different levels.
Descriptor DescriptorOf(const TableModel& model, AxisKind axis,
                        const Locator& locator);

// Reference level minus the level of the lowest common ancestor (0 without
// one). Both descriptors must hold one label at the same level on the same
// axis; kLevelMismatch otherwise.
int TopoPriority(const TableModel& model, const Descriptor& ref,
                 const Descriptor& cand);

// 0 for the reference node itself, 1 for another node with the same name,
// 2 otherwise. Throws kLevelMismatch like TopoPriority.
int NamePriority(const Descriptor& ref, const Descriptor& cand);

struct Recommendation {
  TableUnit unit;
  int row_priority = 0;
  int col_priority = 0;
};

// Every same-level, same-shaped unit with its priority pair; includes the
// reference with (0, 0). Throws kNoRecommendation unless each locator of
// `unit` is a single sequence.
std::vector<Recommendation> EnumerateCandidates(const TableModel& model,
                                                const TableUnit& unit,
                                                Mechanism mechanism);

// Inclusive range of priorities.
struct PriorityRange {
  int lo = 0;
  int hi = std::numeric_limits<int>::max();
  bool Contains(int p) const { return lo <= p && p <= hi; }
};

// Candidates within both ranges sorted by (row priority, column priority,
// row start, column start).
std::vector<Recommendation> Recommend(const TableModel& model,
                                      const TableUnit& unit,
                                      Mechanism mechanism,
                                      PriorityRange rows = {},
                                      PriorityRange cols = {});

nlohmann::json ToJson(const Recommendation& rec);

}  // namespace htable

#endif  // HTABLE_RECOMMEND_H_
