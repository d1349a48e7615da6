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

#include "htable/recommend.h"

#include <algorithm>
#include <tuple>

#include "htable/axis_index.h"
#include "htable/error.h"

namespace htable {
namespace {

void RequireComparable(const Descriptor& ref, const Descriptor& cand) {
  if (ref.nodes.size() != 1 || cand.nodes.size() != 1) {
    throw Error(ErrorCode::kNoRecommendation,
                "priorities need single-label descriptors");
  }
  if (ref.axis != cand.axis || ref.level != cand.level) {
    throw Error(ErrorCode::kLevelMismatch,
                "descriptor '" + cand.names[0] + "' (level " +
                    std::to_string(cand.level) + ") is not comparable to '" +
                    ref.names[0] + "' (level " + std::to_string(ref.level) +
                    ")",
                {{"ref_level", ref.level}, {"cand_level", cand.level}});
  }
}

int Lookup(const AxisIndex& index, NodeId id) {
  int n = index.FindId(id);
  if (n < 0) {
    throw Error(ErrorCode::kUnknownLabel,
                "node id " + std::to_string(id) + " is not on this axis");
  }
  return n;
}

int LcaLevel(const AxisIndex& index, int a, int b) {
  while (index.at(a).level > index.at(b).level) a = index.at(a).parent;
  while (index.at(b).level > index.at(a).level) b = index.at(b).parent;
  while (a != b) {
    a = index.at(a).parent;
    b = index.at(b).parent;
    if (a < 0 || b < 0) return 0;
  }
  return index.at(a).level;
}

int Priority(Mechanism m, const TableModel& model, const Descriptor& ref,
             const Descriptor& cand) {
  return m == Mechanism::kTopology ? TopoPriority(model, ref, cand)
                                   : NamePriority(ref, cand);
}

}  // namespace

std::string_view MechanismName(Mechanism m) {
  return m == Mechanism::kTopology ? "topology" : "name";
}

std::optional<Mechanism> ParseMechanism(std::string_view name) {
  if (name == "topology" || name == "topo") return Mechanism::kTopology;
  if (name == "name") return Mechanism::kName;
  return std::nullopt;
}

Descriptor DescriptorOf(const TableModel& model, AxisKind axis,
                        const Locator& locator) {
  const HeadingAxis& heading = model.axis(axis);
  AxisIndex index(heading);
  Descriptor d;
  d.axis = axis;
  for (const auto& seq : locator.sequences) {
    // Walk the labels down from the roots; ResolveAxisLocator has already
    // rejected unknown or ambiguous sequences for valid units.
    int node = -1;
    const std::vector<int>* level_nodes = &index.roots();
    for (const auto& name : seq.labels) {
      int next = -1;
      for (int c : *level_nodes) {
        if (index.at(c).name() == name) {
          next = c;
          break;
        }
      }
      if (next < 0) {
        throw Error(ErrorCode::kUnknownLabel,
                    "no node matches " + seq.ToString(),
                    {{"sequence", ToJson(seq)}});
      }
      node = next;
      level_nodes = &index.at(node).children;
    }
    const int level = static_cast<int>(seq.labels.size());
    if (d.level != 0 && d.level != level) {
      throw Error(ErrorCode::kLevelMismatch,
                  "locator " + locator.ToString() +
                      " mixes descriptors from different levels");
    }
    d.level = level;
    d.nodes.push_back(index.at(node).node->id);
    d.names.push_back(index.at(node).name());
  }
  return d;
}

int TopoPriority(const TableModel& model, const Descriptor& ref,
                 const Descriptor& cand) {
  RequireComparable(ref, cand);
  if (ref.nodes[0] == cand.nodes[0]) return 0;
  AxisIndex index(model.axis(ref.axis));
  int a = Lookup(index, ref.nodes[0]);
  int b = Lookup(index, cand.nodes[0]);
  return ref.level - LcaLevel(index, a, b);
}

int NamePriority(const Descriptor& ref, const Descriptor& cand) {
  RequireComparable(ref, cand);
  if (ref.nodes[0] == cand.nodes[0]) return 0;
  return ref.names[0] == cand.names[0] ? 1 : 2;
}

std::vector<Recommendation> EnumerateCandidates(const TableModel& model,
                                                const TableUnit& unit,
                                                Mechanism mechanism) {
  if (unit.row_locator.sequences.size() != 1 ||
      unit.col_locator.sequences.size() != 1) {
    throw Error(ErrorCode::kNoRecommendation,
                "the selection " + unit.row_locator.ToString() + " x " +
                    unit.col_locator.ToString() +
                    " is not within a single subtree on both axes");
  }
  struct AxisCandidate {
    LeafRange range;
    int priority;
  };
  auto candidates = [&](AxisKind axis, const Locator& locator,
                        std::size_t extent) {
    Descriptor ref = DescriptorOf(model, axis, locator);
    AxisIndex index(model.axis(axis));
    std::vector<AxisCandidate> out;
    for (int n : index.NodesAtLevel(ref.level)) {
      const auto& e = index.at(n);
      if (e.leaf_count() != extent) continue;
      Descriptor cand{axis, {e.node->id}, {e.name()}, ref.level};
      out.push_back({{e.leaf_begin, e.leaf_end},
                     Priority(mechanism, model, ref, cand)});
    }
    return out;
  };
  auto rows = candidates(AxisKind::kRow, unit.row_locator, unit.block.rows());
  auto cols = candidates(AxisKind::kCol, unit.col_locator, unit.block.cols());
  std::vector<Recommendation> out;
  out.reserve(rows.size() * cols.size());
  for (const auto& r : rows) {
    for (const auto& c : cols) {
      Block b{r.range.begin, r.range.end, c.range.begin, c.range.end};
      out.push_back({MakeTableUnit(model, b), r.priority, c.priority});
    }
  }
  return out;
}

std::vector<Recommendation> Recommend(const TableModel& model,
                                      const TableUnit& unit,
                                      Mechanism mechanism, PriorityRange rows,
                                      PriorityRange cols) {
  auto all = EnumerateCandidates(model, unit, mechanism);
  std::vector<Recommendation> out;
  for (auto& rec : all) {
    if (rows.Contains(rec.row_priority) && cols.Contains(rec.col_priority)) {
      out.push_back(std::move(rec));
    }
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.row_priority, a.col_priority, a.unit.block.row_start,
                    a.unit.block.col_start) <
           std::tie(b.row_priority, b.col_priority, b.unit.block.row_start,
                    b.unit.block.col_start);
  });
  return out;
}

nlohmann::json ToJson(const Recommendation& rec) {
  nlohmann::json j = ToJson(rec.unit);
  j["row_priority"] = rec.row_priority;
  j["col_priority"] = rec.col_priority;
  return j;
}

}  // namespace htable
