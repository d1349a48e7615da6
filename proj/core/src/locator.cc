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

#include "htable/locator.h"

#include <algorithm>

#include "htable/axis_index.h"
#include "htable/error.h"

namespace htable {
namespace {

constexpr const char* kWildcard = "*";

// Flat indices of every node at level labels.size() whose path matches.
// Returns the index of the first unmatched element through `failed_at`.
std::vector<int> MatchPrefix(const AxisIndex& index,
                             const std::vector<std::string>& labels,
                             std::size_t& failed_at) {
  std::vector<int> frontier;
  for (int r : index.roots()) {
    if (index.at(r).name() == labels[0]) frontier.push_back(r);
  }
  if (frontier.empty()) {
    failed_at = 0;
    return {};
  }
  for (std::size_t k = 1; k < labels.size(); ++k) {
    std::vector<int> next;
    for (int n : frontier) {
      for (int c : index.at(n).children) {
        if (index.at(c).name() == labels[k]) next.push_back(c);
      }
    }
    if (next.empty()) {
      failed_at = k;
      return {};
    }
    frontier = std::move(next);
  }
  return frontier;
}

void CoverRange(const AxisIndex& index, int node, std::size_t begin,
                std::size_t end, Locator& out) {
  const auto& e = index.at(node);
  if (e.leaf_end <= begin || e.leaf_begin >= end) return;
  if (e.leaf_begin >= begin && e.leaf_end <= end) {
    LabelSequence seq;
    if (e.leaf_count() == 1) {
      seq.labels = index.PathNames(index.leaf(e.leaf_begin));
    } else {
      seq.labels = index.PathNames(node);
      seq.wildcard_tail = true;
    }
    out.sequences.push_back(std::move(seq));
    return;
  }
  for (int c : e.children) CoverRange(index, c, begin, end, out);
}

}  // namespace

std::string LabelSequence::ToString() const {
  std::string out = "(";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i) out += ",";
    out += labels[i];
  }
  if (wildcard_tail) out += labels.empty() ? "*" : ",*";
  return out + ")";
}

std::string Locator::ToString() const {
  std::string out = "[";
  for (std::size_t i = 0; i < sequences.size(); ++i) {
    if (i) out += ",";
    out += sequences[i].ToString();
  }
  return out + "]";
}

std::vector<LabelSequence> LeafSequences(const HeadingAxis& axis) {
  AxisIndex index(axis);
  std::vector<LabelSequence> out;
  out.reserve(index.leaf_count());
  for (std::size_t i = 0; i < index.leaf_count(); ++i) {
    out.push_back(LabelSequence{index.PathNames(index.leaf(i)), false});
  }
  return out;
}

LeafRange ResolveAxisLocator(const HeadingAxis& axis, const Locator& locator) {
  if (locator.sequences.empty()) {
    throw Error(ErrorCode::kInvalidLocator, "locator has no sequences");
  }
  AxisIndex index(axis);
  std::vector<bool> hit(index.leaf_count(), false);
  for (const auto& seq : locator.sequences) {
    if (seq.labels.empty()) {
      throw Error(ErrorCode::kInvalidLocator,
                  "sequence " + seq.ToString() + " has no labels");
    }
    for (const auto& l : seq.labels) {
      if (l == kWildcard) {
        throw Error(ErrorCode::kInvalidLocator,
                    "wildcard may only end a sequence: " + seq.ToString());
      }
    }
    const auto n = seq.labels.size();
    if (!seq.wildcard_tail && n != static_cast<std::size_t>(axis.depth)) {
      throw Error(ErrorCode::kInvalidLocator,
                  "sequence " + seq.ToString() + " has " + std::to_string(n) +
                      " labels but the axis has " +
                      std::to_string(axis.depth) + " levels");
    }
    if (n > static_cast<std::size_t>(axis.depth)) {
      throw Error(ErrorCode::kInvalidLocator,
                  "sequence " + seq.ToString() + " is deeper than the axis");
    }
    std::size_t failed_at = 0;
    auto matches = MatchPrefix(index, seq.labels, failed_at);
    if (matches.empty()) {
      throw Error(ErrorCode::kUnknownLabel,
                  "no heading '" + seq.labels[failed_at] + "' at level " +
                      std::to_string(failed_at + 1) + " for " + seq.ToString(),
                  {{"sequence", ToJson(seq)}, {"element", failed_at}});
    }
    if (!seq.wildcard_tail && matches.size() > 1) {
      throw Error(ErrorCode::kAmbiguousSequence,
                  seq.ToString() + " matches " +
                      std::to_string(matches.size()) + " distinct leaves",
                  {{"sequence", ToJson(seq)}});
    }
    for (int m : matches) {
      const auto& e = index.at(m);
      for (std::size_t leaf = e.leaf_begin; leaf < e.leaf_end; ++leaf) {
        if (hit[leaf]) {
          throw Error(ErrorCode::kInvalidLocator,
                      "sequences overlap at leaf " + std::to_string(leaf) +
                          " in " + locator.ToString());
        }
        hit[leaf] = true;
      }
    }
  }
  auto first = std::find(hit.begin(), hit.end(), true);
  auto last = std::find(first, hit.end(), false);
  if (std::find(last, hit.end(), true) != hit.end()) {
    throw Error(ErrorCode::kNonContiguous,
                locator.ToString() + " does not address a contiguous run",
                {{"locator", ToJson(locator)}});
  }
  return LeafRange{static_cast<std::size_t>(first - hit.begin()),
                   static_cast<std::size_t>(last - hit.begin())};
}

Block ResolveLocator(const TableModel& model, const Locator& row,
                     const Locator& col) {
  LeafRange r = ResolveAxisLocator(model.row_axis, row);
  LeafRange c = ResolveAxisLocator(model.col_axis, col);
  return Block{r.begin, r.end, c.begin, c.end};
}

Locator AxisLocatorOf(const HeadingAxis& axis, std::size_t begin,
                      std::size_t end) {
  AxisIndex index(axis);
  if (begin >= end || end > index.leaf_count()) {
    throw Error(ErrorCode::kInvalidLocator,
                "leaf range [" + std::to_string(begin) + "," +
                    std::to_string(end) + ") is outside the axis");
  }
  Locator out;
  for (int r : index.roots()) CoverRange(index, r, begin, end, out);
  return out;
}

std::pair<Locator, Locator> LocatorOf(const TableModel& model,
                                      const Block& block) {
  return {AxisLocatorOf(model.row_axis, block.row_start, block.row_end),
          AxisLocatorOf(model.col_axis, block.col_start, block.col_end)};
}

TableUnit MakeTableUnit(const TableModel& model, const Block& block) {
  auto [row, col] = LocatorOf(model, block);
  TableUnit unit;
  unit.block = block;
  unit.row_single_subtree = row.sequences.size() == 1;
  unit.col_single_subtree = col.sequences.size() == 1;
  unit.row_locator = std::move(row);
  unit.col_locator = std::move(col);
  return unit;
}

TableUnit ResolveTableUnit(const TableModel& model, const Locator& row,
                           const Locator& col) {
  return MakeTableUnit(model, ResolveLocator(model, row, col));
}

nlohmann::json ToJson(const LabelSequence& seq) {
  nlohmann::json j = seq.labels;
  if (seq.wildcard_tail) j.push_back(kWildcard);
  return j;
}

nlohmann::json ToJson(const Locator& locator) {
  nlohmann::json j = nlohmann::json::array();
  for (const auto& s : locator.sequences) j.push_back(ToJson(s));
  return j;
}

nlohmann::json ToJson(const Block& block) {
  return {{"row_start", block.row_start},
          {"row_end", block.row_end},
          {"col_start", block.col_start},
          {"col_end", block.col_end}};
}

nlohmann::json ToJson(const TableUnit& unit) {
  return {{"block", ToJson(unit.block)},
          {"row_locator", ToJson(unit.row_locator)},
          {"col_locator", ToJson(unit.col_locator)},
          {"row_single_subtree", unit.row_single_subtree},
          {"col_single_subtree", unit.col_single_subtree}};
}

LabelSequence SequenceFromJson(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) {
    throw Error(ErrorCode::kInvalidLocator,
                "a label sequence must be a non-empty array of strings");
  }
  LabelSequence seq;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_string()) {
      throw Error(ErrorCode::kInvalidLocator,
                  "label sequence elements must be strings");
    }
    const auto& s = j[i].get_ref<const std::string&>();
    if (s == kWildcard) {
      if (i + 1 != j.size()) {
        throw Error(ErrorCode::kInvalidLocator,
                    "wildcard may only end a sequence");
      }
      seq.wildcard_tail = true;
    } else {
      seq.labels.push_back(s);
    }
  }
  if (seq.labels.empty()) {
    throw Error(ErrorCode::kInvalidLocator,
                "a label sequence needs at least one label before '*'");
  }
  return seq;
}

Locator LocatorFromJson(const nlohmann::json& j) {
  if (!j.is_array() || j.empty()) {
    throw Error(ErrorCode::kInvalidLocator,
                "a locator must be a non-empty array of label sequences");
  }
  Locator loc;
  for (const auto& s : j) loc.sequences.push_back(SequenceFromJson(s));
  return loc;
}

Block BlockFromJson(const nlohmann::json& j) {
  try {
    return Block{j.at("row_start").get<std::size_t>(),
                 j.at("row_end").get<std::size_t>(),
                 j.at("col_start").get<std::size_t>(),
                 j.at("col_end").get<std::size_t>()};
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kInvalidLocator,
                std::string("malformed block: ") + e.what());
  }
}

TableUnit UnitFromJson(const TableModel& model, const nlohmann::json& j) {
  if (!j.is_object()) {
    throw Error(ErrorCode::kInvalidLocator, "a unit must be a JSON object");
  }
  if (j.contains("block")) {
    Block b = BlockFromJson(j["block"]);
    if (b.row_start >= b.row_end || b.col_start >= b.col_end ||
        b.row_end > model.entries.rows() || b.col_end > model.entries.cols()) {
      throw Error(ErrorCode::kInvalidLocator, "block is empty or out of range",
                  {{"block", j["block"]}});
    }
    return MakeTableUnit(model, b);
  }
  if (!j.contains("row") || !j.contains("col")) {
    throw Error(ErrorCode::kInvalidLocator,
                "a unit needs \"row\" and \"col\" locators or a \"block\"");
  }
  return ResolveTableUnit(model, LocatorFromJson(j["row"]),
                          LocatorFromJson(j["col"]));
}

}  // namespace htable
