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

#ifndef HTABLE_LOCATOR_H_
#define HTABLE_LOCATOR_H_

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "htable/model.h"

namespace htable {

// Path of label names from a root. With `wildcard_tail` the sequence is a
// prefix standing for every leaf below it, written "(Europe,FRA,*)".
struct LabelSequence {
  std::vector<std::string> labels;
  bool wildcard_tail = false;

  std::string ToString() const;
  friend bool operator==(const LabelSequence&, const LabelSequence&) = default;
};

// One or more label sequences on a single axis.
struct Locator {
  std::vector<LabelSequence> sequences;

  std::string ToString() const;
  friend bool operator==(const Locator&, const Locator&) = default;
};

// One full-depth sequence per leaf, in presentation order.
std::vector<LabelSequence> LeafSequences(const HeadingAxis& axis);

struct LeafRange {
  std::size_t begin = 0;
  std::size_t end = 0;
  friend bool operator==(const LeafRange&, const LeafRange&) = default;
};

// Resolves a locator on one axis to the contiguous run of leaves it matches.
// Throws kUnknownLabel, kNonContiguous, kAmbiguousSequence or kInvalidLocator.
LeafRange ResolveAxisLocator(const HeadingAxis& axis, const Locator& locator);
Block ResolveLocator(const TableModel& model, const Locator& row,
                     const Locator& col);

// Minimal locator for leaves [begin, end): every fully covered subtree
// collapses to one wildcard sequence; single-leaf subtrees use the leaf's full
// sequence.
Locator AxisLocatorOf(const HeadingAxis& axis, std::size_t begin,
                      std::size_t end);
std::pair<Locator, Locator> LocatorOf(const TableModel& model,
                                      const Block& block);

// A user-selected cell or block with its canonical locators.
struct TableUnit {
  Block block;
  Locator row_locator;
  Locator col_locator;
  bool row_single_subtree = false;
  bool col_single_subtree = false;

  friend bool operator==(const TableUnit&, const TableUnit&) = default;
};

TableUnit MakeTableUnit(const TableModel& model, const Block& block);
TableUnit ResolveTableUnit(const TableModel& model, const Locator& row,
                           const Locator& col);

// JSON forms: a sequence is an array of names with an optional trailing "*",
// a locator is an array of sequences.
nlohmann::json ToJson(const LabelSequence& seq);
nlohmann::json ToJson(const Locator& locator);
nlohmann::json ToJson(const Block& block);
nlohmann::json ToJson(const TableUnit& unit);
LabelSequence SequenceFromJson(const nlohmann::json& j);
Locator LocatorFromJson(const nlohmann::json& j);
Block BlockFromJson(const nlohmann::json& j);

// Accepts {"row": locator, "col": locator} or {"block": block}; throws
// kInvalidLocator for anything else.
TableUnit UnitFromJson(const TableModel& model, const nlohmann::json& j);

}  // namespace htable

#endif  // HTABLE_LOCATOR_H_
