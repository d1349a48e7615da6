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

#ifndef HTABLE_GRID_DOC_H_
#define HTABLE_GRID_DOC_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "htable/model.h"

namespace htable {

struct GridCell {
  std::size_t row = 0;
  std::size_t col = 0;
  std::size_t row_span = 1;
  std::size_t col_span = 1;
  std::string text;
};

// A spreadsheet-like grid with explicit merged spans. The top
// `n_heading_rows` rows hold the column headings and the left
// `n_heading_cols` columns hold the row headings; the remaining body cells are
// 1x1 entries.
struct GridDoc {
  std::size_t n_heading_rows = 0;
  std::size_t n_heading_cols = 0;
  std::size_t width = 0;
  std::size_t height = 0;
  std::vector<GridCell> cells;
  // Optional level names; empty means defaults.
  std::vector<std::string> row_level_names;
  std::vector<std::string> col_level_names;
};

GridDoc GridDocFromJson(const nlohmann::json& j);
nlohmann::json ToJson(const GridDoc& doc);

// Builds a model from the grid: merged heading spans become parents of the
// heading cells nested under them. A heading cell merged across several
// heading rows (or columns) becomes a chain of same-named nodes. "&" in a
// heading denotes a derived sum label. With no heading rows (columns) the
// column (row) axis is synthesized as one level "c1".."cn" ("r1".."rn").
//
// Throws kOverlapError, kOrphanHeading or kShapeError.
TableModel ParseGrid(const GridDoc& doc);

// CSV-plus-merge-list adapter. Each merge keeps the text of its top-left cell;
// cells it covers are dropped.
struct MergeRange {
  std::size_t row = 0;
  std::size_t col = 0;
  std::size_t row_span = 1;
  std::size_t col_span = 1;
};

std::vector<std::vector<std::string>> ParseCsv(std::string_view text);
GridDoc GridDocFromCsv(std::string_view csv,
                       const std::vector<MergeRange>& merges,
                       std::size_t n_heading_rows,
                       std::size_t n_heading_cols);
std::vector<MergeRange> MergesFromJson(const nlohmann::json& j);

}  // namespace htable

#endif  // HTABLE_GRID_DOC_H_
