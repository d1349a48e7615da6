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

#include "htable/grid_doc.h"

#include <functional>
#include <string>

#include "htable/error.h"
#include "json_util.h"

namespace htable {
namespace {

using internal::Array;
using internal::Child;
using internal::Count;
using internal::Field;
using internal::SchemaFail;

// Extent of a cell along the heading's level dimension and its position
// dimension.
struct Extent {
  std::size_t level_begin, level_end, pos_begin, pos_end;
};

struct TempNode {
  Label label;
  std::vector<int> children;
  Extent extent;
};

HeadingNode Materialize(const std::vector<TempNode>& temps, int idx) {
  HeadingNode node;
  node.label = temps[static_cast<std::size_t>(idx)].label;
  for (int c : temps[static_cast<std::size_t>(idx)].children) {
    node.children.push_back(Materialize(temps, c));
  }
  return node;
}

Label HeadingLabel(const std::string& text, std::size_t row, std::size_t col) {
  if (text.empty()) {
    throw Error(ErrorCode::kShapeError,
                "empty heading cell at (" + std::to_string(row) + "," +
                    std::to_string(col) + ")",
                {{"row", row}, {"col", col}});
  }
  if (text == "&") return Label::Derived(Stat::kSum);
  return Label::Plain(text);
}

// Builds one heading forest. `cell_at(level, pos)` returns the index of the
// cell covering that heading position; `extent_of` maps a cell to its
// (level, position) extents.
std::vector<HeadingNode> BuildForest(
    const GridDoc& doc, std::size_t levels, std::size_t pos_begin,
    std::size_t pos_end,
    const std::function<int(std::size_t, std::size_t)>& cell_at,
    const std::function<Extent(const GridCell&)>& extent_of) {
  std::vector<TempNode> temps;
  std::vector<int> roots;
  std::vector<std::vector<int>> node_at(
      levels, std::vector<int>(pos_end - pos_begin, -1));
  for (std::size_t level = 0; level < levels; ++level) {
    std::size_t pos = pos_begin;
    while (pos < pos_end) {
      const GridCell& cell = doc.cells[static_cast<std::size_t>(cell_at(level, pos))];
      Extent ext = extent_of(cell);
      if (level + 1 == levels && ext.pos_end - ext.pos_begin != 1) {
        throw Error(ErrorCode::kShapeError,
                    "bottom heading cell '" + cell.text + "' at (" +
                        std::to_string(cell.row) + "," +
                        std::to_string(cell.col) +
                        ") spans more than one body line",
                    {{"row", cell.row}, {"col", cell.col}});
      }
      int idx = static_cast<int>(temps.size());
      temps.push_back({HeadingLabel(cell.text, cell.row, cell.col), {}, ext});
      if (level == 0) {
        roots.push_back(idx);
      } else {
        int parent = node_at[level - 1][pos - pos_begin];
        const Extent& pe = temps[static_cast<std::size_t>(parent)].extent;
        if (ext.pos_begin < pe.pos_begin || ext.pos_end > pe.pos_end) {
          throw Error(ErrorCode::kOrphanHeading,
                      "heading cell '" + cell.text + "' at (" +
                          std::to_string(cell.row) + "," +
                          std::to_string(cell.col) +
                          ") is not nested inside a single parent span",
                      {{"row", cell.row}, {"col", cell.col}});
        }
        temps[static_cast<std::size_t>(parent)].children.push_back(idx);
      }
      for (std::size_t p = ext.pos_begin; p < ext.pos_end; ++p) {
        node_at[level][p - pos_begin] = idx;
      }
      pos = ext.pos_end;
    }
  }
  std::vector<HeadingNode> out;
  for (int r : roots) out.push_back(Materialize(temps, r));
  return out;
}

HeadingAxis SynthesizedAxis(const char* prefix, std::size_t n) {
  HeadingAxis axis;
  axis.depth = 1;
  for (std::size_t i = 0; i < n; ++i) {
    axis.roots.push_back(Node(prefix + std::to_string(i + 1)));
  }
  return axis;
}

std::vector<std::string> NamesFromJson(const nlohmann::json& j,
                                       const std::string& pointer) {
  std::vector<std::string> out;
  Array(j, pointer);
  for (std::size_t i = 0; i < j.size(); ++i) {
    out.push_back(internal::String(j[i], Child(pointer, i)));
  }
  return out;
}

}  // namespace

GridDoc GridDocFromJson(const nlohmann::json& j) {
  GridDoc doc;
  doc.n_heading_rows = Count(Field(j, "n_heading_rows", ""), "/n_heading_rows");
  doc.n_heading_cols = Count(Field(j, "n_heading_cols", ""), "/n_heading_cols");
  doc.width = Count(Field(j, "width", ""), "/width");
  doc.height = Count(Field(j, "height", ""), "/height");
  const auto& cells = Array(Field(j, "cells", ""), "/cells");
  for (std::size_t i = 0; i < cells.size(); ++i) {
    const std::string ptr = Child("/cells", i);
    const auto& c = cells[i];
    GridCell cell;
    cell.row = Count(Field(c, "row", ptr), Child(ptr, "row"));
    cell.col = Count(Field(c, "col", ptr), Child(ptr, "col"));
    if (c.contains("row_span")) {
      cell.row_span = Count(c["row_span"], Child(ptr, "row_span"));
    }
    if (c.contains("col_span")) {
      cell.col_span = Count(c["col_span"], Child(ptr, "col_span"));
    }
    if (c.contains("text")) {
      const auto& t = c["text"];
      if (t.is_string()) {
        cell.text = t.get<std::string>();
      } else if (t.is_number()) {
        cell.text = t.dump();
      } else if (!t.is_null()) {
        SchemaFail(Child(ptr, "text"), "expected a string, number or null");
      }
    }
    doc.cells.push_back(std::move(cell));
  }
  if (j.contains("level_names")) {
    const auto& ln = j["level_names"];
    if (!ln.is_object()) SchemaFail("/level_names", "expected an object");
    if (ln.contains("row")) {
      doc.row_level_names = NamesFromJson(ln["row"], "/level_names/row");
    }
    if (ln.contains("col")) {
      doc.col_level_names = NamesFromJson(ln["col"], "/level_names/col");
    }
  }
  return doc;
}

nlohmann::json ToJson(const GridDoc& doc) {
  nlohmann::json cells = nlohmann::json::array();
  for (const auto& c : doc.cells) {
    nlohmann::json cell{{"row", c.row}, {"col", c.col}, {"text", c.text}};
    if (c.row_span != 1) cell["row_span"] = c.row_span;
    if (c.col_span != 1) cell["col_span"] = c.col_span;
    cells.push_back(std::move(cell));
  }
  nlohmann::json j{{"n_heading_rows", doc.n_heading_rows},
                   {"n_heading_cols", doc.n_heading_cols},
                   {"width", doc.width},
                   {"height", doc.height},
                   {"cells", std::move(cells)}};
  if (!doc.row_level_names.empty() || !doc.col_level_names.empty()) {
    j["level_names"] = {{"row", doc.row_level_names},
                        {"col", doc.col_level_names}};
  }
  return j;
}

TableModel ParseGrid(const GridDoc& doc) {
  const std::size_t H = doc.height, W = doc.width;
  const std::size_t hr = doc.n_heading_rows, hc = doc.n_heading_cols;
  if (hr >= H || hc >= W) {
    throw Error(ErrorCode::kShapeError,
                "grid " + std::to_string(H) + "x" + std::to_string(W) +
                    " leaves no body region below " + std::to_string(hr) +
                    " heading rows and right of " + std::to_string(hc) +
                    " heading columns");
  }
  std::vector<int> occ(H * W, -1);
  for (std::size_t i = 0; i < doc.cells.size(); ++i) {
    const auto& c = doc.cells[i];
    if (c.row_span == 0 || c.col_span == 0 || c.row + c.row_span > H ||
        c.col + c.col_span > W) {
      throw Error(ErrorCode::kShapeError,
                  "cell at (" + std::to_string(c.row) + "," +
                      std::to_string(c.col) + ") lies outside the grid",
                  {{"row", c.row}, {"col", c.col}});
    }
    bool row_straddles = c.row < hr && c.row + c.row_span > hr;
    bool col_straddles = c.col < hc && c.col + c.col_span > hc;
    if (row_straddles || col_straddles) {
      throw Error(ErrorCode::kShapeError,
                  "cell at (" + std::to_string(c.row) + "," +
                      std::to_string(c.col) +
                      ") straddles the heading/body boundary",
                  {{"row", c.row}, {"col", c.col}});
    }
    for (std::size_t r = c.row; r < c.row + c.row_span; ++r) {
      for (std::size_t k = c.col; k < c.col + c.col_span; ++k) {
        int& slot = occ[r * W + k];
        if (slot != -1) {
          throw Error(ErrorCode::kOverlapError,
                      "cells overlap at (" + std::to_string(r) + "," +
                          std::to_string(k) + ")",
                      {{"row", r}, {"col", k}});
        }
        slot = static_cast<int>(i);
      }
    }
  }
  for (std::size_t r = 0; r < H; ++r) {
    for (std::size_t k = 0; k < W; ++k) {
      if (occ[r * W + k] == -1) {
        throw Error(ErrorCode::kShapeError,
                    "grid position (" + std::to_string(r) + "," +
                        std::to_string(k) + ") is not covered by any cell",
                    {{"row", r}, {"col", k}});
      }
    }
  }
  const std::size_t body_rows = H - hr, body_cols = W - hc;
  ValueGrid entries(body_rows, body_cols);
  for (std::size_t r = hr; r < H; ++r) {
    for (std::size_t k = hc; k < W; ++k) {
      const auto& c = doc.cells[static_cast<std::size_t>(occ[r * W + k])];
      if (c.row_span != 1 || c.col_span != 1) {
        throw Error(ErrorCode::kShapeError,
                    "body cell at (" + std::to_string(c.row) + "," +
                        std::to_string(c.col) + ") must not be merged",
                    {{"row", c.row}, {"col", c.col}});
      }
      entries(r - hr, k - hc) = ParseCellText(c.text);
    }
  }

  HeadingAxis cols, rows;
  if (hr == 0) {
    cols = SynthesizedAxis("c", body_cols);
  } else {
    cols.depth = static_cast<int>(hr);
    cols.roots = BuildForest(
        doc, hr, hc, W,
        [&](std::size_t level, std::size_t pos) { return occ[level * W + pos]; },
        [](const GridCell& c) {
          return Extent{c.row, c.row + c.row_span, c.col, c.col + c.col_span};
        });
  }
  if (hc == 0) {
    rows = SynthesizedAxis("r", body_rows);
  } else {
    rows.depth = static_cast<int>(hc);
    rows.roots = BuildForest(
        doc, hc, hr, H,
        [&](std::size_t level, std::size_t pos) { return occ[pos * W + level]; },
        [](const GridCell& c) {
          return Extent{c.col, c.col + c.col_span, c.row, c.row + c.row_span};
        });
  }
  auto apply_names = [](HeadingAxis& axis, const std::vector<std::string>& names,
                        const char* pointer) {
    if (names.empty()) return;
    if (names.size() != static_cast<std::size_t>(axis.depth)) {
      SchemaFail(pointer, "expected " + std::to_string(axis.depth) +
                              " level names, got " +
                              std::to_string(names.size()));
    }
    axis.level_names = names;
  };
  apply_names(rows, doc.row_level_names, "/level_names/row");
  apply_names(cols, doc.col_level_names, "/level_names/col");
  return MakeModel(std::move(rows), std::move(cols), std::move(entries));
}

std::vector<std::vector<std::string>> ParseCsv(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::vector<std::string> row;
  std::string field;
  bool quoted = false, any = false;
  for (std::size_t i = 0; i < text.size(); ++i) {
    char ch = text[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += ch;
      }
      continue;
    }
    any = true;
    if (ch == '"') {
      quoted = true;
    } else if (ch == ',') {
      row.push_back(std::move(field));
      field.clear();
    } else if (ch == '\n' || ch == '\r') {
      if (ch == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
      row.push_back(std::move(field));
      field.clear();
      rows.push_back(std::move(row));
      row.clear();
      any = false;
    } else {
      field += ch;
    }
  }
  if (any || !field.empty() || !row.empty()) {
    row.push_back(std::move(field));
    rows.push_back(std::move(row));
  }
  return rows;
}

GridDoc GridDocFromCsv(std::string_view csv,
                       const std::vector<MergeRange>& merges,
                       std::size_t n_heading_rows,
                       std::size_t n_heading_cols) {
  auto rows = ParseCsv(csv);
  GridDoc doc;
  doc.n_heading_rows = n_heading_rows;
  doc.n_heading_cols = n_heading_cols;
  doc.height = rows.size();
  for (const auto& r : rows) doc.width = std::max(doc.width, r.size());
  auto text_at = [&](std::size_t r, std::size_t c) -> std::string {
    if (r < rows.size() && c < rows[r].size()) return rows[r][c];
    return {};
  };
  std::vector<bool> covered(doc.height * doc.width, false);
  for (const auto& m : merges) {
    if (m.row + m.row_span > doc.height || m.col + m.col_span > doc.width ||
        m.row_span == 0 || m.col_span == 0) {
      throw Error(ErrorCode::kShapeError,
                  "merge at (" + std::to_string(m.row) + "," +
                      std::to_string(m.col) + ") lies outside the CSV grid");
    }
    for (std::size_t r = m.row; r < m.row + m.row_span; ++r) {
      for (std::size_t c = m.col; c < m.col + m.col_span; ++c) {
        if (covered[r * doc.width + c]) {
          throw Error(ErrorCode::kOverlapError,
                      "merges overlap at (" + std::to_string(r) + "," +
                          std::to_string(c) + ")");
        }
        covered[r * doc.width + c] = true;
      }
    }
    doc.cells.push_back(
        {m.row, m.col, m.row_span, m.col_span, text_at(m.row, m.col)});
  }
  for (std::size_t r = 0; r < doc.height; ++r) {
    for (std::size_t c = 0; c < doc.width; ++c) {
      if (!covered[r * doc.width + c]) {
        doc.cells.push_back({r, c, 1, 1, text_at(r, c)});
      }
    }
  }
  return doc;
}

std::vector<MergeRange> MergesFromJson(const nlohmann::json& j) {
  std::vector<MergeRange> out;
  Array(j, "");
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string ptr = Child("", i);
    MergeRange m;
    m.row = Count(Field(j[i], "row", ptr), Child(ptr, "row"));
    m.col = Count(Field(j[i], "col", ptr), Child(ptr, "col"));
    if (j[i].contains("row_span")) {
      m.row_span = Count(j[i]["row_span"], Child(ptr, "row_span"));
    }
    if (j[i].contains("col_span")) {
      m.col_span = Count(j[i]["col_span"], Child(ptr, "col_span"));
    }
    out.push_back(m);
  }
  return out;
}

}  // namespace htable
