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

#include "fixture.h"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace htable::testing {
namespace {

struct City {
  double spr2020, aut2020, spr2021, aut2021;
};

constexpr City kCities[] = {
    {120, 98, 125, 104}, {131, 119, 140, 122}, {87, 76, 90, 81},
    {143, 128, 150, 133}, {112, 95, 118, 99},  {64, 58, 69, 61},
    {121, 107, 127, 111}, {55, 49, 57, 52},
};

HeadingAxis Rows() {
  HeadingAxis axis;
  axis.roots = {
      Node("Asia", {Node("CHN", {Node("PEK"), Node("SHA")}),
                    Node("JPN", {Node("OSA"), Node("TKY")})}),
      Node("Europe", {Node("FRA", {Node("PAR"), Node("MRS")}),
                      Node("GBR", {Node("LON"), Node("LIV")})}),
  };
  axis.depth = 3;
  axis.level_names = {"region", "country", "city"};
  return axis;
}

HeadingAxis Cols(bool with_total) {
  auto seasons = [&] {
    std::vector<HeadingNode> out;
    if (with_total) {
      HeadingNode total;
      total.label = Label::Derived(Stat::kSum);
      out.push_back(total);
    }
    out.push_back(Node("spr"));
    out.push_back(Node("aut"));
    return out;
  };
  HeadingAxis axis;
  axis.roots = {Node("2020", seasons()), Node("2021", seasons())};
  axis.depth = 2;
  axis.level_names = {"year", "season"};
  return axis;
}

TableModel Build(bool with_total) {
  const std::size_t per_year = with_total ? 3 : 2;
  ValueGrid e(8, 2 * per_year);
  for (std::size_t r = 0; r < 8; ++r) {
    const City& c = kCities[r];
    const double v[2][2] = {{c.spr2020, c.aut2020}, {c.spr2021, c.aut2021}};
    for (std::size_t y = 0; y < 2; ++y) {
      std::size_t col = y * per_year;
      if (with_total) e(r, col++) = Value::Number(v[y][0] + v[y][1]);
      e(r, col++) = Value::Number(v[y][0]);
      e(r, col) = Value::Number(v[y][1]);
    }
  }
  return MakeModel(Rows(), Cols(with_total), std::move(e));
}

}  // namespace

TableModel SeasonalFixture() { return Build(true); }
TableModel StackedSeasonalFixture() { return Build(false); }

std::string DataPath(const std::string& name) {
  return std::string(HTABLE_TEST_DATA_DIR) + "/" + name;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace htable::testing
