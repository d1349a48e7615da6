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

#include <benchmark/benchmark.h>

#include "htable/locator.h"
#include "htable/recommend.h"
#include "htable/visgen.h"
#include "random_tables.h"

namespace htable {
namespace {

// The reference unit is the first level-2 subtree on both axes, which has
// n / 10 leaves, so every n x n grid has 100 congruent candidates.
TableUnit FirstSubtree(const TableModel& m) {
  const std::size_t rows = m.entries.rows() / 10;
  const std::size_t cols = m.entries.cols() / 10;
  return MakeTableUnit(m, Block{0, rows, 0, cols});
}

void BM_RecommendTopology(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const TableModel m = testing::GridTable(n, n, 11);
  const TableUnit unit = FirstSubtree(m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Recommend(m, unit, Mechanism::kTopology));
  }
}
BENCHMARK(BM_RecommendTopology)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMicrosecond);

void BM_RecommendName(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const TableModel m = testing::GridTable(n, n, 11);
  const TableUnit unit = FirstSubtree(m);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Recommend(m, unit, Mechanism::kName));
  }
}
BENCHMARK(BM_RecommendName)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMicrosecond);

void BM_RebindHeatmap(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const TableModel m = testing::GridTable(n, n, 11);
  std::vector<TableUnit> units;
  for (const auto& rec : Recommend(m, FirstSubtree(m), Mechanism::kTopology)) {
    units.push_back(rec.unit);
  }
  const VisConfig config = VisConfigFromJson(
      {{"template", "heatmap"},
       {"bindings", {{"x", "x_nominal"}, {"y", "y_nominal"}, {"color", "value"}}}});
  for (auto _ : state) benchmark::DoNotOptimize(RebindAll(m, config, units));
  state.counters["units"] = static_cast<double>(units.size());
}
BENCHMARK(BM_RebindHeatmap)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace htable

BENCHMARK_MAIN();
