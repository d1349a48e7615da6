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

#include "htable/transform.h"
#include "random_tables.h"

namespace htable {
namespace {

// Square grids of n x n leaves; n is the benchmark argument.
TableModel Grid(const benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  return testing::GridTable(n, n, 7);
}

void SetCells(benchmark::State& state) {
  state.SetComplexityN(state.range(0) * state.range(0));
}

void BM_Swap(benchmark::State& state) {
  const TableModel m = Grid(state);
  for (auto _ : state) benchmark::DoNotOptimize(Swap(m, AxisKind::kCol, 2));
  SetCells(state);
}

void BM_TransposeLevel(benchmark::State& state) {
  const TableModel m = Grid(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(TransposeLevel(m, AxisKind::kCol, 3));
  }
  SetCells(state);
}

void BM_TransposeTable(benchmark::State& state) {
  const TableModel m = Grid(state);
  for (auto _ : state) benchmark::DoNotOptimize(TransposeTable(m));
  SetCells(state);
}

void BM_ToLinear(benchmark::State& state) {
  const TableModel m = Grid(state);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ToLinear(m, AxisKind::kCol, 2, Stat::kSum));
  }
  SetCells(state);
}

void BM_ToStacked(benchmark::State& state) {
  const TableModel m = ToLinear(Grid(state), AxisKind::kCol, 2, Stat::kSum);
  for (auto _ : state) benchmark::DoNotOptimize(ToStacked(m, AxisKind::kCol, 2));
  SetCells(state);
}

void BM_Fold(benchmark::State& state) {
  const TableModel m = Grid(state);
  for (auto _ : state) benchmark::DoNotOptimize(Fold(m, 3));
  SetCells(state);
}

void BM_Unfold(benchmark::State& state) {
  const TableModel m = Fold(Grid(state), 3);
  for (auto _ : state) benchmark::DoNotOptimize(Unfold(m, 0, 1, 3));
  SetCells(state);
}

#define HTABLE_GRID_BENCHMARK(fn) \
  BENCHMARK(fn)->Arg(50)->Arg(100)->Arg(200)->Unit(benchmark::kMicrosecond)->Complexity()

HTABLE_GRID_BENCHMARK(BM_Swap);
HTABLE_GRID_BENCHMARK(BM_TransposeLevel);
HTABLE_GRID_BENCHMARK(BM_TransposeTable);
HTABLE_GRID_BENCHMARK(BM_ToLinear);
HTABLE_GRID_BENCHMARK(BM_ToStacked);
HTABLE_GRID_BENCHMARK(BM_Fold);
HTABLE_GRID_BENCHMARK(BM_Unfold);

}  // namespace
}  // namespace htable

BENCHMARK_MAIN();
