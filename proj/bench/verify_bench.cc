// Copyright 2026 The c72lab Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <benchmark/benchmark.h>
#include <omp.h>

#include <random>

#include "c72/generators.h"
#include "c72/oracle.h"
#include "c72/simulate.h"
#include "c72/verify.h"

namespace c72 {
namespace {

const Circuit& adder() {
  static const Circuit c = kogge_stone(8);
  return c;
}

const Circuit& array_pipeline() {
  static const Circuit c = pipeline(8, compressor72_proposed());
  return c;
}

void BM_ReferenceEvaluate(benchmark::State& state) {
  const Circuit& c = array_pipeline();
  std::mt19937_64 rng(1);
  Bits in(c.inputs().size());
  for (auto _ : state) {
    for (std::uint8_t& b : in) b = rng() & 1;
    benchmark::DoNotOptimize(evaluate(c, in));
  }
  state.SetItemsProcessed(state.iterations());
}
BENCHMARK(BM_ReferenceEvaluate);

void BM_LaneEvaluate(benchmark::State& state) {
  const Circuit& c = array_pipeline();
  std::mt19937_64 rng(1);
  std::vector<std::uint64_t> in(c.inputs().size());
  std::vector<std::uint64_t> out(c.outputs().size());
  std::vector<std::uint64_t> scratch;
  for (auto _ : state) {
    for (std::uint64_t& w : in) w = rng();
    evaluate_lanes(c, in, out, scratch);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetItemsProcessed(state.iterations() * 64);
}
BENCHMARK(BM_LaneEvaluate);

void BM_VerifyExhaustiveSerial(benchmark::State& state) {
  const Contract k = make_contract("adder", adder());
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        verify_exhaustive(adder(), k, Execution::kSerial).passed());
  }
  state.SetItemsProcessed(state.iterations() * (1 << 17));
}
BENCHMARK(BM_VerifyExhaustiveSerial)->Unit(benchmark::kMillisecond);

void BM_VerifyExhaustiveParallel(benchmark::State& state) {
  const Contract k = make_contract("adder", adder());
  omp_set_num_threads(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        verify_exhaustive(adder(), k, Execution::kParallel).passed());
  }
  state.SetItemsProcessed(state.iterations() * (1 << 17));
}
BENCHMARK(BM_VerifyExhaustiveParallel)
    ->DenseRange(1, 4)
    ->Unit(benchmark::kMillisecond);

void BM_VerifyRandomPipeline(benchmark::State& state) {
  const Contract k = make_contract("array-sum", array_pipeline());
  const Execution exec =
      state.range(0) == 0 ? Execution::kSerial : Execution::kParallel;
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        verify_random(array_pipeline(), k, 1, 100000, exec).passed());
  }
  state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK(BM_VerifyRandomPipeline)
    ->Arg(0)
    ->Arg(1)
    ->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace c72

BENCHMARK_MAIN();
