// Copyright 2026 The stcvrp Authors
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

#include "stcvrp/ga.h"
#include "stcvrp/generator.h"

namespace stcvrp {
namespace {

// Cost of one generation on top of initialization.
void BM_GaGenerations(benchmark::State& state) {
  GeneratorSpec spec;
  spec.n_tasks = static_cast<int>(state.range(0));
  spec.k_max = 5;
  const Instance inst = Generate(spec);
  GaConfig config = DefaultGaConfig(spec.n_tasks);
  config.max_generations = static_cast<int>(state.range(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(Solve(inst, config).best_makespan);
  }
}
BENCHMARK(BM_GaGenerations)
    ->Args({50, 0})
    ->Args({50, 20})
    ->Args({200, 0})
    ->Args({200, 20})
    ->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace stcvrp
