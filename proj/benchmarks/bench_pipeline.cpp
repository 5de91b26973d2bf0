// Copyright 2026 The infoweight Authors.
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

#include <string>

#include "infoweight/moments.hpp"
#include "infoweight/pipeline.hpp"
#include "infoweight/scenario_sim.hpp"

namespace {

using namespace infoweight;

// M alternatives x R attributes, `count` samples per pair.
ScenarioSpec Grid(std::size_t m, std::size_t r, std::size_t count) {
  ScenarioSpec spec;
  spec.seed = 11;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      spec.pairs.push_back({"alt" + std::to_string(i), "attr" + std::to_string(j),
                            0.1 * static_cast<double>(i + j), 0.01 * static_cast<double>(1 + i * r + j),
                            count});
    }
  }
  return spec;
}

void BM_GenerateSamples(benchmark::State& state) {
  const ScenarioSpec spec = Grid(6, 5, static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(GenerateSamples(spec));
  state.SetItemsProcessed(state.iterations() * 30 * state.range(0));
}
BENCHMARK(BM_GenerateSamples)->Arg(300)->Arg(3000);

void BM_ComputeMoments(benchmark::State& state) {
  const SampleSet samples = GenerateSamples(Grid(6, 5, static_cast<std::size_t>(state.range(0))));
  for (auto _ : state) benchmark::DoNotOptimize(ComputeMoments(samples));
  state.SetItemsProcessed(state.iterations() * 30 * state.range(0));
}
BENCHMARK(BM_ComputeMoments)->Arg(300)->Arg(3000);

void BM_RunPipeline(benchmark::State& state) {
  const SampleSet samples = GenerateSamples(Grid(6, 5, 300));
  EngineConfig config;
  config.igd_negative_policy = IgdNegativePolicy::kMinShift;
  const Method methods[] = {Method::kIcw, Method::kIgdw};
  for (auto _ : state) benchmark::DoNotOptimize(RunPipeline(samples, nullptr, config, methods));
}
BENCHMARK(BM_RunPipeline);

}  // namespace

BENCHMARK_MAIN();
