// Copyright 2026 The entqc Authors
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

#include "entqc/channel.hpp"
#include "entqc/entanglement.hpp"
#include "entqc/sweeps.hpp"

namespace {

using entqc::Execution;

Execution mode(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void BM_TeleportSweep(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(entqc::teleport_sweep(100, 1, mode(state)));
}
BENCHMARK(BM_TeleportSweep)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_InvarianceSweep(benchmark::State& state) {
  const auto spec = *entqc::builtin_channel("bell-transformed").spec;
  for (auto _ : state) benchmark::DoNotOptimize(entqc::invariance_sweep(spec, 20, 1, mode(state)));
}
BENCHMARK(BM_InvarianceSweep)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_MinimizeWitness(benchmark::State& state) {
  const auto channel = entqc::builtin_channel("bell-transformed").state;
  const auto rho = entqc::reduced_density(channel, std::array<std::string, 3>{"A1", "A2", "B1"});
  entqc::WitnessOptions options;
  options.restarts = 16;
  options.execution = mode(state);
  for (auto _ : state) benchmark::DoNotOptimize(entqc::minimize_witness(rho, options));
}
BENCHMARK(BM_MinimizeWitness)->ArgName("parallel")->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
