// Copyright 2026 The qcat Authors
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

#include "qcat/experiments.h"

namespace {

using qcat::AutomatonSpec;
using qcat::GlobalState;
using qcat::LocalChannelParams;
using qcat::Topology;

AutomatonSpec make_spec(std::size_t n) {
  return AutomatonSpec::make(
      Topology::ring(n), LocalChannelParams::make(0.8, 0.3, 0.4, 0.0, 1.0),
      {1.0, 0.0, 0.0});
}

void BM_AssembleLayers(benchmark::State& state) {
  const auto spec = make_spec(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcat::assemble(spec));
  }
}
BENCHMARK(BM_AssembleLayers)->Arg(8)->Arg(32)->Arg(64);

void BM_Step(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const auto automaton = qcat::assemble(make_spec(n));
  GlobalState rho = GlobalState::embed_sender_state(0.6, 0.8, 1, n);
  for (auto _ : state) {
    rho = qcat::step(rho, automaton);
    benchmark::DoNotOptimize(rho);
  }
}
BENCHMARK(BM_Step)->Arg(8)->Arg(16)->Arg(32)->Arg(64);

void BM_MonteCarloRun(benchmark::State& state) {
  qcat::ExperimentConfig config;
  config.topology = Topology::chain(8);
  config.p = config.q = 0.5;
  config.phi2 = 3.14159265358979323846;
  config.trials = static_cast<std::size_t>(state.range(0));
  config.t_max = 50;
  for (auto _ : state) {
    benchmark::DoNotOptimize(qcat::run_experiment(config, 1));
  }
}
BENCHMARK(BM_MonteCarloRun)->Arg(16)->Arg(64)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
