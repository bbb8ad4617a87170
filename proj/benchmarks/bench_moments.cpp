// Copyright 2026 The Spectral Markov Authors
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

#include "spectral_markov/graph.hpp"
#include "spectral_markov/moments.hpp"

namespace sm = spectral_markov;

static void BM_BetaFormula(benchmark::State& state) {
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sm::beta_formula(k, 1.0, 1.0));
}
BENCHMARK(BM_BetaFormula)->DenseRange(4, 12, 4);

static void BM_BetaGwMc(benchmark::State& state) {
  const sm::Rng master(6);
  const auto k = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sm::beta_gw_mc(k, 1.0, 1.0, 100000, master));
  state.SetItemsProcessed(state.iterations() * 100000);
}
BENCHMARK(BM_BetaGwMc)->Arg(2)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_BetaEmpirical(benchmark::State& state) {
  sm::Rng rng(7);
  const auto g = sm::sample_er(static_cast<std::size_t>(state.range(0)), 1.0, rng);
  for (auto _ : state) benchmark::DoNotOptimize(sm::beta_empirical(g, 1.0, 8));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_BetaEmpirical)->Arg(1000)->Arg(5000)->Unit(benchmark::kMillisecond);
