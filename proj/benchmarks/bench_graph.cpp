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

namespace sm = spectral_markov;

static void BM_SampleEr(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  sm::Rng rng(1);
  for (auto _ : state) benchmark::DoNotOptimize(sm::sample_er(n, 2.0, rng));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleEr)->RangeMultiplier(10)->Range(1000, 100000);

static void BM_SampleSuperposition(benchmark::State& state) {
  sm::Rng rng(2);
  for (auto _ : state) benchmark::DoNotOptimize(sm::sample_superposition(100, 2.0, rng));
}
BENCHMARK(BM_SampleSuperposition);

static void BM_SampleGwTree(benchmark::State& state) {
  sm::Rng rng(3);
  const auto depth = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(sm::sample_gw_tree(2.0, depth, rng));
}
BENCHMARK(BM_SampleGwTree)->DenseRange(2, 5);
