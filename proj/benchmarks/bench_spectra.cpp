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
#include "spectral_markov/markov.hpp"
#include "spectral_markov/spectra.hpp"

namespace sm = spectral_markov;

static void BM_KernelSpectrumM(benchmark::State& state) {
  sm::Rng rng(4);
  const auto m = sm::build_M(sm::sample_er(static_cast<std::size_t>(state.range(0)), 2.0, rng), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(sm::kernel_spectrum(m));
}
BENCHMARK(BM_KernelSpectrumM)->Arg(250)->Arg(500)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_PerronPair(benchmark::State& state) {
  sm::Rng rng(5);
  const auto k = sm::build_K(sm::random_connected(static_cast<std::size_t>(state.range(0)), 20, rng), 1.0);
  for (auto _ : state) benchmark::DoNotOptimize(sm::perron_pair(k));
}
BENCHMARK(BM_PerronPair)->Arg(50)->Arg(200);
