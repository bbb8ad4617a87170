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

#pragma once

// Small hand-rolled generators for property tests. Every case derives from
// (seed, case index), so a failure message with both reproduces it.

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "spectral_markov/graph.hpp"
#include "spectral_markov/rng.hpp"

namespace gen {

using spectral_markov::Graph;
using spectral_markov::Rng;

inline std::size_t size_in(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

inline double real_in(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline double pick(Rng& rng, const std::vector<double>& options) {
  return options[size_in(rng, 0, options.size() - 1)];
}

// Any small graph: sparse or dense ER, tree, cycle, or connected with chords.
inline Graph any_graph(Rng& rng, std::size_t max_order = 30) {
  const std::size_t n = size_in(rng, 1, max_order);
  switch (size_in(rng, 0, 4)) {
    case 0:
      return spectral_markov::sample_er(n, real_in(rng, 0.0, std::min<double>(3.0, n)), rng);
    case 1:
      return spectral_markov::sample_er(n, real_in(rng, 0.0, static_cast<double>(n)), rng);
    case 2:
      return spectral_markov::random_labeled_tree(n, rng);
    case 3:
      return n >= 3 ? spectral_markov::cycle_graph(n) : spectral_markov::path_graph(n);
    default:
      return spectral_markov::random_connected(n, size_in(rng, 0, n), rng);
  }
}

// Connected graph with at least two vertices.
inline Graph connected_graph(Rng& rng, std::size_t max_order = 30) {
  const std::size_t n = size_in(rng, 2, max_order);
  return spectral_markov::random_connected(n, size_in(rng, 0, n), rng);
}

inline double any_c(Rng& rng) { return pick(rng, {0.0, 0.1, 0.2, 0.5, 1.0, 2.0, 5.0}); }
inline double positive_c(Rng& rng) { return pick(rng, {0.05, 0.2, 0.5, 1.0, 2.0, 5.0}); }

// Runs body(rng, case) for `count` cases, each with its own stream.
template <typename Body>
void for_cases(std::uint64_t seed, std::size_t count, Body&& body) {
  const Rng master(seed);
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng = master.split(i);
    body(rng, i);
  }
}

}  // namespace gen
