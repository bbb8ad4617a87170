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

#include <cstddef>
#include <nlohmann/json.hpp>
#include <span>
#include <string>

#include "spectral_markov/rng.hpp"

namespace spectral_markov {

/// Outcome of one structural verification suite. `worst_margin` is the slack
/// of the tightest inequality checked (negative means violated).
struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  double worst_margin = 0.0;
  nlohmann::ordered_json details = nlohmann::ordered_json::object();
};

/// Two-edge graph on five vertices: spectrum of M is
/// {-1/(1+c) x2, (1-4/5)/(1+c), 1/(1+c), 1} and lambda_bar = 1/(1+c).
CheckResult verify_two_edge_fixture(std::span<const double> cs);

/// Cycles have spectral radius exactly 1/(1+c/2).
CheckResult verify_cycles(std::size_t min_length, std::size_t max_length,
                          std::span<const double> cs);

/// Uniform labeled trees of order 2..max_order satisfy rho(K) < tau_c.
CheckResult verify_trees(std::size_t count, std::size_t max_order, std::span<const double> cs,
                         Rng& rng);

/// Unicyclic non-cycles satisfy 1/(1+c/2) < rho(K) < tau_c.
CheckResult verify_unicyclic(std::size_t count, std::size_t max_order,
                             std::span<const double> cs, Rng& rng);

/// Distance-layer identity for Perron pairs on random connected graphs with
/// random nonempty target sets; residual must stay below 1e-8.
CheckResult verify_distance_layers(std::size_t count, std::size_t max_order, std::span<const double> cs,
                           Rng& rng);

/// Eigenvalue interlacing between K and M for random ER samples.
CheckResult verify_interlacing(std::size_t count, std::size_t max_order,
                               std::span<const double> cs, Rng& rng);

/// |(K^k)_vv| <= rho^k on the largest component of ER(n, p) samples.
CheckResult verify_diagonal_bound(std::size_t count, std::size_t n, double p,
                                  std::span<const double> cs, std::size_t kmax, Rng& rng);

/// Empirical edge frequency of the superposition sampler at (n, p) and its
/// acceptance rate at (10, 1) against 0.25 exp(-1).
CheckResult verify_superposition(std::size_t n, double p, std::size_t replicates, Rng& rng);

}  // namespace spectral_markov
