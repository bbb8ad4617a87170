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
#include <cstdint>
#include <functional>
#include <vector>

#include "spectral_markov/graph.hpp"
#include "spectral_markov/rng.hpp"

namespace spectral_markov {

/// Largest moment order served by the path-enumeration formula.
inline constexpr std::size_t kMaxMomentOrder = 16;

/// A canonical closed path (first label 1, each new label is the smallest
/// unused one) whose traversed edges form a tree. Labels are 1-based.
struct CanonicalPath {
  std::vector<Vertex> labels;  // k+1 entries, labels.front() == labels.back() == 1
  std::size_t distinct = 0;    // t, number of labels used
  std::vector<Edge> tree_edges;
  std::vector<std::size_t> degree;     // degree[a-1]: degree of label a in the tree
  std::vector<std::size_t> out_count;  // out_count[a-1]: steps leaving label a

  [[nodiscard]] std::size_t length() const noexcept { return labels.size() - 1; }
};

/// Visits every canonical closed path of length k tracing a tree on t labels,
/// in lexicographic order. Odd k visits nothing.
void for_each_gamma(std::size_t k, std::size_t t,
                    const std::function<void(const CanonicalPath&)>& visit);

/// All canonical closed tree paths of length k on t labels. Throws
/// InvalidParameter unless 2 <= t <= k/2 + 1 for even k.
std::vector<CanonicalPath> enumerate_gamma(std::size_t k, std::size_t t);

/// E[(c + d + xi)^-m] for xi ~ Poisson(p), summed until the ratio tail bound
/// drops below 1e-14.
double poisson_inverse_moment(double c, unsigned d, unsigned m, double p);

/// Limiting k-th spectral moment from the canonical-path formula. Odd k
/// gives 0, k = 0 gives 1; k > kMaxMomentOrder throws CapacityError.
double beta_formula(std::size_t k, double p, double c);

struct McEstimate {
  double estimate = 0.0;
  double std_error = 0.0;
  std::size_t samples = 0;
};

/// Mean and standard error of r_k(T, root, c) over independent Poisson(p)
/// Galton-Watson trees. Trees are drawn in fixed chunks, each from
/// master.split(chunk), and merged in chunk order, so the result does not
/// depend on `workers`.
McEstimate beta_gw_mc(std::size_t k, double p, double c, std::size_t num_trees,
                      const Rng& master, std::size_t workers = 1);

/// Empirical spectral moments (1/n) tr(K^k) for k = 1..kmax (index k-1),
/// computed exactly from diagonal return probabilities.
std::vector<double> beta_empirical(const Graph& g, double c, std::size_t kmax,
                                   std::size_t workers = 1);

/// One row of the formula / Monte Carlo / finite-n cross-check.
struct MomentReport {
  std::size_t k = 0;
  double p = 0.0;
  double c = 0.0;
  double beta_formula = 0.0;
  McEstimate beta_mc;
  double beta_empirical_mean = 0.0;
  double beta_empirical_sd = 0.0;
  std::size_t n = 0;
  std::size_t replicates = 0;
  std::uint64_t seed = 0;
};

}  // namespace spectral_markov
