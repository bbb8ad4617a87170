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
#include <vector>

#include "spectral_markov/graph.hpp"
#include "spectral_markov/rng.hpp"

namespace spectral_markov {

/// Return probabilities r_0..r_kmax of the killed random walk started at
/// `vertex`: at a vertex of degree d the walk steps to each neighbor with
/// probability 1/(c+d) and dies otherwise. r_k is the diagonal entry
/// (K^k)_{vv} of the kernel built with the same c.
struct ReturnProfile {
  Vertex vertex = 0;
  double c = 0.0;
  std::vector<double> r;
};

/// Reusable workspace for many start vertices on one graph.
///
/// Each profile propagates the sub-probability mass from the start vertex
/// inside the ball of radius floor(kmax/2): mass that leaves it can no longer
/// return within kmax steps, so the result equals the full-graph value.
class ReturnProbabilitySolver {
 public:
  ReturnProbabilitySolver(const Graph& g, double c);

  [[nodiscard]] ReturnProfile profile(Vertex v, std::size_t kmax);

 private:
  const Graph* graph_;
  double c_;
  std::vector<double> step_weight_;  // 1/(c+d), 0 for isolated vertices
  std::vector<Vertex> local_;        // global -> ball index, or sentinel
  std::vector<Vertex> order_;
  std::vector<std::size_t> local_offsets_;
  std::vector<Vertex> local_adjacency_;
  std::vector<double> mass_;
  std::vector<double> next_;
};

ReturnProfile return_probabilities(const Graph& g, Vertex v, double c, std::size_t kmax);

/// Same quantity on a rooted tree, started at the root.
ReturnProfile return_probabilities(const RootedTree& tree, double c, std::size_t kmax);

/// One unbiased draw of r_k(T, root, c) for a Poisson(p) Galton-Watson tree T.
/// Odd k returns 0 without sampling; for k = 2m the tree is truncated after
/// m+1 generations, which leaves r_k unchanged.
double gw_return_sample(double p, double c, std::size_t k, Rng& rng);

}  // namespace spectral_markov
