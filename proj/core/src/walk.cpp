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

#include "spectral_markov/walk.hpp"

#include <algorithm>
#include <limits>

#include "spectral_markov/errors.hpp"

namespace spectral_markov {
namespace {

constexpr Vertex kOutside = std::numeric_limits<Vertex>::max();

}  // namespace

ReturnProbabilitySolver::ReturnProbabilitySolver(const Graph& g, double c)
    : graph_(&g), c_(c), step_weight_(g.num_vertices()), local_(g.num_vertices(), kOutside) {
  if (!(c >= 0.0)) throw InvalidParameter("killed walk requires c >= 0");
  for (Vertex v = 0; v < g.num_vertices(); ++v) {
    const auto d = static_cast<double>(g.degree(v));
    step_weight_[v] = d == 0.0 ? 0.0 : 1.0 / (c + d);
  }
}

ReturnProfile ReturnProbabilitySolver::profile(Vertex v, std::size_t kmax) {
  const Graph& g = *graph_;
  if (v >= g.num_vertices()) throw InvalidInput("return_probabilities: vertex out of range");
  ReturnProfile out{v, c_, std::vector<double>(kmax + 1, 0.0)};
  out.r[0] = 1.0;
  if (kmax == 0 || g.degree(v) == 0) return out;

  const std::size_t radius = kmax / 2;
  order_.assign(1, v);
  local_[v] = 0;
  std::size_t layer_end = 1;
  for (std::size_t depth = 0, head = 0; depth < radius; ++depth) {
    for (; head < layer_end; ++head) {
      for (Vertex w : g.neighbors(order_[head])) {
        if (local_[w] == kOutside) {
          local_[w] = static_cast<Vertex>(order_.size());
          order_.push_back(w);
        }
      }
    }
    layer_end = order_.size();
  }

  const std::size_t size = order_.size();
  local_offsets_.assign(size + 1, 0);
  local_adjacency_.clear();
  for (std::size_t i = 0; i < size; ++i) {
    for (Vertex w : g.neighbors(order_[i])) {
      if (local_[w] != kOutside) local_adjacency_.push_back(local_[w]);
    }
    local_offsets_[i + 1] = local_adjacency_.size();
  }

  mass_.assign(size, 0.0);
  next_.assign(size, 0.0);
  mass_[0] = 1.0;
  for (std::size_t step = 1; step <= kmax; ++step) {
    std::fill(next_.begin(), next_.end(), 0.0);
    for (std::size_t i = 0; i < size; ++i) {
      if (mass_[i] == 0.0) continue;
      const double share = mass_[i] * step_weight_[order_[i]];
      for (std::size_t e = local_offsets_[i]; e < local_offsets_[i + 1]; ++e) {
        next_[local_adjacency_[e]] += share;
      }
    }
    mass_.swap(next_);
    out.r[step] = mass_[0];
  }

  for (Vertex w : order_) local_[w] = kOutside;
  return out;
}

ReturnProfile return_probabilities(const Graph& g, Vertex v, double c, std::size_t kmax) {
  return ReturnProbabilitySolver(g, c).profile(v, kmax);
}

ReturnProfile return_probabilities(const RootedTree& tree, double c, std::size_t kmax) {
  if (!(c >= 0.0)) throw InvalidParameter("killed walk requires c >= 0");
  ReturnProfile out{RootedTree::root(), c, std::vector<double>(kmax + 1, 0.0)};
  out.r[0] = 1.0;
  if (kmax == 0 || tree.size() == 1) return out;

  // BFS numbering makes the ball of radius kmax/2 a prefix of the vertices.
  const std::size_t radius = kmax / 2;
  std::size_t size = 0;
  while (size < tree.size() && tree.depth(static_cast<Vertex>(size)) <= radius) ++size;

  std::vector<double> weight(size);
  for (Vertex v = 0; v < size; ++v) weight[v] = 1.0 / (c + static_cast<double>(tree.degree(v)));
  std::vector<double> mass(size, 0.0), next(size, 0.0);
  mass[0] = 1.0;
  for (std::size_t step = 1; step <= kmax; ++step) {
    std::fill(next.begin(), next.end(), 0.0);
    for (Vertex v = 0; v < size; ++v) {
      if (mass[v] == 0.0) continue;
      const double share = mass[v] * weight[v];
      if (v != RootedTree::root()) next[tree.parent(v)] += share;
      for (Vertex child : tree.children(v)) {
        if (child >= size) break;
        next[child] += share;
      }
    }
    mass.swap(next);
    out.r[step] = mass[0];
  }
  return out;
}

double gw_return_sample(double p, double c, std::size_t k, Rng& rng) {
  if (k == 0) return 1.0;
  if (k % 2 == 1) return 0.0;
  const RootedTree tree = sample_gw_tree(p, k / 2 + 1, rng);
  return return_probabilities(tree, c, k).r[k];
}

}  // namespace spectral_markov
