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

#include <algorithm>
#include <random>
#include <set>

#include "spectral_markov/errors.hpp"
#include "spectral_markov/graph.hpp"

namespace spectral_markov {
namespace {

// Decodes a rooted-forest Pruefer code. Vertices [0, roots) are roots; every
// other vertex is attached, smallest available leaf first, to the next code
// entry. The final code entry must be a root.
std::vector<Edge> decode_forest(std::size_t n, std::size_t roots,
                                const std::vector<Vertex>& code) {
  std::vector<std::size_t> pending(n, 0);
  for (Vertex v : code) ++pending[v];
  std::vector<bool> removed(n, false);
  std::vector<Edge> edges;
  edges.reserve(code.size());
  for (Vertex target : code) {
    Vertex leaf = static_cast<Vertex>(roots);
    while (removed[leaf] || pending[leaf] != 0) ++leaf;
    edges.push_back({std::min(leaf, target), std::max(leaf, target)});
    removed[leaf] = true;
    --pending[target];
  }
  return edges;
}

Vertex uniform_vertex(std::size_t n, Rng& rng) {
  return std::uniform_int_distribution<Vertex>(0, static_cast<Vertex>(n - 1))(rng);
}

}  // namespace

Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({v - 1, v});
  return Graph::from_edges(n, edges);
}

Graph cycle_graph(std::size_t n) {
  if (n < 3) throw InvalidParameter("cycle_graph: need at least 3 vertices");
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.push_back({v - 1, v});
  edges.push_back({0, static_cast<Vertex>(n - 1)});
  return Graph::from_edges(n, edges);
}

Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.push_back({0, v});
  return Graph::from_edges(leaves + 1, edges);
}

Graph random_labeled_tree(std::size_t n, Rng& rng) {
  if (n == 0) throw InvalidParameter("random_labeled_tree: n must be positive");
  if (n <= 2) return path_graph(n);
  // Spanning trees are forests with the single root 0: n-2 free code
  // entries followed by the root.
  std::vector<Vertex> code(n - 1, 0);
  for (std::size_t i = 0; i + 2 < n; ++i) code[i] = uniform_vertex(n, rng);
  const auto edges = decode_forest(n, 1, code);
  return Graph::from_edges(n, edges);
}

Graph random_unicyclic(std::size_t n, std::size_t cycle_length, Rng& rng) {
  if (cycle_length < 3 || cycle_length > n) {
    throw InvalidParameter("random_unicyclic: need 3 <= cycle_length <= n");
  }
  std::vector<Edge> edges;
  for (Vertex v = 1; v < cycle_length; ++v) edges.push_back({v - 1, v});
  edges.push_back({0, static_cast<Vertex>(cycle_length - 1)});
  if (n > cycle_length) {
    std::vector<Vertex> code(n - cycle_length);
    for (std::size_t i = 0; i + 1 < code.size(); ++i) code[i] = uniform_vertex(n, rng);
    code.back() = uniform_vertex(cycle_length, rng);
    const auto forest = decode_forest(n, cycle_length, code);
    edges.insert(edges.end(), forest.begin(), forest.end());
  }
  return Graph::from_edges(n, edges);
}

Graph random_connected(std::size_t n, std::size_t extra_edges, Rng& rng) {
  const auto tree = random_labeled_tree(n, rng);
  std::set<Edge> edges;
  for (const Edge& e : tree.edges()) edges.insert(e);
  const std::size_t max_edges = n * (n - 1) / 2;
  const std::size_t target = std::min(max_edges, edges.size() + extra_edges);
  while (edges.size() < target) {
    const Vertex a = uniform_vertex(n, rng), b = uniform_vertex(n, rng);
    if (a != b) edges.insert({std::min(a, b), std::max(a, b)});
  }
  const std::vector<Edge> list(edges.begin(), edges.end());
  return Graph::from_edges(n, list);
}

}  // namespace spectral_markov
