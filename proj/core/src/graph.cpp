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

#include "spectral_markov/graph.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <random>
#include <string>

#include "spectral_markov/errors.hpp"

namespace spectral_markov {
namespace {

constexpr Vertex kUnvisited = std::numeric_limits<Vertex>::max();

}  // namespace

Graph::Graph(std::size_t n) : offsets_(n + 1, 0) {
  if (n >= kUnvisited) throw InvalidParameter("graph order exceeds vertex id range");
}

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    if (e.u >= n || e.v >= n) {
      throw InvalidInput("edge endpoint out of range: " + std::to_string(e.u) + "-" +
                         std::to_string(e.v));
    }
    if (e.u == e.v) throw InvalidInput("self-loop at vertex " + std::to_string(e.u));
    ++g.offsets_[e.u + 1];
    ++g.offsets_[e.v + 1];
  }
  std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
  g.adjacency_.resize(2 * edges.size());
  std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
  for (const Edge& e : edges) {
    g.adjacency_[cursor[e.u]++] = e.v;
    g.adjacency_[cursor[e.v]++] = e.u;
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto first = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
    auto last = g.adjacency_.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
    std::sort(first, last);
    if (std::adjacent_find(first, last) != last) {
      throw InvalidInput("duplicate edge at vertex " + std::to_string(v));
    }
  }
  return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const noexcept {
  if (u >= num_vertices() || v >= num_vertices()) return false;
  const auto nb = neighbors(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(num_edges());
  for (Vertex u = 0; u < num_vertices(); ++u) {
    for (Vertex v : neighbors(u)) {
      if (u < v) out.push_back({u, v});
    }
  }
  return out;
}

const char* to_string(ComponentClass kind) noexcept {
  switch (kind) {
    case ComponentClass::kTree:
      return "tree";
    case ComponentClass::kUnicyclic:
      return "unicyclic";
    case ComponentClass::kMulticyclic:
      return "multicyclic";
  }
  return "unknown";
}

std::vector<Component> connected_components(const Graph& g) {
  const std::size_t n = g.num_vertices();
  std::vector<bool> seen(n, false);
  std::vector<Component> out;
  std::vector<Vertex> queue;
  for (Vertex s = 0; s < n; ++s) {
    if (seen[s]) continue;
    queue.assign(1, s);
    seen[s] = true;
    std::size_t degree_sum = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex u = queue[head];
      degree_sum += g.degree(u);
      for (Vertex v : g.neighbors(u)) {
        if (!seen[v]) {
          seen[v] = true;
          queue.push_back(v);
        }
      }
    }
    Component comp;
    comp.vertices = queue;
    std::sort(comp.vertices.begin(), comp.vertices.end());
    comp.edge_count = degree_sum / 2;
    const std::size_t order = comp.vertices.size();
    if (comp.edge_count + 1 == order) {
      comp.kind = ComponentClass::kTree;
    } else if (comp.edge_count == order) {
      comp.kind = ComponentClass::kUnicyclic;
    } else {
      comp.kind = ComponentClass::kMulticyclic;
    }
    out.push_back(std::move(comp));
  }
  return out;
}

Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<Vertex> local(g.num_vertices(), kUnvisited);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] >= g.num_vertices()) throw InvalidInput("vertex out of range");
    if (local[vertices[i]] != kUnvisited) throw InvalidInput("repeated vertex in subset");
    local[vertices[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (Vertex w : g.neighbors(vertices[i])) {
      const Vertex j = local[w];
      if (j != kUnvisited && i < j) edges.push_back({static_cast<Vertex>(i), j});
    }
  }
  return {Graph::from_edges(vertices.size(), edges),
          std::vector<Vertex>(vertices.begin(), vertices.end())};
}

Subgraph ball(const Graph& g, Vertex center, std::size_t radius) {
  if (center >= g.num_vertices()) throw InvalidInput("ball center out of range");
  std::vector<std::size_t> dist(g.num_vertices(), std::numeric_limits<std::size_t>::max());
  std::vector<Vertex> order{center};
  dist[center] = 0;
  for (std::size_t head = 0; head < order.size(); ++head) {
    const Vertex u = order[head];
    if (dist[u] == radius) continue;
    for (Vertex v : g.neighbors(u)) {
      if (dist[v] == std::numeric_limits<std::size_t>::max()) {
        dist[v] = dist[u] + 1;
        order.push_back(v);
      }
    }
  }
  return induced_subgraph(g, order);
}

Graph sample_er(std::size_t n, double p, Rng& rng) {
  if (n == 0) throw InvalidParameter("sample_er: n must be positive");
  if (!(p >= 0.0) || p > static_cast<double>(n)) {
    throw InvalidParameter("sample_er: need 0 <= p <= n, got p=" + std::to_string(p));
  }
  const double q = p / static_cast<double>(n);
  std::vector<Edge> edges;
  if (q == 0.0 || n < 2) return Graph(n);

  const std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
  edges.reserve(static_cast<std::size_t>(static_cast<double>(pairs) * q * 1.1) + 16);

  // Row u owns the pairs (u, u+1..n-1), a block of n-1-u consecutive indices.
  Vertex row = 0;
  std::uint64_t row_start = 0;
  auto emit = [&](std::uint64_t index) {
    while (index >= row_start + (n - 1 - row)) {
      row_start += n - 1 - row;
      ++row;
    }
    edges.push_back({row, static_cast<Vertex>(row + 1 + (index - row_start))});
  };

  if (q >= 1.0) {
    for (std::uint64_t i = 0; i < pairs; ++i) emit(i);
  } else {
    std::geometric_distribution<std::uint64_t> gap(q);
    std::uint64_t index = 0;
    while (true) {
      const std::uint64_t skip = gap(rng);
      if (skip >= pairs - index) break;
      index += skip;
      emit(index);
      ++index;
      if (index >= pairs) break;
    }
  }
  return Graph::from_edges(n, edges);
}

double superposition_layer_degree(std::size_t n, double p) {
  const double k = std::floor(p) + 1.0;
  return p / (k - (k - 1.0) * p / static_cast<double>(n));
}

SuperpositionDraw sample_superposition_counted(std::size_t n, double p, Rng& rng) {
  if (!(p >= 1.0)) throw InvalidParameter("sample_superposition: requires p >= 1");
  if (!(static_cast<double>(n) > p)) throw InvalidParameter("sample_superposition: requires n > p");
  const auto layers = static_cast<std::size_t>(std::floor(p)) + 1;
  const double layer_p = superposition_layer_degree(n, p);

  SuperpositionDraw draw;
  std::vector<Edge> all;
  while (true) {
    ++draw.attempts;
    all.clear();
    for (std::size_t s = 0; s < layers; ++s) {
      const auto layer = sample_er(n, layer_p, rng).edges();
      all.insert(all.end(), layer.begin(), layer.end());
    }
    std::sort(all.begin(), all.end());
    if (std::adjacent_find(all.begin(), all.end()) == all.end()) break;
  }
  draw.graph = Graph::from_edges(n, all);
  return draw;
}

Graph sample_superposition(std::size_t n, double p, Rng& rng) {
  return sample_superposition_counted(n, p, rng).graph;
}

RootedTree RootedTree::from_child_counts(std::span<const std::size_t> counts) {
  if (counts.empty()) throw InvalidInput("a rooted tree needs at least the root");
  RootedTree t;
  const std::size_t size = counts.size();
  t.parent_.assign(size, 0);
  t.depth_.assign(size, 0);
  t.first_child_.assign(size + 1, 0);
  std::size_t next = 1;
  for (std::size_t v = 0; v < size; ++v) {
    if (v > 0 && v >= next) throw InvalidInput("child counts do not describe a connected tree");
    t.first_child_[v] = static_cast<Vertex>(next);
    if (counts[v] > size - next) throw InvalidInput("child counts exceed the vertex count");
    for (std::size_t c = 0; c < counts[v]; ++c, ++next) {
      t.parent_[next] = static_cast<Vertex>(v);
      t.depth_[next] = t.depth_[v] + 1;
    }
  }
  if (next != size) throw InvalidInput("child counts do not sum to size - 1");
  t.first_child_[size] = static_cast<Vertex>(size);
  return t;
}

std::size_t RootedTree::height() const noexcept {
  return depth_.empty() ? 0 : depth_.back();
}

std::size_t RootedTree::count_at_depth(std::size_t d) const noexcept {
  return static_cast<std::size_t>(std::count(depth_.begin(), depth_.end(), d));
}

RootedTree RootedTree::truncated(std::size_t max_depth) const {
  std::vector<std::size_t> counts;
  for (Vertex v = 0; v < size() && depth_[v] <= max_depth; ++v) {
    counts.push_back(depth_[v] < max_depth ? child_count(v) : 0);
  }
  return from_child_counts(counts);
}

Graph RootedTree::to_graph() const {
  std::vector<Edge> edges;
  edges.reserve(size());
  for (Vertex v = 1; v < size(); ++v) edges.push_back({parent_[v], v});
  return Graph::from_edges(size(), edges);
}

RootedTree sample_gw_tree(double p, std::size_t max_depth, Rng& rng) {
  if (!(p >= 0.0)) throw InvalidParameter("sample_gw_tree: p must be nonnegative");
  std::vector<std::size_t> counts{0};
  std::vector<std::size_t> depth{0};
  if (p > 0.0) {
    std::poisson_distribution<std::size_t> offspring(p);
    for (std::size_t v = 0; v < counts.size(); ++v) {
      if (depth[v] >= max_depth) continue;
      const std::size_t k = offspring(rng);
      counts[v] = k;
      counts.insert(counts.end(), k, 0);
      depth.insert(depth.end(), k, depth[v] + 1);
    }
  }
  return RootedTree::from_child_counts(counts);
}

}  // namespace spectral_markov
