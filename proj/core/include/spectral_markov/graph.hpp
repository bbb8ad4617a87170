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
#include <iosfwd>
#include <ranges>
#include <span>
#include <vector>

#include "spectral_markov/rng.hpp"

namespace spectral_markov {

// Vertices are 0-based in the API. Files and CLI output use 1-based labels.
using Vertex = std::uint32_t;

struct Edge {
  Vertex u;
  Vertex v;
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Undirected simple graph on vertices 0..n-1 in compressed adjacency form.
///
/// Neighbor lists are sorted and symmetric; there are no self-loops or
/// duplicate edges. Instances are immutable after construction.
class Graph {
 public:
  Graph() : Graph(0) {}
  /// Empty graph on n vertices.
  explicit Graph(std::size_t n);

  /// Builds a graph from an edge list in any order and orientation.
  /// Throws InvalidInput on self-loops, duplicates or out-of-range endpoints.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges);

  [[nodiscard]] std::size_t num_vertices() const noexcept {
    return offsets_.empty() ? 0 : offsets_.size() - 1;
  }
  [[nodiscard]] std::size_t num_edges() const noexcept { return adjacency_.size() / 2; }

  [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const noexcept {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  [[nodiscard]] std::size_t degree(Vertex v) const noexcept {
    return offsets_[v + 1] - offsets_[v];
  }
  [[nodiscard]] bool has_edge(Vertex u, Vertex v) const noexcept;

  /// All edges with u < v, lexicographically sorted.
  [[nodiscard]] std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Vertex> adjacency_;
};

enum class ComponentClass { kTree, kUnicyclic, kMulticyclic };

const char* to_string(ComponentClass kind) noexcept;

struct Component {
  std::vector<Vertex> vertices;  // sorted
  std::size_t edge_count = 0;
  ComponentClass kind = ComponentClass::kTree;
};

/// Partition into connected components, ordered by smallest vertex.
/// An isolated vertex is reported as a (trivial) tree.
std::vector<Component> connected_components(const Graph& g);

/// A graph together with the map from its vertices to the parent graph.
struct Subgraph {
  Graph graph;
  std::vector<Vertex> to_parent;
};

/// Subgraph induced by `vertices`; local vertex i is vertices[i].
Subgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

/// Vertices within graph distance `radius` of `center` with every edge among
/// them. Local labels follow BFS order, so `center` is always local vertex 0.
Subgraph ball(const Graph& g, Vertex center, std::size_t radius);

/// Erdos-Renyi G(n, p/n). Expected cost O(n + edges) through geometric
/// skipping over the linearized pair index.
Graph sample_er(std::size_t n, double p, Rng& rng);

/// Per-layer mean degree p' = p / (k - (k-1) p / n) used by the
/// superposition coupling, where k = floor(p) + 1.
double superposition_layer_degree(std::size_t n, double p);

struct SuperpositionDraw {
  Graph graph;
  std::size_t attempts = 0;  // rejected draws + 1
};

/// Draws k = floor(p)+1 independent G(n, p'/n) layers, resampling all of them
/// until no pair is covered twice. The accepted union is G(n, p/n).
SuperpositionDraw sample_superposition_counted(std::size_t n, double p, Rng& rng);
Graph sample_superposition(std::size_t n, double p, Rng& rng);

/// Finite rooted tree with vertices numbered in breadth-first order.
///
/// The root is vertex 0; the children of v occupy the contiguous range
/// [first_child(v), first_child(v) + child_count(v)).
class RootedTree {
 public:
  /// Tree whose BFS-ordered vertices have the given child counts.
  static RootedTree from_child_counts(std::span<const std::size_t> counts);

  [[nodiscard]] std::size_t size() const noexcept { return parent_.size(); }
  [[nodiscard]] static constexpr Vertex root() noexcept { return 0; }
  [[nodiscard]] Vertex parent(Vertex v) const noexcept { return parent_[v]; }
  [[nodiscard]] std::size_t depth(Vertex v) const noexcept { return depth_[v]; }
  [[nodiscard]] std::size_t child_count(Vertex v) const noexcept {
    return first_child_[v + 1] - first_child_[v];
  }
  [[nodiscard]] auto children(Vertex v) const noexcept {
    return std::views::iota(first_child_[v], first_child_[v + 1]);
  }
  [[nodiscard]] std::size_t degree(Vertex v) const noexcept {
    return child_count(v) + (v == root() ? 0 : 1);
  }
  [[nodiscard]] std::size_t height() const noexcept;
  [[nodiscard]] std::size_t count_at_depth(std::size_t d) const noexcept;

  /// The first `max_depth` generations (vertices with depth <= max_depth).
  [[nodiscard]] RootedTree truncated(std::size_t max_depth) const;

  [[nodiscard]] Graph to_graph() const;

  friend bool operator==(const RootedTree&, const RootedTree&) = default;

 private:
  std::vector<Vertex> parent_;
  std::vector<std::size_t> depth_;
  std::vector<Vertex> first_child_;  // size() + 1 entries
};

/// Galton-Watson tree with Poisson(p) offspring; vertices at depth
/// `max_depth` receive no children.
RootedTree sample_gw_tree(double p, std::size_t max_depth, Rng& rng);

// Deterministic and random fixtures used by the verification suites.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph star_graph(std::size_t leaves);  // center is vertex 0

/// Uniform labeled tree on n vertices (random Pruefer sequence).
Graph random_labeled_tree(std::size_t n, Rng& rng);

/// Cycle on vertices 0..cycle_length-1 plus a uniform random rooted forest on
/// the remaining vertices, rooted at the cycle vertices.
Graph random_unicyclic(std::size_t n, std::size_t cycle_length, Rng& rng);

/// Random labeled tree plus `extra_edges` distinct random chords.
Graph random_connected(std::size_t n, std::size_t extra_edges, Rng& rng);

/// Edge-list text format: "n m" then m lines "u v" (1-based, u < v, sorted).
void write_edge_list(std::ostream& out, const Graph& g);
Graph read_edge_list(std::istream& in);

}  // namespace spectral_markov
