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

#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "spectral_markov/errors.hpp"
#include "spectral_markov/graph.hpp"

namespace spectral_markov {

void write_edge_list(std::ostream& out, const Graph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const Edge& e : g.edges()) out << e.u + 1 << ' ' << e.v + 1 << '\n';
}

Graph read_edge_list(std::istream& in) {
  std::size_t n = 0, m = 0;
  if (!(in >> n >> m)) throw InvalidInput("edge list: missing 'n m' header");
  std::vector<Edge> edges;
  edges.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::size_t u = 0, v = 0;
    if (!(in >> u >> v)) {
      throw InvalidInput("edge list: expected " + std::to_string(m) + " edges, read " +
                         std::to_string(i));
    }
    if (u == 0 || v == 0 || u > n || v > n) {
      throw InvalidInput("edge list: vertex label outside 1.." + std::to_string(n));
    }
    edges.push_back({static_cast<Vertex>(u - 1), static_cast<Vertex>(v - 1)});
  }
  return Graph::from_edges(n, edges);
}

}  // namespace spectral_markov
