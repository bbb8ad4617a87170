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

#include <Eigen/Dense>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "spectral_markov/graph.hpp"

namespace spectral_markov {

using DenseMatrix = Eigen::MatrixXd;

/// Row weights a_i = c + d(i). With `override_isolated`, an isolated vertex
/// gets weight 1 instead of c, so its all-zero adjacency row stays well
/// defined when c = 0.
std::vector<double> row_weights(const Graph& g, double c, bool override_isolated);

/// The regularized row-normalized adjacency K = D_a^{-1} A, stored as the
/// graph plus its row weights.
class SparseKernel {
 public:
  SparseKernel(Graph g, double c);

  [[nodiscard]] const Graph& graph() const noexcept { return graph_; }
  [[nodiscard]] double c() const noexcept { return c_; }
  [[nodiscard]] std::size_t size() const noexcept { return graph_.num_vertices(); }
  [[nodiscard]] std::span<const double> weights() const noexcept { return weights_; }

  [[nodiscard]] double entry(Vertex i, Vertex j) const noexcept;
  /// Equals d(i)/(c + d(i)); zero for an isolated vertex.
  [[nodiscard]] double row_sum(Vertex i) const noexcept;

  /// y = K x.
  void apply(std::span<const double> x, std::span<double> y) const;

  [[nodiscard]] DenseMatrix dense() const;

 private:
  Graph graph_;
  double c_;
  std::vector<double> weights_;
};

/// M = D_a^{-1}(c J + A) with J the all-1/n matrix, stored as sparse part
/// plus a rank-one correction. Every entry is positive.
class MarkovKernel {
 public:
  MarkovKernel(Graph g, double c);

  [[nodiscard]] const Graph& graph() const noexcept { return graph_; }
  [[nodiscard]] double c() const noexcept { return c_; }
  [[nodiscard]] std::size_t size() const noexcept { return graph_.num_vertices(); }
  [[nodiscard]] std::span<const double> weights() const noexcept { return weights_; }

  [[nodiscard]] double entry(Vertex i, Vertex j) const noexcept;
  [[nodiscard]] double row_sum(Vertex i) const noexcept;

  /// y = M x in O(n + m).
  void apply(std::span<const double> x, std::span<double> y) const;

  [[nodiscard]] DenseMatrix dense() const;

 private:
  Graph graph_;
  double c_;
  std::vector<double> weights_;
};

/// K_G(c). Requires c >= 0.
SparseKernel build_K(Graph g, double c);
/// M_n for regularization c. Throws InvalidParameter unless c > 0.
MarkovKernel build_M(Graph g, double c);

/// Symmetric matrix D_a^{-1/2} X D_a^{-1/2}, similar to the kernel, where X is
/// A for K and cJ + A for M.
DenseMatrix symmetrize(const SparseKernel& k);
DenseMatrix symmetrize(const MarkovKernel& m);

/// pi_i = a_i / sum_j a_j, the reversing measure of M.
std::vector<double> stationary_distribution(const MarkovKernel& m);

/// Row-major CSV dump, 17 significant digits, no header.
void write_dense_csv(std::ostream& out, const DenseMatrix& matrix);

}  // namespace spectral_markov
