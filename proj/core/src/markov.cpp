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

#include "spectral_markov/markov.hpp"

#include <cmath>
#include <iomanip>
#include <numeric>
#include <ostream>
#include <string>

#include "spectral_markov/errors.hpp"

namespace spectral_markov {

std::vector<double> row_weights(const Graph& g, double c, bool override_isolated) {
  std::vector<double> a(g.num_vertices());
  for (Vertex v = 0; v < a.size(); ++v) {
    const auto d = static_cast<double>(g.degree(v));
    a[v] = (override_isolated && d == 0.0) ? 1.0 : c + d;
  }
  return a;
}

SparseKernel::SparseKernel(Graph g, double c)
    : graph_(std::move(g)), c_(c), weights_(row_weights(graph_, c, true)) {
  if (!(c >= 0.0)) throw InvalidParameter("K kernel requires c >= 0, got " + std::to_string(c));
}

double SparseKernel::entry(Vertex i, Vertex j) const noexcept {
  return graph_.has_edge(i, j) ? 1.0 / weights_[i] : 0.0;
}

double SparseKernel::row_sum(Vertex i) const noexcept {
  return static_cast<double>(graph_.degree(i)) / weights_[i];
}

void SparseKernel::apply(std::span<const double> x, std::span<double> y) const {
  if (x.size() != size() || y.size() != size()) throw InvalidInput("K apply: size mismatch");
  for (Vertex i = 0; i < size(); ++i) {
    double acc = 0.0;
    for (Vertex j : graph_.neighbors(i)) acc += x[j];
    y[i] = acc / weights_[i];
  }
}

DenseMatrix SparseKernel::dense() const {
  DenseMatrix out = DenseMatrix::Zero(size(), size());
  for (Vertex i = 0; i < size(); ++i) {
    for (Vertex j : graph_.neighbors(i)) out(i, j) = 1.0 / weights_[i];
  }
  return out;
}

MarkovKernel::MarkovKernel(Graph g, double c)
    : graph_(std::move(g)), c_(c), weights_(row_weights(graph_, c, false)) {
  if (!(c > 0.0)) throw InvalidParameter("Markov kernel requires c > 0, got " + std::to_string(c));
  if (graph_.num_vertices() == 0) throw InvalidParameter("Markov kernel requires n >= 1");
}

double MarkovKernel::entry(Vertex i, Vertex j) const noexcept {
  const double base = c_ / static_cast<double>(size());
  return (base + (graph_.has_edge(i, j) ? 1.0 : 0.0)) / weights_[i];
}

double MarkovKernel::row_sum(Vertex i) const noexcept {
  const double base = c_ / static_cast<double>(size());
  const auto d = static_cast<double>(graph_.degree(i));
  return ((static_cast<double>(size()) - d) * base + d * (base + 1.0)) / weights_[i];
}

void MarkovKernel::apply(std::span<const double> x, std::span<double> y) const {
  if (x.size() != size() || y.size() != size()) throw InvalidInput("M apply: size mismatch");
  const double mean_part = (c_ / static_cast<double>(size())) * std::accumulate(x.begin(), x.end(), 0.0);
  for (Vertex i = 0; i < size(); ++i) {
    double acc = mean_part;
    for (Vertex j : graph_.neighbors(i)) acc += x[j];
    y[i] = acc / weights_[i];
  }
}

DenseMatrix MarkovKernel::dense() const {
  const double base = c_ / static_cast<double>(size());
  DenseMatrix out(size(), size());
  for (Vertex i = 0; i < size(); ++i) {
    out.row(i).setConstant(base / weights_[i]);
    for (Vertex j : graph_.neighbors(i)) out(i, j) = (base + 1.0) / weights_[i];
  }
  return out;
}

SparseKernel build_K(Graph g, double c) { return SparseKernel(std::move(g), c); }

MarkovKernel build_M(Graph g, double c) { return MarkovKernel(std::move(g), c); }

namespace {

Eigen::VectorXd inverse_sqrt(std::span<const double> a) {
  Eigen::VectorXd s(static_cast<Eigen::Index>(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) s[static_cast<Eigen::Index>(i)] = 1.0 / std::sqrt(a[i]);
  return s;
}

}  // namespace

DenseMatrix symmetrize(const SparseKernel& k) {
  const Eigen::VectorXd s = inverse_sqrt(k.weights());
  DenseMatrix out = DenseMatrix::Zero(k.size(), k.size());
  for (Vertex i = 0; i < k.size(); ++i) {
    for (Vertex j : k.graph().neighbors(i)) out(i, j) = s[i] * s[j];
  }
  return out;
}

DenseMatrix symmetrize(const MarkovKernel& m) {
  const Eigen::VectorXd s = inverse_sqrt(m.weights());
  const double base = m.c() / static_cast<double>(m.size());
  DenseMatrix out = base * (s * s.transpose());
  for (Vertex i = 0; i < m.size(); ++i) {
    for (Vertex j : m.graph().neighbors(i)) out(i, j) = (base + 1.0) * s[i] * s[j];
  }
  return out;
}

std::vector<double> stationary_distribution(const MarkovKernel& m) {
  const auto a = m.weights();
  const double total = std::accumulate(a.begin(), a.end(), 0.0);
  std::vector<double> pi(a.begin(), a.end());
  for (double& x : pi) x /= total;
  return pi;
}

void write_dense_csv(std::ostream& out, const DenseMatrix& matrix) {
  const auto flags = out.flags();
  const auto precision = out.precision();
  out << std::setprecision(17);
  for (Eigen::Index i = 0; i < matrix.rows(); ++i) {
    for (Eigen::Index j = 0; j < matrix.cols(); ++j) {
      if (j > 0) out << ',';
      out << matrix(i, j);
    }
    out << '\n';
  }
  out.flags(flags);
  out.precision(precision);
}

}  // namespace spectral_markov
