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

#include <gtest/gtest.h>

#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "generators.hpp"
#include "oracles.hpp"
#include "spectral_markov/errors.hpp"
#include "spectral_markov/markov.hpp"
#include "spectral_markov/spectra.hpp"

namespace sm = spectral_markov;
using sm::Edge;
using sm::Graph;
using sm::Rng;

namespace {

Graph single_edge(std::size_t n = 2) { return Graph::from_edges(n, std::vector<Edge>{{0, 1}}); }

Graph triangle() { return Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}}); }

std::vector<double> sorted_eigs(const Eigen::MatrixXd& b) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(b, Eigen::EigenvaluesOnly);
  std::vector<double> v(solver.eigenvalues().data(),
                        solver.eigenvalues().data() + solver.eigenvalues().size());
  return v;
}

}  // namespace

TEST(RowWeights, OverrideOnlyWhenAsked) {
  const Graph g = single_edge(3);
  EXPECT_EQ(sm::row_weights(g, 1.0, false), (std::vector<double>{2.0, 2.0, 1.0}));
  EXPECT_EQ(sm::row_weights(g, 0.0, true), (std::vector<double>{1.0, 1.0, 1.0}));
  EXPECT_EQ(sm::row_weights(g, 0.5, true), (std::vector<double>{1.5, 1.5, 1.0}));
  EXPECT_EQ(sm::row_weights(g, 0.5, false), (std::vector<double>{1.5, 1.5, 0.5}));
}

TEST(BuildK, Examples) {
  const auto k = sm::build_K(single_edge(), 1.0);
  EXPECT_DOUBLE_EQ(k.entry(0, 1), 0.5);
  EXPECT_DOUBLE_EQ(k.entry(1, 0), 0.5);
  EXPECT_DOUBLE_EQ(k.entry(0, 0), 0.0);

  const auto t = sm::build_K(triangle(), 0.0).dense();
  for (int i = 0; i < 3; ++i) {
    EXPECT_DOUBLE_EQ(t.row(i).sum(), 1.0);
    EXPECT_DOUBLE_EQ(t.col(i).sum(), 1.0);
    for (int j = 0; j < 3; ++j) EXPECT_DOUBLE_EQ(t(i, j), i == j ? 0.0 : 0.5);
  }

  const auto s = sm::build_K(sm::star_graph(3), 1.0);
  for (sm::Vertex leaf = 1; leaf <= 3; ++leaf) {
    EXPECT_DOUBLE_EQ(s.entry(0, leaf), 0.25);
    EXPECT_DOUBLE_EQ(s.entry(leaf, 0), 0.5);
    EXPECT_DOUBLE_EQ(s.row_sum(leaf), 0.5);
  }
}

TEST(BuildK, IsolatedRowIsZeroEvenAtZeroC) {
  const auto k = sm::build_K(single_edge(3), 0.0);
  EXPECT_EQ(k.weights()[2], 1.0);
  EXPECT_EQ(k.row_sum(2), 0.0);
  EXPECT_TRUE(k.dense().row(2).isZero());
  EXPECT_THROW(sm::build_K(single_edge(), -1.0), sm::InvalidParameter);
}

TEST(BuildK, MatchesDenseDefinitionAndRowSums) {
  gen::for_cases(1001, 100, [](Rng& rng, std::size_t) {
    const Graph g = gen::any_graph(rng);
    const double c = gen::any_c(rng);
    const auto k = sm::build_K(g, c);
    const auto dense = k.dense();
    EXPECT_LT((dense - oracle::kernel_k(g, c)).cwiseAbs().maxCoeff(), 1e-15);
    std::vector<double> ones(g.num_vertices(), 1.0), y(g.num_vertices());
    k.apply(ones, y);
    for (sm::Vertex i = 0; i < g.num_vertices(); ++i) {
      const double d = static_cast<double>(g.degree(i));
      const double expected = d == 0.0 ? 0.0 : d / (c + d);
      EXPECT_NEAR(k.row_sum(i), expected, 1e-14);
      EXPECT_NEAR(y[i], expected, 1e-14);
      EXPECT_GE(k.row_sum(i), 0.0);
      EXPECT_LE(k.row_sum(i), 1.0);
    }
  });
}

TEST(BuildM, TwoEdgeSpectrum) {
  const Graph g = Graph::from_edges(5, std::vector<Edge>{{0, 1}, {2, 3}});
  const auto spec = sm::kernel_spectrum(sm::build_M(g, 1.0));
  const std::vector<double> expected{-0.5, -0.5, 0.1, 0.5, 1.0};
  EXPECT_LT(oracle::max_abs_diff(spec.eigenvalues, expected), 1e-8);
}

TEST(BuildM, EmptyGraphIsUniform) {
  const auto m = sm::build_M(Graph(3), 1.0);
  const auto dense = m.dense();
  EXPECT_LT((dense.array() - 1.0 / 3.0).abs().maxCoeff(), 1e-15);
  EXPECT_LT(oracle::max_abs_diff(sm::kernel_spectrum(m).eigenvalues, {0.0, 0.0, 1.0}), 1e-12);
}

TEST(BuildM, RejectsNonPositiveC) {
  EXPECT_THROW(sm::build_M(single_edge(), 0.0), sm::InvalidParameter);
  EXPECT_THROW(sm::build_M(single_edge(), -1.0), sm::InvalidParameter);
}

TEST(BuildM, StochasticPositiveAndMatchesDefinition) {
  gen::for_cases(1002, 100, [](Rng& rng, std::size_t) {
    const Graph g = gen::any_graph(rng);
    const double c = gen::positive_c(rng);
    const auto m = sm::build_M(g, c);
    const auto dense = m.dense();
    EXPECT_LT((dense - oracle::kernel_m(g, c)).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_GT(dense.minCoeff(), 0.0);
    std::vector<double> ones(g.num_vertices(), 1.0), y(g.num_vertices());
    m.apply(ones, y);
    for (sm::Vertex i = 0; i < g.num_vertices(); ++i) {
      EXPECT_NEAR(m.row_sum(i), 1.0, 1e-12);
      EXPECT_NEAR(y[i], 1.0, 1e-12);
      EXPECT_NEAR(dense.row(i).sum(), 1.0, 1e-12);
    }
    // apply agrees with the dense product on a random vector.
    Eigen::VectorXd x = Eigen::VectorXd::Random(static_cast<Eigen::Index>(g.num_vertices()));
    std::vector<double> xs(x.data(), x.data() + x.size()), ys(xs.size());
    m.apply(xs, ys);
    const Eigen::VectorXd ref = dense * x;
    for (std::size_t i = 0; i < ys.size(); ++i) EXPECT_NEAR(ys[i], ref[static_cast<Eigen::Index>(i)], 1e-13);
  });
}

TEST(Symmetrize, SmallExamples) {
  const auto b = sm::symmetrize(sm::build_K(single_edge(), 1.0));
  EXPECT_DOUBLE_EQ(b(0, 1), 0.5);
  EXPECT_DOUBLE_EQ(b(1, 0), 0.5);
  EXPECT_DOUBLE_EQ(b(0, 0), 0.0);

  const auto k = sm::build_K(sm::path_graph(3), 1.0);
  const auto bp = sm::symmetrize(k);
  EXPECT_NEAR(bp(0, 1), 1.0 / std::sqrt(6.0), 1e-15);
  EXPECT_LT(oracle::max_abs_diff(sorted_eigs(bp), oracle::nonsymmetric_eigenvalues(k.dense())),
            1e-10);
}

TEST(Symmetrize, ErSampleSpectrumMatchesNonsymmetricSolve) {
  Rng rng(55);
  const Graph g = sm::sample_er(50, 1.5, rng);
  const auto k = sm::build_K(g, 0.5);
  EXPECT_LT(oracle::max_abs_diff(sorted_eigs(sm::symmetrize(k)),
                                 oracle::nonsymmetric_eigenvalues(oracle::kernel_k(g, 0.5))),
            1e-8);
}

TEST(Symmetrize, SimilarityAndSymmetryProperty) {
  gen::for_cases(1003, 60, [](Rng& rng, std::size_t) {
    const Graph g = gen::any_graph(rng, 60);
    const double c = gen::positive_c(rng);
    const auto k = sm::build_K(g, c);
    const auto m = sm::build_M(g, c);
    const auto bk = sm::symmetrize(k);
    const auto bm = sm::symmetrize(m);
    EXPECT_LT((bk - bk.transpose()).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_LT((bm - bm.transpose()).cwiseAbs().maxCoeff(), 1e-14);
    EXPECT_LT(oracle::max_abs_diff(sorted_eigs(bk), oracle::nonsymmetric_eigenvalues(k.dense())),
              1e-8);
    EXPECT_LT(oracle::max_abs_diff(sorted_eigs(bm), oracle::nonsymmetric_eigenvalues(m.dense())),
              1e-8);
  });
}

TEST(Stationary, Examples) {
  const auto uniform = sm::stationary_distribution(sm::build_M(Graph(4), 2.0));
  for (double x : uniform) EXPECT_DOUBLE_EQ(x, 0.25);
  const auto pi = sm::stationary_distribution(sm::build_M(single_edge(3), 1.0));
  EXPECT_NEAR(pi[0], 0.4, 1e-15);
  EXPECT_NEAR(pi[1], 0.4, 1e-15);
  EXPECT_NEAR(pi[2], 0.2, 1e-15);
}

TEST(Stationary, InvariantAndReversible) {
  gen::for_cases(1004, 60, [](Rng& rng, std::size_t) {
    const Graph g = gen::any_graph(rng, 80);
    const auto m = sm::build_M(g, gen::positive_c(rng));
    const auto pi_vec = sm::stationary_distribution(m);
    const Eigen::Map<const Eigen::RowVectorXd> pi(pi_vec.data(),
                                                  static_cast<Eigen::Index>(pi_vec.size()));
    const auto dense = m.dense();
    EXPECT_NEAR(pi.sum(), 1.0, 1e-14);
    EXPECT_LT((pi * dense - pi).cwiseAbs().maxCoeff(), 1e-12);
    const Eigen::MatrixXd flow = pi.transpose().asDiagonal() * dense;
    EXPECT_LT((flow - flow.transpose()).cwiseAbs().maxCoeff(), 1e-12);
  });
}

TEST(Stationary, NonuniformWithHighProbability) {
  Rng master(66);
  int nonuniform = 0;
  for (int r = 0; r < 100; ++r) {
    Rng rng = master.split(r);
    const auto pi = sm::stationary_distribution(sm::build_M(sm::sample_er(200, 2.0, rng), 1.0));
    nonuniform += *std::max_element(pi.begin(), pi.end()) > *std::min_element(pi.begin(), pi.end());
  }
  EXPECT_GE(nonuniform, 99);
}

TEST(BuildM, DifferenceFromKIsRankOne) {
  gen::for_cases(1005, 40, [](Rng& rng, std::size_t) {
    const Graph g = gen::any_graph(rng, 60);
    if (g.num_vertices() < 2) return;
    const double c = gen::positive_c(rng);
    const auto m = sm::build_M(g, c);
    // D^{-1} A with the same weights as M (no isolated override).
    Eigen::MatrixXd k = oracle::adjacency(g);
    for (Eigen::Index i = 0; i < k.rows(); ++i) k.row(i) /= m.weights()[static_cast<std::size_t>(i)];
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(m.dense() - k);
    const auto& s = svd.singularValues();
    EXPECT_LT(s[1] / s[0], 1e-10);
  });
}

TEST(DenseCsv, SeventeenDigitsRowMajor) {
  Eigen::MatrixXd m(2, 2);
  m << 1.0 / 3.0, 0.0, -2.5, 1e-20;
  std::ostringstream out;
  sm::write_dense_csv(out, m);
  const std::string text = out.str();
  std::istringstream in(text);
  std::string line;
  std::getline(in, line);
  const auto comma = line.find(',');
  EXPECT_EQ(std::stod(line.substr(0, comma)), 1.0 / 3.0);
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 2);
}
