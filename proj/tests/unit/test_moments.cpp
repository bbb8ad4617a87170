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

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <vector>

#include "generators.hpp"
#include "oracles.hpp"
#include "spectral_markov/errors.hpp"
#include "spectral_markov/markov.hpp"
#include "spectral_markov/moments.hpp"

namespace sm = spectral_markov;
using sm::Edge;
using sm::Graph;
using sm::Rng;

namespace {

using Labels = std::vector<sm::Vertex>;

std::vector<Labels> labels_of(const std::vector<sm::CanonicalPath>& paths) {
  std::vector<Labels> out;
  for (const auto& p : paths) out.push_back(p.labels);
  return out;
}

// (1/n) tr(K^k) from the dense kernel.
std::vector<double> dense_traces(const Graph& g, double c, std::size_t kmax) {
  const Eigen::MatrixXd k = oracle::kernel_k(g, c);
  Eigen::MatrixXd power = Eigen::MatrixXd::Identity(k.rows(), k.cols());
  std::vector<double> out;
  for (std::size_t j = 1; j <= kmax; ++j) {
    power = power * k;
    out.push_back(power.trace() / static_cast<double>(g.num_vertices()));
  }
  return out;
}

}  // namespace

TEST(Gamma, SmallExamples) {
  EXPECT_EQ(labels_of(sm::enumerate_gamma(2, 2)), (std::vector<Labels>{{1, 2, 1}}));
  EXPECT_EQ(labels_of(sm::enumerate_gamma(4, 2)), (std::vector<Labels>{{1, 2, 1, 2, 1}}));
  EXPECT_EQ(labels_of(sm::enumerate_gamma(4, 3)),
            (std::vector<Labels>{{1, 2, 1, 3, 1}, {1, 2, 3, 2, 1}}));
  const auto star = sm::enumerate_gamma(4, 3).front();
  EXPECT_EQ(star.distinct, 3u);
  EXPECT_EQ(star.tree_edges, (std::vector<Edge>{{1, 2}, {1, 3}}));
  EXPECT_EQ(star.degree, (std::vector<std::size_t>{2, 1, 1}));
  EXPECT_EQ(star.out_count, (std::vector<std::size_t>{2, 1, 1}));
  EXPECT_EQ(star.length(), 4u);
}

TEST(Gamma, OddLengthIsEmptyAndBadLabelCountsThrow) {
  for (std::size_t k : {1, 3, 5, 7}) {
    EXPECT_TRUE(sm::enumerate_gamma(k, 2).empty());
    std::size_t visits = 0;
    sm::for_each_gamma(k, 2, [&](const sm::CanonicalPath&) { ++visits; });
    EXPECT_EQ(visits, 0u);
  }
  EXPECT_THROW(sm::enumerate_gamma(4, 1), sm::InvalidParameter);
  EXPECT_THROW(sm::enumerate_gamma(4, 4), sm::InvalidParameter);
  EXPECT_THROW(sm::enumerate_gamma(2, 0), sm::InvalidParameter);
}

TEST(Gamma, AgreesWithUnprunedEnumeration) {
  for (int k = 2; k <= 10; k += 2) {
    std::map<int, std::set<Labels>> expected;
    for (const auto& path : oracle::canonical_closed_paths(k)) {
      if (!path.tree) continue;
      expected[path.distinct].insert(Labels(path.labels.begin(), path.labels.end()));
    }
    for (int t = 2; t <= k / 2 + 1; ++t) {
      const auto got = labels_of(sm::enumerate_gamma(static_cast<std::size_t>(k),
                                                     static_cast<std::size_t>(t)));
      const std::set<Labels> got_set(got.begin(), got.end());
      EXPECT_EQ(got_set.size(), got.size()) << "duplicates at k=" << k << " t=" << t;
      EXPECT_EQ(got_set, expected[t]) << "k=" << k << " t=" << t;
      EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
    }
  }
}

TEST(Gamma, PathInvariants) {
  for (std::size_t k = 2; k <= 12; k += 2) {
    for (std::size_t t = 2; t <= k / 2 + 1; ++t) {
      for (const auto& path : sm::enumerate_gamma(k, t)) {
        ASSERT_EQ(path.labels.size(), k + 1);
        EXPECT_EQ(path.labels.front(), 1u);
        EXPECT_EQ(path.labels.back(), 1u);
        EXPECT_EQ(path.tree_edges.size(), t - 1);
        sm::Vertex highest = 0;
        for (std::size_t i = 0; i < k; ++i) {
          EXPECT_NE(path.labels[i], path.labels[i + 1]);
          EXPECT_LE(path.labels[i], highest + 1);
          highest = std::max(highest, path.labels[i]);
        }
        EXPECT_EQ(highest, t);
        std::size_t steps = 0, degree_sum = 0;
        for (std::size_t a = 0; a < t; ++a) {
          steps += path.out_count[a];
          degree_sum += path.degree[a];
          // Every tree edge at a label is left at least once from it.
          EXPECT_GE(path.out_count[a], path.degree[a]);
        }
        EXPECT_EQ(steps, k);
        EXPECT_EQ(degree_sum, 2 * (t - 1));
      }
    }
  }
}

TEST(PoissonInverseMoment, Examples) {
  EXPECT_NEAR(sm::poisson_inverse_moment(1.0, 1, 1, 1e-15), 0.5, 1e-14);
  EXPECT_NEAR(sm::poisson_inverse_moment(0.0, 2, 1, 0.0), 0.5, 1e-15);
  // E[1/(1 + xi)] = (1 - e^-p)/p.
  EXPECT_NEAR(sm::poisson_inverse_moment(0.0, 1, 1, 1.0), 1.0 - std::exp(-1.0), 1e-14);
  EXPECT_NEAR(sm::poisson_inverse_moment(0.0, 1, 1, 3.0), (1.0 - std::exp(-3.0)) / 3.0, 1e-14);
  EXPECT_NEAR(sm::poisson_inverse_moment(2.0, 1, 0, 1.0), 1.0, 1e-14);
  EXPECT_THROW(sm::poisson_inverse_moment(0.0, 0, 1, 1.0), sm::InvalidParameter);
  EXPECT_THROW(sm::poisson_inverse_moment(1.0, 1, 1, -1.0), sm::InvalidParameter);
}

TEST(PoissonInverseMoment, MatchesDirectSeries) {
  gen::for_cases(4001, 200, [](Rng& rng, std::size_t) {
    const double c = gen::any_c(rng);
    const auto d = static_cast<unsigned>(gen::size_in(rng, c > 0.0 ? 0 : 1, 8));
    const auto m = static_cast<unsigned>(gen::size_in(rng, 0, 16));
    const double p = gen::real_in(rng, 0.0, 8.0);
    const double s = c + d;
    // The series is cut once the tail bound drops below 1e-14 in absolute terms.
    EXPECT_NEAR(sm::poisson_inverse_moment(c, d, m, p), oracle::poisson_series(s, m, p),
                1e-14 + 1e-13 * oracle::poisson_series(s, m, p))
        << "c=" << c << " d=" << d << " m=" << m << " p=" << p;
    // Only c + d matters.
    if (d > 0) {
      EXPECT_NEAR(sm::poisson_inverse_moment(c + 1.0, d - 1, m, p),
                  sm::poisson_inverse_moment(c, d, m, p), 1e-15);
    }
  });
}

TEST(BetaFormula, SecondMomentExamples) {
  const double series = oracle::poisson_series(2.0, 1, 1.0);
  EXPECT_NEAR(sm::beta_formula(2, 1.0, 1.0), std::exp(-2.0), 1e-10);
  EXPECT_NEAR(sm::beta_formula(2, 1.0, 1.0), series * series, 1e-14);
  const double small_p = 1e-6;
  const double ratio = sm::beta_formula(2, small_p, 1.0) / small_p;
  EXPECT_GE(ratio, 0.24);
  EXPECT_LE(ratio, 0.26);
}

TEST(BetaFormula, FourthMomentClosedForm) {
  for (double p : {0.3, 1.0, 2.5}) {
    for (double c : {0.0, 0.2, 1.0}) {
      const double a1 = oracle::poisson_series(c + 1.0, 1, p);
      const double a2 = oracle::poisson_series(c + 1.0, 2, p);
      const double b2 = oracle::poisson_series(c + 2.0, 2, p);
      const double expected = p * a2 * a2 + 2.0 * p * p * b2 * a1 * a1;
      EXPECT_NEAR(sm::beta_formula(4, p, c), expected, 1e-13) << "p=" << p << " c=" << c;
    }
  }
}

TEST(BetaFormula, MatchesBruteForceSum) {
  gen::for_cases(4002, 40, [](Rng& rng, std::size_t) {
    const double p = gen::real_in(rng, 0.0, 4.0);
    const double c = gen::any_c(rng);
    for (int k = 0; k <= 8; ++k) {
      EXPECT_NEAR(sm::beta_formula(static_cast<std::size_t>(k), p, c),
                  oracle::beta_bruteforce(k, p, c), 1e-12)
          << "k=" << k << " p=" << p << " c=" << c;
    }
  });
}

TEST(BetaFormula, TrivialOrdersAndCap) {
  EXPECT_EQ(sm::beta_formula(0, 1.0, 1.0), 1.0);
  for (std::size_t k : {1, 3, 9, 15}) EXPECT_EQ(sm::beta_formula(k, 2.0, 0.5), 0.0);
  EXPECT_EQ(sm::beta_formula(4, 0.0, 1.0), 0.0);
  EXPECT_THROW(sm::beta_formula(17, 1.0, 1.0), sm::CapacityError);
  EXPECT_THROW(sm::beta_formula(2, -1.0, 1.0), sm::InvalidParameter);
  EXPECT_THROW(sm::beta_formula(2, 1.0, -1.0), sm::InvalidParameter);
  const double top = sm::beta_formula(16, 1.0, 1.0);
  EXPECT_TRUE(std::isfinite(top));
  EXPECT_GT(top, 0.0);
}

TEST(BetaFormula, BoundedByTauPowerAndAboveJensenStar) {
  gen::for_cases(4003, 40, [](Rng& rng, std::size_t) {
    const double p = gen::real_in(rng, 0.01, 5.0);
    const double c = gen::any_c(rng);
    const double tau = 1.0 / std::sqrt(1.0 + c);
    for (std::size_t k = 2; k <= 12; k += 2) {
      const double beta = sm::beta_formula(k, p, c);
      EXPECT_GT(beta, 0.0);
      EXPECT_LE(beta, std::pow(tau, static_cast<double>(k)) + 1e-12) << "k=" << k;
    }
    // Jensen on the single-edge path.
    EXPECT_GE(sm::beta_formula(2, p, c), p / std::pow(c + 1.0 + p, 2) - 1e-15);
  });
}

TEST(BetaGwMc, OddOrderIsExactlyZero) {
  const auto est = sm::beta_gw_mc(3, 1.0, 1.0, 1000, Rng(1));
  EXPECT_EQ(est.estimate, 0.0);
  EXPECT_EQ(est.std_error, 0.0);
  EXPECT_THROW(sm::beta_gw_mc(2, 1.0, 1.0, 99, Rng(1)), sm::InvalidParameter);
}

TEST(BetaGwMc, SecondMomentWithinThreeStandardErrors) {
  const auto est = sm::beta_gw_mc(2, 2.0, 0.0, 100000, Rng(41));
  EXPECT_EQ(est.samples, 100000u);
  const double a = oracle::poisson_series(1.0, 1, 2.0);
  const double expected = 2.0 * a * a;
  EXPECT_GT(est.std_error, 0.0);
  EXPECT_NEAR(est.estimate, expected, 3.0 * est.std_error);
}

TEST(BetaGwMc, AgreesWithFormulaAcrossGrid) {
  int outside = 0, total = 0;
  for (double p : {0.5, 1.5}) {
    for (double c : {0.2, 1.0}) {
      for (std::size_t k : {2, 4, 6}) {
        const Rng master = Rng(43).split(k).split(total);
        const auto est = sm::beta_gw_mc(k, p, c, 40000, master);
        outside += std::abs(est.estimate - sm::beta_formula(k, p, c)) > 3.0 * est.std_error;
        ++total;
      }
    }
  }
  // 12 comparisons at 3 sigma: more than one miss would be very unlikely.
  EXPECT_LE(outside, 1);
}

TEST(BetaGwMc, IndependentOfWorkerCount) {
  const Rng master(44);
  const auto a = sm::beta_gw_mc(4, 1.0, 0.5, 20000, master, 1);
  const auto b = sm::beta_gw_mc(4, 1.0, 0.5, 20000, master, 3);
  EXPECT_EQ(a.estimate, b.estimate);
  EXPECT_EQ(a.std_error, b.std_error);
  EXPECT_EQ(a.samples, b.samples);
}

TEST(BetaEmpirical, SmallExamples) {
  EXPECT_EQ(sm::beta_empirical(Graph(4), 1.0, 3), (std::vector<double>{0.0, 0.0, 0.0}));
  const Graph tri = Graph::from_edges(3, std::vector<Edge>{{0, 1}, {1, 2}, {0, 2}});
  const auto m = sm::beta_empirical(tri, 0.0, 3);
  EXPECT_NEAR(m[0], 0.0, 1e-15);
  EXPECT_NEAR(m[1], 0.5, 1e-15);
  EXPECT_NEAR(m[2], 0.25, 1e-15);
  EXPECT_THROW(sm::beta_empirical(tri, 0.0, 0), sm::InvalidParameter);
}

TEST(BetaEmpirical, MatchesDenseTraces) {
  gen::for_cases(4004, 60, [](Rng& rng, std::size_t) {
    const Graph g = gen::any_graph(rng, 50);
    const double c = gen::any_c(rng);
    const std::size_t kmax = gen::size_in(rng, 1, 10);
    const auto got = sm::beta_empirical(g, c, kmax);
    const auto expected = dense_traces(g, c, kmax);
    ASSERT_EQ(got.size(), kmax);
    for (std::size_t j = 0; j < kmax; ++j) EXPECT_NEAR(got[j], expected[j], 1e-12);
  });
}

TEST(BetaEmpirical, IndependentOfWorkerCount) {
  Rng rng(45);
  const Graph g = sm::sample_er(1500, 2.0, rng);
  EXPECT_EQ(sm::beta_empirical(g, 0.7, 8, 1), sm::beta_empirical(g, 0.7, 8, 4));
}

TEST(BetaEmpirical, ErAverageNearLimit) {
  const Rng master(46);
  double sum = 0.0;
  constexpr int reps = 20;
  for (int r = 0; r < reps; ++r) {
    Rng rng = master.split(r);
    sum += sm::beta_empirical(sm::sample_er(5000, 1.0, rng), 1.0, 2)[1];
  }
  EXPECT_NEAR(sum / reps, std::exp(-2.0), 0.01);
}
