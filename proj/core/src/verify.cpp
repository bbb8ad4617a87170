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

#include "spectral_markov/verify.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <vector>

#include "spectral_markov/graph.hpp"
#include "spectral_markov/markov.hpp"
#include "spectral_markov/spectra.hpp"

namespace spectral_markov {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::size_t uniform_size(std::size_t lo, std::size_t hi, Rng& rng) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

void record(CheckResult& r, double margin, bool strict = false) {
  ++r.cases;
  r.worst_margin = std::min(r.worst_margin, margin);
  if (strict ? !(margin > 0.0) : !(margin >= 0.0)) r.passed = false;
}

CheckResult start(std::string name) {
  CheckResult r;
  r.name = std::move(name);
  r.worst_margin = kInf;
  return r;
}

}  // namespace

CheckResult verify_two_edge_fixture(std::span<const double> cs) {
  auto r = start("two_edge_fixture");
  const Graph g = Graph::from_edges(5, std::vector<Edge>{{0, 1}, {2, 3}});
  double worst_error = 0.0;
  for (double c : cs) {
    const double s = 1.0 / (1.0 + c);
    const std::vector<double> expected{-s, -s, (1.0 - 4.0 / 5.0) * s, s, 1.0};
    const auto spectrum = kernel_spectrum(build_M(g, c));
    double err = 0.0;
    for (std::size_t i = 0; i < expected.size(); ++i) {
      err = std::max(err, std::abs(spectrum.eigenvalues[i] - expected[i]));
    }
    err = std::max(err, std::abs(second_abs_eigenvalue(spectrum) - s));
    worst_error = std::max(worst_error, err);
    record(r, 1e-8 - err);
  }
  r.details["max_abs_error"] = worst_error;
  r.details["tolerance"] = 1e-8;
  return r;
}

CheckResult verify_cycles(std::size_t min_length, std::size_t max_length,
                          std::span<const double> cs) {
  auto r = start("cycle_exactness");
  double worst_error = 0.0;
  for (std::size_t len = min_length; len <= max_length; ++len) {
    for (double c : cs) {
      const auto pair = perron_pair(build_K(cycle_graph(len), c));
      const double err = std::abs(pair.q - 1.0 / (1.0 + c / 2.0));
      worst_error = std::max(worst_error, err);
      record(r, 1e-10 - err);
    }
  }
  r.details["max_abs_error"] = worst_error;
  r.details["tolerance"] = 1e-10;
  return r;
}

CheckResult verify_trees(std::size_t count, std::size_t max_order, std::span<const double> cs,
                         Rng& rng) {
  auto r = start("tree_upper_bound");
  double max_ratio = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const Graph tree = random_labeled_tree(uniform_size(2, max_order, rng), rng);
    for (double c : cs) {
      const double q = perron_pair(build_K(tree, c)).q;
      max_ratio = std::max(max_ratio, q / tau(c));
      record(r, tau(c) - q, /*strict=*/true);
    }
  }
  r.details["max_rho_over_tau_c"] = max_ratio;
  return r;
}

CheckResult verify_unicyclic(std::size_t count, std::size_t max_order,
                             std::span<const double> cs, Rng& rng) {
  auto r = start("unicyclic_bounds");
  double min_lower_slack = kInf, min_upper_slack = kInf;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t cycle = uniform_size(3, 8, rng);
    const std::size_t order = uniform_size(cycle + 1, std::max(cycle + 1, max_order), rng);
    const Graph g = random_unicyclic(order, cycle, rng);
    for (double c : cs) {
      const double q = perron_pair(build_K(g, c)).q;
      const double lower = q - 1.0 / (1.0 + c / 2.0);
      const double upper = tau(c) - q;
      min_lower_slack = std::min(min_lower_slack, lower);
      min_upper_slack = std::min(min_upper_slack, upper);
      record(r, std::min(lower, upper), /*strict=*/true);
    }
  }
  r.details["min_rho_minus_cycle_value"] = min_lower_slack;
  r.details["min_tau_c_minus_rho"] = min_upper_slack;
  return r;
}

CheckResult verify_distance_layers(std::size_t count, std::size_t max_order, std::span<const double> cs,
                           Rng& rng) {
  auto r = start("distance_layer_identity");
  double worst = 0.0;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t order = uniform_size(2, max_order, rng);
    const Graph g = random_connected(order, uniform_size(0, order, rng), rng);
    const double c = cs[i % cs.size()];
    std::vector<Vertex> targets;
    std::bernoulli_distribution pick(0.5);
    for (Vertex v = 0; v < order; ++v) {
      if (pick(rng)) targets.push_back(v);
    }
    if (targets.empty()) targets.push_back(static_cast<Vertex>(uniform_size(0, order - 1, rng)));
    const auto pair = perron_pair(build_K(g, c));
    const double residual = lemma21_residual(g, targets, pair, c);
    worst = std::max(worst, residual);
    record(r, 1e-8 - residual);
  }
  r.details["max_residual"] = worst;
  r.details["tolerance"] = 1e-8;
  return r;
}

CheckResult verify_interlacing(std::size_t count, std::size_t max_order,
                               std::span<const double> cs, Rng& rng) {
  auto r = start("interlacing");
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = uniform_size(2, max_order, rng);
    const double p = std::uniform_real_distribution<double>(0.1, 3.0)(rng);
    const double c = cs[i % cs.size()];
    const Graph g = sample_er(n, std::min(p, static_cast<double>(n)), rng);
    const auto result =
        check_interlacing(kernel_spectrum(build_K(g, c)), kernel_spectrum(build_M(g, c)));
    record(r, result.worst_margin + kInterlacingTolerance);
  }
  r.details["tolerance"] = kInterlacingTolerance;
  return r;
}

CheckResult verify_diagonal_bound(std::size_t count, std::size_t n, double p,
                                  std::span<const double> cs, std::size_t kmax, Rng& rng) {
  auto r = start("diagonal_power_bound");
  std::size_t checked = 0;
  while (checked < count) {
    const Graph g = sample_er(n, p, rng);
    const auto components = connected_components(g);
    const auto largest = std::max_element(
        components.begin(), components.end(),
        [](const Component& a, const Component& b) { return a.vertices.size() < b.vertices.size(); });
    if (largest->vertices.size() < 2) continue;
    const Graph comp = induced_subgraph(g, largest->vertices).graph;
    for (double c : cs) {
      const auto result = diag_power_bound_check(build_K(comp, c), kmax);
      record(r, result.worst_margin + 1e-10);
    }
    ++checked;
  }
  r.details["kmax"] = kmax;
  return r;
}

CheckResult verify_superposition(std::size_t n, double p, std::size_t replicates, Rng& rng) {
  auto r = start("superposition_coupling");
  const double pairs = static_cast<double>(n) * static_cast<double>(n - 1) / 2.0;
  double edges = 0.0;
  for (std::size_t i = 0; i < replicates; ++i) {
    edges += static_cast<double>(sample_superposition(n, p, rng).num_edges());
  }
  const double q = p / static_cast<double>(n);
  const double observed = edges / (pairs * static_cast<double>(replicates));
  const double se = std::sqrt(q * (1.0 - q) / (pairs * static_cast<double>(replicates)));
  record(r, 3.0 * se - std::abs(observed - q));

  std::size_t attempts = 0;
  constexpr std::size_t kRateDraws = 2000;
  for (std::size_t i = 0; i < kRateDraws; ++i) {
    attempts += sample_superposition_counted(10, 1.0, rng).attempts;
  }
  const double acceptance = static_cast<double>(kRateDraws) / static_cast<double>(attempts);
  const double floor = 0.25 * std::exp(-1.0);
  record(r, acceptance - floor);

  r.details["edge_probability"] = observed;
  r.details["expected_edge_probability"] = q;
  r.details["standard_error"] = se;
  r.details["acceptance_rate_n10_p1"] = acceptance;
  r.details["acceptance_floor"] = floor;
  return r;
}

}  // namespace spectral_markov
