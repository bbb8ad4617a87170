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

#include "spectral_markov/moments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "spectral_markov/errors.hpp"
#include "spectral_markov/parallel.hpp"
#include "spectral_markov/stats.hpp"
#include "spectral_markov/walk.hpp"

namespace spectral_markov {
namespace {

// Depth-first extension of canonical closed paths that stay on a tree.
class GammaEnumerator {
 public:
  GammaEnumerator(std::size_t k, std::size_t t,
                  const std::function<void(const CanonicalPath&)>& visit)
      : k_(k), t_(t), visit_(visit), adjacent_(t, std::vector<bool>(t, false)), depth_(t, 0) {
    path_.reserve(k + 1);
  }

  void run() {
    path_.assign(1, 0);
    used_ = 1;
    extend(0);
  }

 private:
  // Remaining steps must cover the way home plus two traversals of every
  // tree edge still to be created.
  bool feasible(Vertex at, std::size_t remaining) const {
    return depth_[at] + 2 * (t_ - used_) <= remaining;
  }

  void extend(std::size_t step) {
    const Vertex at = path_.back();
    if (step == k_) {
      if (at == 0 && used_ == t_) emit();
      return;
    }
    const std::size_t remaining = k_ - step - 1;
    for (Vertex next = 0; next < used_; ++next) {
      if (!adjacent_[at][next] || !feasible(next, remaining)) continue;
      path_.push_back(next);
      extend(step + 1);
      path_.pop_back();
    }
    if (used_ < t_) {
      const auto fresh = static_cast<Vertex>(used_);
      adjacent_[at][fresh] = adjacent_[fresh][at] = true;
      depth_[fresh] = depth_[at] + 1;
      ++used_;
      if (feasible(fresh, remaining)) {
        path_.push_back(fresh);
        extend(step + 1);
        path_.pop_back();
      }
      --used_;
      adjacent_[at][fresh] = adjacent_[fresh][at] = false;
    }
  }

  void emit() {
    CanonicalPath out;
    out.distinct = t_;
    out.labels.reserve(path_.size());
    for (Vertex v : path_) out.labels.push_back(v + 1);
    out.degree.assign(t_, 0);
    out.out_count.assign(t_, 0);
    for (Vertex a = 0; a < t_; ++a) {
      for (Vertex b = a + 1; b < t_; ++b) {
        if (!adjacent_[a][b]) continue;
        out.tree_edges.push_back({a + 1, b + 1});
        ++out.degree[a];
        ++out.degree[b];
      }
    }
    for (std::size_t j = 0; j < k_; ++j) ++out.out_count[path_[j]];
    visit_(out);
  }

  std::size_t k_;
  std::size_t t_;
  const std::function<void(const CanonicalPath&)>& visit_;
  std::vector<std::vector<bool>> adjacent_;
  std::vector<std::size_t> depth_;
  std::vector<Vertex> path_;
  std::size_t used_ = 0;
};

constexpr double kSeriesTolerance = 1e-14;
constexpr std::size_t kTreesPerChunk = 4096;
constexpr std::size_t kVerticesPerChunk = 256;

}  // namespace

void for_each_gamma(std::size_t k, std::size_t t,
                    const std::function<void(const CanonicalPath&)>& visit) {
  if (k % 2 == 1 || t < 2 || t > k / 2 + 1) return;
  GammaEnumerator(k, t, visit).run();
}

std::vector<CanonicalPath> enumerate_gamma(std::size_t k, std::size_t t) {
  if (k % 2 == 1) return {};
  if (t < 2 || t > k / 2 + 1) {
    throw InvalidParameter("enumerate_gamma: need 2 <= t <= k/2 + 1, got k=" + std::to_string(k) +
                           " t=" + std::to_string(t));
  }
  std::vector<CanonicalPath> out;
  for_each_gamma(k, t, [&](const CanonicalPath& path) { out.push_back(path); });
  return out;
}

double poisson_inverse_moment(double c, unsigned d, unsigned m, double p) {
  const double base = c + static_cast<double>(d);
  if (!(base > 0.0)) throw InvalidParameter("poisson_inverse_moment: need c + d > 0");
  if (!(p >= 0.0)) throw InvalidParameter("poisson_inverse_moment: need p >= 0");
  const double exponent = -static_cast<double>(m);
  const double scale = std::pow(base, exponent);
  double weight = std::exp(-p);  // P{xi = j}
  double sum = 0.0;
  for (std::size_t j = 0;; ++j) {
    sum += weight * std::pow(base + static_cast<double>(j), exponent);
    const double next_weight = weight * p / static_cast<double>(j + 1);
    const double ratio = p / static_cast<double>(j + 2);
    if (ratio < 1.0 && next_weight / (1.0 - ratio) * scale < kSeriesTolerance) break;
    weight = next_weight;
  }
  return sum;
}

double beta_formula(std::size_t k, double p, double c) {
  if (!(p >= 0.0) || !(c >= 0.0)) throw InvalidParameter("beta_formula: need p >= 0 and c >= 0");
  if (k > kMaxMomentOrder) {
    throw CapacityError("beta_formula: order " + std::to_string(k) + " exceeds the cap of " +
                        std::to_string(kMaxMomentOrder));
  }
  if (k == 0) return 1.0;
  if (k % 2 == 1) return 0.0;

  // cache[d][m] = E[(c + d + xi)^-m]
  const std::size_t max_t = k / 2 + 1;
  std::vector<std::vector<double>> cache(max_t, std::vector<double>(k + 1, -1.0));
  auto expectation = [&](std::size_t d, std::size_t m) {
    double& slot = cache[d][m];
    if (slot < 0.0) {
      slot = poisson_inverse_moment(c, static_cast<unsigned>(d), static_cast<unsigned>(m), p);
    }
    return slot;
  };

  double total = 0.0;
  for (std::size_t t = 2; t <= max_t; ++t) {
    double layer = 0.0;
    for_each_gamma(k, t, [&](const CanonicalPath& path) {
      double product = 1.0;
      for (std::size_t a = 0; a < t; ++a) product *= expectation(path.degree[a], path.out_count[a]);
      layer += product;
    });
    total += std::pow(p, static_cast<double>(t - 1)) * layer;
  }
  return total;
}

McEstimate beta_gw_mc(std::size_t k, double p, double c, std::size_t num_trees,
                      const Rng& master, std::size_t workers) {
  if (k % 2 == 1) return {};
  if (num_trees < 100) throw InvalidParameter("beta_gw_mc: need at least 100 trees");
  const std::size_t chunks = (num_trees + kTreesPerChunk - 1) / kTreesPerChunk;
  std::vector<RunningStats> partial(chunks);
  parallel_for(chunks, workers, [&](std::size_t chunk) {
    Rng rng = master.split(chunk);
    const std::size_t begin = chunk * kTreesPerChunk;
    const std::size_t end = std::min(num_trees, begin + kTreesPerChunk);
    for (std::size_t i = begin; i < end; ++i) partial[chunk].add(gw_return_sample(p, c, k, rng));
  });
  RunningStats total;
  for (const auto& s : partial) total.merge(s);
  return {total.mean(), total.stderr_of_mean(), total.count()};
}

std::vector<double> beta_empirical(const Graph& g, double c, std::size_t kmax,
                                   std::size_t workers) {
  if (kmax == 0) throw InvalidParameter("beta_empirical: kmax must be at least 1");
  const std::size_t n = g.num_vertices();
  const std::size_t chunks = (n + kVerticesPerChunk - 1) / kVerticesPerChunk;
  std::vector<std::vector<double>> partial(chunks, std::vector<double>(kmax, 0.0));
  parallel_for(chunks, workers, [&](std::size_t chunk) {
    ReturnProbabilitySolver solver(g, c);
    const std::size_t begin = chunk * kVerticesPerChunk;
    const std::size_t end = std::min(n, begin + kVerticesPerChunk);
    for (std::size_t v = begin; v < end; ++v) {
      const auto profile = solver.profile(static_cast<Vertex>(v), kmax);
      for (std::size_t j = 1; j <= kmax; ++j) partial[chunk][j - 1] += profile.r[j];
    }
  });
  std::vector<double> out(kmax, 0.0);
  for (const auto& part : partial) {
    for (std::size_t j = 0; j < kmax; ++j) out[j] += part[j];
  }
  if (n > 0) {
    for (double& x : out) x /= static_cast<double>(n);
  }
  return out;
}

}  // namespace spectral_markov
