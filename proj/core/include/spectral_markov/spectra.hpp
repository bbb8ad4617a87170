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

#include <cmath>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "spectral_markov/graph.hpp"
#include "spectral_markov/markov.hpp"

namespace spectral_markov {

/// Largest order accepted by dense eigensolves (~1 GiB of doubles for the
/// matrix and solver workspace at the cap).
inline constexpr std::size_t kDenseEigenCap = 8192;
/// Eigenvalues closer than this are treated as one cluster.
inline constexpr double kClusterTolerance = 1e-8;

/// tau_c = 1/sqrt(1+c), the edge of the limiting spectral support of K.
inline double tau(double c) { return 1.0 / std::sqrt(1.0 + c); }

/// Approximate bytes needed to densify and solve an n x n problem.
std::size_t dense_eigen_bytes(std::size_t n) noexcept;

enum class SpectrumSource { kK, kM, kOther };

struct Spectrum {
  std::vector<double> eigenvalues;  // ascending
  SpectrumSource source = SpectrumSource::kOther;

  [[nodiscard]] std::size_t size() const noexcept { return eigenvalues.size(); }
};

/// All eigenvalues of a symmetric matrix, ascending. Throws InvalidInput if
/// max |B - B^T| exceeds 1e-12.
Spectrum sym_eigs(const DenseMatrix& b, SpectrumSource source = SpectrumSource::kOther);

/// Spectra of the kernels through their symmetrized forms. Throws
/// CapacityError above kDenseEigenCap.
Spectrum kernel_spectrum(const SparseKernel& k);
Spectrum kernel_spectrum(const MarkovKernel& m);

/// Number of eigenvalues within `tolerance` of `value`.
std::size_t multiplicity(const Spectrum& s, double value, double tolerance = kClusterTolerance);

/// max(|lambda_1|, |lambda_{n-1}|); the spectral gap is one minus this.
double second_abs_eigenvalue(const Spectrum& s);

/// Second largest absolute eigenvalue of M built from (g, c).
double lambda_bar(const Graph& g, double c);

/// Histogram of eigenvalues over uniform bins on [-1, 1]. Values outside the
/// interval (round-off) are counted in the end bins.
struct EsdHistogram {
  std::vector<std::size_t> counts;
  std::size_t n = 0;

  explicit EsdHistogram(std::size_t bins);
  void add(std::span<const double> eigenvalues);
  [[nodiscard]] std::size_t bins() const noexcept { return counts.size(); }
  [[nodiscard]] double bin_left(std::size_t i) const noexcept;
  [[nodiscard]] double bin_right(std::size_t i) const noexcept;
};

/// Spectral radius q of K on a connected component and its positive
/// eigenvector f, normalized so max f = 1.
struct PerronPair {
  double q = 0.0;
  std::vector<double> f;
  std::size_t iterations = 0;
};

/// Power iteration on (B + I)/2 with B the symmetrized K; the shift removes
/// the +-q oscillation of bipartite components. Throws InvalidInput for
/// single-vertex or disconnected kernels.
PerronPair perron_pair(const SparseKernel& k);

/// L-infinity residual |K f - q f| relative to max |f|.
double perron_residual(const SparseKernel& k, const PerronPair& pair);

struct InterlacingResult {
  bool holds = true;
  /// min over i < n of min(l_i(M) - l_i(K), l_{i+1}(K) - l_i(M)).
  double worst_margin = 0.0;
  std::size_t worst_index = 0;
};

inline constexpr double kInterlacingTolerance = 1e-8;

/// Checks l_i(K) <= l_i(M) <= l_{i+1}(K) for i < n up to kInterlacingTolerance.
InterlacingResult check_interlacing(const Spectrum& k_spectrum, const Spectrum& m_spectrum);

/// Relative residual of the distance-layer identity satisfied by a Perron
/// pair: with h the distance to `targets`, w = f q^h and d_0, d_{-1} the
/// neighbor counts in the same and the closer layer,
///   q^-1 sum d_0 w + q^-2 sum d_{-1} w = sum (d_0 + d_{-1} + c) w.
double lemma21_residual(const Graph& g, std::span<const Vertex> targets, const PerronPair& pair,
                        double c);

struct DiagonalBoundResult {
  bool holds = true;
  double worst_margin = 0.0;  // min over v, k of q^k - |(K^k)_vv|
};

/// Checks |(K^k)_vv| <= q^k + 1e-10 for every vertex and 1 <= k <= kmax.
DiagonalBoundResult diag_power_bound_check(const SparseKernel& k, std::size_t kmax);

/// CSV "index,eigenvalue" with 1-based index.
void write_spectrum_csv(std::ostream& out, const Spectrum& s);
/// CSV "bin_left,bin_right,count".
void write_histogram_csv(std::ostream& out, const EsdHistogram& h);

}  // namespace spectral_markov
