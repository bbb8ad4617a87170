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

#include "spectral_markov/spectra.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <iomanip>
#include <limits>
#include <ostream>
#include <string>

#include "spectral_markov/errors.hpp"
#include "spectral_markov/walk.hpp"

namespace spectral_markov {

std::size_t dense_eigen_bytes(std::size_t n) noexcept {
  // Input matrix plus the solver's in-place copy and tridiagonal workspace.
  return 2 * n * n * sizeof(double) + 8 * n * sizeof(double);
}

Spectrum sym_eigs(const DenseMatrix& b, SpectrumSource source) {
  if (b.rows() != b.cols()) throw InvalidInput("sym_eigs: matrix is not square");
  Spectrum out;
  out.source = source;
  if (b.rows() == 0) return out;
  const double asymmetry = (b - b.transpose()).cwiseAbs().maxCoeff();
  if (asymmetry > 1e-12) {
    throw InvalidInput("sym_eigs: matrix asymmetry " + std::to_string(asymmetry) +
                       " exceeds 1e-12");
  }
  Eigen::SelfAdjointEigenSolver<DenseMatrix> solver(b, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw InvalidInput("sym_eigs: eigensolver did not converge");
  const auto& values = solver.eigenvalues();
  out.eigenvalues.assign(values.data(), values.data() + values.size());
  std::stable_sort(out.eigenvalues.begin(), out.eigenvalues.end());
  return out;
}

namespace {

void require_dense_capacity(std::size_t n) {
  if (n > kDenseEigenCap) {
    throw CapacityError("dense eigensolve refused: n=" + std::to_string(n) + " exceeds cap " +
                        std::to_string(kDenseEigenCap) + " (would need about " +
                        std::to_string(dense_eigen_bytes(n) >> 20) + " MiB)");
  }
}

}  // namespace

Spectrum kernel_spectrum(const SparseKernel& k) {
  require_dense_capacity(k.size());
  return sym_eigs(symmetrize(k), SpectrumSource::kK);
}

Spectrum kernel_spectrum(const MarkovKernel& m) {
  require_dense_capacity(m.size());
  return sym_eigs(symmetrize(m), SpectrumSource::kM);
}

std::size_t multiplicity(const Spectrum& s, double value, double tolerance) {
  return static_cast<std::size_t>(std::count_if(
      s.eigenvalues.begin(), s.eigenvalues.end(),
      [&](double x) { return std::abs(x - value) <= tolerance; }));
}

double second_abs_eigenvalue(const Spectrum& s) {
  const std::size_t n = s.size();
  if (n < 2) throw InvalidInput("second_abs_eigenvalue: need at least 2 eigenvalues");
  return std::max(std::abs(s.eigenvalues[0]), std::abs(s.eigenvalues[n - 2]));
}

double lambda_bar(const Graph& g, double c) {
  return second_abs_eigenvalue(kernel_spectrum(build_M(g, c)));
}

EsdHistogram::EsdHistogram(std::size_t bins) : counts(bins, 0) {
  if (bins == 0) throw InvalidParameter("histogram needs at least one bin");
}

void EsdHistogram::add(std::span<const double> eigenvalues) {
  const auto b = static_cast<double>(bins());
  for (double x : eigenvalues) {
    const double pos = std::floor((x + 1.0) / 2.0 * b);
    const auto idx = static_cast<std::size_t>(std::clamp(pos, 0.0, b - 1.0));
    ++counts[idx];
    ++n;
  }
}

double EsdHistogram::bin_left(std::size_t i) const noexcept {
  return -1.0 + 2.0 * static_cast<double>(i) / static_cast<double>(bins());
}

double EsdHistogram::bin_right(std::size_t i) const noexcept { return bin_left(i + 1); }

namespace {

constexpr std::size_t kMaxPowerIterations = 50'000'000;

// y = (B x + x) / 2 with B = D^{-1/2} A D^{-1/2}.
void apply_shifted(const SparseKernel& k, std::span<const double> inv_sqrt,
                   std::span<const double> x, std::span<double> y) {
  const Graph& g = k.graph();
  for (Vertex i = 0; i < k.size(); ++i) {
    double acc = 0.0;
    for (Vertex j : g.neighbors(i)) acc += inv_sqrt[j] * x[j];
    y[i] = 0.5 * (inv_sqrt[i] * acc + x[i]);
  }
}

double dot(std::span<const double> a, std::span<const double> b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace

double perron_residual(const SparseKernel& k, const PerronPair& pair) {
  std::vector<double> kf(k.size());
  k.apply(pair.f, kf);
  double worst = 0.0, scale = 0.0;
  for (std::size_t i = 0; i < kf.size(); ++i) {
    worst = std::max(worst, std::abs(kf[i] - pair.q * pair.f[i]));
    scale = std::max(scale, std::abs(pair.f[i]));
  }
  return worst / scale;
}

PerronPair perron_pair(const SparseKernel& k) {
  const std::size_t n = k.size();
  if (n < 2) throw InvalidInput("perron_pair: component must have at least 2 vertices");
  if (connected_components(k.graph()).size() != 1) {
    throw InvalidInput("perron_pair: kernel graph is not connected");
  }
  std::vector<double> inv_sqrt(n), x(n), y(n);
  for (std::size_t i = 0; i < n; ++i) {
    inv_sqrt[i] = 1.0 / std::sqrt(k.weights()[i]);
    x[i] = 1.0 / inv_sqrt[i];  // f = 1 in the unsymmetrized coordinates
  }
  double norm = std::sqrt(dot(x, x));
  for (double& v : x) v /= norm;

  PerronPair out;
  double previous = std::numeric_limits<double>::infinity();
  for (std::size_t it = 1; it <= kMaxPowerIterations; ++it) {
    apply_shifted(k, inv_sqrt, x, y);
    const double rayleigh = dot(x, y);
    norm = std::sqrt(dot(y, y));
    for (std::size_t i = 0; i < n; ++i) x[i] = y[i] / norm;
    if (std::abs(rayleigh - previous) < 1e-12) {
      out.q = 2.0 * rayleigh - 1.0;
      out.f.resize(n);
      for (std::size_t i = 0; i < n; ++i) out.f[i] = x[i] * inv_sqrt[i];
      const double top = *std::max_element(out.f.begin(), out.f.end());
      for (double& v : out.f) v /= top;
      out.iterations = it;
      // The Rayleigh quotient settles quadratically faster than the vector;
      // keep iterating until the eigen-equation itself holds.
      if (perron_residual(k, out) <= 1e-11) return out;
    }
    previous = rayleigh;
  }
  throw InvalidInput("perron_pair: power iteration did not converge");
}

InterlacingResult check_interlacing(const Spectrum& k_spectrum, const Spectrum& m_spectrum) {
  const std::size_t n = k_spectrum.size();
  if (m_spectrum.size() != n) throw InvalidInput("check_interlacing: spectra differ in size");
  InterlacingResult out;
  out.worst_margin = std::numeric_limits<double>::infinity();
  const auto& lk = k_spectrum.eigenvalues;
  const auto& lm = m_spectrum.eigenvalues;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const double margin = std::min(lm[i] - lk[i], lk[i + 1] - lm[i]);
    if (margin < out.worst_margin) {
      out.worst_margin = margin;
      out.worst_index = i;
    }
  }
  if (n < 2) out.worst_margin = 0.0;
  out.holds = out.worst_margin >= -kInterlacingTolerance;
  return out;
}

double lemma21_residual(const Graph& g, std::span<const Vertex> targets, const PerronPair& pair,
                        double c) {
  const std::size_t n = g.num_vertices();
  if (targets.empty()) throw InvalidInput("lemma21_residual: target set is empty");
  if (pair.f.size() != n) throw InvalidInput("lemma21_residual: Perron vector size mismatch");
  constexpr auto kFar = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> h(n, kFar);
  std::vector<Vertex> queue;
  for (Vertex t : targets) {
    if (t >= n) throw InvalidInput("lemma21_residual: target vertex outside the graph");
    if (h[t] == 0) continue;
    h[t] = 0;
    queue.push_back(t);
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex v : g.neighbors(u)) {
      if (h[v] == kFar) {
        h[v] = h[u] + 1;
        queue.push_back(v);
      }
    }
  }
  if (queue.size() != n) throw InvalidInput("lemma21_residual: graph is not connected");

  const double q = pair.q;
  double same = 0.0, closer = 0.0, rhs = 0.0;
  for (Vertex u = 0; u < n; ++u) {
    const double w = pair.f[u] * std::pow(q, static_cast<double>(h[u]));
    std::size_t d0 = 0, dminus = 0;
    for (Vertex v : g.neighbors(u)) {
      if (h[v] == h[u]) ++d0;
      if (h[v] + 1 == h[u]) ++dminus;
    }
    same += static_cast<double>(d0) * w;
    closer += static_cast<double>(dminus) * w;
    rhs += (static_cast<double>(d0 + dminus) + c) * w;
  }
  const double lhs = same / q + closer / (q * q);
  return std::abs(lhs - rhs) / std::abs(rhs);
}

DiagonalBoundResult diag_power_bound_check(const SparseKernel& k, std::size_t kmax) {
  const PerronPair pair = perron_pair(k);
  ReturnProbabilitySolver solver(k.graph(), k.c());
  DiagonalBoundResult out;
  out.worst_margin = std::numeric_limits<double>::infinity();
  for (Vertex v = 0; v < k.size(); ++v) {
    const auto profile = solver.profile(v, kmax);
    double qk = 1.0;
    for (std::size_t step = 1; step <= kmax; ++step) {
      qk *= pair.q;
      out.worst_margin = std::min(out.worst_margin, qk - std::abs(profile.r[step]));
    }
  }
  out.holds = out.worst_margin >= -1e-10;
  return out;
}

void write_spectrum_csv(std::ostream& out, const Spectrum& s) {
  const auto precision = out.precision();
  out << std::setprecision(17) << "index,eigenvalue\n";
  for (std::size_t i = 0; i < s.size(); ++i) out << i + 1 << ',' << s.eigenvalues[i] << '\n';
  out.precision(precision);
}

void write_histogram_csv(std::ostream& out, const EsdHistogram& h) {
  const auto precision = out.precision();
  out << std::setprecision(17) << "bin_left,bin_right,count\n";
  for (std::size_t i = 0; i < h.bins(); ++i) {
    out << h.bin_left(i) << ',' << h.bin_right(i) << ',' << h.counts[i] << '\n';
  }
  out.precision(precision);
}

}  // namespace spectral_markov
