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

#include <cstdint>
#include <limits>
#include <random>

namespace spectral_markov {

/// Seeded pseudo-random generator with an explicit stream id.
///
/// The engine state is derived from (seed, stream) through std::seed_seq, so
/// identical pairs reproduce identical draw sequences. Independent streams for
/// parallel replicates are obtained with split(), which hashes the child index
/// into a new stream id; results therefore never depend on how work is
/// scheduled across threads.
///
/// Satisfies UniformRandomBitGenerator, so it can drive <random>
/// distributions directly.
class Rng {
 public:
  using result_type = std::mt19937_64::result_type;

  explicit Rng(std::uint64_t seed, std::uint64_t stream = 0);

  /// Child generator for sub-task `child`; does not advance this generator.
  [[nodiscard]] Rng split(std::uint64_t child) const;

  [[nodiscard]] std::uint64_t seed() const noexcept { return seed_; }
  [[nodiscard]] std::uint64_t stream() const noexcept { return stream_; }

  static constexpr result_type min() noexcept {
    return std::mt19937_64::min();
  }
  static constexpr result_type max() noexcept {
    return std::mt19937_64::max();
  }
  result_type operator()() { return engine_(); }

  /// Uniform double in [0, 1).
  double uniform();

 private:
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

}  // namespace spectral_markov
