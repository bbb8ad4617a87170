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

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "spectral_markov/moments.hpp"

namespace spectral_markov {

enum class Command { kGapSweep, kEsd, kMoments, kVerify };
enum class OutputFormat { kCsv, kJson };

const char* to_string(Command command) noexcept;
std::optional<Command> parse_command(std::string_view name);
const char* to_string(OutputFormat format) noexcept;
std::optional<OutputFormat> parse_format(std::string_view name);

/// Everything needed to rerun an experiment bit for bit.
struct ExperimentConfig {
  Command command = Command::kVerify;
  std::size_t n = 0;
  std::vector<double> p_grid;
  std::vector<double> c_grid;
  std::size_t replicates = 0;
  std::size_t kmax = 0;
  std::size_t mc_trees = 0;
  std::optional<std::uint64_t> seed;
  std::size_t workers = 1;
  std::string out;  // empty: standard output
  OutputFormat format = OutputFormat::kCsv;
  std::size_t bins = 50;

  /// Throws InvalidParameter for inconsistent settings and CapacityError when
  /// a dense eigensolve would exceed kDenseEigenCap.
  void validate() const;
  [[nodiscard]] nlohmann::ordered_json to_json() const;
};

/// Desk-scale defaults for each command. The seed is left unset.
ExperimentConfig default_config(Command command);

/// Flat result table: `rows[i]` is a JSON array aligned with `columns`.
struct Table {
  std::vector<std::string> columns;
  std::vector<nlohmann::ordered_json> rows;
};

struct ExperimentOutput {
  bool passed = true;
  Table table;
  nlohmann::ordered_json summary = nlohmann::ordered_json::object();
};

/// One M_n spectrum per (c, p, replicate); records lambda_bar against tau_c
/// and tau_{c/k}, k = floor(p) + 1, plus per-(c, p) boxplot statistics.
/// For p < 1 at least 90% of replicates must fall in [tau_c / 2, tau_c];
/// for p >= 1 every replicate must satisfy lambda_bar <= tau_{c/k} + 1e-6.
ExperimentOutput run_gap_sweep(const ExperimentConfig& config);

/// Pools K spectra into a histogram over [-1, 1] and compares the pooled
/// moments with the limiting formula.
ExperimentOutput run_esd(const ExperimentConfig& config);

/// The exported MomentReport object, keys in fixed order.
nlohmann::ordered_json to_json(const MomentReport& report);

/// Formula, Galton-Watson Monte Carlo and finite-n trace moments side by side.
ExperimentOutput run_moments(const ExperimentConfig& config);

/// Structural suites: two-edge fixture, cycles, trees, unicyclic graphs, the
/// distance-layer identity, interlacing, diagonal power bounds, superposition.
ExperimentOutput run_verify(const ExperimentConfig& config);

ExperimentOutput run_experiment(const ExperimentConfig& config);

/// CSV with a "# config: {...}" comment line, then a header row.
void write_csv(std::ostream& out, const ExperimentConfig& config, const Table& table);

/// {"config", "passed", "summary", "rows"} with rows as column-keyed objects.
nlohmann::ordered_json to_json(const ExperimentConfig& config, const ExperimentOutput& output);

/// Writes the output in the configured format. For CSV files the summary goes
/// to "<out>.summary.json" next to the table.
void write_output(const ExperimentConfig& config, const ExperimentOutput& output,
                  std::ostream& fallback);

}  // namespace spectral_markov
