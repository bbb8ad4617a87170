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

#include <CLI11.hpp>
#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "spectral_markov/errors.hpp"
#include "spectral_markov/experiments.hpp"

namespace sm = spectral_markov;

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spectra of random Markov matrices built from Erdos-Renyi graphs."};
  app.set_help_flag("-h,--help", "Show help and exit");

  std::string command;
  std::optional<std::size_t> n, reps, kmax, mc_trees, workers, bins;
  std::optional<std::uint64_t> seed;
  std::vector<double> p_grid, c_grid;
  std::string out;
  std::string format = "csv";

  app.add_option("command", command, "gap-sweep | esd | moments | verify")
      ->required()
      ->check(CLI::IsMember({"gap-sweep", "esd", "moments", "verify"}));
  app.add_option("--n", n, "Graph order");
  app.add_option("--p", p_grid, "Mean degree grid, comma separated")->delimiter(',');
  app.add_option("--c", c_grid, "Regularization grid, comma separated")->delimiter(',');
  app.add_option("--reps", reps, "Replicates per grid cell");
  app.add_option("--kmax", kmax, "Largest moment order / walk length");
  app.add_option("--mc-trees", mc_trees, "Galton-Watson trees per Monte Carlo estimate");
  app.add_option("--seed", seed, "Master seed (required)");
  app.add_option("--workers", workers, "Worker threads");
  app.add_option("--bins", bins, "Histogram bins over [-1, 1] (esd)");
  app.add_option("--out", out, "Output path; standard output when omitted");
  app.add_option("--format", format, "csv | json")->check(CLI::IsMember({"csv", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitPass : kExitUsage;
  }

  sm::ExperimentConfig cfg = sm::default_config(*sm::parse_command(command));
  if (n) cfg.n = *n;
  if (!p_grid.empty()) cfg.p_grid = p_grid;
  if (!c_grid.empty()) cfg.c_grid = c_grid;
  if (reps) cfg.replicates = *reps;
  if (kmax) cfg.kmax = *kmax;
  if (mc_trees) cfg.mc_trees = *mc_trees;
  if (workers) cfg.workers = *workers;
  if (bins) cfg.bins = *bins;
  cfg.seed = seed;
  cfg.out = out;
  cfg.format = *sm::parse_format(format);

  try {
    cfg.validate();
  } catch (const std::exception& e) {
    std::cerr << "spectral-markov: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    const auto result = sm::run_experiment(cfg);
    sm::write_output(cfg, result, std::cout);
    std::cerr << command << ": " << (result.passed ? "PASS" : "FAIL") << '\n';
    return result.passed ? kExitPass : kExitFail;
  } catch (const std::exception& e) {
    std::cerr << "spectral-markov: " << e.what() << '\n';
    return kExitFail;
  }
}
