// Copyright 2026 The steerkit authors
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
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "steerkit/bounds.hpp"
#include "steerkit/estimation.hpp"
#include "steerkit/simulator.hpp"
#include "steerkit/steering_test.hpp"

namespace steerkit {

/// Resolved run configuration. Parsed from a JSON config file with CLI flag
/// overrides; all randomness derives from `seed` through the documented
/// stream-splitting rule.
struct RunConfig {
    double v = 0.97;
    double phi_true = 0.7853981633974483; // pi/4
    double mu = 0.7853981633974483;
    double sigma = 0.19634954084936207; // pi/16
    double v0 = 0.95;
    std::vector<std::uint64_t> n_z{3000};
    std::uint64_t n_y = 495;
    std::uint64_t repetitions = 200;
    std::uint64_t bootstrap_trials = 50;
    double bootstrap_pass_fraction = kDefaultBootstrapPassFraction;
    std::uint64_t seed = 1;
    int grid_panels = kDefaultGridPanels;
    std::string out = "out";
    /// "fixed": every experiment simulates at (v, phi_true);
    /// "prior": each experiment draws its true (phi, v) from the prior.
    std::string truth_mode = "fixed";
    bool deterministic_interleave = false;

    void validate() const;
    JointPrior prior() const;
    std::string to_json() const;

    static RunConfig from_json_file(const std::string& path);
    static RunConfig from_json_text(const std::string& text);
};

/// One simulated experiment run end to end.
struct ExperimentOutcome {
    ExperimentConfig sim;
    CountRecord record;
    EstimationResult estimate;
    GeneratorEstimate generator;
};

/// Deterministic per-cell seed: cell index = (n_z index << 32) | repetition.
std::uint64_t experiment_seed(std::uint64_t master_seed, std::uint64_t nz_index,
                              std::uint64_t repetition);

/// Simulate + estimate one cell of the (n_z, repetition) sweep. Truth is
/// taken from `config` or drawn from the prior according to
/// config.truth_mode.
ExperimentOutcome run_experiment_cell(const RunConfig& config, const Estimator& estimator,
                                      std::uint64_t n_z, std::uint64_t nz_index,
                                      std::uint64_t repetition);

/// Emits the bound tables: conditional Fisher information sweeps, violation
/// thresholds, inverse-matrix elements with the correlation coefficient,
/// and VT-YFG left-hand sides against N for prior sweeps.
void cmd_bounds(const RunConfig& config, std::ostream& log);

/// Simulate -> estimate -> reconstruct -> test over the configured n_z
/// sweep; emits the ensemble variance table, per-n_z bootstrap test tables
/// and JSON results.
void cmd_experiment(const RunConfig& config, std::ostream& log);

/// Runs the full acceptance suite twice with pinned seeds (the second pass
/// feeds the byte-identity check) and writes a pass/fail report.
/// Returns true when every criterion passed.
bool cmd_reproduce(const RunConfig& config, std::ostream& log);

} // namespace steerkit
