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

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "steerkit/bounds.hpp"
#include "steerkit/priors.hpp"
#include "steerkit/simulator.hpp"

namespace steerkit {

inline constexpr std::array<double, 3> kConfidenceLevels{0.05, 0.01, 0.005};
inline constexpr double kDefaultBootstrapPassFraction = 0.95;

/// Outcome of the bootstrap steering test.
///
/// The null hypothesis is N_Z Var[phi] L >= 1, so xi^2 behaves as a
/// normalized chi-squared variable with N_Z - 1 degrees of freedom and
/// steering is certified when xi^2 falls statistically below the lower-tail
/// quantile. Certification at level p requires both the observed xi^2 and
/// the configured fraction of bootstrap replicas below critical(p).
struct TestResult {
    double xi2 = 0.0;
    YfgLimit limit;
    std::uint64_t dof = 0;
    std::array<double, 3> p_levels = kConfidenceLevels;
    std::array<double, 3> critical{};
    std::array<bool, 3> certified{};
    std::vector<double> bootstrap_xi2;
    std::uint64_t skipped_trials = 0;
    double pass_fraction = kDefaultBootstrapPassFraction;

    std::string to_json() const;
};

/// xi^2 = N_Z * Var[phi] * L. All inputs must be positive.
double xi_squared(std::uint64_t n_z, double var_phi, double l);

/// Normalized lower-tail quantile Q_p(chi^2_dof)/dof. Requires 0 < p < 0.5.
/// Monotone increasing in dof toward 1.
double critical_value(double p, std::uint64_t dof);

/// Poisson-bootstrap steering test on an observed record.
///
/// The generator branch is resampled `trials` times (tally-wise Poisson);
/// each replica refreshes Delta^2 Y_cond and hence L while the score term
/// keeps the original N_Z. Degenerate resamples (empty branch) are skipped;
/// more than 10% skipped aborts with DegenerateError.
TestResult bootstrap_test(const CountRecord& record, double var_phi, const JointPrior& prior,
                          std::uint64_t trials, std::uint64_t seed,
                          double pass_fraction = kDefaultBootstrapPassFraction,
                          int panels = kDefaultGridPanels);

} // namespace steerkit
