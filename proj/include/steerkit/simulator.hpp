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

#include "steerkit/qubit_model.hpp"

namespace steerkit {

/// One simulated run of the protocol.
struct ExperimentConfig {
    double v = 0.97;
    double phi_true = 0.7853981633974483; // pi/4
    std::uint64_t n_z = 3000;
    std::uint64_t n_y = 495;
    std::uint64_t seed = 1;
    /// false: Bob's X/Z choice is sampled per event (matches the multinomial
    /// likelihood); true: settings alternate deterministically.
    bool deterministic_interleave = false;

    void validate() const;
};

/// Tallies of both protocol branches.
/// phase: n_DH, n_DV, n_AH, n_AV, n_HH, n_HV, n_VH, n_VV (index 2*b + a)
/// generator: m_LL, m_LR, m_RL, m_RR (index 2*b + a)
struct CountRecord {
    std::array<std::uint64_t, 8> phase{};
    std::array<std::uint64_t, 4> generator{};

    std::uint64_t n_z() const;
    std::uint64_t n_y() const;
    /// Phase-branch events for one Alice outcome.
    std::uint64_t alice_sector_total(AliceLabel a) const;
};

/// Draws the n_z phase-branch events from the 8-outcome joint distribution
/// at (v, phi_true). Deterministic given the config seed (substream
/// kPhaseBranch).
std::array<std::uint64_t, 8> simulate_phase_branch(const ExperimentConfig& config);

/// Draws the n_y generator-branch events from the 4-outcome Y x Y joint
/// distribution at visibility v (phase independent; substream
/// kGeneratorBranch).
std::array<std::uint64_t, 4> simulate_generator_branch(const ExperimentConfig& config);

/// Both branches.
CountRecord simulate(const ExperimentConfig& config);

/// Replaces every tally with a Poisson draw whose mean is the observed
/// tally; the branch totals follow from the resampled tallies.
CountRecord poisson_resample(const CountRecord& record, std::uint64_t seed);

/// Flat JSON with explicit outcome labels plus the config and seed.
std::string to_json(const CountRecord& record, const ExperimentConfig& config);
/// Inverse of to_json; throws ValidationError on malformed input.
void from_json(const std::string& text, CountRecord& record, ExperimentConfig& config);

} // namespace steerkit
