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

#include "steerkit/simulator.hpp"

#include <cmath>
#include <numeric>

#include <json.hpp>

#include "steerkit/errors.hpp"
#include "steerkit/rng.hpp"

namespace steerkit {

void ExperimentConfig::validate() const {
    if (!(v >= 0.0 && v <= 1.0)) throw ValidationError("config: v must lie in [0, 1]");
    if (!std::isfinite(phi_true)) throw ValidationError("config: phi_true must be finite");
}

std::uint64_t CountRecord::n_z() const {
    return std::accumulate(phase.begin(), phase.end(), std::uint64_t{0});
}

std::uint64_t CountRecord::n_y() const {
    return std::accumulate(generator.begin(), generator.end(), std::uint64_t{0});
}

std::uint64_t CountRecord::alice_sector_total(AliceLabel a) const {
    std::uint64_t total = 0;
    for (int b = 0; b < 4; ++b) {
        total += phase[static_cast<std::size_t>(2 * b + static_cast<int>(a))];
    }
    return total;
}

std::array<std::uint64_t, 8> simulate_phase_branch(const ExperimentConfig& config) {
    config.validate();
    std::array<std::uint64_t, 8> counts{};
    SplitMix64 rng = substream(config.seed, stream::kPhaseBranch, 0);
    if (!config.deterministic_interleave) {
        const auto joint = phase_branch_joint(config.phi_true, config.v);
        multinomial(rng, config.n_z, joint, counts);
        return counts;
    }
    // Alternate Bob's setting per event; within a setting the four cells
    // (two Bob outcomes x two Alice outcomes) carry twice the joint weight.
    const auto joint = phase_branch_joint(config.phi_true, config.v);
    const std::array<double, 4> xz_sector{2 * joint[0], 2 * joint[1], 2 * joint[2],
                                          2 * joint[3]}; // b in {D, A}
    const std::array<double, 4> zx_sector{2 * joint[4], 2 * joint[5], 2 * joint[6],
                                          2 * joint[7]}; // b in {H, V}
    for (std::uint64_t event = 0; event < config.n_z; ++event) {
        const bool first_sector = (event % 2 == 0);
        const auto& sector = first_sector ? xz_sector : zx_sector;
        std::array<std::uint64_t, 4> cell{};
        multinomial(rng, 1, sector, cell);
        for (int k = 0; k < 4; ++k) {
            counts[static_cast<std::size_t>(first_sector ? k : 4 + k)] += cell[static_cast<std::size_t>(k)];
        }
    }
    return counts;
}

std::array<std::uint64_t, 4> simulate_generator_branch(const ExperimentConfig& config) {
    config.validate();
    std::array<std::uint64_t, 4> counts{};
    SplitMix64 rng = substream(config.seed, stream::kGeneratorBranch, 0);
    const auto joint = generator_branch_joint(config.v);
    multinomial(rng, config.n_y, joint, counts);
    return counts;
}

CountRecord simulate(const ExperimentConfig& config) {
    CountRecord record;
    record.phase = simulate_phase_branch(config);
    record.generator = simulate_generator_branch(config);
    return record;
}

CountRecord poisson_resample(const CountRecord& record, std::uint64_t seed) {
    CountRecord resampled;
    SplitMix64 rng = substream(seed, stream::kBootstrap, 0);
    for (std::size_t i = 0; i < record.phase.size(); ++i) {
        resampled.phase[i] = rng.next_poisson(static_cast<double>(record.phase[i]));
    }
    for (std::size_t i = 0; i < record.generator.size(); ++i) {
        resampled.generator[i] = rng.next_poisson(static_cast<double>(record.generator[i]));
    }
    return resampled;
}

std::string to_json(const CountRecord& record, const ExperimentConfig& config) {
    nlohmann::json j;
    for (std::size_t i = 0; i < record.phase.size(); ++i) {
        j[kPhaseCountNames[i]] = record.phase[i];
    }
    for (std::size_t i = 0; i < record.generator.size(); ++i) {
        j[kGeneratorCountNames[i]] = record.generator[i];
    }
    j["config"] = {{"v", config.v},
                   {"phi_true", config.phi_true},
                   {"n_z", config.n_z},
                   {"n_y", config.n_y},
                   {"seed", config.seed},
                   {"deterministic_interleave", config.deterministic_interleave}};
    return j.dump(2);
}

void from_json(const std::string& text, CountRecord& record, ExperimentConfig& config) {
    try {
        const nlohmann::json j = nlohmann::json::parse(text);
        for (std::size_t i = 0; i < record.phase.size(); ++i) {
            record.phase[i] = j.at(kPhaseCountNames[i]).get<std::uint64_t>();
        }
        for (std::size_t i = 0; i < record.generator.size(); ++i) {
            record.generator[i] = j.at(kGeneratorCountNames[i]).get<std::uint64_t>();
        }
        const auto& c = j.at("config");
        config.v = c.at("v").get<double>();
        config.phi_true = c.at("phi_true").get<double>();
        config.n_z = c.at("n_z").get<std::uint64_t>();
        config.n_y = c.at("n_y").get<std::uint64_t>();
        config.seed = c.at("seed").get<std::uint64_t>();
        config.deterministic_interleave = c.value("deterministic_interleave", false);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("count record JSON is malformed: ") + e.what());
    }
}

} // namespace steerkit
