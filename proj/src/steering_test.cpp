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

#include "steerkit/steering_test.hpp"

#include <cmath>

#include <json.hpp>

#include "steerkit/errors.hpp"
#include "steerkit/estimation.hpp"
#include "steerkit/rng.hpp"
#include "steerkit/stats.hpp"

namespace steerkit {

double xi_squared(std::uint64_t n_z, double var_phi, double l) {
    if (n_z == 0 || !(var_phi > 0.0) || !(l > 0.0)) {
        throw ValidationError("xi_squared requires positive n_z, var_phi and L");
    }
    return static_cast<double>(n_z) * var_phi * l;
}

double critical_value(double p, std::uint64_t dof) {
    if (!(p > 0.0 && p < 0.5)) throw ValidationError("critical_value requires 0 < p < 0.5");
    if (dof < 1) throw ValidationError("critical_value requires dof >= 1");
    const double d = static_cast<double>(dof);
    return stats::chi_squared_quantile(p, d) / d;
}

TestResult bootstrap_test(const CountRecord& record, double var_phi, const JointPrior& prior,
                          std::uint64_t trials, std::uint64_t seed, double pass_fraction,
                          int panels) {
    if (trials < 1) throw ValidationError("bootstrap_test requires trials >= 1");
    if (!(pass_fraction > 0.0 && pass_fraction <= 1.0)) {
        throw ValidationError("bootstrap_test requires pass_fraction in (0, 1]");
    }
    const std::uint64_t n_z = record.n_z();
    if (n_z < 2) throw ValidationError("bootstrap_test requires n_z >= 2");

    TestResult result;
    result.pass_fraction = pass_fraction;
    result.dof = n_z - 1;

    const GeneratorEstimate generator = reconstruct_generator(record.generator);
    result.limit = yfg_limit(generator.delta2_y_cond, prior, n_z, panels);
    result.xi2 = xi_squared(n_z, var_phi, result.limit.value);
    for (std::size_t k = 0; k < kConfidenceLevels.size(); ++k) {
        result.critical[k] = critical_value(kConfidenceLevels[k], result.dof);
    }

    result.bootstrap_xi2.reserve(trials);
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
        SplitMix64 rng = substream(seed, stream::kBootstrap, trial);
        std::array<std::uint64_t, 4> resampled{};
        for (std::size_t i = 0; i < resampled.size(); ++i) {
            resampled[i] = rng.next_poisson(static_cast<double>(record.generator[i]));
        }
        double delta2_mc = 0.0;
        try {
            delta2_mc = reconstruct_generator(resampled).delta2_y_cond;
        } catch (const DegenerateError&) {
            ++result.skipped_trials; // empty resampled branch
            continue;
        }
        const double l_mc = delta2_mc + result.limit.score_term;
        result.bootstrap_xi2.push_back(static_cast<double>(n_z) * var_phi * l_mc);
    }
    if (10 * result.skipped_trials > trials) {
        throw DegenerateError("bootstrap_test: more than 10% of trials were degenerate");
    }

    const double kept = static_cast<double>(result.bootstrap_xi2.size());
    for (std::size_t k = 0; k < kConfidenceLevels.size(); ++k) {
        std::uint64_t below = 0;
        for (double xi2_mc : result.bootstrap_xi2) {
            if (xi2_mc < result.critical[k]) ++below;
        }
        const double fraction = kept > 0.0 ? static_cast<double>(below) / kept : 0.0;
        result.certified[k] = (result.xi2 < result.critical[k]) && (fraction >= pass_fraction);
    }
    return result;
}

std::string TestResult::to_json() const {
    nlohmann::json j;
    j["xi2"] = xi2;
    j["L"] = {{"value", limit.value},
              {"generator_term", limit.generator_term},
              {"score_term", limit.score_term}};
    j["dof"] = dof;
    j["pass_fraction"] = pass_fraction;
    j["skipped_trials"] = skipped_trials;
    nlohmann::json critical_json;
    nlohmann::json verdict_json;
    for (std::size_t k = 0; k < p_levels.size(); ++k) {
        char key[16];
        std::snprintf(key, sizeof(key), "%.3f", p_levels[k]);
        critical_json[key] = critical[k];
        verdict_json[key] = certified[k] ? "certified" : "not-certified";
    }
    j["critical"] = critical_json;
    j["verdict"] = verdict_json;
    j["bootstrap_xi2"] = bootstrap_xi2;
    return j.dump(2);
}

} // namespace steerkit
