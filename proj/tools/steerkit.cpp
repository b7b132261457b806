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

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "steerkit/commands.hpp"
#include "steerkit/errors.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitValidation = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitAcceptance = 3;

struct FlagOverrides {
    std::string config_path;
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::string out;
    int grid = 0;
    std::uint64_t trials = 0;
};

steerkit::RunConfig resolve_config(const FlagOverrides& flags) {
    steerkit::RunConfig config;
    if (!flags.config_path.empty()) {
        config = steerkit::RunConfig::from_json_file(flags.config_path);
    }
    if (flags.seed_set) config.seed = flags.seed;
    if (!flags.out.empty()) config.out = flags.out;
    if (flags.grid > 0) config.grid_panels = flags.grid;
    if (flags.trials > 0) config.bootstrap_trials = flags.trials;
    return config;
}

void add_common_flags(CLI::App* cmd, FlagOverrides& flags) {
    cmd->add_option("--config", flags.config_path, "JSON config file");
    cmd->add_option("--seed", flags.seed, "master seed (overrides config)")
        ->each([&flags](const std::string&) { flags.seed_set = true; });
    cmd->add_option("--out", flags.out, "output directory (overrides config)");
    cmd->add_option("--grid", flags.grid, "quadrature panels per axis (overrides config)");
    cmd->add_option("--trials", flags.trials, "bootstrap trials (overrides config)");
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"steering certification from phase-estimation statistics"};
    app.require_subcommand(1);

    FlagOverrides flags;
    CLI::App* bounds = app.add_subcommand("bounds", "emit bound and threshold tables");
    add_common_flags(bounds, flags);
    CLI::App* experiment =
        app.add_subcommand("experiment", "simulate, estimate and test over the n_z sweep");
    add_common_flags(experiment, flags);
    CLI::App* reproduce =
        app.add_subcommand("reproduce", "run the pinned verification suite and write a report");
    add_common_flags(reproduce, flags);

    CLI11_PARSE(app, argc, argv);

    try {
        const steerkit::RunConfig config = resolve_config(flags);
        if (bounds->parsed()) {
            steerkit::cmd_bounds(config, std::cout);
            return kExitOk;
        }
        if (experiment->parsed()) {
            steerkit::cmd_experiment(config, std::cout);
            return kExitOk;
        }
        if (reproduce->parsed()) {
            const bool ok = steerkit::cmd_reproduce(config, std::cout);
            return ok ? kExitOk : kExitAcceptance;
        }
    } catch (const steerkit::NumericalError& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return kExitNumerical;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitNumerical;
    }
    return kExitValidation;
}
