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

#include "steerkit/commands.hpp"

#include <cmath>
#include <fstream>
#include <numbers>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "steerkit/acceptance.hpp"
#include "steerkit/csv.hpp"
#include "steerkit/errors.hpp"
#include "steerkit/rng.hpp"

namespace steerkit {

namespace fs = std::filesystem;

void RunConfig::validate() const {
    if (!(v >= 0.0 && v <= 1.0)) throw ValidationError("config: v must lie in [0, 1]");
    if (!std::isfinite(phi_true)) throw ValidationError("config: phi_true must be finite");
    if (!(sigma > 0.0)) throw ValidationError("config: sigma must be positive");
    if (!(v0 > 0.5 && v0 < 1.0)) throw ValidationError("config: v0 must lie in (1/2, 1)");
    if (n_z.empty()) throw ValidationError("config: n_z sweep must not be empty");
    for (std::uint64_t n : n_z) {
        if (n < 2) throw ValidationError("config: every n_z must be >= 2");
    }
    if (repetitions < 1) throw ValidationError("config: repetitions must be >= 1");
    if (bootstrap_trials < 1) throw ValidationError("config: bootstrap_trials must be >= 1");
    if (!(bootstrap_pass_fraction > 0.0 && bootstrap_pass_fraction <= 1.0)) {
        throw ValidationError("config: bootstrap_pass_fraction must lie in (0, 1]");
    }
    if (grid_panels < 8 || grid_panels % 2 != 0) {
        throw ValidationError("config: grid_panels must be an even number >= 8");
    }
    if (truth_mode != "fixed" && truth_mode != "prior") {
        throw ValidationError("config: truth_mode must be 'fixed' or 'prior'");
    }
    if (out.empty()) throw ValidationError("config: output directory must be set");
}

JointPrior RunConfig::prior() const { return JointPrior{PhasePrior(mu, sigma), VisibilityPrior(v0)}; }

std::string RunConfig::to_json() const {
    nlohmann::json j;
    j["v"] = v;
    j["phi_true"] = phi_true;
    j["prior"] = {{"mu", mu}, {"sigma", sigma}, {"v0", v0}};
    j["n_z"] = n_z;
    j["n_y"] = n_y;
    j["repetitions"] = repetitions;
    j["bootstrap_trials"] = bootstrap_trials;
    j["bootstrap_pass_fraction"] = bootstrap_pass_fraction;
    j["seed"] = seed;
    j["grid_panels"] = grid_panels;
    j["out"] = out;
    j["truth_mode"] = truth_mode;
    j["deterministic_interleave"] = deterministic_interleave;
    return j.dump();
}

RunConfig RunConfig::from_json_text(const std::string& text) {
    RunConfig config;
    try {
        const nlohmann::json j = nlohmann::json::parse(text);
        config.v = j.value("v", config.v);
        config.phi_true = j.value("phi_true", config.phi_true);
        if (j.contains("prior")) {
            const auto& p = j.at("prior");
            config.mu = p.value("mu", config.mu);
            config.sigma = p.value("sigma", config.sigma);
            config.v0 = p.value("v0", config.v0);
        }
        if (j.contains("n_z")) {
            if (j.at("n_z").is_array()) {
                config.n_z = j.at("n_z").get<std::vector<std::uint64_t>>();
            } else {
                config.n_z = {j.at("n_z").get<std::uint64_t>()};
            }
        }
        config.n_y = j.value("n_y", config.n_y);
        config.repetitions = j.value("repetitions", config.repetitions);
        config.bootstrap_trials = j.value("bootstrap_trials", config.bootstrap_trials);
        config.bootstrap_pass_fraction =
            j.value("bootstrap_pass_fraction", config.bootstrap_pass_fraction);
        config.seed = j.value("seed", config.seed);
        config.grid_panels = j.value("grid_panels", config.grid_panels);
        config.out = j.value("out", config.out);
        config.truth_mode = j.value("truth_mode", config.truth_mode);
        config.deterministic_interleave =
            j.value("deterministic_interleave", config.deterministic_interleave);
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("config JSON is malformed: ") + e.what());
    }
    return config;
}

RunConfig RunConfig::from_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read config file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    return from_json_text(buffer.str());
}

std::uint64_t experiment_seed(std::uint64_t master_seed, std::uint64_t nz_index,
                              std::uint64_t repetition) {
    return mix64(master_seed ^ mix64((nz_index << 32) | repetition));
}

namespace {

struct Truth {
    double phi;
    double v;
};

Truth draw_truth(const RunConfig& config, std::uint64_t cell_seed) {
    if (config.truth_mode == "fixed") return Truth{config.phi_true, config.v};
    SplitMix64 rng = substream(cell_seed, stream::kTruthDraw, 0);
    const JointPrior prior = config.prior();
    double phi = 0.0;
    do {
        phi = config.mu + config.sigma * rng.next_normal();
    } while (std::abs(phi - config.mu) > kPhaseWindowSigmas * config.sigma);
    const double lo = prior.visibility.support_low();
    const double hi = prior.visibility.support_high();
    const double peak = 1.0 / (1.0 - config.v0);
    double v = 0.0;
    for (;;) {
        v = lo + (hi - lo) * rng.next_double();
        if (peak * rng.next_double() <= prior.visibility.density(v)) break;
    }
    return Truth{phi, v};
}

void ensure_directory(const fs::path& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw ValidationError("cannot create output directory: " + dir.string());
}

} // namespace

ExperimentOutcome run_experiment_cell(const RunConfig& config, const Estimator& estimator,
                                      std::uint64_t n_z, std::uint64_t nz_index,
                                      std::uint64_t repetition) {
    ExperimentOutcome outcome;
    const std::uint64_t cell_seed = experiment_seed(config.seed, nz_index, repetition);
    const Truth truth = draw_truth(config, cell_seed);
    outcome.sim.v = truth.v;
    outcome.sim.phi_true = truth.phi;
    outcome.sim.n_z = n_z;
    outcome.sim.n_y = config.n_y;
    outcome.sim.seed = cell_seed;
    outcome.sim.deterministic_interleave = config.deterministic_interleave;
    outcome.record = simulate(outcome.sim);
    outcome.estimate = estimator.conditional_estimate(outcome.record.phase);
    outcome.generator = reconstruct_generator(outcome.record.generator);
    return outcome;
}

void cmd_bounds(const RunConfig& config, std::ostream& log) {
    config.validate();
    const fs::path out_dir(config.out);
    ensure_directory(out_dir);
    const std::string config_json = config.to_json();
    const std::vector<double> visibility_set{0.5, 0.8, 0.9, 0.97};
    constexpr double kPi = std::numbers::pi;

    {
        CsvWriter csv((out_dir / "fisher_vs_phi.csv").string(), "steerkit.bounds.fisher_vs_phi v1",
                      config_json);
        csv.header({"phi", "v", "fisher"});
        const int steps = 256;
        for (double v : visibility_set) {
            for (int i = 0; i <= steps; ++i) {
                const double phi = -kPi + 2.0 * kPi * i / steps;
                csv.field(phi).field(v).field(conditional_fisher(phi, v));
                csv.end_row();
            }
        }
        log << "wrote fisher_vs_phi.csv\n";
    }

    {
        CsvWriter csv((out_dir / "thresholds.csv").string(), "steerkit.bounds.thresholds v1",
                      config_json);
        csv.header({"mode", "threshold"});
        csv.field(std::string("single")).field(violation_threshold(BoundMode::Single));
        csv.end_row();
        csv.field(std::string("multi")).field(violation_threshold(BoundMode::Multi));
        csv.end_row();
        log << "wrote thresholds.csv\n";
    }

    {
        CsvWriter single((out_dir / "yfg_single_vs_v.csv").string(),
                         "steerkit.bounds.yfg_single_vs_v v1", config_json);
        single.header({"v", "f_max", "delta2_y", "violated"});
        CsvWriter multi((out_dir / "yfg_multi_vs_v.csv").string(),
                        "steerkit.bounds.yfg_multi_vs_v v1", config_json);
        multi.header({"v", "effective_fisher", "delta2_y", "violated"});
        const int steps = 200;
        for (int i = 0; i <= steps; ++i) {
            const double v = static_cast<double>(i) / steps;
            const double delta2 = 1.0 - v * v;
            const double f_single = v * v;
            single.field(v).field(f_single).field(delta2);
            single.field(std::string(f_single > delta2 ? "true" : "false"));
            single.end_row();
            const double f_multi = v * v / (2.0 - v * v);
            multi.field(v).field(f_multi).field(delta2);
            multi.field(std::string(f_multi > delta2 ? "true" : "false"));
            multi.end_row();
        }
        log << "wrote yfg_single_vs_v.csv yfg_multi_vs_v.csv\n";
    }

    {
        CsvWriter csv((out_dir / "inverse_fim_vs_phi.csv").string(),
                      "steerkit.bounds.inverse_fim_vs_phi v1", config_json);
        csv.header({"phi", "v", "finv_phi_phi", "finv_v_v", "correlation"});
        const int steps = 256;
        for (double v : visibility_set) {
            for (int i = 0; i <= steps; ++i) {
                // keep clear of the v = 1 adjacent poles at multiples of pi/2
                const double phi = -kPi + 2.0 * kPi * i / steps;
                FisherMatrix inverse;
                try {
                    inverse = conditional_fisher_matrix(phi, v).inverse();
                } catch (const NumericalError&) {
                    continue; // singular grid point, skip the row
                }
                csv.field(phi).field(v).field(inverse.phi_phi).field(inverse.v_v);
                csv.field(correlation_coefficient(inverse));
                csv.end_row();
            }
        }
        log << "wrote inverse_fim_vs_phi.csv\n";
    }

    {
        // multiparameter VT-YFG left-hand side against N for prior sweeps
        const std::vector<double> v0_sweep{0.80, 0.85, 0.90, 0.95};
        const std::vector<double> sigma_sweep{kPi / 16.0, kPi / 32.0};
        int index = 0;
        for (double sigma : sigma_sweep) {
            for (double v0 : v0_sweep) {
                const JointPrior prior{PhasePrior(config.mu, sigma), VisibilityPrior(v0)};
                const VanTreesAssembler assembler(prior, config.grid_panels);
                const double delta2 =
                    prior_averaged_generator_variance(prior.visibility, config.grid_panels);
                nlohmann::json sweep_config = nlohmann::json::parse(config_json);
                sweep_config["sweep"] = {{"v0", v0}, {"sigma", sigma}};
                CsvWriter csv((out_dir / ("vtyfg_multi_" + std::to_string(index) + ".csv")).string(),
                              "steerkit.bounds.vtyfg_multi v1", sweep_config.dump());
                csv.header({"N", "bound", "generator_term", "score_term", "lhs", "violated"});
                for (std::uint64_t n = 1; n <= 100000; n *= 10) {
                    for (std::uint64_t m : {1ULL, 2ULL, 3ULL, 5ULL, 7ULL}) {
                        const std::uint64_t total = n * m;
                        if (total > 100000) continue;
                        const VanTreesMatrix matrix = assembler.matrix_for(total);
                        const YfgLimit limit =
                            yfg_limit(delta2, prior, total, config.grid_panels);
                        const VtYfgCheck check = vt_yfg_check(matrix, limit);
                        csv.field(total).field(van_trees_phase_bound(matrix, total));
                        csv.field(limit.generator_term).field(limit.score_term);
                        csv.field(check.lhs);
                        csv.field(std::string(check.violated ? "true" : "false"));
                        csv.end_row();
                    }
                }
                ++index;
            }
        }
        log << "wrote vtyfg_multi_*.csv\n";
    }

    {
        // single-parameter VT-YFG sweep over sigma at the configured visibility
        CsvWriter csv((out_dir / "vtyfg_single_vs_sigma.csv").string(),
                      "steerkit.bounds.vtyfg_single_vs_sigma v1", config_json);
        csv.header({"sigma", "N", "info", "info_yfg", "violated"});
        const double delta2 = 1.0 - config.v * config.v;
        for (int i = 1; i <= 32; ++i) {
            const double sigma = kPi / 8.0 * i / 32.0;
            const PhasePrior phase(0.0, sigma); // centered on the fringe maximum
            const double score = [&] {
                // Gaussian score over the 6-sigma window equals 1/sigma^2
                std::vector<double> nodes;
                std::vector<double> weights;
                simpson_axis(-kPhaseWindowSigmas * sigma, kPhaseWindowSigmas * sigma,
                             config.grid_panels, nodes, weights);
                double total = 0.0;
                for (std::size_t k = 0; k < nodes.size(); ++k) {
                    const double p = phase.density(nodes[k]);
                    const double dp = phase.density_derivative(nodes[k]);
                    total += weights[k] * dp * dp / p;
                }
                return total;
            }();
            for (std::uint64_t n : {10ULL, 100ULL, 1000ULL, 10000ULL}) {
                const double info = scalar_van_trees_info(phase, config.v, n, config.grid_panels);
                const double info_yfg = delta2 + score / static_cast<double>(n);
                csv.field(sigma).field(n).field(info).field(info_yfg);
                csv.field(std::string(info > info_yfg ? "true" : "false"));
                csv.end_row();
            }
        }
        log << "wrote vtyfg_single_vs_sigma.csv\n";
    }
}

void cmd_experiment(const RunConfig& config, std::ostream& log) {
    config.validate();
    const fs::path out_dir(config.out);
    ensure_directory(out_dir);
    const std::string config_json = config.to_json();
    const JointPrior prior = config.prior();
    const Estimator estimator(prior, config.grid_panels);
    const VanTreesAssembler assembler(prior, config.grid_panels);

    CsvWriter ensemble((out_dir / "ensemble_variance.csv").string(),
                       "steerkit.experiment.ensemble_variance v1", config_json);
    ensemble.header({"N_Z", "mean_var_phi", "se_var_phi", "vt_bound"});

    CsvWriter samples((out_dir / "variance_samples.csv").string(),
                      "steerkit.experiment.variance_samples v1", config_json);
    samples.header({"N_Z", "repetition", "phi_true", "v_true", "var_phi", "xi2", "certified_0.05",
                    "certified_0.01", "certified_0.005"});

    CsvWriter rates((out_dir / "certification_rates.csv").string(),
                    "steerkit.experiment.certification_rates v1", config_json);
    rates.header({"N_Z", "rate_0.05", "rate_0.01", "rate_0.005"});

    for (std::size_t nz_index = 0; nz_index < config.n_z.size(); ++nz_index) {
        const std::uint64_t n_z = config.n_z[nz_index];
        double sum_var = 0.0;
        double sum_var2 = 0.0;
        std::array<std::uint64_t, 3> certified_counts{};
        bool first_written = false;
        for (std::uint64_t rep = 0; rep < config.repetitions; ++rep) {
            const ExperimentOutcome outcome =
                run_experiment_cell(config, estimator, n_z, nz_index, rep);
            const TestResult test = bootstrap_test(
                outcome.record, outcome.estimate.var_phi_cond, prior, config.bootstrap_trials,
                outcome.sim.seed, config.bootstrap_pass_fraction, config.grid_panels);
            sum_var += outcome.estimate.var_phi_cond;
            sum_var2 += outcome.estimate.var_phi_cond * outcome.estimate.var_phi_cond;
            samples.field(n_z).field(rep).field(outcome.sim.phi_true).field(outcome.sim.v);
            samples.field(outcome.estimate.var_phi_cond).field(test.xi2);
            for (std::size_t k = 0; k < test.certified.size(); ++k) {
                samples.field(std::string(test.certified[k] ? "true" : "false"));
                if (test.certified[k]) ++certified_counts[k];
            }
            samples.end_row();
            if (!first_written) {
                CsvWriter fig((out_dir / ("steering_test_nz" + std::to_string(n_z) + ".csv"))
                                  .string(),
                              "steerkit.experiment.steering_test v1", config_json);
                fig.header({"trial_index", "xi2_mc", "critical_0.05", "critical_0.01",
                            "critical_0.005", "xi2_observed"});
                for (std::size_t t = 0; t < test.bootstrap_xi2.size(); ++t) {
                    fig.field(static_cast<std::uint64_t>(t)).field(test.bootstrap_xi2[t]);
                    fig.field(test.critical[0]).field(test.critical[1]).field(test.critical[2]);
                    fig.field(test.xi2);
                    fig.end_row();
                }
                std::ofstream json_out(out_dir / ("test_result_nz" + std::to_string(n_z) + ".json"),
                                       std::ios::binary);
                json_out << test.to_json() << "\n";
                std::ofstream record_out(out_dir / ("record_nz" + std::to_string(n_z) + ".json"),
                                         std::ios::binary);
                record_out << to_json(outcome.record, outcome.sim) << "\n";
                std::ofstream estimate_out(
                    out_dir / ("estimate_nz" + std::to_string(n_z) + ".json"), std::ios::binary);
                estimate_out << to_json(outcome.estimate) << "\n";
                std::ofstream generator_out(
                    out_dir / ("generator_nz" + std::to_string(n_z) + ".json"), std::ios::binary);
                generator_out << to_json(outcome.generator) << "\n";
                first_written = true;
            }
        }
        const double reps = static_cast<double>(config.repetitions);
        const double mean = sum_var / reps;
        const double variance = std::max(0.0, sum_var2 / reps - mean * mean);
        const double se = reps > 1.0 ? std::sqrt(variance / (reps - 1.0)) : 0.0;
        // The comparison curve pairs the conditional estimator with its own
        // Van Trees matrix at balanced expected sector counts.
        VanTreesMatrix balanced;
        balanced.n = n_z;
        const double inv = 2.0 / static_cast<double>(n_z);
        balanced.phi_phi = assembler.prior_averaged_fim().phi_phi + inv * assembler.score_matrix().phi_phi;
        balanced.phi_v = assembler.prior_averaged_fim().phi_v + inv * assembler.score_matrix().phi_v;
        balanced.v_v = assembler.prior_averaged_fim().v_v + inv * assembler.score_matrix().v_v;
        ensemble.field(n_z).field(mean).field(se).field(van_trees_phase_bound(balanced, n_z));
        ensemble.end_row();
        rates.field(n_z);
        for (std::uint64_t count : certified_counts) {
            rates.field(static_cast<double>(count) / reps);
        }
        rates.end_row();
        log << "n_z " << n_z << " done\n";
    }
}

bool cmd_reproduce(const RunConfig& config, std::ostream& log) {
    config.validate();
    const fs::path out_dir(config.out);
    ensure_directory(out_dir);
    const std::vector<CriterionResult> results = run_acceptance(out_dir, config.seed, log);
    write_acceptance_report(out_dir, results, config.seed);
    bool all_pass = true;
    for (const CriterionResult& result : results) {
        log << result.id << (result.pass ? " PASS " : " FAIL ") << "(" << result.seconds << " s) "
            << result.detail << "\n";
        all_pass = all_pass && result.pass;
    }
    return all_pass;
}

} // namespace steerkit
