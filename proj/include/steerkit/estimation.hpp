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

#include "steerkit/priors.hpp"
#include "steerkit/qubit_model.hpp"

namespace steerkit {

/// Posterior mean/variance of (phi, v) for one Alice sector, with the log
/// normalization constant of P * H_a over the grid.
struct SectorPosterior {
    double phi_mean = 0.0;
    double phi_var = 0.0;
    double v_mean = 0.0;
    double v_var = 0.0;
    double log_evidence = 0.0;
    std::uint64_t events = 0;
};

struct PosteriorSummary {
    SectorPosterior at_h;
    SectorPosterior at_v;

    const SectorPosterior& sector(AliceLabel a) const {
        return a == AliceLabel::H ? at_h : at_v;
    }
};

/// Occurrence-weighted combination across Alice outcomes: linear weights for
/// the means, squared weights for the variance.
struct EstimationResult {
    double phi_cond = 0.0;
    double var_phi_cond = 0.0;
    double v_cond = 0.0;
};

struct GeneratorEstimate {
    double y_bar_l = 0.0;
    double y_bar_r = 0.0;
    double delta2_y_cond = 0.0;
    std::uint64_t m_l = 0;
    std::uint64_t m_r = 0;
};

/// log of H_a(phi, v) = prod_b p(b|a)^(n_ba) with the fringe probabilities
/// (1 + v cos(phi + Gamma_ab))/4. Returns -inf if an observed outcome has
/// probability below 1e-300.
double log_conditional_likelihood(const std::array<std::uint64_t, 8>& phase_counts,
                                  AliceLabel a, double phi, double v);

/// exp of the log-likelihood; underflows to 0 for large records (use the
/// log form there).
double conditional_likelihood(const std::array<std::uint64_t, 8>& phase_counts, AliceLabel a,
                              double phi, double v);

/// Quadrature-based joint posterior machinery with per-grid tables cached,
/// so ensembles of records reuse the expensive logs. Construction enforces
/// sigma <= pi/16 (multiparameter fringe ambiguity).
class Estimator {
public:
    explicit Estimator(const JointPrior& prior, int panels = kDefaultGridPanels);

    PosteriorSummary posterior(const std::array<std::uint64_t, 8>& phase_counts) const;
    EstimationResult conditional_estimate(const std::array<std::uint64_t, 8>& phase_counts) const;

    const JointPrior& prior() const { return prior_; }
    const QuadratureGrid& grid() const { return grid_; }

private:
    SectorPosterior sector_posterior(const std::array<std::uint64_t, 8>& phase_counts,
                                     AliceLabel a) const;

    JointPrior prior_;
    QuadratureGrid grid_;
    // per-cell tables, row-major over (phi, v); immutable after
    // construction, so one estimator can serve parallel records
    std::vector<double> log_prior_;
    std::vector<double> log_q_plus_sin_;
    std::vector<double> log_q_minus_sin_;
    std::vector<double> log_q_plus_cos_;
    std::vector<double> log_q_minus_cos_;
    std::vector<double> cell_weight_;
};

/// One-shot wrappers around Estimator.
PosteriorSummary bayes_estimate(const std::array<std::uint64_t, 8>& phase_counts,
                                const JointPrior& prior, int panels = kDefaultGridPanels);
EstimationResult conditional_bayes_estimate(const std::array<std::uint64_t, 8>& phase_counts,
                                            const JointPrior& prior,
                                            int panels = kDefaultGridPanels);

/// Y means per Alice outcome and the occurrence-weighted conditional
/// variance Delta^2 Y_cond = sum_a (m_a/N_Y)(1 - Ybar_a^2). An Alice
/// outcome with no events contributes weight 0; throws DegenerateError when
/// the branch is empty.
GeneratorEstimate reconstruct_generator(const std::array<std::uint64_t, 4>& generator_counts);

/// The literal signed-mean form 1 - Y_cond^2 with Y_cond =
/// sum_a (m_a/N_Y) Ybar_a. Kept for comparison; it reads 1 for a perfect
/// singlet where the per-outcome form reads 0.
double generator_variance_signed_mean(const std::array<std::uint64_t, 4>& generator_counts);

std::string to_json(const EstimationResult& result);
std::string to_json(const GeneratorEstimate& estimate);

} // namespace steerkit
