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

#include "steerkit/estimation.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include <json.hpp>

#include "steerkit/errors.hpp"

namespace steerkit {

namespace {

constexpr double kLikelihoodFloor = 1e-300;

// counts for sector a against the shared fringe tables:
// a = H: D -> (1+vs), A -> (1-vs), H -> (1-vc), V -> (1+vc)
// a = V: D -> (1-vs), A -> (1+vs), H -> (1+vc), V -> (1-vc)
struct SectorCounts {
    double plus_sin;
    double minus_sin;
    double plus_cos;
    double minus_cos;
    std::uint64_t total;
};

SectorCounts sector_counts(const std::array<std::uint64_t, 8>& n, AliceLabel a) {
    const auto at = [&](BobLabel b) {
        return static_cast<double>(
            n[static_cast<std::size_t>(2 * static_cast<int>(b) + static_cast<int>(a))]);
    };
    std::uint64_t total = 0;
    for (int b = 0; b < 4; ++b) {
        total += n[static_cast<std::size_t>(2 * b + static_cast<int>(a))];
    }
    if (a == AliceLabel::H) {
        return {at(BobLabel::D), at(BobLabel::A), at(BobLabel::V), at(BobLabel::H), total};
    }
    return {at(BobLabel::A), at(BobLabel::D), at(BobLabel::H), at(BobLabel::V), total};
}

} // namespace

double log_conditional_likelihood(const std::array<std::uint64_t, 8>& phase_counts, AliceLabel a,
                                  double phi, double v) {
    if (!(v >= 0.0 && v <= 1.0)) throw ValidationError("visibility must lie in [0, 1]");
    double total = 0.0;
    for (int b = 0; b < 4; ++b) {
        const std::uint64_t n =
            phase_counts[static_cast<std::size_t>(2 * b + static_cast<int>(a))];
        if (n == 0) continue;
        const double q = phase_branch_conditional(static_cast<BobLabel>(b), a, phi, v);
        if (q < kLikelihoodFloor) return -std::numeric_limits<double>::infinity();
        total += static_cast<double>(n) * std::log(q);
    }
    return total;
}

double conditional_likelihood(const std::array<std::uint64_t, 8>& phase_counts, AliceLabel a,
                              double phi, double v) {
    return std::exp(log_conditional_likelihood(phase_counts, a, phi, v));
}

Estimator::Estimator(const JointPrior& prior, int panels)
    : prior_(prior), grid_(QuadratureGrid::build(prior, panels)) {
    if (prior.phase.sigma > std::numbers::pi / 16.0 + 1e-12) {
        throw ValidationError("multiparameter estimation requires sigma <= pi/16");
    }
    const std::size_t rows = grid_.phi_nodes.size();
    const std::size_t cols = grid_.v_nodes.size();
    const std::size_t cells = rows * cols;
    log_prior_.resize(cells);
    log_q_plus_sin_.resize(cells);
    log_q_minus_sin_.resize(cells);
    log_q_plus_cos_.resize(cells);
    log_q_minus_cos_.resize(cells);
    cell_weight_.resize(cells);
    for (std::size_t i = 0; i < rows; ++i) {
        const double phi = grid_.phi_nodes[i];
        const double c = std::cos(phi);
        const double s = std::sin(phi);
        const double log_pphi = std::log(prior_.phase.density(phi));
        for (std::size_t j = 0; j < cols; ++j) {
            const double v = grid_.v_nodes[j];
            const std::size_t cell = i * cols + j;
            log_prior_[cell] = log_pphi + std::log(prior_.visibility.density(v));
            log_q_plus_sin_[cell] = std::log((1.0 + v * s) / 4.0);
            log_q_minus_sin_[cell] = std::log((1.0 - v * s) / 4.0);
            log_q_plus_cos_[cell] = std::log((1.0 + v * c) / 4.0);
            log_q_minus_cos_[cell] = std::log((1.0 - v * c) / 4.0);
            cell_weight_[cell] = grid_.phi_weights[i] * grid_.v_weights[j];
        }
    }
}

SectorPosterior Estimator::sector_posterior(const std::array<std::uint64_t, 8>& phase_counts,
                                            AliceLabel a) const {
    const SectorCounts n = sector_counts(phase_counts, a);
    const std::size_t cells = log_prior_.size();
    std::vector<double> log_weight(cells);
    double max_logw = -std::numeric_limits<double>::infinity();
    for (std::size_t cell = 0; cell < cells; ++cell) {
        const double logw = log_prior_[cell] + n.plus_sin * log_q_plus_sin_[cell] +
                            n.minus_sin * log_q_minus_sin_[cell] +
                            n.plus_cos * log_q_plus_cos_[cell] +
                            n.minus_cos * log_q_minus_cos_[cell];
        log_weight[cell] = logw;
        if (logw > max_logw) max_logw = logw;
    }
    if (!std::isfinite(max_logw)) {
        throw DegenerateError("posterior weight vanished on the whole grid");
    }
    const std::size_t cols = grid_.v_nodes.size();
    const double mu = prior_.phase.mu;
    double s0 = 0.0;
    double s_phi = 0.0;
    double s_phi2 = 0.0;
    double s_v = 0.0;
    double s_v2 = 0.0;
    for (std::size_t cell = 0; cell < cells; ++cell) {
        const double w = std::exp(log_weight[cell] - max_logw) * cell_weight_[cell];
        if (w == 0.0) continue;
        const double dphi = grid_.phi_nodes[cell / cols] - mu;
        const double v = grid_.v_nodes[cell % cols];
        s0 += w;
        s_phi += w * dphi;
        s_phi2 += w * dphi * dphi;
        s_v += w * v;
        s_v2 += w * v * v;
    }
    if (s0 <= 0.0) {
        throw DegenerateError("posterior evidence underflowed");
    }
    SectorPosterior posterior;
    const double mean_dphi = s_phi / s0;
    posterior.phi_mean = mu + mean_dphi;
    posterior.phi_var = std::max(0.0, s_phi2 / s0 - mean_dphi * mean_dphi);
    posterior.v_mean = s_v / s0;
    posterior.v_var = std::max(0.0, s_v2 / s0 - posterior.v_mean * posterior.v_mean);
    posterior.log_evidence = max_logw + std::log(s0);
    posterior.events = n.total;
    return posterior;
}

PosteriorSummary Estimator::posterior(const std::array<std::uint64_t, 8>& phase_counts) const {
    return PosteriorSummary{sector_posterior(phase_counts, AliceLabel::H),
                            sector_posterior(phase_counts, AliceLabel::V)};
}

EstimationResult
Estimator::conditional_estimate(const std::array<std::uint64_t, 8>& phase_counts) const {
    std::uint64_t n_total = 0;
    for (std::uint64_t n : phase_counts) n_total += n;
    if (n_total == 0) throw DegenerateError("conditional estimate needs n_z > 0");
    EstimationResult result;
    for (AliceLabel a : {AliceLabel::H, AliceLabel::V}) {
        SectorCounts n = sector_counts(phase_counts, a);
        if (n.total == 0) continue; // weight 0; its posterior is the prior
        const SectorPosterior sector = sector_posterior(phase_counts, a);
        const double weight = static_cast<double>(n.total) / static_cast<double>(n_total);
        result.phi_cond += weight * sector.phi_mean;
        result.var_phi_cond += weight * weight * sector.phi_var;
        result.v_cond += weight * sector.v_mean;
    }
    return result;
}

PosteriorSummary bayes_estimate(const std::array<std::uint64_t, 8>& phase_counts,
                                const JointPrior& prior, int panels) {
    return Estimator(prior, panels).posterior(phase_counts);
}

EstimationResult conditional_bayes_estimate(const std::array<std::uint64_t, 8>& phase_counts,
                                            const JointPrior& prior, int panels) {
    return Estimator(prior, panels).conditional_estimate(phase_counts);
}

GeneratorEstimate reconstruct_generator(const std::array<std::uint64_t, 4>& generator_counts) {
    // order m_LL, m_LR, m_RL, m_RR; Ybar_a = (m_La - m_Ra)/(m_La + m_Ra)
    const std::uint64_t m_ll = generator_counts[0];
    const std::uint64_t m_lr = generator_counts[1];
    const std::uint64_t m_rl = generator_counts[2];
    const std::uint64_t m_rr = generator_counts[3];
    GeneratorEstimate estimate;
    estimate.m_l = m_ll + m_rl;
    estimate.m_r = m_lr + m_rr;
    const std::uint64_t n_y = estimate.m_l + estimate.m_r;
    if (n_y == 0) throw DegenerateError("generator reconstruction needs n_y > 0");
    if (estimate.m_l > 0) {
        estimate.y_bar_l = (static_cast<double>(m_ll) - static_cast<double>(m_rl)) /
                           static_cast<double>(estimate.m_l);
        estimate.delta2_y_cond += static_cast<double>(estimate.m_l) / static_cast<double>(n_y) *
                                  (1.0 - estimate.y_bar_l * estimate.y_bar_l);
    }
    if (estimate.m_r > 0) {
        estimate.y_bar_r = (static_cast<double>(m_lr) - static_cast<double>(m_rr)) /
                           static_cast<double>(estimate.m_r);
        estimate.delta2_y_cond += static_cast<double>(estimate.m_r) / static_cast<double>(n_y) *
                                  (1.0 - estimate.y_bar_r * estimate.y_bar_r);
    }
    return estimate;
}

double generator_variance_signed_mean(const std::array<std::uint64_t, 4>& generator_counts) {
    const GeneratorEstimate estimate = reconstruct_generator(generator_counts);
    const double n_y = static_cast<double>(estimate.m_l + estimate.m_r);
    const double y_cond = (static_cast<double>(estimate.m_l) * estimate.y_bar_l +
                           static_cast<double>(estimate.m_r) * estimate.y_bar_r) /
                          n_y;
    return 1.0 - y_cond * y_cond;
}

std::string to_json(const EstimationResult& result) {
    nlohmann::json j;
    j["phi_cond"] = result.phi_cond;
    j["var_phi_cond"] = result.var_phi_cond;
    j["v_cond"] = result.v_cond;
    return j.dump(2);
}

std::string to_json(const GeneratorEstimate& estimate) {
    nlohmann::json j;
    j["y_bar_l"] = estimate.y_bar_l;
    j["y_bar_r"] = estimate.y_bar_r;
    j["delta2_y_cond"] = estimate.delta2_y_cond;
    j["m_l"] = estimate.m_l;
    j["m_r"] = estimate.m_r;
    return j.dump(2);
}

} // namespace steerkit
