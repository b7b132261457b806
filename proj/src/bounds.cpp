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

#include "steerkit/bounds.hpp"

#include <cmath>
#include <numbers>
#include <ostream>

#include "steerkit/errors.hpp"

namespace steerkit {

namespace {

FisherMatrix integrate_matrix(const JointPrior& prior, const QuadratureGrid& grid,
                              const std::function<FisherMatrix(double, double)>& field) {
    FisherMatrix total;
    for (std::size_t i = 0; i < grid.phi_nodes.size(); ++i) {
        FisherMatrix row;
        for (std::size_t j = 0; j < grid.v_nodes.size(); ++j) {
            const double phi = grid.phi_nodes[i];
            const double v = grid.v_nodes[j];
            const FisherMatrix f = field(phi, v);
            const double w = grid.v_weights[j] * prior.density(phi, v);
            row.phi_phi += w * f.phi_phi;
            row.phi_v += w * f.phi_v;
            row.v_v += w * f.v_v;
        }
        total.phi_phi += grid.phi_weights[i] * row.phi_phi;
        total.phi_v += grid.phi_weights[i] * row.phi_v;
        total.v_v += grid.phi_weights[i] * row.v_v;
    }
    if (!std::isfinite(total.phi_phi) || !std::isfinite(total.phi_v) ||
        !std::isfinite(total.v_v)) {
        throw QuadratureError("prior-averaged matrix integral is not finite");
    }
    return total;
}

FisherMatrix score_matrix_once(const JointPrior& prior, int panels) {
    const QuadratureGrid grid = QuadratureGrid::build(prior, panels);
    FisherMatrix score;
    for (std::size_t i = 0; i < grid.phi_nodes.size(); ++i) {
        FisherMatrix row;
        for (std::size_t j = 0; j < grid.v_nodes.size(); ++j) {
            const double phi = grid.phi_nodes[i];
            const double v = grid.v_nodes[j];
            const double p = prior.density(phi, v);
            const double dphi = prior.dphi_density(phi, v);
            const double dv = prior.dv_density(phi, v);
            const double w = grid.v_weights[j];
            row.phi_phi += w * dphi * dphi / p;
            row.phi_v += w * dphi * dv / p;
            row.v_v += w * dv * dv / p;
        }
        score.phi_phi += grid.phi_weights[i] * row.phi_phi;
        score.phi_v += grid.phi_weights[i] * row.phi_v;
        score.v_v += grid.phi_weights[i] * row.v_v;
    }
    return score;
}

void check_pair(double coarse, double fine, const char* what) {
    const double scale = std::max(std::abs(fine), 1e-12);
    if (std::abs(fine - coarse) > 1e-4 * scale) {
        throw QuadratureError(std::string(what) + " did not converge under grid doubling");
    }
}

} // namespace

VanTreesAssembler::VanTreesAssembler(const JointPrior& prior, int panels) {
    if (prior.phase.sigma > std::numbers::pi / 16.0 + 1e-12) {
        throw ValidationError("multiparameter bounds require sigma <= pi/16");
    }
    const auto fim_field = [](double phi, double v) { return conditional_fisher_matrix(phi, v); };
    const QuadratureGrid coarse_grid = QuadratureGrid::build(prior, panels);
    const QuadratureGrid fine_grid = QuadratureGrid::build(prior, 2 * panels);
    const FisherMatrix coarse = integrate_matrix(prior, coarse_grid, fim_field);
    averaged_fim_ = integrate_matrix(prior, fine_grid, fim_field);
    check_pair(coarse.phi_phi, averaged_fim_.phi_phi, "prior-averaged F_pp");
    check_pair(coarse.v_v, averaged_fim_.v_v, "prior-averaged F_vv");

    const FisherMatrix score_coarse = score_matrix_once(prior, panels);
    score_ = score_matrix_once(prior, 2 * panels);
    check_pair(score_coarse.phi_phi, score_.phi_phi, "phase score");
    check_pair(score_coarse.v_v, score_.v_v, "visibility score");
}

VanTreesMatrix VanTreesAssembler::matrix_for(std::uint64_t n) const {
    if (n < 1) throw ValidationError("van_trees_matrix requires n >= 1");
    const double inv_n = 1.0 / static_cast<double>(n);
    return VanTreesMatrix{averaged_fim_.phi_phi + inv_n * score_.phi_phi,
                          averaged_fim_.phi_v + inv_n * score_.phi_v,
                          averaged_fim_.v_v + inv_n * score_.v_v, n};
}

VanTreesMatrix VanTreesAssembler::conditional_matrix(const CountRecord& record,
                                                     std::ostream* warnings) const {
    const std::uint64_t n_total = record.n_z();
    if (n_total == 0) throw DegenerateError("conditional Van Trees matrix needs n_z > 0");
    VanTreesMatrix combined;
    combined.n = n_total;
    for (AliceLabel a : {AliceLabel::H, AliceLabel::V}) {
        const std::uint64_t n_a = record.alice_sector_total(a);
        if (n_a == 0) {
            // The sector's score term diverges but its weight vanishes;
            // the limit of the combination drops the sector entirely.
            if (warnings != nullptr) {
                *warnings << "conditional_van_trees: no events for Alice outcome "
                          << kAliceLabelNames[static_cast<std::size_t>(a)]
                          << "; sector dropped\n";
            }
            continue;
        }
        const double weight = static_cast<double>(n_a) / static_cast<double>(n_total);
        const double inv_n_a = 1.0 / static_cast<double>(n_a);
        // Per-sector Fisher average: both sectors share the conditional FIM
        // in this model, so the cached average applies unchanged.
        combined.phi_phi += weight * (averaged_fim_.phi_phi + inv_n_a * score_.phi_phi);
        combined.phi_v += weight * (averaged_fim_.phi_v + inv_n_a * score_.phi_v);
        combined.v_v += weight * (averaged_fim_.v_v + inv_n_a * score_.v_v);
    }
    return combined;
}

VanTreesMatrix van_trees_matrix(const JointPrior& prior, std::uint64_t n, int panels) {
    return VanTreesAssembler(prior, panels).matrix_for(n);
}

double van_trees_phase_bound(const VanTreesMatrix& matrix, std::uint64_t n) {
    if (n < 1) throw ValidationError("van_trees_phase_bound requires n >= 1");
    return matrix.inverse().phi_phi / static_cast<double>(n);
}

VanTreesMatrix conditional_van_trees(const CountRecord& record, const JointPrior& prior,
                                     int panels, std::ostream* warnings) {
    return VanTreesAssembler(prior, panels).conditional_matrix(record, warnings);
}

YfgLimit yfg_limit(double delta2_y_cond, const JointPrior& prior, std::uint64_t n_z,
                   int panels) {
    if (!(delta2_y_cond >= 0.0 && delta2_y_cond <= 1.0)) {
        throw ValidationError("yfg_limit requires 0 <= delta2_y_cond <= 1");
    }
    if (n_z < 1) throw ValidationError("yfg_limit requires n_z >= 1");
    YfgLimit limit;
    limit.generator_term = delta2_y_cond;
    limit.score_term = phase_score_integral(prior, n_z, panels);
    limit.value = limit.generator_term + limit.score_term;
    return limit;
}

double violation_threshold(BoundMode mode) {
    const auto gap = [mode](double v) {
        const double u = v * v;
        const double info = (mode == BoundMode::Single) ? u : u / (2.0 - u);
        return info - (1.0 - u);
    };
    double lo = 0.0;
    double hi = 1.0;
    while (hi - lo > 1e-9) {
        const double mid = 0.5 * (lo + hi);
        if (gap(mid) < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

VtYfgCheck vt_yfg_check(const VanTreesMatrix& matrix, const YfgLimit& limit) {
    const double lhs = matrix.inverse().phi_phi * limit.value;
    return VtYfgCheck{lhs, lhs < 1.0};
}

double prior_averaged_generator_variance(const VisibilityPrior& prior, int panels) {
    std::vector<double> nodes;
    std::vector<double> weights;
    simpson_axis(prior.support_low() + kVisibilityEdgeTrim,
                 prior.support_high() - kVisibilityEdgeTrim, panels, nodes, weights);
    double total = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        total += weights[i] * prior.density(nodes[i]) * (1.0 - nodes[i] * nodes[i]);
    }
    return total;
}

double scalar_van_trees_info(const PhasePrior& prior, double v, std::uint64_t n, int panels) {
    if (n < 1) throw ValidationError("scalar_van_trees_info requires n >= 1");
    std::vector<double> nodes;
    std::vector<double> weights;
    const double half_window = kPhaseWindowSigmas * prior.sigma;
    simpson_axis(prior.mu - half_window, prior.mu + half_window, panels, nodes, weights);
    double averaged = 0.0;
    double score = 0.0;
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double p = prior.density(nodes[i]);
        const double dp = prior.density_derivative(nodes[i]);
        averaged += weights[i] * p * conditional_fisher(nodes[i], v);
        score += weights[i] * dp * dp / p;
    }
    return averaged + score / static_cast<double>(n);
}

} // namespace steerkit
