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

#include "steerkit/information.hpp"

#include <cmath>

#include "steerkit/errors.hpp"

namespace steerkit {

namespace {

constexpr double kProbabilityFloor = 1e-12;
constexpr double kNegativeProbabilityTol = -1e-9;
constexpr double kVisibilityCeiling = 1.0 - 1e-9;

void check_probabilities(const std::vector<double>& p) {
    for (double value : p) {
        if (value < kNegativeProbabilityTol) {
            throw ValidationError("probability model returned a negative probability");
        }
    }
}

void check_visibility_interior(double v) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw ValidationError("visibility must lie in [0, 1]");
    }
    if (v > kVisibilityCeiling) {
        throw SingularityError("conditional Fisher information diverges at v = 1");
    }
}

} // namespace

bool FisherMatrix::is_psd(double tol) const {
    return phi_phi >= -tol && v_v >= -tol && det() >= -tol * (1.0 + phi_phi * v_v);
}

FisherMatrix FisherMatrix::inverse() const {
    const double d = det();
    // eigenvalues of a symmetric 2x2: mean +- radius
    const double mean = 0.5 * (phi_phi + v_v);
    const double radius = std::sqrt(0.25 * (phi_phi - v_v) * (phi_phi - v_v) + phi_v * phi_v);
    const double lo = std::abs(mean - radius);
    const double hi = std::abs(mean + radius);
    if (d == 0.0 || lo == 0.0 || hi / lo > 1e12) {
        throw SingularMatrixError("2x2 information matrix is singular or ill-conditioned");
    }
    return FisherMatrix{v_v / d, -phi_v / d, phi_phi / d};
}

double fisher_scalar(const ProbabilityModel1D& model, double phi, double step) {
    if (!(step > 0.0)) throw ValidationError("fisher_scalar requires step > 0");
    const std::vector<double> center = model(phi);
    const std::vector<double> above = model(phi + step);
    const std::vector<double> below = model(phi - step);
    if (above.size() != center.size() || below.size() != center.size()) {
        throw ValidationError("probability model changed its outcome count");
    }
    check_probabilities(center);
    check_probabilities(above);
    check_probabilities(below);
    double info = 0.0;
    for (std::size_t r = 0; r < center.size(); ++r) {
        if (center[r] < kProbabilityFloor) continue;
        const double dp = (above[r] - below[r]) / (2.0 * step);
        info += dp * dp / center[r];
    }
    return info;
}

FisherMatrix fisher_matrix_fd(const ProbabilityModel2D& model, double phi, double v,
                              double step) {
    if (!(step > 0.0)) throw ValidationError("fisher_matrix_fd requires step > 0");
    const std::vector<double> center = model(phi, v);
    const std::vector<double> phi_above = model(phi + step, v);
    const std::vector<double> phi_below = model(phi - step, v);
    const std::vector<double> v_above = model(phi, v + step);
    const std::vector<double> v_below = model(phi, v - step);
    check_probabilities(center);
    check_probabilities(phi_above);
    check_probabilities(phi_below);
    check_probabilities(v_above);
    check_probabilities(v_below);
    FisherMatrix fisher;
    for (std::size_t r = 0; r < center.size(); ++r) {
        if (center[r] < kProbabilityFloor) continue;
        const double dp_phi = (phi_above[r] - phi_below[r]) / (2.0 * step);
        const double dp_v = (v_above[r] - v_below[r]) / (2.0 * step);
        fisher.phi_phi += dp_phi * dp_phi / center[r];
        fisher.phi_v += dp_phi * dp_v / center[r];
        fisher.v_v += dp_v * dp_v / center[r];
    }
    return fisher;
}

double conditional_fisher(double phi, double v) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw ValidationError("visibility must lie in [0, 1]");
    }
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    const double denominator = 1.0 - v * v * s * s;
    if (denominator < 1e-12) {
        throw SingularityError("conditional_fisher pole at (v = 1, phi = pi/2 + m pi)");
    }
    return v * v * c * c / denominator;
}

FisherMatrix conditional_fisher_matrix(double phi, double v) {
    if (!std::isfinite(phi)) throw ValidationError("phase must be finite");
    check_visibility_interior(v);
    const double c2 = std::cos(phi) * std::cos(phi);
    const double s2 = std::sin(phi) * std::sin(phi);
    const double u = v * v;
    const double ds = 1.0 - u * s2;
    const double dc = 1.0 - u * c2;
    const double s2phi = std::sin(2.0 * phi);
    FisherMatrix fisher;
    fisher.phi_phi = (u / 2.0) * (c2 / ds + s2 / dc);
    fisher.v_v = s2 / (2.0 * ds) + c2 / (2.0 * dc);
    fisher.phi_v = -(v * u) * std::sin(4.0 * phi) / (8.0 * (1.0 - u) + 2.0 * u * u * s2phi * s2phi);
    return fisher;
}

FisherMatrix per_outcome_fisher_matrix(AliceLabel a, double phi, double v) {
    check_visibility_interior(v);
    FisherMatrix fisher;
    for (int b = 0; b < 4; ++b) {
        const double offset = phase_offset(static_cast<BobLabel>(b), a);
        const double q = (1.0 + v * std::cos(phi + offset)) / 4.0;
        const double dq_phi = -v * std::sin(phi + offset) / 4.0;
        const double dq_v = std::cos(phi + offset) / 4.0;
        fisher.phi_phi += dq_phi * dq_phi / q;
        fisher.phi_v += dq_phi * dq_v / q;
        fisher.v_v += dq_v * dq_v / q;
    }
    return fisher;
}

EffectiveInfo effective_phase_info(const FisherMatrix& fisher) {
    if (fisher.v_v <= 1e-15) {
        if (std::abs(fisher.phi_v) > 0.0) {
            throw DegenerateError("effective_phase_info: vanishing F_vv with phase-visibility "
                                  "correlation");
        }
        return EffectiveInfo{fisher.phi_phi, 0.0};
    }
    const double penalty = fisher.phi_v * fisher.phi_v / fisher.v_v;
    return EffectiveInfo{fisher.phi_phi - penalty, penalty};
}

double correlation_coefficient(const FisherMatrix& inverse_fisher) {
    if (!(inverse_fisher.phi_phi > 0.0) || !(inverse_fisher.v_v > 0.0)) {
        throw DegenerateError("correlation_coefficient: nonpositive diagonal");
    }
    return inverse_fisher.phi_v / std::sqrt(inverse_fisher.phi_phi * inverse_fisher.v_v);
}

ProbabilityModel1D single_parameter_phase_model(double v) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw ValidationError("visibility must lie in [0, 1]");
    }
    return [v](double phi) {
        // Alice sector (H/V) x Bob Z readout (lab D/A labels), joint.
        const double s = v * std::sin(phi);
        return std::vector<double>{(1.0 + s) / 4.0, (1.0 - s) / 4.0, (1.0 - s) / 4.0,
                                   (1.0 + s) / 4.0};
    };
}

ProbabilityModel2D phase_branch_model() {
    return [](double phi, double v) {
        const auto joint = phase_branch_joint(phi, v);
        return std::vector<double>(joint.begin(), joint.end());
    };
}

} // namespace steerkit
