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

#include "steerkit/priors.hpp"

#include <cmath>
#include <numbers>

#include "steerkit/errors.hpp"

namespace steerkit {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kSigmaSlack = 1e-12;

double score_integral_once(const JointPrior& prior, int panels, bool phase_direction) {
    const QuadratureGrid grid = QuadratureGrid::build(prior, panels);
    return integrate(
        [&](double phi, double v) {
            const double p = prior.density(phi, v);
            const double dp =
                phase_direction ? prior.dphi_density(phi, v) : prior.dv_density(phi, v);
            return dp * dp / p;
        },
        grid);
}

double converged_score_integral(const JointPrior& prior, int panels, bool phase_direction) {
    const double coarse = score_integral_once(prior, panels, phase_direction);
    const double fine = score_integral_once(prior, 2 * panels, phase_direction);
    if (std::abs(fine - coarse) > 1e-4 * std::abs(fine)) {
        throw QuadratureError("score integral did not converge under grid doubling");
    }
    return fine;
}

} // namespace

PhasePrior::PhasePrior(double mu_, double sigma_) : mu(mu_), sigma(sigma_) {
    if (!std::isfinite(mu)) throw ValidationError("phase prior center must be finite");
    if (!(sigma > 0.0)) throw ValidationError("phase prior width must be positive");
    if (sigma > kPi / 8.0 + kSigmaSlack) {
        throw ValidationError("phase prior width must not exceed pi/8 (fringe ambiguity)");
    }
}

double PhasePrior::density(double phi) const {
    const double z = (phi - mu) / sigma;
    return std::exp(-0.5 * z * z) / (sigma * std::sqrt(2.0 * kPi));
}

double PhasePrior::density_derivative(double phi) const {
    return -(phi - mu) / (sigma * sigma) * density(phi);
}

VisibilityPrior::VisibilityPrior(double v0_) : v0(v0_) {
    if (!(v0 > 0.5 && v0 < 1.0)) {
        throw ValidationError("expected visibility must lie in (1/2, 1)");
    }
}

double VisibilityPrior::density(double v) const {
    if (v <= support_low() || v >= support_high()) return 0.0;
    const double width = 1.0 - v0;
    // (1 + cos(pi t / w)) / (2 w) written as cos^2 to stay accurate where
    // the density vanishes at the support edges
    const double half_angle = std::cos(kPi * (v - v0) / (2.0 * width));
    return half_angle * half_angle / width;
}

double VisibilityPrior::density_derivative(double v) const {
    if (v <= support_low() || v >= support_high()) return 0.0;
    const double width = 1.0 - v0;
    return -kPi * std::sin(kPi * (v - v0) / width) / (2.0 * width * width);
}

double JointPrior::density(double phi, double v) const {
    return phase.density(phi) * visibility.density(v);
}

double JointPrior::dphi_density(double phi, double v) const {
    return phase.density_derivative(phi) * visibility.density(v);
}

double JointPrior::dv_density(double phi, double v) const {
    return phase.density(phi) * visibility.density_derivative(v);
}

void simpson_axis(double a, double b, int panels, std::vector<double>& nodes,
                  std::vector<double>& weights) {
    if (panels < 2 || panels % 2 != 0) {
        throw ValidationError("Simpson quadrature needs an even panel count >= 2");
    }
    if (!(b > a)) throw ValidationError("quadrature interval is empty");
    const int count = panels + 1;
    const double h = (b - a) / panels;
    nodes.resize(count);
    weights.resize(count);
    for (int i = 0; i < count; ++i) {
        nodes[static_cast<std::size_t>(i)] = a + h * i;
        double w = (i == 0 || i == panels) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        weights[static_cast<std::size_t>(i)] = w * h / 3.0;
    }
    nodes.back() = b; // guard against rounding drift at the endpoint
}

QuadratureGrid QuadratureGrid::build(const JointPrior& prior, int panels) {
    QuadratureGrid grid;
    grid.panels = panels;
    const double mu = prior.phase.mu;
    const double half_window = kPhaseWindowSigmas * prior.phase.sigma;
    simpson_axis(mu - half_window, mu + half_window, panels, grid.phi_nodes, grid.phi_weights);
    simpson_axis(prior.visibility.support_low() + kVisibilityEdgeTrim,
                 prior.visibility.support_high() - kVisibilityEdgeTrim, panels, grid.v_nodes,
                 grid.v_weights);
    return grid;
}

double integrate(const std::function<double(double, double)>& f, const QuadratureGrid& grid) {
    double total = 0.0;
    for (std::size_t i = 0; i < grid.phi_nodes.size(); ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < grid.v_nodes.size(); ++j) {
            const double value = f(grid.phi_nodes[i], grid.v_nodes[j]);
            if (!std::isfinite(value)) {
                throw QuadratureError("integrand evaluated to a non-finite value");
            }
            row += grid.v_weights[j] * value;
        }
        total += grid.phi_weights[i] * row;
    }
    return total;
}

double phase_score_integral(const JointPrior& prior, std::uint64_t n, int panels) {
    if (n < 1) throw ValidationError("phase_score_integral requires n >= 1");
    return converged_score_integral(prior, panels, true) / static_cast<double>(n);
}

double visibility_score_integral(const JointPrior& prior, int panels) {
    return converged_score_integral(prior, panels, false);
}

} // namespace steerkit
