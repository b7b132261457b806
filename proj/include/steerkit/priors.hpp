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

#include <cstdint>
#include <functional>
#include <vector>

namespace steerkit {

inline constexpr int kDefaultGridPanels = 512;
inline constexpr double kVisibilityEdgeTrim = 1e-9;
inline constexpr double kPhaseWindowSigmas = 6.0;

/// Gaussian prior on the phase. The width is capped at pi/8 so the prior
/// cannot straddle fringes with equal Fisher information; multiparameter
/// consumers additionally require sigma <= pi/16 (the matrix elements have
/// half the period).
struct PhasePrior {
    double mu;
    double sigma;

    PhasePrior(double mu, double sigma);

    double density(double phi) const;
    double density_derivative(double phi) const;
};

/// Raised-cosine prior on the visibility, supported on (2 v0 - 1, 1) and
/// peaking at its mean v0. C1 on the closure: density and derivative both
/// vanish at the endpoints, which keeps the score integral finite.
struct VisibilityPrior {
    double v0;

    explicit VisibilityPrior(double v0);

    double support_low() const { return 2.0 * v0 - 1.0; }
    double support_high() const { return 1.0; }
    double density(double v) const;
    double density_derivative(double v) const;
};

/// Factorized prior P(phi, v) = P_phi(phi) * P_v(v).
struct JointPrior {
    PhasePrior phase;
    VisibilityPrior visibility;

    double density(double phi, double v) const;
    double dphi_density(double phi, double v) const;
    double dv_density(double phi, double v) const;
};

/// Tensor-product composite Simpson grid shared by every Bayesian integral.
/// `panels` is the number of subintervals per axis (must be even); the axis
/// spans are [mu - 6 sigma, mu + 6 sigma] and [2 v0 - 1 + eps, 1 - eps] with
/// eps = 1e-9 trimming the raised-cosine zeros.
struct QuadratureGrid {
    std::vector<double> phi_nodes;
    std::vector<double> phi_weights;
    std::vector<double> v_nodes;
    std::vector<double> v_weights;
    int panels = 0;

    static QuadratureGrid build(const JointPrior& prior, int panels = kDefaultGridPanels);
};

/// Composite Simpson weights for `panels` subintervals of [a, b];
/// Sum of the weights equals b - a.
void simpson_axis(double a, double b, int panels, std::vector<double>& nodes,
                  std::vector<double>& weights);

/// Tensor-product quadrature of f over the grid. Throws QuadratureError on
/// a non-finite integrand value.
double integrate(const std::function<double(double, double)>& f, const QuadratureGrid& grid);

/// (1/n) * Int (d_phi P)^2 / P dphi dv. For the Gaussian phase marginal this
/// equals 1/(n sigma^2). The integral is evaluated at `panels` and at twice
/// that; a relative change above 1e-4 raises QuadratureError.
double phase_score_integral(const JointPrior& prior, std::uint64_t n,
                            int panels = kDefaultGridPanels);

/// Int (d_v P)^2 / P dphi dv (no 1/n factor); the visibility score carried
/// by the raised cosine, pi^2/(1 - v0)^2 analytically. Same convergence
/// gate as phase_score_integral.
double visibility_score_integral(const JointPrior& prior, int panels = kDefaultGridPanels);

} // namespace steerkit
