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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>
#include <numbers>

#include "steerkit/errors.hpp"
#include "steerkit/priors.hpp"

using namespace steerkit;

namespace {
constexpr double kPi = std::numbers::pi;

JointPrior default_prior() {
    return JointPrior{PhasePrior(kPi / 4.0, kPi / 16.0), VisibilityPrior(0.95)};
}
} // namespace

TEST_CASE("Gaussian phase density") {
    const PhasePrior prior(0.3, kPi / 16.0);
    // mode value 1/sqrt(2 pi sigma^2); frozen from direct evaluation
    CHECK(prior.density(0.3) == doctest::Approx(2.0317963).epsilon(1e-7));
    CHECK(prior.density(0.3) ==
          doctest::Approx(1.0 / std::sqrt(2.0 * kPi) / prior.sigma).epsilon(1e-12));
    CHECK(prior.density(0.3 + prior.sigma) ==
          doctest::Approx(prior.density(0.3) * std::exp(-0.5)).epsilon(1e-12));
    CHECK_THROWS_AS(PhasePrior(0.0, 0.0), ValidationError);
    CHECK_THROWS_AS(PhasePrior(0.0, kPi / 4.0), ValidationError); // beyond pi/8
}

TEST_CASE("raised cosine density") {
    const VisibilityPrior prior(0.95);
    CHECK(prior.density(0.95) == doctest::Approx(20.0).epsilon(1e-12));
    CHECK(prior.density(1.0) == doctest::Approx(0.0).scale(1.0));
    CHECK(prior.density(0.9) == doctest::Approx(0.0).scale(1.0));
    CHECK(prior.density(0.89) == 0.0);
    CHECK(prior.density(1.01) == 0.0);
    // C1 closure: density and slope vanish toward the endpoints
    CHECK(prior.density(0.9 + 1e-6) < 1e-7);
    CHECK(std::abs(prior.density_derivative(0.9 + 1e-6)) < 0.1);
    CHECK(prior.density(0.9 + 1e-8) < prior.density(0.9 + 1e-6) / 100.0);
    CHECK_THROWS_AS(VisibilityPrior(0.5), ValidationError);
    CHECK_THROWS_AS(VisibilityPrior(1.0), ValidationError);
}

TEST_CASE("grid weights are positive and sum to the spans") {
    const JointPrior prior = default_prior();
    const QuadratureGrid grid = QuadratureGrid::build(prior, 128);
    double phi_span = 0.0;
    for (double w : grid.phi_weights) {
        CHECK(w > 0.0);
        phi_span += w;
    }
    CHECK(phi_span == doctest::Approx(12.0 * prior.phase.sigma).epsilon(1e-12));
    double v_span = 0.0;
    for (double w : grid.v_weights) {
        CHECK(w > 0.0);
        v_span += w;
    }
    CHECK(v_span == doctest::Approx(0.1 - 2e-9).epsilon(1e-9));
    CHECK_THROWS_AS(QuadratureGrid::build(prior, 7), ValidationError);
}

TEST_CASE("integrate reproduces prior moments") {
    const JointPrior prior = default_prior();
    const QuadratureGrid grid = QuadratureGrid::build(prior);
    const double mass = integrate([&](double p, double v) { return prior.density(p, v); }, grid);
    CHECK(mass == doctest::Approx(1.0).epsilon(1e-6));
    const double phi_mean =
        integrate([&](double p, double v) { return p * prior.density(p, v); }, grid);
    CHECK(phi_mean == doctest::Approx(prior.phase.mu).epsilon(1e-6));
    const double v_mean =
        integrate([&](double p, double v) { return v * prior.density(p, v); }, grid);
    CHECK(v_mean == doctest::Approx(prior.visibility.v0).epsilon(1e-6));
}

TEST_CASE("integrate rejects non-finite values") {
    const JointPrior prior = default_prior();
    const QuadratureGrid grid = QuadratureGrid::build(prior, 16);
    CHECK_THROWS_AS(
        integrate([](double, double) { return std::numeric_limits<double>::quiet_NaN(); }, grid),
        QuadratureError);
}

TEST_CASE("phase score integral matches the Gaussian closed form") {
    for (double sigma : {kPi / 8.0, kPi / 16.0}) {
        const JointPrior prior{PhasePrior(kPi / 4.0, sigma), VisibilityPrior(0.95)};
        const double expected = 1.0 / (sigma * sigma);
        CHECK(phase_score_integral(prior, 1) == doctest::Approx(expected).epsilon(1e-4));
        // 1/n scaling
        CHECK(phase_score_integral(prior, 100) == doctest::Approx(expected / 100.0).epsilon(1e-4));
    }
}

TEST_CASE("phase score does not depend on the visibility prior") {
    const JointPrior a{PhasePrior(kPi / 4.0, kPi / 16.0), VisibilityPrior(0.95)};
    const JointPrior b{PhasePrior(kPi / 4.0, kPi / 16.0), VisibilityPrior(0.8)};
    CHECK(phase_score_integral(a, 1) == doctest::Approx(phase_score_integral(b, 1)).epsilon(1e-8));
}

TEST_CASE("visibility score integral is finite and matches pi^2/(1-v0)^2") {
    for (double v0 : {0.8, 0.95}) {
        const JointPrior prior{PhasePrior(kPi / 4.0, kPi / 16.0), VisibilityPrior(v0)};
        const double width = 1.0 - v0;
        CHECK(visibility_score_integral(prior) ==
              doctest::Approx(kPi * kPi / (width * width)).epsilon(1e-4));
    }
}

TEST_CASE("convergence gate trips on a hopeless grid") {
    const JointPrior prior = default_prior();
    CHECK_THROWS_AS(phase_score_integral(prior, 1, 2), QuadratureError);
}
