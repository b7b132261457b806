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
#include <numbers>

#include "steerkit/errors.hpp"
#include "steerkit/qubit_model.hpp"

using namespace steerkit;
using namespace std::complex_literals;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr PauliSetting kAliceX{Axis::X, Party::Alice};
constexpr PauliSetting kAliceY{Axis::Y, Party::Alice};
constexpr PauliSetting kAliceZ{Axis::Z, Party::Alice};
constexpr PauliSetting kBobY{Axis::Y, Party::Bob};
constexpr PauliSetting kBobZ{Axis::Z, Party::Bob};
} // namespace

TEST_CASE("partially coherent singlet endpoints") {
    const TwoQubitState pure = partially_coherent_singlet(1.0);
    CHECK(pure.purity() == doctest::Approx(1.0).epsilon(1e-12));

    const TwoQubitState dephased = partially_coherent_singlet(0.0);
    CHECK(dephased.purity() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(std::abs(dephased.matrix()(1, 1).real() - 0.5) < 1e-15);
    CHECK(std::abs(dephased.matrix()(2, 2).real() - 0.5) < 1e-15);
    CHECK(std::abs(dephased.matrix()(1, 2)) < 1e-15);

    const TwoQubitState experiment = partially_coherent_singlet(0.97);
    CHECK(experiment.matrix()(1, 1).real() == doctest::Approx(0.5));
    CHECK(experiment.matrix()(1, 2).real() == doctest::Approx(-0.485));
    CHECK(experiment.matrix()(2, 1).real() == doctest::Approx(-0.485));

    CHECK_THROWS_AS(partially_coherent_singlet(-0.1), ValidationError);
    CHECK_THROWS_AS(partially_coherent_singlet(1.1), ValidationError);
}

TEST_CASE("phase rotation is trivial at 0 and 2 pi and additive") {
    const TwoQubitState state = partially_coherent_singlet(0.8);
    CHECK((apply_phase(state, 0.0).matrix() - state.matrix()).cwiseAbs().maxCoeff() < 1e-15);
    CHECK((apply_phase(state, 2.0 * kPi).matrix() - state.matrix()).cwiseAbs().maxCoeff() <
          1e-12);
    for (double phi1 : {0.3, -1.2}) {
        for (double phi2 : {0.9, 2.5}) {
            const Mat4c two_steps = apply_phase(apply_phase(state, phi1), phi2).matrix();
            const Mat4c one_step = apply_phase(state, phi1 + phi2).matrix();
            CHECK((two_steps - one_step).cwiseAbs().maxCoeff() < 1e-12);
        }
    }
}

TEST_CASE("conditional states of Alice X match the fringe forms") {
    const double v = 0.97;
    const double phi = kPi / 4.0;
    const Assemblage assemblage =
        assemblage_for(apply_phase(partially_coherent_singlet(v), phi), kAliceX);
    // rho_D = (1/4) [[1 + v sin, -v cos], [-v cos, 1 - v sin]]
    const Mat2c rho_d = assemblage.entry(+1).matrix();
    CHECK(rho_d(0, 0).real() == doctest::Approx((1.0 + v * std::sin(phi)) / 4.0).epsilon(1e-12));
    CHECK(rho_d(0, 1).real() == doctest::Approx(-v * std::cos(phi) / 4.0).epsilon(1e-12));
    CHECK(rho_d(1, 1).real() == doctest::Approx((1.0 - v * std::sin(phi)) / 4.0).epsilon(1e-12));
    const Mat2c rho_a = assemblage.entry(-1).matrix();
    CHECK(rho_a(0, 0).real() == doctest::Approx((1.0 - v * std::sin(phi)) / 4.0).epsilon(1e-12));
    CHECK(rho_a(0, 1).real() == doctest::Approx(v * std::cos(phi) / 4.0).epsilon(1e-12));
}

TEST_CASE("Alice Y assemblage carries the visibility on the imaginary axis") {
    const Assemblage assemblage = assemblage_for(partially_coherent_singlet(0.97), kAliceY);
    const Mat2c rho_l = assemblage.entry(+1).matrix();
    CHECK(rho_l(0, 0).real() == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(rho_l(0, 1).imag() == doctest::Approx(0.97 / 4.0).epsilon(1e-12));
    CHECK(rho_l(1, 0).imag() == doctest::Approx(-0.97 / 4.0).epsilon(1e-12));
    CHECK(assemblage.entry(+1).probability() == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(assemblage.entry(-1).probability() == doctest::Approx(0.5).epsilon(1e-12));

    // phase rotation commutes with Y, so the generator branch ignores phi
    const Assemblage rotated =
        assemblage_for(apply_phase(partially_coherent_singlet(0.97), 1.1), kAliceY);
    CHECK((rotated.entry(+1).matrix() - rho_l).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("Alice Z conditional states are visibility independent") {
    for (double phi : {0.0, 0.7}) {
        const Assemblage low =
            assemblage_for(apply_phase(partially_coherent_singlet(0.3), phi), kAliceZ);
        const Assemblage high =
            assemblage_for(apply_phase(partially_coherent_singlet(0.9), phi), kAliceZ);
        for (int outcome : {+1, -1}) {
            CHECK((low.entry(outcome).matrix() - high.entry(outcome).matrix())
                      .cwiseAbs()
                      .maxCoeff() < 1e-12);
            CHECK(low.entry(outcome).probability() == doctest::Approx(0.5).epsilon(1e-12));
        }
    }
}

TEST_CASE("completeness and no-signaling across settings") {
    const TwoQubitState state = apply_phase(partially_coherent_singlet(0.85), 0.4);
    const Assemblage x = assemblage_for(state, kAliceX);
    const Assemblage y = assemblage_for(state, kAliceY);
    const Assemblage z = assemblage_for(state, kAliceZ);
    for (const Assemblage* assemblage : {&x, &y, &z}) {
        const double total =
            assemblage->entry(+1).probability() + assemblage->entry(-1).probability();
        CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
    }
    CHECK((x.reduced_state() - y.reduced_state()).cwiseAbs().maxCoeff() < 1e-12);
    CHECK((y.reduced_state() - z.reduced_state()).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("Born-rule conditionals") {
    const double v = 0.97;
    const Assemblage y = assemblage_for(partially_coherent_singlet(v), kAliceY);
    // p(b = L | a = L) = (1 + <Y>_L)/2 = (1 - v)/2
    CHECK(outcome_probability(y, +1, kBobY, +1) ==
          doctest::Approx((1.0 - v) / 2.0).epsilon(1e-12));
    CHECK(conditional_y_mean(y, +1) == doctest::Approx(-v).epsilon(1e-12));
    CHECK(conditional_y_mean(y, -1) == doctest::Approx(v).epsilon(1e-12));

    // v = 0: flat conditionals for X and Y readouts
    const TwoQubitState mixed = partially_coherent_singlet(0.0);
    for (Axis alice_axis : {Axis::X, Axis::Y}) {
        const Assemblage assemblage =
            assemblage_for(mixed, PauliSetting{alice_axis, Party::Alice});
        for (Axis bob_axis : {Axis::X, Axis::Y}) {
            for (int a : {+1, -1}) {
                for (int b : {+1, -1}) {
                    CHECK(outcome_probability(assemblage, a, PauliSetting{bob_axis, Party::Bob},
                                              b) == doctest::Approx(0.5).epsilon(1e-12));
                }
            }
        }
    }

    // conditionals are normalized over b for every setting
    const Assemblage x = assemblage_for(apply_phase(partially_coherent_singlet(0.8), 0.9),
                                        kAliceX);
    for (Axis bob_axis : {Axis::X, Axis::Y, Axis::Z}) {
        const PauliSetting bob{bob_axis, Party::Bob};
        for (int a : {+1, -1}) {
            const double sum =
                outcome_probability(x, a, bob, +1) + outcome_probability(x, a, bob, -1);
            CHECK(sum == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
}

TEST_CASE("joint outcome distributions normalize for every setting pair") {
    for (double v : {0.0, 0.4, 0.97, 1.0}) {
        for (double phi : {0.0, 0.9, 2.2}) {
            const TwoQubitState state = apply_phase(partially_coherent_singlet(v), phi);
            for (Axis alice_axis : {Axis::X, Axis::Y, Axis::Z}) {
                const Assemblage assemblage =
                    assemblage_for(state, PauliSetting{alice_axis, Party::Alice});
                for (Axis bob_axis : {Axis::X, Axis::Y, Axis::Z}) {
                    const PauliSetting bob{bob_axis, Party::Bob};
                    double total = 0.0;
                    for (int a : {+1, -1}) {
                        for (int b : {+1, -1}) {
                            const double joint = assemblage.entry(a).probability() *
                                                 outcome_probability(assemblage, a, bob, b);
                            CHECK(joint >= -1e-12);
                            total += joint;
                        }
                    }
                    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
                }
            }
        }
    }
}

TEST_CASE("zero-probability Alice outcome is degenerate") {
    Mat4c product = Mat4c::Zero();
    product(0, 0) = 1.0; // |HH><HH|
    const TwoQubitState state(product, 1.0);
    const Assemblage z = assemblage_for(state, kAliceZ);
    CHECK_THROWS_AS(outcome_probability(z, -1, kBobZ, +1), DegenerateError);
}

TEST_CASE("frozen fringe offsets reproduce the Born rule") {
    // label wiring: a=H/V are Alice X outcomes +1/-1; Bob D/A read his Z
    // basis, Bob H/V read his X basis
    const auto bob_readout = [](BobLabel b) {
        switch (b) {
        case BobLabel::D: return std::pair{PauliSetting{Axis::Z, Party::Bob}, +1};
        case BobLabel::A: return std::pair{PauliSetting{Axis::Z, Party::Bob}, -1};
        case BobLabel::H: return std::pair{PauliSetting{Axis::X, Party::Bob}, +1};
        case BobLabel::V: return std::pair{PauliSetting{Axis::X, Party::Bob}, -1};
        }
        return std::pair{PauliSetting{Axis::Z, Party::Bob}, +1};
    };
    for (double v : {0.5, 0.97}) {
        for (double phi : {0.0, 0.37, kPi / 4.0, 2.0}) {
            const Assemblage assemblage =
                assemblage_for(apply_phase(partially_coherent_singlet(v), phi), kAliceX);
            for (int bi = 0; bi < 4; ++bi) {
                const BobLabel b = static_cast<BobLabel>(bi);
                for (AliceLabel a : {AliceLabel::H, AliceLabel::V}) {
                    const auto [setting, outcome] = bob_readout(b);
                    const int alice_outcome = (a == AliceLabel::H) ? +1 : -1;
                    const double born =
                        outcome_probability(assemblage, alice_outcome, setting, outcome);
                    // table form carries the 50/50 setting weight
                    CHECK(phase_branch_conditional(b, a, phi, v) ==
                          doctest::Approx(born / 2.0).epsilon(1e-12));
                }
            }
        }
    }
}

TEST_CASE("phase branch joint normalizes and anticorrelates at v = 1") {
    for (double v : {0.0, 0.6, 1.0}) {
        for (double phi : {0.0, 1.0, 3.0}) {
            const auto joint = phase_branch_joint(phi, v);
            double total = 0.0;
            for (double p : joint) {
                CHECK(p >= -1e-15);
                total += p;
            }
            CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
    // v = 1, phi = 0: the n_HH and n_VV cells are empty
    const auto joint = phase_branch_joint(0.0, 1.0);
    CHECK(joint[4] == doctest::Approx(0.0).scale(1.0).epsilon(1e-15)); // n_HH
    CHECK(joint[7] == doctest::Approx(0.0).scale(1.0).epsilon(1e-15)); // n_VV
}

TEST_CASE("generator branch joint endpoints") {
    const auto pure = generator_branch_joint(1.0);
    CHECK(pure[0] == doctest::Approx(0.0).scale(1.0)); // m_LL
    CHECK(pure[3] == doctest::Approx(0.0).scale(1.0)); // m_RR
    CHECK(pure[1] == doctest::Approx(0.5));
    CHECK(pure[2] == doctest::Approx(0.5));
    const auto mixed = generator_branch_joint(0.0);
    for (double p : mixed) CHECK(p == doctest::Approx(0.25));
}

TEST_CASE("conditional generator variance equals 1 - v^2") {
    for (double v : {0.0, 0.5, 0.97, 1.0}) {
        const Assemblage y = assemblage_for(apply_phase(partially_coherent_singlet(v), 0.2),
                                            kAliceY);
        CHECK(conditional_variance_y(y) == doctest::Approx(1.0 - v * v).epsilon(1e-12));
    }
}

TEST_CASE("lab frame holds the experimental state at v = 1") {
    const TwoQubitState lab = to_lab_frame(partially_coherent_singlet(1.0));
    // |psi> = (|HD> + |VA>)/sqrt(2): diagonal weights 1/4 on all four basis
    // states and coherences with sign pattern of |HD><VA|
    const Mat4c& rho = lab.matrix();
    CHECK(rho(0, 0).real() == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(rho(1, 1).real() == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(rho(2, 2).real() == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(rho(3, 3).real() == doctest::Approx(0.25).epsilon(1e-12));
    CHECK(lab.purity() == doctest::Approx(1.0).epsilon(1e-12));
    // overlap with (|HD> + |VA>)/sqrt(2)
    Eigen::Vector4cd psi;
    const double s = 1.0 / std::numbers::sqrt2;
    psi << s * s, s * s, s * s, -s * s;
    psi.normalize();
    const double overlap = std::real((psi.adjoint() * rho * psi)(0, 0));
    CHECK(overlap == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("outcome labels") {
    CHECK(outcome_label(Axis::X, +1) == 'D');
    CHECK(outcome_label(Axis::X, -1) == 'A');
    CHECK(outcome_label(Axis::Y, +1) == 'L');
    CHECK(outcome_label(Axis::Y, -1) == 'R');
    CHECK(outcome_label(Axis::Z, +1) == 'H');
    CHECK(outcome_label(Axis::Z, -1) == 'V');
    CHECK_THROWS_AS(outcome_label(Axis::Z, 0), ValidationError);
}
