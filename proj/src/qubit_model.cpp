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

#include "steerkit/qubit_model.hpp"

#include <cmath>
#include <numbers>

#include "steerkit/errors.hpp"

namespace steerkit {

namespace {

using namespace std::complex_literals;

constexpr double kHermitianTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kPsdTol = 1e-12;
constexpr double kDegenerateTrace = 1e-15;

void check_outcome(int outcome) {
    if (outcome != 1 && outcome != -1) {
        throw ValidationError("outcome must be +1 or -1");
    }
}

template <typename Matrix>
void check_hermitian(const Matrix& m, const char* what) {
    if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kHermitianTol) {
        throw ValidationError(std::string(what) + ": matrix is not Hermitian");
    }
}

template <typename Matrix>
double min_eigenvalue(const Matrix& m) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(m, Eigen::EigenvaluesOnly);
    return solver.eigenvalues().minCoeff();
}

} // namespace

char outcome_label(Axis axis, int outcome) {
    check_outcome(outcome);
    switch (axis) {
    case Axis::X: return outcome > 0 ? 'D' : 'A';
    case Axis::Y: return outcome > 0 ? 'L' : 'R';
    case Axis::Z: return outcome > 0 ? 'H' : 'V';
    }
    throw ValidationError("unknown axis");
}

Eigen::Vector2cd pauli_eigenvector(Axis axis, int outcome) {
    check_outcome(outcome);
    const double s = 1.0 / std::numbers::sqrt2;
    Eigen::Vector2cd ket;
    switch (axis) {
    case Axis::X: ket << s, (outcome > 0 ? s : -s); break;
    case Axis::Y: ket << s, (outcome > 0 ? 1.0i * s : -1.0i * s); break;
    case Axis::Z:
        if (outcome > 0) {
            ket << 1.0, 0.0;
        } else {
            ket << 0.0, 1.0;
        }
        break;
    }
    return ket;
}

const Mat2c& pauli_matrix(Axis axis) {
    static const Mat2c x = (Mat2c() << 0.0, 1.0, 1.0, 0.0).finished();
    static const Mat2c y = (Mat2c() << 0.0, -1.0i, 1.0i, 0.0).finished();
    static const Mat2c z = (Mat2c() << 1.0, 0.0, 0.0, -1.0).finished();
    switch (axis) {
    case Axis::X: return x;
    case Axis::Y: return y;
    case Axis::Z: return z;
    }
    throw ValidationError("unknown axis");
}

TwoQubitState::TwoQubitState(const Mat4c& matrix, double visibility)
    : matrix_(matrix), visibility_(visibility) {
    check_hermitian(matrix_, "TwoQubitState");
    if (std::abs(matrix_.trace().real() - 1.0) > kTraceTol ||
        std::abs(matrix_.trace().imag()) > kTraceTol) {
        throw ValidationError("TwoQubitState: trace must be 1");
    }
    if (min_eigenvalue(matrix_) < -kPsdTol) {
        throw ValidationError("TwoQubitState: matrix is not positive semidefinite");
    }
}

double TwoQubitState::purity() const { return (matrix_ * matrix_).trace().real(); }

TwoQubitState partially_coherent_singlet(double v) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw ValidationError("visibility must lie in [0, 1]");
    }
    Mat4c rho = Mat4c::Zero();
    rho(1, 1) = 0.5;
    rho(2, 2) = 0.5;
    rho(1, 2) = -v / 2.0;
    rho(2, 1) = -v / 2.0;
    return TwoQubitState(rho, v);
}

TwoQubitState apply_phase(const TwoQubitState& state, double phi) {
    if (!std::isfinite(phi)) throw ValidationError("phase must be finite");
    const double c = std::cos(phi / 2.0);
    const double s = std::sin(phi / 2.0);
    Mat2c u;
    u << c, -s, s, c; // exp(-i phi Y / 2)
    Mat4c big = Mat4c::Zero();
    big.block<2, 2>(0, 0) = u;
    big.block<2, 2>(2, 2) = u;
    return TwoQubitState(big * state.matrix() * big.adjoint(), state.visibility());
}

TwoQubitState to_lab_frame(const TwoQubitState& state) {
    const double s = 1.0 / std::numbers::sqrt2;
    Mat2c hadamard;
    hadamard << s, s, s, -s;
    Mat2c iy;
    iy << 0.0, 1.0, -1.0, 0.0; // i * Y
    Mat4c big = Mat4c::Zero();
    big.block<2, 2>(0, 0) = hadamard(0, 0) * iy;
    big.block<2, 2>(0, 2) = hadamard(0, 1) * iy;
    big.block<2, 2>(2, 0) = hadamard(1, 0) * iy;
    big.block<2, 2>(2, 2) = hadamard(1, 1) * iy;
    return TwoQubitState(big * state.matrix() * big.adjoint(), state.visibility());
}

ConditionalState::ConditionalState(const Mat2c& matrix, int alice_outcome,
                                   PauliSetting alice_setting)
    : matrix_(matrix), alice_outcome_(alice_outcome), alice_setting_(alice_setting) {
    check_outcome(alice_outcome);
    check_hermitian(matrix_, "ConditionalState");
    const double t = matrix_.trace().real();
    if (t < -kTraceTol || t > 1.0 + kTraceTol) {
        throw ValidationError("ConditionalState: trace must lie in [0, 1]");
    }
    if (min_eigenvalue(matrix_) < -kPsdTol) {
        throw ValidationError("ConditionalState: matrix is not positive semidefinite");
    }
}

double ConditionalState::probability() const { return matrix_.trace().real(); }

Mat2c ConditionalState::normalized() const {
    const double t = probability();
    if (t < kDegenerateTrace) {
        throw DegenerateError("ConditionalState: outcome has zero probability");
    }
    return matrix_ / t;
}

Assemblage::Assemblage(PauliSetting alice_setting, ConditionalState plus, ConditionalState minus)
    : alice_setting_(alice_setting), plus_(std::move(plus)), minus_(std::move(minus)) {
    const double total = plus_.probability() + minus_.probability();
    if (std::abs(total - 1.0) > kTraceTol) {
        throw ValidationError("Assemblage: outcome probabilities must sum to 1");
    }
}

const ConditionalState& Assemblage::entry(int alice_outcome) const {
    check_outcome(alice_outcome);
    return alice_outcome > 0 ? plus_ : minus_;
}

Mat2c Assemblage::reduced_state() const { return plus_.matrix() + minus_.matrix(); }

Assemblage assemblage_for(const TwoQubitState& state, PauliSetting alice_setting) {
    if (alice_setting.party != Party::Alice) {
        throw ValidationError("assemblage_for expects an Alice setting");
    }
    const Mat4c& rho = state.matrix();
    auto project = [&](int outcome) {
        const Eigen::Vector2cd a = pauli_eigenvector(alice_setting.axis, outcome);
        Mat2c block = Mat2c::Zero();
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                block += std::conj(a(i)) * a(j) * rho.block<2, 2>(2 * i, 2 * j);
            }
        }
        return ConditionalState(block, outcome, alice_setting);
    };
    return Assemblage(alice_setting, project(+1), project(-1));
}

double outcome_probability(const Assemblage& assemblage, int a, PauliSetting bob_setting, int b) {
    if (bob_setting.party != Party::Bob) {
        throw ValidationError("outcome_probability expects a Bob setting");
    }
    const Mat2c rho = assemblage.entry(a).normalized();
    const Eigen::Vector2cd ket = pauli_eigenvector(bob_setting.axis, b);
    return std::real((ket.adjoint() * rho * ket)(0, 0));
}

double conditional_y_mean(const Assemblage& y_assemblage, int a) {
    const Mat2c rho = y_assemblage.entry(a).normalized();
    return (pauli_matrix(Axis::Y) * rho).trace().real();
}

double conditional_variance_y(const Assemblage& y_assemblage) {
    double total = 0.0;
    for (int a : {+1, -1}) {
        const double p = y_assemblage.entry(a).probability();
        if (p < kDegenerateTrace) continue;
        const double mean = conditional_y_mean(y_assemblage, a);
        total += p * (1.0 - mean * mean); // <Y^2> = 1 on any qubit state
    }
    return total;
}

namespace {

// Gamma_ab, rows b in {D, A, H, V}, columns a in {H, V}.
constexpr double kHalfPi = std::numbers::pi / 2.0;
constexpr double kPi = std::numbers::pi;
constexpr double kPhaseOffsets[4][2] = {
    {-kHalfPi, kHalfPi}, // b = D
    {kHalfPi, -kHalfPi}, // b = A
    {kPi, 0.0},          // b = H
    {0.0, kPi},          // b = V
};

} // namespace

double phase_offset(BobLabel b, AliceLabel a) {
    return kPhaseOffsets[static_cast<int>(b)][static_cast<int>(a)];
}

double phase_branch_conditional(BobLabel b, AliceLabel a, double phi, double v) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw ValidationError("visibility must lie in [0, 1]");
    }
    return (1.0 + v * std::cos(phi + phase_offset(b, a))) / 4.0;
}

std::array<double, 8> phase_branch_joint(double phi, double v) {
    std::array<double, 8> joint{};
    for (int b = 0; b < 4; ++b) {
        for (int a = 0; a < 2; ++a) {
            joint[static_cast<std::size_t>(2 * b + a)] =
                0.5 * phase_branch_conditional(static_cast<BobLabel>(b),
                                               static_cast<AliceLabel>(a), phi, v);
        }
    }
    return joint;
}

std::array<double, 4> generator_branch_joint(double v) {
    if (!(v >= 0.0 && v <= 1.0)) {
        throw ValidationError("visibility must lie in [0, 1]");
    }
    const double concordant = (1.0 - v) / 4.0;
    const double discordant = (1.0 + v) / 4.0;
    // order m_LL, m_LR, m_RL, m_RR
    return {concordant, discordant, discordant, concordant};
}

} // namespace steerkit
