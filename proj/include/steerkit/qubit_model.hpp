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

#include <Eigen/Dense>
#include <array>
#include <complex>
#include <string>

namespace steerkit {

using Mat2c = Eigen::Matrix2cd;
using Mat4c = Eigen::Matrix4cd;

enum class Axis { X, Y, Z };
enum class Party { Alice, Bob };

struct PauliSetting {
    Axis axis;
    Party party;
};

/// Basis label for a ±1 outcome: X -> D/A, Y -> L/R, Z -> H/V.
char outcome_label(Axis axis, int outcome);

/// Normalized ±1 eigenvector of the given Pauli axis in the H/V basis.
Eigen::Vector2cd pauli_eigenvector(Axis axis, int outcome);

const Mat2c& pauli_matrix(Axis axis);

/// Two-qubit density matrix in the Alice-major basis (HH, HV, VH, VV),
/// tagged with the visibility of the underlying resource.
///
/// Construction validates Hermiticity and unit trace to 1e-12 and
/// eigenvalues >= -1e-12.
class TwoQubitState {
public:
    TwoQubitState(const Mat4c& matrix, double visibility);

    const Mat4c& matrix() const { return matrix_; }
    double visibility() const { return visibility_; }
    double purity() const;

private:
    Mat4c matrix_;
    double visibility_;
};

/// The partially coherent singlet: 1/2 on the two central diagonal entries,
/// -v/2 on the central off-diagonals, zeros elsewhere. v = 1 is the pure
/// singlet, v = 0 the fully dephased mixture.
TwoQubitState partially_coherent_singlet(double v);

/// Conjugates Bob's qubit by exp(-i phi Y/2); trace and spectrum preserved.
TwoQubitState apply_phase(const TwoQubitState& state, double phi);

/// The same resource in the laboratory frame, obtained by the fixed local
/// rotation pair (Hadamard on Alice, iY on Bob). At v = 1 this is the pure
/// state (|HD> + |VA>)/sqrt(2).
TwoQubitState to_lab_frame(const TwoQubitState& state);

/// Bob's subnormalized conditional state for one Alice outcome:
/// (<a| ⊗ I) rho (|a> ⊗ I), with trace p(a|K).
class ConditionalState {
public:
    ConditionalState(const Mat2c& matrix, int alice_outcome, PauliSetting alice_setting);

    const Mat2c& matrix() const { return matrix_; }
    int alice_outcome() const { return alice_outcome_; }
    PauliSetting alice_setting() const { return alice_setting_; }

    /// p(a|K); the trace of the subnormalized block.
    double probability() const;
    /// The normalized conditional state. Throws DegenerateError if the
    /// outcome has probability below 1e-15.
    Mat2c normalized() const;

private:
    Mat2c matrix_;
    int alice_outcome_;
    PauliSetting alice_setting_;
};

/// Both conditional states for one Alice setting. Construction checks
/// completeness: the traces sum to 1 within 1e-12.
class Assemblage {
public:
    Assemblage(PauliSetting alice_setting, ConditionalState plus, ConditionalState minus);

    PauliSetting alice_setting() const { return alice_setting_; }
    const ConditionalState& entry(int alice_outcome) const;

    /// Sum of the subnormalized entries; equals Bob's reduced state for any
    /// setting (no-signaling).
    Mat2c reduced_state() const;

private:
    PauliSetting alice_setting_;
    ConditionalState plus_;
    ConditionalState minus_;
};

/// Partial projections (<a| ⊗ I) rho (|a> ⊗ I) for both outcomes of the
/// given Alice setting.
Assemblage assemblage_for(const TwoQubitState& state, PauliSetting alice_setting);

/// Born-rule conditional probability Tr(|b><b| rho_a) / Tr(rho_a) for Bob's
/// outcome b of bob_setting given Alice outcome a. Sums to 1 over b = ±1.
/// Throws DegenerateError when Alice's outcome has probability < 1e-15.
double outcome_probability(const Assemblage& assemblage, int a, PauliSetting bob_setting, int b);

/// Mean of Y on Bob's normalized conditional state for Alice outcome a.
double conditional_y_mean(const Assemblage& y_assemblage, int a);

/// The outcome-weighted conditional variance of Y:
/// sum_a p(a) (1 - <Y>_a^2). Equals 1 - v^2 on the phase-rotated partially
/// coherent singlet.
double conditional_variance_y(const Assemblage& y_assemblage);

// --- phase-branch closed forms ---------------------------------------------
//
// Count labels follow the laboratory convention: Alice a in {H, V}, Bob
// b in {D, A, H, V}. The wiring into the singlet frame is fixed once:
//   - Alice's phase-branch setting is X; outcome +1 carries label H.
//   - Bob's D/A labels read out his Z basis (D = +1).
//   - Bob's H/V labels read out his X basis (H = +1).
// With that wiring every phase-branch probability takes the fringe form
// (1 + v cos(phi + Gamma_ab))/4 over the four Bob outcomes of one Alice
// sector (the 1/4 carries both the fringe normalization and the 50/50
// choice between Bob's two settings). The offsets Gamma_ab are frozen here
// and validated against direct Born-rule matrix computation in the tests.

enum class AliceLabel : int { H = 0, V = 1 };
enum class BobLabel : int { D = 0, A = 1, H = 2, V = 3 };

inline constexpr std::array<const char*, 2> kAliceLabelNames{"H", "V"};
inline constexpr std::array<const char*, 4> kBobLabelNames{"D", "A", "H", "V"};

/// Frozen fringe offset Gamma_ab in radians.
double phase_offset(BobLabel b, AliceLabel a);

/// (1 + v cos(phi + Gamma_ab))/4: Bob-outcome distribution within one Alice
/// sector, including the 50/50 setting weight. Sums to 1 over the four b.
double phase_branch_conditional(BobLabel b, AliceLabel a, double phi, double v);

/// Joint 8-outcome distribution of the phase branch, index 2*b + a in the
/// order n_DH, n_DV, n_AH, n_AV, n_HH, n_HV, n_VH, n_VV. Sums to 1.
std::array<double, 8> phase_branch_joint(double phi, double v);

/// Joint 4-outcome distribution of the generator branch (Alice Y ⊗ Bob Y),
/// index 2*b + a in the order m_LL, m_LR, m_RL, m_RR. Phase independent.
std::array<double, 4> generator_branch_joint(double v);

inline constexpr std::array<const char*, 8> kPhaseCountNames{
    "n_DH", "n_DV", "n_AH", "n_AV", "n_HH", "n_HV", "n_VH", "n_VV"};
inline constexpr std::array<const char*, 4> kGeneratorCountNames{"m_LL", "m_LR", "m_RL",
                                                                 "m_RR"};

} // namespace steerkit
