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

#include <functional>
#include <vector>

#include "steerkit/qubit_model.hpp"

namespace steerkit {

/// Symmetric 2x2 information matrix over the parameter pair (phi, v).
/// Also used as the container for its own inverse.
struct FisherMatrix {
    double phi_phi = 0.0;
    double phi_v = 0.0;
    double v_v = 0.0;

    double det() const { return phi_phi * v_v - phi_v * phi_v; }
    bool is_psd(double tol = 1e-10) const;

    /// Closed-form inverse; throws SingularMatrixError when the condition
    /// number exceeds 1e12.
    FisherMatrix inverse() const;
};

/// Result of reducing a 2x2 information matrix to the effective scalar
/// information on the phase: value = F_pp - F_pv^2 / F_vv.
struct EffectiveInfo {
    double value = 0.0;
    double schur_penalty = 0.0;
};

/// Outcome distribution as a function of the phase, at fixed nuisance.
using ProbabilityModel1D = std::function<std::vector<double>(double)>;
/// Outcome distribution as a function of (phase, visibility).
using ProbabilityModel2D = std::function<std::vector<double>(double, double)>;

inline constexpr double kDefaultFdStep = 1e-5;

/// Scalar Fisher information sum_r (d_phi p_r)^2 / p_r by central finite
/// differences. Outcomes with p_r < 1e-12 contribute 0; any probability
/// below -1e-9 raises ValidationError.
double fisher_scalar(const ProbabilityModel1D& model, double phi, double step = kDefaultFdStep);

/// 2x2 Fisher information matrix by central finite differences in both
/// parameters, same probability guards as fisher_scalar.
FisherMatrix fisher_matrix_fd(const ProbabilityModel2D& model, double phi, double v,
                              double step = kDefaultFdStep);

/// Closed-form conditional Fisher information of the phase branch read out
/// in Bob's Z basis: v^2 cos^2(phi) / (1 - v^2 sin^2(phi)). Maximal (= v^2)
/// at phi = m pi. Throws SingularityError within 1e-9 of the v = 1 poles.
double conditional_fisher(double phi, double v);

/// Closed-form conditional Fisher information matrix of the full phase
/// branch (Bob alternating X and Z with equal weights). Valid for
/// v <= 1 - 1e-9; beyond that the denominators vanish and SingularityError
/// is thrown.
FisherMatrix conditional_fisher_matrix(double phi, double v);

/// Fisher matrix of the Bob-outcome distribution within one Alice sector,
/// from the frozen fringe offsets. Equals conditional_fisher_matrix for
/// either sector of this model.
FisherMatrix per_outcome_fisher_matrix(AliceLabel a, double phi, double v);

/// Schur reduction 1/(F^-1)_pp = F_pp - F_pv^2/F_vv. Throws DegenerateError
/// when F_vv <= 1e-15 with a nonzero off-diagonal.
EffectiveInfo effective_phase_info(const FisherMatrix& fisher);

/// R = Finv_pv / sqrt(Finv_pp * Finv_vv) for an inverse information matrix.
/// Throws DegenerateError on a nonpositive diagonal.
double correlation_coefficient(const FisherMatrix& inverse_fisher);

/// 4-outcome joint distribution (Alice sector x Bob Z readout) at fixed v;
/// the single-parameter phase model behind `conditional_fisher`.
ProbabilityModel1D single_parameter_phase_model(double v);

/// 8-outcome joint distribution of the full phase branch as a function of
/// (phi, v); the model behind `conditional_fisher_matrix`.
ProbabilityModel2D phase_branch_model();

} // namespace steerkit
