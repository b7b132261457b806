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
#include <iosfwd>

#include "steerkit/information.hpp"
#include "steerkit/priors.hpp"
#include "steerkit/simulator.hpp"

namespace steerkit {

/// Van Trees information matrix over (phi, v): the prior-averaged Fisher
/// matrix plus the prior score matrix scaled by 1/n.
struct VanTreesMatrix {
    double phi_phi = 0.0;
    double phi_v = 0.0;
    double v_v = 0.0;
    std::uint64_t n = 0;

    FisherMatrix as_fisher() const { return FisherMatrix{phi_phi, phi_v, v_v}; }
    FisherMatrix inverse() const { return as_fisher().inverse(); }
};

/// The two-term limit L = Delta^2 Y_cond + (1/N_Z) * phase score.
struct YfgLimit {
    double value = 0.0;
    double generator_term = 0.0;
    double score_term = 0.0;
};

enum class BoundMode { Single, Multi };

/// Caches the two prior integrals (averaged conditional Fisher matrix and
/// prior score matrix) on one grid, so Van Trees matrices for whole N
/// sweeps cost a 2x2 addition each. Construction runs the grid-doubling
/// convergence gate on every entry.
class VanTreesAssembler {
public:
    explicit VanTreesAssembler(const JointPrior& prior, int panels = kDefaultGridPanels);

    VanTreesMatrix matrix_for(std::uint64_t n) const;

    /// Per-outcome Van Trees matrices combined with relative-occurrence
    /// weights; each sector's score term uses that sector's event count.
    /// A sector with zero events contributes nothing (0 * inf := 0) and is
    /// reported on `warnings` when given.
    VanTreesMatrix conditional_matrix(const CountRecord& record,
                                      std::ostream* warnings = nullptr) const;

    const FisherMatrix& prior_averaged_fim() const { return averaged_fim_; }
    const FisherMatrix& score_matrix() const { return score_; }

private:
    FisherMatrix averaged_fim_;  // equals the per-sector average for this model
    FisherMatrix score_;
};

/// Convenience wrapper: assemble the Van Trees matrix for one n.
VanTreesMatrix van_trees_matrix(const JointPrior& prior, std::uint64_t n,
                                int panels = kDefaultGridPanels);

/// Var[phi] >= (V^-1)_pp / n.
double van_trees_phase_bound(const VanTreesMatrix& matrix, std::uint64_t n);

/// Van Trees matrix built from per-Alice-outcome blocks of an observed
/// record (see VanTreesAssembler::conditional_matrix).
VanTreesMatrix conditional_van_trees(const CountRecord& record, const JointPrior& prior,
                                     int panels = kDefaultGridPanels,
                                     std::ostream* warnings = nullptr);

/// L = delta2_y_cond + phase_score_integral(prior, n_z).
YfgLimit yfg_limit(double delta2_y_cond, const JointPrior& prior, std::uint64_t n_z,
                   int panels = kDefaultGridPanels);

/// Visibility above which the conditional Fisher information exceeds the
/// conditional generator variance: the root of f(v) = 1 - v^2 with
/// f = v^2 (single) or f = v^2/(2 - v^2) (multi), found by bisection to
/// 1e-9. Roots are 1/sqrt(2) and sqrt(2 - sqrt(2)).
double violation_threshold(BoundMode mode);

struct VtYfgCheck {
    double lhs = 0.0;
    bool violated = false;
};

/// Pre-data theory check (V^-1)_pp * L >= 1; violated when the product
/// drops below 1.
VtYfgCheck vt_yfg_check(const VanTreesMatrix& matrix, const YfgLimit& limit);

/// Int P_v(v) (1 - v^2) dv: the model generator variance averaged over the
/// visibility prior, used for pre-data sweeps.
double prior_averaged_generator_variance(const VisibilityPrior& prior,
                                         int panels = kDefaultGridPanels);

/// Single-parameter scalar Van Trees information at fixed visibility:
/// Int P_phi f(phi|v) dphi + (1/n) Int (P_phi')^2/P_phi dphi.
double scalar_van_trees_info(const PhasePrior& prior, double v, std::uint64_t n,
                             int panels = kDefaultGridPanels);

} // namespace steerkit
