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

namespace steerkit::stats {

/// Regularized lower incomplete gamma function P(a, x) = gamma(a, x) / Gamma(a).
///
/// Series expansion for x < a + 1, Lentz continued fraction for the
/// complement otherwise; both carried in log space through lgamma. Relative
/// accuracy is near machine precision for a up to ~1e8.
double lower_regularized_gamma(double a, double x);

/// Q(a, x) = 1 - P(a, x), computed directly so the upper tail keeps
/// relative accuracy.
double upper_regularized_gamma(double a, double x);

/// CDF of the chi-squared distribution with `dof` degrees of freedom:
/// P(dof/2, x/2).
double chi_squared_cdf(double x, double dof);

/// Lower-tail quantile of the chi-squared distribution: the x with
/// chi_squared_cdf(x, dof) = p. Wilson-Hilferty starting point refined by
/// Newton steps on the regularized incomplete gamma, safeguarded by
/// bisection on a maintained bracket. Throws ConvergenceError if the
/// residual does not shrink below 1e-12.
double chi_squared_quantile(double p, double dof);

/// Standard normal quantile (Acklam's rational approximation, |error| <
/// 1.2e-9). Used for starting points and synthetic draws, not as a
/// precision result.
double normal_quantile(double p);

} // namespace steerkit::stats
