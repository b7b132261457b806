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

#include "steerkit/stats.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "steerkit/errors.hpp"

namespace steerkit::stats {

namespace {

constexpr int kMaxIterations = 200000;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kTiny = std::numeric_limits<double>::min() / kEps;

// Series for P(a, x): P = x^a e^-x / Gamma(a+1) * sum_n x^n / ((a+1)...(a+n)).
// Converges fast for x < a + 1.
double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double term = sum;
    for (int i = 0; i < kMaxIterations; ++i) {
        ap += 1.0;
        term *= x / ap;
        sum += term;
        if (std::abs(term) < std::abs(sum) * kEps) {
            return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
        }
    }
    throw ConvergenceError("incomplete gamma series did not converge");
}

// Modified Lentz continued fraction for Q(a, x); preferred for x >= a + 1.
double gamma_q_continued_fraction(double a, double x) {
    double b = x + 1.0 - a;
    double c = 1.0 / kTiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i <= kMaxIterations; ++i) {
        const double an = -static_cast<double>(i) * (static_cast<double>(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < kTiny) d = kTiny;
        c = b + an / c;
        if (std::abs(c) < kTiny) c = kTiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::abs(delta - 1.0) < kEps) {
            return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
        }
    }
    throw ConvergenceError("incomplete gamma continued fraction did not converge");
}

// log of the gamma density x^(a-1) e^-x / Gamma(a); derivative of P(a, .).
double log_gamma_density(double a, double x) {
    return (a - 1.0) * std::log(x) - x - std::lgamma(a);
}

} // namespace

double lower_regularized_gamma(double a, double x) {
    if (!(a > 0.0) || !(x >= 0.0)) {
        throw ValidationError("lower_regularized_gamma requires a > 0 and x >= 0");
    }
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return gamma_p_series(a, x);
    return 1.0 - gamma_q_continued_fraction(a, x);
}

double upper_regularized_gamma(double a, double x) {
    if (!(a > 0.0) || !(x >= 0.0)) {
        throw ValidationError("upper_regularized_gamma requires a > 0 and x >= 0");
    }
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - gamma_p_series(a, x);
    return gamma_q_continued_fraction(a, x);
}

double chi_squared_cdf(double x, double dof) {
    if (!(dof > 0.0)) throw ValidationError("chi_squared_cdf requires dof > 0");
    if (x <= 0.0) return 0.0;
    return lower_regularized_gamma(dof / 2.0, x / 2.0);
}

double chi_squared_quantile(double p, double dof) {
    if (!(p > 0.0) || !(p < 1.0)) {
        throw ValidationError("chi_squared_quantile requires 0 < p < 1");
    }
    if (!(dof > 0.0)) throw ValidationError("chi_squared_quantile requires dof > 0");

    // Wilson-Hilferty: chi2 ~ dof * (1 - 2/(9 dof) + z sqrt(2/(9 dof)))^3.
    const double z = normal_quantile(p);
    const double c = 2.0 / (9.0 * dof);
    double cube = 1.0 - c + z * std::sqrt(c);
    double x = (cube > 0.0) ? dof * cube * cube * cube : dof * std::exp((z - 1.0));
    if (!(x > 0.0)) x = 0.5 * dof;

    double lo = 0.0;
    double hi = std::numeric_limits<double>::infinity();
    const double a = dof / 2.0;
    for (int i = 0; i < 128; ++i) {
        const double f = lower_regularized_gamma(a, x / 2.0) - p;
        if (f > 0.0) {
            hi = x;
        } else {
            lo = x;
        }
        if (std::abs(f) < 1e-14 * std::max(p, 1.0 - p) && i > 0) return x;
        // density of chi2 at x is half the gamma density at x/2
        const double logpdf = log_gamma_density(a, x / 2.0) - std::numbers::ln2;
        double step;
        if (logpdf > -700.0) {
            step = f / std::exp(logpdf);
        } else {
            step = std::numeric_limits<double>::infinity();
        }
        double next = x - step;
        if (!(next > lo) || !(next < hi) || !std::isfinite(next)) {
            next = std::isfinite(hi) ? 0.5 * (lo + hi) : 2.0 * x;
        }
        if (std::abs(next - x) <= 1e-14 * (1.0 + x)) {
            return next;
        }
        x = next;
    }
    // Newton stalled; finish with plain bisection on the bracket.
    if (std::isfinite(hi)) {
        for (int i = 0; i < 200; ++i) {
            const double mid = 0.5 * (lo + hi);
            if (lower_regularized_gamma(a, mid / 2.0) > p) {
                hi = mid;
            } else {
                lo = mid;
            }
            if (hi - lo <= 1e-13 * (1.0 + hi)) return 0.5 * (lo + hi);
        }
    }
    throw ConvergenceError("chi_squared_quantile did not converge");
}

double normal_quantile(double p) {
    if (!(p > 0.0) || !(p < 1.0)) {
        throw ValidationError("normal_quantile requires 0 < p < 1");
    }
    // Acklam's rational minimax approximation.
    static const double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    const double plow = 0.02425;
    double q, r;
    if (p < plow) {
        q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p > 1.0 - plow) {
        q = std::sqrt(-2.0 * std::log(1.0 - p));
        return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    q = p - 0.5;
    r = q * q;
    return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
           (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
}

} // namespace steerkit::stats
