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

#include "steerkit/rng.hpp"

#include <cmath>
#include <numbers>

#include "steerkit/errors.hpp"

namespace steerkit {

std::uint64_t mix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

std::uint64_t SplitMix64::next_u64() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double SplitMix64::next_double() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

double SplitMix64::next_double_open() {
    return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double SplitMix64::next_normal() {
    if (has_cached_normal_) {
        has_cached_normal_ = false;
        return cached_normal_;
    }
    const double r = std::sqrt(-2.0 * std::log(next_double_open()));
    const double t = 2.0 * std::numbers::pi * next_double();
    cached_normal_ = r * std::sin(t);
    has_cached_normal_ = true;
    return r * std::cos(t);
}

std::uint64_t SplitMix64::next_poisson(double mean) {
    if (!(mean >= 0.0) || !std::isfinite(mean)) {
        throw ValidationError("poisson mean must be finite and nonnegative");
    }
    if (mean == 0.0) return 0;
    if (mean > 256.0) {
        const double half = mean / 2.0;
        return next_poisson(half) + next_poisson(mean - half);
    }
    const double limit = std::exp(-mean);
    std::uint64_t k = 0;
    double prod = next_double_open();
    while (prod > limit) {
        ++k;
        prod *= next_double_open();
    }
    return k;
}

SplitMix64 substream(std::uint64_t seed, std::uint64_t purpose, std::uint64_t index) {
    return SplitMix64(mix64(seed ^ mix64(purpose) ^ mix64(~index)));
}

void multinomial(SplitMix64& rng, std::uint64_t n, std::span<const double> probs,
                 std::span<std::uint64_t> counts) {
    if (probs.size() != counts.size() || probs.empty()) {
        throw ValidationError("multinomial: probs and counts must have equal nonzero size");
    }
    double total = 0.0;
    for (double p : probs) {
        if (!(p >= 0.0)) throw ValidationError("multinomial: negative probability");
        total += p;
    }
    if (std::abs(total - 1.0) > 1e-9) {
        throw ValidationError("multinomial: probabilities must sum to 1");
    }
    for (std::uint64_t i = 0; i < n; ++i) {
        double u = rng.next_double() * total;
        std::size_t cell = probs.size() - 1; // final cell absorbs rounding
        for (std::size_t j = 0; j + 1 < probs.size(); ++j) {
            if (u < probs[j]) {
                cell = j;
                break;
            }
            u -= probs[j];
        }
        ++counts[cell];
    }
}

} // namespace steerkit
