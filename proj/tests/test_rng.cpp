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

#include <array>
#include <cmath>
#include <vector>

#include "steerkit/errors.hpp"
#include "steerkit/rng.hpp"

using namespace steerkit;

TEST_CASE("identical seeds replay identical sequences") {
    SplitMix64 a(42);
    SplitMix64 b(42);
    for (int i = 0; i < 1000; ++i) {
        CHECK(a.next_u64() == b.next_u64());
    }
}

TEST_CASE("substreams with distinct purposes diverge") {
    SplitMix64 a = substream(7, stream::kPhaseBranch, 0);
    SplitMix64 b = substream(7, stream::kGeneratorBranch, 0);
    SplitMix64 c = substream(7, stream::kPhaseBranch, 1);
    CHECK(a.next_u64() != b.next_u64());
    CHECK(a.next_u64() != c.next_u64());
}

TEST_CASE("uniform moments") {
    SplitMix64 rng(123);
    const int n = 200000;
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        const double u = rng.next_double();
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        sum += u;
    }
    const double mean = sum / n;
    const double se = 1.0 / std::sqrt(12.0 * n);
    CHECK(std::abs(mean - 0.5) < 4.0 * se);
}

TEST_CASE("normal moments") {
    SplitMix64 rng(99);
    const int n = 200000;
    double sum = 0.0;
    double sum2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double z = rng.next_normal();
        sum += z;
        sum2 += z * z;
    }
    const double mean = sum / n;
    const double var = sum2 / n - mean * mean;
    CHECK(std::abs(mean) < 4.0 / std::sqrt(static_cast<double>(n)));
    CHECK(std::abs(var - 1.0) < 4.0 * std::sqrt(2.0 / n));
}

TEST_CASE("poisson mean and variance") {
    SplitMix64 rng(2024);
    for (double mean : {0.7, 37.0, 950.0}) {
        const int n = 20000;
        double sum = 0.0;
        double sum2 = 0.0;
        for (int i = 0; i < n; ++i) {
            const double k = static_cast<double>(rng.next_poisson(mean));
            sum += k;
            sum2 += k * k;
        }
        const double sample_mean = sum / n;
        const double sample_var = sum2 / n - sample_mean * sample_mean;
        const double se_mean = std::sqrt(mean / n);
        CHECK(std::abs(sample_mean - mean) < 4.0 * se_mean);
        // Var[(k - mean)^2] ~ 2 mean^2 + mean for Poisson
        const double se_var = std::sqrt((2.0 * mean * mean + mean) / n);
        CHECK(std::abs(sample_var - mean) < 4.0 * se_var);
    }
}

TEST_CASE("poisson of zero mean is zero") {
    SplitMix64 rng(5);
    for (int i = 0; i < 100; ++i) {
        CHECK(rng.next_poisson(0.0) == 0);
    }
    CHECK_THROWS_AS(rng.next_poisson(-1.0), ValidationError);
}

TEST_CASE("multinomial totals and frequencies") {
    SplitMix64 rng(31);
    const std::array<double, 4> probs{0.1, 0.2, 0.3, 0.4};
    std::array<std::uint64_t, 4> counts{};
    const std::uint64_t n = 400000;
    multinomial(rng, n, probs, counts);
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < counts.size(); ++i) {
        total += counts[i];
        const double freq = static_cast<double>(counts[i]) / static_cast<double>(n);
        const double se = std::sqrt(probs[i] * (1.0 - probs[i]) / static_cast<double>(n));
        CHECK(std::abs(freq - probs[i]) < 4.0 * se);
    }
    CHECK(total == n);
}

TEST_CASE("multinomial validates inputs") {
    SplitMix64 rng(1);
    std::array<std::uint64_t, 2> counts{};
    const std::array<double, 2> bad_sum{0.2, 0.2};
    CHECK_THROWS_AS(multinomial(rng, 10, bad_sum, counts), ValidationError);
    const std::array<double, 2> negative{1.2, -0.2};
    CHECK_THROWS_AS(multinomial(rng, 10, negative, counts), ValidationError);
}
