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
#include <span>

namespace steerkit {

/// SplitMix64 finalizer (Steele, Lea & Flood; Vigna's fixed-increment
/// variant). Used both as the generator step and as the stream-splitting
/// hash.
std::uint64_t mix64(std::uint64_t x);

/// Seedable 64-bit generator with a single word of state.
///
/// Every random quantity in the toolkit flows from one master seed through
/// `substream`, so runs are reproducible and parallel trials can own
/// decorrelated streams without coordination.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next_u64();

    /// Uniform in [0, 1) with 53 random mantissa bits.
    double next_double();

    /// Uniform in (0, 1]; safe as a log() argument.
    double next_double_open();

    /// Standard normal via Box-Muller; generates pairs and caches one.
    double next_normal();

    /// Poisson with the given mean. Knuth's product method below mean 256;
    /// larger means are split in half recursively (Poisson additivity), so
    /// the draw stays exact for any mean.
    std::uint64_t next_poisson(double mean);

private:
    std::uint64_t state_;
    bool has_cached_normal_ = false;
    double cached_normal_ = 0.0;
};

/// Stream-splitting rule: child_seed = mix64(seed ^ mix64(purpose) ^
/// mix64(~index)). Distinct (purpose, index) pairs give streams that are
/// decorrelated from each other and from the master stream.
SplitMix64 substream(std::uint64_t seed, std::uint64_t purpose, std::uint64_t index);

/// Stable purpose tags for `substream`.
namespace stream {
inline constexpr std::uint64_t kPhaseBranch = 1;
inline constexpr std::uint64_t kGeneratorBranch = 2;
inline constexpr std::uint64_t kBootstrap = 3;
inline constexpr std::uint64_t kTruthDraw = 4;
inline constexpr std::uint64_t kCalibration = 5;
} // namespace stream

/// Draws `n` events from the categorical distribution `probs` (which must
/// sum to 1 within 1e-9) and accumulates tallies into `counts`.
/// counts.size() must equal probs.size().
void multinomial(SplitMix64& rng, std::uint64_t n, std::span<const double> probs,
                 std::span<std::uint64_t> counts);

} // namespace steerkit
