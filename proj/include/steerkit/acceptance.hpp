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
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace steerkit {

struct CriterionResult {
    std::string id;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/// Runs the ten-point verification suite with pinned seeds.
///
/// Criteria 1-9 execute once into out_dir/run, writing one artifact file
/// per criterion; the determinism criterion then executes the same pipeline
/// into out_dir/rerun and byte-compares the two trees. Every tolerance is
/// fixed in this translation unit.
std::vector<CriterionResult> run_acceptance(const std::filesystem::path& out_dir,
                                            std::uint64_t seed, std::ostream& log);

/// Writes acceptance_report.txt and acceptance_report.json under out_dir.
void write_acceptance_report(const std::filesystem::path& out_dir,
                             const std::vector<CriterionResult>& results, std::uint64_t seed);

} // namespace steerkit
