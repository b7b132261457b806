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

#include <cstdio>
#include <filesystem>
#include <iostream>

#include "steerkit/acceptance.hpp"

namespace fs = std::filesystem;

TEST_CASE("verification suite passes end to end") {
    const fs::path dir = fs::temp_directory_path() / "steerkit_acceptance";
    fs::remove_all(dir);
    const std::vector<steerkit::CriterionResult> results =
        steerkit::run_acceptance(dir, 1, std::cout);
    steerkit::write_acceptance_report(dir, results, 1);
    REQUIRE(results.size() == 10);
    for (const steerkit::CriterionResult& result : results) {
        std::printf("%s %s (%.1f s) %s\n", result.id.c_str(),
                    result.pass ? "PASS" : "FAIL", result.seconds, result.detail.c_str());
        CHECK_MESSAGE(result.pass, result.id, ": ", result.detail);
    }
    CHECK(fs::exists(dir / "acceptance_report.txt"));
    CHECK(fs::exists(dir / "acceptance_report.json"));
}
