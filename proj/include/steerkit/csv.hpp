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
#include <fstream>
#include <string>
#include <vector>

namespace steerkit {

/// CSV emitter with the house header: a versioned schema comment line and a
/// comment carrying the resolved run configuration, so every file is
/// self-describing and auditable.
class CsvWriter {
public:
    /// Opens `path`, writes "# schema: <schema>" and "# config: <json>".
    CsvWriter(const std::string& path, const std::string& schema, const std::string& config_json);

    void header(const std::vector<std::string>& columns);
    CsvWriter& field(double value);
    CsvWriter& field(std::uint64_t value);
    CsvWriter& field(const std::string& value);
    void end_row();

private:
    std::ofstream out_;
    bool row_started_ = false;

    void separator();
};

/// %.17g rendering used everywhere a double reaches a file; round-trips
/// exactly and keeps reruns byte-identical.
std::string format_double(double value);

} // namespace steerkit
