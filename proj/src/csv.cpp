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

#include "steerkit/csv.hpp"

#include <cstdio>

#include "steerkit/errors.hpp"

namespace steerkit {

std::string format_double(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", value);
    return buffer;
}

CsvWriter::CsvWriter(const std::string& path, const std::string& schema,
                     const std::string& config_json) {
    out_.open(path, std::ios::binary | std::ios::trunc);
    if (!out_) throw ValidationError("cannot open output file: " + path);
    out_ << "# schema: " << schema << "\n";
    out_ << "# config: " << config_json << "\n";
}

void CsvWriter::header(const std::vector<std::string>& columns) {
    for (std::size_t i = 0; i < columns.size(); ++i) {
        if (i > 0) out_ << ",";
        out_ << columns[i];
    }
    out_ << "\n";
}

void CsvWriter::separator() {
    if (row_started_) out_ << ",";
    row_started_ = true;
}

CsvWriter& CsvWriter::field(double value) {
    separator();
    out_ << format_double(value);
    return *this;
}

CsvWriter& CsvWriter::field(std::uint64_t value) {
    separator();
    out_ << value;
    return *this;
}

CsvWriter& CsvWriter::field(const std::string& value) {
    separator();
    out_ << value;
    return *this;
}

void CsvWriter::end_row() {
    out_ << "\n";
    row_started_ = false;
}

} // namespace steerkit
