// SPDX-License-Identifier: Apache-2.0
//
// mmblock: line-of-sight blockage analysis and simulation for mmWave networks
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef MMBLOCK_CSV_HPP
#define MMBLOCK_CSV_HPP

#include "mmblock/scenario.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>

namespace mmblock::io {

enum class Source { Analytic, Simulated };
enum class RowStatus { Ok, Undefined, Infeasible, Unavailable };

std::string_view to_string(Source s);
std::string_view to_string(RowStatus s);

// One metric for one scenario. Scenario columns are SI; a NaN parameter is written as an empty
// field (the planner's input density, for instance, is not an input).
struct ResultRow {
    ScenarioParams scenario;
    std::string metric;
    double value = 0.0;
    std::optional<double> std_error;
    std::optional<double> relative_error;
    Source source = Source::Analytic;
    RowStatus status = RowStatus::Ok;
};

inline constexpr std::string_view kCsvSchemaVersion = "v1";

// Leading comment line carrying provenance, then the fixed header.
struct CsvMetadata {
    std::string mode;
    std::uint64_t seed = 0;
    std::uint64_t iterations = 0;
    std::string estimator;
};

std::string_view csv_header();

// 10 significant digits in scientific form, '.' decimal point, no locale.
std::string format_scientific(double v);

void write_csv(std::ostream &out, const CsvMetadata &meta, std::span<const ResultRow> rows);

// Throws IoError carrying the path when the file cannot be written.
void write_csv_file(const std::filesystem::path &path, const CsvMetadata &meta, std::span<const ResultRow> rows);

} // namespace mmblock::io

#endif
