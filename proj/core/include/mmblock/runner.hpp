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

#ifndef MMBLOCK_RUNNER_HPP
#define MMBLOCK_RUNNER_HPP

#include "mmblock/config.hpp"
#include "mmblock/csv.hpp"

#include <filesystem>
#include <iosfwd>
#include <vector>

namespace mmblock::io {

struct RunSummary {
    std::vector<std::filesystem::path> files;
    std::size_t rows = 0;
    std::size_t infeasible_rows = 0;
    std::size_t undefined_rows = 0;
    std::size_t unavailable_rows = 0;
};

// Per-mode row builders. `threads` follows sim::resolve_thread_count.
std::vector<ResultRow> analytic_probability_rows(const ScenarioParams &s);
std::vector<ResultRow> analytic_frequency_rows(const ScenarioParams &s);
std::vector<ResultRow> analytic_duration_rows(const ScenarioParams &s);
std::vector<ResultRow> simulate_rows(const ExperimentSpec &spec, const ScenarioParams &s, std::uint64_t base_seed,
                                     unsigned threads);
std::vector<ResultRow> compare_rows(const ExperimentSpec &spec, const ScenarioParams &s, std::uint64_t base_seed,
                                    unsigned threads);
ResultRow plan_row(const ExperimentSpec &spec, const ScenarioParams &s);

// Seed of grid point `index`; the first point uses the spec seed unchanged.
std::uint64_t scenario_seed(std::uint64_t seed, std::size_t index);

// Executes the spec, writes its CSV file(s), and prints a short summary to `log`.
//
// analytic-sweep: <output>_probability.csv, <output>_frequency.csv, <output>_duration.csv
// simulate, plan, compare: <output>.csv
//
// Per-row problems (zero coverage, infeasible targets) are flagged in the status column.
// Throws IoError when a file cannot be written.
RunSummary run(const ExperimentSpec &spec, std::ostream &log, unsigned threads = 0);

} // namespace mmblock::io

#endif
