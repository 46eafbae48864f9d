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

#ifndef MMBLOCK_CONFIG_HPP
#define MMBLOCK_CONFIG_HPP

#include "mmblock/planner.hpp"
#include "mmblock/scenario.hpp"

#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace mmblock::io {

enum class Mode { AnalyticSweep, Simulate, Plan, Compare };
enum class Estimator { Plain, Stratified };

std::string_view to_string(Mode m);
std::string_view to_string(Estimator e);
std::optional<Mode> parse_mode(std::string_view text);

// Scenario values in the units users type: BS density per km^2, self-blockage in degrees,
// everything else SI. Each key holds one value or a strictly increasing grid; the experiment
// runs the Cartesian product of all grids.
struct ScenarioGrid {
    std::vector<double> radius_m{100.0};
    std::vector<double> bs_density_per_km2{200.0};
    std::vector<double> blocker_density_per_m2{0.01};
    std::vector<double> blocker_speed_mps{1.0};
    std::vector<double> blocker_height_m{1.8};
    std::vector<double> ue_height_m{1.4};
    std::vector<double> bs_height_m{5.0};
    std::vector<double> unblock_rate_per_s{2.0};
    std::vector<double> self_blockage_deg{60.0};

    // All grid points, SI units, in a fixed nesting order (radius outermost, angle innermost).
    std::vector<ScenarioParams> expand() const;

    bool operator==(const ScenarioGrid &) const = default;
};

struct ExperimentSpec {
    Mode mode = Mode::AnalyticSweep;
    ScenarioGrid grid;
    std::string output = "mmblock_results";

    // Simulation.
    std::uint64_t seed = 1;
    std::uint64_t iterations = 500;
    double horizon_s = 3600.0;
    double warmup_s = 60.0;
    double box_half_width_m = 100.0;
    double leg_duration_max_s = 60.0;
    Estimator estimator = Estimator::Plain;

    // Planning.
    double target_blockage_prob = 1e-5;
    planner::Conditioning conditioning = planner::Conditioning::Marginal;

    bool operator==(const ExperimentSpec &) const = default;
};

// Iteration count and horizon of the full-scale reference experiment.
inline constexpr std::uint64_t kPaperScaleIterations = 10000;
inline constexpr double kPaperScaleHorizon = 3600.0;

// Parses flat `key = value` text ('#' starts a comment), then applies `overrides` (each
// "key=value"), then forces `mode` when given. Later entries win. List values are comma
// separated; "lo:hi:count" expands to `count` evenly spaced values.
//
// Throws ConfigError naming the key for unknown keys, malformed numbers, unit violations,
// non-increasing grids, or a missing mode.
ExperimentSpec parse_config(std::string_view text, std::span<const std::string> overrides = {},
                            std::optional<Mode> mode = std::nullopt);

// Reads the file first; IoError if it cannot be read.
ExperimentSpec load_config(const std::filesystem::path &path, std::span<const std::string> overrides = {},
                           std::optional<Mode> mode = std::nullopt);

// Canonical text form; parse_config(render_config(s)) == s.
std::string render_config(const ExperimentSpec &spec);

// Shortest decimal text that reads back to the same double, independent of locale.
std::string format_number(double v);

} // namespace mmblock::io

#endif
