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

#ifndef MMBLOCK_MOBILITY_HPP
#define MMBLOCK_MOBILITY_HPP

#include "mmblock/rng.hpp"
#include "mmblock/scenario.hpp"
#include "mmblock/timeline.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

namespace mmblock::sim {

struct Vec2 {
    double x = 0.0;
    double y = 0.0;

    bool operator==(const Vec2 &) const = default;
};

inline Vec2 operator+(Vec2 a, Vec2 b) { return {a.x + b.x, a.y + b.y}; }
inline Vec2 operator-(Vec2 a, Vec2 b) { return {a.x - b.x, a.y - b.y}; }
inline Vec2 operator*(double s, Vec2 v) { return {s * v.x, s * v.y}; }
inline double cross(Vec2 a, Vec2 b) { return a.x * b.y - a.y * b.x; }
double norm(Vec2 v);

struct SimConfig {
    ScenarioParams scenario;
    double box_half_width_m = 100.0;  // blockers live in [-w, w]^2
    double leg_duration_max_s = 60.0; // waypoint legs last Unif[0, max]
    double horizon_s = 3600.0;
    double warmup_s = 60.0;           // metrics ignore [0, warmup)
    std::uint64_t iterations = 500;
    std::uint64_t base_seed = 1;

    void validate() const;
};

// One straight piece of a blocker path. Reflections split a waypoint leg into several of these.
struct Leg {
    double start_time_s = 0.0;
    Vec2 start;
    Vec2 direction; // unit vector
    double duration_s = 0.0;

    double end_time_s() const { return start_time_s + duration_s; }
    Vec2 position_at(double t, double speed) const { return start + (speed * (t - start_time_s)) * direction; }
};

struct BlockerTrajectory {
    std::vector<Leg> legs;
    double speed_mps = 0.0;
};

// The obstructable part of one BS-UE link: the ground segment from the UE towards the BS,
// shortened to the effective length. Blockers are only tall enough to cut the ray there.
struct LinkSegment {
    Vec2 bs_position;
    Vec2 tip;
    double distance_m = 0.0;
    double effective_length_m = 0.0;
};

struct LinkSet {
    Vec2 ue_position; // always the origin
    std::vector<Vec2> bs_positions;
    std::vector<bool> visible_mask;
    std::vector<double> effective_lengths_m;
    double sector_center_rad = 0.0; // orientation of the self-blockage sector

    std::size_t visible_count() const;
    std::vector<LinkSegment> visible_links() const;
};

LinkSegment make_link(const ScenarioParams &scenario, Vec2 bs_position);

// True when the bearing of `bs` falls inside the self-blockage sector of width omega centred
// on `sector_center_rad`.
bool in_self_blockage_sector(Vec2 bs, double sector_center_rad, double omega);

// Poisson number of BSs uniform on the disc, then a uniformly oriented self-blockage sector.
LinkSet sample_bs_deployment(const ScenarioParams &scenario, Rng &rng);

// Exactly `n_visible` BSs, uniform over the disc minus a uniformly oriented sector.
LinkSet sample_visible_deployment(const ScenarioParams &scenario, unsigned n_visible, Rng &rng);

// Streams every leg of every blocker to `sink`, blocker by blocker. Count ~ Poisson(lambda_B *
// box area), initial positions uniform in the box, waypoint directions uniform on [0, 2 pi),
// specular reflection at the walls. `sink` receives (blocker index, leg).
using LegSink = std::function<void(std::size_t, const Leg &)>;
void stream_blockers(const SimConfig &config, Rng &rng, const LegSink &sink);

std::vector<BlockerTrajectory> simulate_blockers(const SimConfig &config, Rng &rng);

// Time at which a leg crosses the link segment, if it does. Parallel motion never crosses.
std::optional<double> leg_crossing_time(const Leg &leg, double speed, const LinkSegment &link);

std::vector<double> detect_crossings(const LinkSegment &link, std::span<const BlockerTrajectory> trajectories);

// Generates blockers and records crossings for every link without keeping the trajectories.
// Result[i] holds the sorted crossing times of links[i].
std::vector<std::vector<double>> simulate_link_crossings(const SimConfig &config, std::span<const LinkSegment> links,
                                                         Rng &rng);

// Each crossing starts a blocked period of Exp(mu) length; overlapping periods are merged.
BlockageTimeline build_link_timeline(std::span<const double> crossings, double mu, Rng &rng, double window_start,
                                     double window_end);

// Same with caller-supplied period lengths.
BlockageTimeline build_link_timeline(std::span<const double> crossings, std::span<const double> durations,
                                     double window_start, double window_end);

} // namespace mmblock::sim

#endif
