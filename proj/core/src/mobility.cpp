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

#include "mmblock/mobility.hpp"

#include "mmblock/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace mmblock::sim {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double wrap_angle(double a)
{
    a = std::fmod(a, kTwoPi);
    return a < 0.0 ? a + kTwoPi : a;
}

Vec2 polar(double r, double theta) { return {r * std::cos(theta), r * std::sin(theta)}; }

Vec2 sample_disc_point(double radius, Rng &rng)
{
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const double r = radius * std::sqrt(unit(rng));
    const double theta = kTwoPi * unit(rng);
    return polar(r, theta);
}

// Time until the moving point leaves [-w, w] along one axis, or infinity if it never does.
double time_to_wall(double pos, double vel, double w)
{
    if (vel > 0.0)
        return (w - pos) / vel;
    if (vel < 0.0)
        return (-w - pos) / vel;
    return kInf;
}

// Emits the reflected pieces of one waypoint leg and returns the end state.
void emit_reflected(std::size_t blocker, double t0, Vec2 &pos, Vec2 &dir, double duration, double speed, double w,
                    const LegSink &sink)
{
    double remaining = duration;
    double t = t0;
    // A reflected leg can only bounce a bounded number of times; the cap guards against
    // degenerate floating-point states at corners.
    for (int bounce = 0; remaining > 0.0 && bounce < 100000; ++bounce) {
        const double tx = time_to_wall(pos.x, speed * dir.x, w);
        const double ty = time_to_wall(pos.y, speed * dir.y, w);
        const double hit = std::max(0.0, std::min(tx, ty));
        if (hit >= remaining) {
            sink(blocker, Leg{t, pos, dir, remaining});
            pos = pos + (speed * remaining) * dir;
            break;
        }
        if (hit > 0.0)
            sink(blocker, Leg{t, pos, dir, hit});
        pos = pos + (speed * hit) * dir;
        pos.x = std::clamp(pos.x, -w, w);
        pos.y = std::clamp(pos.y, -w, w);
        if (tx <= hit)
            dir.x = -dir.x;
        if (ty <= hit)
            dir.y = -dir.y;
        t += hit;
        remaining -= hit;
    }
    pos.x = std::clamp(pos.x, -w, w);
    pos.y = std::clamp(pos.y, -w, w);
}

} // namespace

double norm(Vec2 v) { return std::hypot(v.x, v.y); }

void SimConfig::validate() const
{
    scenario.validate();
    if (!(box_half_width_m >= scenario.disc_radius_m))
        throw InvalidParameter("box_half_width_m must be at least disc_radius_m");
    if (!(leg_duration_max_s > 0.0))
        throw InvalidParameter("leg_duration_max_s must be positive");
    if (!(warmup_s >= 0.0) || !(horizon_s > warmup_s) || !std::isfinite(horizon_s))
        throw InvalidParameter("need horizon_s > warmup_s >= 0");
    if (iterations < 1)
        throw InvalidParameter("iterations must be at least 1");
}

std::size_t LinkSet::visible_count() const
{
    return static_cast<std::size_t>(std::count(visible_mask.begin(), visible_mask.end(), true));
}

std::vector<LinkSegment> LinkSet::visible_links() const
{
    std::vector<LinkSegment> links;
    for (std::size_t i = 0; i < bs_positions.size(); ++i) {
        if (!visible_mask[i])
            continue;
        const Vec2 bs = bs_positions[i];
        const double d = norm(bs);
        LinkSegment link;
        link.bs_position = bs;
        link.distance_m = d;
        link.effective_length_m = effective_lengths_m[i];
        link.tip = d > 0.0 ? (effective_lengths_m[i] / d) * bs : Vec2{};
        links.push_back(link);
    }
    return links;
}

LinkSegment make_link(const ScenarioParams &scenario, Vec2 bs_position)
{
    const double d = norm(bs_position);
    LinkSegment link;
    link.bs_position = bs_position;
    link.distance_m = d;
    link.effective_length_m = d * scenario.height_ratio();
    link.tip = d > 0.0 ? scenario.height_ratio() * bs_position : Vec2{};
    return link;
}

bool in_self_blockage_sector(Vec2 bs, double sector_center_rad, double omega)
{
    if (omega <= 0.0)
        return false;
    if (omega >= kTwoPi)
        return true;
    const double offset = wrap_angle(std::atan2(bs.y, bs.x) - sector_center_rad + 0.5 * omega);
    return offset < omega;
}

LinkSet sample_bs_deployment(const ScenarioParams &scenario, Rng &rng)
{
    scenario.validate();
    const double r = scenario.disc_radius_m;
    LinkSet set;
    std::poisson_distribution<long> count(scenario.bs_density_per_m2 * kPi * r * r);
    const long m = scenario.bs_density_per_m2 > 0.0 ? count(rng) : 0;
    set.sector_center_rad = std::uniform_real_distribution<double>(0.0, kTwoPi)(rng);
    for (long i = 0; i < m; ++i) {
        const Vec2 bs = sample_disc_point(r, rng);
        set.bs_positions.push_back(bs);
        set.visible_mask.push_back(!in_self_blockage_sector(bs, set.sector_center_rad, scenario.self_blockage_angle_rad));
        set.effective_lengths_m.push_back(norm(bs) * scenario.height_ratio());
    }
    return set;
}

LinkSet sample_visible_deployment(const ScenarioParams &scenario, unsigned n_visible, Rng &rng)
{
    scenario.validate();
    const double omega = scenario.self_blockage_angle_rad;
    if (n_visible > 0 && omega >= kTwoPi)
        throw InvalidParameter("no visible region when the self-blockage sector covers the disc");
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    LinkSet set;
    set.sector_center_rad = kTwoPi * unit(rng);
    for (unsigned i = 0; i < n_visible; ++i) {
        const double r = scenario.disc_radius_m * std::sqrt(unit(rng));
        const double bearing = set.sector_center_rad + 0.5 * omega + (kTwoPi - omega) * unit(rng);
        const Vec2 bs = polar(r, bearing);
        set.bs_positions.push_back(bs);
        set.visible_mask.push_back(true);
        set.effective_lengths_m.push_back(r * scenario.height_ratio());
    }
    return set;
}

void stream_blockers(const SimConfig &config, Rng &rng, const LegSink &sink)
{
    config.validate();
    const double w = config.box_half_width_m;
    const double area = 4.0 * w * w;
    const double speed = config.scenario.blocker_speed_mps;
    const double lambda = config.scenario.blocker_density_per_m2;
    if (lambda <= 0.0)
        return;

    std::poisson_distribution<long> count(lambda * area);
    std::uniform_real_distribution<double> coord(-w, w);
    std::uniform_real_distribution<double> heading(0.0, kTwoPi);
    std::uniform_real_distribution<double> leg_time(0.0, config.leg_duration_max_s);

    const long n = count(rng);
    for (long b = 0; b < n; ++b) {
        const auto id = static_cast<std::size_t>(b);
        Vec2 pos{coord(rng), coord(rng)};
        if (speed <= 0.0) {
            sink(id, Leg{0.0, pos, Vec2{1.0, 0.0}, config.horizon_s});
            continue;
        }
        double t = 0.0;
        while (t < config.horizon_s) {
            const double theta = heading(rng);
            Vec2 dir{std::cos(theta), std::sin(theta)};
            const double dur = std::min(leg_time(rng), config.horizon_s - t);
            emit_reflected(id, t, pos, dir, dur, speed, w, sink);
            t += dur;
        }
    }
}

std::vector<BlockerTrajectory> simulate_blockers(const SimConfig &config, Rng &rng)
{
    std::vector<BlockerTrajectory> out;
    const double speed = config.scenario.blocker_speed_mps;
    stream_blockers(config, rng, [&](std::size_t id, const Leg &leg) {
        if (id >= out.size())
            out.resize(id + 1, BlockerTrajectory{{}, speed});
        out[id].legs.push_back(leg);
    });
    return out;
}

std::optional<double> leg_crossing_time(const Leg &leg, double speed, const LinkSegment &link)
{
    if (speed <= 0.0 || leg.duration_s <= 0.0 || link.effective_length_m <= 0.0)
        return std::nullopt;
    // Solve start + s*direction = u*tip for s in [0, path length), u in [0, 1].
    const double denom = cross(leg.direction, link.tip);
    if (denom == 0.0)
        return std::nullopt;
    const double s = -cross(leg.start, link.tip) / denom;
    const double u = -cross(leg.start, leg.direction) / denom;
    const double path = speed * leg.duration_s;
    if (s < 0.0 || s >= path || u < 0.0 || u > 1.0)
        return std::nullopt;
    return leg.start_time_s + s / speed;
}

std::vector<double> detect_crossings(const LinkSegment &link, std::span<const BlockerTrajectory> trajectories)
{
    std::vector<double> times;
    for (const auto &traj : trajectories)
        for (const auto &leg : traj.legs)
            if (auto t = leg_crossing_time(leg, traj.speed_mps, link))
                times.push_back(*t);
    std::sort(times.begin(), times.end());
    return times;
}

std::vector<std::vector<double>> simulate_link_crossings(const SimConfig &config, std::span<const LinkSegment> links,
                                                         Rng &rng)
{
    std::vector<std::vector<double>> crossings(links.size());
    double reach = 0.0;
    for (const auto &link : links)
        reach = std::max(reach, link.effective_length_m);
    const double speed = config.scenario.blocker_speed_mps;

    stream_blockers(config, rng, [&](std::size_t, const Leg &leg) {
        if (links.empty())
            return;
        // Bounding-box rejection against the disc that holds every link segment.
        const Vec2 end = leg.position_at(leg.end_time_s(), speed);
        if (std::min(leg.start.x, end.x) > reach || std::max(leg.start.x, end.x) < -reach ||
            std::min(leg.start.y, end.y) > reach || std::max(leg.start.y, end.y) < -reach)
            return;
        for (std::size_t i = 0; i < links.size(); ++i)
            if (auto t = leg_crossing_time(leg, speed, links[i]))
                crossings[i].push_back(*t);
    });
    for (auto &c : crossings)
        std::sort(c.begin(), c.end());
    return crossings;
}

BlockageTimeline build_link_timeline(std::span<const double> crossings, double mu, Rng &rng, double window_start,
                                     double window_end)
{
    if (!(mu > 0.0))
        throw InvalidParameter("unblock rate must be positive");
    std::exponential_distribution<double> hold(mu);
    std::vector<double> durations(crossings.size());
    for (auto &d : durations)
        d = hold(rng);
    return build_link_timeline(crossings, durations, window_start, window_end);
}

BlockageTimeline build_link_timeline(std::span<const double> crossings, std::span<const double> durations,
                                     double window_start, double window_end)
{
    if (crossings.size() != durations.size())
        throw InvalidParameter("one duration per crossing required");
    std::vector<Interval> periods;
    periods.reserve(crossings.size());
    for (std::size_t i = 0; i < crossings.size(); ++i)
        periods.push_back({crossings[i], crossings[i] + durations[i]});
    return BlockageTimeline::from_intervals(window_start, window_end, std::move(periods));
}

} // namespace mmblock::sim
