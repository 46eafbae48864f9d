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

#include "mmblock/config.hpp"

#include "mmblock/errors.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace mmblock::io {

namespace {

std::string_view trim(std::string_view s)
{
    const auto ws = " \t\r\n";
    const auto b = s.find_first_not_of(ws);
    if (b == std::string_view::npos)
        return {};
    const auto e = s.find_last_not_of(ws);
    return s.substr(b, e - b + 1);
}

double parse_double(const std::string &key, std::string_view text)
{
    text = trim(text);
    double v = 0.0;
    const auto *first = text.data();
    const auto *last = text.data() + text.size();
    if (!text.empty() && *first == '+')
        ++first;
    const auto [ptr, ec] = std::from_chars(first, last, v);
    if (text.empty() || ec != std::errc{} || ptr != last || !std::isfinite(v))
        throw ConfigError(key, "expected a number, got '" + std::string(text) + "'");
    return v;
}

std::uint64_t parse_count(const std::string &key, std::string_view text)
{
    text = trim(text);
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
        throw ConfigError(key, "expected a non-negative integer, got '" + std::string(text) + "'");
    return v;
}

bool parse_bool(const std::string &key, std::string_view text)
{
    text = trim(text);
    if (text == "true" || text == "1" || text == "yes" || text == "on")
        return true;
    if (text == "false" || text == "0" || text == "no" || text == "off")
        return false;
    throw ConfigError(key, "expected true or false, got '" + std::string(text) + "'");
}

std::vector<double> parse_list(const std::string &key, std::string_view text)
{
    std::vector<double> out;
    text = trim(text);
    if (text.empty())
        throw ConfigError(key, "empty value");

    if (text.find(':') != std::string_view::npos) {
        std::vector<std::string_view> parts;
        std::size_t pos = 0;
        while (true) {
            const auto colon = text.find(':', pos);
            parts.push_back(text.substr(pos, colon - pos));
            if (colon == std::string_view::npos)
                break;
            pos = colon + 1;
        }
        if (parts.size() != 3)
            throw ConfigError(key, "range must be lo:hi:count");
        const double lo = parse_double(key, parts[0]);
        const double hi = parse_double(key, parts[1]);
        const std::uint64_t count = parse_count(key, parts[2]);
        if (count == 0)
            throw ConfigError(key, "range needs at least one point");
        if (count == 1) {
            out.push_back(lo);
        } else {
            for (std::uint64_t i = 0; i < count; ++i)
                out.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(count - 1));
            out.back() = hi;
        }
    } else {
        std::size_t pos = 0;
        while (true) {
            const auto comma = text.find(',', pos);
            out.push_back(parse_double(key, text.substr(pos, comma - pos)));
            if (comma == std::string_view::npos)
                break;
            pos = comma + 1;
        }
    }
    for (std::size_t i = 1; i < out.size(); ++i)
        if (!(out[i] > out[i - 1]))
            throw ConfigError(key, "grid values must be strictly increasing");
    return out;
}

void require_all(const std::string &key, const std::vector<double> &values, bool (*ok)(double), const char *what)
{
    for (double v : values)
        if (!ok(v))
            throw ConfigError(key, what);
}

struct GridKey {
    std::vector<double> ScenarioGrid::*member;
    bool (*ok)(double);
    const char *constraint;
};

const std::map<std::string, GridKey, std::less<>> &grid_keys()
{
    static const std::map<std::string, GridKey, std::less<>> keys = {
        {"radius_m", {&ScenarioGrid::radius_m, [](double v) { return v > 0.0; }, "must be positive"}},
        {"bs_density_per_km2",
         {&ScenarioGrid::bs_density_per_km2, [](double v) { return v >= 0.0; }, "must be non-negative"}},
        {"blocker_density_per_m2",
         {&ScenarioGrid::blocker_density_per_m2, [](double v) { return v >= 0.0; }, "must be non-negative"}},
        {"blocker_speed_mps",
         {&ScenarioGrid::blocker_speed_mps, [](double v) { return v >= 0.0; }, "must be non-negative"}},
        {"blocker_height_m", {&ScenarioGrid::blocker_height_m, [](double v) { return v >= 0.0; }, "must be non-negative"}},
        {"ue_height_m", {&ScenarioGrid::ue_height_m, [](double v) { return v >= 0.0; }, "must be non-negative"}},
        {"bs_height_m", {&ScenarioGrid::bs_height_m, [](double v) { return v >= 0.0; }, "must be non-negative"}},
        {"unblock_rate_per_s", {&ScenarioGrid::unblock_rate_per_s, [](double v) { return v > 0.0; }, "must be positive"}},
        {"self_blockage_deg",
         {&ScenarioGrid::self_blockage_deg, [](double v) { return v >= 0.0 && v <= 360.0; },
          "must lie in [0, 360] degrees"}},
    };
    return keys;
}

// Canonical key order for rendering, matching ScenarioGrid::expand nesting.
constexpr const char *kGridOrder[] = {"radius_m",         "bs_density_per_km2", "blocker_density_per_m2",
                                      "blocker_speed_mps", "blocker_height_m",   "ue_height_m",
                                      "bs_height_m",       "unblock_rate_per_s", "self_blockage_deg"};

std::vector<double> sorted_increasing(const std::string &key, std::vector<double> v)
{
    std::sort(v.begin(), v.end());
    for (std::size_t i = 1; i < v.size(); ++i)
        if (!(v[i] > v[i - 1]))
            throw ConfigError(key, "grid values must be distinct");
    return v;
}

void apply(ExperimentSpec &spec, bool &mode_seen, const std::string &key, std::string_view value)
{
    if (auto it = grid_keys().find(key); it != grid_keys().end()) {
        auto values = parse_list(key, value);
        require_all(key, values, it->second.ok, it->second.constraint);
        spec.grid.*(it->second.member) = std::move(values);
        return;
    }
    // Aliases in other units, converted here once.
    if (key == "bs_density_per_m2") {
        auto values = parse_list(key, value);
        require_all(key, values, [](double v) { return v >= 0.0; }, "must be non-negative");
        for (auto &v : values)
            v /= kPerKm2ToPerM2;
        spec.grid.bs_density_per_km2 = std::move(values);
        return;
    }
    if (key == "self_blockage_rad") {
        auto values = parse_list(key, value);
        require_all(key, values, [](double v) { return v >= 0.0 && v <= kTwoPi; }, "must lie in [0, 2*pi] radians");
        for (auto &v : values)
            v = radians_to_degrees(v);
        spec.grid.self_blockage_deg = std::move(values);
        return;
    }
    if (key == "mean_blockage_duration_s") {
        auto values = parse_list(key, value);
        require_all(key, values, [](double v) { return v > 0.0; }, "must be positive");
        for (auto &v : values)
            v = 1.0 / v;
        spec.grid.unblock_rate_per_s = sorted_increasing(key, std::move(values));
        return;
    }

    if (key == "mode") {
        const auto m = parse_mode(trim(value));
        if (!m)
            throw ConfigError(key, "expected analytic-sweep, simulate, plan, or compare");
        spec.mode = *m;
        mode_seen = true;
    } else if (key == "output") {
        const auto v = trim(value);
        if (v.empty())
            throw ConfigError(key, "empty output path");
        spec.output = std::string(v);
    } else if (key == "seed") {
        spec.seed = parse_count(key, value);
    } else if (key == "iterations") {
        spec.iterations = parse_count(key, value);
        if (spec.iterations < 1)
            throw ConfigError(key, "must be at least 1");
    } else if (key == "horizon_s") {
        spec.horizon_s = parse_double(key, value);
        if (!(spec.horizon_s > 0.0))
            throw ConfigError(key, "must be positive");
    } else if (key == "warmup_s") {
        spec.warmup_s = parse_double(key, value);
        if (!(spec.warmup_s >= 0.0))
            throw ConfigError(key, "must be non-negative");
    } else if (key == "box_half_width_m") {
        spec.box_half_width_m = parse_double(key, value);
        if (!(spec.box_half_width_m > 0.0))
            throw ConfigError(key, "must be positive");
    } else if (key == "leg_duration_max_s") {
        spec.leg_duration_max_s = parse_double(key, value);
        if (!(spec.leg_duration_max_s > 0.0))
            throw ConfigError(key, "must be positive");
    } else if (key == "estimator") {
        const auto v = trim(value);
        if (v == "plain")
            spec.estimator = Estimator::Plain;
        else if (v == "stratified")
            spec.estimator = Estimator::Stratified;
        else
            throw ConfigError(key, "expected plain or stratified");
    } else if (key == "target_blockage_prob") {
        spec.target_blockage_prob = parse_double(key, value);
        if (!(spec.target_blockage_prob > 0.0 && spec.target_blockage_prob < 1.0))
            throw ConfigError(key, "must lie in (0, 1)");
    } else if (key == "conditioning") {
        const auto v = trim(value);
        if (v == "marginal")
            spec.conditioning = planner::Conditioning::Marginal;
        else if (v == "conditional")
            spec.conditioning = planner::Conditioning::Conditional;
        else
            throw ConfigError(key, "expected marginal or conditional");
    } else if (key == "paper_scale") {
        if (parse_bool(key, value)) {
            spec.iterations = kPaperScaleIterations;
            spec.horizon_s = kPaperScaleHorizon;
        }
    } else {
        throw ConfigError(key, "unknown key");
    }
}

void apply_line(ExperimentSpec &spec, bool &mode_seen, std::string_view line, std::size_t line_no)
{
    if (const auto hash = line.find('#'); hash != std::string_view::npos)
        line = line.substr(0, hash);
    line = trim(line);
    if (line.empty())
        return;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
        const std::string where = line_no > 0 ? "line " + std::to_string(line_no) : std::string{};
        throw ConfigError(std::string(line), where.empty() ? "expected key=value" : where + ": expected key=value");
    }
    const std::string key(trim(line.substr(0, eq)));
    if (key.empty())
        throw ConfigError("", "empty key");
    apply(spec, mode_seen, key, line.substr(eq + 1));
}

} // namespace

std::string_view to_string(Mode m)
{
    switch (m) {
    case Mode::AnalyticSweep:
        return "analytic-sweep";
    case Mode::Simulate:
        return "simulate";
    case Mode::Plan:
        return "plan";
    case Mode::Compare:
        return "compare";
    }
    return "analytic-sweep";
}

std::string_view to_string(Estimator e) { return e == Estimator::Plain ? "plain" : "stratified"; }

std::optional<Mode> parse_mode(std::string_view text)
{
    for (Mode m : {Mode::AnalyticSweep, Mode::Simulate, Mode::Plan, Mode::Compare})
        if (text == to_string(m))
            return m;
    return std::nullopt;
}

std::vector<ScenarioParams> ScenarioGrid::expand() const
{
    std::vector<ScenarioParams> out;
    for (double r : radius_m)
        for (double lt : bs_density_per_km2)
            for (double lb : blocker_density_per_m2)
                for (double v : blocker_speed_mps)
                    for (double hb : blocker_height_m)
                        for (double hr : ue_height_m)
                            for (double ht : bs_height_m)
                                for (double mu : unblock_rate_per_s)
                                    for (double w : self_blockage_deg) {
                                        ScenarioParams p;
                                        p.disc_radius_m = r;
                                        p.bs_density_per_m2 = lt * kPerKm2ToPerM2;
                                        p.blocker_density_per_m2 = lb;
                                        p.blocker_speed_mps = v;
                                        p.blocker_height_m = hb;
                                        p.ue_height_m = hr;
                                        p.bs_height_m = ht;
                                        p.unblock_rate_per_s = mu;
                                        p.self_blockage_angle_rad = degrees_to_radians(w);
                                        out.push_back(p);
                                    }
    return out;
}

ExperimentSpec parse_config(std::string_view text, std::span<const std::string> overrides, std::optional<Mode> mode)
{
    ExperimentSpec spec;
    bool mode_seen = false;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const auto nl = text.find('\n', pos);
        ++line_no;
        apply_line(spec, mode_seen, text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos),
                   line_no);
        if (nl == std::string_view::npos)
            break;
        pos = nl + 1;
    }
    for (const auto &o : overrides)
        apply_line(spec, mode_seen, o, 0);

    if (mode) {
        spec.mode = *mode;
        mode_seen = true;
    }
    if (!mode_seen)
        throw ConfigError("mode", "missing mode (analytic-sweep, simulate, plan, or compare)");

    if (!(spec.horizon_s > spec.warmup_s))
        throw ConfigError("warmup_s", "must be shorter than horizon_s");
    for (const auto &p : spec.grid.expand()) {
        try {
            p.validate();
        } catch (const InvalidParameter &e) {
            throw ConfigError("scenario", e.what());
        }
        if (spec.box_half_width_m < p.disc_radius_m)
            throw ConfigError("box_half_width_m", "must be at least radius_m");
    }
    return spec;
}

ExperimentSpec load_config(const std::filesystem::path &path, std::span<const std::string> overrides,
                           std::optional<Mode> mode)
{
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw IoError("cannot read config file " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), overrides, mode);
}

std::string format_number(double v)
{
    char buf[64];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return ec == std::errc{} ? std::string(buf, ptr) : std::string("nan");
}

std::string render_config(const ExperimentSpec &spec)
{
    std::string out;
    auto line = [&out](std::string_view key, const std::string &value) {
        out.append(key).append(" = ").append(value).push_back('\n');
    };
    line("mode", std::string(to_string(spec.mode)));
    for (const char *key : kGridOrder) {
        const auto &values = spec.grid.*(grid_keys().at(key).member);
        std::string joined;
        for (std::size_t i = 0; i < values.size(); ++i) {
            if (i > 0)
                joined.push_back(',');
            joined += format_number(values[i]);
        }
        line(key, joined);
    }
    line("output", spec.output);
    line("seed", std::to_string(spec.seed));
    line("iterations", std::to_string(spec.iterations));
    line("horizon_s", format_number(spec.horizon_s));
    line("warmup_s", format_number(spec.warmup_s));
    line("box_half_width_m", format_number(spec.box_half_width_m));
    line("leg_duration_max_s", format_number(spec.leg_duration_max_s));
    line("estimator", std::string(to_string(spec.estimator)));
    line("target_blockage_prob", format_number(spec.target_blockage_prob));
    line("conditioning", std::string(planner::to_string(spec.conditioning)));
    return out;
}

} // namespace mmblock::io
