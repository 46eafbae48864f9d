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

#include "mmblock/csv.hpp"

#include "mmblock/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>
#include <sstream>

namespace mmblock::io {

std::string_view to_string(Source s) { return s == Source::Analytic ? "analytic" : "simulated"; }

std::string_view to_string(RowStatus s)
{
    switch (s) {
    case RowStatus::Ok:
        return "ok";
    case RowStatus::Undefined:
        return "undefined";
    case RowStatus::Infeasible:
        return "infeasible";
    case RowStatus::Unavailable:
        return "unavailable";
    }
    return "ok";
}

std::string_view csv_header()
{
    return "radius_m,bs_density_per_m2,blocker_density_per_m2,blocker_speed_mps,blocker_height_m,ue_height_m,"
           "bs_height_m,unblock_rate_per_s,self_blockage_rad,metric,value,std_error,relative_error,source,status";
}

std::string format_scientific(double v)
{
    if (std::isnan(v))
        return {};
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[48];
    const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::scientific, 9);
    return ec == std::errc{} ? std::string(buf, ptr) : std::string{};
}

namespace {

std::string optional_field(const std::optional<double> &v) { return v ? format_scientific(*v) : std::string{}; }

} // namespace

void write_csv(std::ostream &out, const CsvMetadata &meta, std::span<const ResultRow> rows)
{
    std::string text;
    text += "# mmblock-results ";
    text += kCsvSchemaVersion;
    text += " mode=" + meta.mode + " seed=" + std::to_string(meta.seed);
    if (meta.iterations > 0)
        text += " iterations=" + std::to_string(meta.iterations);
    if (!meta.estimator.empty())
        text += " estimator=" + meta.estimator;
    text += '\n';
    text += csv_header();
    text += '\n';

    for (const auto &r : rows) {
        const auto &s = r.scenario;
        for (double v : {s.disc_radius_m, s.bs_density_per_m2, s.blocker_density_per_m2, s.blocker_speed_mps,
                         s.blocker_height_m, s.ue_height_m, s.bs_height_m, s.unblock_rate_per_s,
                         s.self_blockage_angle_rad}) {
            text += format_scientific(v);
            text += ',';
        }
        text += r.metric;
        text += ',';
        text += r.status == RowStatus::Ok ? format_scientific(r.value) : std::string{};
        text += ',';
        text += optional_field(r.std_error);
        text += ',';
        text += optional_field(r.relative_error);
        text += ',';
        text += to_string(r.source);
        text += ',';
        text += to_string(r.status);
        text += '\n';
    }
    out.write(text.data(), static_cast<std::streamsize>(text.size()));
}

void write_csv_file(const std::filesystem::path &path, const CsvMetadata &meta, std::span<const ResultRow> rows)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw IoError("cannot open " + path.string() + " for writing");
    write_csv(out, meta, rows);
    out.flush();
    if (!out)
        throw IoError("write failed: " + path.string());
}

} // namespace mmblock::io
