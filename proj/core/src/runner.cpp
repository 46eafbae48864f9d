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

#include "mmblock/runner.hpp"

#include "mmblock/analytic.hpp"
#include "mmblock/errors.hpp"
#include "mmblock/experiment.hpp"
#include "mmblock/planner.hpp"
#include "mmblock/rng.hpp"

#include <cmath>
#include <functional>
#include <limits>
#include <ostream>

namespace mmblock::io {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

ResultRow analytic_row(const ScenarioParams &s, std::string metric, const std::function<double()> &eval)
{
    ResultRow row;
    row.scenario = s;
    row.metric = std::move(metric);
    row.source = Source::Analytic;
    try {
        row.value = eval();
        if (!std::isfinite(row.value))
            row.status = RowStatus::Undefined;
    } catch (const UndefinedConditional &) {
        row.status = RowStatus::Undefined;
    } catch (const SolverFailure &) {
        row.status = RowStatus::Unavailable;
    }
    return row;
}

ResultRow simulated_row(const ScenarioParams &s, std::string metric, const sim::Estimate &e)
{
    ResultRow row;
    row.scenario = s;
    row.metric = std::move(metric);
    row.source = Source::Simulated;
    if (e.available) {
        row.value = e.mean;
        row.std_error = e.std_error;
    } else {
        row.status = RowStatus::Unavailable;
    }
    return row;
}

sim::SimConfig sim_config(const ExperimentSpec &spec, const ScenarioParams &s, std::uint64_t base_seed)
{
    sim::SimConfig c;
    c.scenario = s;
    c.box_half_width_m = spec.box_half_width_m;
    c.leg_duration_max_s = spec.leg_duration_max_s;
    c.horizon_s = spec.horizon_s;
    c.warmup_s = spec.warmup_s;
    c.iterations = spec.iterations;
    c.base_seed = base_seed;
    return c;
}

constexpr const char *kProbMetric = "conditional_blockage_probability";
constexpr const char *kFreqMetric = "conditional_blockage_frequency_per_s";
constexpr const char *kDurMetric = "conditional_blockage_duration_s";

CsvMetadata metadata(const ExperimentSpec &spec)
{
    CsvMetadata m;
    m.mode = std::string(to_string(spec.mode));
    m.seed = spec.seed;
    if (spec.mode == Mode::Simulate || spec.mode == Mode::Compare) {
        m.iterations = spec.iterations;
        m.estimator = std::string(to_string(spec.estimator));
    }
    return m;
}

void tally(RunSummary &summary, const std::vector<ResultRow> &rows)
{
    summary.rows += rows.size();
    for (const auto &r : rows) {
        if (r.status == RowStatus::Infeasible)
            ++summary.infeasible_rows;
        else if (r.status == RowStatus::Undefined)
            ++summary.undefined_rows;
        else if (r.status == RowStatus::Unavailable)
            ++summary.unavailable_rows;
    }
}

std::filesystem::path with_suffix(const std::string &output, std::string_view suffix)
{
    return std::filesystem::path(output + std::string(suffix) + ".csv");
}

} // namespace

std::uint64_t scenario_seed(std::uint64_t seed, std::size_t index)
{
    return index == 0 ? seed : mix64(seed ^ mix64(static_cast<std::uint64_t>(index)));
}

std::vector<ResultRow> analytic_probability_rows(const ScenarioParams &s)
{
    return {
        analytic_row(s, kProbMetric, [&] { return analytic::conditional_blockage_probability(s); }),
        analytic_row(s, "marginal_blockage_probability", [&] { return analytic::marginal_blockage_probability(s); }),
        analytic_row(s, "coverage_probability", [&] { return analytic::coverage_probability(s); }),
    };
}

std::vector<ResultRow> analytic_frequency_rows(const ScenarioParams &s)
{
    return {
        analytic_row(s, kFreqMetric, [&] { return analytic::expected_blockage_frequency_conditional(s); }),
        analytic_row(s, "marginal_blockage_frequency_per_s", [&] { return analytic::expected_blockage_frequency(s); }),
    };
}

std::vector<ResultRow> analytic_duration_rows(const ScenarioParams &s)
{
    return {
        analytic_row(s, kDurMetric, [&] { return analytic::expected_blockage_duration_conditional(s); }),
        analytic_row(s, "conditional_blockage_duration_approx_s",
                     [&] { return analytic::expected_blockage_duration_approx(s); }),
    };
}

namespace {

struct SimulatedMetrics {
    sim::Estimate probability;
    sim::Estimate frequency;
    sim::Estimate duration;
    std::optional<sim::Estimate> coverage;
};

SimulatedMetrics simulate_metrics(const ExperimentSpec &spec, const ScenarioParams &s, std::uint64_t base_seed,
                                  unsigned threads)
{
    const auto config = sim_config(spec, s, base_seed);
    SimulatedMetrics m;
    if (spec.estimator == Estimator::Stratified) {
        if (!(s.mean_visible_bs() > 0.0))
            return m;
        const auto r = sim::run_stratified_experiment(config, {}, threads);
        m.probability = r.conditional.blocked_fraction;
        m.frequency = r.conditional.onset_rate_per_s;
        m.duration = r.conditional.mean_duration_s;
        return m;
    }
    const auto r = sim::run_experiment(config, threads);
    m.probability = r.conditional.blocked_fraction;
    m.frequency = r.conditional.onset_rate_per_s;
    m.duration = r.conditional.mean_duration_s;
    if (r.covered_iterations == 0) {
        m.probability.available = m.frequency.available = m.duration.available = false;
    }
    const double n = static_cast<double>(r.records.size());
    const double q = static_cast<double>(r.covered_iterations) / n;
    m.coverage = sim::Estimate{q, n > 1 ? std::sqrt(q * (1.0 - q) / n) : 0.0, true};
    return m;
}

} // namespace

std::vector<ResultRow> simulate_rows(const ExperimentSpec &spec, const ScenarioParams &s, std::uint64_t base_seed,
                                     unsigned threads)
{
    const auto m = simulate_metrics(spec, s, base_seed, threads);
    std::vector<ResultRow> rows{
        simulated_row(s, kProbMetric, m.probability),
        simulated_row(s, kFreqMetric, m.frequency),
        simulated_row(s, kDurMetric, m.duration),
    };
    if (m.coverage)
        rows.push_back(simulated_row(s, "coverage_probability", *m.coverage));
    return rows;
}

std::vector<ResultRow> compare_rows(const ExperimentSpec &spec, const ScenarioParams &s, std::uint64_t base_seed,
                                    unsigned threads)
{
    const auto m = simulate_metrics(spec, s, base_seed, threads);
    std::vector<std::pair<ResultRow, ResultRow>> pairs{
        {analytic_probability_rows(s)[0], simulated_row(s, kProbMetric, m.probability)},
        {analytic_frequency_rows(s)[0], simulated_row(s, kFreqMetric, m.frequency)},
        {analytic_duration_rows(s)[0], simulated_row(s, kDurMetric, m.duration)},
    };
    if (m.coverage)
        pairs.emplace_back(analytic_probability_rows(s)[2], simulated_row(s, "coverage_probability", *m.coverage));

    std::vector<ResultRow> rows;
    for (auto &[theory, simulated] : pairs) {
        if (theory.status == RowStatus::Ok && simulated.status == RowStatus::Ok && theory.value != 0.0)
            simulated.relative_error = std::abs(simulated.value - theory.value) / std::abs(theory.value);
        rows.push_back(std::move(theory));
        rows.push_back(std::move(simulated));
    }
    return rows;
}

ResultRow plan_row(const ExperimentSpec &spec, const ScenarioParams &s)
{
    ResultRow row;
    row.scenario = s;
    row.scenario.bs_density_per_m2 = kNaN;
    row.metric = spec.conditioning == planner::Conditioning::Marginal ? "min_bs_density_marginal_per_m2"
                                                                      : "min_bs_density_conditional_per_m2";
    row.source = Source::Analytic;
    try {
        const auto plan = planner::min_bs_density(s, {spec.target_blockage_prob, spec.conditioning});
        row.value = plan.required_density_per_m2;
    } catch (const InfeasibleTarget &) {
        row.status = RowStatus::Infeasible;
    }
    return row;
}

RunSummary run(const ExperimentSpec &spec, std::ostream &log, unsigned threads)
{
    const auto scenarios = spec.grid.expand();
    const auto meta = metadata(spec);
    RunSummary summary;

    auto emit = [&](const std::filesystem::path &path, const std::vector<ResultRow> &rows) {
        write_csv_file(path, meta, rows);
        tally(summary, rows);
        summary.files.push_back(path);
        log << "wrote " << path.string() << " (" << rows.size() << " rows)\n";
    };

    switch (spec.mode) {
    case Mode::AnalyticSweep: {
        std::vector<ResultRow> prob, freq, dur;
        for (const auto &s : scenarios) {
            for (auto &r : analytic_probability_rows(s))
                prob.push_back(std::move(r));
            for (auto &r : analytic_frequency_rows(s))
                freq.push_back(std::move(r));
            for (auto &r : analytic_duration_rows(s))
                dur.push_back(std::move(r));
        }
        emit(with_suffix(spec.output, "_probability"), prob);
        emit(with_suffix(spec.output, "_frequency"), freq);
        emit(with_suffix(spec.output, "_duration"), dur);
        break;
    }
    case Mode::Simulate:
    case Mode::Compare: {
        std::vector<ResultRow> rows;
        for (std::size_t i = 0; i < scenarios.size(); ++i) {
            const auto seed = scenario_seed(spec.seed, i);
            auto part = spec.mode == Mode::Simulate ? simulate_rows(spec, scenarios[i], seed, threads)
                                                    : compare_rows(spec, scenarios[i], seed, threads);
            for (auto &r : part)
                rows.push_back(std::move(r));
            log << "scenario " << (i + 1) << "/" << scenarios.size() << " done\n";
        }
        emit(with_suffix(spec.output, ""), rows);
        break;
    }
    case Mode::Plan: {
        std::vector<ResultRow> rows;
        for (const auto &s : scenarios) {
            rows.push_back(plan_row(spec, s));
            const auto &r = rows.back();
            if (r.status == RowStatus::Ok)
                log << "required BS density: " << format_number(r.value / kPerKm2ToPerM2) << " /km^2 ("
                    << planner::to_string(spec.conditioning) << ", target " << format_number(spec.target_blockage_prob)
                    << ")\n";
            else
                log << "target infeasible for this scenario\n";
        }
        emit(with_suffix(spec.output, ""), rows);
        break;
    }
    }
    return summary;
}

} // namespace mmblock::io
