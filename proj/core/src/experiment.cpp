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

#include "mmblock/experiment.hpp"

#include "mmblock/errors.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

namespace mmblock::sim {

namespace {

struct Moments {
    double mean = 0.0;
    double var = 0.0; // unbiased sample variance
};

template <typename F>
Moments moments(const std::vector<IterationRecord> &records, F value)
{
    Moments m;
    const auto n = static_cast<double>(records.size());
    if (records.empty())
        return m;
    for (const auto &r : records)
        m.mean += value(r);
    m.mean /= n;
    if (records.size() > 1) {
        for (const auto &r : records) {
            const double d = value(r) - m.mean;
            m.var += d * d;
        }
        m.var /= n - 1.0;
    }
    return m;
}

// Blocked time over onsets, with a delta-method standard error.
Estimate ratio_estimate(const std::vector<IterationRecord> &records)
{
    Estimate e;
    double blocked = 0.0;
    double onsets = 0.0;
    for (const auto &r : records) {
        blocked += r.blocked_s;
        onsets += static_cast<double>(r.onsets);
    }
    if (onsets <= 0.0)
        return e;
    e.available = true;
    e.mean = blocked / onsets;
    const auto n = static_cast<double>(records.size());
    if (records.size() > 1) {
        const double mean_onsets = onsets / n;
        double ss = 0.0;
        for (const auto &r : records) {
            const double d = r.blocked_s - e.mean * static_cast<double>(r.onsets);
            ss += d * d;
        }
        e.std_error = std::sqrt(ss / (n - 1.0) / n) / mean_onsets;
    }
    return e;
}

std::vector<double> conditional_count_weights(double mean_visible, double tail_mass, double &dropped)
{
    std::vector<double> w;
    dropped = 0.0;
    if (!(mean_visible > 0.0))
        return w;
    const double coverage = -std::expm1(-mean_visible);
    double cumulative = 0.0;
    for (unsigned n = 1; n < 100000; ++n) {
        const double k = static_cast<double>(n);
        const double pmf = std::exp(-mean_visible + k * std::log(mean_visible) - std::lgamma(k + 1.0)) / coverage;
        w.push_back(pmf);
        cumulative += pmf;
        if (k > mean_visible && 1.0 - cumulative < tail_mass)
            break;
    }
    dropped = std::max(0.0, 1.0 - cumulative);
    return w;
}

} // namespace

unsigned resolve_thread_count(unsigned requested)
{
    if (requested > 0)
        return requested;
    if (const char *env = std::getenv("MMBLOCK_THREADS")) {
        try {
            const long v = std::stol(env);
            if (v > 0)
                return static_cast<unsigned>(v);
        } catch (const std::exception &) {
        }
    }
    return std::max(1U, std::thread::hardware_concurrency());
}

void parallel_for(std::uint64_t count, unsigned threads, const std::function<void(std::uint64_t)> &task)
{
    threads = static_cast<unsigned>(std::min<std::uint64_t>(std::max(1U, threads), std::max<std::uint64_t>(count, 1)));
    if (threads <= 1) {
        for (std::uint64_t i = 0; i < count; ++i)
            task(i);
        return;
    }
    std::atomic<std::uint64_t> next{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&] {
            for (std::uint64_t i = next++; i < count; i = next++) {
                try {
                    task(i);
                } catch (...) {
                    std::lock_guard lock(failure_mutex);
                    if (!failure)
                        failure = std::current_exception();
                    next = count;
                }
            }
        });
    }
    for (auto &th : pool)
        th.join();
    if (failure)
        std::rethrow_exception(failure);
}

IterationRecord simulate_links(const SimConfig &config, std::span<const LinkSegment> links, Rng &rng)
{
    IterationRecord rec;
    rec.n_visible = static_cast<unsigned>(links.size());
    rec.coverage = !links.empty();
    const double lo = config.warmup_s;
    const double hi = config.horizon_s;
    rec.observed_s = hi - lo;

    if (links.empty()) {
        // Nothing to hand over to: blocked for the whole window, with no onset inside it.
        rec.blocked_s = rec.observed_s;
        return rec;
    }

    const auto crossings = simulate_link_crossings(config, links, rng);
    std::vector<BlockageTimeline> timelines;
    timelines.reserve(links.size());
    for (const auto &c : crossings)
        timelines.push_back(build_link_timeline(c, config.scenario.unblock_rate_per_s, rng, lo, hi));

    const BlockageTimeline all = intersect_all(timelines, lo, hi);
    rec.blocked_s = all.blocked_time();
    rec.onsets = all.onset_count();
    return rec;
}

IterationRecord run_iteration(const SimConfig &config, std::uint64_t index)
{
    Rng rng = make_stream(config.base_seed, index);
    const LinkSet deployment = sample_bs_deployment(config.scenario, rng);
    const auto links = deployment.visible_links();
    IterationRecord rec = simulate_links(config, links, rng);
    rec.index = index;
    rec.n_bs = static_cast<unsigned>(deployment.bs_positions.size());
    return rec;
}

BlockageMetrics summarize(const std::vector<IterationRecord> &records)
{
    BlockageMetrics m;
    m.iterations = records.size();
    if (records.empty())
        return m;
    const auto n = static_cast<double>(records.size());
    const Moments frac = moments(records, [](const IterationRecord &r) { return r.blocked_fraction(); });
    const Moments rate = moments(records, [](const IterationRecord &r) { return r.onset_rate(); });
    m.blocked_fraction = {frac.mean, std::sqrt(frac.var / n), true};
    m.onset_rate_per_s = {rate.mean, std::sqrt(rate.var / n), true};
    m.mean_duration_s = ratio_estimate(records);
    for (const auto &r : records)
        m.n_onsets += r.onsets;
    return m;
}

ExperimentResult run_experiment(const SimConfig &config, unsigned threads)
{
    config.validate();
    ExperimentResult result;
    result.records.resize(config.iterations);
    parallel_for(config.iterations, resolve_thread_count(threads),
                 [&](std::uint64_t i) { result.records[i] = run_iteration(config, i); });

    std::vector<IterationRecord> covered;
    for (const auto &r : result.records)
        if (r.coverage)
            covered.push_back(r);
    result.covered_iterations = covered.size();
    result.all = summarize(result.records);
    result.conditional = summarize(covered);
    return result;
}

StratifiedResult run_stratified_experiment(const SimConfig &config, const StratifiedOptions &options,
                                           unsigned threads)
{
    config.validate();
    StratifiedResult result;
    const std::vector<double> weights =
        conditional_count_weights(config.scenario.mean_visible_bs(), options.tail_mass, result.tail_weight_dropped);
    if (weights.empty())
        return result;

    const auto n_strata = weights.size();
    const unsigned worker_count = resolve_thread_count(threads);

    std::uint64_t pilot = std::max<std::uint64_t>(2, options.pilot_per_stratum);
    pilot = std::min<std::uint64_t>(pilot, std::max<std::uint64_t>(2, config.iterations / n_strata));

    std::vector<std::vector<IterationRecord>> per_stratum(n_strata);

    auto run_batch = [&](const std::vector<std::pair<unsigned, std::uint64_t>> &jobs) {
        std::vector<IterationRecord> out(jobs.size());
        parallel_for(jobs.size(), worker_count, [&](std::uint64_t k) {
            const auto [n, rep] = jobs[k];
            const std::uint64_t stream = (static_cast<std::uint64_t>(n) << 32) | rep;
            Rng rng = make_stream(config.base_seed, stream);
            const LinkSet deployment = sample_visible_deployment(config.scenario, n, rng);
            const auto links = deployment.visible_links();
            IterationRecord rec = simulate_links(config, links, rng);
            rec.index = stream;
            rec.n_bs = n;
            out[k] = rec;
        });
        for (std::size_t k = 0; k < jobs.size(); ++k)
            per_stratum[jobs[k].first - 1].push_back(out[k]);
    };

    std::vector<std::pair<unsigned, std::uint64_t>> jobs;
    for (unsigned n = 1; n <= n_strata; ++n)
        for (std::uint64_t j = 0; j < pilot; ++j)
            jobs.emplace_back(n, j);
    run_batch(jobs);

    // Second pass: Neyman-style allocation on the pilot spread of the blocked fraction.
    const std::uint64_t used = pilot * n_strata;
    const std::uint64_t remaining = config.iterations > used ? config.iterations - used : 0;
    if (remaining > 0) {
        std::vector<double> score(n_strata);
        for (std::size_t s = 0; s < n_strata; ++s) {
            const Moments m = moments(per_stratum[s], [](const IterationRecord &r) { return r.blocked_fraction(); });
            score[s] = weights[s] * std::sqrt(m.var);
        }
        double total = std::accumulate(score.begin(), score.end(), 0.0);
        if (!(total > 0.0)) {
            score = weights;
            total = std::accumulate(score.begin(), score.end(), 0.0);
        }
        std::vector<std::uint64_t> extra(n_strata);
        std::vector<std::pair<double, std::size_t>> remainders;
        std::uint64_t assigned = 0;
        for (std::size_t s = 0; s < n_strata; ++s) {
            const double exact = static_cast<double>(remaining) * score[s] / total;
            extra[s] = static_cast<std::uint64_t>(std::floor(exact));
            assigned += extra[s];
            remainders.emplace_back(exact - std::floor(exact), s);
        }
        std::stable_sort(remainders.begin(), remainders.end(),
                         [](const auto &a, const auto &b) { return a.first > b.first; });
        for (std::size_t k = 0; assigned < remaining && k < remainders.size(); ++k, ++assigned)
            ++extra[remainders[k].second];

        jobs.clear();
        for (unsigned n = 1; n <= n_strata; ++n)
            for (std::uint64_t j = 0; j < extra[n - 1]; ++j)
                jobs.emplace_back(n, pilot + j);
        run_batch(jobs);
    }

    BlockageMetrics &m = result.conditional;
    double frac_var = 0.0;
    double rate_var = 0.0;
    double dur_weighted = 0.0;
    double dur_var = 0.0;
    for (std::size_t s = 0; s < n_strata; ++s) {
        const auto &recs = per_stratum[s];
        StratumSummary sum;
        sum.n_visible = static_cast<unsigned>(s + 1);
        sum.weight = weights[s];
        sum.iterations = recs.size();
        const Moments f = moments(recs, [](const IterationRecord &r) { return r.blocked_fraction(); });
        const Moments r = moments(recs, [](const IterationRecord &x) { return x.onset_rate(); });
        sum.blocked_fraction_mean = f.mean;
        sum.blocked_fraction_var = f.var;
        sum.onset_rate_mean = r.mean;
        sum.onset_rate_var = r.var;
        for (const auto &rec : recs) {
            sum.blocked_s += rec.blocked_s;
            sum.onsets += rec.onsets;
        }
        const auto k = static_cast<double>(recs.size());
        m.blocked_fraction.mean += sum.weight * f.mean;
        m.onset_rate_per_s.mean += sum.weight * r.mean;
        frac_var += sum.weight * sum.weight * f.var / k;
        rate_var += sum.weight * sum.weight * r.var / k;
        m.n_onsets += sum.onsets;
        m.iterations += recs.size();

        const Estimate d = ratio_estimate(recs);
        if (d.available) {
            result.duration_weight_covered += sum.weight;
            dur_weighted += sum.weight * d.mean;
            dur_var += sum.weight * sum.weight * d.std_error * d.std_error;
        }
        result.strata.push_back(sum);
    }
    m.blocked_fraction.std_error = std::sqrt(frac_var);
    m.blocked_fraction.available = true;
    m.onset_rate_per_s.std_error = std::sqrt(rate_var);
    m.onset_rate_per_s.available = true;
    if (result.duration_weight_covered > 0.0) {
        const double c = result.duration_weight_covered;
        m.mean_duration_s = {dur_weighted / c, std::sqrt(dur_var) / c, true};
    }
    return result;
}

} // namespace mmblock::sim
