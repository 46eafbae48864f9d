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

#include "mmblock/analytic.hpp"
#include "mmblock/experiment.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <cstdlib>

using namespace mmblock;
using namespace mmblock::sim;

namespace {

SimConfig small_config()
{
    SimConfig c;
    c.scenario.bs_density_per_m2 = 1e-4;
    c.scenario.blocker_density_per_m2 = 0.05;
    c.horizon_s = 400.0;
    c.warmup_s = 60.0;
    c.iterations = 24;
    c.base_seed = 2024;
    return c;
}

void expect_same(const IterationRecord &a, const IterationRecord &b)
{
    EXPECT_EQ(a.index, b.index);
    EXPECT_EQ(a.n_bs, b.n_bs);
    EXPECT_EQ(a.n_visible, b.n_visible);
    EXPECT_EQ(a.coverage, b.coverage);
    EXPECT_EQ(a.blocked_s, b.blocked_s);
    EXPECT_EQ(a.onsets, b.onsets);
}

} // namespace

TEST(Experiment, IdenticalAcrossThreadCounts)
{
    const auto c = small_config();
    const auto one = run_experiment(c, 1);
    const auto three = run_experiment(c, 3);
    ASSERT_EQ(one.records.size(), three.records.size());
    for (std::size_t i = 0; i < one.records.size(); ++i)
        expect_same(one.records[i], three.records[i]);
    EXPECT_EQ(one.conditional.blocked_fraction.mean, three.conditional.blocked_fraction.mean);
    EXPECT_EQ(one.conditional.onset_rate_per_s.std_error, three.conditional.onset_rate_per_s.std_error);
}

TEST(Experiment, IterationDependsOnlyOnSeedAndIndex)
{
    const auto c = small_config();
    const auto all = run_experiment(c, 2);
    expect_same(run_iteration(c, 17), all.records[17]);
    auto other = c;
    other.base_seed = 2025;
    const auto r = run_iteration(other, 17);
    EXPECT_FALSE(r.blocked_s == all.records[17].blocked_s && r.n_bs == all.records[17].n_bs &&
                 r.onsets == all.records[17].onsets);
}

TEST(Experiment, NoBlockersMeansBlockedExactlyWithoutCoverage)
{
    auto c = small_config();
    c.scenario.blocker_density_per_m2 = 0.0;
    c.iterations = 200;
    const auto res = run_experiment(c, 2);
    std::size_t uncovered = 0;
    for (const auto &r : res.records) {
        uncovered += !r.coverage;
        EXPECT_EQ(r.onsets, 0u);
        EXPECT_EQ(r.blocked_fraction(), r.coverage ? 0.0 : 1.0);
    }
    EXPECT_GT(uncovered, 0u);
    EXPECT_DOUBLE_EQ(res.all.blocked_fraction.mean, static_cast<double>(uncovered) / 200.0);
    EXPECT_EQ(res.conditional.blocked_fraction.mean, 0.0);
    EXPECT_FALSE(res.conditional.mean_duration_s.available);
}

TEST(Experiment, NoCoverageFlagsConditionalUnavailable)
{
    auto c = small_config();
    c.scenario.bs_density_per_m2 = 0.0;
    c.iterations = 5;
    const auto res = run_experiment(c, 1);
    EXPECT_EQ(res.covered_iterations, 0u);
    EXPECT_FALSE(res.conditional.blocked_fraction.available);
    EXPECT_DOUBLE_EQ(res.all.blocked_fraction.mean, 1.0);
}

TEST(Experiment, FractionEqualsRateTimesDuration)
{
    auto c = small_config();
    c.scenario.blocker_density_per_m2 = 0.1;
    c.iterations = 40;
    const auto res = run_experiment(c, 2);
    const auto &m = res.conditional;
    ASSERT_TRUE(m.mean_duration_s.available);
    // blocked fraction and onset rate share the same per-iteration window
    EXPECT_NEAR(m.blocked_fraction.mean, m.onset_rate_per_s.mean * m.mean_duration_s.mean, 1e-12);
}

TEST(Experiment, EmptyLinkSetIsFullyBlocked)
{
    const auto c = small_config();
    Rng rng = make_stream(1, 1);
    const auto rec = simulate_links(c, {}, rng);
    EXPECT_FALSE(rec.coverage);
    EXPECT_DOUBLE_EQ(rec.blocked_fraction(), 1.0);
    EXPECT_EQ(rec.onsets, 0u);
}

TEST(Experiment, FixedLinksFollowProductForm)
{
    // Two links on opposite bearings: a straight blocker path crosses at most one of them.
    SimConfig c;
    c.scenario.blocker_density_per_m2 = 0.01;
    c.horizon_s = 3600.0;
    const std::vector<LinkSegment> links{make_link(c.scenario, {100.0, 0.0}), make_link(c.scenario, {-100.0, 0.0})};
    const double cr = analytic::blockage_rate_constant(c.scenario);
    const std::vector<double> alphas{cr * 100.0, cr * 100.0};
    const double want = analytic::all_blocked_prob_given_links(alphas, c.scenario.unblock_rate_per_s);
    const int reps = 60;
    std::vector<double> f(reps);
    parallel_for(reps, resolve_thread_count(0), [&](std::uint64_t r) {
        Rng rng = make_stream(31, r);
        f[r] = simulate_links(c, links, rng).blocked_fraction();
    });
    double sum = 0.0, sum2 = 0.0;
    for (double v : f) {
        sum += v;
        sum2 += v * v;
    }
    const double mean = sum / reps;
    const double se = std::sqrt((sum2 / reps - mean * mean) / (reps - 1));
    EXPECT_NEAR(mean, want, 3.0 * se) << "mean " << mean << " se " << se;
}

TEST(Stratified, WeightsAndDeterminism)
{
    auto c = small_config();
    c.scenario.blocker_density_per_m2 = 0.01;
    c.iterations = 60;
    const auto a = run_stratified_experiment(c, {}, 1);
    const auto b = run_stratified_experiment(c, {}, 3);
    ASSERT_FALSE(a.strata.empty());
    double w = 0.0;
    std::uint64_t its = 0;
    for (std::size_t s = 0; s < a.strata.size(); ++s) {
        EXPECT_EQ(a.strata[s].n_visible, s + 1);
        EXPECT_NEAR(a.strata[s].weight,
                    analytic::visible_bs_pmf(c.scenario, s + 1) / analytic::coverage_probability(c.scenario), 1e-12);
        EXPECT_GE(a.strata[s].iterations, 2u);
        w += a.strata[s].weight;
        its += a.strata[s].iterations;
        EXPECT_EQ(a.strata[s].blocked_s, b.strata[s].blocked_s);
    }
    EXPECT_NEAR(w + a.tail_weight_dropped, 1.0, 1e-12);
    EXPECT_LT(a.tail_weight_dropped, 1e-6);
    EXPECT_EQ(its, a.conditional.iterations);
    EXPECT_GE(its, c.iterations);
    EXPECT_EQ(a.conditional.blocked_fraction.mean, b.conditional.blocked_fraction.mean);
}

TEST(Threads, ResolutionOrder)
{
    EXPECT_EQ(resolve_thread_count(5), 5u);
    ::setenv("MMBLOCK_THREADS", "3", 1);
    EXPECT_EQ(resolve_thread_count(0), 3u);
    ::setenv("MMBLOCK_THREADS", "junk", 1);
    EXPECT_GE(resolve_thread_count(0), 1u);
    ::unsetenv("MMBLOCK_THREADS");
    EXPECT_GE(resolve_thread_count(0), 1u);
}

TEST(Threads, ParallelForPropagatesFailure)
{
    EXPECT_THROW(parallel_for(50, 4,
                              [](std::uint64_t i) {
                                  if (i == 13)
                                      throw std::runtime_error("boom");
                              }),
                 std::runtime_error);
}
