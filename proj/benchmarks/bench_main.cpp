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
#include "mmblock/markov.hpp"
#include "mmblock/timeline.hpp"

#include <benchmark/benchmark.h>

#include <random>

using namespace mmblock;

static void BM_EiSeries(benchmark::State &state)
{
    const double x = static_cast<double>(state.range(0));
    for (auto _ : state)
        benchmark::DoNotOptimize(analytic::ei_series(x));
}
BENCHMARK(BM_EiSeries)->Arg(1)->Arg(10)->Arg(50);

static void BM_ConditionalDuration(benchmark::State &state)
{
    ScenarioParams s;
    s.bs_density_per_m2 = 5e-4;
    for (auto _ : state)
        benchmark::DoNotOptimize(analytic::expected_blockage_duration_conditional(s));
}
BENCHMARK(BM_ConditionalDuration);

static void BM_StationarySolve(benchmark::State &state)
{
    std::vector<double> alphas(static_cast<std::size_t>(state.range(0)));
    for (std::size_t i = 0; i < alphas.size(); ++i)
        alphas[i] = 0.1 + 0.2 * static_cast<double>(i);
    const markov::BlockingChain chain(alphas, 2.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(markov::stationary_distribution(chain));
}
BENCHMARK(BM_StationarySolve)->DenseRange(2, 10, 4);

static void BM_LegCrossing(benchmark::State &state)
{
    ScenarioParams s;
    const auto link = sim::make_link(s, {80.0, 30.0});
    std::mt19937_64 gen(1);
    std::uniform_real_distribution<double> u(-20.0, 20.0);
    std::vector<sim::Leg> legs;
    for (int i = 0; i < 1024; ++i) {
        const double th = u(gen);
        legs.push_back({0.0, {u(gen), u(gen)}, {std::cos(th), std::sin(th)}, 30.0});
    }
    std::size_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(sim::leg_crossing_time(legs[i++ & 1023], 1.0, link));
}
BENCHMARK(BM_LegCrossing);

static void BM_TimelineIntersect(benchmark::State &state)
{
    std::mt19937_64 gen(3);
    std::exponential_distribution<double> gap(0.07), hold(2.0);
    std::vector<BlockageTimeline> tls;
    for (int k = 0; k < 4; ++k) {
        std::vector<Interval> iv;
        for (double t = gap(gen); t < 3600.0; t += gap(gen))
            iv.push_back({t, t + hold(gen)});
        tls.push_back(BlockageTimeline::from_intervals(0.0, 3600.0, iv));
    }
    for (auto _ : state)
        benchmark::DoNotOptimize(intersect_all(tls, 0.0, 3600.0));
}
BENCHMARK(BM_TimelineIntersect);

static void BM_Iteration(benchmark::State &state)
{
    sim::SimConfig c;
    c.scenario.bs_density_per_m2 = 2e-4;
    c.scenario.blocker_density_per_m2 = state.range(0) / 100.0;
    c.horizon_s = 600.0;
    std::uint64_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(sim::run_iteration(c, i++));
}
BENCHMARK(BM_Iteration)->Arg(1)->Arg(10)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
