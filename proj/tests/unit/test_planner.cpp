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
#include "mmblock/errors.hpp"
#include "mmblock/planner.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

using namespace mmblock;
using namespace mmblock::planner;

namespace {

ScenarioParams with_blockers(double lambda_b)
{
    ScenarioParams s;
    s.blocker_density_per_m2 = lambda_b;
    return s;
}

constexpr QosTarget kMarginal{1e-5, Conditioning::Marginal};
constexpr QosTarget kConditional{1e-5, Conditioning::Conditional};

} // namespace

TEST(MinDensity, MarginalClosedForm)
{
    const auto s = with_blockers(0.01);
    const auto plan = min_bs_density(s, kMarginal);
    const auto d = analytic::derive(s);
    const double want = -std::log(1e-5) / (d.a_factor * d.p_visible * kPi * 1e4);
    EXPECT_NEAR(plan.required_density_per_m2, want, 1e-15);
    EXPECT_NEAR(plan.required_density_per_m2 * 1e6, 450.1, 0.1);
    // the figure-read 400/km^2, within 20%
    EXPECT_LE(std::abs(plan.required_density_per_m2 * 1e6 - 400.0) / 400.0, 0.2);
    EXPECT_EQ(plan.conditioning, Conditioning::Marginal);
}

TEST(MinDensity, RoundTripsThroughMarginalProbability)
{
    for (double lb : {0.0, 0.005, 0.01, 0.05, 0.1, 0.3}) {
        for (double target : {1e-2, 1e-5, 1e-9}) {
            auto s = with_blockers(lb);
            s.bs_density_per_m2 = min_bs_density(s, {target, Conditioning::Marginal}).required_density_per_m2;
            EXPECT_NEAR(analytic::marginal_blockage_probability(s), target, 1e-6 * target);
        }
    }
}

TEST(MinDensity, NoBlockersIsCoverageBound)
{
    const auto plan = min_bs_density(with_blockers(0.0), kMarginal);
    EXPECT_NEAR(plan.required_density_per_m2, -std::log(1e-5) / (5.0 / 6.0 * kPi * 1e4), 1e-15);
    EXPECT_NEAR(plan.required_density_per_m2, plan.coverage_bound_per_m2, 1e-18);
}

TEST(MinDensity, ConditionalRootAndOrdering)
{
    for (double lb : {0.005, 0.01, 0.05, 0.1}) {
        auto s = with_blockers(lb);
        const auto cond = min_bs_density(s, kConditional);
        const auto marg = min_bs_density(s, kMarginal);
        s.bs_density_per_m2 = cond.required_density_per_m2;
        EXPECT_NEAR(analytic::conditional_blockage_probability(s), 1e-5, 1e-5 * 1e-6);
        // conditioning on coverage drops the empty-disc mass, so less density is needed
        EXPECT_LE(cond.required_density_per_m2, marg.required_density_per_m2 * (1.0 + kBisectionRelativeTolerance));
    }
    EXPECT_NEAR(min_bs_density(with_blockers(0.01), kConditional).required_density_per_m2 * 1e6, 388.8, 0.1);
}

TEST(MinDensity, LooseConditionalTargetNeedsNothing)
{
    const auto s = with_blockers(0.1);
    const double a = analytic::a_factor(s);
    EXPECT_EQ(min_bs_density(s, {1.0 - a + 0.01, Conditioning::Conditional}).required_density_per_m2, 0.0);
}

TEST(MinDensity, InfeasibleAndInvalid)
{
    auto s = with_blockers(0.01);
    s.self_blockage_angle_rad = kTwoPi;
    EXPECT_THROW(min_bs_density(s, kMarginal), InfeasibleTarget);
    EXPECT_THROW(min_bs_density(with_blockers(0.01), {0.0, Conditioning::Marginal}), InvalidParameter);
    EXPECT_THROW(min_bs_density(with_blockers(0.01), {1.0, Conditioning::Marginal}), InvalidParameter);
}

TEST(MinDensity, LinearApproximationTracksExact)
{
    const auto plan = min_bs_density(with_blockers(0.01), kMarginal);
    EXPECT_LE(std::abs(plan.linear_approx_per_m2 - plan.required_density_per_m2) / plan.required_density_per_m2,
              0.05);
    // slope check: doubling lambda_B moves the exact requirement by the linear law's increment
    const auto p1 = min_bs_density(with_blockers(0.005), kMarginal);
    const auto p2 = min_bs_density(with_blockers(0.01), kMarginal);
    const double exact_step = p2.required_density_per_m2 - p1.required_density_per_m2;
    const double linear_step = p2.linear_approx_per_m2 - p1.linear_approx_per_m2;
    EXPECT_NEAR(exact_step, linear_step, 0.05 * linear_step);
}

TEST(Tradeoff, DensityIncreasesWithBlockers)
{
    const std::vector<double> grid{0.0, 0.05, 0.1};
    const auto curve = density_vs_blocker_density(ScenarioParams{}, grid, kMarginal);
    ASSERT_EQ(curve.points.size(), 3u);
    EXPECT_EQ(curve.swept, SweptParameter::BlockerDensity);
    EXPECT_NEAR(curve.points[0].required_bs_density_per_m2,
                min_bs_density(with_blockers(0.0), kMarginal).coverage_bound_per_m2, 1e-18);
    for (std::size_t i = 1; i < curve.points.size(); ++i)
        EXPECT_GT(curve.points[i].required_bs_density_per_m2, curve.points[i - 1].required_bs_density_per_m2);

    double prev_gap = -1.0;
    for (double lb : {0.01, 0.05, 0.1, 0.2}) {
        const auto p = min_bs_density(with_blockers(lb), kMarginal);
        const double gap = std::abs(p.linear_approx_per_m2 - p.required_density_per_m2) / p.required_density_per_m2;
        EXPECT_GT(gap, prev_gap);
        prev_gap = gap;
    }
}

TEST(Tradeoff, HeightReducesDensityWithDiminishingReturns)
{
    std::vector<double> heights;
    for (double h = 3.0; h <= 20.0; h += 1.0)
        heights.push_back(h);
    const auto curve = height_density_tradeoff(with_blockers(0.1), heights, kConditional);
    double prev_drop = 1e300;
    for (std::size_t i = 1; i < curve.points.size(); ++i) {
        const double drop =
            curve.points[i - 1].required_bs_density_per_m2 - curve.points[i].required_bs_density_per_m2;
        EXPECT_GT(drop, 0.0);
        EXPECT_LT(drop, prev_drop);
        prev_drop = drop;
    }
    // very tall BSs: C -> 0 and the requirement falls to the coverage bound
    const std::vector<double> tall{1e7};
    const auto far = height_density_tradeoff(with_blockers(0.1), tall, kMarginal);
    EXPECT_NEAR(far.points[0].required_bs_density_per_m2,
                min_bs_density(with_blockers(0.0), kMarginal).coverage_bound_per_m2, 1e-9);
}

TEST(Tradeoff, DoublingHeightSavesAboutTwentyPercent)
{
    const std::vector<double> hs{4.0, 8.0};
    const auto curve = height_density_tradeoff(with_blockers(0.1), hs, kConditional);
    const double ratio = curve.points[1].required_bs_density_per_m2 / curve.points[0].required_bs_density_per_m2;
    EXPECT_NEAR(ratio, 0.80, 0.05);
}

TEST(Tradeoff, HeightAtOrBelowBlockersRejected)
{
    const std::vector<double> hs{5.0, 1.8};
    EXPECT_THROW(height_density_tradeoff(ScenarioParams{}, hs, kMarginal), InvalidParameter);
}
