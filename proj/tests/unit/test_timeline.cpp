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

#include "mmblock/timeline.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <vector>

using mmblock::BlockageTimeline;
using mmblock::Interval;

namespace {

// Random timeline on [0, horizon] with endpoints on a 1 ms grid, so sampling at cell midpoints
// is exact.
BlockageTimeline random_timeline(std::mt19937_64 &gen, double horizon, int pieces)
{
    std::uniform_int_distribution<int> ms(0, static_cast<int>(horizon * 1000.0));
    std::vector<Interval> iv;
    for (int i = 0; i < pieces; ++i) {
        int a = ms(gen), b = ms(gen);
        if (a > b)
            std::swap(a, b);
        iv.push_back({a / 1000.0, b / 1000.0});
    }
    return BlockageTimeline::from_intervals(0.0, horizon, iv);
}

std::vector<bool> discretize(const BlockageTimeline &tl, double horizon)
{
    const int cells = static_cast<int>(std::lround(horizon * 1000.0));
    std::vector<bool> out(cells);
    for (int c = 0; c < cells; ++c)
        out[c] = tl.is_blocked((c + 0.5) / 1000.0);
    return out;
}

} // namespace

TEST(Timeline, NormalizesInput)
{
    const auto tl = BlockageTimeline::from_intervals(0.0, 10.0, {{5, 6}, {-1, 1}, {1, 2}, {9, 12}, {3, 3}, {5.5, 7}});
    const std::vector<Interval> want{{0, 2}, {5, 7}, {9, 10}};
    ASSERT_EQ(tl.intervals().size(), want.size());
    for (std::size_t i = 0; i < want.size(); ++i)
        EXPECT_EQ(tl.intervals()[i], want[i]);
    EXPECT_DOUBLE_EQ(tl.blocked_time(), 5.0);
    EXPECT_DOUBLE_EQ(tl.blocked_fraction(), 0.5);
    // the piece in progress at the window start is not an onset
    EXPECT_EQ(tl.onset_count(), 2u);
}

TEST(Timeline, IntersectExamples)
{
    const auto x = BlockageTimeline::from_intervals(0, 10, {{1, 3}});
    const auto y = BlockageTimeline::from_intervals(0, 10, {{2, 5}});
    const auto z = mmblock::intersect(x, y);
    ASSERT_EQ(z.intervals().size(), 1u);
    EXPECT_EQ(z.intervals()[0], (Interval{2, 3}));
    EXPECT_EQ(mmblock::intersect(x, BlockageTimeline::full(0, 10)), x);
    EXPECT_TRUE(mmblock::intersect(x, BlockageTimeline(0, 10)).empty());
}

TEST(Timeline, EmptyListIsFullyBlocked)
{
    const auto tl = mmblock::intersect_all({}, 60.0, 3600.0);
    EXPECT_DOUBLE_EQ(tl.blocked_fraction(), 1.0);
    EXPECT_EQ(tl.onset_count(), 0u);
}

TEST(Timeline, CommutativeAndAssociative)
{
    std::mt19937_64 gen(7);
    for (int trial = 0; trial < 50; ++trial) {
        const auto a = random_timeline(gen, 20.0, 8);
        const auto b = random_timeline(gen, 20.0, 8);
        const auto c = random_timeline(gen, 20.0, 8);
        EXPECT_EQ(mmblock::intersect(a, b), mmblock::intersect(b, a));
        EXPECT_EQ(mmblock::intersect(mmblock::intersect(a, b), c), mmblock::intersect(a, mmblock::intersect(b, c)));
        const std::vector<BlockageTimeline> all{a, b, c};
        EXPECT_EQ(mmblock::intersect_all(all, 0.0, 20.0), mmblock::intersect(mmblock::intersect(a, b), c));
    }
}

TEST(Timeline, MatchesMillisecondDiscretization)
{
    std::mt19937_64 gen(99);
    const double horizon = 30.0;
    for (int trial = 0; trial < 40; ++trial) {
        std::vector<BlockageTimeline> tls;
        for (int k = 0; k < 3; ++k)
            tls.push_back(random_timeline(gen, horizon, 12));
        const auto both = mmblock::intersect_all(tls, 0.0, horizon);
        const auto either = mmblock::unite(tls[0], tls[1]);
        const auto d0 = discretize(tls[0], horizon);
        const auto d1 = discretize(tls[1], horizon);
        const auto d2 = discretize(tls[2], horizon);
        const auto dboth = discretize(both, horizon);
        const auto deither = discretize(either, horizon);
        std::size_t blocked_cells = 0;
        for (std::size_t c = 0; c < d0.size(); ++c) {
            ASSERT_EQ(dboth[c], d0[c] && d1[c] && d2[c]) << "cell " << c;
            ASSERT_EQ(deither[c], d0[c] || d1[c]) << "cell " << c;
            blocked_cells += dboth[c];
        }
        EXPECT_NEAR(both.blocked_time(), blocked_cells / 1000.0, 1e-9);
    }
}

TEST(Timeline, OnsetsCountRisingEdges)
{
    std::mt19937_64 gen(5);
    for (int trial = 0; trial < 30; ++trial) {
        const auto tl = random_timeline(gen, 10.0, 6);
        const auto d = discretize(tl, 10.0);
        std::size_t edges = 0;
        for (std::size_t c = 1; c < d.size(); ++c)
            edges += d[c] && !d[c - 1];
        EXPECT_EQ(tl.onset_count(), edges);
    }
}
