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

#include "mmblock/errors.hpp"

#include <algorithm>
#include <cmath>

namespace mmblock {

BlockageTimeline::BlockageTimeline(double window_start, double window_end)
    : window_start_(window_start), window_end_(window_end)
{
    if (!(std::isfinite(window_start) && std::isfinite(window_end)) || window_end < window_start)
        throw InvalidParameter("timeline window must be finite with start <= end");
}

BlockageTimeline BlockageTimeline::from_intervals(double window_start, double window_end,
                                                  std::vector<Interval> intervals)
{
    BlockageTimeline out(window_start, window_end);
    for (auto &iv : intervals) {
        iv.start = std::max(iv.start, window_start);
        iv.end = std::min(iv.end, window_end);
    }
    std::erase_if(intervals, [](const Interval &iv) { return !(iv.start < iv.end); });
    std::sort(intervals.begin(), intervals.end(),
              [](const Interval &a, const Interval &b) { return a.start < b.start; });

    out.intervals_.reserve(intervals.size());
    for (const auto &iv : intervals) {
        if (!out.intervals_.empty() && iv.start <= out.intervals_.back().end)
            out.intervals_.back().end = std::max(out.intervals_.back().end, iv.end);
        else
            out.intervals_.push_back(iv);
    }
    return out;
}

BlockageTimeline BlockageTimeline::full(double window_start, double window_end)
{
    BlockageTimeline out(window_start, window_end);
    if (window_start < window_end)
        out.intervals_.push_back({window_start, window_end});
    return out;
}

double BlockageTimeline::blocked_time() const
{
    double total = 0.0;
    for (const auto &iv : intervals_)
        total += iv.length();
    return total;
}

double BlockageTimeline::blocked_fraction() const
{
    const double len = window_length();
    return len > 0.0 ? blocked_time() / len : 0.0;
}

std::size_t BlockageTimeline::onset_count() const
{
    std::size_t n = intervals_.size();
    if (n > 0 && intervals_.front().start <= window_start_)
        --n;
    return n;
}

bool BlockageTimeline::is_blocked(double t) const
{
    auto it = std::upper_bound(intervals_.begin(), intervals_.end(), t,
                               [](double v, const Interval &iv) { return v < iv.start; });
    if (it == intervals_.begin())
        return false;
    --it;
    return t <= it->end;
}

BlockageTimeline intersect(const BlockageTimeline &lhs, const BlockageTimeline &rhs)
{
    const double lo = std::max(lhs.window_start(), rhs.window_start());
    const double hi = std::max(lo, std::min(lhs.window_end(), rhs.window_end()));

    std::vector<Interval> out;
    const auto a = lhs.intervals();
    const auto b = rhs.intervals();
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() && j < b.size()) {
        const double start = std::max(a[i].start, b[j].start);
        const double end = std::min(a[i].end, b[j].end);
        if (start < end)
            out.push_back({start, end});
        if (a[i].end < b[j].end)
            ++i;
        else
            ++j;
    }
    return BlockageTimeline::from_intervals(lo, hi, std::move(out));
}

BlockageTimeline intersect_all(std::span<const BlockageTimeline> timelines, double window_start, double window_end)
{
    BlockageTimeline acc = BlockageTimeline::full(window_start, window_end);
    for (const auto &tl : timelines) {
        acc = intersect(acc, tl);
        if (acc.empty())
            break;
    }
    return acc;
}

BlockageTimeline unite(const BlockageTimeline &lhs, const BlockageTimeline &rhs)
{
    const double lo = std::max(lhs.window_start(), rhs.window_start());
    const double hi = std::max(lo, std::min(lhs.window_end(), rhs.window_end()));
    std::vector<Interval> all(lhs.intervals().begin(), lhs.intervals().end());
    all.insert(all.end(), rhs.intervals().begin(), rhs.intervals().end());
    return BlockageTimeline::from_intervals(lo, hi, std::move(all));
}

} // namespace mmblock
