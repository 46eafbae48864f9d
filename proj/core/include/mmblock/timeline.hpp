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

#ifndef MMBLOCK_TIMELINE_HPP
#define MMBLOCK_TIMELINE_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace mmblock {

struct Interval {
    double start = 0.0;
    double end = 0.0;

    double length() const { return end - start; }
    bool operator==(const Interval &) const = default;
};

// Blocked periods on an observation window [window_start, window_end].
//
// Intervals are sorted, pairwise disjoint, non-touching, have start < end, and lie inside the
// window. Every constructor path normalizes its input to that form.
class BlockageTimeline {
public:
    BlockageTimeline() = default;
    BlockageTimeline(double window_start, double window_end);

    // Clips to the window, drops empty pieces, sorts, and merges overlapping or touching intervals.
    static BlockageTimeline from_intervals(double window_start, double window_end, std::vector<Interval> intervals);

    // A timeline blocked over its whole window.
    static BlockageTimeline full(double window_start, double window_end);

    std::span<const Interval> intervals() const { return intervals_; }
    double window_start() const { return window_start_; }
    double window_end() const { return window_end_; }
    double window_length() const { return window_end_ - window_start_; }
    bool empty() const { return intervals_.empty(); }

    double blocked_time() const;
    double blocked_fraction() const;

    // Blocked periods that begin inside the window. A period already in progress at
    // window_start is not an onset.
    std::size_t onset_count() const;

    // True when `t` lies inside a blocked interval (closed on both ends).
    bool is_blocked(double t) const;

    bool operator==(const BlockageTimeline &) const = default;

private:
    double window_start_ = 0.0;
    double window_end_ = 0.0;
    std::vector<Interval> intervals_;
};

// Pointwise AND of two timelines; the result's window is the overlap of the two windows.
BlockageTimeline intersect(const BlockageTimeline &lhs, const BlockageTimeline &rhs);

// Pointwise AND of every timeline. An empty list yields a fully blocked window: with no link to
// fall back on the UE is blocked.
BlockageTimeline intersect_all(std::span<const BlockageTimeline> timelines, double window_start, double window_end);

// Pointwise OR of two timelines on the overlap of their windows.
BlockageTimeline unite(const BlockageTimeline &lhs, const BlockageTimeline &rhs);

} // namespace mmblock

#endif
