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

#ifndef MMBLOCK_EXPERIMENT_HPP
#define MMBLOCK_EXPERIMENT_HPP

#include "mmblock/mobility.hpp"

#include <cstdint>
#include <functional>
#include <vector>

namespace mmblock::sim {

struct Estimate {
    double mean = 0.0;
    double std_error = 0.0;
    bool available = false;
};

// Aggregate all-blocked statistics over a set of replications.
struct BlockageMetrics {
    Estimate blocked_fraction;
    Estimate onset_rate_per_s;
    // Total blocked time over total onsets (so fraction ~ rate * duration).
    Estimate mean_duration_s;
    std::uint64_t n_onsets = 0;
    std::uint64_t iterations = 0;
};

// Outcome of one replication: one deployment, one blocker population, one horizon.
struct IterationRecord {
    std::uint64_t index = 0;
    unsigned n_bs = 0;
    unsigned n_visible = 0;
    bool coverage = false; // at least one visible BS
    double observed_s = 0.0;
    double blocked_s = 0.0;
    std::uint64_t onsets = 0;

    double blocked_fraction() const { return observed_s > 0.0 ? blocked_s / observed_s : 0.0; }
    double onset_rate() const { return observed_s > 0.0 ? static_cast<double>(onsets) / observed_s : 0.0; }
};

struct ExperimentResult {
    BlockageMetrics all;         // every iteration
    BlockageMetrics conditional; // iterations with coverage only
    std::uint64_t covered_iterations = 0;
    std::vector<IterationRecord> records;
};

// Worker count: `requested` if non-zero, else MMBLOCK_THREADS, else hardware concurrency.
unsigned resolve_thread_count(unsigned requested);

// Runs `task(i)` for i in [0, count) on `threads` workers. Tasks must write disjoint outputs.
void parallel_for(std::uint64_t count, unsigned threads, const std::function<void(std::uint64_t)> &task);

// Simulates the all-blocked timeline for a fixed set of links and returns its statistics.
IterationRecord simulate_links(const SimConfig &config, std::span<const LinkSegment> links, Rng &rng);

IterationRecord run_iteration(const SimConfig &config, std::uint64_t index);

// Fresh deployment and blocker population per iteration; generator per iteration derived from
// (base_seed, index), so the result is independent of thread count and scheduling.
ExperimentResult run_experiment(const SimConfig &config, unsigned threads = 0);

BlockageMetrics summarize(const std::vector<IterationRecord> &records);

// ---------------------------------------------------------------------------------------------
// Stratified estimator over the number of visible BSs.
//
// Conditional metrics are dominated by rare deployments with few visible BSs, which plain
// sampling almost never draws at high BS density. Each stratum n >= 1 is simulated with exactly n
// visible BSs and the strata are recombined with weights P(N = n | N >= 1). Iterations go to a
// pilot pass over every stratum, then to strata in proportion to weight times pilot spread.

struct StratumSummary {
    unsigned n_visible = 0;
    double weight = 0.0;
    std::uint64_t iterations = 0;
    double blocked_fraction_mean = 0.0;
    double blocked_fraction_var = 0.0;
    double onset_rate_mean = 0.0;
    double onset_rate_var = 0.0;
    double blocked_s = 0.0;
    std::uint64_t onsets = 0;
};

struct StratifiedResult {
    // blocked_fraction and onset_rate are weight-combined. mean_duration_s averages the per-stratum
    // duration (blocked time over onsets) with the stratum weights, i.e. the mean over the BS-count
    // law of the per-deployment mean blockage duration. Strata without any onset cannot contribute;
    // `duration_weight_covered` is the weight of the strata that did.
    BlockageMetrics conditional;
    double duration_weight_covered = 0.0;
    double tail_weight_dropped = 0.0;
    std::vector<StratumSummary> strata;
};

struct StratifiedOptions {
    unsigned pilot_per_stratum = 4;
    double tail_mass = 1e-6; // strata beyond this conditional Poisson tail are not simulated
};

StratifiedResult run_stratified_experiment(const SimConfig &config, const StratifiedOptions &options = {},
                                           unsigned threads = 0);

} // namespace mmblock::sim

#endif
