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

#ifndef MMBLOCK_MARKOV_HPP
#define MMBLOCK_MARKOV_HPP

#include "mmblock/timeline.hpp"

#include <cstdint>
#include <vector>

// Exact small-n references for the multi-link blocking model.
namespace mmblock::markov {

// Continuous-time chain over subsets of blocked links.
//
// State s is a bitmask: bit i set means link i is blocked. From s, link i becomes blocked at
// rate alphas[i] when its bit is clear and recovers at rate mu when set.
class BlockingChain {
public:
    static constexpr unsigned kMaxLinks = 16;
    static constexpr unsigned kMaxDenseLinks = 10;

    BlockingChain(std::vector<double> alphas, double mu);

    unsigned n_links() const { return static_cast<unsigned>(alphas_.size()); }
    std::size_t n_states() const { return std::size_t{1} << alphas_.size(); }
    const std::vector<double> &alphas() const { return alphas_; }
    double mu() const { return mu_; }

    // Total rate of leaving state s.
    double exit_rate(std::uint32_t state) const;

private:
    std::vector<double> alphas_;
    double mu_;
};

// Solves global balance pi Q = 0, sum(pi) = 1 with a dense LU factorization.
// Throws SolverFailure for more than kMaxDenseLinks links or a numerically singular system.
std::vector<double> stationary_distribution(const BlockingChain &chain);

// Closed product form: pi(s) = prod_{i in s} rho_i / prod_i (1 + rho_i).
std::vector<double> product_form_distribution(const BlockingChain &chain);

// Dense solve where affordable, product form beyond.
std::vector<double> stationary_distribution_auto(const BlockingChain &chain);

// P_k = sum over states with k blocked links, k = 0..n.
std::vector<double> aggregate_k_blocked(const BlockingChain &chain, const std::vector<double> &dist);

// Max over states of |(pi Q)_s|, for checking a candidate distribution.
double balance_residual(const BlockingChain &chain, const std::vector<double> &dist);

// Max over linked state pairs of |pi(s) q(s,t) - pi(t) q(t,s)|.
double detailed_balance_residual(const BlockingChain &chain, const std::vector<double> &dist);

// One on/off link: unblocked periods ~ Exp(alpha), blocked periods ~ Exp(mu), starting
// unblocked at t = 0 and truncated at the horizon.
BlockageTimeline sample_renewal_timeline(double alpha, double mu, double horizon_s, std::uint64_t seed);

} // namespace mmblock::markov

#endif
