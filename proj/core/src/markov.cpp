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

#include "mmblock/markov.hpp"

#include "mmblock/errors.hpp"
#include "mmblock/rng.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <bit>
#include <cmath>

namespace mmblock::markov {

BlockingChain::BlockingChain(std::vector<double> alphas, double mu) : alphas_(std::move(alphas)), mu_(mu)
{
    if (alphas_.empty() || alphas_.size() > kMaxLinks)
        throw InvalidParameter("blocking chain needs between 1 and 16 links");
    if (!(mu_ > 0.0) || !std::isfinite(mu_))
        throw InvalidParameter("unblock rate must be positive");
    for (double a : alphas_)
        if (!(a >= 0.0) || !std::isfinite(a))
            throw InvalidParameter("blockage rates must be non-negative");
}

double BlockingChain::exit_rate(std::uint32_t state) const
{
    double rate = 0.0;
    for (unsigned i = 0; i < n_links(); ++i)
        rate += (state >> i & 1U) ? mu_ : alphas_[i];
    return rate;
}

std::vector<double> stationary_distribution(const BlockingChain &chain)
{
    if (chain.n_links() > BlockingChain::kMaxDenseLinks)
        throw SolverFailure("dense stationary solve limited to 10 links");

    const auto n = static_cast<Eigen::Index>(chain.n_states());
    // Rows of A are the balance equations (Q^T pi = 0); the last is replaced by normalization.
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index s = 0; s < n; ++s) {
        const auto state = static_cast<std::uint32_t>(s);
        a(s, s) -= chain.exit_rate(state);
        for (unsigned i = 0; i < chain.n_links(); ++i) {
            const std::uint32_t bit = 1U << i;
            const auto t = static_cast<Eigen::Index>(state ^ bit);
            const double rate = (state & bit) ? chain.mu() : chain.alphas()[i];
            a(t, s) += rate;
        }
    }
    a.row(n - 1).setOnes();
    Eigen::VectorXd b = Eigen::VectorXd::Zero(n);
    b(n - 1) = 1.0;

    Eigen::FullPivLU<Eigen::MatrixXd> lu(a);
    if (!lu.isInvertible())
        throw SolverFailure("blocking chain generator is singular");
    const Eigen::VectorXd pi = lu.solve(b);
    if (!pi.allFinite())
        throw SolverFailure("stationary solve produced non-finite values");
    return {pi.data(), pi.data() + n};
}

std::vector<double> product_form_distribution(const BlockingChain &chain)
{
    const unsigned n = chain.n_links();
    std::vector<double> rho(n);
    double norm = 1.0;
    for (unsigned i = 0; i < n; ++i) {
        rho[i] = chain.alphas()[i] / chain.mu();
        norm *= 1.0 + rho[i];
    }
    std::vector<double> dist(chain.n_states());
    for (std::size_t s = 0; s < dist.size(); ++s) {
        double w = 1.0;
        for (unsigned i = 0; i < n; ++i)
            if (s >> i & 1U)
                w *= rho[i];
        dist[s] = w / norm;
    }
    return dist;
}

std::vector<double> stationary_distribution_auto(const BlockingChain &chain)
{
    if (chain.n_links() <= BlockingChain::kMaxDenseLinks)
        return stationary_distribution(chain);
    return product_form_distribution(chain);
}

std::vector<double> aggregate_k_blocked(const BlockingChain &chain, const std::vector<double> &dist)
{
    if (dist.size() != chain.n_states())
        throw InvalidParameter("distribution size does not match the chain");
    std::vector<double> pk(chain.n_links() + 1, 0.0);
    for (std::size_t s = 0; s < dist.size(); ++s)
        pk[static_cast<std::size_t>(std::popcount(static_cast<std::uint32_t>(s)))] += dist[s];
    return pk;
}

double balance_residual(const BlockingChain &chain, const std::vector<double> &dist)
{
    if (dist.size() != chain.n_states())
        throw InvalidParameter("distribution size does not match the chain");
    double worst = 0.0;
    for (std::uint32_t s = 0; s < dist.size(); ++s) {
        double inflow = 0.0;
        for (unsigned i = 0; i < chain.n_links(); ++i) {
            const std::uint32_t t = s ^ (1U << i);
            // t -> s flips link i: t blocked on i means recovery, otherwise a new blockage.
            inflow += dist[t] * ((t >> i & 1U) ? chain.mu() : chain.alphas()[i]);
        }
        worst = std::max(worst, std::abs(inflow - dist[s] * chain.exit_rate(s)));
    }
    return worst;
}

double detailed_balance_residual(const BlockingChain &chain, const std::vector<double> &dist)
{
    if (dist.size() != chain.n_states())
        throw InvalidParameter("distribution size does not match the chain");
    double worst = 0.0;
    for (std::uint32_t s = 0; s < dist.size(); ++s) {
        for (unsigned i = 0; i < chain.n_links(); ++i) {
            const std::uint32_t bit = 1U << i;
            if (s & bit)
                continue;
            const double up = dist[s] * chain.alphas()[i];
            const double down = dist[s | bit] * chain.mu();
            worst = std::max(worst, std::abs(up - down));
        }
    }
    return worst;
}

BlockageTimeline sample_renewal_timeline(double alpha, double mu, double horizon_s, std::uint64_t seed)
{
    if (!(horizon_s > 0.0))
        throw InvalidParameter("horizon must be positive");
    if (!(alpha >= 0.0) || !(mu > 0.0))
        throw InvalidParameter("renewal rates must satisfy alpha >= 0, mu > 0");
    if (alpha == 0.0)
        return BlockageTimeline(0.0, horizon_s);

    Rng rng = make_stream(seed, 0);
    std::exponential_distribution<double> up(alpha);
    std::exponential_distribution<double> down(mu);
    std::vector<Interval> blocked;
    double t = 0.0;
    while (true) {
        t += up(rng);
        if (t >= horizon_s)
            break;
        const double end = t + down(rng);
        blocked.push_back({t, std::min(end, horizon_s)});
        t = end;
        if (t >= horizon_s)
            break;
    }
    return BlockageTimeline::from_intervals(0.0, horizon_s, std::move(blocked));
}

} // namespace mmblock::markov
