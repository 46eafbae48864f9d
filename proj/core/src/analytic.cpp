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

#include <cmath>

namespace mmblock::analytic {

namespace {

void require_valid(const ScenarioParams &params) { params.validate(); }

void require_coverage_possible(double mean_visible)
{
    if (!(mean_visible > 0.0))
        throw UndefinedConditional("coverage probability is zero; conditional metric undefined");
}

// Above this mean count e^{-M} Ei(M) is summed as a Poisson-weighted 1/n series instead,
// which stays finite where Ei itself overflows.
constexpr double kPoissonDurationSwitch = 50.0;

double poisson_mean_inverse(double mean)
{
    // sum_{n>=1} e^{-M} M^n / (n! n), walked outward from the mode so nothing overflows.
    const auto mode = static_cast<long>(std::floor(mean));
    const auto log_pmf = [mean](long n) {
        return -mean + static_cast<double>(n) * std::log(mean) - std::lgamma(static_cast<double>(n) + 1.0);
    };
    double sum = 0.0;
    const long start = mode < 1 ? 1 : mode;
    double pmf = std::exp(log_pmf(start));
    for (long n = start; n < start + 100000; ++n) {
        const double term = pmf / static_cast<double>(n);
        sum += term;
        if (n > mean && term < 1e-17 * sum)
            break;
        pmf *= mean / static_cast<double>(n + 1);
    }
    pmf = std::exp(log_pmf(start));
    for (long n = start - 1; n >= 1; --n) {
        pmf *= static_cast<double>(n + 1) / mean;
        const double term = pmf / static_cast<double>(n);
        sum += term;
        if (term < 1e-17 * sum)
            break;
    }
    return sum;
}

} // namespace

double effective_link_length(const ScenarioParams &params, double r)
{
    require_valid(params);
    if (!(r >= 0.0) || r > params.disc_radius_m)
        throw InvalidParameter("link length must lie in [0, disc_radius_m]");
    return r * params.height_ratio();
}

double blockage_rate_constant(const ScenarioParams &params)
{
    require_valid(params);
    return 2.0 / kPi * params.blocker_density_per_m2 * params.blocker_speed_mps * params.height_ratio();
}

double link_blockage_rate(double c, double r)
{
    if (!(c >= 0.0) || !(r >= 0.0))
        throw InvalidParameter("blockage rate constant and link length must be non-negative");
    return c * r;
}

double multi_blocker_probability(double alpha, double mu)
{
    if (!(mu > 0.0))
        throw InvalidParameter("unblock rate must be positive");
    if (!(alpha >= 0.0))
        throw InvalidParameter("blockage rate must be non-negative");
    const double rho = alpha / mu;
    // 1 - e^{-rho} - rho e^{-rho}, written to keep accuracy for small rho.
    return -std::expm1(-rho) - rho * std::exp(-rho);
}

double visibility_probability(double omega)
{
    if (!(omega >= 0.0) || omega > kTwoPi)
        throw InvalidParameter("self-blockage angle must lie in [0, 2*pi]");
    return 1.0 - omega / kTwoPi;
}

double visible_bs_pmf(const ScenarioParams &params, unsigned n)
{
    require_valid(params);
    const double mean = params.mean_visible_bs();
    if (mean == 0.0)
        return n == 0 ? 1.0 : 0.0;
    const double k = static_cast<double>(n);
    return std::exp(-mean + k * std::log(mean) - std::lgamma(k + 1.0));
}

double coverage_probability(const ScenarioParams &params)
{
    require_valid(params);
    return -std::expm1(-params.mean_visible_bs());
}

double a_factor_from_x(double x)
{
    if (!(x >= 0.0))
        throw InvalidParameter("R*C/mu must be non-negative");
    if (x < kAFactorSeriesThreshold)
        return 1.0 - 2.0 * x / 3.0 + 0.5 * x * x;
    return 2.0 / x - 2.0 / (x * x) * std::log1p(x);
}

double a_factor(const ScenarioParams &params) { return derive(params).a_factor; }

double a_factor_leading(double x) { return 1.0 - 2.0 * x / 3.0; }

DerivedConstants derive(const ScenarioParams &params)
{
    DerivedConstants d;
    d.c_per_m_s = blockage_rate_constant(params);
    d.p_visible = visibility_probability(params.self_blockage_angle_rad);
    d.dimensionless_x = params.disc_radius_m * d.c_per_m_s / params.unblock_rate_per_s;
    d.a_factor = a_factor_from_x(d.dimensionless_x);
    return d;
}

double all_blocked_prob_given_links(std::span<const double> alphas, double mu)
{
    if (!(mu > 0.0))
        throw InvalidParameter("unblock rate must be positive");
    double prob = 1.0;
    for (double alpha : alphas) {
        if (!(alpha >= 0.0))
            throw InvalidParameter("blockage rates must be non-negative");
        const double rho = alpha / mu;
        prob *= rho / (1.0 + rho);
    }
    return prob;
}

double blockage_prob_given_n(double a, unsigned n)
{
    if (!(a >= 0.0 && a <= 1.0))
        throw InvalidParameter("a must lie in [0, 1]");
    return std::pow(1.0 - a, static_cast<double>(n));
}

double blockage_frequency_given_n(double a, unsigned n, double mu)
{
    if (!(mu > 0.0))
        throw InvalidParameter("unblock rate must be positive");
    return static_cast<double>(n) * mu * blockage_prob_given_n(a, n);
}

double blockage_duration_given_n(unsigned n, double mu)
{
    if (n == 0)
        throw InvalidParameter("all-blocked duration needs at least one link");
    if (!(mu > 0.0))
        throw InvalidParameter("unblock rate must be positive");
    return 1.0 / (static_cast<double>(n) * mu);
}

double marginal_blockage_probability(const ScenarioParams &params)
{
    const DerivedConstants d = derive(params);
    return std::exp(-d.a_factor * params.mean_visible_bs());
}

double conditional_blockage_probability(const ScenarioParams &params)
{
    const DerivedConstants d = derive(params);
    const double m = params.mean_visible_bs();
    require_coverage_possible(m);
    // e^{-aM}(1 - e^{-(1-a)M}) / (1 - e^{-M})
    return std::exp(-d.a_factor * m) * -std::expm1(-(1.0 - d.a_factor) * m) / -std::expm1(-m);
}

double expected_blockage_frequency(const ScenarioParams &params)
{
    const DerivedConstants d = derive(params);
    const double m = params.mean_visible_bs();
    return params.unblock_rate_per_s * (1.0 - d.a_factor) * m * std::exp(-d.a_factor * m);
}

double expected_blockage_frequency_conditional(const ScenarioParams &params)
{
    const double m = params.mean_visible_bs();
    require_coverage_possible(m);
    return expected_blockage_frequency(params) / -std::expm1(-m);
}

double ei_series(double x)
{
    if (!(x >= 0.0))
        throw InvalidParameter("Ei series argument must be non-negative");
    if (x == 0.0)
        return 0.0;
    // power tracks x^n / n!
    double power = x;
    double sum = x;
    for (int n = 2; n <= kEiMaxTerms; ++n) {
        power *= x / n;
        const double term = power / n;
        sum += term;
        if (n > x && term < kEiRelativeTolerance * sum)
            return sum;
    }
    throw SolverFailure("Ei series did not converge within the term cap");
}

double expected_blockage_duration_conditional(const ScenarioParams &params)
{
    require_valid(params);
    const double m = params.mean_visible_bs();
    require_coverage_possible(m);
    const double mu = params.unblock_rate_per_s;
    const double weighted = m <= kPoissonDurationSwitch ? std::exp(-m) * ei_series(m) : poisson_mean_inverse(m);
    return weighted / (mu * -std::expm1(-m));
}

double expected_blockage_duration_approx(const ScenarioParams &params)
{
    require_valid(params);
    const double m = params.mean_visible_bs();
    require_coverage_possible(m);
    const double mu = params.unblock_rate_per_s;
    return 1.0 / (mu * m) + 1.0 / (mu * m * m);
}

} // namespace mmblock::analytic
