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

#ifndef MMBLOCK_ANALYTIC_HPP
#define MMBLOCK_ANALYTIC_HPP

#include "mmblock/scenario.hpp"

#include <span>

// Closed-form blockage metrics for a UE served by every visible base station in a disc.
//
// Notation used in comments: x = R*C/mu, M = p*lambda_T*pi*R^2 (mean visible BS count),
// a = per-BS probability of being unblocked averaged over the BS distance law.
namespace mmblock::analytic {

struct DerivedConstants {
    double c_per_m_s = 0.0;      // blockage rate per metre of link
    double p_visible = 1.0;      // probability a BS is outside the self-blockage sector
    double a_factor = 1.0;
    double dimensionless_x = 0.0; // R*C/mu
};

// Below this x the closed form for `a` loses digits to cancellation and the series is used.
inline constexpr double kAFactorSeriesThreshold = 1e-4;

// Ei series truncation: stop once a term falls below this fraction of the running sum.
inline constexpr double kEiRelativeTolerance = 1e-14;
inline constexpr int kEiMaxTerms = 500;

double effective_link_length(const ScenarioParams &params, double r);

// C = (2/pi) * lambda_B * V * (h_B - h_R)/(h_T - h_R), in 1/(m s).
double blockage_rate_constant(const ScenarioParams &params);

// Blocker arrival rate on a link of ground length r: alpha = C * r.
double link_blockage_rate(double c, double r);

// Probability that two or more blockers obstruct one link at once, 1 - e^{-rho}(1 + rho)
// with rho = alpha/mu (M/M/inf occupancy).
double multi_blocker_probability(double alpha, double mu);

// p = 1 - omega/(2 pi).
double visibility_probability(double omega);

// Poisson pmf of the number of visible base stations.
double visible_bs_pmf(const ScenarioParams &params, unsigned n);

// P(C) = 1 - e^{-M}.
double coverage_probability(const ScenarioParams &params);

// a(x) = 2/x - (2/x^2) log(1 + x); series 1 - 2x/3 + x^2/2 for small x. a(0) = 1.
double a_factor_from_x(double x);
double a_factor(const ScenarioParams &params);

// Leading-order approximation 1 - 2x/3.
double a_factor_leading(double x);

DerivedConstants derive(const ScenarioParams &params);

// Stationary probability that every link in `alphas` is blocked: prod rho_i/(1 + rho_i).
// An empty set returns 1 (no visible BS means the UE is blocked).
double all_blocked_prob_given_links(std::span<const double> alphas, double mu);

// P(B | N = n) = (1 - a)^n.
double blockage_prob_given_n(double a, unsigned n);

// E[zeta_B | N = n] = n mu (1 - a)^n.
double blockage_frequency_given_n(double a, unsigned n, double mu);

// E[T_B | N = n] = 1/(n mu). Requires n >= 1.
double blockage_duration_given_n(unsigned n, double mu);

// P(B) = e^{-a M}.
double marginal_blockage_probability(const ScenarioParams &params);

// P(B|C) = (e^{-a M} - e^{-M}) / (1 - e^{-M}). Throws UndefinedConditional when M = 0.
double conditional_blockage_probability(const ScenarioParams &params);

// E[zeta_B] = mu (1 - a) M e^{-a M}, blockage onsets per second.
double expected_blockage_frequency(const ScenarioParams &params);
double expected_blockage_frequency_conditional(const ScenarioParams &params);

// sum_{n>=1} x^n/(n n!) = integral_0^x (e^t - 1)/t dt.
double ei_series(double x);

// E[T_B|C] = e^{-M} Ei(M) / (mu (1 - e^{-M})).
double expected_blockage_duration_conditional(const ScenarioParams &params);

// High-density expansion of the conditional duration, E[1/N] ~ 1/M + 1/M^2 scaled by 1/mu.
double expected_blockage_duration_approx(const ScenarioParams &params);

} // namespace mmblock::analytic

#endif
