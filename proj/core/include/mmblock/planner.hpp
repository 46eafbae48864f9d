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

#ifndef MMBLOCK_PLANNER_HPP
#define MMBLOCK_PLANNER_HPP

#include "mmblock/scenario.hpp"

#include <span>
#include <string_view>
#include <vector>

// Inverse design: the BS density a deployment needs to keep blockage below a target.
namespace mmblock::planner {

enum class Conditioning { Marginal, Conditional };

std::string_view to_string(Conditioning c);

struct QosTarget {
    double max_blockage_prob = 1e-5;
    Conditioning conditioning = Conditioning::Conditional;

    void validate() const;
};

inline constexpr double kBisectionRelativeTolerance = 1e-9;

struct DensityPlan {
    Conditioning conditioning = Conditioning::Conditional;
    double required_density_per_m2 = 0.0;
    // -ln(P)(1 + 2x/3)/(p pi R^2), the linearized marginal requirement.
    double linear_approx_per_m2 = 0.0;
    // -ln(P)/(p pi R^2): what coverage alone needs when blockers are absent.
    double coverage_bound_per_m2 = 0.0;
};

// The scenario's own bs_density_per_m2 is ignored.
//
// Marginal targets use the closed form -ln(P)/(a p pi R^2). Conditional targets bisect
// P(B|C) on (0, marginal density], since P(B|C) <= P(B) at every density. When the target is
// at or above the low-density limit 1 - a of P(B|C), every positive density satisfies it and
// the required density is reported as 0.
//
// Throws InfeasibleTarget when no density helps (everything self-blocked).
DensityPlan min_bs_density(const ScenarioParams &scenario, const QosTarget &target);

enum class SweptParameter { BlockerDensity, BsHeight };

std::string_view to_string(SweptParameter p);

struct TradeoffPoint {
    double independent_value = 0.0;
    double required_bs_density_per_m2 = 0.0;
    double linear_approx_per_m2 = 0.0;
};

struct TradeoffCurve {
    SweptParameter swept = SweptParameter::BlockerDensity;
    QosTarget target;
    std::vector<TradeoffPoint> points;
};

TradeoffCurve density_vs_blocker_density(const ScenarioParams &scenario, std::span<const double> blocker_densities,
                                         const QosTarget &target);

// Throws InvalidParameter for any height at or below the blocker height.
TradeoffCurve height_density_tradeoff(const ScenarioParams &scenario, std::span<const double> bs_heights,
                                      const QosTarget &target);

} // namespace mmblock::planner

#endif
