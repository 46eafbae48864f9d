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

#include "mmblock/planner.hpp"

#include "mmblock/analytic.hpp"
#include "mmblock/errors.hpp"

#include <cmath>

namespace mmblock::planner {

std::string_view to_string(Conditioning c)
{
    return c == Conditioning::Marginal ? "marginal" : "conditional";
}

std::string_view to_string(SweptParameter p)
{
    return p == SweptParameter::BlockerDensity ? "blocker_density_per_m2" : "bs_height_m";
}

void QosTarget::validate() const
{
    if (!(max_blockage_prob > 0.0 && max_blockage_prob < 1.0))
        throw InvalidParameter("target blockage probability must lie in (0, 1)");
}

DensityPlan min_bs_density(const ScenarioParams &scenario, const QosTarget &target)
{
    target.validate();
    ScenarioParams s = scenario;
    s.bs_density_per_m2 = 0.0;
    const analytic::DerivedConstants d = analytic::derive(s);

    const double area = kPi * s.disc_radius_m * s.disc_radius_m;
    if (!(d.p_visible > 0.0))
        throw InfeasibleTarget("self-blockage covers the whole disc; no BS density meets the target");

    const double neg_log = -std::log(target.max_blockage_prob);
    DensityPlan plan;
    plan.conditioning = target.conditioning;
    plan.coverage_bound_per_m2 = neg_log / (d.p_visible * area);
    plan.linear_approx_per_m2 = neg_log * (1.0 + 2.0 * d.dimensionless_x / 3.0) / (d.p_visible * area);
    const double marginal = neg_log / (d.a_factor * d.p_visible * area);

    if (target.conditioning == Conditioning::Marginal) {
        plan.required_density_per_m2 = marginal;
        return plan;
    }

    if (target.max_blockage_prob >= 1.0 - d.a_factor) {
        plan.required_density_per_m2 = 0.0;
        return plan;
    }

    auto conditional_at = [&](double density) {
        s.bs_density_per_m2 = density;
        return analytic::conditional_blockage_probability(s);
    };
    // P(B|C) decreases in density; at the marginal root it is already <= target.
    double lo = 0.0;
    double hi = marginal;
    for (int iter = 0; iter < 400 && hi - lo > kBisectionRelativeTolerance * hi; ++iter) {
        const double mid = 0.5 * (lo + hi);
        if (conditional_at(mid) > target.max_blockage_prob)
            lo = mid;
        else
            hi = mid;
    }
    plan.required_density_per_m2 = hi;
    return plan;
}

TradeoffCurve density_vs_blocker_density(const ScenarioParams &scenario, std::span<const double> blocker_densities,
                                         const QosTarget &target)
{
    TradeoffCurve curve;
    curve.swept = SweptParameter::BlockerDensity;
    curve.target = target;
    for (double lambda_b : blocker_densities) {
        ScenarioParams s = scenario;
        s.blocker_density_per_m2 = lambda_b;
        const DensityPlan plan = min_bs_density(s, target);
        curve.points.push_back({lambda_b, plan.required_density_per_m2, plan.linear_approx_per_m2});
    }
    return curve;
}

TradeoffCurve height_density_tradeoff(const ScenarioParams &scenario, std::span<const double> bs_heights,
                                      const QosTarget &target)
{
    TradeoffCurve curve;
    curve.swept = SweptParameter::BsHeight;
    curve.target = target;
    for (double h : bs_heights) {
        if (!(h > scenario.blocker_height_m))
            throw InvalidParameter("BS height must exceed the blocker height");
        ScenarioParams s = scenario;
        s.bs_height_m = h;
        const DensityPlan plan = min_bs_density(s, target);
        curve.points.push_back({h, plan.required_density_per_m2, plan.linear_approx_per_m2});
    }
    return curve;
}

} // namespace mmblock::planner
