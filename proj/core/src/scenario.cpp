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

#include "mmblock/scenario.hpp"

#include "mmblock/errors.hpp"

#include <cmath>
#include <string>

namespace mmblock {

namespace {

void require(bool ok, const char *what)
{
    if (!ok)
        throw InvalidParameter(what);
}

} // namespace

void ScenarioParams::validate() const
{
    require(std::isfinite(disc_radius_m) && disc_radius_m > 0.0, "disc_radius_m must be positive");
    require(std::isfinite(bs_density_per_m2) && bs_density_per_m2 >= 0.0,
            "bs_density_per_m2 must be non-negative");
    require(std::isfinite(blocker_density_per_m2) && blocker_density_per_m2 >= 0.0,
            "blocker_density_per_m2 must be non-negative");
    require(std::isfinite(blocker_speed_mps) && blocker_speed_mps >= 0.0,
            "blocker_speed_mps must be non-negative");
    require(std::isfinite(unblock_rate_per_s) && unblock_rate_per_s > 0.0,
            "unblock_rate_per_s must be positive");
    require(std::isfinite(ue_height_m) && std::isfinite(blocker_height_m) && std::isfinite(bs_height_m),
            "heights must be finite");
    require(ue_height_m < blocker_height_m, "ue_height_m must be below blocker_height_m");
    require(blocker_height_m < bs_height_m, "blocker_height_m must be below bs_height_m");
    require(self_blockage_angle_rad >= 0.0 && self_blockage_angle_rad <= kTwoPi,
            "self_blockage_angle_rad must lie in [0, 2*pi]");
}

double ScenarioParams::height_ratio() const
{
    return (blocker_height_m - ue_height_m) / (bs_height_m - ue_height_m);
}

double ScenarioParams::mean_visible_bs() const
{
    const double p = 1.0 - self_blockage_angle_rad / kTwoPi;
    return p * bs_density_per_m2 * kPi * disc_radius_m * disc_radius_m;
}

} // namespace mmblock
