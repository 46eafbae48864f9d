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

#ifndef MMBLOCK_SCENARIO_HPP
#define MMBLOCK_SCENARIO_HPP

#include <numbers>

namespace mmblock {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Unit conversions used only at the I/O boundary. Everything inside the library is SI.
inline constexpr double kPerKm2ToPerM2 = 1e-6;
inline constexpr double degrees_to_radians(double deg) { return deg * kPi / 180.0; }
inline constexpr double radians_to_degrees(double rad) { return rad * 180.0 / kPi; }

// Physical and model parameters of one deployment scenario.
//
// The UE sits at the origin; base stations are candidate servers inside the disc of radius
// `disc_radius_m`. Blockers are points moving at `blocker_speed_mps`. Each blocker crossing
// holds a link blocked for an exponential time with rate `unblock_rate_per_s`.
//
// Defaults are the reference urban setting (R = 100 m, V = 1 m/s, h_B = 1.8 m, h_R = 1.4 m,
// h_T = 5 m, mean blockage 0.5 s, 60 degree self-blockage sector).
struct ScenarioParams {
    double disc_radius_m = 100.0;
    double bs_density_per_m2 = 1e-4;
    double blocker_density_per_m2 = 0.01;
    double blocker_speed_mps = 1.0;
    double blocker_height_m = 1.8;
    double ue_height_m = 1.4;
    double bs_height_m = 5.0;
    double unblock_rate_per_s = 2.0;
    double self_blockage_angle_rad = kPi / 3.0;

    // Throws InvalidParameter naming the first violated constraint.
    void validate() const;

    // (h_B - h_R) / (h_T - h_R); the fraction of a ground link a blocker can obstruct.
    double height_ratio() const;

    // p * lambda_T * pi * R^2: mean number of base stations outside the self-blockage sector.
    double mean_visible_bs() const;

    bool operator==(const ScenarioParams &) const = default;
};

} // namespace mmblock

#endif
