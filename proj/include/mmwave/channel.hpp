// SPDX-License-Identifier: Apache-2.0
//
// Copyright 2026 The mmwave-indoor Authors
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

#pragma once

#include <span>

#include "mmwave/antenna.hpp"
#include "mmwave/blockage.hpp"

namespace mmwave {

class RandomStream;

/// Propagation parameters for one blockage state.
struct StateParams {
  double pl_exponent = 2.0;      ///< path-loss exponent
  double pl_intercept_db = 0.0;  ///< loss at 1 m, dB
  double shadow_shape = 1.0;     ///< Gamma shape
  double shadow_scale = 1.0;     ///< Gamma scale
  double nakagami_m = 1.0;       ///< small-scale fading parameter

  void validate() const;
  friend bool operator==(const StateParams&, const StateParams&) = default;
};

struct ChannelParams {
  StateParams los;
  StateParams nlos;

  const StateParams& operator[](BlockageState state) const { return state == BlockageState::Los ? los : nlos; }
  void validate() const;
  friend bool operator==(const ChannelParams&, const ChannelParams&) = default;
};

/// Car-park measurements, UE held in hand.
ChannelParams car_park_hand();
/// Car-park measurements, UE in a pocket.
ChannelParams car_park_pocket();

struct RadioConfig {
  double tx_power_dbm = 20.0;
  double bandwidth_hz = 2e9;
  double carrier_hz = 60e9;
  double noise_figure_db = 9.0;
  double sinr_threshold_db = 5.0;

  void validate() const;
  friend bool operator==(const RadioConfig&, const RadioConfig&) = default;
};

/// Thermal noise density at 290 K.
inline constexpr double kThermalNoiseDbmPerHz = -174.0;

double db_to_linear(double db);
double linear_to_db(double linear);
double dbm_to_mw(double dbm);

/// One AP-to-UE link with every factor of the received-power product.
struct LinkSample {
  BlockageState state = BlockageState::Los;
  double ap_gain = 1.0;
  double ue_gain = 1.0;
  double path_gain = 1.0;
  double shadow_gain = 1.0;
  double fading_gain = 1.0;
  double rx_power_mw = 0.0;
};

/// Linear path gain 10^(-l/10) * r^(-nu) at 3-D distance `r_a`.
double path_gain(double r_a, BlockageState state, const ChannelParams& params);

/// Gamma(shape, scale) large-scale shadowing gain.
double sample_shadowing(BlockageState state, const ChannelParams& params, RandomStream& rng);

/// Nakagami-m power gain: Gamma(m, 1/m), unit mean.
double sample_fading(BlockageState state, const ChannelParams& params, RandomStream& rng);

double noise_power_mw(const RadioConfig& radio);

/// Draws shadowing then fading from `rng` and assembles the received power.
LinkSample received_power(double d_a, double theta_a, BlockageState state, const BeamState& beam,
                          const AntennaPattern& ap_pattern, const AntennaPattern& ue_pattern,
                          const ChannelParams& params, const RadioConfig& radio, double ap_height, RandomStream& rng);

double sinr(const LinkSample& serving, std::span<const LinkSample> interferers, double noise_mw);

}  // namespace mmwave
