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

#include "mmwave/channel.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "mmwave/geometry.hpp"
#include "mmwave/random.hpp"

namespace mmwave {

void StateParams::validate() const {
  if (!(pl_exponent >= 0.0)) throw std::invalid_argument("path-loss exponent must be non-negative");
  if (!std::isfinite(pl_intercept_db)) throw std::invalid_argument("path-loss intercept must be finite");
  if (!(shadow_shape > 0.0)) throw std::invalid_argument("shadowing shape must be positive");
  if (!(shadow_scale > 0.0)) throw std::invalid_argument("shadowing scale must be positive");
  if (!(nakagami_m >= 0.5)) throw std::invalid_argument("Nakagami m must be at least 0.5");
}

void ChannelParams::validate() const {
  los.validate();
  nlos.validate();
}

ChannelParams car_park_hand() {
  return {.los = {1.72, 63.4, 4.48, 0.27, 3.02}, .nlos = {1.94, 65.3, 1.18, 1.52, 4.68}};
}

ChannelParams car_park_pocket() {
  return {.los = {1.70, 59.1, 1.96, 0.75, 4.21}, .nlos = {0.61, 88.5, 2.80, 0.47, 2.46}};
}

void RadioConfig::validate() const {
  if (!std::isfinite(tx_power_dbm)) throw std::invalid_argument("transmit power must be finite");
  if (!(bandwidth_hz > 0.0)) throw std::invalid_argument("bandwidth must be positive");
  if (!(carrier_hz > 0.0)) throw std::invalid_argument("carrier frequency must be positive");
  if (!std::isfinite(noise_figure_db)) throw std::invalid_argument("noise figure must be finite");
  if (!std::isfinite(sinr_threshold_db)) throw std::invalid_argument("SINR threshold must be finite");
}

double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
double linear_to_db(double linear) { return 10.0 * std::log10(linear); }
double dbm_to_mw(double dbm) { return db_to_linear(dbm); }

double path_gain(double r_a, BlockageState state, const ChannelParams& params) {
  if (!(r_a > 0.0)) throw std::invalid_argument("3-D distance must be positive, got " + std::to_string(r_a));
  const StateParams& p = params[state];
  return db_to_linear(-p.pl_intercept_db) * std::pow(r_a, -p.pl_exponent);
}

double sample_shadowing(BlockageState state, const ChannelParams& params, RandomStream& rng) {
  const StateParams& p = params[state];
  return rng.gamma(p.shadow_shape, p.shadow_scale);
}

double sample_fading(BlockageState state, const ChannelParams& params, RandomStream& rng) {
  const double m = params[state].nakagami_m;
  return rng.gamma(m, 1.0 / m);
}

double noise_power_mw(const RadioConfig& radio) {
  return dbm_to_mw(kThermalNoiseDbmPerHz + 10.0 * std::log10(radio.bandwidth_hz) + radio.noise_figure_db);
}

LinkSample received_power(double d_a, double theta_a, BlockageState state, const BeamState& beam,
                          const AntennaPattern& ap_pattern, const AntennaPattern& ue_pattern,
                          const ChannelParams& params, const RadioConfig& radio, double ap_height, RandomStream& rng) {
  LinkSample link;
  link.state = state;
  link.ap_gain = ap_gain(d_a, ap_pattern, ap_height);
  link.ue_gain = ue_gain(d_a, theta_a, beam, ue_pattern, ap_height);
  link.path_gain = path_gain(euclidean_3d_distance(d_a, ap_height), state, params);
  link.shadow_gain = sample_shadowing(state, params, rng);
  link.fading_gain = sample_fading(state, params, rng);
  link.rx_power_mw = dbm_to_mw(radio.tx_power_dbm) * link.ap_gain * link.ue_gain * link.path_gain *
                     link.shadow_gain * link.fading_gain;
  return link;
}

double sinr(const LinkSample& serving, std::span<const LinkSample> interferers, double noise_mw) {
  if (!(noise_mw > 0.0)) throw std::invalid_argument("noise power must be positive");
  double interference = 0.0;
  for (const auto& link : interferers) interference += link.rx_power_mw;
  return serving.rx_power_mw / (noise_mw + interference);
}

}  // namespace mmwave
