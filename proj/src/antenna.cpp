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

#include "mmwave/antenna.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "mmwave/geometry.hpp"

namespace mmwave {

namespace {

void check_beamwidth(double beamwidth) {
  if (!(beamwidth > 0.0) || beamwidth > kTwoPi) {
    throw std::invalid_argument("beamwidth must lie in (0, 2*pi] rad, got " + std::to_string(beamwidth));
  }
}

void check_projection_inputs(double height, double beamwidth, const char* what) {
  if (!(height > 0.0)) throw std::invalid_argument(std::string(what) + ": AP height must be positive");
  if (!(beamwidth > 0.0) || beamwidth > kPi) {
    throw std::invalid_argument(std::string(what) + ": beamwidth must lie in (0, pi] rad, got " +
                                std::to_string(beamwidth));
  }
}

}  // namespace

double main_lobe_gain(double beamwidth, double side_lobe_gain) {
  check_beamwidth(beamwidth);
  if (!(side_lobe_gain > 0.0 && side_lobe_gain < 1.0)) {
    throw std::invalid_argument("side-lobe gain must lie in (0, 1), got " + std::to_string(side_lobe_gain));
  }
  const double c = std::cos(beamwidth / 2.0);
  return (2.0 - side_lobe_gain * (1.0 + c)) / (1.0 - c);
}

AntennaPattern::AntennaPattern(double beamwidth, double side_lobe_gain)
    : beamwidth_(beamwidth), side_lobe_gain_(side_lobe_gain), main_lobe_gain_(mmwave::main_lobe_gain(beamwidth, side_lobe_gain)) {}

double ap_illumination_radius(double ap_height, double ap_beamwidth) {
  check_projection_inputs(ap_height, ap_beamwidth, "AP illumination radius");
  if (ap_beamwidth == kPi) return std::numeric_limits<double>::infinity();
  return ap_height * std::tan(ap_beamwidth / 2.0);
}

double ue_bound_distance(double ap_height, double ue_beamwidth) {
  check_projection_inputs(ap_height, ue_beamwidth, "UE bound distance");
  if (ue_beamwidth < kMinUeBeamwidth) {
    throw std::invalid_argument("UE beamwidth below the pencil-beam limit of 1e-6 rad");
  }
  if (ue_beamwidth == kPi) return 0.0;
  return ap_height / std::tan(ue_beamwidth / 2.0);
}

ApGainRule::ApGainRule(const AntennaPattern& pattern, double ap_height)
    : radius_(pattern.beamwidth() >= kPi ? std::numeric_limits<double>::infinity()
                                         : ap_illumination_radius(ap_height, pattern.beamwidth())),
      main_(pattern.main_lobe_gain()),
      side_(pattern.side_lobe_gain()) {
  if (!(ap_height > 0.0)) throw std::invalid_argument("AP height must be positive");
}

UeGainRule::UeGainRule(const AntennaPattern& pattern, double ap_height)
    : half_width_(pattern.beamwidth() / 2.0),
      omnidirectional_(pattern.beamwidth() >= kTwoPi),
      main_(pattern.main_lobe_gain()),
      side_(pattern.side_lobe_gain()) {
  if (!(ap_height > 0.0)) throw std::invalid_argument("AP height must be positive");
  if (pattern.beamwidth() >= kPi) {
    // The cone reaches the UE plane: every AP is in the unbounded regime.
    bound_distance_ = 0.0;
    bounded_radius_ = std::numeric_limits<double>::infinity();
  } else {
    bound_distance_ = ue_bound_distance(ap_height, pattern.beamwidth());
    bounded_radius_ = ap_height * std::tan(half_width_);
  }
}

double UeGainRule::operator()(double d_a, double theta_a, double serving_orientation) const {
  if (omnidirectional_) return main_;
  if (d_a < bound_distance_) return d_a <= bounded_radius_ ? main_ : side_;
  return std::abs(wrap_pi(theta_a - serving_orientation)) < half_width_ ? main_ : side_;
}

double UeGainRule::towards(double d_a) const {
  if (omnidirectional_) return main_;
  if (d_a < bound_distance_) return d_a <= bounded_radius_ ? main_ : side_;
  return main_;
}

double ap_gain(double d_a, const AntennaPattern& ap_pattern, double ap_height) {
  if (!(d_a >= 0.0)) throw std::invalid_argument("horizontal distance must be non-negative");
  return ApGainRule(ap_pattern, ap_height)(d_a);
}

double ue_gain(double d_a, double theta_a, const BeamState& beam, const AntennaPattern& ue_pattern,
               double ap_height) {
  if (!(d_a >= 0.0)) throw std::invalid_argument("horizontal distance must be non-negative");
  return UeGainRule(ue_pattern, ap_height)(d_a, theta_a, beam.serving_orientation);
}

}  // namespace mmwave
