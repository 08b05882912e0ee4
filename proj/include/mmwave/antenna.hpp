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

namespace mmwave {

/// Two-level cone-bulb directivity pattern: gain `main_lobe_gain` inside the
/// beamwidth cone, `side_lobe_gain` elsewhere, normalised so the pattern
/// averages to unity over the sphere. Gains are linear power ratios.
class AntennaPattern {
 public:
  AntennaPattern(double beamwidth, double side_lobe_gain);

  double beamwidth() const { return beamwidth_; }
  double side_lobe_gain() const { return side_lobe_gain_; }
  double main_lobe_gain() const { return main_lobe_gain_; }

  friend bool operator==(const AntennaPattern&, const AntennaPattern&) = default;

 private:
  double beamwidth_;
  double side_lobe_gain_;
  double main_lobe_gain_;
};

/// UE beam steering state: the UE main lobe points at the serving AP.
struct BeamState {
  double serving_orientation = 0.0;  ///< azimuth UE -> serving AP, [0, 2*pi)
  double serving_distance = 0.0;     ///< horizontal UE -> serving AP distance
};

/// Smallest UE beamwidth accepted by the projection formulas (pencil-beam limit).
inline constexpr double kMinUeBeamwidth = 1e-6;

double main_lobe_gain(double beamwidth, double side_lobe_gain);

/// Radius of the floor disc lit by a downward AP main lobe. A beamwidth of
/// exactly pi lights the whole floor and yields +infinity.
double ap_illumination_radius(double ap_height, double ap_beamwidth);

/// Serving distance beyond which the UE main-lobe footprint on the ceiling
/// becomes an unbounded sector. A beamwidth of exactly pi yields 0.
double ue_bound_distance(double ap_height, double ue_beamwidth);

/// Transmit gain towards a UE at horizontal distance `d_a` from the AP.
double ap_gain(double d_a, const AntennaPattern& ap_pattern, double ap_height);

/// Receive gain for an AP at horizontal distance `d_a` and azimuth `theta_a`
/// while the UE beam is steered per `beam`.
double ue_gain(double d_a, double theta_a, const BeamState& beam, const AntennaPattern& ue_pattern,
               double ap_height);

/// Precomputed transmit-gain rule; evaluation is a single comparison.
class ApGainRule {
 public:
  ApGainRule(const AntennaPattern& pattern, double ap_height);

  double operator()(double d_a) const { return d_a <= radius_ ? main_ : side_; }
  double radius() const { return radius_; }

 private:
  double radius_;
  double main_;
  double side_;
};

/// Precomputed receive-gain rule.
///
/// Bounded regime (d_a < d_U): main lobe iff d_a <= r_m^U.
/// Unbounded regime (d_a >= d_U): main lobe iff the AP azimuth lies strictly
/// within half a beamwidth of the serving azimuth (shortest arc).
class UeGainRule {
 public:
  UeGainRule(const AntennaPattern& pattern, double ap_height);

  double operator()(double d_a, double theta_a, double serving_orientation) const;

  /// Gain the UE would apply to an AP if it steered towards that AP.
  double towards(double d_a) const;

  double bound_distance() const { return bound_distance_; }
  double bounded_radius() const { return bounded_radius_; }
  double half_width() const { return half_width_; }
  double main() const { return main_; }
  double side() const { return side_; }

 private:
  double bound_distance_;
  double bounded_radius_;
  double half_width_;
  bool omnidirectional_;
  double main_;
  double side_;
};

}  // namespace mmwave
