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

#include <cstdint>
#include <string_view>
#include <vector>

#include "mmwave/geometry.hpp"

namespace mmwave {

class RandomStream;

/// Body screen dimensions. Every body (user or random) is a w x h rectangle
/// facing the UE; `user_body_distance` is the UE-to-user-body spacing r_0.
struct BodyGeometry {
  double width = 0.4;
  double height_above_ue = 0.4;
  double user_body_distance = 0.3;

  void validate() const;
  friend bool operator==(const BodyGeometry&, const BodyGeometry&) = default;
};

/// A body in the plane. `orientation` is the azimuth, seen from the UE, of the
/// body's right-shoulder edge; the body shadows the azimuths in
/// [orientation, orientation + shadow_angle) counter-clockwise.
struct Body {
  Point2 position;
  double orientation = 0.0;
};

/// Body centred at `position` and turned towards the UE.
Body body_facing_ue(Point2 ue, Point2 position, double width);

/// The user's own body at distance r_0 whose right-shoulder edge points along `orientation`.
Body user_body(Point2 ue, double user_body_distance, double orientation, double width);

enum class BlockageState : std::uint8_t { Los = 0, Nlos = 1 };

std::string_view to_string(BlockageState state);

enum class BlockageMode { Analytic, ExplicitBodies };

struct BlockageModel {
  BodyGeometry geometry;
  double rb_density = 0.0;  ///< random bodies per m^2
  BlockageMode mode = BlockageMode::Analytic;
  double quadrature_tolerance = 1e-8;

  void validate() const;
  /// Number of random bodies in a square venue, round(density * side^2).
  std::int64_t random_body_count(double side) const;
  friend bool operator==(const BlockageModel&, const BlockageModel&) = default;
};

/// Horizontal angle subtended by a body of width `w_b` at distance `r`; pi at r = 0.
double shadow_angle(double r, double w_b);

/// Inverse of shadow_angle on (0, pi].
double inverse_shadow_angle(double phi, double w_b);

/// Radius around the UE inside which an AP always clears a body at `r_body`.
double free_zone_radius(double r_body, double ap_height, double body_height);

/// Full 3-D test: the AP is outside the body's free zone and its azimuth falls
/// inside the body's shadow.
bool is_blocked_geometric(Point2 ap_pos, double d_a, Point2 ue_pos, const Body& body, const BodyGeometry& geometry,
                          double ap_height);

/// Same test with the UE-to-body distance supplied, so a body placed at a
/// nominal distance is judged at exactly that distance.
bool is_blocked_geometric(Point2 ap_pos, double d_a, Point2 ue_pos, const Body& body, double body_distance,
                          const BodyGeometry& geometry, double ap_height);

/// Density of the distance between two uniform points in a square, truncated to (0, side].
double distance_pdf_square(double r, double side);

/// Density of the random-body shadowing angle over (shadow_angle(side), pi].
double shadow_angle_pdf(double phi, double w_b, double side);

/// Self-body blockage probability.
double p_self(double d_a, const BodyGeometry& geometry, double ap_height);

/// Probability that one uniformly placed random body blocks an AP at horizontal
/// distance `d_a`, by adaptive quadrature over the shadowing angle.
double p_random_one(double d_a, const BodyGeometry& geometry, double ap_height, double side, double tolerance);

/// Probability that the user body or any of the N_B random bodies blocks the AP.
double p_blocked(double d_a, const BlockageModel& model, double ap_height, double side);

/// Independent Bernoulli draw of the blockage state (analytic mode only).
BlockageState sample_blockage_state(double d_a, const BlockageModel& model, double ap_height, double side,
                                    RandomStream& rng);

/// p_blocked tabulated over [0, max_distance] for the trial loop. The
/// random-body factor (1 - p_1)^N_B is built by accumulating the quadrature
/// between consecutive grid nodes and interpolated linearly; the self-body
/// step is applied exactly.
class BlockageProfile {
 public:
  BlockageProfile(const BlockageModel& model, double ap_height, double side, double max_distance,
                  double step = 0.01);

  double operator()(double d_a) const {
    double clear_random = 1.0;
    if (!no_random_.empty()) {
      const double x = d_a / step_;
      auto k = static_cast<std::size_t>(x);
      if (k + 1 >= no_random_.size()) {
        clear_random = no_random_.back();
      } else {
        const double t = x - static_cast<double>(k);
        clear_random = no_random_[k] + t * (no_random_[k + 1] - no_random_[k]);
      }
    }
    const double self = d_a > self_threshold_ ? self_probability_ : 0.0;
    return 1.0 - clear_random * (1.0 - self);
  }

 private:
  double step_;
  double self_threshold_;
  double self_probability_;
  std::vector<double> no_random_;  ///< (1 - p_1(k * step))^N_B
};

}  // namespace mmwave
