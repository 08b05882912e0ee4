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

#include <cstddef>
#include <numbers>
#include <vector>

namespace mmwave {

class RandomStream;

/// Tolerance for every geometric comparison, in metres.
inline constexpr double kGeometryEpsilon = 1e-9;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend bool operator==(const Point2&, const Point2&) = default;
};

/// Square indoor venue spanning [0, side] x [0, side].
class Venue {
 public:
  explicit Venue(double side);

  double side() const { return side_; }
  double area() const { return side_ * side_; }
  Point2 centre() const { return {side_ / 2.0, side_ / 2.0}; }
  bool contains(Point2 p, double eps = kGeometryEpsilon) const;
  friend bool operator==(const Venue&, const Venue&) = default;

 private:
  double side_;
};

/// Ceiling-mounted APs on a hexagonal (triangular lattice) grid.
class Deployment {
 public:
  Deployment(std::vector<Point2> ap_positions, double inter_site_distance, double ap_height);

  const std::vector<Point2>& ap_positions() const { return ap_positions_; }
  std::size_t size() const { return ap_positions_.size(); }
  double inter_site_distance() const { return inter_site_distance_; }
  double ap_height() const { return ap_height_; }
  /// Area of one hexagonal cell, (sqrt(3)/2) * delta^2.
  double cell_area() const;

 private:
  std::vector<Point2> ap_positions_;
  double inter_site_distance_;
  double ap_height_;
};

/// Triangular lattice centred on the venue centre: rows delta*sqrt(3)/2 apart,
/// odd rows shifted by delta/2. Lattice points outside the venue are dropped.
Deployment generate_hex_grid(const Venue& venue, double delta, double ap_height);

Point2 sample_uniform_point(const Venue& venue, RandomStream& rng);

double horizontal_distance(Point2 a, Point2 b);

/// 3-D AP-to-UE distance from the horizontal distance and the AP height.
double euclidean_3d_distance(double horizontal, double ap_height);

/// Azimuth of `to` as seen from `from`, in [0, 2*pi).
double azimuth(Point2 from, Point2 to);

/// Maps any angle onto [0, 2*pi).
double wrap_two_pi(double angle);

/// Maps any angle onto (-pi, pi].
double wrap_pi(double angle);

}  // namespace mmwave
