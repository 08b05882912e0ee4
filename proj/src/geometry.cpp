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

#include "mmwave/geometry.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "mmwave/random.hpp"

namespace mmwave {

Venue::Venue(double side) : side_(side) {
  if (!(side > 0.0) || !std::isfinite(side)) {
    throw std::invalid_argument("venue side must be positive and finite, got " + std::to_string(side));
  }
}

bool Venue::contains(Point2 p, double eps) const {
  return p.x >= -eps && p.x <= side_ + eps && p.y >= -eps && p.y <= side_ + eps;
}

Deployment::Deployment(std::vector<Point2> ap_positions, double inter_site_distance, double ap_height)
    : ap_positions_(std::move(ap_positions)), inter_site_distance_(inter_site_distance), ap_height_(ap_height) {
  if (!(inter_site_distance > 0.0)) throw std::invalid_argument("inter-site distance must be positive");
  if (!(ap_height > 0.0)) throw std::invalid_argument("AP height must be positive");
  if (ap_positions_.empty()) throw std::invalid_argument("deployment needs at least one AP");
}

double Deployment::cell_area() const {
  return std::sqrt(3.0) / 2.0 * inter_site_distance_ * inter_site_distance_;
}

Deployment generate_hex_grid(const Venue& venue, double delta, double ap_height) {
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw std::invalid_argument("inter-site distance must be positive, got " + std::to_string(delta));
  }
  if (!(ap_height > 0.0)) {
    throw std::invalid_argument("AP height must be positive, got " + std::to_string(ap_height));
  }
  if (delta > venue.side() * std::sqrt(2.0)) {
    throw std::invalid_argument("inter-site distance " + std::to_string(delta) + " m exceeds venue diagonal");
  }

  const Point2 c = venue.centre();
  const double row_pitch = delta * std::sqrt(3.0) / 2.0;
  const auto rows = static_cast<long>(std::ceil(venue.side() / 2.0 / row_pitch)) + 1;
  const auto cols = static_cast<long>(std::ceil(venue.side() / 2.0 / delta)) + 1;

  std::vector<Point2> aps;
  for (long j = -rows; j <= rows; ++j) {
    const double y = c.y + static_cast<double>(j) * row_pitch;
    const double offset = (j % 2 != 0) ? delta / 2.0 : 0.0;
    for (long i = -cols; i <= cols; ++i) {
      const Point2 p{c.x + offset + static_cast<double>(i) * delta, y};
      if (venue.contains(p)) aps.push_back(p);
    }
  }
  if (aps.empty()) {
    throw std::invalid_argument("no lattice point of spacing " + std::to_string(delta) + " m falls in the venue");
  }
  return Deployment(std::move(aps), delta, ap_height);
}

Point2 sample_uniform_point(const Venue& venue, RandomStream& rng) {
  const double x = rng.uniform() * venue.side();
  const double y = rng.uniform() * venue.side();
  return {x, y};
}

double horizontal_distance(Point2 a, Point2 b) { return std::hypot(a.x - b.x, a.y - b.y); }

double euclidean_3d_distance(double horizontal, double ap_height) {
  return std::sqrt(horizontal * horizontal + ap_height * ap_height);
}

double azimuth(Point2 from, Point2 to) { return wrap_two_pi(std::atan2(to.y - from.y, to.x - from.x)); }

double wrap_two_pi(double angle) {
  double a = std::fmod(angle, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  // fmod of a tiny negative value can round up to exactly 2*pi.
  if (a >= kTwoPi) a = 0.0;
  return a;
}

double wrap_pi(double angle) {
  double a = wrap_two_pi(angle);
  if (a > kPi) a -= kTwoPi;
  return a;
}

}  // namespace mmwave
