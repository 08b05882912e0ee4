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

#include "mmwave/blockage.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "mmwave/quadrature.hpp"
#include "mmwave/random.hpp"

namespace mmwave {

void BodyGeometry::validate() const {
  if (!(width > 0.0)) throw std::invalid_argument("body width must be positive");
  if (!(height_above_ue > 0.0)) throw std::invalid_argument("body height above the UE must be positive");
  if (!(user_body_distance >= 0.0)) throw std::invalid_argument("user-body distance must be non-negative");
}

void BlockageModel::validate() const {
  geometry.validate();
  if (!(rb_density >= 0.0) || !std::isfinite(rb_density)) {
    throw std::invalid_argument("random-body density must be non-negative");
  }
  if (!(quadrature_tolerance > 0.0 && quadrature_tolerance <= 1e-3)) {
    throw std::invalid_argument("quadrature tolerance must lie in (0, 1e-3]");
  }
}

std::int64_t BlockageModel::random_body_count(double side) const {
  return std::llround(rb_density * side * side);
}

std::string_view to_string(BlockageState state) { return state == BlockageState::Los ? "LOS" : "NLOS"; }

Body body_facing_ue(Point2 ue, Point2 position, double width) {
  const double r = horizontal_distance(ue, position);
  return {position, wrap_two_pi(azimuth(ue, position) - shadow_angle(r, width) / 2.0)};
}

Body user_body(Point2 ue, double user_body_distance, double orientation, double width) {
  const double centre_azimuth = orientation + shadow_angle(user_body_distance, width) / 2.0;
  return {{ue.x + user_body_distance * std::cos(centre_azimuth), ue.y + user_body_distance * std::sin(centre_azimuth)},
          wrap_two_pi(orientation)};
}

double shadow_angle(double r, double w_b) {
  if (!(w_b > 0.0)) throw std::invalid_argument("body width must be positive");
  if (!(r >= 0.0)) throw std::invalid_argument("body distance must be non-negative");
  if (r == 0.0) return kPi;
  return 2.0 * std::atan(w_b / (2.0 * r));
}

double inverse_shadow_angle(double phi, double w_b) {
  if (!(w_b > 0.0)) throw std::invalid_argument("body width must be positive");
  if (!(phi > 0.0 && phi <= kPi)) {
    throw std::invalid_argument("shadowing angle must lie in (0, pi], got " + std::to_string(phi));
  }
  if (phi == kPi) return 0.0;
  return w_b / (2.0 * std::tan(phi / 2.0));
}

double free_zone_radius(double r_body, double ap_height, double body_height) {
  return ap_height * r_body / body_height;
}

bool is_blocked_geometric(Point2 ap_pos, double d_a, Point2 ue_pos, const Body& body, const BodyGeometry& geometry,
                          double ap_height) {
  return is_blocked_geometric(ap_pos, d_a, ue_pos, body, horizontal_distance(ue_pos, body.position), geometry,
                              ap_height);
}

bool is_blocked_geometric(Point2 ap_pos, double d_a, Point2 ue_pos, const Body& body, double r_b,
                          const BodyGeometry& geometry, double ap_height) {
  if (!(d_a > free_zone_radius(r_b, ap_height, geometry.height_above_ue))) return false;
  const double theta_b = wrap_two_pi(azimuth(ue_pos, ap_pos) - body.orientation);
  return theta_b < shadow_angle(r_b, geometry.width);
}

double distance_pdf_square(double r, double side) {
  if (!(side > 0.0)) throw std::invalid_argument("venue side must be positive");
  if (r <= 0.0 || r > side) return 0.0;
  const double s2 = side * side;
  return 2.0 * kPi * r / s2 - 8.0 * r * r / (s2 * side) + 2.0 * r * r * r / (s2 * s2);
}

namespace {

// f_Phi(phi) with rho = w/(2 tan(phi/2)); 1 - cos(phi) = 2 sin^2(phi/2) keeps
// precision at small angles.
double shadow_angle_density(double phi, double w_b, double side) {
  const double half = phi / 2.0;
  const double rho = w_b / (2.0 * std::tan(half));
  const double one_minus_cos = 2.0 * std::sin(half) * std::sin(half);
  const double s2 = side * side;
  const double poly = kPi * rho / s2 - 4.0 * rho * rho / (s2 * side) + rho * rho * rho / (s2 * s2);
  return poly * w_b / one_minus_cos;
}

double random_body_integrand(double phi, double w_b, double side) {
  return phi / kTwoPi * shadow_angle_density(phi, w_b, side);
}

}  // namespace

double shadow_angle_pdf(double phi, double w_b, double side) {
  if (!(w_b > 0.0)) throw std::invalid_argument("body width must be positive");
  if (!(side > 0.0)) throw std::invalid_argument("venue side must be positive");
  const double lower = shadow_angle(side, w_b);
  if (!std::isfinite(phi)) throw std::invalid_argument("shadowing angle must be finite");
  if (!(phi > lower && phi < kPi)) return 0.0;
  return shadow_angle_density(phi, w_b, side);
}

double p_self(double d_a, const BodyGeometry& geometry, double ap_height) {
  if (!(d_a >= 0.0)) throw std::invalid_argument("horizontal distance must be non-negative");
  if (!(ap_height > 0.0)) throw std::invalid_argument("AP height must be positive");
  const double r0 = geometry.user_body_distance;
  if (r0 == 0.0) return d_a > 0.0 ? 0.5 : 0.0;
  if (d_a > free_zone_radius(r0, ap_height, geometry.height_above_ue)) {
    return std::atan(geometry.width / (2.0 * r0)) / kPi;
  }
  return 0.0;
}

namespace {

// Integral of the random-body integrand over [phi_lo, phi_hi] (phi_lo <= phi_hi).
double integrate_random_body(double phi_lo, double phi_hi, double w_b, double side, double tolerance,
                             double absolute = 0.0) {
  if (phi_hi <= phi_lo) return 0.0;
  QuadratureOptions options;
  options.relative_tolerance = tolerance;
  options.absolute_tolerance = absolute;
  const auto result = adaptive_simpson(
      [&](double phi) { return phi >= kPi ? 0.0 : random_body_integrand(phi, w_b, side); }, phi_lo, phi_hi,
      options);
  return result.value;
}

}  // namespace

double p_random_one(double d_a, const BodyGeometry& geometry, double ap_height, double side, double tolerance) {
  if (!(d_a >= 0.0)) throw std::invalid_argument("horizontal distance must be non-negative");
  if (!(ap_height > 0.0)) throw std::invalid_argument("AP height must be positive");
  if (!(side > 0.0)) throw std::invalid_argument("venue side must be positive");
  if (!(tolerance > 0.0 && tolerance <= 1e-3)) throw std::invalid_argument("tolerance must lie in (0, 1e-3]");
  const double reach = std::min(side, d_a * geometry.height_above_ue / ap_height);
  if (reach <= 0.0) return 0.0;
  const double lower = shadow_angle(reach, geometry.width);
  const double p = integrate_random_body(lower, kPi, geometry.width, side, tolerance);
  return std::clamp(p, 0.0, 1.0);
}

double p_blocked(double d_a, const BlockageModel& model, double ap_height, double side) {
  const double p0 = p_self(d_a, model.geometry, ap_height);
  const std::int64_t n_b = model.random_body_count(side);
  if (n_b == 0) return p0;
  const double p1 = p_random_one(d_a, model.geometry, ap_height, side, model.quadrature_tolerance);
  const double clear = std::exp(static_cast<double>(n_b) * std::log1p(-p1));
  return std::clamp(1.0 - clear * (1.0 - p0), 0.0, 1.0);
}

BlockageState sample_blockage_state(double d_a, const BlockageModel& model, double ap_height, double side,
                                    RandomStream& rng) {
  if (model.mode != BlockageMode::Analytic) {
    throw std::invalid_argument("blockage-state sampling requires the analytic blockage mode");
  }
  const double p = p_blocked(d_a, model, ap_height, side);
  return rng.uniform() < p ? BlockageState::Nlos : BlockageState::Los;
}

BlockageProfile::BlockageProfile(const BlockageModel& model, double ap_height, double side, double max_distance,
                                 double step)
    : step_(step) {
  model.validate();
  if (!(step > 0.0)) throw std::invalid_argument("profile step must be positive");
  const auto& g = model.geometry;
  self_probability_ = p_self(std::max(1.0, 2.0 * free_zone_radius(g.user_body_distance, ap_height, g.height_above_ue)),
                             g, ap_height);
  self_threshold_ = free_zone_radius(g.user_body_distance, ap_height, g.height_above_ue);

  const std::int64_t n_b = model.random_body_count(side);
  if (n_b == 0) return;

  const auto nodes = static_cast<std::size_t>(std::ceil(max_distance / step)) + 2;
  no_random_.resize(nodes);
  // p_1 over consecutive nodes: each segment integrates between the lower
  // limits of its end points, so the running sum is p_1 at every node.
  double p1 = 0.0;
  double previous_lower = kPi;
  const double whole = integrate_random_body(shadow_angle(side, g.width), kPi, g.width, side,
                                             model.quadrature_tolerance);
  for (std::size_t k = 0; k < nodes; ++k) {
    const double d = static_cast<double>(k) * step;
    const double reach = std::min(side, d * g.height_above_ue / ap_height);
    const double lower = reach > 0.0 ? shadow_angle(reach, g.width) : kPi;
    p1 += integrate_random_body(lower, previous_lower, g.width, side, model.quadrature_tolerance,
                                model.quadrature_tolerance * whole * 1e-3);
    previous_lower = lower;
    no_random_[k] = std::exp(static_cast<double>(n_b) * std::log1p(-std::clamp(p1, 0.0, 1.0)));
  }
}

}  // namespace mmwave
