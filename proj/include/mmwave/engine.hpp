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
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mmwave/antenna.hpp"
#include "mmwave/blockage.hpp"
#include "mmwave/channel.hpp"
#include "mmwave/geometry.hpp"
#include "mmwave/random.hpp"

namespace mmwave {

double degrees_to_radians(double degrees);
double radians_to_degrees(double radians);

/// Blockage scenario: user-body spacing, random-body density and the channel
/// row measured for that UE position.
struct Scenario {
  std::string label;
  double rb_density = 0.0;
  double user_body_distance = 0.3;
  ChannelParams channel;
};

/// empty-hand, empty-pocket, crowded-hand, crowded-pocket.
std::span<const Scenario> standard_scenarios();
std::optional<Scenario> find_scenario(std::string_view label);

struct UePlacement {
  enum class Kind { UniformInVenue, FixedPoint };
  Kind kind = Kind::UniformInVenue;
  Point2 point;

  static UePlacement uniform() { return {}; }
  static UePlacement fixed(Point2 p) { return {Kind::FixedPoint, p}; }
  friend bool operator==(const UePlacement&, const UePlacement&) = default;
};

/// Stream tag of grid coordinates (0, 0); plain batches use it so a 1x1x1 sweep
/// reproduces a single batch.
inline constexpr std::uint64_t kDefaultStreamTag = combine_tags(0, 0);

struct SimulationConfig {
  Venue venue{400.0};
  double delta = 20.0;
  double ap_height = 10.0;
  AntennaPattern ap_pattern{degrees_to_radians(28.0), 0.1};
  AntennaPattern ue_pattern{degrees_to_radians(45.0), 0.1};
  BlockageModel blockage;
  ChannelParams channel = car_park_hand();
  RadioConfig radio;
  std::int64_t trials = 10'000;
  std::uint64_t seed = 1;
  UePlacement ue_placement;
  /// Association uses long-term power only; not configurable.
  static constexpr bool association_excludes_fading = true;
  bool serving_always_main_lobe = false;
  std::string scenario = "custom";
  std::uint64_t stream_tag = kDefaultStreamTag;

  void validate() const;
  void apply(const Scenario& scenario);
  friend bool operator==(const SimulationConfig&, const SimulationConfig&) = default;
};

struct TrialResult {
  double sinr_linear = 0.0;
  std::size_t serving_index = 0;
  BlockageState serving_state = BlockageState::Los;
  Point2 ue_pos;

  friend bool operator==(const TrialResult&, const TrialResult&) = default;
};

struct MetricsRow {
  double delta = 0.0;
  double omega_a = 0.0;  ///< radians
  double omega_u = 0.0;  ///< radians
  std::string scenario;
  double coverage = 0.0;
  double coverage_ci_halfwidth = 0.0;
  double ase = 0.0;  ///< bit/s/Hz/m^2
  double ase_ci_halfwidth = 0.0;
  std::int64_t trials = 0;
  std::uint64_t seed = 0;
};

using MetricsTable = std::vector<MetricsRow>;

/// Coverage-optimal beamwidth pair for one (delta, scenario).
struct OptimalRow {
  double delta = 0.0;
  std::string scenario;
  double best_omega_a = 0.0;
  double best_omega_u = 0.0;
  double peak_coverage = 0.0;
  double ase_at_peak = 0.0;
};

struct SweepResult {
  MetricsTable grid;
  std::vector<OptimalRow> optimal;
};

/// Execution knobs; `threads == 0` means the MMWAVE_SIM_THREADS environment
/// variable, falling back to the hardware concurrency.
struct ExecutionOptions {
  unsigned threads = 0;
};

unsigned resolve_thread_count(const ExecutionOptions& options);

/// Per-trial draws that do not depend on the antenna beamwidths. Vectors are
/// indexed by AP; `base` is the long-term gain L * B without antenna gains.
struct Scene {
  Point2 ue;
  std::vector<double> dx, dy, distance, base, fading;
  std::vector<BlockageState> state;
};

/// Antenna rules for one (AP beamwidth, UE beamwidth) pair.
struct GainRules {
  GainRules(const AntennaPattern& ap, const AntennaPattern& ue, double ap_height, bool serving_always_main_lobe);

  ApGainRule ap;
  UeGainRule ue;
  double cos_half_width;
  bool serving_always_main_lobe;
};

/// Precomputed state for one configuration point: deployment, blockage
/// profile and noise floor.
class Simulator {
 public:
  explicit Simulator(SimulationConfig config);

  const SimulationConfig& config() const { return config_; }
  const Deployment& deployment() const { return deployment_; }
  double noise_mw() const { return noise_mw_; }
  double blockage_probability(double d_a) const { return profile_(d_a); }

  RandomStream stream(std::int64_t trial_index) const;

  /// UE placement, blockage, shadowing, then fading for every AP, in AP order.
  void draw_scene(std::int64_t trial_index, Scene& scene) const;

  /// Strongest long-term received power, UE gain evaluated as if steered to
  /// each candidate; ties go to the lowest index.
  std::size_t associate(const Scene& scene, const GainRules& rules) const;

  TrialResult evaluate(const Scene& scene, const GainRules& rules) const;

  TrialResult run_trial(std::int64_t trial_index) const;

  GainRules default_rules() const;

 private:
  SimulationConfig config_;
  Deployment deployment_;
  BlockageProfile profile_;
  double noise_mw_;
  double tx_mw_;
};

TrialResult run_trial(const SimulationConfig& config, std::int64_t trial_index);

/// Coverage, ASE and their 95% half-widths from per-trial SINRs.
MetricsRow summarize(std::span<const double> sinr_linear, double threshold_linear, double cell_area);

MetricsRow run_batch(const SimulationConfig& config, const ExecutionOptions& options = {});

/// Cartesian product delta x scenario x AP beamwidth x UE beamwidth. Within a
/// (delta, scenario) point every beamwidth pair sees the same scenes.
SweepResult sweep(const SimulationConfig& base, std::span<const double> deltas, std::span<const double> ap_beamwidths,
                  std::span<const double> ue_beamwidths, std::span<const Scenario> scenarios,
                  const ExecutionOptions& options = {});

struct BlockageValidationRow {
  double d_a = 0.0;
  double analytic = 0.0;
  double empirical = 0.0;
  double standard_error = 0.0;
};

/// Explicit-geometry check of the analytic blockage probability. Each of
/// `config.trials` scenes drops N_B bodies uniformly plus the user body; one
/// AP per entry of `d_bins` is placed at that distance with a uniform azimuth.
std::vector<BlockageValidationRow> validate_blockage(const SimulationConfig& config, std::span<const double> d_bins,
                                                     const ExecutionOptions& options = {});

}  // namespace mmwave
