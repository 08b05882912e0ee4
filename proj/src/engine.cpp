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

#include "mmwave/engine.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>

namespace mmwave {

double degrees_to_radians(double degrees) { return degrees * kPi / 180.0; }
double radians_to_degrees(double radians) { return radians * 180.0 / kPi; }

std::span<const Scenario> standard_scenarios() {
  static const std::vector<Scenario> scenarios = {
      {"empty-hand", 0.0, 0.3, car_park_hand()},
      {"empty-pocket", 0.0, 0.0, car_park_pocket()},
      {"crowded-hand", 3.0, 0.3, car_park_hand()},
      {"crowded-pocket", 3.0, 0.0, car_park_pocket()},
  };
  return scenarios;
}

std::optional<Scenario> find_scenario(std::string_view label) {
  for (const auto& s : standard_scenarios()) {
    if (s.label == label) return s;
  }
  return std::nullopt;
}

void SimulationConfig::validate() const {
  if (!(delta > 0.0)) throw std::invalid_argument("inter-site distance must be positive");
  if (!(ap_height > 0.0)) throw std::invalid_argument("AP height must be positive");
  blockage.validate();
  channel.validate();
  radio.validate();
  if (trials < 1) throw std::invalid_argument("trials must be at least 1");
  if (ue_placement.kind == UePlacement::Kind::FixedPoint && !venue.contains(ue_placement.point)) {
    throw std::invalid_argument("fixed UE position lies outside the venue");
  }
}

void SimulationConfig::apply(const Scenario& s) {
  blockage.rb_density = s.rb_density;
  blockage.geometry.user_body_distance = s.user_body_distance;
  channel = s.channel;
  scenario = s.label;
}

unsigned resolve_thread_count(const ExecutionOptions& options) {
  if (options.threads > 0) return options.threads;
  if (const char* env = std::getenv("MMWAVE_SIM_THREADS"); env != nullptr && *env != '\0') {
    char* end = nullptr;
    const unsigned long n = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) return static_cast<unsigned>(n);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

constexpr std::int64_t kChunk = 16;
constexpr std::uint64_t kValidationTag = 0x626C6F636B616765ull;

// Runs body(worker, begin, end) over [0, n) in chunks claimed dynamically.
// Results must be written to per-index slots so the outcome does not depend
// on which worker ran which chunk.
void parallel_for(std::int64_t n, unsigned threads,
                  const std::function<void(unsigned, std::int64_t, std::int64_t)>& body) {
  threads = static_cast<unsigned>(std::clamp<std::int64_t>(threads, 1, std::max<std::int64_t>(1, n / kChunk)));
  if (threads == 1) {
    body(0, 0, n);
    return;
  }
  std::atomic<std::int64_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(threads);
  for (unsigned w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (;;) {
          const std::int64_t begin = next.fetch_add(kChunk);
          if (begin >= n) break;
          body(w, begin, std::min(n, begin + kChunk));
        }
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(n);
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

double max_horizontal_reach(const SimulationConfig& config) {
  return config.venue.side() * std::sqrt(2.0) + config.delta + 1.0;
}

}  // namespace

GainRules::GainRules(const AntennaPattern& ap_pattern, const AntennaPattern& ue_pattern, double ap_height,
                     bool serving_main)
    : ap(ap_pattern, ap_height),
      ue(ue_pattern, ap_height),
      cos_half_width(std::cos(ue_pattern.beamwidth() / 2.0)),
      serving_always_main_lobe(serving_main) {}

Simulator::Simulator(SimulationConfig config)
    : config_((config.validate(), std::move(config))),
      deployment_(generate_hex_grid(config_.venue, config_.delta, config_.ap_height)),
      profile_(config_.blockage, config_.ap_height, config_.venue.side(), max_horizontal_reach(config_)),
      noise_mw_(noise_power_mw(config_.radio)),
      tx_mw_(dbm_to_mw(config_.radio.tx_power_dbm)) {}

RandomStream Simulator::stream(std::int64_t trial_index) const {
  return RandomStream(combine_tags(config_.seed, config_.stream_tag), static_cast<std::uint64_t>(trial_index));
}

GainRules Simulator::default_rules() const {
  return GainRules(config_.ap_pattern, config_.ue_pattern, config_.ap_height, config_.serving_always_main_lobe);
}

void Simulator::draw_scene(std::int64_t trial_index, Scene& scene) const {
  RandomStream rng = stream(trial_index);
  scene.ue = config_.ue_placement.kind == UePlacement::Kind::FixedPoint ? config_.ue_placement.point
                                                                        : sample_uniform_point(config_.venue, rng);
  const auto& aps = deployment_.ap_positions();
  const std::size_t n = aps.size();
  scene.dx.resize(n);
  scene.dy.resize(n);
  scene.distance.resize(n);
  scene.base.resize(n);
  scene.fading.resize(n);
  scene.state.resize(n);

  const double h2 = config_.ap_height * config_.ap_height;
  const StateParams* params[2] = {&config_.channel.los, &config_.channel.nlos};
  const double intercept[2] = {db_to_linear(-params[0]->pl_intercept_db), db_to_linear(-params[1]->pl_intercept_db)};

  for (std::size_t j = 0; j < n; ++j) {
    const double dx = aps[j].x - scene.ue.x;
    const double dy = aps[j].y - scene.ue.y;
    const double d2 = dx * dx + dy * dy;
    const double d = std::sqrt(d2);
    const auto state = rng.uniform() < profile_(d) ? BlockageState::Nlos : BlockageState::Los;
    const int s = static_cast<int>(state);
    const StateParams& p = *params[s];
    const double path = intercept[s] * std::pow(d2 + h2, -0.5 * p.pl_exponent);
    const double shadow = rng.gamma(p.shadow_shape, p.shadow_scale);
    scene.dx[j] = dx;
    scene.dy[j] = dy;
    scene.distance[j] = d;
    scene.state[j] = state;
    scene.base[j] = path * shadow;
  }
  for (std::size_t j = 0; j < n; ++j) {
    const double m = params[static_cast<int>(scene.state[j])]->nakagami_m;
    scene.fading[j] = rng.gamma(m, 1.0 / m);
  }
}

std::size_t Simulator::associate(const Scene& scene, const GainRules& rules) const {
  std::size_t best = 0;
  double best_power = -1.0;
  const std::size_t n = scene.base.size();
  for (std::size_t j = 0; j < n; ++j) {
    const double d = scene.distance[j];
    const double ue = rules.serving_always_main_lobe ? rules.ue.main() : rules.ue.towards(d);
    const double power = rules.ap(d) * ue * scene.base[j];
    if (power > best_power) {
      best_power = power;
      best = j;
    }
  }
  return best;
}

TrialResult Simulator::evaluate(const Scene& scene, const GainRules& rules) const {
  const std::size_t serving = associate(scene, rules);
  const double d_s = scene.distance[serving];
  // UE steering direction; directly below the AP the azimuth is taken as 0.
  double ux = 1.0;
  double uy = 0.0;
  double norm = 1.0;
  if (d_s > 0.0) {
    ux = scene.dx[serving];
    uy = scene.dy[serving];
    norm = d_s;
  }
  const double ue_serving = rules.serving_always_main_lobe ? rules.ue.main() : rules.ue.towards(d_s);
  const double signal = rules.ap(d_s) * ue_serving * scene.base[serving] * scene.fading[serving];

  const double bound = rules.ue.bound_distance();
  const double radius = rules.ue.bounded_radius();
  const double main = rules.ue.main();
  const double side = rules.ue.side();
  const bool omni = rules.ue.half_width() >= kPi;
  double interference = 0.0;
  const std::size_t n = scene.base.size();
  for (std::size_t j = 0; j < n; ++j) {
    if (j == serving) continue;
    const double d = scene.distance[j];
    double ue = side;
    if (omni) {
      ue = main;
    } else if (d < bound) {
      ue = d <= radius ? main : side;
    } else if (scene.dx[j] * ux + scene.dy[j] * uy > rules.cos_half_width * d * norm) {
      ue = main;
    }
    interference += rules.ap(d) * ue * scene.base[j] * scene.fading[j];
  }
  TrialResult result;
  result.sinr_linear = tx_mw_ * signal / (noise_mw_ + tx_mw_ * interference);
  result.serving_index = serving;
  result.serving_state = scene.state[serving];
  result.ue_pos = scene.ue;
  return result;
}

TrialResult Simulator::run_trial(std::int64_t trial_index) const {
  Scene scene;
  draw_scene(trial_index, scene);
  return evaluate(scene, default_rules());
}

TrialResult run_trial(const SimulationConfig& config, std::int64_t trial_index) {
  return Simulator(config).run_trial(trial_index);
}

MetricsRow summarize(std::span<const double> sinr_linear, double threshold_linear, double cell_area) {
  MetricsRow row;
  const auto n = static_cast<double>(sinr_linear.size());
  if (sinr_linear.empty()) return row;
  std::int64_t covered = 0;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (double s : sinr_linear) {
    if (s > threshold_linear) ++covered;
    const double se = std::log2(1.0 + s);
    sum += se;
    sum_sq += se * se;
  }
  const double p = static_cast<double>(covered) / n;
  const double mean = sum / n;
  const double variance = n > 1 ? std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0)) : 0.0;
  row.coverage = p;
  row.coverage_ci_halfwidth = 1.96 * std::sqrt(p * (1.0 - p) / n);
  row.ase = mean / cell_area;
  row.ase_ci_halfwidth = 1.96 * std::sqrt(variance / n) / cell_area;
  row.trials = static_cast<std::int64_t>(sinr_linear.size());
  return row;
}

namespace {

// Runs every trial of one configuration point and returns SINRs laid out as
// [trial][rule].
std::vector<double> simulate_point(const Simulator& sim, const std::vector<GainRules>& rules,
                                   const ExecutionOptions& options) {
  const std::int64_t trials = sim.config().trials;
  const std::size_t k = rules.size();
  std::vector<double> sinr(static_cast<std::size_t>(trials) * k);
  const unsigned threads = resolve_thread_count(options);
  std::vector<Scene> scenes(threads);
  parallel_for(trials, threads, [&](unsigned worker, std::int64_t begin, std::int64_t end) {
    Scene& scene = scenes[worker];
    for (std::int64_t t = begin; t < end; ++t) {
      sim.draw_scene(t, scene);
      for (std::size_t r = 0; r < k; ++r) {
        sinr[static_cast<std::size_t>(t) * k + r] = sim.evaluate(scene, rules[r]).sinr_linear;
      }
    }
  });
  return sinr;
}

MetricsRow make_row(const SimulationConfig& config, std::span<const double> sinr, double omega_a, double omega_u,
                    double cell_area) {
  MetricsRow row = summarize(sinr, db_to_linear(config.radio.sinr_threshold_db), cell_area);
  row.delta = config.delta;
  row.omega_a = omega_a;
  row.omega_u = omega_u;
  row.scenario = config.scenario;
  row.seed = config.seed;
  return row;
}

}  // namespace

MetricsRow run_batch(const SimulationConfig& config, const ExecutionOptions& options) {
  const Simulator sim(config);
  const std::vector<GainRules> rules{sim.default_rules()};
  const std::vector<double> sinr = simulate_point(sim, rules, options);
  return make_row(sim.config(), sinr, config.ap_pattern.beamwidth(), config.ue_pattern.beamwidth(),
                  sim.deployment().cell_area());
}

SweepResult sweep(const SimulationConfig& base, std::span<const double> deltas, std::span<const double> ap_beamwidths,
                  std::span<const double> ue_beamwidths, std::span<const Scenario> scenarios,
                  const ExecutionOptions& options) {
  if (deltas.empty() || ap_beamwidths.empty() || ue_beamwidths.empty() || scenarios.empty()) {
    throw std::invalid_argument("sweep lists must be non-empty");
  }
  const double side_lobe_ap = base.ap_pattern.side_lobe_gain();
  const double side_lobe_ue = base.ue_pattern.side_lobe_gain();

  SweepResult result;
  for (std::size_t di = 0; di < deltas.size(); ++di) {
    for (std::size_t si = 0; si < scenarios.size(); ++si) {
      SimulationConfig config = base;
      config.delta = deltas[di];
      config.apply(scenarios[si]);
      config.stream_tag = combine_tags(di, si);
      const Simulator sim(config);

      std::vector<GainRules> rules;
      rules.reserve(ap_beamwidths.size() * ue_beamwidths.size());
      for (double wa : ap_beamwidths) {
        for (double wu : ue_beamwidths) {
          rules.emplace_back(AntennaPattern(wa, side_lobe_ap), AntennaPattern(wu, side_lobe_ue), config.ap_height,
                             config.serving_always_main_lobe);
        }
      }
      const std::vector<double> sinr = simulate_point(sim, rules, options);
      const std::size_t k = rules.size();
      const auto trials = static_cast<std::size_t>(config.trials);

      std::vector<double> column(trials);
      std::optional<OptimalRow> best;
      for (std::size_t ai = 0; ai < ap_beamwidths.size(); ++ai) {
        for (std::size_t ui = 0; ui < ue_beamwidths.size(); ++ui) {
          const std::size_t r = ai * ue_beamwidths.size() + ui;
          for (std::size_t t = 0; t < trials; ++t) column[t] = sinr[t * k + r];
          MetricsRow row = make_row(config, column, ap_beamwidths[ai], ue_beamwidths[ui], sim.deployment().cell_area());
          // Ties on coverage go to the higher ASE, then to grid order.
          if (!best || row.coverage > best->peak_coverage ||
              (row.coverage == best->peak_coverage && row.ase > best->ase_at_peak)) {
            best = OptimalRow{config.delta, config.scenario, row.omega_a, row.omega_u, row.coverage, row.ase};
          }
          result.grid.push_back(std::move(row));
        }
      }
      result.optimal.push_back(*best);
    }
  }
  return result;
}

std::vector<BlockageValidationRow> validate_blockage(const SimulationConfig& config, std::span<const double> d_bins,
                                                     const ExecutionOptions& options) {
  config.validate();
  if (config.blockage.mode != BlockageMode::ExplicitBodies) {
    throw std::invalid_argument("blockage validation requires the explicit-bodies mode");
  }
  if (config.ue_placement.kind != UePlacement::Kind::FixedPoint) {
    throw std::invalid_argument("blockage validation requires a fixed UE position");
  }
  const Point2 ue = config.ue_placement.point;
  const BodyGeometry& geometry = config.blockage.geometry;
  const double h_a = config.ap_height;
  const double side = config.venue.side();
  const std::int64_t n_bodies = config.blockage.random_body_count(side);
  const double max_d = d_bins.empty() ? 0.0 : *std::max_element(d_bins.begin(), d_bins.end());
  // Bodies farther than this cannot block any requested AP distance.
  const double reach = max_d * geometry.height_above_ue / h_a;

  const std::int64_t scenes = config.trials;
  const std::size_t bins = d_bins.size();
  std::vector<std::uint8_t> blocked(static_cast<std::size_t>(scenes) * bins);
  const unsigned threads = resolve_thread_count(options);
  struct NearBody {
    Body body;
    double distance;
  };
  std::vector<std::vector<NearBody>> bodies(threads);

  parallel_for(scenes, threads, [&](unsigned worker, std::int64_t begin, std::int64_t end) {
    auto& near = bodies[worker];
    for (std::int64_t scene = begin; scene < end; ++scene) {
      RandomStream rng(combine_tags(config.seed, config.stream_tag ^ kValidationTag),
                       static_cast<std::uint64_t>(scene));
      near.clear();
      near.push_back({user_body(ue, geometry.user_body_distance, rng.uniform(0.0, kTwoPi), geometry.width),
                      geometry.user_body_distance});
      for (std::int64_t b = 0; b < n_bodies; ++b) {
        const Point2 p = sample_uniform_point(config.venue, rng);
        const double r = horizontal_distance(ue, p);
        if (r > 0.0 && r < reach) near.push_back({body_facing_ue(ue, p, geometry.width), r});
      }
      for (std::size_t k = 0; k < bins; ++k) {
        const double d = d_bins[k];
        const double psi = rng.uniform(0.0, kTwoPi);
        const Point2 ap{ue.x + d * std::cos(psi), ue.y + d * std::sin(psi)};
        bool hit = false;
        for (const NearBody& b : near) {
          if (is_blocked_geometric(ap, d, ue, b.body, b.distance, geometry, h_a)) {
            hit = true;
            break;
          }
        }
        blocked[static_cast<std::size_t>(scene) * bins + k] = hit ? 1 : 0;
      }
    }
  });

  BlockageModel analytic = config.blockage;
  analytic.mode = BlockageMode::Analytic;
  std::vector<BlockageValidationRow> rows(bins);
  for (std::size_t k = 0; k < bins; ++k) {
    std::int64_t count = 0;
    for (std::int64_t s = 0; s < scenes; ++s) count += blocked[static_cast<std::size_t>(s) * bins + k];
    const double p = static_cast<double>(count) / static_cast<double>(scenes);
    rows[k].d_a = d_bins[k];
    rows[k].analytic = p_blocked(d_bins[k], analytic, h_a, side);
    rows[k].empirical = p;
    rows[k].standard_error = std::sqrt(p * (1.0 - p) / static_cast<double>(scenes));
  }
  return rows;
}

}  // namespace mmwave
