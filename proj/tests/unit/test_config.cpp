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

#include <doctest.h>

#include <stdexcept>

#include <string>

#include "mmwave/config.hpp"

using namespace mmwave;

namespace {

const std::string kMinimal = R"({
  "deployment": {"inter_site_distance_m": 20},
  "antenna": {"ap_beamwidth_deg": 28, "ue_beamwidth_deg": 45}
})";

bool mentions(const std::string& text, const std::string& piece) { return text.find(piece) != std::string::npos; }

std::string error_of(const std::string& text, std::vector<std::string> overrides = {}) {
  try {
    parse_config(text, overrides, "test.json");
  } catch (const ConfigError& e) {
    return e.what();
  }
  return {};
}

}  // namespace

TEST_SUITE("config") {
  TEST_CASE("empty input lists the required keys") {
    for (const std::string text : {"", "  \n", "{}"}) {
      const std::string e = error_of(text);
      CHECK(mentions(e, "deployment.inter_site_distance_m"));
      CHECK(mentions(e, "antenna.ap_beamwidth_deg"));
      CHECK(mentions(e, "antenna.ue_beamwidth_deg"));
    }
    CHECK(required_config_keys().size() == 3);
  }

  TEST_CASE("minimal file gives the documented defaults") {
    const RunConfig r = parse_config(kMinimal);
    const SimulationConfig defaults;
    CHECK(r.simulation == defaults);
    CHECK(r.simulation.venue.side() == 400.0);
    CHECK(r.simulation.ap_height == 10.0);
    CHECK(r.simulation.radio.tx_power_dbm == 20.0);
    CHECK(r.simulation.radio.bandwidth_hz == 2e9);
    CHECK(r.simulation.radio.noise_figure_db == 9.0);
    CHECK(r.simulation.radio.sinr_threshold_db == 5.0);
    CHECK(r.simulation.ap_pattern.side_lobe_gain() == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(r.simulation.blockage.geometry.width == 0.4);
    CHECK(r.simulation.blockage.geometry.height_above_ue == 0.4);
    CHECK(r.sweep == SweepSpec{});
  }

  TEST_CASE("fully spelled-out defaults") {
    const std::string text = R"({
      "venue": {"side_m": 400},
      "deployment": {"inter_site_distance_m": 20, "ap_height_m": 10},
      "antenna": {"ap_beamwidth_deg": 28, "ue_beamwidth_deg": 45, "side_lobe_gain_db": -10,
                  "serving_always_main_lobe": false},
      "body": {"width_m": 0.4, "height_m": 0.4, "user_body_distance_m": 0.3},
      "blockage": {"rb_density_per_m2": 0, "mode": "analytic", "quadrature_tolerance": 1e-8},
      "radio": {"tx_power_dbm": 20, "bandwidth_hz": 2e9, "carrier_hz": 60e9, "noise_figure_db": 9,
                "sinr_threshold_db": 5},
      "simulation": {"trials": 10000, "seed": 1, "ue_placement": "uniform"}
    })";
    CHECK(parse_config(text).simulation == SimulationConfig{});
  }

  TEST_CASE("beamwidth zero carries the antenna reason") {
    const std::string e = error_of(kMinimal, {"antenna.ap_beamwidth_deg=0"});
    CHECK(mentions(e, "antenna.ap_beamwidth_deg"));
    CHECK(mentions(e, "beamwidth must lie in"));
  }

  TEST_CASE("diagnostics point at the offending line") {
    const std::string typo = "{\n  \"deployment\": {\"inter_site_distance_m\": 20,\n    \"ap_heigth_m\": 3},\n"
                             "  \"antenna\": {\"ap_beamwidth_deg\": 28, \"ue_beamwidth_deg\": 45}\n}";
    const std::string e = error_of(typo);
    CHECK(mentions(e, "test.json:3"));
    CHECK(mentions(e, "unknown key"));

    const std::string syntax = "{\n  \"deployment\": {\"inter_site_distance_m\": 20,}\n}";
    CHECK(mentions(error_of(syntax), "test.json:2:"));

    const std::string wrong_type = "{\n\"deployment\": {\"inter_site_distance_m\": \"far\"},\n"
                                   "\"antenna\": {\"ap_beamwidth_deg\": 28, \"ue_beamwidth_deg\": 45}}";
    CHECK(mentions(error_of(wrong_type), "test.json:2: deployment.inter_site_distance_m: expected a number"));

    CHECK(mentions(error_of(kMinimal, {"sweep.scenarios=[\"stadium\"]"}), "unknown scenario"));
    CHECK(mentions(error_of(kMinimal, {"simulation.trials=0"}), "trials"));
    CHECK(mentions(error_of(kMinimal, {"blockage.mode=\"magic\""}), "blockage.mode"));
    CHECK(mentions(error_of("[1, 2]"), "object"));
  }

  TEST_CASE("scenario presets and overrides") {
    const RunConfig r = parse_config(kMinimal, std::vector<std::string>{"scenario=crowded-pocket"});
    CHECK(r.simulation.scenario == "crowded-pocket");
    CHECK(r.simulation.blockage.rb_density == 3.0);
    CHECK(r.simulation.blockage.geometry.user_body_distance == 0.0);
    CHECK(r.simulation.channel == car_park_pocket());

    const RunConfig tweaked =
        parse_config(kMinimal, std::vector<std::string>{"scenario=crowded-pocket", "blockage.rb_density_per_m2=1"});
    CHECK(tweaked.simulation.scenario == "custom");
    CHECK(tweaked.simulation.blockage.rb_density == 1.0);
    CHECK(tweaked.simulation.channel == car_park_pocket());

    const RunConfig nlos = parse_config(kMinimal, std::vector<std::string>{"channel.nlos.nakagami_m=2"});
    CHECK(nlos.simulation.channel.nlos.nakagami_m == 2.0);
    CHECK(nlos.simulation.channel.los == car_park_hand().los);
  }

  TEST_CASE("placement forms") {
    CHECK(parse_config(kMinimal, std::vector<std::string>{"simulation.ue_placement=centre"}).simulation.ue_placement ==
          UePlacement::fixed({200.0, 200.0}));
    CHECK(parse_config(kMinimal, std::vector<std::string>{"simulation.ue_placement=[10, 20.5]"})
              .simulation.ue_placement == UePlacement::fixed({10.0, 20.5}));
    CHECK(mentions(error_of(kMinimal, {"simulation.ue_placement=[1]"}), "ue_placement"));
    CHECK(mentions(error_of(kMinimal, {"simulation.ue_placement=[500, 1]"}), "outside the venue"));
  }

  TEST_CASE("dump round-trips") {
    const std::vector<std::vector<std::string>> variants = {
        {},
        {"scenario=empty-pocket"},
        {"scenario=crowded-hand", "channel.los.pl_exponent=2.2"},
        {"antenna.ap_beamwidth_deg=17.3", "antenna.ue_beamwidth_deg=180", "antenna.side_lobe_gain_db=-13"},
        {"simulation.ue_placement=[12.25, 300]", "simulation.seed=18446744073709551615"},
        {"sweep.deltas_m=[1, 2.5]", "sweep.ap_beamwidths_deg=[15, 30]", "sweep.scenarios=[\"empty-hand\"]"},
        {"blockage.mode=explicit-bodies", "blockage_prob.d_step_m=0.25", "venue.side_m=123.4"},
    };
    for (const auto& overrides : variants) {
      const RunConfig first = parse_config(kMinimal, overrides);
      const std::string dumped = dump_config(first);
      const RunConfig second = parse_config(dumped);
      CAPTURE(dumped);
      CHECK(second.simulation == first.simulation);
      CHECK(second.sweep == first.sweep);
      CHECK(second.blockage_prob == first.blockage_prob);
      CHECK(dump_config(second) == dumped);
    }
  }

  TEST_CASE("blockage grid") {
    BlockageProbSpec spec;
    spec.d_min_m = 0.0;
    spec.d_max_m = 1.0;
    spec.d_step_m = 0.1;
    const auto g = spec.grid();
    REQUIRE(g.size() == 11);
    CHECK(g.back() == doctest::Approx(1.0));
  }
}
