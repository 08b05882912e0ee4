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

#include "mmwave/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <json.hpp>
#include <optional>
#include <set>
#include <sstream>

namespace mmwave {

using nlohmann::json;

namespace {

constexpr std::string_view kRequired[] = {
    "deployment.inter_site_distance_m",
    "antenna.ap_beamwidth_deg",
    "antenna.ue_beamwidth_deg",
};

std::vector<std::string> split_dotted(std::string_view key) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t dot = key.find('.', start);
    parts.emplace_back(key.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start));
    if (dot == std::string_view::npos) break;
    start = dot + 1;
  }
  return parts;
}

std::string join_dotted(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) {
    if (!out.empty()) out += '.';
    out += p;
  }
  return out;
}

// Best-effort source line of a dotted key: finds each quoted key in turn.
std::optional<std::size_t> locate(std::string_view text, const std::vector<std::string>& path) {
  std::size_t pos = 0;
  for (const auto& key : path) {
    const std::size_t found = text.find('"' + key + '"', pos);
    if (found == std::string_view::npos) return std::nullopt;
    pos = found;
  }
  return static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(pos), '\n')) + 1;
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  byte = std::min(byte, text.size());
  std::size_t line = 1;
  std::size_t column = 1;
  for (std::size_t i = 0; i < byte; ++i) {
    if (text[i] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
  }
  return {line, column};
}

double round_decimal(double x) { return std::round(x * 1e9) / 1e9; }

// Reads one JSON object against its schema, remembering which keys were used
// so leftovers can be reported as unknown.
class Section {
 public:
  Section(const json* node, std::vector<std::string> path, std::string_view text, std::string_view source)
      : node_(node), path_(std::move(path)), text_(text), source_(source) {}

  [[noreturn]] void fail(const std::string& key, const std::string& message) const {
    std::vector<std::string> full = path_;
    if (!key.empty()) full.push_back(key);
    std::string where(source_);
    if (const auto line = locate(text_, full)) where += ":" + std::to_string(*line);
    throw ConfigError(where + ": " + join_dotted(full) + ": " + message);
  }

  const json* find(const std::string& key) {
    seen_.insert(key);
    if (node_ == nullptr) return nullptr;
    const auto it = node_->find(key);
    return it == node_->end() ? nullptr : &*it;
  }

  std::optional<double> number(const std::string& key) {
    const json* v = find(key);
    if (v == nullptr) return std::nullopt;
    if (!v->is_number()) fail(key, "expected a number, got " + std::string(v->type_name()));
    const double x = v->get<double>();
    if (!std::isfinite(x)) fail(key, "expected a finite number");
    return x;
  }

  void number(const std::string& key, double& target) {
    if (auto v = number(key)) target = *v;
  }

  std::optional<std::int64_t> integer(const std::string& key) {
    const json* v = find(key);
    if (v == nullptr) return std::nullopt;
    if (!v->is_number_integer()) fail(key, "expected an integer, got " + std::string(v->type_name()));
    return v->get<std::int64_t>();
  }

  std::optional<std::uint64_t> unsigned_integer(const std::string& key) {
    const json* v = find(key);
    if (v == nullptr) return std::nullopt;
    if (v->is_number_unsigned()) return v->get<std::uint64_t>();
    fail(key, "expected a non-negative integer, got " + v->dump());
  }

  std::optional<bool> boolean(const std::string& key) {
    const json* v = find(key);
    if (v == nullptr) return std::nullopt;
    if (!v->is_boolean()) fail(key, "expected true or false, got " + std::string(v->type_name()));
    return v->get<bool>();
  }

  std::optional<std::string> string(const std::string& key) {
    const json* v = find(key);
    if (v == nullptr) return std::nullopt;
    if (!v->is_string()) fail(key, "expected a string, got " + std::string(v->type_name()));
    return v->get<std::string>();
  }

  std::vector<double> numbers(const std::string& key) {
    const json* v = find(key);
    if (v == nullptr) return {};
    if (!v->is_array()) fail(key, "expected an array of numbers");
    std::vector<double> out;
    for (const auto& item : *v) {
      if (!item.is_number()) fail(key, "expected an array of numbers, found " + item.dump());
      out.push_back(item.get<double>());
    }
    if (out.empty()) fail(key, "list must not be empty");
    return out;
  }

  std::vector<std::string> strings(const std::string& key) {
    const json* v = find(key);
    if (v == nullptr) return {};
    if (!v->is_array()) fail(key, "expected an array of strings");
    std::vector<std::string> out;
    for (const auto& item : *v) {
      if (!item.is_string()) fail(key, "expected an array of strings, found " + item.dump());
      out.push_back(item.get<std::string>());
    }
    if (out.empty()) fail(key, "list must not be empty");
    return out;
  }

  Section section(const std::string& key) {
    const json* v = find(key);
    if (v != nullptr && !v->is_object()) fail(key, "expected an object");
    std::vector<std::string> path = path_;
    path.push_back(key);
    return Section(v, std::move(path), text_, source_);
  }

  bool present() const { return node_ != nullptr; }

  /// Rejects keys the schema does not know about.
  void finish() const {
    if (node_ == nullptr) return;
    for (const auto& [key, value] : node_->items()) {
      if (!seen_.contains(key)) fail(key, "unknown key");
    }
  }

 private:
  const json* node_;
  std::vector<std::string> path_;
  std::string_view text_;
  std::string_view source_;
  std::set<std::string> seen_;
};

void read_state(Section s, StateParams& p) {
  s.number("pl_exponent", p.pl_exponent);
  s.number("pl_intercept_db", p.pl_intercept_db);
  s.number("shadow_shape", p.shadow_shape);
  s.number("shadow_scale", p.shadow_scale);
  s.number("nakagami_m", p.nakagami_m);
  s.finish();
}

json state_json(const StateParams& p) {
  return {{"pl_exponent", p.pl_exponent},
          {"pl_intercept_db", p.pl_intercept_db},
          {"shadow_shape", p.shadow_shape},
          {"shadow_scale", p.shadow_scale},
          {"nakagami_m", p.nakagami_m}};
}

void apply_override(json& doc, const std::string& assignment) {
  const std::size_t eq = assignment.find('=');
  if (eq == std::string::npos || eq == 0) {
    throw ConfigError("--set " + assignment + ": expected key=value");
  }
  const std::vector<std::string> path = split_dotted(assignment.substr(0, eq));
  const std::string raw = assignment.substr(eq + 1);
  json value = json::parse(raw, nullptr, false);
  if (value.is_discarded()) value = raw;
  json* node = &doc;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    if (path[i].empty()) throw ConfigError("--set " + assignment + ": empty key segment");
    json& child = (*node)[path[i]];
    if (child.is_null()) child = json::object();
    if (!child.is_object()) throw ConfigError("--set " + assignment + ": " + path[i] + " is not a section");
    node = &child;
  }
  (*node)[path.back()] = std::move(value);
}

bool scenario_matches(const SimulationConfig& c, const Scenario& s) {
  return c.blockage.rb_density == s.rb_density && c.blockage.geometry.user_body_distance == s.user_body_distance &&
         c.channel == s.channel;
}

}  // namespace

std::span<const std::string_view> required_config_keys() { return kRequired; }

std::vector<double> BlockageProbSpec::grid() const {
  std::vector<double> out;
  const auto steps = static_cast<std::int64_t>(std::floor((d_max_m - d_min_m) / d_step_m + 1e-9));
  for (std::int64_t k = 0; k <= steps; ++k) out.push_back(d_min_m + static_cast<double>(k) * d_step_m);
  return out;
}

RunConfig parse_config(std::string_view text, std::span<const std::string> overrides, std::string_view source) {
  const std::string src(source);
  std::string required_list;
  for (auto key : kRequired) required_list += (required_list.empty() ? "" : ", ") + std::string(key);

  json doc;
  if (text.find_first_not_of(" \t\r\n") == std::string_view::npos) {
    if (overrides.empty()) throw ConfigError(src + ": configuration is empty; required keys: " + required_list);
    doc = json::object();
  } else {
    try {
      doc = json::parse(text, nullptr, true, /*ignore_comments=*/true);
    } catch (const json::parse_error& e) {
      const auto [line, column] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
      throw ConfigError(src + ":" + std::to_string(line) + ":" + std::to_string(column) + ": JSON syntax error: " +
                        e.what());
    }
  }
  if (!doc.is_object()) throw ConfigError(src + ": top level must be a JSON object");
  for (const auto& o : overrides) apply_override(doc, o);

  std::vector<std::string> missing;
  for (auto key : kRequired) {
    const json* node = &doc;
    for (const auto& part : split_dotted(key)) {
      if (node == nullptr || !node->is_object() || !node->contains(part)) {
        node = nullptr;
        break;
      }
      node = &(*node)[part];
    }
    if (node == nullptr) missing.emplace_back(key);
  }
  if (!missing.empty()) {
    std::string list;
    for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
    throw ConfigError(src + ": missing required keys: " + list);
  }

  RunConfig run;
  SimulationConfig& c = run.simulation;
  Section root(&doc, {}, text, source);
  std::optional<Scenario> preset;
  if (auto label = root.string("scenario")) {
    preset = find_scenario(*label);
    if (!preset) root.fail("scenario", "unknown scenario '" + *label + "'");
    c.apply(*preset);
  }

  try {
    {
      Section s = root.section("venue");
      if (auto side = s.number("side_m")) {
        try {
          c.venue = Venue(*side);
        } catch (const std::invalid_argument& e) {
          s.fail("side_m", e.what());
        }
      }
      s.finish();
    }
    {
      Section s = root.section("deployment");
      s.number("inter_site_distance_m", c.delta);
      s.number("ap_height_m", c.ap_height);
      s.finish();
    }
    {
      Section s = root.section("antenna");
      const double ap_deg = *s.number("ap_beamwidth_deg");
      const double ue_deg = *s.number("ue_beamwidth_deg");
      const double side_db = s.number("side_lobe_gain_db").value_or(-10.0);
      c.serving_always_main_lobe = s.boolean("serving_always_main_lobe").value_or(false);
      try {
        c.ap_pattern = AntennaPattern(degrees_to_radians(ap_deg), db_to_linear(side_db));
      } catch (const std::invalid_argument& e) {
        s.fail("ap_beamwidth_deg", e.what());
      }
      try {
        c.ue_pattern = AntennaPattern(degrees_to_radians(ue_deg), db_to_linear(side_db));
      } catch (const std::invalid_argument& e) {
        s.fail("ue_beamwidth_deg", e.what());
      }
      s.finish();
    }
    {
      Section s = root.section("body");
      s.number("width_m", c.blockage.geometry.width);
      s.number("height_m", c.blockage.geometry.height_above_ue);
      s.number("user_body_distance_m", c.blockage.geometry.user_body_distance);
      s.finish();
    }
    {
      Section s = root.section("blockage");
      s.number("rb_density_per_m2", c.blockage.rb_density);
      s.number("quadrature_tolerance", c.blockage.quadrature_tolerance);
      if (auto mode = s.string("mode")) {
        if (*mode == "analytic") {
          c.blockage.mode = BlockageMode::Analytic;
        } else if (*mode == "explicit-bodies") {
          c.blockage.mode = BlockageMode::ExplicitBodies;
        } else {
          s.fail("mode", "expected \"analytic\" or \"explicit-bodies\"");
        }
      }
      s.finish();
    }
    {
      Section s = root.section("channel");
      read_state(s.section("los"), c.channel.los);
      read_state(s.section("nlos"), c.channel.nlos);
      s.finish();
    }
    {
      Section s = root.section("radio");
      s.number("tx_power_dbm", c.radio.tx_power_dbm);
      s.number("bandwidth_hz", c.radio.bandwidth_hz);
      s.number("carrier_hz", c.radio.carrier_hz);
      s.number("noise_figure_db", c.radio.noise_figure_db);
      s.number("sinr_threshold_db", c.radio.sinr_threshold_db);
      s.finish();
    }
    {
      Section s = root.section("simulation");
      if (auto trials = s.integer("trials")) c.trials = *trials;
      if (auto seed = s.unsigned_integer("seed")) c.seed = *seed;
      if (const json* placement = s.find("ue_placement")) {
        if (placement->is_string() && placement->get<std::string>() == "uniform") {
          c.ue_placement = UePlacement::uniform();
        } else if (placement->is_string() && placement->get<std::string>() == "centre") {
          c.ue_placement = UePlacement::fixed(c.venue.centre());
        } else if (placement->is_array() && placement->size() == 2 && (*placement)[0].is_number() &&
                   (*placement)[1].is_number()) {
          c.ue_placement = UePlacement::fixed({(*placement)[0].get<double>(), (*placement)[1].get<double>()});
        } else {
          s.fail("ue_placement", "expected \"uniform\", \"centre\" or [x, y]");
        }
      }
      s.finish();
    }
    {
      Section s = root.section("sweep");
      run.sweep.deltas_m = s.numbers("deltas_m");
      run.sweep.ap_beamwidths_deg = s.numbers("ap_beamwidths_deg");
      run.sweep.ue_beamwidths_deg = s.numbers("ue_beamwidths_deg");
      run.sweep.scenarios = s.strings("scenarios");
      for (const auto& label : run.sweep.scenarios) {
        if (!find_scenario(label)) s.fail("scenarios", "unknown scenario '" + label + "'");
      }
      s.finish();
    }
    {
      Section s = root.section("blockage_prob");
      auto& b = run.blockage_prob;
      s.number("d_min_m", b.d_min_m);
      s.number("d_max_m", b.d_max_m);
      s.number("d_step_m", b.d_step_m);
      if (auto n = s.integer("validation_scenes")) b.validation_scenes = *n;
      if (!(b.d_min_m >= 0.0) || !(b.d_max_m >= b.d_min_m)) s.fail("d_max_m", "need 0 <= d_min_m <= d_max_m");
      if (!(b.d_step_m > 0.0)) s.fail("d_step_m", "must be positive");
      if (b.validation_scenes < 1) s.fail("validation_scenes", "must be at least 1");
      s.finish();
    }
    root.finish();
    c.validate();
    generate_hex_grid(c.venue, c.delta, c.ap_height);
  } catch (const std::invalid_argument& e) {
    throw ConfigError(src + ": " + e.what());
  }

  if (preset && !scenario_matches(c, *preset)) c.scenario = "custom";
  if (!preset) c.scenario = "custom";
  return run;
}

RunConfig load_config(const std::filesystem::path& path, std::span<const std::string> overrides) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError(path.string() + ": cannot open configuration file");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str(), overrides, path.string());
}

std::string dump_config(const RunConfig& run) {
  const SimulationConfig& c = run.simulation;
  json doc = json::object();
  if (auto preset = find_scenario(c.scenario); preset && scenario_matches(c, *preset)) doc["scenario"] = c.scenario;
  doc["venue"] = {{"side_m", c.venue.side()}};
  doc["deployment"] = {{"inter_site_distance_m", c.delta}, {"ap_height_m", c.ap_height}};
  doc["antenna"] = {{"ap_beamwidth_deg", round_decimal(radians_to_degrees(c.ap_pattern.beamwidth()))},
                    {"ue_beamwidth_deg", round_decimal(radians_to_degrees(c.ue_pattern.beamwidth()))},
                    {"side_lobe_gain_db", round_decimal(linear_to_db(c.ap_pattern.side_lobe_gain()))},
                    {"serving_always_main_lobe", c.serving_always_main_lobe}};
  const BodyGeometry& g = c.blockage.geometry;
  doc["body"] = {{"width_m", g.width}, {"height_m", g.height_above_ue}, {"user_body_distance_m", g.user_body_distance}};
  doc["blockage"] = {{"rb_density_per_m2", c.blockage.rb_density},
                     {"mode", c.blockage.mode == BlockageMode::Analytic ? "analytic" : "explicit-bodies"},
                     {"quadrature_tolerance", c.blockage.quadrature_tolerance}};
  doc["channel"] = {{"los", state_json(c.channel.los)}, {"nlos", state_json(c.channel.nlos)}};
  doc["radio"] = {{"tx_power_dbm", c.radio.tx_power_dbm},
                  {"bandwidth_hz", c.radio.bandwidth_hz},
                  {"carrier_hz", c.radio.carrier_hz},
                  {"noise_figure_db", c.radio.noise_figure_db},
                  {"sinr_threshold_db", c.radio.sinr_threshold_db}};
  json placement = "uniform";
  if (c.ue_placement.kind == UePlacement::Kind::FixedPoint) {
    placement = json::array({c.ue_placement.point.x, c.ue_placement.point.y});
  }
  doc["simulation"] = {{"trials", c.trials}, {"seed", c.seed}, {"ue_placement", placement}};
  json sweep = json::object();
  if (!run.sweep.deltas_m.empty()) sweep["deltas_m"] = run.sweep.deltas_m;
  if (!run.sweep.ap_beamwidths_deg.empty()) sweep["ap_beamwidths_deg"] = run.sweep.ap_beamwidths_deg;
  if (!run.sweep.ue_beamwidths_deg.empty()) sweep["ue_beamwidths_deg"] = run.sweep.ue_beamwidths_deg;
  if (!run.sweep.scenarios.empty()) sweep["scenarios"] = run.sweep.scenarios;
  if (!sweep.empty()) doc["sweep"] = sweep;
  const auto& b = run.blockage_prob;
  doc["blockage_prob"] = {{"d_min_m", b.d_min_m},
                          {"d_max_m", b.d_max_m},
                          {"d_step_m", b.d_step_m},
                          {"validation_scenes", b.validation_scenes}};
  return doc.dump(2) + "\n";
}

}  // namespace mmwave
