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
#include <filesystem>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "mmwave/engine.hpp"

namespace mmwave {

/// Invalid or unreadable configuration; the message carries the location.
class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

/// Grid axes for `simulate` and `sweep`. Beamwidths stay in degrees here;
/// empty lists fall back to the base configuration's value.
struct SweepSpec {
  std::vector<double> deltas_m;
  std::vector<double> ap_beamwidths_deg;
  std::vector<double> ue_beamwidths_deg;
  std::vector<std::string> scenarios;

  friend bool operator==(const SweepSpec&, const SweepSpec&) = default;
};

struct BlockageProbSpec {
  double d_min_m = 0.0;
  double d_max_m = 100.0;
  double d_step_m = 0.5;
  std::int64_t validation_scenes = 100'000;

  std::vector<double> grid() const;
  friend bool operator==(const BlockageProbSpec&, const BlockageProbSpec&) = default;
};

struct RunConfig {
  SimulationConfig simulation;
  SweepSpec sweep;
  BlockageProbSpec blockage_prob;
};

/// Keys with no default; a configuration must set every one of them.
std::span<const std::string_view> required_config_keys();

/// Parses the JSON configuration text. `overrides` are `dotted.key=value`
/// pairs applied before validation; values parse as JSON, falling back to a
/// plain string.
RunConfig parse_config(std::string_view text, std::span<const std::string> overrides = {},
                       std::string_view source = "<config>");

RunConfig load_config(const std::filesystem::path& path, std::span<const std::string> overrides = {});

/// Fully explicit JSON rendering that parses back to the same configuration.
std::string dump_config(const RunConfig& config);

}  // namespace mmwave
