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

#include <filesystem>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "mmwave/config.hpp"
#include "mmwave/engine.hpp"

namespace mmwave::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

/// Everything a subcommand needs besides the parsed configuration.
struct RunManifest {
  std::string subcommand;
  std::filesystem::path config_path;
  std::filesystem::path out_dir = ".";
  std::vector<std::string> overrides;
  std::optional<std::uint64_t> seed;
  bool validate = false;
  bool dump_config = false;
};

inline constexpr std::string_view kBlockageHeader = "d_a_m,p_self,p_random_one,p_blocked";
inline constexpr std::string_view kMetricsHeader =
    "delta_m,omega_a_deg,omega_u_deg,scenario,coverage,coverage_ci,ase_bps_hz_m2,trials,seed";
inline constexpr std::string_view kOptimalHeader =
    "delta_m,scenario,best_omega_a_deg,best_omega_u_deg,peak_coverage,ase_at_peak";

/// Shortest round-trip decimal, locale independent.
std::string format_number(double x);
/// Radians to degrees, rounded to 1e-9 so 28 deg prints as 28.
std::string format_degrees(double radians);

std::string metrics_csv(const MetricsTable& rows);
std::string optimal_csv(const std::vector<OptimalRow>& rows);

/// Scenarios named in the sweep section, or the base configuration as a
/// single scenario when the list is empty.
std::vector<Scenario> sweep_scenarios(const RunConfig& config);

int cmd_blockage_prob(const RunManifest& manifest, const RunConfig& config, std::ostream& out, std::ostream& err,
                      const ExecutionOptions& options = {});
int cmd_simulate(const RunManifest& manifest, const RunConfig& config, std::ostream& out, std::ostream& err,
                 const ExecutionOptions& options = {});
int cmd_sweep(const RunManifest& manifest, const RunConfig& config, std::ostream& out, std::ostream& err,
              const ExecutionOptions& options = {});

/// Full command line minus the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace mmwave::cli
