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

#include "cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cmath>
#include <fstream>
#include <ostream>

#include "mmwave/blockage.hpp"
#include "mmwave/quadrature.hpp"

namespace mmwave::cli {

namespace {

class OutputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw OutputError("cannot open " + path.string() + " for writing");
  file << contents;
  file.close();
  if (!file) throw OutputError("failed writing " + path.string());
}

void prepare_out_dir(const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    throw OutputError("output directory " + dir.string() + " is not usable");
  }
}

}  // namespace

std::string format_number(double x) {
  if (x == 0.0) return "0";  // folds -0
  char buffer[64];
  const auto result = std::to_chars(buffer, buffer + sizeof buffer, x);
  return std::string(buffer, result.ptr);
}

std::string format_degrees(double radians) {
  return format_number(std::round(radians_to_degrees(radians) * 1e9) / 1e9);
}

std::string metrics_csv(const MetricsTable& rows) {
  std::string csv(kMetricsHeader);
  csv += '\n';
  for (const auto& r : rows) {
    csv += format_number(r.delta) + ',' + format_degrees(r.omega_a) + ',' + format_degrees(r.omega_u) + ',' +
           r.scenario + ',' + format_number(r.coverage) + ',' + format_number(r.coverage_ci_halfwidth) + ',' +
           format_number(r.ase) + ',' + std::to_string(r.trials) + ',' + std::to_string(r.seed) + '\n';
  }
  return csv;
}

std::string optimal_csv(const std::vector<OptimalRow>& rows) {
  std::string csv(kOptimalHeader);
  csv += '\n';
  for (const auto& r : rows) {
    csv += format_number(r.delta) + ',' + r.scenario + ',' + format_degrees(r.best_omega_a) + ',' +
           format_degrees(r.best_omega_u) + ',' + format_number(r.peak_coverage) + ',' + format_number(r.ase_at_peak) +
           '\n';
  }
  return csv;
}

std::vector<Scenario> sweep_scenarios(const RunConfig& config) {
  std::vector<Scenario> out;
  for (const auto& label : config.sweep.scenarios) out.push_back(*find_scenario(label));
  if (out.empty()) {
    const SimulationConfig& c = config.simulation;
    out.push_back({c.scenario, c.blockage.rb_density, c.blockage.geometry.user_body_distance, c.channel});
  }
  return out;
}

int cmd_blockage_prob(const RunManifest& manifest, const RunConfig& config, std::ostream& out, std::ostream&,
                      const ExecutionOptions& options) {
  const SimulationConfig& c = config.simulation;
  const std::vector<double> grid = config.blockage_prob.grid();
  const double side = c.venue.side();
  const bool has_random = c.blockage.random_body_count(side) > 0;

  std::vector<BlockageValidationRow> validation;
  if (manifest.validate) {
    SimulationConfig v = c;
    v.blockage.mode = BlockageMode::ExplicitBodies;
    if (v.ue_placement.kind != UePlacement::Kind::FixedPoint) v.ue_placement = UePlacement::fixed(v.venue.centre());
    v.trials = config.blockage_prob.validation_scenes;
    validation = validate_blockage(v, grid, options);
  }

  std::string csv(kBlockageHeader);
  csv += manifest.validate ? ",p_empirical,stderr\n" : "\n";
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double d = grid[i];
    const double p0 = p_self(d, c.blockage.geometry, c.ap_height);
    const double p1 =
        has_random ? p_random_one(d, c.blockage.geometry, c.ap_height, side, c.blockage.quadrature_tolerance) : 0.0;
    const double pb = p_blocked(d, c.blockage, c.ap_height, side);
    csv += format_number(d) + ',' + format_number(p0) + ',' + format_number(p1) + ',' + format_number(pb);
    if (manifest.validate) {
      csv += ',' + format_number(validation[i].empirical) + ',' + format_number(validation[i].standard_error);
    }
    csv += '\n';
  }
  const auto path = manifest.out_dir / "blockage_prob.csv";
  write_file(path, csv);
  out << "wrote " << path.string() << " (" << grid.size() << " rows)\n";
  return kExitOk;
}

int cmd_simulate(const RunManifest& manifest, const RunConfig& config, std::ostream& out, std::ostream&,
                 const ExecutionOptions& options) {
  std::vector<double> deltas = config.sweep.deltas_m;
  if (deltas.empty()) deltas.push_back(config.simulation.delta);
  MetricsTable rows;
  for (double delta : deltas) {
    SimulationConfig c = config.simulation;
    c.delta = delta;
    rows.push_back(run_batch(c, options));
  }
  const auto path = manifest.out_dir / "metrics.csv";
  write_file(path, metrics_csv(rows));
  out << "wrote " << path.string() << " (" << rows.size() << " rows)\n";
  return kExitOk;
}

int cmd_sweep(const RunManifest& manifest, const RunConfig& config, std::ostream& out, std::ostream&,
              const ExecutionOptions& options) {
  const SimulationConfig& c = config.simulation;
  const SweepSpec& s = config.sweep;
  std::vector<double> deltas = s.deltas_m.empty() ? std::vector<double>{c.delta} : s.deltas_m;
  std::vector<double> ap_bw{c.ap_pattern.beamwidth()};
  std::vector<double> ue_bw{c.ue_pattern.beamwidth()};
  if (!s.ap_beamwidths_deg.empty()) {
    ap_bw.clear();
    for (double deg : s.ap_beamwidths_deg) ap_bw.push_back(degrees_to_radians(deg));
  }
  if (!s.ue_beamwidths_deg.empty()) {
    ue_bw.clear();
    for (double deg : s.ue_beamwidths_deg) ue_bw.push_back(degrees_to_radians(deg));
  }
  const std::vector<Scenario> scenarios = sweep_scenarios(config);
  const SweepResult result = sweep(c, deltas, ap_bw, ue_bw, scenarios, options);
  write_file(manifest.out_dir / "sweep.csv", metrics_csv(result.grid));
  write_file(manifest.out_dir / "optimal.csv", optimal_csv(result.optimal));
  out << "wrote " << (manifest.out_dir / "sweep.csv").string() << " (" << result.grid.size() << " rows) and "
      << (manifest.out_dir / "optimal.csv").string() << " (" << result.optimal.size() << " rows)\n";
  return kExitOk;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Indoor mmWave ceiling-AP simulator"};
  app.require_subcommand(1);
  RunManifest manifest;
  std::uint64_t seed = 0;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", manifest.config_path, "JSON configuration file")->required();
    sub->add_option("--out", manifest.out_dir, "Output directory")->capture_default_str();
    sub->add_option("--seed", seed, "Override simulation.seed");
    sub->add_option("--set", manifest.overrides, "Override a key, e.g. --set deployment.ap_height_m=8")
        ->allow_extra_args(false);
    sub->add_flag("--dump-config", manifest.dump_config, "Print the effective configuration and exit");
  };
  CLI::App* blockage = app.add_subcommand("blockage-prob", "Analytic blockage probability against AP distance");
  add_common(blockage);
  blockage->add_flag("--validate", manifest.validate, "Also run the explicit-body Monte Carlo check");
  CLI::App* simulate = app.add_subcommand("simulate", "Coverage and ASE for the configured point(s)");
  add_common(simulate);
  CLI::App* sweep_cmd = app.add_subcommand("sweep", "Beamwidth sweep with coverage-optimal selection");
  add_common(sweep_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }
  for (CLI::App* sub : {blockage, simulate, sweep_cmd}) {
    if (sub->parsed()) {
      manifest.subcommand = sub->get_name();
      if (sub->count("--seed") > 0) manifest.seed = seed;
    }
  }

  std::vector<std::string> overrides = manifest.overrides;
  if (manifest.seed) overrides.push_back("simulation.seed=" + std::to_string(*manifest.seed));

  RunConfig config;
  try {
    config = load_config(manifest.config_path, overrides);
  } catch (const ConfigError& e) {
    err << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  }
  if (manifest.dump_config) {
    out << dump_config(config);
    return kExitOk;
  }

  try {
    prepare_out_dir(manifest.out_dir);
    if (manifest.subcommand == "blockage-prob") return cmd_blockage_prob(manifest, config, out, err);
    if (manifest.subcommand == "simulate") return cmd_simulate(manifest, config, out, err);
    return cmd_sweep(manifest, config, out, err);
  } catch (const QuadratureError& e) {
    err << "numerical failure: " << e.what() << '\n';
    return kExitNumerical;
  } catch (const std::invalid_argument& e) {
    err << "configuration error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const OutputError& e) {
    err << "output error: " << e.what() << '\n';
    return kExitConfig;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace mmwave::cli
