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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

using namespace mmwave;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  explicit TempDir(const std::string& name) : path(fs::temp_directory_path() / ("mmwave_cli_" + name)) {
    fs::remove_all(path);
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  for (std::string f; std::getline(in, f, ',');) out.push_back(f);
  return out;
}

fs::path write_config(const fs::path& dir, const std::string& text) {
  const fs::path p = dir / "config.json";
  std::ofstream(p) << text;
  return p;
}

const std::string kSmall = R"({
  "scenario": "empty-hand",
  "venue": {"side_m": 100},
  "deployment": {"inter_site_distance_m": 12},
  "antenna": {"ap_beamwidth_deg": 28, "ue_beamwidth_deg": 45},
  "simulation": {"trials": 200, "seed": 5},
  "blockage_prob": {"d_min_m": 0, "d_max_m": 30, "d_step_m": 0.5, "validation_scenes": 2000}
})";

int run(std::vector<std::string> args, std::string* out_text = nullptr, std::string* err_text = nullptr) {
  std::ostringstream out, err;
  const int code = cli::run_cli(args, out, err);
  if (out_text) *out_text = out.str();
  if (err_text) *err_text = err.str();
  return code;
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("number formatting is shortest round-trip") {
    CHECK(cli::format_number(0.1) == "0.1");
    CHECK(cli::format_number(-0.0) == "0");
    CHECK(cli::format_number(1e-300) == "1e-300");
    CHECK(cli::format_number(0.18716704181099886) == "0.18716704181099886");
    CHECK(cli::format_degrees(degrees_to_radians(28.0)) == "28");
    CHECK(cli::format_degrees(degrees_to_radians(17.5)) == "17.5");
  }

  TEST_CASE("simulate writes one deterministic row") {
    TempDir dir("simulate");
    const fs::path cfg = write_config(dir.path, kSmall);
    const fs::path a = dir.path / "a", b = dir.path / "b";
    REQUIRE(run({"simulate", "--config", cfg.string(), "--out", a.string()}) == 0);
    REQUIRE(run({"simulate", "--config", cfg.string(), "--out", b.string()}) == 0);
    const std::string csv = slurp(a / "metrics.csv");
    CHECK(csv == slurp(b / "metrics.csv"));
    const auto rows = lines(csv);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0] == cli::kMetricsHeader);
    const auto f = fields(rows[1]);
    REQUIRE(f.size() == 9);
    CHECK(f[0] == "12");
    CHECK(f[1] == "28");
    CHECK(f[2] == "45");
    CHECK(f[3] == "empty-hand");
    CHECK(f[7] == "200");
    CHECK(f[8] == "5");

    REQUIRE(run({"simulate", "--config", cfg.string(), "--out", b.string(), "--seed", "6"}) == 0);
    CHECK(fields(lines(slurp(b / "metrics.csv"))[1])[8] == "6");
  }

  TEST_CASE("simulate over a delta list") {
    TempDir dir("simulate_list");
    const fs::path cfg = write_config(dir.path, kSmall);
    REQUIRE(run({"simulate", "--config", cfg.string(), "--out", dir.path.string(), "--set",
                 "sweep.deltas_m=[8, 16, 32]"}) == 0);
    const auto rows = lines(slurp(dir.path / "metrics.csv"));
    REQUIRE(rows.size() == 4);
    CHECK(fields(rows[3])[0] == "32");
  }

  TEST_CASE("output is independent of the worker count") {
    TempDir dir("threads");
    const fs::path cfg = write_config(dir.path, kSmall);
    std::string csv[2];
    const char* counts[] = {"1", "3"};
    for (int i = 0; i < 2; ++i) {
      ::setenv("MMWAVE_SIM_THREADS", counts[i], 1);
      const fs::path out = dir.path / counts[i];
      REQUIRE(run({"sweep", "--config", cfg.string(), "--out", out.string(), "--set", "sweep.deltas_m=[12, 24]",
                   "--set", "sweep.ue_beamwidths_deg=[45, 90]", "--set",
                   "sweep.scenarios=[\"empty-hand\", \"crowded-pocket\"]"}) == 0);
      csv[i] = slurp(out / "sweep.csv") + slurp(out / "optimal.csv");
    }
    ::unsetenv("MMWAVE_SIM_THREADS");
    CHECK(csv[0] == csv[1]);
  }

  TEST_CASE("singleton sweep selects the only candidate") {
    TempDir dir("sweep");
    const fs::path cfg = write_config(dir.path, kSmall);
    REQUIRE(run({"sweep", "--config", cfg.string(), "--out", dir.path.string()}) == 0);
    const auto grid = lines(slurp(dir.path / "sweep.csv"));
    const auto best = lines(slurp(dir.path / "optimal.csv"));
    REQUIRE(grid.size() == 2);
    REQUIRE(best.size() == 2);
    CHECK(best[0] == cli::kOptimalHeader);
    const auto g = fields(grid[1]);
    const auto o = fields(best[1]);
    CHECK(o[0] == g[0]);
    CHECK(o[1] == g[3]);
    CHECK(o[2] == g[1]);
    CHECK(o[3] == g[2]);
    CHECK(o[4] == g[4]);
    CHECK(o[5] == g[6]);
  }

  TEST_CASE("blockage probability table") {
    TempDir dir("blockage");
    const fs::path cfg = write_config(dir.path, kSmall);
    REQUIRE(run({"blockage-prob", "--config", cfg.string(), "--out", dir.path.string()}) == 0);
    const auto rows = lines(slurp(dir.path / "blockage_prob.csv"));
    REQUIRE(rows.size() == 62);
    CHECK(rows[0] == cli::kBlockageHeader);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const auto f = fields(rows[i]);
      REQUIRE(f.size() == 4);
      CHECK(f[1] == f[3]);
      if (std::stod(f[0]) < 7.5) CHECK(f[3] == "0");
    }

    REQUIRE(run({"blockage-prob", "--config", cfg.string(), "--out", dir.path.string(), "--validate"}) == 0);
    const auto checked = lines(slurp(dir.path / "blockage_prob.csv"));
    CHECK(checked[0] == std::string(cli::kBlockageHeader) + ",p_empirical,stderr");
    for (std::size_t i = 1; i < checked.size(); ++i) {
      const auto f = fields(checked[i]);
      REQUIRE(f.size() == 6);
      CHECK(std::abs(std::stod(f[3]) - std::stod(f[4])) <= 0.03);
    }
  }

  TEST_CASE("dump-config round trip through the command line") {
    TempDir dir("dump");
    const fs::path cfg = write_config(dir.path, kSmall);
    std::string dumped;
    REQUIRE(run({"simulate", "--config", cfg.string(), "--dump-config", "--set", "radio.noise_figure_db=7"}, &dumped) ==
            0);
    const RunConfig direct = load_config(cfg, std::vector<std::string>{"radio.noise_figure_db=7"});
    CHECK(parse_config(dumped).simulation == direct.simulation);
  }

  TEST_CASE("exit codes") {
    TempDir dir("errors");
    std::string err;
    CHECK(run({"simulate", "--config", (dir.path / "missing.json").string()}, nullptr, &err) == cli::kExitConfig);
    CHECK(err.find("cannot open") != std::string::npos);
    const fs::path empty = write_config(dir.path, "");
    CHECK(run({"simulate", "--config", empty.string()}, nullptr, &err) == cli::kExitConfig);
    CHECK(err.find("antenna.ap_beamwidth_deg") != std::string::npos);
    const fs::path cfg = write_config(dir.path, kSmall);
    CHECK(run({"simulate", "--config", cfg.string(), "--set", "antenna.ue_beamwidth_deg=0"}) == cli::kExitConfig);
    CHECK(run({"simulate", "--config", cfg.string(), "--set", "nonsense"}) == cli::kExitConfig);
    CHECK(run({"explode", "--config", cfg.string()}) == cli::kExitConfig);
    CHECK(run({"simulate", "--config", cfg.string(), "--validate"}) == cli::kExitConfig);
    CHECK(run({}) == cli::kExitConfig);
    CHECK(run({"--help"}) == cli::kExitOk);
  }
}
