// Copyright 2026 The batchgreedy Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstdint>
#include <exception>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>

#include "CLI11.hpp"
#include "batchgreedy/error.h"
#include "harness/config.h"
#include "harness/sweep.h"
#include "harness/verify.h"

namespace {

namespace fs = std::filesystem;
using batchgreedy::harness::ExperimentConfig;

struct Options {
  std::string config_path;
  std::optional<std::string> out_dir;
  std::optional<std::uint64_t> seed;
  int threads = 1;
};

void AddCommon(CLI::App* cmd, Options& o) {
  cmd->add_option("--config", o.config_path, "JSON experiment configuration")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--out", o.out_dir, "output directory (overrides output_dir)");
  cmd->add_option("--seed", o.seed, "base seed (overrides seed)");
  cmd->add_option("--threads", o.threads, "worker threads; 0 uses all cores")
      ->check(CLI::NonNegativeNumber);
}

ExperimentConfig Resolve(const Options& o, int& threads) {
  ExperimentConfig cfg = batchgreedy::harness::LoadConfig(o.config_path);
  if (o.out_dir) cfg.output_dir = *o.out_dir;
  if (o.seed) cfg.seed = *o.seed;
  threads = o.threads > 0 ? o.threads : static_cast<int>(std::thread::hardware_concurrency());
  fs::create_directories(cfg.output_dir);
  return cfg;
}

void WriteJson(const fs::path& path, const nlohmann::json& j) {
  std::ofstream out(path);
  out << j.dump(2) << '\n';
  if (!out) throw std::runtime_error("failed to write " + path.string());
}

bool Verify(const ExperimentConfig& cfg, int threads) {
  const batchgreedy::harness::VerifyReport report =
      batchgreedy::harness::RunVerify(cfg.verify, cfg.seed, threads);
  WriteJson(fs::path(cfg.output_dir) / "verify.json", report.ToJson());
  for (const auto& c : report.checks) {
    if (!c.pass()) {
      std::cerr << "verify: " << c.name << " failed on " << c.violations << " of " << c.evaluated
                << " evaluations (max violation " << c.max_violation << ")\n";
    }
  }
  std::cout << "verify: " << (report.pass() ? "pass" : "FAIL") << " -> "
            << (fs::path(cfg.output_dir) / "verify.json").string() << '\n';
  return report.pass();
}

int Sweep(const ExperimentConfig& cfg, int threads) {
  const batchgreedy::harness::SweepResult r = batchgreedy::harness::RunSweep(cfg, threads);
  const fs::path dir(cfg.output_dir);
  {
    std::ofstream csv(dir / "runs.csv");
    batchgreedy::harness::WriteRunsCsv(r, csv);
    if (!csv) throw std::runtime_error("failed to write runs.csv");
  }
  WriteJson(dir / "summary.json", batchgreedy::harness::SummaryJson(r));
  std::cout << "sweep: " << r.trajectories.size() << " trajectories -> " << dir.string() << '\n';
  if (cfg.verify_mode && !Verify(cfg, threads)) return 1;
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Batch greedy sensor selection experiments"};
  app.require_subcommand(1);
  Options sweep_opts, verify_opts;
  CLI::App* sweep = app.add_subcommand("sweep", "run a batch-size sweep and write CSV/JSON");
  AddCommon(sweep, sweep_opts);
  CLI::App* verify = app.add_subcommand("verify", "brute-force guarantee verification");
  AddCommon(verify, verify_opts);
  CLI11_PARSE(app, argc, argv);

  try {
    int threads = 1;
    if (sweep->parsed()) return Sweep(Resolve(sweep_opts, threads), threads);
    return Verify(Resolve(verify_opts, threads), threads) ? 0 : 1;
  } catch (const batchgreedy::harness::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
