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

#ifndef BATCHGREEDY_TOOLS_HARNESS_SWEEP_H_
#define BATCHGREEDY_TOOLS_HARNESS_SWEEP_H_

#include <cstdint>
#include <ostream>
#include <vector>

#include "batchgreedy/oed.h"
#include "harness/config.h"
#include "json.hpp"

namespace batchgreedy::harness {

struct Trajectory {
  int instance_id = 0;
  Heuristic heuristic = Heuristic::kStdGreedy;
  double batch_fraction = 0.0;  // 0 for random selection
  int q = 0;                    // 0 for random selection
  std::uint64_t seed = 0;
  std::vector<double> mi;        // mi[j - 1]: MI of the first j selected indices
  std::vector<long long> evals;  // cumulative oracle calls; empty for random selection
  double mi_full = 0.0;
};

struct Quantiles {
  long long count = 0;
  double median = 0.0;
  double q10 = 0.0;
  double q90 = 0.0;
  double min = 0.0;
  double max = 0.0;
};

// Linear interpolation between order statistics at position p (n - 1).
Quantiles ComputeQuantiles(std::vector<double> values);

struct SummaryEntry {
  Heuristic heuristic = Heuristic::kStdGreedy;
  double batch_fraction = 0.0;
  int q = 0;
  int cardinality = 0;
  Quantiles relative_mi;
};

struct SweepResult {
  int m = 0;
  int max_cardinality = 0;
  int num_instances = 0;
  std::vector<Trajectory> trajectories;  // sorted by instance, then config order
  std::vector<SummaryEntry> summary;
};

// Trajectories of every configured heuristic on one model.
std::vector<Trajectory> RunInstance(const ExperimentConfig& cfg, const LinearGaussianModel& model,
                                    int instance_id, std::uint64_t instance_seed);

// Instance i uses DeriveSeed(cfg.seed, i). Output does not depend on threads.
SweepResult RunSweep(const ExperimentConfig& cfg, int threads);

const SummaryEntry* FindSummary(const SweepResult& r, Heuristic h, double batch_fraction,
                                int cardinality);

void WriteRunsCsv(const SweepResult& r, std::ostream& out);
nlohmann::json SummaryJson(const SweepResult& r);

}  // namespace batchgreedy::harness

#endif  // BATCHGREEDY_TOOLS_HARNESS_SWEEP_H_
