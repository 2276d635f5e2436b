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

#ifndef BATCHGREEDY_TOOLS_HARNESS_CONFIG_H_
#define BATCHGREEDY_TOOLS_HARNESS_CONFIG_H_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "batchgreedy/problems.h"
#include "json.hpp"

namespace batchgreedy::harness {

class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Heuristic {
  kStdGreedy,
  kMmGreedy,
  kMmReverseGreedy,
  kDistributed,
  kStochastic,
  kRandomSelection,
};

std::string_view HeuristicName(Heuristic h);
Heuristic ParseHeuristic(std::string_view name);

enum class ProblemKind { kGenerator, kEnsemble };

struct GeneratorProblem {
  int n = 20;
  int m = 60;
  std::optional<double> decay_rate;
  double top_singular = 1.0;
  KernelSpec prior{KernelKind::kSquaredExponential, 0.105};
  KernelSpec noise{KernelKind::kSquaredExponential, 0.021};
};

struct EnsembleProblem {
  std::string x_path;
  std::string y_path;
  double param_variance_floor = 1.0;
};

struct ProblemConfig {
  ProblemKind kind = ProblemKind::kGenerator;
  GeneratorProblem generator;
  EnsembleProblem ensemble;
};

struct DistributedOptions {
  int num_partitions = 2;
};

struct StochasticOptions {
  double epsilon = 0.5;
};

enum class VerifyInstanceKind { kCorrelated, kDiagonalNoise, kModular };

struct VerifyOptions {
  static constexpr int kMaxM = 12;
  static constexpr int kMaxK = 6;

  VerifyInstanceKind instance_kind = VerifyInstanceKind::kCorrelated;
  int num_instances = 200;
  int m = 10;
  int n = 12;
  int k = 4;
  std::vector<int> batch_sizes{1, 2, 4};
  int num_subset_trials = 50;
  int stochastic_trials = 50;
  double epsilon = 0.5;
  // Test hook: the checked oracle reports inflated values.
  bool corrupt_oracle = false;
};

struct ExperimentConfig {
  ProblemConfig problem;
  std::vector<Heuristic> heuristics{Heuristic::kStdGreedy};
  std::vector<double> batch_fractions{1.0};
  std::optional<int> max_cardinality;
  int num_instances = 1;
  int num_random_selections = 0;
  std::uint64_t seed = 0;
  std::string output_dir = "out";
  bool verify_mode = false;
  DistributedOptions distributed;
  StochasticOptions stochastic;
  VerifyOptions verify;
};

// Rejects unknown keys and out-of-range values with ConfigError.
ExperimentConfig ParseConfig(const nlohmann::json& j);
ExperimentConfig LoadConfig(const std::string& path);
void ValidateVerifyOptions(const VerifyOptions& v);

// max(1, round(fraction * m)).
int BatchSizeFromFraction(double fraction, int m);

}  // namespace batchgreedy::harness

#endif  // BATCHGREEDY_TOOLS_HARNESS_CONFIG_H_
