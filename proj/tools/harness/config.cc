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

#include "harness/config.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <initializer_list>
#include <set>

namespace batchgreedy::harness {
namespace {

using nlohmann::json;

void RequireKeys(const json& j, std::string_view where,
                 std::initializer_list<std::string_view> allowed) {
  if (!j.is_object()) throw ConfigError(std::string(where) + ": expected an object");
  for (const auto& [key, value] : j.items()) {
    bool known = false;
    for (std::string_view a : allowed) known = known || key == a;
    if (!known) throw ConfigError(std::string(where) + ": unknown key '" + key + "'");
  }
}

template <typename T>
void Read(const json& j, const char* key, T& out, std::string_view where) {
  if (!j.contains(key)) return;
  try {
    out = j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string(where) + "." + key + ": " + e.what());
  }
}

KernelSpec ParseKernel(const json& j, KernelSpec spec, std::string_view where) {
  RequireKeys(j, where, {"kind", "length_scale", "variance", "nugget"});
  std::string kind = spec.kind == KernelKind::kExponential ? "exponential" : "squared_exponential";
  Read(j, "kind", kind, where);
  if (kind == "squared_exponential") {
    spec.kind = KernelKind::kSquaredExponential;
  } else if (kind == "exponential") {
    spec.kind = KernelKind::kExponential;
  } else {
    throw ConfigError(std::string(where) + ".kind: unknown kernel '" + kind + "'");
  }
  Read(j, "length_scale", spec.length_scale, where);
  Read(j, "variance", spec.variance, where);
  Read(j, "nugget", spec.nugget, where);
  if (!(spec.length_scale > 0) || !(spec.variance > 0) || !(spec.nugget >= 0)) {
    throw ConfigError(std::string(where) + ": need length_scale > 0, variance > 0, nugget >= 0");
  }
  return spec;
}

ProblemConfig ParseProblem(const json& j) {
  ProblemConfig p;
  std::string type = "generator";
  if (j.contains("type")) Read(j, "type", type, "problem");
  if (type == "generator") {
    RequireKeys(j, "problem",
                {"type", "n", "m", "decay_rate", "top_singular", "prior_kernel", "noise_kernel"});
    GeneratorProblem& g = p.generator;
    Read(j, "n", g.n, "problem");
    Read(j, "m", g.m, "problem");
    if (j.contains("decay_rate")) {
      double c = 0;
      Read(j, "decay_rate", c, "problem");
      if (!(c > 0)) throw ConfigError("problem.decay_rate must be positive");
      g.decay_rate = c;
    }
    Read(j, "top_singular", g.top_singular, "problem");
    if (g.n < 1 || g.m < 1) throw ConfigError("problem: n and m must be >= 1");
    if (!(g.top_singular > 0)) throw ConfigError("problem.top_singular must be positive");
    if (j.contains("prior_kernel")) g.prior = ParseKernel(j["prior_kernel"], g.prior, "prior_kernel");
    if (j.contains("noise_kernel")) g.noise = ParseKernel(j["noise_kernel"], g.noise, "noise_kernel");
  } else if (type == "ensemble") {
    RequireKeys(j, "problem", {"type", "x_path", "y_path", "param_variance_floor"});
    p.kind = ProblemKind::kEnsemble;
    Read(j, "x_path", p.ensemble.x_path, "problem");
    Read(j, "y_path", p.ensemble.y_path, "problem");
    Read(j, "param_variance_floor", p.ensemble.param_variance_floor, "problem");
    if (p.ensemble.x_path.empty() || p.ensemble.y_path.empty()) {
      throw ConfigError("problem: ensemble needs x_path and y_path");
    }
  } else {
    throw ConfigError("problem.type: unknown problem type '" + type + "'");
  }
  return p;
}

VerifyOptions ParseVerify(const json& j) {
  RequireKeys(j, "verify",
              {"instance_kind", "num_instances", "m", "n", "k", "batch_sizes", "num_subset_trials",
               "stochastic_trials", "epsilon", "corrupt_oracle"});
  VerifyOptions v;
  std::string kind = "correlated";
  Read(j, "instance_kind", kind, "verify");
  if (kind == "correlated") {
    v.instance_kind = VerifyInstanceKind::kCorrelated;
  } else if (kind == "diagonal_noise") {
    v.instance_kind = VerifyInstanceKind::kDiagonalNoise;
  } else if (kind == "modular") {
    v.instance_kind = VerifyInstanceKind::kModular;
  } else {
    throw ConfigError("verify.instance_kind: unknown kind '" + kind + "'");
  }
  Read(j, "num_instances", v.num_instances, "verify");
  Read(j, "m", v.m, "verify");
  Read(j, "n", v.n, "verify");
  Read(j, "k", v.k, "verify");
  Read(j, "batch_sizes", v.batch_sizes, "verify");
  Read(j, "num_subset_trials", v.num_subset_trials, "verify");
  Read(j, "stochastic_trials", v.stochastic_trials, "verify");
  Read(j, "epsilon", v.epsilon, "verify");
  Read(j, "corrupt_oracle", v.corrupt_oracle, "verify");
  return v;
}

}  // namespace

std::string_view HeuristicName(Heuristic h) {
  switch (h) {
    case Heuristic::kStdGreedy:
      return "std_greedy";
    case Heuristic::kMmGreedy:
      return "mm_greedy";
    case Heuristic::kMmReverseGreedy:
      return "mm_reverse_greedy";
    case Heuristic::kDistributed:
      return "distributed";
    case Heuristic::kStochastic:
      return "stochastic";
    case Heuristic::kRandomSelection:
      return "random_selection";
  }
  return "unknown";
}

Heuristic ParseHeuristic(std::string_view name) {
  for (Heuristic h : {Heuristic::kStdGreedy, Heuristic::kMmGreedy, Heuristic::kMmReverseGreedy,
                      Heuristic::kDistributed, Heuristic::kStochastic,
                      Heuristic::kRandomSelection}) {
    if (HeuristicName(h) == name) return h;
  }
  throw ConfigError("unknown heuristic '" + std::string(name) + "'");
}

void ValidateVerifyOptions(const VerifyOptions& v) {
  if (v.num_instances < 1) throw ConfigError("verify.num_instances must be >= 1");
  if (v.m < 1 || v.m > VerifyOptions::kMaxM) {
    throw ConfigError("verify.m must lie in [1, " + std::to_string(VerifyOptions::kMaxM) + "]");
  }
  if (v.k < 1 || v.k > VerifyOptions::kMaxK || v.k > v.m) {
    throw ConfigError("verify.k must lie in [1, min(m, " + std::to_string(VerifyOptions::kMaxK) +
                      ")]");
  }
  if (v.n < 1) throw ConfigError("verify.n must be >= 1");
  if (v.batch_sizes.empty()) throw ConfigError("verify.batch_sizes must not be empty");
  for (int q : v.batch_sizes) {
    if (q < 1 || q > v.k) throw ConfigError("verify.batch_sizes entries must lie in [1, k]");
  }
  if (v.num_subset_trials < 0 || v.stochastic_trials < 0) {
    throw ConfigError("verify: trial counts must be >= 0");
  }
  if (!(v.epsilon > 0 && v.epsilon < 1)) throw ConfigError("verify.epsilon must lie in (0, 1)");
}

ExperimentConfig ParseConfig(const json& j) {
  RequireKeys(j, "config",
              {"problem", "heuristics", "batch_fractions", "max_cardinality", "num_instances",
               "num_random_selections", "seed", "output_dir", "verify_mode", "distributed",
               "stochastic", "verify"});
  ExperimentConfig c;
  if (j.contains("problem")) c.problem = ParseProblem(j["problem"]);
  if (j.contains("heuristics")) {
    std::vector<std::string> names;
    Read(j, "heuristics", names, "config");
    c.heuristics.clear();
    std::set<Heuristic> seen;
    for (const std::string& name : names) {
      const Heuristic h = ParseHeuristic(name);
      if (!seen.insert(h).second) throw ConfigError("heuristic '" + name + "' listed twice");
      c.heuristics.push_back(h);
    }
  }
  Read(j, "batch_fractions", c.batch_fractions, "config");
  if (c.batch_fractions.empty()) throw ConfigError("batch_fractions must not be empty");
  for (double f : c.batch_fractions) {
    if (!(f > 0 && f <= 1)) throw ConfigError("batch_fractions must lie in (0, 1]");
  }
  if (j.contains("max_cardinality")) {
    int k = 0;
    Read(j, "max_cardinality", k, "config");
    if (k < 1) throw ConfigError("max_cardinality must be >= 1");
    c.max_cardinality = k;
  }
  Read(j, "num_instances", c.num_instances, "config");
  if (c.num_instances < 1) throw ConfigError("num_instances must be >= 1");
  Read(j, "num_random_selections", c.num_random_selections, "config");
  if (c.num_random_selections < 0) throw ConfigError("num_random_selections must be >= 0");
  Read(j, "seed", c.seed, "config");
  Read(j, "output_dir", c.output_dir, "config");
  Read(j, "verify_mode", c.verify_mode, "config");
  if (j.contains("distributed")) {
    RequireKeys(j["distributed"], "distributed", {"num_partitions"});
    Read(j["distributed"], "num_partitions", c.distributed.num_partitions, "distributed");
    if (c.distributed.num_partitions < 1) throw ConfigError("distributed.num_partitions >= 1");
  }
  if (j.contains("stochastic")) {
    RequireKeys(j["stochastic"], "stochastic", {"epsilon"});
    Read(j["stochastic"], "epsilon", c.stochastic.epsilon, "stochastic");
    if (!(c.stochastic.epsilon > 0 && c.stochastic.epsilon < 1)) {
      throw ConfigError("stochastic.epsilon must lie in (0, 1)");
    }
  }
  if (j.contains("verify")) c.verify = ParseVerify(j["verify"]);
  ValidateVerifyOptions(c.verify);
  return c;
}

ExperimentConfig LoadConfig(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError(path + ": " + e.what());
  }
  return ParseConfig(j);
}

int BatchSizeFromFraction(double fraction, int m) {
  return std::max(1, static_cast<int>(std::lround(fraction * m)));
}

}  // namespace batchgreedy::harness
