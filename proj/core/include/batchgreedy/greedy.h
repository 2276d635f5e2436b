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

#ifndef BATCHGREEDY_GREEDY_H_
#define BATCHGREEDY_GREEDY_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "batchgreedy/index_set.h"
#include "batchgreedy/set_function.h"

namespace batchgreedy {

class BatchSchedule {
 public:
  // Every batch must be >= 1.
  explicit BatchSchedule(std::vector<int> batches);
  // ceil(k / q) batches of size q, the last one truncated to k mod q.
  static BatchSchedule Uniform(int q, int k);

  const std::vector<int>& batches() const { return batches_; }
  int k() const { return k_; }
  int steps() const { return static_cast<int>(batches_.size()); }
  int max_batch() const;

 private:
  std::vector<int> batches_;
  int k_ = 0;
};

struct SelectionStep {
  IndexSet batch;
  std::vector<int> ranked;  // batch members, best score first
  double objective = 0.0;   // F after adding the batch
  long long evals = 0;      // oracle calls made during this step
};

struct SelectionTrace {
  std::vector<SelectionStep> steps;
  IndexSet final_set;
  long long total_evals = 0;

  double value() const { return steps.empty() ? 0.0 : steps.back().objective; }
  // Concatenation of the ranked batches, i.e. the order elements were added.
  std::vector<int> RankOrder() const;
};

// Picks the `count` largest scores; ties go to the lower candidate index.
// Returns positions into `candidates`, best first.
std::vector<int> TopScores(const std::vector<int>& candidates,
                           const std::vector<double>& scores, int count);

// Each step evaluates F(A u {a}) for every remaining candidate a, keeps the q_i
// largest gains, then evaluates F(A_i) once. F(empty) is taken to be 0.
SelectionTrace BatchGreedy(const ValueOracle& f, const BatchSchedule& schedule);
SelectionTrace BatchGreedy(const ValueOracle& f, const BatchSchedule& schedule,
                           const IndexSet& candidates);

struct DistributedTrace {
  std::vector<IndexSet> partitions;
  std::vector<SelectionTrace> partition_traces;
  IndexSet merged;
  SelectionTrace final_trace;
  long long total_evals = 0;
};

// Seeded uniform partition of {0..m-1} into n_p parts whose sizes differ by at
// most one; each part is sorted.
std::vector<IndexSet> RandomPartition(int m, int n_p, std::uint64_t seed);

DistributedTrace DistributedBatchGreedy(const ValueOracle& f, int n_p, int l_hat,
                                        int l_tilde, int q, std::uint64_t partition_seed);

struct StochasticConfig {
  double epsilon = 0.5;
  std::uint64_t seed = 0;
  std::optional<int> sample_size;  // overrides the formula when set
};

// ceil((m / k) * ln(q / epsilon)), at least 1.
int StochasticSampleSize(int m, int k, int q, double epsilon);

SelectionTrace StochasticBatchGreedy(const ValueOracle& f, const BatchSchedule& schedule,
                                     const StochasticConfig& cfg);

enum class GreedyVariant { kStandard, kStochastic, kOneShot };

// Oracle calls predicted for a run over a ground set of size m. Stochastic runs
// need the per-step sample size s; one-shot ignores the schedule except k.
long long EvalCountModel(int m, const BatchSchedule& schedule, GreedyVariant variant,
                         int sample_size = 0);
long long EvalCountDistributed(int m, int n_p, int l_hat, int l_tilde, int q);

// 1 - prod_i (1 - q_i eta_i gamma / k), with eta_i the supermodularity ratio
// at cardinality q_i.
double GuaranteeFactor(const BatchSchedule& schedule, double gamma,
                       const std::vector<double>& etas);
double SimplifiedGuarantee(double eta_q, double gamma_k);
double OneShotGuarantee(double eta_k, double gamma_k);
double DistributedGuarantee(double eta_q, double gamma_khat, double gamma_k, int k,
                            int l, int l_hat, int l_tilde);
double StochasticGuarantee(double epsilon, double gamma_k, double eta_q);
// k <= floor(sqrt(m/e) - 1/e) and (m - 2k) / (2 e k^2) >= (q - 1) / ln^2(q / eps).
bool StochasticHypothesesHold(int m, int k, int q, double epsilon);

}  // namespace batchgreedy

#endif  // BATCHGREEDY_GREEDY_H_
