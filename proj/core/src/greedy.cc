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

#include "batchgreedy/greedy.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "batchgreedy/error.h"
#include "batchgreedy/random.h"

namespace batchgreedy {
namespace {

void RequireFits(const BatchSchedule& schedule, int available) {
  if (schedule.k() > available) {
    throw Error(ErrorCode::kScheduleExceedsGround,
                "schedule selects " + std::to_string(schedule.k()) + " of " +
                    std::to_string(available) + " candidates");
  }
}

// Runs one greedy step over `pool`, appending the chosen batch to `selected`.
SelectionStep GreedyStep(const ValueOracle& f, const IndexSet& selected, double base,
                         const std::vector<int>& pool, int q, long long* evals) {
  std::vector<double> gains(pool.size());
  for (std::size_t i = 0; i < pool.size(); ++i) {
    gains[i] = f(selected.With(pool[i])) - base;
  }
  SelectionStep step;
  for (int pos : TopScores(pool, gains, q)) step.ranked.push_back(pool[pos]);
  step.batch = IndexSet(step.ranked);
  step.objective = f(selected.Union(step.batch));
  step.evals = static_cast<long long>(pool.size()) + 1;
  *evals += step.evals;
  return step;
}

std::vector<int> PartitionSizes(int m, int n_p) {
  std::vector<int> sizes(n_p, m / n_p);
  for (int i = 0; i < m % n_p; ++i) ++sizes[i];
  return sizes;
}

void CheckPartition(int m, int n_p, int l_hat, int l_tilde, int q) {
  if (n_p < 1 || n_p > m) {
    throw Error(ErrorCode::kPartitionTooSmall, "need 1 <= n_p <= m");
  }
  if (q < 1 || l_hat < 1 || l_tilde < 1) {
    throw Error(ErrorCode::kInvalidArgument, "q, l_hat and l_tilde must be >= 1");
  }
  const int largest = (m + n_p - 1) / n_p;
  if (static_cast<long long>(q) * l_hat > largest) {
    throw Error(ErrorCode::kPartitionTooSmall,
                "q * l_hat exceeds the partition size " + std::to_string(largest));
  }
}

}  // namespace

BatchSchedule::BatchSchedule(std::vector<int> batches) : batches_(std::move(batches)) {
  for (int q : batches_) {
    if (q < 1) throw Error(ErrorCode::kInvalidArgument, "batch sizes must be >= 1");
    k_ += q;
  }
}

BatchSchedule BatchSchedule::Uniform(int q, int k) {
  if (q < 1 || k < 0) throw Error(ErrorCode::kInvalidArgument, "need q >= 1 and k >= 0");
  std::vector<int> b(k / q, q);
  if (k % q) b.push_back(k % q);
  return BatchSchedule(std::move(b));
}

int BatchSchedule::max_batch() const {
  return batches_.empty() ? 0 : *std::max_element(batches_.begin(), batches_.end());
}

std::vector<int> SelectionTrace::RankOrder() const {
  std::vector<int> order;
  for (const auto& s : steps) order.insert(order.end(), s.ranked.begin(), s.ranked.end());
  return order;
}

std::vector<int> TopScores(const std::vector<int>& candidates,
                           const std::vector<double>& scores, int count) {
  std::vector<int> pos(candidates.size());
  std::iota(pos.begin(), pos.end(), 0);
  count = std::min<int>(count, static_cast<int>(pos.size()));
  std::partial_sort(pos.begin(), pos.begin() + count, pos.end(), [&](int a, int b) {
    if (scores[a] != scores[b]) return scores[a] > scores[b];
    return candidates[a] < candidates[b];
  });
  pos.resize(count);
  return pos;
}

SelectionTrace BatchGreedy(const ValueOracle& f, const BatchSchedule& schedule) {
  return BatchGreedy(f, schedule, IndexSet::Range(f.ground_size()));
}

SelectionTrace BatchGreedy(const ValueOracle& f, const BatchSchedule& schedule,
                           const IndexSet& candidates) {
  CheckWithin(candidates, f.ground_size());
  RequireFits(schedule, candidates.size());
  SelectionTrace trace;
  IndexSet selected;
  double base = 0.0;
  for (int q : schedule.batches()) {
    const IndexSet remaining = candidates.Minus(selected);
    SelectionStep step =
        GreedyStep(f, selected, base, remaining.indices(), q, &trace.total_evals);
    selected = selected.Union(step.batch);
    base = step.objective;
    trace.steps.push_back(std::move(step));
  }
  trace.final_set = selected;
  return trace;
}

std::vector<IndexSet> RandomPartition(int m, int n_p, std::uint64_t seed) {
  if (n_p < 1 || n_p > m) throw Error(ErrorCode::kPartitionTooSmall, "need 1 <= n_p <= m");
  std::vector<int> all(m);
  std::iota(all.begin(), all.end(), 0);
  Rng rng(seed);
  std::vector<int> perm = SampleWithoutReplacement(std::move(all), m, rng);
  std::vector<IndexSet> parts;
  int offset = 0;
  for (int size : PartitionSizes(m, n_p)) {
    parts.emplace_back(std::vector<int>(perm.begin() + offset, perm.begin() + offset + size));
    offset += size;
  }
  return parts;
}

DistributedTrace DistributedBatchGreedy(const ValueOracle& f, int n_p, int l_hat,
                                        int l_tilde, int q, std::uint64_t partition_seed) {
  const int m = f.ground_size();
  CheckPartition(m, n_p, l_hat, l_tilde, q);
  DistributedTrace out;
  out.partitions = RandomPartition(m, n_p, partition_seed);
  for (const IndexSet& part : out.partitions) {
    const int k_part = std::min(q * l_hat, part.size());
    SelectionTrace t = BatchGreedy(f, BatchSchedule::Uniform(q, k_part), part);
    out.merged = out.merged.Union(t.final_set);
    out.total_evals += t.total_evals;
    out.partition_traces.push_back(std::move(t));
  }
  const int k_final = std::min(q * l_tilde, out.merged.size());
  out.final_trace = BatchGreedy(f, BatchSchedule::Uniform(q, k_final), out.merged);
  out.total_evals += out.final_trace.total_evals;
  return out;
}

int StochasticSampleSize(int m, int k, int q, double epsilon) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw Error(ErrorCode::kInvalidArgument, "epsilon must lie in (0, 1)");
  }
  if (k < 1 || q < 1) throw Error(ErrorCode::kInvalidArgument, "need k, q >= 1");
  const double s = std::ceil(static_cast<double>(m) / k * std::log(q / epsilon));
  return std::max(1, static_cast<int>(s));
}

SelectionTrace StochasticBatchGreedy(const ValueOracle& f, const BatchSchedule& schedule,
                                     const StochasticConfig& cfg) {
  const int m = f.ground_size();
  RequireFits(schedule, m);
  const int s = cfg.sample_size ? *cfg.sample_size
                                : StochasticSampleSize(m, std::max(1, schedule.k()),
                                                       std::max(1, schedule.max_batch()),
                                                       cfg.epsilon);
  if (s < schedule.max_batch()) {
    throw Error(ErrorCode::kBatchExceedsSample,
                "batch size " + std::to_string(schedule.max_batch()) +
                    " exceeds sample size " + std::to_string(s));
  }
  SelectionTrace trace;
  IndexSet selected;
  double base = 0.0;
  for (int i = 0; i < schedule.steps(); ++i) {
    Rng rng(DeriveSeed(cfg.seed, static_cast<std::uint64_t>(i)));
    std::vector<int> sample =
        SampleWithoutReplacement(selected.Complement(m).indices(), s, rng);
    std::sort(sample.begin(), sample.end());
    SelectionStep step =
        GreedyStep(f, selected, base, sample, schedule.batches()[i], &trace.total_evals);
    selected = selected.Union(step.batch);
    base = step.objective;
    trace.steps.push_back(std::move(step));
  }
  trace.final_set = selected;
  return trace;
}

long long EvalCountModel(int m, const BatchSchedule& schedule, GreedyVariant variant,
                         int sample_size) {
  if (variant == GreedyVariant::kOneShot) return static_cast<long long>(m) + 1;
  long long total = 0;
  long long chosen = 0;
  for (int q : schedule.batches()) {
    const long long remaining = m - chosen;
    const long long pool = variant == GreedyVariant::kStochastic
                               ? std::min<long long>(sample_size, remaining)
                               : remaining;
    total += pool + 1;
    chosen += q;
  }
  return total;
}

long long EvalCountDistributed(int m, int n_p, int l_hat, int l_tilde, int q) {
  CheckPartition(m, n_p, l_hat, l_tilde, q);
  long long total = 0;
  int merged = 0;
  for (int size : PartitionSizes(m, n_p)) {
    const int k_part = std::min(q * l_hat, size);
    total += EvalCountModel(size, BatchSchedule::Uniform(q, k_part), GreedyVariant::kStandard);
    merged += k_part;
  }
  const int k_final = std::min(q * l_tilde, merged);
  return total +
         EvalCountModel(merged, BatchSchedule::Uniform(q, k_final), GreedyVariant::kStandard);
}

double GuaranteeFactor(const BatchSchedule& schedule, double gamma,
                       const std::vector<double>& etas) {
  if (etas.size() != schedule.batches().size()) {
    throw Error(ErrorCode::kDimensionMismatch, "need one eta per batch");
  }
  const double k = schedule.k();
  double prod = 1.0;
  for (std::size_t i = 0; i < etas.size(); ++i) {
    prod *= 1.0 - schedule.batches()[i] * etas[i] * gamma / k;
  }
  return 1.0 - prod;
}

double SimplifiedGuarantee(double eta_q, double gamma_k) {
  return 1.0 - std::exp(-eta_q * gamma_k);
}

double OneShotGuarantee(double eta_k, double gamma_k) { return eta_k * gamma_k; }

double DistributedGuarantee(double eta_q, double gamma_khat, double gamma_k, int k,
                            int l, int l_hat, int l_tilde) {
  const double first =
      1.0 - std::exp(-eta_q * gamma_khat * static_cast<double>(l_tilde) / l_hat);
  const double second = 1.0 - std::exp(-eta_q * gamma_k * static_cast<double>(l_hat) / l);
  return first * second * gamma_k / k;
}

double StochasticGuarantee(double epsilon, double gamma_k, double eta_q) {
  return 1.0 - std::exp(-(1.0 - epsilon) * gamma_k * eta_q);
}

bool StochasticHypothesesHold(int m, int k, int q, double epsilon) {
  const double e = std::exp(1.0);
  const double k_max = std::floor(std::sqrt(m / e) - 1.0 / e);
  if (k > k_max) return false;
  const double lq = std::log(q / epsilon);
  return (m - 2.0 * k) / (2.0 * e * k * k) >= (q - 1.0) / (lq * lq);
}

}  // namespace batchgreedy
