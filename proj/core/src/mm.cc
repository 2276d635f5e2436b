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

#include "batchgreedy/mm.h"

#include <algorithm>
#include <cmath>
#include <limits>

#include "batchgreedy/error.h"

namespace batchgreedy {
namespace {

double SumOver(const ModularWeights& w, const std::vector<double>& values, const IndexSet& s) {
  double sum = 0.0;
  for (std::size_t i = 0; i < w.candidates.size(); ++i) {
    if (s.Contains(w.candidates[i])) sum += values[i];
  }
  return sum;
}

double Tau(double slack, double gain, int q, int k) {
  if (slack <= 0.0) return 0.0;
  if (gain <= 0.0) return std::numeric_limits<double>::infinity();
  return slack * q / (k * gain);
}

}  // namespace

ModularWeights ModularBoundProvider::Query(const IndexSet& selected) const {
  CheckWithin(selected, m_);
  queries_.fetch_add(1, std::memory_order_relaxed);
  ModularWeights w = Compute(selected);
  if (w.lower.size() != w.candidates.size() ||
      (!w.upper.empty() && w.upper.size() != w.candidates.size())) {
    throw Error(ErrorCode::kDimensionMismatch, "provider returned mismatched weights");
  }
  return w;
}

ExactGainProvider::ExactGainProvider(const ValueOracle& f, double scale)
    : ModularBoundProvider(f.ground_size()), f_(f), scale_(scale) {}

ModularWeights ExactGainProvider::Compute(const IndexSet& selected) const {
  ModularWeights w;
  w.candidates = selected.Complement(ground_size()).indices();
  const double base = selected.empty() ? 0.0 : f_(selected);
  for (int v : w.candidates) w.lower.push_back(scale_ * (f_(selected.With(v)) - base));
  return w;
}

ModularWeights ConstantProvider::Compute(const IndexSet& selected) const {
  ModularWeights w;
  w.candidates = selected.Complement(ground_size()).indices();
  w.lower.assign(w.candidates.size(), value_);
  return w;
}

SelectionTrace MmGreedy(const ModularBoundProvider& provider, const ValueOracle& f,
                        const BatchSchedule& schedule) {
  if (provider.ground_size() != f.ground_size()) {
    throw Error(ErrorCode::kDimensionMismatch, "provider and oracle ground sets differ");
  }
  if (schedule.k() > f.ground_size()) {
    throw Error(ErrorCode::kScheduleExceedsGround, "schedule larger than ground set");
  }
  SelectionTrace trace;
  IndexSet selected;
  for (int q : schedule.batches()) {
    const ModularWeights w = provider.Query(selected);
    SelectionStep step;
    for (int pos : TopScores(w.candidates, w.lower, q)) step.ranked.push_back(w.candidates[pos]);
    step.batch = IndexSet(step.ranked);
    selected = selected.Union(step.batch);
    step.objective = f(selected);
    step.evals = 1;
    trace.total_evals += 1;
    trace.steps.push_back(std::move(step));
  }
  trace.final_set = selected;
  return trace;
}

double TauImpliedFactor(const std::vector<int>& batches, const std::vector<double>& tau) {
  if (batches.size() != tau.size()) {
    throw Error(ErrorCode::kDimensionMismatch, "need one tau per batch");
  }
  double k = 0.0;
  for (int q : batches) k += q;
  double prod = 1.0;
  for (std::size_t i = 0; i < tau.size(); ++i) {
    if (std::isinf(tau[i])) continue;
    prod *= 1.0 - batches[i] / (k * (1.0 + tau[i]));
  }
  return 1.0 - prod;
}

TauCertificate ComputeTauCertificate(const ValueOracle& f,
                                     const ModularBoundProvider& provider,
                                     const SelectionTrace& trace, const IndexSet& opt_set) {
  if (opt_set.empty()) throw Error(ErrorCode::kTooLarge, "an optimal set is required");
  CheckWithin(opt_set, f.ground_size());
  std::vector<int> batches;
  for (const auto& s : trace.steps) batches.push_back(s.batch.size());
  int k = 0;
  for (int q : batches) k += q;

  TauCertificate cert;
  bool have_upper = true;
  IndexSet prev;
  double prev_value = 0.0;
  for (std::size_t i = 0; i < trace.steps.size(); ++i) {
    const SelectionStep& step = trace.steps[i];
    const ModularWeights w = provider.Query(prev);
    const IndexSet missing = opt_set.Minus(prev);
    const double opt_gain = missing.empty() ? 0.0 : f(opt_set.Union(prev)) - prev_value;
    const double lower_opt = SumOver(w, w.lower, missing);
    const double gain = step.objective - prev_value;
    cert.tau.push_back(Tau(opt_gain - lower_opt, gain, step.batch.size(), k));
    if (w.upper.empty()) {
      have_upper = false;
    } else {
      const double upper_opt = SumOver(w, w.upper, missing);
      const double lower_batch = SumOver(w, w.lower, step.batch);
      cert.tau_loose.push_back(Tau(upper_opt - lower_opt, lower_batch, step.batch.size(), k));
    }
    prev = prev.Union(step.batch);
    prev_value = step.objective;
  }
  cert.implied = TauImpliedFactor(batches, cert.tau);
  if (have_upper) {
    cert.implied_loose = TauImpliedFactor(batches, cert.tau_loose);
  } else {
    cert.tau_loose.clear();
  }
  return cert;
}

}  // namespace batchgreedy
