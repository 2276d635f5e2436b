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

#ifndef BATCHGREEDY_MM_H_
#define BATCHGREEDY_MM_H_

#include <atomic>
#include <vector>

#include "batchgreedy/greedy.h"
#include "batchgreedy/index_set.h"
#include "batchgreedy/set_function.h"

namespace batchgreedy {

// Per-candidate weights describing modular surrogates of rho_Q(A) for batches
// Q drawn from the candidates not yet selected.
struct ModularWeights {
  std::vector<int> candidates;  // ascending
  std::vector<double> lower;
  std::vector<double> upper;  // empty when the provider has no upper bound
};

class ModularBoundProvider {
 public:
  explicit ModularBoundProvider(int m) : m_(m) {}
  virtual ~ModularBoundProvider() = default;
  ModularBoundProvider(const ModularBoundProvider&) = delete;
  ModularBoundProvider& operator=(const ModularBoundProvider&) = delete;

  int ground_size() const { return m_; }
  ModularWeights Query(const IndexSet& selected) const;
  long long query_count() const { return queries_.load(std::memory_order_relaxed); }
  // True when sum of lower weights over Q never exceeds rho_Q(A).
  virtual bool certified() const = 0;

 protected:
  virtual ModularWeights Compute(const IndexSet& selected) const = 0;

 private:
  int m_;
  mutable std::atomic<long long> queries_{0};
};

// Weights scale * rho_v(A), using the given oracle.
class ExactGainProvider : public ModularBoundProvider {
 public:
  explicit ExactGainProvider(const ValueOracle& f, double scale = 1.0);
  bool certified() const override { return false; }

 protected:
  ModularWeights Compute(const IndexSet& selected) const override;

 private:
  const ValueOracle& f_;
  double scale_;
};

class ConstantProvider : public ModularBoundProvider {
 public:
  ConstantProvider(int m, double value) : ModularBoundProvider(m), value_(value) {}
  bool certified() const override { return false; }

 protected:
  ModularWeights Compute(const IndexSet& selected) const override;

 private:
  double value_;
};

// Each step queries the provider once, keeps the q_i largest lower weights
// (ties to the lower index) and evaluates F once on the grown set.
SelectionTrace MmGreedy(const ModularBoundProvider& provider, const ValueOracle& f,
                        const BatchSchedule& schedule);

struct TauCertificate {
  std::vector<double> tau;
  std::vector<double> tau_loose;  // empty without upper weights
  double implied = 0.0;
  double implied_loose = 0.0;
};

// 1 - prod_i (1 - q_i / (k (1 + tau_i))); infinite tau contributes nothing.
double TauImpliedFactor(const std::vector<int>& batches, const std::vector<double>& tau);

// Per-step slack of the modular lower bound relative to the step gain, given
// an optimal set. Uses one provider query and at most one oracle call per step.
TauCertificate ComputeTauCertificate(const ValueOracle& f,
                                     const ModularBoundProvider& provider,
                                     const SelectionTrace& trace, const IndexSet& opt_set);

}  // namespace batchgreedy

#endif  // BATCHGREEDY_MM_H_
