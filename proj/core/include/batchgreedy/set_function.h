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

#ifndef BATCHGREEDY_SET_FUNCTION_H_
#define BATCHGREEDY_SET_FUNCTION_H_

#include <atomic>
#include <cstdint>
#include <functional>
#include <vector>

#include "batchgreedy/index_set.h"

namespace batchgreedy {

// Gains at or below this are treated as zero when forming ratios.
inline constexpr double kZeroGain = 1e-12;

// Set function S -> F(S) over the ground set {0..m-1}. Every call through
// operator() is counted; the counter is safe to bump from several threads.
class ValueOracle {
 public:
  explicit ValueOracle(int m);
  virtual ~ValueOracle() = default;
  ValueOracle(const ValueOracle&) = delete;
  ValueOracle& operator=(const ValueOracle&) = delete;

  int ground_size() const { return m_; }
  double operator()(const IndexSet& s) const;
  long long eval_count() const { return count_.load(std::memory_order_relaxed); }
  void ResetCount() { count_.store(0, std::memory_order_relaxed); }

 protected:
  virtual double Evaluate(const IndexSet& s) const = 0;

 private:
  int m_;
  mutable std::atomic<long long> count_{0};
};

class ModularOracle : public ValueOracle {
 public:
  explicit ModularOracle(std::vector<double> weights);
  const std::vector<double>& weights() const { return w_; }

 protected:
  double Evaluate(const IndexSet& s) const override;

 private:
  std::vector<double> w_;
};

// Weighted coverage: element i covers a list of universe items; F(S) is the
// total weight of items covered by S. Monotone and submodular.
class CoverageOracle : public ValueOracle {
 public:
  CoverageOracle(std::vector<std::vector<int>> covers, std::vector<double> item_weights);

 protected:
  double Evaluate(const IndexSet& s) const override;

 private:
  std::vector<std::vector<int>> covers_;
  std::vector<double> item_weights_;
};

class FunctionOracle : public ValueOracle {
 public:
  FunctionOracle(int m, std::function<double(const IndexSet&)> f);

 protected:
  double Evaluate(const IndexSet& s) const override;

 private:
  std::function<double(const IndexSet&)> f_;
};

// F(A u B) - F(B). Two evaluations, or one when A is contained in B.
double IncrementalGain(const ValueOracle& f, const IndexSet& a, const IndexSet& b);

struct OptResult {
  IndexSet set;
  double value = 0.0;
};

// Exhaustive maximum over |S| = k (or |S| <= k when monotone is false). Ties
// go to the lexicographically smallest index list. Throws TooLarge when the
// number of candidate subsets exceeds 1e7.
OptResult BruteForceOpt(const ValueOracle& f, int k, bool monotone = true);

// Values of F on all 2^m subsets, indexed by bitmask.
class SubsetTable {
 public:
  static constexpr int kMaxSize = 20;
  // Evaluates f once per subset. Throws TooLarge if m > kMaxSize.
  explicit SubsetTable(const ValueOracle& f);
  SubsetTable(int m, std::vector<double> values);

  int m() const { return m_; }
  double operator[](std::uint64_t mask) const { return v_[mask]; }
  double Gain(std::uint64_t a, std::uint64_t b) const { return v_[a | b] - v_[b]; }

 private:
  int m_;
  std::vector<double> v_;
};

struct RatioWitness {
  IndexSet a;
  IndexSet b;
};

struct RatioReport {
  int k = 0;
  double gamma = 1.0;  // capped to [0, 1]
  double eta = 1.0;
  double gamma_raw = 1.0;  // +inf when every pair was skipped
  double eta_raw = 1.0;
  RatioWitness gamma_witness;
  RatioWitness eta_witness;
};

inline constexpr int kMaxRatioSize = 14;

// Minimum over disjoint (A, B), 1 <= |A| <= k, of sum_v rho_v(B) / rho_A(B).
RatioReport SubmodularityRatio(const SubsetTable& t, int k);
// Minimum over the same pairs of rho_A(B) / sum_v rho_v(B).
RatioReport SupermodularityRatio(const SubsetTable& t, int k);
// Both ratios in one report.
RatioReport ComputeRatios(const SubsetTable& t, int k);

double SubmodularityRatio(const ValueOracle& f, int k);
double SupermodularityRatio(const ValueOracle& f, int k);

// eta_{k1} <= eta_{k2} (raw values) within 1e-12, for k1 >= k2.
bool RatioMonotonicityCheck(const ValueOracle& f, int k1, int k2);

// Largest rho_v(B) - rho_v(A) over A subset of B, v outside B. Non-positive
// exactly when F is submodular.
double MaxDiminishingReturnsViolation(const SubsetTable& t);
// Largest F(S) - F(T) over S subset of T.
double MaxMonotonicityViolation(const SubsetTable& t);

}  // namespace batchgreedy

#endif  // BATCHGREEDY_SET_FUNCTION_H_
