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

#include "batchgreedy/set_function.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <string>

#include "batchgreedy/error.h"

namespace batchgreedy {
namespace {

constexpr double kMaxBruteForceSubsets = 1e7;

double Binomial(int n, int k) {
  if (k < 0 || k > n) return 0.0;
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return std::round(r);
}

void RequireRatioSize(int m) {
  if (m > kMaxRatioSize) {
    throw Error(ErrorCode::kTooLarge,
                "ratio enumeration needs m <= " + std::to_string(kMaxRatioSize));
  }
}

double SingletonSum(const SubsetTable& t, std::uint64_t a, std::uint64_t b) {
  double s = 0.0;
  while (a != 0) {
    const std::uint64_t bit = a & (~a + 1);
    s += t.Gain(bit, b);
    a &= a - 1;
  }
  return s;
}

// Walks every disjoint (A, B) with 1 <= |A| <= k and calls
// visit(a_mask, b_mask, set_gain, singleton_sum).
template <typename Visit>
void ForEachPair(const SubsetTable& t, int k, Visit&& visit) {
  const int m = t.m();
  const std::uint64_t full = (std::uint64_t{1} << m) - 1;
  for (std::uint64_t b = 0; b <= full; ++b) {
    const std::uint64_t comp = full & ~b;
    for (std::uint64_t a = comp; a != 0; a = (a - 1) & comp) {
      if (std::popcount(a) > k) continue;
      visit(a, b, t.Gain(a, b), SingletonSum(t, a, b));
    }
  }
}

double Cap(double raw) {
  if (std::isinf(raw)) return 1.0;
  return std::clamp(raw, 0.0, 1.0);
}

}  // namespace

ValueOracle::ValueOracle(int m) : m_(m) {
  if (m < 1) throw Error(ErrorCode::kInvalidArgument, "oracle needs m >= 1");
}

double ValueOracle::operator()(const IndexSet& s) const {
  CheckWithin(s, m_);
  count_.fetch_add(1, std::memory_order_relaxed);
  return Evaluate(s);
}

ModularOracle::ModularOracle(std::vector<double> weights)
    : ValueOracle(static_cast<int>(weights.size())), w_(std::move(weights)) {}

double ModularOracle::Evaluate(const IndexSet& s) const {
  double sum = 0.0;
  for (int v : s) sum += w_[v];
  return sum;
}

CoverageOracle::CoverageOracle(std::vector<std::vector<int>> covers,
                               std::vector<double> item_weights)
    : ValueOracle(static_cast<int>(covers.size())),
      covers_(std::move(covers)),
      item_weights_(std::move(item_weights)) {
  for (const auto& c : covers_) {
    for (int item : c) {
      if (item < 0 || item >= static_cast<int>(item_weights_.size())) {
        throw Error(ErrorCode::kIndexOutOfRange, "coverage item out of range");
      }
    }
  }
}

double CoverageOracle::Evaluate(const IndexSet& s) const {
  std::vector<char> hit(item_weights_.size(), 0);
  double sum = 0.0;
  for (int v : s) {
    for (int item : covers_[v]) {
      if (!hit[item]) {
        hit[item] = 1;
        sum += item_weights_[item];
      }
    }
  }
  return sum;
}

FunctionOracle::FunctionOracle(int m, std::function<double(const IndexSet&)> f)
    : ValueOracle(m), f_(std::move(f)) {}

double FunctionOracle::Evaluate(const IndexSet& s) const { return f_(s); }

double IncrementalGain(const ValueOracle& f, const IndexSet& a, const IndexSet& b) {
  if (a.IsSubsetOf(b)) {
    f(b);
    return 0.0;
  }
  return f(a.Union(b)) - f(b);
}

OptResult BruteForceOpt(const ValueOracle& f, int k, bool monotone) {
  const int m = f.ground_size();
  if (k < 0) throw Error(ErrorCode::kInvalidArgument, "negative cardinality");
  k = std::min(k, m);
  const int k_lo = monotone ? k : 0;
  double total = 0.0;
  for (int j = k_lo; j <= k; ++j) total += Binomial(m, j);
  if (total > kMaxBruteForceSubsets) {
    throw Error(ErrorCode::kTooLarge, "too many subsets for exhaustive search");
  }
  OptResult best;
  bool have = false;
  std::vector<int> idx;
  for (int j = k_lo; j <= k; ++j) {
    idx.resize(j);
    for (int i = 0; i < j; ++i) idx[i] = i;
    while (true) {
      IndexSet s(idx);
      const double v = f(s);
      if (!have || v > best.value || (v == best.value && s < best.set)) {
        best = {s, v};
        have = true;
      }
      int i = j - 1;
      while (i >= 0 && idx[i] == m - j + i) --i;
      if (i < 0) break;
      ++idx[i];
      for (int r = i + 1; r < j; ++r) idx[r] = idx[r - 1] + 1;
    }
  }
  return best;
}

SubsetTable::SubsetTable(const ValueOracle& f) : m_(f.ground_size()) {
  if (m_ > kMaxSize) {
    throw Error(ErrorCode::kTooLarge, "subset table needs m <= " + std::to_string(kMaxSize));
  }
  const std::uint64_t n = std::uint64_t{1} << m_;
  v_.resize(n);
  for (std::uint64_t mask = 0; mask < n; ++mask) v_[mask] = f(IndexSet::FromMask(mask));
}

SubsetTable::SubsetTable(int m, std::vector<double> values) : m_(m), v_(std::move(values)) {
  if (m < 0 || m > kMaxSize || v_.size() != (std::size_t{1} << m)) {
    throw Error(ErrorCode::kDimensionMismatch, "subset table size must be 2^m");
  }
}

RatioReport SubmodularityRatio(const SubsetTable& t, int k) {
  RatioReport r = ComputeRatios(t, k);
  r.eta = r.eta_raw = 1.0;
  r.eta_witness = {};
  return r;
}

RatioReport SupermodularityRatio(const SubsetTable& t, int k) {
  RatioReport r = ComputeRatios(t, k);
  r.gamma = r.gamma_raw = 1.0;
  r.gamma_witness = {};
  return r;
}

RatioReport ComputeRatios(const SubsetTable& t, int k) {
  RequireRatioSize(t.m());
  if (k < 1) throw Error(ErrorCode::kInvalidArgument, "ratio needs k >= 1");
  const double inf = std::numeric_limits<double>::infinity();
  RatioReport r;
  r.k = k;
  r.gamma_raw = inf;
  r.eta_raw = inf;
  std::uint64_t ga = 0, gb = 0, ea = 0, eb = 0;
  ForEachPair(t, k, [&](std::uint64_t a, std::uint64_t b, double set_gain, double singles) {
    if (set_gain > kZeroGain) {
      const double g = singles / set_gain;
      if (g < r.gamma_raw) {
        r.gamma_raw = g;
        ga = a;
        gb = b;
      }
    }
    if (singles > kZeroGain) {
      const double e = set_gain / singles;
      if (e < r.eta_raw) {
        r.eta_raw = e;
        ea = a;
        eb = b;
      }
    }
  });
  r.gamma = Cap(r.gamma_raw);
  r.eta = Cap(r.eta_raw);
  r.gamma_witness = {IndexSet::FromMask(ga), IndexSet::FromMask(gb)};
  r.eta_witness = {IndexSet::FromMask(ea), IndexSet::FromMask(eb)};
  return r;
}

double SubmodularityRatio(const ValueOracle& f, int k) {
  RequireRatioSize(f.ground_size());
  return SubmodularityRatio(SubsetTable(f), k).gamma;
}

double SupermodularityRatio(const ValueOracle& f, int k) {
  RequireRatioSize(f.ground_size());
  return SupermodularityRatio(SubsetTable(f), k).eta;
}

bool RatioMonotonicityCheck(const ValueOracle& f, int k1, int k2) {
  if (k1 < k2) throw Error(ErrorCode::kInvalidArgument, "expects k1 >= k2");
  RequireRatioSize(f.ground_size());
  const SubsetTable t(f);
  const double e1 = SupermodularityRatio(t, k1).eta_raw;
  const double e2 = SupermodularityRatio(t, k2).eta_raw;
  if (std::isinf(e1) && std::isinf(e2)) return true;
  return e1 <= e2 + 1e-12;
}

double MaxDiminishingReturnsViolation(const SubsetTable& t) {
  RequireRatioSize(t.m());
  const int m = t.m();
  const std::uint64_t full = (std::uint64_t{1} << m) - 1;
  double worst = -std::numeric_limits<double>::infinity();
  for (std::uint64_t b = 0; b <= full; ++b) {
    for (std::uint64_t a = b;; a = (a - 1) & b) {
      for (int v = 0; v < m; ++v) {
        const std::uint64_t bit = std::uint64_t{1} << v;
        if (b & bit) continue;
        worst = std::max(worst, t.Gain(bit, b) - t.Gain(bit, a));
      }
      if (a == 0) break;
    }
  }
  return worst;
}

double MaxMonotonicityViolation(const SubsetTable& t) {
  RequireRatioSize(t.m());
  const std::uint64_t full = (std::uint64_t{1} << t.m()) - 1;
  double worst = -std::numeric_limits<double>::infinity();
  for (std::uint64_t big = 0; big <= full; ++big) {
    for (std::uint64_t s = big;; s = (s - 1) & big) {
      worst = std::max(worst, t[s] - t[big]);
      if (s == 0) break;
    }
  }
  return worst;
}

}  // namespace batchgreedy
