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

#include "harness/verify.h"

#include <algorithm>
#include <cmath>
#include <memory>
#include <random>

#include "batchgreedy/batchgreedy.h"
#include "harness/parallel.h"

namespace batchgreedy::harness {
namespace {

enum Check {
  kBatchGreedy,
  kMmTau,
  kSandwich,
  kAltSandwich,
  kSpectralRatio,
  kReverseBound,
  kDeviationBound,
  kMonotone,
  kDiminishingReturns,
  kDistributed,
  kStochastic,
  kUnitRatios,
  kNumChecks,
};

constexpr double kGuaranteeTol = 1e-9;
constexpr double kExhaustiveTol = 1e-10;

std::vector<CheckResult> EmptyChecks() {
  const std::pair<const char*, double> spec[kNumChecks] = {
      {"batch_greedy_guarantee", kGuaranteeTol},
      {"mm_tau_guarantee", kGuaranteeTol},
      {"modular_bound_sandwich", kGuaranteeTol},
      {"alt_modular_bound_sandwich", kGuaranteeTol},
      {"ratio_spectral_lower_bound", kGuaranteeTol},
      {"reverse_bound_dominates_loss", kGuaranteeTol},
      {"loss_within_value_plus_deviation", kGuaranteeTol},
      {"monotonicity", kExhaustiveTol},
      {"diminishing_returns", kExhaustiveTol},
      {"distributed_guarantee", kGuaranteeTol},
      {"stochastic_mean_guarantee", kGuaranteeTol},
      {"modular_unit_ratios", kGuaranteeTol},
  };
  std::vector<CheckResult> out(kNumChecks);
  for (int i = 0; i < kNumChecks; ++i) {
    out[i].name = spec[i].first;
    out[i].tolerance = spec[i].second;
  }
  return out;
}

std::unique_ptr<ValueOracle> Checked(const ValueOracle& base, bool corrupt) {
  if (!corrupt) return nullptr;
  return std::make_unique<FunctionOracle>(base.ground_size(), [&base](const IndexSet& s) {
    return base(s) * (1.0 + 0.5 * s.size());
  });
}

void CheckBatchGreedy(const VerifyOptions& o, const ValueOracle& f, const SubsetTable& table,
                      const OptResult& opt, CheckResult& c) {
  const double gamma = ComputeRatios(table, o.k).gamma;
  for (int q : o.batch_sizes) {
    const BatchSchedule s = BatchSchedule::Uniform(q, o.k);
    std::vector<double> etas;
    for (int qi : s.batches()) etas.push_back(ComputeRatios(table, qi).eta);
    const double factor = GuaranteeFactor(s, gamma, etas);
    c.ExpectLe(factor * opt.value, BatchGreedy(f, s).value());
  }
}

std::vector<CheckResult> ModularInstance(const VerifyOptions& o, std::uint64_t seed) {
  std::vector<CheckResult> c = EmptyChecks();
  Rng rng(seed);
  std::uniform_real_distribution<double> weight(0.1, 1.0);
  std::vector<double> w(o.m);
  for (double& x : w) x = weight(rng);
  ModularOracle base(w);
  const std::unique_ptr<ValueOracle> corrupted = Checked(base, o.corrupt_oracle);
  const ValueOracle& f = corrupted ? *corrupted : base;
  const SubsetTable table(f);
  const OptResult opt = BruteForceOpt(f, o.k);

  CheckBatchGreedy(o, f, table, opt, c[kBatchGreedy]);
  for (int k = 1; k <= o.k; ++k) {
    const RatioReport r = ComputeRatios(table, k);
    const double gamma = std::min(r.gamma_raw, 1e300);
    const double eta = std::min(r.eta_raw, 1e300);
    c[kUnitRatios].ExpectLe(std::abs(gamma - 1.0), 0.0);
    c[kUnitRatios].ExpectLe(std::abs(eta - 1.0), 0.0);
  }
  c[kMonotone].ExpectLe(MaxMonotonicityViolation(table), 0.0);
  c[kDiminishingReturns].ExpectLe(MaxDiminishingReturnsViolation(table), 0.0);
  for (int i : {kMmTau, kSandwich, kAltSandwich, kSpectralRatio, kReverseBound, kDeviationBound,
                kDistributed, kStochastic}) {
    ++c[i].skipped;
  }
  return c;
}

std::vector<CheckResult> ModelInstance(const VerifyOptions& o, std::uint64_t seed) {
  std::vector<CheckResult> c = EmptyChecks();
  const bool diagonal = o.instance_kind == VerifyInstanceKind::kDiagonalNoise;
  const LinearGaussianModel model =
      diagonal ? RandomDiagonalNoiseModel(o.m, o.n, seed) : RandomCorrelatedModel(o.m, o.n, seed);
  MutualInformationOracle base(model);
  const std::unique_ptr<ValueOracle> corrupted = Checked(base, o.corrupt_oracle);
  const ValueOracle& f = corrupted ? *corrupted : base;
  const SubsetTable table(f);
  const OptResult opt = BruteForceOpt(f, o.k);
  const int m = o.m;
  const std::uint64_t full = (std::uint64_t{1} << m) - 1;

  CheckBatchGreedy(o, f, table, opt, c[kBatchGreedy]);

  MiLowerBoundProvider provider(model);
  for (int q : o.batch_sizes) {
    const SelectionTrace t = MmGreedy(provider, f, BatchSchedule::Uniform(q, o.k));
    const TauCertificate cert = ComputeTauCertificate(f, provider, t, opt.set);
    c[kMmTau].ExpectLe(cert.implied * opt.value, t.value());
  }

  for (const IndexSet& cond : {IndexSet{}, IndexSet{static_cast<int>(seed % m)}}) {
    const MiBounds b = MiModularBounds(model, cond);
    const std::uint64_t cmask = cond.Mask();
    const std::uint64_t rest = full & ~cmask;
    for (std::uint64_t s = rest; s != 0; s = (s - 1) & rest) {
      double lo = 0, up = 0, alo = 0, aup = 0;
      for (int i = 0; i < b.candidates.size(); ++i) {
        if (!(s >> b.candidates[i] & 1)) continue;
        lo += b.lower(i);
        up += b.upper(i);
        alo += b.alt_lower(i);
        aup += b.alt_upper(i);
      }
      const double gain = table.Gain(s, cmask);
      c[kSandwich].ExpectLe(lo, gain);
      c[kSandwich].ExpectLe(gain, up);
      c[kAltSandwich].ExpectLe(alo, gain);
      c[kAltSandwich].ExpectLe(gain, aup);
    }
  }

  if (o.n > o.m) {
    const double bound = RatioLowerBound(model);
    for (int k = 1; k <= o.k; ++k) {
      const RatioReport r = ComputeRatios(table, k);
      c[kSpectralRatio].ExpectLe(bound, r.gamma);
      c[kSpectralRatio].ExpectLe(bound, r.eta);
    }
  } else {
    ++c[kSpectralRatio].skipped;
  }

  Rng rng(DeriveSeed(seed, 7));
  std::uniform_int_distribution<std::uint64_t> pick(0, full);
  for (int t = 0; t < o.num_subset_trials; ++t) {
    const std::uint64_t d = pick(rng) & ~(std::uint64_t{1} << (t % m));
    const std::uint64_t p = pick(rng) & full & ~d;
    const double loss = table[full] - table[d] - table[full & ~d & ~p];
    c[kReverseBound].ExpectLe(loss, ReverseBound(model, IndexSet::FromMask(d), IndexSet::FromMask(p)));
  }

  const double dev = SubmodDeviation(model, IndexSet::Range(m));
  for (std::uint64_t s = 1; s <= full; ++s) {
    c[kDeviationBound].ExpectLe(table[full] - table[full & ~s], table[s] + dev);
  }

  c[kMonotone].ExpectLe(MaxMonotonicityViolation(table), 0.0);
  if (diagonal) {
    c[kDiminishingReturns].ExpectLe(MaxDiminishingReturnsViolation(table), 0.0);
  } else {
    ++c[kDiminishingReturns].skipped;
  }

  const double gamma_k = ComputeRatios(table, o.k).gamma;
  const double eta_1 = ComputeRatios(table, 1).eta;
  const int n_p = 2;
  if (o.k <= (m + n_p - 1) / n_p) {
    const double factor = DistributedGuarantee(eta_1, gamma_k, gamma_k, o.k, o.k, o.k, o.k);
    const DistributedTrace d = DistributedBatchGreedy(f, n_p, o.k, o.k, 1, DeriveSeed(seed, 1));
    c[kDistributed].ExpectLe(factor * opt.value, d.final_trace.value());
  } else {
    ++c[kDistributed].skipped;
  }

  if (o.stochastic_trials > 0 && StochasticHypothesesHold(m, o.k, 1, o.epsilon)) {
    double mean = 0.0;
    for (int t = 0; t < o.stochastic_trials; ++t) {
      StochasticConfig sc;
      sc.epsilon = o.epsilon;
      sc.seed = DeriveSeed(DeriveSeed(seed, 2), static_cast<std::uint64_t>(t));
      mean += StochasticBatchGreedy(f, BatchSchedule::Uniform(1, o.k), sc).value();
    }
    mean /= o.stochastic_trials;
    c[kStochastic].ExpectLe(StochasticGuarantee(o.epsilon, gamma_k, eta_1) * opt.value, mean);
  } else {
    ++c[kStochastic].skipped;
  }
  ++c[kUnitRatios].skipped;
  return c;
}

}  // namespace

void CheckResult::ExpectLe(double lhs, double rhs) {
  ++evaluated;
  const double miss = lhs - rhs;
  if (miss > max_violation) max_violation = miss;
  if (!(miss <= tolerance)) ++violations;
}

void CheckResult::Merge(const CheckResult& other) {
  evaluated += other.evaluated;
  skipped += other.skipped;
  violations += other.violations;
  max_violation = std::max(max_violation, other.max_violation);
}

bool VerifyReport::pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass(); });
}

const CheckResult* VerifyReport::Find(const std::string& name) const {
  for (const CheckResult& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

nlohmann::json VerifyReport::ToJson() const {
  const char* kind = options.instance_kind == VerifyInstanceKind::kModular         ? "modular"
                     : options.instance_kind == VerifyInstanceKind::kDiagonalNoise ? "diagonal_noise"
                                                                                   : "correlated";
  nlohmann::json list = nlohmann::json::array();
  std::vector<std::string> failed;
  for (const CheckResult& c : checks) {
    list.push_back({{"name", c.name},
                    {"tolerance", c.tolerance},
                    {"evaluated", c.evaluated},
                    {"skipped_instances", c.skipped},
                    {"violations", c.violations},
                    {"max_violation", c.max_violation},
                    {"pass", c.pass()}});
    if (!c.pass()) failed.push_back(c.name);
  }
  return {{"instance_kind", kind},
          {"num_instances", options.num_instances},
          {"m", options.m},
          {"n", options.n},
          {"k", options.k},
          {"batch_sizes", options.batch_sizes},
          {"seed", seed},
          {"corrupt_oracle", options.corrupt_oracle},
          {"checks", list},
          {"failed", failed},
          {"pass", pass()}};
}

VerifyReport RunVerify(const VerifyOptions& options, std::uint64_t seed, int threads) {
  ValidateVerifyOptions(options);
  std::vector<std::vector<CheckResult>> per_instance(options.num_instances);
  ParallelFor(options.num_instances, threads, [&](int i) {
    const std::uint64_t s = DeriveSeed(seed, static_cast<std::uint64_t>(i));
    per_instance[i] = options.instance_kind == VerifyInstanceKind::kModular
                          ? ModularInstance(options, s)
                          : ModelInstance(options, s);
  });
  VerifyReport report;
  report.options = options;
  report.seed = seed;
  report.checks = EmptyChecks();
  for (const auto& inst : per_instance) {
    for (int i = 0; i < kNumChecks; ++i) report.checks[i].Merge(inst[i]);
  }
  return report;
}

}  // namespace batchgreedy::harness
