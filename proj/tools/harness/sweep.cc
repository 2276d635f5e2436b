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

#include "harness/sweep.h"

#include <algorithm>
#include <cmath>
#include <charconv>
#include <map>
#include <memory>
#include <numeric>
#include <string>
#include <tuple>
#include <utility>

#include "batchgreedy/batchgreedy.h"
#include "harness/parallel.h"

namespace batchgreedy::harness {
namespace {

constexpr std::uint64_t kModelStream = 0;
constexpr std::uint64_t kPartitionStream = 1;
constexpr std::uint64_t kStochasticStream = 2;
constexpr std::uint64_t kRandomStream = 3;

std::vector<double> PrefixMi(const LinearGaussianModel& model, const std::vector<int>& order) {
  const Vector y = PrefixLogDets(model.marginal().matrix(), order);
  const Vector e = PrefixLogDets(model.noise().matrix(), order);
  std::vector<double> mi(order.size());
  for (std::size_t j = 0; j < order.size(); ++j) mi[j] = 0.5 * (y(j + 1) - e(j + 1));
  return mi;
}

std::vector<long long> CumulativeEvals(const SelectionTrace& trace, long long offset) {
  std::vector<long long> out;
  long long total = offset;
  for (const SelectionStep& step : trace.steps) {
    total += step.evals;
    for (int j = 0; j < step.batch.size(); ++j) out.push_back(total);
  }
  return out;
}

Trajectory FromOrder(const LinearGaussianModel& model, const std::vector<int>& order,
                     std::vector<long long> evals) {
  Trajectory t;
  t.mi = PrefixMi(model, order);
  t.evals = std::move(evals);
  return t;
}

LinearGaussianModel GeneratedModel(const GeneratorProblem& g, std::uint64_t instance_seed) {
  GeneratorSpec spec;
  spec.n = g.n;
  spec.m = g.m;
  spec.decay_rate = g.decay_rate;
  spec.top_singular = g.top_singular;
  spec.seed = DeriveSeed(instance_seed, kModelStream);
  return AssembleModel(RandomForwardModel(spec), g.prior, g.noise);
}

}  // namespace

Quantiles ComputeQuantiles(std::vector<double> values) {
  Quantiles q;
  q.count = static_cast<long long>(values.size());
  if (values.empty()) return q;
  std::sort(values.begin(), values.end());
  auto at = [&](double p) {
    const double pos = p * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = std::min(lo + 1, values.size() - 1);
    const double w = pos - static_cast<double>(lo);
    return values[lo] + w * (values[hi] - values[lo]);
  };
  q.median = at(0.5);
  q.q10 = at(0.1);
  q.q90 = at(0.9);
  q.min = values.front();
  q.max = values.back();
  return q;
}

std::vector<Trajectory> RunInstance(const ExperimentConfig& cfg, const LinearGaussianModel& model,
                                    int instance_id, std::uint64_t instance_seed) {
  const int m = model.m();
  const int k_max = std::min(cfg.max_cardinality.value_or(m), m);
  const double mi_full = MutualInformation(model, IndexSet::Range(m));
  MutualInformationOracle f(model);
  std::vector<Trajectory> out;

  for (Heuristic h : cfg.heuristics) {
    if (h == Heuristic::kRandomSelection) continue;
    for (double fraction : cfg.batch_fractions) {
      const int q = BatchSizeFromFraction(fraction, m);
      const BatchSchedule schedule = BatchSchedule::Uniform(q, k_max);
      Trajectory t;
      std::uint64_t seed = instance_seed;
      switch (h) {
        case Heuristic::kStdGreedy: {
          const SelectionTrace trace = BatchGreedy(f, schedule);
          t = FromOrder(model, trace.RankOrder(), CumulativeEvals(trace, 0));
          break;
        }
        case Heuristic::kMmGreedy: {
          const SelectionTrace trace = MmGreedyMi(model, schedule);
          t = FromOrder(model, trace.RankOrder(), CumulativeEvals(trace, 0));
          break;
        }
        case Heuristic::kMmReverseGreedy: {
          // Discard everything; read the retained sets off the reversed order.
          const BatchSchedule discard = BatchSchedule::Uniform(q, m);
          const ReverseResult r = MmReverseGreedy(model, discard);
          std::vector<int> order = r.discards.RankOrder();
          std::reverse(order.begin(), order.end());
          order.resize(k_max);
          std::vector<long long> evals(k_max);
          const std::vector<int>& batches = discard.batches();
          for (int j = 1; j <= k_max; ++j) {
            int discarded = 0, steps = 0;
            while (discarded < m - j) discarded += batches[steps++];
            evals[j - 1] = steps;
          }
          t = FromOrder(model, order, std::move(evals));
          break;
        }
        case Heuristic::kDistributed: {
          const int n_p = cfg.distributed.num_partitions;
          const int l_tilde = (k_max + q - 1) / q;
          const int part = (m + n_p - 1) / n_p;
          const int l_hat = std::min(l_tilde, part / q);
          if (l_hat == 0) continue;
          seed = DeriveSeed(instance_seed, kPartitionStream);
          const DistributedTrace d = DistributedBatchGreedy(f, n_p, l_hat, l_tilde, q, seed);
          const long long offset = d.total_evals - d.final_trace.total_evals;
          std::vector<int> order = d.final_trace.RankOrder();
          std::vector<long long> evals = CumulativeEvals(d.final_trace, offset);
          // q * l_tilde may overshoot k_max by less than one batch.
          if (static_cast<int>(order.size()) > k_max) {
            order.resize(k_max);
            evals.resize(k_max);
          }
          t = FromOrder(model, order, std::move(evals));
          break;
        }
        case Heuristic::kStochastic: {
          seed = DeriveSeed(instance_seed, kStochasticStream);
          StochasticConfig sc;
          sc.epsilon = cfg.stochastic.epsilon;
          sc.seed = seed;
          sc.sample_size = std::max(q, StochasticSampleSize(m, k_max, q, sc.epsilon));
          const SelectionTrace trace = StochasticBatchGreedy(f, schedule, sc);
          t = FromOrder(model, trace.RankOrder(), CumulativeEvals(trace, 0));
          break;
        }
        case Heuristic::kRandomSelection:
          break;
      }
      t.instance_id = instance_id;
      t.heuristic = h;
      t.batch_fraction = fraction;
      t.q = q;
      t.seed = seed;
      t.mi_full = mi_full;
      out.push_back(std::move(t));
    }
  }

  if (std::find(cfg.heuristics.begin(), cfg.heuristics.end(), Heuristic::kRandomSelection) !=
      cfg.heuristics.end()) {
    const std::vector<int> pool = IndexSet::Range(m).indices();
    const std::uint64_t base = DeriveSeed(instance_seed, kRandomStream);
    for (int r = 0; r < cfg.num_random_selections; ++r) {
      const std::uint64_t seed = DeriveSeed(base, static_cast<std::uint64_t>(r));
      Rng rng(seed);
      Trajectory t;
      t.mi = PrefixMi(model, SampleWithoutReplacement(pool, k_max, rng));
      t.instance_id = instance_id;
      t.heuristic = Heuristic::kRandomSelection;
      t.seed = seed;
      t.mi_full = mi_full;
      out.push_back(std::move(t));
    }
  }
  return out;
}

SweepResult RunSweep(const ExperimentConfig& cfg, int threads) {
  std::unique_ptr<LinearGaussianModel> shared;
  if (cfg.problem.kind == ProblemKind::kEnsemble) {
    const CsvMatrix x = ReadCsvMatrix(cfg.problem.ensemble.x_path);
    const CsvMatrix y = ReadCsvMatrix(cfg.problem.ensemble.y_path);
    shared = std::make_unique<LinearGaussianModel>(
        EmpiricalModelFromEnsemble(x.values, y.values, cfg.problem.ensemble.param_variance_floor)
            .model);
  }
  const int m = shared ? shared->m() : cfg.problem.generator.m;

  std::vector<std::vector<Trajectory>> per_instance(cfg.num_instances);
  ParallelFor(cfg.num_instances, threads, [&](int i) {
    const std::uint64_t seed = DeriveSeed(cfg.seed, static_cast<std::uint64_t>(i));
    if (shared) {
      per_instance[i] = RunInstance(cfg, *shared, i, seed);
    } else {
      per_instance[i] = RunInstance(cfg, GeneratedModel(cfg.problem.generator, seed), i, seed);
    }
  });

  SweepResult r;
  r.m = m;
  r.max_cardinality = std::min(cfg.max_cardinality.value_or(m), m);
  r.num_instances = cfg.num_instances;
  for (auto& v : per_instance) {
    for (Trajectory& t : v) r.trajectories.push_back(std::move(t));
  }

  // Group relative MI by (heuristic position, fraction position, cardinality).
  std::map<std::tuple<int, int, int>, std::vector<double>> groups;
  std::map<std::tuple<int, int, int>, std::pair<double, int>> labels;
  for (const Trajectory& t : r.trajectories) {
    const int hpos = static_cast<int>(
        std::find(cfg.heuristics.begin(), cfg.heuristics.end(), t.heuristic) -
        cfg.heuristics.begin());
    int fpos = 0;
    if (t.heuristic != Heuristic::kRandomSelection) {
      fpos = static_cast<int>(std::find(cfg.batch_fractions.begin(), cfg.batch_fractions.end(),
                                        t.batch_fraction) -
                              cfg.batch_fractions.begin());
    }
    for (std::size_t j = 0; j < t.mi.size(); ++j) {
      const auto key = std::make_tuple(hpos, fpos, static_cast<int>(j) + 1);
      groups[key].push_back(t.mi_full > 0 ? t.mi[j] / t.mi_full : 0.0);
      labels[key] = {t.batch_fraction, t.q};
    }
  }
  for (auto& [key, values] : groups) {
    SummaryEntry e;
    e.heuristic = cfg.heuristics[std::get<0>(key)];
    e.batch_fraction = labels[key].first;
    e.q = labels[key].second;
    e.cardinality = std::get<2>(key);
    e.relative_mi = ComputeQuantiles(std::move(values));
    r.summary.push_back(e);
  }
  return r;
}

const SummaryEntry* FindSummary(const SweepResult& r, Heuristic h, double batch_fraction,
                                int cardinality) {
  for (const SummaryEntry& e : r.summary) {
    if (e.heuristic == h && e.batch_fraction == batch_fraction && e.cardinality == cardinality) {
      return &e;
    }
  }
  return nullptr;
}

void WriteRunsCsv(const SweepResult& r, std::ostream& out) {
  out << "instance_id,heuristic,batch_fraction,q,cardinality,mi,mi_relative,evals,seed\n";
  std::string line;
  char num[32];
  auto put = [&](auto v) {
    const auto res = std::to_chars(num, num + sizeof(num), v);
    line.append(num, res.ptr);
  };
  for (const Trajectory& t : r.trajectories) {
    const std::string_view name = HeuristicName(t.heuristic);
    for (std::size_t j = 0; j < t.mi.size(); ++j) {
      line.clear();
      put(t.instance_id);
      line.append(",").append(name).append(",");
      put(t.batch_fraction);
      line.append(",");
      put(t.q);
      line.append(",");
      put(j + 1);
      line.append(",");
      put(t.mi[j]);
      line.append(",");
      put(t.mi_full > 0 ? t.mi[j] / t.mi_full : 0.0);
      line.append(",");
      put(t.evals.empty() ? 0LL : t.evals[j]);
      line.append(",");
      put(t.seed);
      line.append("\n");
      out << line;
    }
  }
}

nlohmann::json SummaryJson(const SweepResult& r) {
  nlohmann::json entries = nlohmann::json::array();
  for (const SummaryEntry& e : r.summary) {
    entries.push_back({{"heuristic", std::string(HeuristicName(e.heuristic))},
                       {"batch_fraction", e.batch_fraction},
                       {"q", e.q},
                       {"cardinality", e.cardinality},
                       {"count", e.relative_mi.count},
                       {"median", e.relative_mi.median},
                       {"q10", e.relative_mi.q10},
                       {"q90", e.relative_mi.q90},
                       {"min", e.relative_mi.min},
                       {"max", e.relative_mi.max}});
  }
  return {{"m", r.m},
          {"max_cardinality", r.max_cardinality},
          {"num_instances", r.num_instances},
          {"statistic", "mi_relative"},
          {"entries", entries}};
}

}  // namespace batchgreedy::harness
