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

#include <benchmark/benchmark.h>

#include "batchgreedy/batchgreedy.h"

namespace batchgreedy {
namespace {

LinearGaussianModel ExperimentModel(int m) {
  GeneratorSpec spec;
  spec.n = 20;
  spec.m = m;
  spec.seed = 1;
  return AssembleModel(RandomForwardModel(spec), KernelSpec{KernelKind::kSquaredExponential, 0.105},
                       KernelSpec{KernelKind::kSquaredExponential, 0.021});
}

void BM_MutualInformationOracle(benchmark::State& state) {
  const int size = static_cast<int>(state.range(0));
  const LinearGaussianModel model = ExperimentModel(100);
  MutualInformationOracle f(model);
  const IndexSet s = IndexSet::Range(size);
  for (auto _ : state) benchmark::DoNotOptimize(f(s));
}
BENCHMARK(BM_MutualInformationOracle)->Arg(10)->Arg(50)->Arg(100);

void BM_BatchGreedy(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  const LinearGaussianModel model = ExperimentModel(100);
  MutualInformationOracle f(model);
  const BatchSchedule s = BatchSchedule::Uniform(q, 50);
  for (auto _ : state) benchmark::DoNotOptimize(BatchGreedy(f, s).value());
  state.counters["evals"] = static_cast<double>(EvalCountModel(100, s, GreedyVariant::kStandard));
}
BENCHMARK(BM_BatchGreedy)->Arg(1)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_MmGreedyMi(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  const LinearGaussianModel model = ExperimentModel(100);
  const BatchSchedule s = BatchSchedule::Uniform(q, 50);
  for (auto _ : state) benchmark::DoNotOptimize(MmGreedyMi(model, s).value());
}
BENCHMARK(BM_MmGreedyMi)->Arg(1)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_MmReverseGreedy(benchmark::State& state) {
  const int q = static_cast<int>(state.range(0));
  const LinearGaussianModel model = ExperimentModel(100);
  const BatchSchedule s = BatchSchedule::Uniform(q, 50);
  for (auto _ : state) benchmark::DoNotOptimize(MmReverseGreedy(model, s).retained_mi);
}
BENCHMARK(BM_MmReverseGreedy)->Arg(1)->Arg(10)->Arg(50)->Unit(benchmark::kMillisecond);

void BM_SpdLog(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const LinearGaussianModel model = ExperimentModel(dim);
  for (auto _ : state) benchmark::DoNotOptimize(SpdLog(model.marginal()).matrix()(0, 0));
}
BENCHMARK(BM_SpdLog)->Arg(20)->Arg(100)->Arg(400)->Unit(benchmark::kMicrosecond);

void BM_PrefixLogDets(benchmark::State& state) {
  const int dim = static_cast<int>(state.range(0));
  const LinearGaussianModel model = ExperimentModel(dim);
  const std::vector<int> order = IndexSet::Range(dim).indices();
  for (auto _ : state) {
    benchmark::DoNotOptimize(PrefixLogDets(model.marginal().matrix(), order)(dim));
  }
}
BENCHMARK(BM_PrefixLogDets)->Arg(60)->Arg(200)->Unit(benchmark::kMicrosecond);

}  // namespace
}  // namespace batchgreedy

BENCHMARK_MAIN();
