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

#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "batchgreedy/batchgreedy.h"
#include "test_util.h"

namespace batchgreedy {
namespace {

TEST(BatchScheduleTest, UniformTruncatesLastBatch) {
  const BatchSchedule s = BatchSchedule::Uniform(3, 8);
  EXPECT_EQ(s.batches(), std::vector<int>({3, 3, 2}));
  EXPECT_EQ(s.k(), 8);
  EXPECT_EQ(s.max_batch(), 3);
  EXPECT_THROW(BatchSchedule({2, 0}), Error);
}

TEST(BatchGreedyTest, ModularTopTwo) {
  ModularOracle f({5, 3, 2, 1, 0});
  const SelectionTrace t = BatchGreedy(f, BatchSchedule({2}));
  EXPECT_EQ(t.final_set, IndexSet({0, 1}));
  EXPECT_DOUBLE_EQ(t.value(), 8.0);
  EXPECT_EQ(t.steps[0].ranked, std::vector<int>({0, 1}));
}

TEST(BatchGreedyTest, ModularScheduleInvariance) {
  ModularOracle f({5, 3, 2, 1, 0});
  EXPECT_EQ(BatchGreedy(f, BatchSchedule({1, 1})).final_set,
            BatchGreedy(f, BatchSchedule({2})).final_set);
}

TEST(BatchGreedyTest, TiesGoToLowestIndex) {
  ModularOracle f({1, 2, 2, 2});
  const SelectionTrace t = BatchGreedy(f, BatchSchedule({2}));
  EXPECT_EQ(t.final_set, IndexSet({1, 2}));
}

TEST(BatchGreedyTest, SubmodularMiMeetsClassicalBound) {
  const LinearGaussianModel model = RandomDiagonalNoiseModel(8, 5, 21);
  MutualInformationOracle f(model);
  const double opt = BruteForceOpt(f, 3).value;
  const SelectionTrace t = BatchGreedy(f, BatchSchedule::Uniform(1, 3));
  EXPECT_GE(t.value(), (1.0 - std::exp(-1.0)) * opt - 1e-12);
}

TEST(BatchGreedyTest, ScheduleExceedsGround) {
  ModularOracle f({1, 2});
  try {
    BatchGreedy(f, BatchSchedule({3}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kScheduleExceedsGround);
  }
}

TEST(BatchGreedyTest, RestrictedToCandidates) {
  ModularOracle f({5, 3, 2, 1, 0});
  const SelectionTrace t = BatchGreedy(f, BatchSchedule({2}), {1, 3, 4});
  EXPECT_EQ(t.final_set, IndexSet({1, 3}));
  EXPECT_EQ(t.total_evals, 4);
}

TEST(GuaranteeFactorTest, OneShotIsProduct) {
  EXPECT_NEAR(GuaranteeFactor(BatchSchedule({4}), 0.7, {0.6}), 0.42, 1e-15);
  EXPECT_NEAR(OneShotGuarantee(0.6, 0.7), 0.42, 1e-15);
}

TEST(GuaranteeFactorTest, ProductFormByHand) {
  EXPECT_NEAR(GuaranteeFactor(BatchSchedule::Uniform(1, 4), 1.0, {1, 1, 1, 1}),
              175.0 / 256.0, 1e-15);
}

TEST(GuaranteeFactorTest, SimplifiedClassical) {
  EXPECT_NEAR(SimplifiedGuarantee(1.0, 1.0), 0.6321205588285577, 1e-15);
}

TEST(GuaranteeFactorTest, LargerBatchesWeakenBound) {
  const LinearGaussianModel model = RandomCorrelatedModel(8, 6, 4);
  MutualInformationOracle f(model);
  const SubsetTable t(f);
  const int k = 4;
  const double gamma = ComputeRatios(t, k).gamma;
  const double eta1 = ComputeRatios(t, 1).eta;
  const double etak = ComputeRatios(t, k).eta;
  EXPECT_GE(GuaranteeFactor(BatchSchedule::Uniform(1, k), gamma, {eta1, eta1, eta1, eta1}),
            GuaranteeFactor(BatchSchedule({k}), gamma, {etak}) - 1e-15);
}

TEST(DistributedTest, PartitionSizesAndDeterminism) {
  const auto parts = RandomPartition(11, 3, 99);
  ASSERT_EQ(parts.size(), 3u);
  EXPECT_EQ(parts[0].size(), 4);
  EXPECT_EQ(parts[1].size(), 4);
  EXPECT_EQ(parts[2].size(), 3);
  IndexSet all;
  for (const auto& p : parts) all = all.Union(p);
  EXPECT_EQ(all, IndexSet::Range(11));
  EXPECT_EQ(RandomPartition(11, 3, 99)[1], parts[1]);
}

TEST(DistributedTest, SinglePartitionEqualsBatchGreedy) {
  const LinearGaussianModel model = RandomCorrelatedModel(9, 5, 8);
  MutualInformationOracle f(model);
  const DistributedTrace d = DistributedBatchGreedy(f, 1, 3, 3, 2, 5);
  EXPECT_EQ(d.final_trace.final_set, BatchGreedy(f, BatchSchedule::Uniform(2, 6)).final_set);
}

TEST(DistributedTest, ModularRecoversTopK) {
  ModularOracle f({0.5, 9, 1, 7, 3, 8, 2, 6, 4, 5});
  for (int n_p = 1; n_p <= 3; ++n_p) {
    const DistributedTrace d = DistributedBatchGreedy(f, n_p, 3, 3, 1, 17 + n_p);
    EXPECT_DOUBLE_EQ(d.final_trace.value(), 24.0);
  }
}

TEST(DistributedTest, MeetsGuaranteeOnCorrelatedMi) {
  for (int seed = 0; seed < 5; ++seed) {
    const LinearGaussianModel model = RandomCorrelatedModel(10, 6, 600 + seed);
    MutualInformationOracle f(model);
    const SubsetTable t(f);
    const int q = 1, l = 3, k = 3;
    const double eta_q = ComputeRatios(t, q).eta;
    const double gamma_k = ComputeRatios(t, k).gamma;
    const double factor = DistributedGuarantee(eta_q, gamma_k, gamma_k, k, l, l, l);
    const double opt = BruteForceOpt(f, k).value;
    const DistributedTrace d = DistributedBatchGreedy(f, 2, l, l, q, seed);
    EXPECT_GE(d.final_trace.value(), factor * opt - 1e-9);
  }
}

TEST(DistributedTest, PartitionTooSmall) {
  ModularOracle f(std::vector<double>(10, 1.0));
  try {
    DistributedBatchGreedy(f, 4, 2, 2, 2, 0);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kPartitionTooSmall);
  }
  EXPECT_THROW(DistributedBatchGreedy(f, 11, 1, 1, 1, 0), Error);
}

TEST(StochasticTest, SampleSizeFormula) {
  EXPECT_EQ(StochasticSampleSize(20, 4, 1, 0.5), 4);
  EXPECT_EQ(StochasticSampleSize(30, 5, 1, 0.5), 5);
  EXPECT_THROW(StochasticSampleSize(20, 4, 1, 1.0), Error);
}

TEST(StochasticTest, FullSampleMatchesBatchGreedy) {
  const LinearGaussianModel model = RandomCorrelatedModel(9, 4, 12);
  MutualInformationOracle f(model);
  StochasticConfig cfg;
  cfg.sample_size = 9;
  const BatchSchedule s = BatchSchedule::Uniform(2, 5);
  EXPECT_EQ(StochasticBatchGreedy(f, s, cfg).final_set, BatchGreedy(f, s).final_set);
}

TEST(StochasticTest, DeterministicGivenSeed) {
  const LinearGaussianModel model = RandomCorrelatedModel(12, 4, 13);
  MutualInformationOracle f(model);
  StochasticConfig cfg{0.3, 1234, std::nullopt};
  const BatchSchedule s = BatchSchedule::Uniform(1, 4);
  const SelectionTrace a = StochasticBatchGreedy(f, s, cfg);
  const SelectionTrace b = StochasticBatchGreedy(f, s, cfg);
  EXPECT_EQ(a.RankOrder(), b.RankOrder());
  EXPECT_EQ(a.value(), b.value());
}

TEST(StochasticTest, BatchExceedsSample) {
  ModularOracle f(std::vector<double>(10, 1.0));
  StochasticConfig cfg;
  cfg.sample_size = 2;
  try {
    StochasticBatchGreedy(f, BatchSchedule({3}), cfg);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBatchExceedsSample);
  }
}

TEST(StochasticTest, MeanBeatsBoundOnSubmodularInstance) {
  const LinearGaussianModel model = RandomDiagonalNoiseModel(14, 6, 31);
  MutualInformationOracle f(model);
  const double opt = BruteForceOpt(f, 3).value;
  const BatchSchedule s = BatchSchedule::Uniform(1, 3);
  double sum = 0.0;
  const int trials = 100;
  for (int i = 0; i < trials; ++i) {
    sum += StochasticBatchGreedy(f, s, {0.5, static_cast<std::uint64_t>(i), std::nullopt}).value();
  }
  EXPECT_GE(sum / trials, StochasticGuarantee(0.5, 1.0, 1.0) * opt);
}

TEST(StochasticTest, HypothesesCheck) {
  EXPECT_TRUE(StochasticHypothesesHold(1000, 5, 1, 0.5));
  EXPECT_FALSE(StochasticHypothesesHold(30, 5, 1, 0.5));
}

TEST(EvalCountTest, HandSummation) {
  EXPECT_EQ(EvalCountModel(100, BatchSchedule::Uniform(10, 50), GreedyVariant::kStandard), 405);
  EXPECT_EQ(EvalCountModel(100, BatchSchedule({50}), GreedyVariant::kOneShot), 101);
  EXPECT_EQ(EvalCountModel(30, BatchSchedule::Uniform(1, 5), GreedyVariant::kStochastic, 5), 30);
}

TEST(EvalCountTest, ObservedMatchesModel) {
  const LinearGaussianModel model = RandomCorrelatedModel(13, 5, 2);
  MutualInformationOracle f(model);
  for (int q : {1, 2, 3, 5}) {
    for (int k : {1, 4, 7, 13}) {
      const BatchSchedule s = BatchSchedule::Uniform(q, k);
      f.ResetCount();
      const SelectionTrace t = BatchGreedy(f, s);
      EXPECT_EQ(f.eval_count(), EvalCountModel(13, s, GreedyVariant::kStandard));
      EXPECT_EQ(t.total_evals, f.eval_count());

      if (q <= k) {
        StochasticConfig cfg{0.4, 7, std::nullopt};
        const int ss = StochasticSampleSize(13, k, s.max_batch(), 0.4);
        if (ss >= s.max_batch()) {
          f.ResetCount();
          StochasticBatchGreedy(f, s, cfg);
          EXPECT_EQ(f.eval_count(), EvalCountModel(13, s, GreedyVariant::kStochastic, ss));
        }
      }
    }
  }
  f.ResetCount();
  BatchGreedy(f, BatchSchedule({6}));
  EXPECT_EQ(f.eval_count(), EvalCountModel(13, BatchSchedule({6}), GreedyVariant::kOneShot));
}

TEST(EvalCountTest, DistributedMatchesModel) {
  const LinearGaussianModel model = RandomCorrelatedModel(13, 5, 3);
  MutualInformationOracle f(model);
  for (int n_p : {1, 2, 3}) {
    f.ResetCount();
    const DistributedTrace d = DistributedBatchGreedy(f, n_p, 2, 3, 2, 1);
    EXPECT_EQ(f.eval_count(), EvalCountDistributed(13, n_p, 2, 3, 2));
    EXPECT_EQ(d.total_evals, f.eval_count());
  }
}

class GreedyPropertyTest : public ::testing::TestWithParam<int> {};

TEST_P(GreedyPropertyTest, MonotoneTraceAndBatchGuarantee) {
  const int seed = GetParam();
  Rng rng(900 + seed);
  std::uniform_int_distribution<int> m_pick(5, 10);
  const int m = m_pick(rng);
  std::uniform_int_distribution<int> k_pick(1, std::min(5, m));
  const int k = k_pick(rng);
  const LinearGaussianModel model = RandomCorrelatedModel(m, 3 + seed % 8, 1000 + seed);
  MutualInformationOracle f(model);
  const SubsetTable table(f);
  const double opt = BruteForceOpt(f, k).value;
  const double gamma = ComputeRatios(table, k).gamma;
  for (int q = 1; q <= k; ++q) {
    const BatchSchedule s = BatchSchedule::Uniform(q, k);
    const SelectionTrace t = BatchGreedy(f, s);
    double prev = 0.0;
    for (const auto& step : t.steps) {
      EXPECT_GE(step.objective, prev - 1e-12);
      prev = step.objective;
    }
    EXPECT_EQ(t.final_set.size(), k);
    std::vector<double> etas;
    for (int qi : s.batches()) etas.push_back(ComputeRatios(table, qi).eta);
    EXPECT_GE(t.value(), GuaranteeFactor(s, gamma, etas) * opt - 1e-9);
  }
}

INSTANTIATE_TEST_SUITE_P(Random, GreedyPropertyTest, ::testing::Range(0, 15));

}  // namespace
}  // namespace batchgreedy
