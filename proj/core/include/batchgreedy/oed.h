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

#ifndef BATCHGREEDY_OED_H_
#define BATCHGREEDY_OED_H_

#include <vector>

#include "batchgreedy/greedy.h"
#include "batchgreedy/index_set.h"
#include "batchgreedy/linalg.h"
#include "batchgreedy/mm.h"
#include "batchgreedy/set_function.h"

namespace batchgreedy {

// Y = G X + e with X ~ N(0, prior) and e ~ N(0, noise). Immutable.
class LinearGaussianModel {
 public:
  LinearGaussianModel(Matrix g, SpdMatrix prior, SpdMatrix noise);

  int m() const { return static_cast<int>(g_.rows()); }
  int n() const { return static_cast<int>(g_.cols()); }
  const Matrix& forward() const { return g_; }
  const SpdMatrix& prior() const { return prior_; }
  const SpdMatrix& noise() const { return noise_; }
  // G prior G^T + noise.
  const SpdMatrix& marginal() const { return marginal_; }

 private:
  Matrix g_;
  SpdMatrix prior_;
  SpdMatrix noise_;
  SpdMatrix marginal_;
};

// (prior^{-1} + G_S^T noise_S^{-1} G_S)^{-1}; the prior itself for empty S.
SpdMatrix PosteriorCovariance(const LinearGaussianModel& model, const IndexSet& s);
// n x |S| matrix mapping y_S to the posterior mean.
Matrix PosteriorMeanMap(const LinearGaussianModel& model, const IndexSet& s);

// 1/2 [log det marginal[S] - log det noise[S]]; zero for empty S.
double MutualInformation(const LinearGaussianModel& model, const IndexSet& s);
// 1/2 [log det prior - log det posterior(S)].
double MutualInformationParam(const LinearGaussianModel& model, const IndexSet& s);
// I(X; Y_S | Y_C) = MI(S u C) - MI(C).
double ConditionalMutualInformation(const LinearGaussianModel& model, const IndexSet& s,
                                    const IndexSet& c);

// Generalized eigenvalues zeta = 1 + sigma of (marginal[S], noise[S]), descending.
std::vector<double> MiSpectrum(const LinearGaussianModel& model, const IndexSet& s);
// Generalized eigenvalues of (prior, posterior(S)), descending.
std::vector<double> MiSpectrumParam(const LinearGaussianModel& model, const IndexSet& s);

// tr(posterior(S)^{-1} prior) - n, evaluated in parameter space.
double ExpectedSymKl(const LinearGaussianModel& model, const IndexSet& s);

// ln zeta_min / ln zeta_max over the full pencil; 0 when zeta_min <= 1 + 1e-10.
double RatioLowerBound(const LinearGaussianModel& model);

struct MiBounds {
  IndexSet candidates;  // indices outside the conditioning set, ascending
  Vector lower;
  Vector upper;
  Vector alt_lower;
  Vector alt_upper;
  Vector deviation;
  double rho1 = 1.0;  // Kantorovich constant of the conditioned noise
  double rho2 = 1.0;  // Kantorovich constant of the conditioned marginal
};

// Modular bounds on I(X; Y_S | Y_C) for S disjoint from C, per candidate index.
MiBounds MiModularBounds(const LinearGaussianModel& model, const IndexSet& conditioning);
// Only the lower vector of MiModularBounds, skipping the noise logarithm.
Vector MiLowerWeights(const LinearGaussianModel& model, const IndexSet& conditioning);

// 1/2 sum_{i in S} (log noise_ii - (log noise)_ii).
double SubmodDeviation(const LinearGaussianModel& model, const IndexSet& s);

class MutualInformationOracle : public ValueOracle {
 public:
  explicit MutualInformationOracle(const LinearGaussianModel& model);

 protected:
  double Evaluate(const IndexSet& s) const override;

 private:
  const LinearGaussianModel& model_;
};

// Conditional matrix-log lower bounds, recomputed from the original
// covariances after each batch.
class MiLowerBoundProvider : public ModularBoundProvider {
 public:
  explicit MiLowerBoundProvider(const LinearGaussianModel& model, bool with_upper = true);
  bool certified() const override { return true; }

 protected:
  ModularWeights Compute(const IndexSet& selected) const override;

 private:
  const LinearGaussianModel& model_;
  bool with_upper_;
};

SelectionTrace MmGreedyMi(const LinearGaussianModel& model, const BatchSchedule& schedule);

// Upper bound on the loss of additionally discarding `candidate` once
// `discarded` is gone, with the three trace terms taken without a 1/2 factor.
double ReverseBound(const LinearGaussianModel& model, const IndexSet& discarded,
                    const IndexSet& candidate);

// Per-index pieces of ReverseBound over the remaining indices R:
// bound(P) = sum_{P} a + sum_{R \ P} (b + c).
struct ReverseTerms {
  IndexSet remaining;
  Vector a;
  Vector b;
  Vector c;
};
ReverseTerms ComputeReverseTerms(const LinearGaussianModel& model, const IndexSet& discarded);

struct ReverseResult {
  SelectionTrace discards;  // objective = MI of what is retained after each step
  IndexSet retained;
  double retained_mi = 0.0;
};

// Discards schedule.k() indices, each batch minimizing ReverseBound (ties to
// the lower index). One oracle call per step.
ReverseResult MmReverseGreedy(const LinearGaussianModel& model, const BatchSchedule& schedule);

}  // namespace batchgreedy

#endif  // BATCHGREEDY_OED_H_
