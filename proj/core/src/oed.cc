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

#include "batchgreedy/oed.h"

#include <algorithm>
#include <cmath>

#include "batchgreedy/error.h"

namespace batchgreedy {
namespace {

Matrix Rows(const Matrix& g, const IndexSet& s) {
  Matrix out(s.size(), g.cols());
  for (int i = 0; i < s.size(); ++i) out.row(i) = g.row(s[i]);
  return out;
}

Vector LogOfDiagonal(const Matrix& a) { return a.diagonal().array().log().matrix(); }

// Conditioned covariance over the complement of c (the matrix itself for empty c).
Matrix Conditioned(const SpdMatrix& a, const IndexSet& c) {
  return SchurComplement(a.matrix(), c);
}

void CheckModelSubset(const LinearGaussianModel& model, const IndexSet& s) {
  CheckWithin(s, model.m());
}

}  // namespace

LinearGaussianModel::LinearGaussianModel(Matrix g, SpdMatrix prior, SpdMatrix noise)
    : g_(std::move(g)),
      prior_(std::move(prior)),
      noise_(std::move(noise)),
      marginal_(SpdMatrix::Unchecked(Matrix(1, 1))) {
  if (g_.cols() != prior_.dim() || g_.rows() != noise_.dim()) {
    throw Error(ErrorCode::kDimensionMismatch,
                "forward map must be m x n with an n x n prior and m x m noise");
  }
  marginal_ = SpdMatrix(g_ * prior_.matrix() * g_.transpose() + noise_.matrix());
}

SpdMatrix PosteriorCovariance(const LinearGaussianModel& model, const IndexSet& s) {
  CheckModelSubset(model, s);
  if (s.empty()) return model.prior();
  const Matrix& px = model.prior().matrix();
  const Matrix cross = Rows(model.forward(), s) * px;  // G_S prior
  Eigen::LLT<Matrix> llt(Select(model.marginal().matrix(), s));
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorCode::kNotPositiveDefinite, "marginal block is not SPD");
  }
  return SpdMatrix(px - cross.transpose() * llt.solve(cross));
}

Matrix PosteriorMeanMap(const LinearGaussianModel& model, const IndexSet& s) {
  CheckModelSubset(model, s);
  if (s.empty()) return Matrix(model.n(), 0);
  const Matrix cross = Rows(model.forward(), s) * model.prior().matrix();
  Eigen::LLT<Matrix> llt(Select(model.marginal().matrix(), s));
  return llt.solve(cross).transpose();
}

double MutualInformation(const LinearGaussianModel& model, const IndexSet& s) {
  CheckModelSubset(model, s);
  if (s.empty()) return 0.0;
  return 0.5 * (LogDetChol(Select(model.marginal().matrix(), s)) -
                LogDetChol(Select(model.noise().matrix(), s)));
}

double MutualInformationParam(const LinearGaussianModel& model, const IndexSet& s) {
  if (s.empty()) return 0.0;
  return 0.5 * (LogDet(model.prior()) - LogDet(PosteriorCovariance(model, s)));
}

double ConditionalMutualInformation(const LinearGaussianModel& model, const IndexSet& s,
                                    const IndexSet& c) {
  return MutualInformation(model, s.Union(c)) - MutualInformation(model, c);
}

std::vector<double> MiSpectrum(const LinearGaussianModel& model, const IndexSet& s) {
  CheckModelSubset(model, s);
  if (s.empty()) throw Error(ErrorCode::kEmptySelection, "spectrum of empty selection");
  return GenEigvals(PrincipalSubmatrix(model.marginal(), s),
                    PrincipalSubmatrix(model.noise(), s));
}

std::vector<double> MiSpectrumParam(const LinearGaussianModel& model, const IndexSet& s) {
  if (s.empty()) throw Error(ErrorCode::kEmptySelection, "spectrum of empty selection");
  return GenEigvals(model.prior(), PosteriorCovariance(model, s));
}

double ExpectedSymKl(const LinearGaussianModel& model, const IndexSet& s) {
  CheckModelSubset(model, s);
  if (s.empty()) return 0.0;
  // posterior^{-1} = prior^{-1} + G_S^T noise_S^{-1} G_S, so the trace reduces
  // to tr(prior G_S^T noise_S^{-1} G_S).
  const Matrix gs = Rows(model.forward(), s);
  Eigen::LLT<Matrix> llt(Select(model.noise().matrix(), s));
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorCode::kNotPositiveDefinite, "noise block is not SPD");
  }
  const Matrix info = gs.transpose() * llt.solve(gs);
  return (model.prior().matrix().cwiseProduct(info)).sum();
}

double RatioLowerBound(const LinearGaussianModel& model) {
  const std::vector<double> zeta = GenEigvals(model.marginal(), model.noise());
  const double zmin = zeta.back();
  const double zmax = zeta.front();
  if (zmin <= 1.0 + 1e-10) return 0.0;
  return std::log(zmin) / std::log(zmax);
}

MiBounds MiModularBounds(const LinearGaussianModel& model, const IndexSet& conditioning) {
  CheckModelSubset(model, conditioning);
  MiBounds b;
  b.candidates = conditioning.Complement(model.m());
  if (b.candidates.empty()) return b;
  const Matrix y = Conditioned(model.marginal(), conditioning);
  const Matrix nz = Conditioned(model.noise(), conditioning);
  const ClampedEigen ey = ClampedEig(y);
  const ClampedEigen en = ClampedEig(nz);
  const Vector diag_log_y = DiagLog(ey);
  const Vector diag_log_n = DiagLog(en);
  const Vector log_diag_y = LogOfDiagonal(y);
  const Vector log_diag_n = LogOfDiagonal(nz);
  b.rho1 = KantorovichRho(en.values.minCoeff(), en.values.maxCoeff());
  b.rho2 = KantorovichRho(ey.values.minCoeff(), ey.values.maxCoeff());
  b.lower = 0.5 * (diag_log_y - log_diag_n);
  b.upper = 0.5 * (log_diag_y - diag_log_n);
  const Vector mid = 0.5 * (diag_log_y - diag_log_n);
  b.alt_lower = mid.array() + 0.5 * std::log(b.rho1);
  b.alt_upper = mid.array() - 0.5 * std::log(b.rho2);
  b.deviation = 0.5 * (log_diag_n - diag_log_n);
  return b;
}

Vector MiLowerWeights(const LinearGaussianModel& model, const IndexSet& conditioning) {
  CheckModelSubset(model, conditioning);
  if (conditioning.size() == model.m()) return Vector();
  const Matrix y = Conditioned(model.marginal(), conditioning);
  const Matrix nz = Conditioned(model.noise(), conditioning);
  return 0.5 * (DiagLog(ClampedEig(y)) - LogOfDiagonal(nz));
}

double SubmodDeviation(const LinearGaussianModel& model, const IndexSet& s) {
  CheckModelSubset(model, s);
  if (s.empty()) return 0.0;
  const Matrix& nz = model.noise().matrix();
  const Vector dev = 0.5 * (LogOfDiagonal(nz) - DiagLog(ClampedEig(nz)));
  double sum = 0.0;
  for (int i : s) sum += dev(i);
  return sum;
}

MutualInformationOracle::MutualInformationOracle(const LinearGaussianModel& model)
    : ValueOracle(model.m()), model_(model) {}

double MutualInformationOracle::Evaluate(const IndexSet& s) const {
  return MutualInformation(model_, s);
}

MiLowerBoundProvider::MiLowerBoundProvider(const LinearGaussianModel& model, bool with_upper)
    : ModularBoundProvider(model.m()), model_(model), with_upper_(with_upper) {}

ModularWeights MiLowerBoundProvider::Compute(const IndexSet& selected) const {
  ModularWeights w;
  if (with_upper_) {
    const MiBounds b = MiModularBounds(model_, selected);
    w.candidates = b.candidates.indices();
    w.lower.assign(b.lower.data(), b.lower.data() + b.lower.size());
    w.upper.assign(b.upper.data(), b.upper.data() + b.upper.size());
  } else {
    w.candidates = selected.Complement(model_.m()).indices();
    const Vector lower = MiLowerWeights(model_, selected);
    w.lower.assign(lower.data(), lower.data() + lower.size());
  }
  return w;
}

SelectionTrace MmGreedyMi(const LinearGaussianModel& model, const BatchSchedule& schedule) {
  MiLowerBoundProvider provider(model, false);
  MutualInformationOracle oracle(model);
  return MmGreedy(provider, oracle, schedule);
}

ReverseTerms ComputeReverseTerms(const LinearGaussianModel& model, const IndexSet& discarded) {
  CheckModelSubset(model, discarded);
  ReverseTerms t;
  t.remaining = discarded.Complement(model.m());
  if (t.remaining.empty()) return t;
  const Matrix y = Conditioned(model.marginal(), discarded);
  const Matrix nz = Conditioned(model.noise(), discarded);
  const Vector diag_log_n = DiagLog(ClampedEig(nz));
  t.a = DiagLog(ClampedEig(y)) - diag_log_n;
  t.b = LogOfDiagonal(nz) - diag_log_n;
  t.c = LogOfDiagonal(Select(model.noise().matrix(), t.remaining)) - diag_log_n;
  return t;
}

double ReverseBound(const LinearGaussianModel& model, const IndexSet& discarded,
                    const IndexSet& candidate) {
  CheckModelSubset(model, candidate);
  if (candidate.Intersects(discarded)) {
    throw Error(ErrorCode::kInvalidArgument, "candidate overlaps the discarded set");
  }
  const ReverseTerms t = ComputeReverseTerms(model, discarded);
  double sum = 0.0;
  for (int i = 0; i < t.remaining.size(); ++i) {
    sum += candidate.Contains(t.remaining[i]) ? t.a(i) : t.b(i) + t.c(i);
  }
  return sum;
}

ReverseResult MmReverseGreedy(const LinearGaussianModel& model, const BatchSchedule& schedule) {
  if (schedule.k() > model.m()) {
    throw Error(ErrorCode::kScheduleExceedsGround, "cannot discard more than m indices");
  }
  MutualInformationOracle oracle(model);
  ReverseResult r;
  IndexSet discarded;
  for (int q : schedule.batches()) {
    const ReverseTerms t = ComputeReverseTerms(model, discarded);
    // Minimizing sum_P (a - b - c) minimizes the bound; negate to reuse TopScores.
    std::vector<double> score(t.remaining.size());
    for (int i = 0; i < t.remaining.size(); ++i) score[i] = -(t.a(i) - t.b(i) - t.c(i));
    SelectionStep step;
    for (int pos : TopScores(t.remaining.indices(), score, q)) {
      step.ranked.push_back(t.remaining[pos]);
    }
    step.batch = IndexSet(step.ranked);
    discarded = discarded.Union(step.batch);
    step.objective = oracle(discarded.Complement(model.m()));
    step.evals = 1;
    r.discards.total_evals += 1;
    r.discards.steps.push_back(std::move(step));
  }
  r.discards.final_set = discarded;
  r.retained = discarded.Complement(model.m());
  r.retained_mi = r.discards.steps.empty() ? MutualInformation(model, r.retained)
                                           : r.discards.steps.back().objective;
  return r;
}

}  // namespace batchgreedy
