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

#include "batchgreedy/problems.h"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "batchgreedy/error.h"
#include "batchgreedy/random.h"

namespace batchgreedy {
namespace {

Matrix StandardNormal(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  Matrix a(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) a(i, j) = normal(rng);
  }
  return a;
}

Matrix RandomSpd(int dim, double shift, Rng& rng) {
  const Matrix w = StandardNormal(dim, dim, rng);
  return w * w.transpose() / dim + shift * Matrix::Identity(dim, dim);
}

std::vector<std::string> SplitCsvLine(const std::string& line) {
  std::vector<std::string> out;
  std::stringstream ss(line);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    cell.erase(0, cell.find_first_not_of(" \t\r"));
    cell.erase(cell.find_last_not_of(" \t\r") + 1);
    out.push_back(cell);
  }
  return out;
}

}  // namespace

SpdMatrix KernelCovariance(const KernelSpec& spec, int num_points) {
  if (num_points < 1) throw Error(ErrorCode::kInvalidArgument, "need at least one point");
  if (!(spec.length_scale > 0.0) || !(spec.variance > 0.0) || spec.nugget < 0.0) {
    throw Error(ErrorCode::kInvalidArgument, "kernel needs l > 0, variance > 0, nugget >= 0");
  }
  const double h = num_points > 1 ? 1.0 / (num_points - 1) : 0.0;
  const double l = spec.length_scale;
  Matrix k(num_points, num_points);
  for (int i = 0; i < num_points; ++i) {
    for (int j = 0; j < num_points; ++j) {
      const double d = std::abs(i - j) * h;
      k(i, j) = spec.kind == KernelKind::kSquaredExponential
                    ? spec.variance * std::exp(-d * d / (2.0 * l * l))
                    : spec.variance * std::exp(-d / l);
    }
    k(i, i) += spec.nugget;
  }
  return SpdMatrix(k);
}

double DefaultDecayRate(int rank) {
  return rank > 1 ? std::log(1e4) / (rank - 1) : 0.0;
}

std::vector<double> PrescribedSingularValues(const GeneratorSpec& spec) {
  const int r = std::min(spec.m, spec.n);
  const double c = spec.decay_rate.value_or(DefaultDecayRate(r));
  std::vector<double> sigma(r);
  for (int j = 0; j < r; ++j) sigma[j] = spec.top_singular * std::exp(-c * j);
  return sigma;
}

Matrix ModifiedGramSchmidtQ(const Matrix& a) {
  Matrix q = a;
  for (Eigen::Index j = 0; j < q.cols(); ++j) {
    const double norm = q.col(j).norm();
    if (!(norm > 0.0)) throw Error(ErrorCode::kInvalidArgument, "rank-deficient input to QR");
    q.col(j) /= norm;
    for (Eigen::Index k = j + 1; k < q.cols(); ++k) {
      q.col(k) -= q.col(j).dot(q.col(k)) * q.col(j);
    }
  }
  return q;
}

Matrix ComposeForwardModel(const Matrix& u, const std::vector<double>& sigma, const Matrix& v) {
  const auto r = static_cast<Eigen::Index>(sigma.size());
  if (u.cols() != r || v.cols() != r) {
    throw Error(ErrorCode::kDimensionMismatch, "factor columns must match singular values");
  }
  const Vector s = Eigen::Map<const Vector>(sigma.data(), r);
  return u * s.asDiagonal() * v.transpose();
}

Matrix RandomForwardModel(const GeneratorSpec& spec) {
  if (spec.n < 1 || spec.m < 1) throw Error(ErrorCode::kInvalidArgument, "need n, m >= 1");
  const int r = std::min(spec.m, spec.n);
  Rng rng(spec.seed);
  const Matrix u = ModifiedGramSchmidtQ(StandardNormal(spec.m, r, rng));
  const Matrix v = ModifiedGramSchmidtQ(StandardNormal(spec.n, r, rng));
  return ComposeForwardModel(u, PrescribedSingularValues(spec), v);
}

LinearGaussianModel AssembleModel(const Matrix& g, const KernelSpec& prior_spec,
                                  const KernelSpec& noise_spec) {
  return LinearGaussianModel(g, KernelCovariance(prior_spec, static_cast<int>(g.cols())),
                             KernelCovariance(noise_spec, static_cast<int>(g.rows())));
}

LinearGaussianModel RandomCorrelatedModel(int m, int n, std::uint64_t seed) {
  Rng rng(seed);
  Matrix g = StandardNormal(m, n, rng) / std::sqrt(static_cast<double>(n));
  SpdMatrix prior(RandomSpd(n, 0.2, rng));
  SpdMatrix noise(RandomSpd(m, 0.1, rng));
  return LinearGaussianModel(std::move(g), std::move(prior), std::move(noise));
}

LinearGaussianModel RandomDiagonalNoiseModel(int m, int n, std::uint64_t seed) {
  Rng rng(seed);
  Matrix g = StandardNormal(m, n, rng) / std::sqrt(static_cast<double>(n));
  SpdMatrix prior(RandomSpd(n, 0.2, rng));
  std::uniform_real_distribution<double> var(0.2, 2.0);
  Vector d(m);
  for (int i = 0; i < m; ++i) d(i) = var(rng);
  return LinearGaussianModel(std::move(g), std::move(prior), SpdMatrix(Matrix(d.asDiagonal())));
}

EnsembleModel EmpiricalModelFromEnsemble(const Matrix& x_samples, const Matrix& y_samples,
                                         double param_variance_floor) {
  const Eigen::Index samples = x_samples.rows();
  if (samples < 2 || y_samples.rows() != samples) {
    throw Error(ErrorCode::kDegenerateEnsemble, "need at least two paired samples");
  }
  const Matrix xc = x_samples.rowwise() - x_samples.colwise().mean();
  const Matrix yc = y_samples.rowwise() - y_samples.colwise().mean();
  const double scale = 1.0 / static_cast<double>(samples - 1);

  std::vector<int> keep;
  for (Eigen::Index j = 0; j < xc.cols(); ++j) {
    if (xc.col(j).squaredNorm() * scale >= param_variance_floor) keep.push_back(static_cast<int>(j));
  }
  if (keep.empty()) {
    throw Error(ErrorCode::kDegenerateEnsemble, "no parameter passes the variance floor");
  }
  Matrix xk(samples, static_cast<Eigen::Index>(keep.size()));
  for (std::size_t j = 0; j < keep.size(); ++j) xk.col(j) = xc.col(keep[j]);

  const Matrix cov_y = scale * yc.transpose() * yc;
  if (!(cov_y.trace() > 0.0)) {
    throw Error(ErrorCode::kDegenerateEnsemble, "observations have zero variance");
  }
  const auto n = xk.cols();
  Matrix cov_x = scale * xk.transpose() * xk;
  cov_x += (1e-8 * cov_x.trace() / n) * Matrix::Identity(n, n);
  const Matrix cov_yx = scale * yc.transpose() * xk;

  Eigen::LLT<Matrix> llt(cov_x);
  const Matrix g = llt.solve(cov_yx.transpose()).transpose();
  Matrix resid = cov_y - g * cov_x * g.transpose();
  resid = 0.5 * (resid + resid.transpose());
  Eigen::SelfAdjointEigenSolver<Matrix> es(resid);
  const double lmax_y = SymEigenvalues(cov_y).maxCoeff();
  const Vector clamped = es.eigenvalues().cwiseMax(kEigenFloor * lmax_y);
  Matrix noise = es.eigenvectors() * clamped.asDiagonal() * es.eigenvectors().transpose();

  return {LinearGaussianModel(g, SpdMatrix(cov_x), SpdMatrix(noise)), keep};
}

CsvMatrix ReadCsvMatrix(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::kInvalidArgument, "cannot open " + path);
  CsvMatrix out;
  std::string line;
  if (!std::getline(in, line)) throw Error(ErrorCode::kInvalidArgument, path + " is empty");
  out.header = SplitCsvLine(line);
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::vector<double> row;
    for (const std::string& cell : SplitCsvLine(line)) {
      std::size_t used = 0;
      double v = 0.0;
      try {
        v = std::stod(cell, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used == 0 || used != cell.size()) {
        throw Error(ErrorCode::kInvalidArgument, "non-numeric cell '" + cell + "' in " + path);
      }
      row.push_back(v);
    }
    if (row.size() != out.header.size()) {
      throw Error(ErrorCode::kDimensionMismatch, "row width differs from header in " + path);
    }
    rows.push_back(std::move(row));
  }
  out.values.resize(static_cast<Eigen::Index>(rows.size()),
                    static_cast<Eigen::Index>(out.header.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < rows[i].size(); ++j) out.values(i, j) = rows[i][j];
  }
  return out;
}

}  // namespace batchgreedy
