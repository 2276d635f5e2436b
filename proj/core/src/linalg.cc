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

#include "batchgreedy/linalg.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <string>

#include "batchgreedy/error.h"

namespace batchgreedy {
namespace {

void RequireSquare(const Matrix& a, const char* what) {
  if (a.rows() == 0 || a.rows() != a.cols()) {
    throw Error(ErrorCode::kDimensionMismatch,
                std::string(what) + " must be square and non-empty");
  }
}

// Clamped spectrum of a symmetric matrix, or throws if it is indefinite.
Vector ClampedSpectrum(const Vector& eig) {
  const double lmax = eig.maxCoeff();
  if (!(lmax > 0.0)) {
    throw Error(ErrorCode::kNotPositiveDefinite, "largest eigenvalue is not positive");
  }
  if (eig.minCoeff() <= -kSpdTolerance * lmax) {
    throw Error(ErrorCode::kNotPositiveDefinite,
                "eigenvalue " + std::to_string(eig.minCoeff()) +
                    " below tolerance (lambda_max " + std::to_string(lmax) + ")");
  }
  return eig.cwiseMax(kEigenFloor * lmax);
}

}  // namespace

SymMatrix::SymMatrix(const Matrix& a) {
  RequireSquare(a, "SymMatrix");
  a_ = 0.5 * (a + a.transpose());
}

SpdMatrix::SpdMatrix(const Matrix& a) : SymMatrix(a) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a_);
  const Vector& eig = es.eigenvalues();
  Vector clamped = ClampedSpectrum(eig);
  if (clamped != eig) {
    Matrix rebuilt = es.eigenvectors() * clamped.asDiagonal() *
                     es.eigenvectors().transpose();
    a_ = 0.5 * (rebuilt + rebuilt.transpose());
  }
}

double KantorovichRho(double lambda_min, double lambda_max) {
  const double s = lambda_min + lambda_max;
  return 4.0 * lambda_min * lambda_max / (s * s);
}

Matrix Select(const Matrix& a, const IndexSet& s) { return Select(a, s, s); }

Matrix Select(const Matrix& a, const IndexSet& rows, const IndexSet& cols) {
  Matrix out(rows.size(), cols.size());
  for (int i = 0; i < rows.size(); ++i) {
    for (int j = 0; j < cols.size(); ++j) out(i, j) = a(rows[i], cols[j]);
  }
  return out;
}

double LogDetChol(const Matrix& a) {
  if (a.rows() == 0) return 0.0;
  Eigen::LLT<Matrix> llt(a);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorCode::kNotPositiveDefinite, "Cholesky factorization failed");
  }
  const auto& l = llt.matrixLLT();
  double sum = 0.0;
  for (Eigen::Index i = 0; i < a.rows(); ++i) sum += std::log(l(i, i));
  return 2.0 * sum;
}

Matrix SchurComplement(const Matrix& a, const IndexSet& s) {
  const int n = static_cast<int>(a.rows());
  if (s.empty()) return a;
  const IndexSet c = s.Complement(n);
  if (c.empty()) return Matrix(0, 0);
  Eigen::LLT<Matrix> llt(Select(a, s));
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorCode::kNotPositiveDefinite, "conditioning block is not SPD");
  }
  const Matrix a_sc = Select(a, s, c);
  Matrix out = Select(a, c) - a_sc.transpose() * llt.solve(a_sc);
  return 0.5 * (out + out.transpose());
}

Matrix SymFunction(const Matrix& a, const std::function<double(double)>& f) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a);
  Vector fe = es.eigenvalues().unaryExpr(f);
  return es.eigenvectors() * fe.asDiagonal() * es.eigenvectors().transpose();
}

Matrix SymLog(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a);
  Vector le = ClampedSpectrum(es.eigenvalues()).array().log();
  Matrix out = es.eigenvectors() * le.asDiagonal() * es.eigenvectors().transpose();
  return 0.5 * (out + out.transpose());
}

Vector SymEigenvalues(const Matrix& a) {
  if (a.rows() == 0) return Vector();
  return Eigen::SelfAdjointEigenSolver<Matrix>(a, Eigen::EigenvaluesOnly).eigenvalues();
}

ClampedEigen ClampedEig(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a);
  return {ClampedSpectrum(es.eigenvalues()), es.eigenvectors()};
}

Vector DiagLog(const ClampedEigen& e) {
  return e.vectors.array().square().matrix() * e.values.array().log().matrix();
}

Vector PrefixLogDets(const Matrix& a, const std::vector<int>& order) {
  const int k = static_cast<int>(order.size());
  Vector out = Vector::Zero(k + 1);
  if (k == 0) return out;
  Matrix p(k, k);
  for (int i = 0; i < k; ++i) {
    for (int j = 0; j < k; ++j) p(i, j) = a(order[i], order[j]);
  }
  Eigen::LLT<Matrix> llt(p);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorCode::kNotPositiveDefinite, "Cholesky factorization failed");
  }
  const auto& l = llt.matrixLLT();
  for (int j = 0; j < k; ++j) out(j + 1) = out(j) + 2.0 * std::log(l(j, j));
  return out;
}

SymMatrix SpdLog(const SpdMatrix& a) { return SymMatrix(SymLog(a.matrix())); }

double LogDet(const SpdMatrix& a) {
  try {
    return LogDetChol(a.matrix());
  } catch (const Error&) {
    // Clamped matrices near the floor can defeat Cholesky; fall back to the
    // spectrum, which the constructor already validated.
    return ClampedSpectrum(SymEigenvalues(a.matrix())).array().log().sum();
  }
}

SymMatrix PrincipalSubmatrix(const SymMatrix& a, const IndexSet& s) {
  if (s.empty()) throw Error(ErrorCode::kEmptySelection, "principal submatrix of empty set");
  CheckWithin(s, a.dim());
  return SymMatrix(Select(a.matrix(), s));
}

SpdMatrix PrincipalSubmatrix(const SpdMatrix& a, const IndexSet& s) {
  if (s.empty()) throw Error(ErrorCode::kEmptySelection, "principal submatrix of empty set");
  CheckWithin(s, a.dim());
  return SpdMatrix::Unchecked(Select(a.matrix(), s));
}

SpdMatrix SchurConditional(const SpdMatrix& a, const IndexSet& s) {
  if (s.empty()) throw Error(ErrorCode::kEmptySelection, "conditioning set is empty");
  CheckWithin(s, a.dim());
  if (s.size() == a.dim()) {
    throw Error(ErrorCode::kEmptyComplement, "conditioning on every index");
  }
  return SpdMatrix(SchurComplement(a.matrix(), s));
}

std::vector<double> GenEigvals(const SymMatrix& a, const SpdMatrix& b) {
  if (a.dim() != b.dim()) {
    throw Error(ErrorCode::kDimensionMismatch, "pencil matrices differ in size");
  }
  Eigen::LLT<Matrix> llt(b.matrix());
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorCode::kNotPositiveDefinite, "pencil B is not SPD");
  }
  const auto l = llt.matrixL();
  Matrix w = l.solve(a.matrix());
  Matrix c = l.solve(w.transpose());
  Vector eig = SymEigenvalues(0.5 * (c + c.transpose()));
  std::vector<double> out(eig.data(), eig.data() + eig.size());
  for (double& v : out) v = std::max(v, 0.0);
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

SpectralRange GetSpectralRange(const SpdMatrix& a) {
  Vector eig = ClampedSpectrum(SymEigenvalues(a.matrix()));
  SpectralRange r;
  r.lambda_min = eig.minCoeff();
  r.lambda_max = eig.maxCoeff();
  r.rho = r.lambda_min == r.lambda_max ? 1.0 : KantorovichRho(r.lambda_min, r.lambda_max);
  return r;
}

}  // namespace batchgreedy
