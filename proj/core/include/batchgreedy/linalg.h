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

#ifndef BATCHGREEDY_LINALG_H_
#define BATCHGREEDY_LINALG_H_

#include <functional>
#include <vector>

#include <Eigen/Dense>

#include "batchgreedy/index_set.h"

namespace batchgreedy {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Eigenvalues at or below -kSpdTolerance * lambda_max reject a matrix as
// indefinite; anything between that and kEigenFloor * lambda_max is raised to
// kEigenFloor * lambda_max.
inline constexpr double kSpdTolerance = 1e-10;
inline constexpr double kEigenFloor = 1e-12;

class SymMatrix {
 public:
  // Stores (a + a^T) / 2. Throws DimensionMismatch for empty or non-square a.
  explicit SymMatrix(const Matrix& a);

  int dim() const { return static_cast<int>(a_.rows()); }
  const Matrix& matrix() const { return a_; }
  double operator()(int i, int j) const { return a_(i, j); }

 protected:
  struct Trusted {};
  SymMatrix(Matrix a, Trusted) : a_(std::move(a)) {}

  Matrix a_;
};

class SpdMatrix : public SymMatrix {
 public:
  // Symmetrizes, checks definiteness and applies the eigenvalue floor.
  explicit SpdMatrix(const Matrix& a);

  // Wraps a matrix the caller already knows to be symmetric positive definite,
  // e.g. a principal submatrix or Schur complement of an SpdMatrix.
  static SpdMatrix Unchecked(Matrix a) { return SpdMatrix(std::move(a), Trusted{}); }

 private:
  SpdMatrix(Matrix a, Trusted t) : SymMatrix(std::move(a), t) {}
};

struct SpectralRange {
  double lambda_min = 1.0;
  double lambda_max = 1.0;
  double rho = 1.0;
};

// 4 * a * b / (a + b)^2.
double KantorovichRho(double lambda_min, double lambda_max);

SymMatrix SpdLog(const SpdMatrix& a);
double LogDet(const SpdMatrix& a);
SymMatrix PrincipalSubmatrix(const SymMatrix& a, const IndexSet& s);
SpdMatrix PrincipalSubmatrix(const SpdMatrix& a, const IndexSet& s);
// A_cc - A_cs A_ss^{-1} A_sc over the complement c of s, ascending order.
SpdMatrix SchurConditional(const SpdMatrix& a, const IndexSet& s);
// Eigenvalues of B^{-1} A in descending order, negatives clamped to zero.
std::vector<double> GenEigvals(const SymMatrix& a, const SpdMatrix& b);
SpectralRange GetSpectralRange(const SpdMatrix& a);

// Raw-matrix kernels shared by the higher-level modules.

Matrix Select(const Matrix& a, const IndexSet& s);
Matrix Select(const Matrix& a, const IndexSet& rows, const IndexSet& cols);
// Cholesky log-determinant; throws NotPositiveDefinite when the factorization
// fails. The empty matrix has log-determinant 0.
double LogDetChol(const Matrix& a);
// Schur complement of a onto the complement of s. Empty s returns a itself.
Matrix SchurComplement(const Matrix& a, const IndexSet& s);
// U f(Lambda) U^T for symmetric a.
Matrix SymFunction(const Matrix& a, const std::function<double(double)>& f);
// Matrix logarithm with the kEigenFloor clamp; throws on indefinite input.
Matrix SymLog(const Matrix& a);
// Sorted (ascending) eigenvalues of a symmetric matrix.
Vector SymEigenvalues(const Matrix& a);
struct ClampedEigen {
  Vector values;  // ascending, floored at kEigenFloor * lambda_max
  Matrix vectors;
};
// Eigen-decomposition with the eigenvalue floor; throws on indefinite input.
ClampedEigen ClampedEig(const Matrix& a);
// Diagonal of the matrix logarithm, from a decomposition.
Vector DiagLog(const ClampedEigen& e);

// out[j] = log det of the leading j x j block of a(order, order), j = 0..|order|.
Vector PrefixLogDets(const Matrix& a, const std::vector<int>& order);

}  // namespace batchgreedy

#endif  // BATCHGREEDY_LINALG_H_
