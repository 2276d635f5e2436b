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

#include "batchgreedy/error.h"
#include "batchgreedy/linalg.h"
#include "test_util.h"

namespace batchgreedy {
namespace {

using testing::RandomSpdMatrix;
using testing::SymExp;

Matrix Diag(std::initializer_list<double> d) {
  Vector v(static_cast<Eigen::Index>(d.size()));
  int i = 0;
  for (double x : d) v(i++) = x;
  return v.asDiagonal();
}

Matrix Rotation(double theta) {
  Matrix q(2, 2);
  q << std::cos(theta), -std::sin(theta), std::sin(theta), std::cos(theta);
  return q;
}

double CofactorDet(const Matrix& a) {
  if (a.rows() == 1) return a(0, 0);
  if (a.rows() == 2) return a(0, 0) * a(1, 1) - a(0, 1) * a(1, 0);
  double det = 0.0;
  for (int j = 0; j < 3; ++j) {
    Matrix minor(2, 2);
    for (int r = 1; r < 3; ++r) {
      int c2 = 0;
      for (int c = 0; c < 3; ++c) {
        if (c == j) continue;
        minor(r - 1, c2++) = a(r, c);
      }
    }
    det += (j % 2 ? -1.0 : 1.0) * a(0, j) * CofactorDet(minor);
  }
  return det;
}

TEST(SymMatrixTest, SymmetrizesOnConstruction) {
  Matrix a(2, 2);
  a << 1, 2, 4, 3;
  SymMatrix s(a);
  EXPECT_EQ(s(0, 1), 3.0);
  EXPECT_EQ(s(1, 0), 3.0);
}

TEST(SymMatrixTest, RejectsNonSquare) {
  EXPECT_THROW(SymMatrix(Matrix(2, 3)), Error);
  EXPECT_THROW(SymMatrix(Matrix(0, 0)), Error);
}

TEST(SpdMatrixTest, RejectsIndefinite) {
  try {
    SpdMatrix bad(Diag({1.0, -1e-3}));
    FAIL() << "expected an error";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotPositiveDefinite);
  }
}

TEST(SpdMatrixTest, ClampsTinyNegativeEigenvalues) {
  SpdMatrix a(Diag({1.0, -1e-13}));
  EXPECT_DOUBLE_EQ(a(1, 1), kEigenFloor);
  EXPECT_TRUE(std::isfinite(LogDet(a)));
}

TEST(SpdLogTest, IdentityGivesZero) {
  EXPECT_NEAR(SpdLog(SpdMatrix(Matrix::Identity(3, 3))).matrix().norm(), 0.0, 1e-15);
}

TEST(SpdLogTest, DiagonalCase) {
  const double e = std::exp(1.0);
  const Matrix l = SpdLog(SpdMatrix(Diag({e, e * e}))).matrix();
  EXPECT_NEAR(l(0, 0), 1.0, 1e-14);
  EXPECT_NEAR(l(1, 1), 2.0, 1e-14);
  EXPECT_NEAR(l(0, 1), 0.0, 1e-14);
}

TEST(SpdLogTest, RotatedDiagonalMatchesHandDecomposition) {
  const Matrix q = Rotation(0.3);
  const Matrix a = q * Diag({2.0, 5.0}) * q.transpose();
  const Matrix expected = q * Diag({std::log(2.0), std::log(5.0)}) * q.transpose();
  EXPECT_LT((SpdLog(SpdMatrix(a)).matrix() - expected).norm(), 1e-13);
}

TEST(LogDetTest, Examples) {
  EXPECT_NEAR(LogDet(SpdMatrix(Matrix::Identity(5, 5))), 0.0, 1e-15);
  EXPECT_NEAR(LogDet(SpdMatrix(Diag({2.0, 3.0}))), std::log(6.0), 1e-14);
  Matrix a(2, 2);
  a << 2, 1, 1, 2;
  EXPECT_NEAR(LogDet(SpdMatrix(a)), std::log(3.0), 1e-14);
}

TEST(LogDetTest, AgreesWithCofactorExpansion) {
  Rng rng(11);
  for (int dim = 1; dim <= 3; ++dim) {
    for (int trial = 0; trial < 20; ++trial) {
      const Matrix a = RandomSpdMatrix(dim, rng);
      EXPECT_NEAR(LogDet(SpdMatrix(a)), std::log(CofactorDet(a)), 1e-10);
    }
  }
}

TEST(PrincipalSubmatrixTest, Examples) {
  EXPECT_EQ(PrincipalSubmatrix(SymMatrix(Diag({1, 2, 3})), {1}).matrix(), Diag({2}));
  Matrix a(3, 3);
  a << 2, 1, 0, 1, 2, 1, 0, 1, 2;
  EXPECT_EQ(PrincipalSubmatrix(SymMatrix(a), IndexSet::Range(3)).matrix(), a);
  EXPECT_EQ(PrincipalSubmatrix(SymMatrix(a), {0, 2}).matrix(), Diag({2, 2}));
}

TEST(PrincipalSubmatrixTest, Errors) {
  SymMatrix a(Diag({1, 2}));
  EXPECT_THROW(PrincipalSubmatrix(a, IndexSet{}), Error);
  EXPECT_THROW(PrincipalSubmatrix(a, {2}), Error);
}

TEST(SchurConditionalTest, Examples) {
  EXPECT_NEAR(SchurConditional(SpdMatrix(Diag({1, 2})), {0})(0, 0), 2.0, 1e-15);
  Matrix a(2, 2);
  a << 2, 1, 1, 2;
  EXPECT_NEAR(SchurConditional(SpdMatrix(a), {0})(0, 0), 1.5, 1e-15);
  Matrix block = Matrix::Zero(4, 4);
  block.topLeftCorner(2, 2) << 3, 1, 1, 2;
  block.bottomRightCorner(2, 2) << 4, -1, -1, 5;
  EXPECT_LT((SchurConditional(SpdMatrix(block), {0, 1}).matrix() -
             block.bottomRightCorner(2, 2)).norm(), 1e-14);
}

TEST(SchurConditionalTest, Errors) {
  SpdMatrix a(Diag({1, 2}));
  try {
    SchurConditional(a, {0, 1});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEmptyComplement);
  }
  EXPECT_THROW(SchurConditional(a, IndexSet{}), Error);
}

TEST(GenEigvalsTest, Examples) {
  std::vector<double> v = GenEigvals(SymMatrix(Diag({2, 8})), SpdMatrix(Diag({1, 2})));
  ASSERT_EQ(v.size(), 2u);
  EXPECT_NEAR(v[0], 4.0, 1e-14);
  EXPECT_NEAR(v[1], 2.0, 1e-14);

  Rng rng(3);
  const Matrix b = RandomSpdMatrix(4, rng);
  for (double x : GenEigvals(SymMatrix(b), SpdMatrix(b))) EXPECT_NEAR(x, 1.0, 1e-12);

  Matrix a(2, 2);
  a << 2, 1, 1, 2;
  v = GenEigvals(SymMatrix(a), SpdMatrix(Matrix::Identity(2, 2)));
  EXPECT_NEAR(v[0], 3.0, 1e-14);
  EXPECT_NEAR(v[1], 1.0, 1e-14);
}

TEST(GenEigvalsTest, DimensionMismatch) {
  EXPECT_THROW(GenEigvals(SymMatrix(Diag({1, 2})), SpdMatrix(Diag({1}))), Error);
}

TEST(SpectralRangeTest, Examples) {
  SpectralRange r = GetSpectralRange(SpdMatrix(Matrix::Identity(4, 4)));
  EXPECT_EQ(r.lambda_min, 1.0);
  EXPECT_EQ(r.lambda_max, 1.0);
  EXPECT_EQ(r.rho, 1.0);
  r = GetSpectralRange(SpdMatrix(Diag({1, 3})));
  EXPECT_NEAR(r.lambda_min, 1.0, 1e-15);
  EXPECT_NEAR(r.lambda_max, 3.0, 1e-15);
  EXPECT_NEAR(r.rho, 0.75, 1e-15);
  EXPECT_EQ(GetSpectralRange(SpdMatrix(Diag({2.5, 2.5}))).rho, 1.0);
}

TEST(PrefixLogDetsTest, MatchesDirectLogDets) {
  Rng rng(5);
  const Matrix a = RandomSpdMatrix(6, rng);
  const std::vector<int> order = {4, 1, 5, 0};
  const Vector p = PrefixLogDets(a, order);
  ASSERT_EQ(p.size(), 5);
  EXPECT_EQ(p(0), 0.0);
  for (int j = 1; j <= 4; ++j) {
    const IndexSet s(std::vector<int>(order.begin(), order.begin() + j));
    EXPECT_NEAR(p(j), LogDetChol(Select(a, s)), 1e-12);
  }
}

// Randomized properties over SPD matrices up to 12 x 12.

class LinalgPropertyTest : public ::testing::TestWithParam<int> {};

TEST_P(LinalgPropertyTest, HadamardAndOperatorConcaveSandwich) {
  Rng rng(1000 + GetParam());
  std::uniform_int_distribution<int> dim_pick(1, 12);
  const int dim = dim_pick(rng);
  const SpdMatrix a(RandomSpdMatrix(dim, rng, 0.05));
  const IndexSet s = testing::RandomNonemptySubset(dim, rng);
  const double ld = LogDet(PrincipalSubmatrix(a, s));
  double log_diag = 0.0;
  for (int i : s) log_diag += std::log(a(i, i));
  EXPECT_LE(ld, log_diag + 1e-9);

  const Matrix l = SpdLog(a).matrix();
  double trace = 0.0;
  for (int i : s) trace += l(i, i);
  const double rho = GetSpectralRange(a).rho;
  EXPECT_LE(trace, ld + 1e-9);
  EXPECT_LE(ld, trace - s.size() * std::log(rho) + 1e-9);
}

TEST_P(LinalgPropertyTest, PencilInterlacing) {
  Rng rng(2000 + GetParam());
  std::uniform_int_distribution<int> dim_pick(2, 10);
  const int n = dim_pick(rng);
  const Matrix b = RandomSpdMatrix(n, rng);
  const Matrix w = testing::RandomMatrix(n, n, rng);
  const Matrix a = w * w.transpose();
  const IndexSet s = testing::RandomNonemptySubset(n, rng);
  const int p = s.size();
  const std::vector<double> full = GenEigvals(SymMatrix(a), SpdMatrix(b));
  const std::vector<double> part =
      GenEigvals(SymMatrix(Select(a, s)), SpdMatrix(Select(b, s)));
  for (int k = 0; k < p; ++k) {
    const double hi = full[k];
    const double lo = full[n - p + k];
    const double tol = 1e-8 * std::max(1.0, hi);
    EXPECT_LE(part[k], hi + tol);
    EXPECT_GE(part[k], lo - tol);
  }
}

TEST_P(LinalgPropertyTest, LogInvertsExp) {
  Rng rng(3000 + GetParam());
  std::uniform_int_distribution<int> dim_pick(1, 8);
  const int dim = dim_pick(rng);
  const Matrix w = testing::RandomMatrix(dim, dim, rng);
  const Matrix h = 0.5 * (w + w.transpose());
  EXPECT_LT((SpdLog(SpdMatrix(SymExp(h))).matrix() - h).norm(), 1e-8);
}

TEST_P(LinalgPropertyTest, SchurMatchesInverseOfSubmatrix) {
  Rng rng(4000 + GetParam());
  std::uniform_int_distribution<int> dim_pick(2, 10);
  const int dim = dim_pick(rng);
  const Matrix a = RandomSpdMatrix(dim, rng);
  IndexSet s = testing::RandomNonemptySubset(dim, rng);
  if (s.size() == dim) s = s.Minus({s[0]});
  const IndexSet c = s.Complement(dim);
  const Matrix expected = Select(Matrix(a.inverse()), c).inverse();
  EXPECT_LT((SchurConditional(SpdMatrix(a), s).matrix() - expected).norm(),
            1e-8 * std::max(1.0, expected.norm()));
}

TEST_P(LinalgPropertyTest, SpdLogReproducesSpectrum) {
  Rng rng(5000 + GetParam());
  const int dim = 1 + GetParam() % 8;
  const Matrix a = RandomSpdMatrix(dim, rng);
  const Vector ea = SymEigenvalues(a);
  const Vector el = SymEigenvalues(SpdLog(SpdMatrix(a)).matrix()).array().exp();
  for (int i = 0; i < dim; ++i) EXPECT_LT(std::abs(el(i) - ea(i)) / ea(i), 1e-10);
}

INSTANTIATE_TEST_SUITE_P(Random, LinalgPropertyTest, ::testing::Range(0, 40));

}  // namespace
}  // namespace batchgreedy
