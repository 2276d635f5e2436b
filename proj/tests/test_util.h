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

#ifndef BATCHGREEDY_TESTS_TEST_UTIL_H_
#define BATCHGREEDY_TESTS_TEST_UTIL_H_

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "batchgreedy/batchgreedy.h"

namespace batchgreedy::testing {

inline Matrix RandomMatrix(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> normal;
  Matrix a(rows, cols);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) a(i, j) = normal(rng);
  }
  return a;
}

inline Matrix RandomSpdMatrix(int dim, Rng& rng, double shift = 0.1) {
  const Matrix w = RandomMatrix(dim, dim, rng);
  return w * w.transpose() / dim + shift * Matrix::Identity(dim, dim);
}

// Test-only matrix exponential through the symmetric eigendecomposition.
inline Matrix SymExp(const Matrix& a) {
  Eigen::SelfAdjointEigenSolver<Matrix> es(a);
  return es.eigenvectors() * es.eigenvalues().array().exp().matrix().asDiagonal() *
         es.eigenvectors().transpose();
}

inline IndexSet RandomNonemptySubset(int m, Rng& rng) {
  std::uniform_int_distribution<std::uint64_t> pick(1, (std::uint64_t{1} << m) - 1);
  return IndexSet::FromMask(pick(rng));
}

inline double RelDiff(double a, double b) {
  return std::abs(a - b) / std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

}  // namespace batchgreedy::testing

#endif  // BATCHGREEDY_TESTS_TEST_UTIL_H_
