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

#ifndef BATCHGREEDY_PROBLEMS_H_
#define BATCHGREEDY_PROBLEMS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "batchgreedy/linalg.h"
#include "batchgreedy/oed.h"

namespace batchgreedy {

enum class KernelKind { kSquaredExponential, kExponential };

struct KernelSpec {
  KernelKind kind = KernelKind::kSquaredExponential;
  double length_scale = 0.1;
  double variance = 1.0;
  double nugget = 1e-8;
};

// Kernel matrix on the grid x_i = i / (num_points - 1) of [0, 1], plus the
// nugget on the diagonal. Squared exponential: v exp(-d^2 / (2 l^2));
// exponential: v exp(-d / l).
SpdMatrix KernelCovariance(const KernelSpec& spec, int num_points);

struct GeneratorSpec {
  int n = 20;
  int m = 100;
  // Singular value j (0-based) is top_singular * exp(-decay_rate * j). When
  // unset the rate gives sigma_min / sigma_max = 1e-4 over min(m, n) modes.
  std::optional<double> decay_rate;
  double top_singular = 1.0;
  std::uint64_t seed = 0;
};

double DefaultDecayRate(int rank);
std::vector<double> PrescribedSingularValues(const GeneratorSpec& spec);

// Orthonormal columns of a via modified Gram-Schmidt.
Matrix ModifiedGramSchmidtQ(const Matrix& a);
// u diag(sigma) v^T with u: m x r, v: n x r.
Matrix ComposeForwardModel(const Matrix& u, const std::vector<double>& sigma, const Matrix& v);
// Random singular vectors from QR of standard normal matrices, prescribed
// singular values.
Matrix RandomForwardModel(const GeneratorSpec& spec);

LinearGaussianModel AssembleModel(const Matrix& g, const KernelSpec& prior_spec,
                                  const KernelSpec& noise_spec);

// Dense random model with correlated prior and noise, for brute-force suites.
LinearGaussianModel RandomCorrelatedModel(int m, int n, std::uint64_t seed);
// Same, but with a diagonal noise covariance.
LinearGaussianModel RandomDiagonalNoiseModel(int m, int n, std::uint64_t seed);

struct EnsembleModel {
  LinearGaussianModel model;
  std::vector<int> retained_parameters;
};

// Builds a model from paired samples (rows of x_samples and y_samples).
// Parameters with sample variance below param_variance_floor are dropped.
EnsembleModel EmpiricalModelFromEnsemble(const Matrix& x_samples, const Matrix& y_samples,
                                         double param_variance_floor);

struct CsvMatrix {
  std::vector<std::string> header;
  Matrix values;
};

// Header row followed by numeric rows, comma separated.
CsvMatrix ReadCsvMatrix(const std::string& path);

}  // namespace batchgreedy

#endif  // BATCHGREEDY_PROBLEMS_H_
