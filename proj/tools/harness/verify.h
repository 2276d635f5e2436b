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

#ifndef BATCHGREEDY_TOOLS_HARNESS_VERIFY_H_
#define BATCHGREEDY_TOOLS_HARNESS_VERIFY_H_

#include <cstdint>
#include <string>
#include <vector>

#include "harness/config.h"
#include "json.hpp"

namespace batchgreedy::harness {

struct CheckResult {
  std::string name;
  double tolerance = 0.0;
  long long evaluated = 0;
  long long skipped = 0;
  long long violations = 0;
  // Largest amount by which an inequality missed, ignoring the tolerance; 0
  // when every evaluation held exactly.
  double max_violation = 0.0;

  bool pass() const { return violations == 0; }
  // Records lhs <= rhs.
  void ExpectLe(double lhs, double rhs);
  void Merge(const CheckResult& other);
};

struct VerifyReport {
  VerifyOptions options;
  std::uint64_t seed = 0;
  std::vector<CheckResult> checks;

  bool pass() const;
  const CheckResult* Find(const std::string& name) const;
  nlohmann::json ToJson() const;
};

// Brute-force checks of the approximation guarantees and bound inequalities
// on options.num_instances seeded instances. Instance i uses
// DeriveSeed(seed, i); the report does not depend on threads.
VerifyReport RunVerify(const VerifyOptions& options, std::uint64_t seed, int threads);

}  // namespace batchgreedy::harness

#endif  // BATCHGREEDY_TOOLS_HARNESS_VERIFY_H_
