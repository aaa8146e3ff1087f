// Copyright 2026 The miaug Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef MIAUG_BAYES_ORACLE_SUITE_H_
#define MIAUG_BAYES_ORACLE_SUITE_H_

#include <cstdint>
#include <string>

#include "absl/status/statusor.h"

namespace miaug {

struct OracleSuiteOptions {
  int num_worlds = 100;
  int points_per_world = 3;  // observed grid points per world and gamma
  std::uint64_t seed = 1;
  double tolerance = 1e-10;
};

struct OracleSuiteReport {
  int worlds = 0;
  int evaluations = 0;  // (world, gamma, observed point) triples
  double max_error_theorem1 = 0.0;
  double max_error_theorem2 = 0.0;
  double max_normalization_error = 0.0;
  int out_of_range = 0;  // outputs outside [0, 1]
  int monotonicity_violations = 0;
  // entropy of m_1 given (theta, augmented set) vs given (theta, variant)
  int entropy_aug_lower = 0;
  int entropy_equal = 0;
  int entropy_aug_higher = 0;
  int entropy_identity_mismatches = 0;  // deterministic sets must tie
  bool passed = false;
};

// Random worlds with n in 3..6, grids of 27, 243 or 729 points, k in 1..3,
// q in {0.3, 0.5, 0.7}, each evaluated at gamma in {0.1, 1, 10}.
absl::StatusOr<OracleSuiteReport> RunOracleSuite(
    const OracleSuiteOptions& options);

// key = value lines.
std::string FormatOracleReport(const OracleSuiteReport& report);

}  // namespace miaug

#endif  // MIAUG_BAYES_ORACLE_SUITE_H_
