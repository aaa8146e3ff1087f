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

#ifndef MIAUG_DP_BOUND_DP_BOUND_H_
#define MIAUG_DP_BOUND_DP_BOUND_H_

#include <cstdint>

#include "absl/status/statusor.h"

namespace miaug {

struct DpParams {
  double epsilon = 0.0;  // set-level privacy loss
  int k = 1;             // augmentations per sample; epsilon/k per instance
  double q = 0.5;        // membership prior
};

// Upper bound on P(m_1 = 1 | theta) for an epsilon-DP posterior:
// sigmoid(epsilon + logit q). Equals q exactly at epsilon = 0.
absl::StatusOr<double> MiUpperBound(const DpParams& params);

struct WorldCheckReport {
  int trials = 0;
  int evaluations = 0;
  int violations = 0;
  double max_posterior = 0.0;
  double max_ratio = 0.0;  // max over evaluations of posterior / bound
  std::uint64_t offending_seed = 0;
};

// Random worlds whose audited sample has per-instance losses confined to a
// band of width gamma * epsilon / k across the grid, so the posterior ratio
// alpha / beta stays within e^epsilon. The exact posterior is compared
// against MiUpperBound at every grid point. A violation is an error status
// naming the world's seed.
absl::StatusOr<WorldCheckReport> RandomizedWorldCheck(const DpParams& params,
                                                      int trials,
                                                      std::uint64_t seed);

}  // namespace miaug

#endif  // MIAUG_DP_BOUND_DP_BOUND_H_
