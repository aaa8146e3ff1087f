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

#ifndef MIAUG_BAYES_ORACLE_ENTROPY_H_
#define MIAUG_BAYES_ORACLE_ENTROPY_H_

#include <vector>

#include "absl/status/statusor.h"
#include "miaug/bayes_oracle/world.h"
#include "miaug/core/rng.h"

namespace miaug {

// A world where the audited sample is random: a variant v is drawn from
// variant_prob, then an augmented set a from set_given_variant[v]. Training
// sees only a. The other samples (1..n-1) and q, gamma come from `others`;
// its sample-0 losses are ignored.
struct EntropyWorld {
  DiscreteWorld others;
  std::vector<double> variant_prob;
  std::vector<std::vector<double>> set_given_variant;  // [v][a]
  std::vector<std::vector<double>> set_losses;         // [a][g], summed over the set
};

// Conditional entropies of the audited membership bit, in nats.
struct EntropyCheck {
  double h_given_set = 0.0;      // H(m_1 | theta, augmented set)
  double h_given_variant = 0.0;  // H(m_1 | theta, variant)
};

absl::StatusOr<EntropyCheck> EntropyInequalityCheck(const EntropyWorld& world);

struct EntropyWorldOptions {
  WorldOptions base;
  int num_variants = 2;
  int num_sets = 3;
  // each variant maps to its own set with probability one
  bool deterministic = false;
};

EntropyWorld RandomEntropyWorld(const EntropyWorldOptions& options,
                                RngStream& rng);

}  // namespace miaug

#endif  // MIAUG_BAYES_ORACLE_ENTROPY_H_
