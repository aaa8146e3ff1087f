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

#ifndef MIAUG_BAYES_ORACLE_ORACLE_H_
#define MIAUG_BAYES_ORACLE_ORACLE_H_

#include <cstdint>
#include <vector>

#include "absl/status/statusor.h"
#include "miaug/bayes_oracle/world.h"

namespace miaug {

// Membership configurations are bitmasks: bit i set <=> sample i is in the
// training set. Bit 0 is the audited sample.
using MembershipConfig = std::uint32_t;

// Prior probability of a full configuration (independent Bernoulli(q)).
double ConfigPrior(const DiscreteWorld& world, MembershipConfig config);

// log p(theta_g | config) for every grid point, where
// p(theta | m) is proportional to exp(-sum_i m_i * SetLoss(theta, i) / gamma).
std::vector<double> LogPosterior(const DiscreteWorld& world,
                                 MembershipConfig config);

// Normalized posterior mass over the grid.
absl::StatusOr<std::vector<double>> Posterior(const DiscreteWorld& world,
                                              MembershipConfig config);

// P(m_1 = 1 | theta) by summing the joint over all 2^n configurations.
absl::StatusOr<double> DirectPosteriorMi(const DiscreteWorld& world,
                                         int observed_index);

// Expectation over the other samples' memberships K given theta of
// sigmoid(log(alpha / beta) + logit q), alpha = p(theta | m_1 = 1, K),
// beta = p(theta | m_1 = 0, K), each evaluated from its own posterior.
absl::StatusOr<double> OptimalMiTheorem1(const DiscreteWorld& world,
                                         int observed_index);

// Closed form for the energy posterior:
// sigmoid(tau_K - S_1(theta) / gamma + logit q) with
// tau_K = -log sum_z exp(-S_1(z) / gamma) p_K(z), p_K the posterior with
// the audited sample left out. The expectation weights are rebuilt from
// p_K and tau_K alone.
absl::StatusOr<double> OptimalMiTheorem2(const DiscreteWorld& world,
                                         int observed_index);

}  // namespace miaug

#endif  // MIAUG_BAYES_ORACLE_ORACLE_H_
