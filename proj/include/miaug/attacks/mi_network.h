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

#ifndef MIAUG_ATTACKS_MI_NETWORK_H_
#define MIAUG_ATTACKS_MI_NETWORK_H_

#include <cstdint>
#include <span>
#include <vector>

#include "absl/status/statusor.h"
#include "miaug/attacks/features.h"
#include "miaug/core/types.h"
#include "miaug/nn/network.h"

namespace miaug {

inline constexpr int kMiHiddenUnits = 20;

struct MiNetworkHyperparams {
  int epochs = 2000;
  double learning_rate = 0.1;
  bool standardize = true;
};

// Membership classifier: features -> 20 -> 20 -> 1, tanh hidden units,
// sigmoid output. Features are standardized with constants taken from the
// attack-train split.
struct MINetwork {
  FeatureBuilder builder;
  int input_size = 0;
  std::vector<double> feature_mean;
  std::vector<double> feature_scale;
  nn::Network network;
};

// Untrained network (all-zero weights, identity standardization).
MINetwork MakeMiNetwork(const FeatureBuilder& builder, int input_size);

// Full-batch gradient descent on the mean binary cross-entropy of
// (builder(losses), member) over `train_records`. Both classes must be
// present. Weight init is drawn from the stream (`seed`, "mi-network-init").
absl::StatusOr<MINetwork> TrainMiNetwork(
    std::span<const MembershipRecord> train_records,
    const FeatureBuilder& builder, const MiNetworkHyperparams& hyperparams,
    std::uint64_t seed);

// Network output in (0, 1) for a record.
absl::StatusOr<double> MiNetworkOutput(const MINetwork& net,
                                       const MembershipRecord& record);

// member <=> output > 0.5 (strict). Fails on a feature-length mismatch.
absl::StatusOr<bool> MiNetworkAttack(const MembershipRecord& record,
                                     const MINetwork& net);

}  // namespace miaug

#endif  // MIAUG_ATTACKS_MI_NETWORK_H_
