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

#ifndef MIAUG_ATTACKS_CHECKPOINT_H_
#define MIAUG_ATTACKS_CHECKPOINT_H_

#include <string>
#include <variant>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "miaug/attacks/mi_network.h"
#include "miaug/attacks/threshold.h"
#include "miaug/core/types.h"

namespace miaug {

// A calibrated decision rule: a scalar threshold or a trained MI network.
using AttackModel = std::variant<ThresholdModel, MINetwork>;

// Dispatches to MlossAttack, MmeanAttack or MiNetworkAttack.
absl::StatusOr<bool> ApplyAttack(const AttackModel& model,
                                 const MembershipRecord& record);

// JSON checkpoint. Thresholds store tau ("inf"/"-inf" strings for the
// unbounded candidates); networks store the builder, the standardization
// constants and the weights, all reals with 17 significant digits.
std::string SerializeAttackModel(const AttackModel& model);
absl::StatusOr<AttackModel> ParseAttackModel(const std::string& text);

absl::Status SaveAttackModel(const AttackModel& model, const std::string& path);
absl::StatusOr<AttackModel> LoadAttackModel(const std::string& path);

}  // namespace miaug

#endif  // MIAUG_ATTACKS_CHECKPOINT_H_
