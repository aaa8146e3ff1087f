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

#include "miaug/core/types.h"

#include <cmath>
#include <unordered_set>

#include "absl/strings/str_cat.h"
#include "miaug/core/strings.h"

namespace miaug {

std::size_t Shape::size() const {
  if (dims.empty()) return 0;
  std::size_t total = 1;
  for (std::size_t d : dims) total *= d;
  return total;
}

absl::Status ValidateSample(const Sample& sample, int num_classes) {
  if (sample.shape.dims.empty() || sample.shape.dims.size() > 2) {
    return absl::InvalidArgumentError("sample shape must have rank 1 or 2");
  }
  if (sample.shape.size() != sample.features.size()) {
    return absl::InvalidArgumentError(
        absl::StrCat("sample ", sample.id, ": shape holds ",
                     sample.shape.size(), " values but features has ",
                     sample.features.size()));
  }
  if (sample.label < 0 || sample.label >= num_classes) {
    return absl::InvalidArgumentError(absl::StrCat(
        "sample ", sample.id, ": label ", sample.label, " outside [0, ",
        num_classes, ")"));
  }
  for (double v : sample.features) {
    if (!(v >= 0.0 && v <= 1.0)) {
      return absl::InvalidArgumentError(
          absl::StrCat("sample ", sample.id, ": feature outside [0, 1]"));
    }
  }
  return absl::OkStatus();
}

absl::Status ValidateLossSet(std::span<const double> losses) {
  if (losses.empty()) {
    return absl::InvalidArgumentError("loss set is empty");
  }
  for (double l : losses) {
    if (!std::isfinite(l) || l < 0.0) {
      return absl::InvalidArgumentError(
          absl::StrCat("loss value ", l, " is negative or non-finite"));
    }
  }
  return absl::OkStatus();
}

std::string_view SplitName(Split split) {
  switch (split) {
    case Split::kAttackTrain:
      return "attack-train";
    case Split::kAttackEval:
      return "attack-eval";
  }
  return "attack-eval";
}

absl::StatusOr<Split> ParseSplit(std::string_view name) {
  if (name == "attack-train") return Split::kAttackTrain;
  if (name == "attack-eval") return Split::kAttackEval;
  return absl::InvalidArgumentError(absl::StrCat("unknown split '", Sv(name), "'"));
}

absl::Status CheckSplitsDisjoint(std::span<const MembershipRecord> records) {
  std::unordered_set<std::int64_t> train_ids;
  for (const MembershipRecord& r : records) {
    if (r.split == Split::kAttackTrain) train_ids.insert(r.sample_id);
  }
  for (const MembershipRecord& r : records) {
    if (r.split == Split::kAttackEval && train_ids.contains(r.sample_id)) {
      return absl::FailedPreconditionError(absl::StrCat(
          "sample ", r.sample_id, " appears in both attack splits"));
    }
  }
  return absl::OkStatus();
}

}  // namespace miaug
