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

#ifndef MIAUG_CORE_INVARIANT_H_
#define MIAUG_CORE_INVARIANT_H_

#include "absl/status/status.h"
#include "absl/strings/cord.h"
#include "absl/strings/str_cat.h"

namespace miaug {

inline constexpr char kInvariantPayloadUrl[] = "miaug/invariant";

// A broken internal guarantee (unbalanced evaluation set, bound exceeded,
// ...) as opposed to bad input or a failed stage.
inline absl::Status InvariantViolation(absl::string_view message) {
  absl::Status status(absl::StatusCode::kInternal,
                      absl::StrCat("invariant violated: ", message));
  status.SetPayload(kInvariantPayloadUrl, absl::Cord("1"));
  return status;
}

inline bool IsInvariantViolation(const absl::Status& status) {
  return status.GetPayload(kInvariantPayloadUrl).has_value();
}

// Prefixes the message with a stage name, keeping code and payloads.
inline absl::Status AnnotateStage(absl::string_view stage,
                                  const absl::Status& status) {
  if (status.ok()) return status;
  absl::Status out(status.code(), absl::StrCat(stage, ": ", status.message()));
  status.ForEachPayload([&out](absl::string_view url, const absl::Cord& p) {
    out.SetPayload(url, p);
  });
  return out;
}

}  // namespace miaug

#endif  // MIAUG_CORE_INVARIANT_H_
