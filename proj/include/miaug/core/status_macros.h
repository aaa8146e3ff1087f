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

#ifndef MIAUG_CORE_STATUS_MACROS_H_
#define MIAUG_CORE_STATUS_MACROS_H_

#include "absl/status/status.h"
#include "absl/status/statusor.h"

#define MIAUG_STATUS_CONCAT_INNER_(a, b) a##b
#define MIAUG_STATUS_CONCAT_(a, b) MIAUG_STATUS_CONCAT_INNER_(a, b)

#define MIAUG_RETURN_IF_ERROR(expr)                    \
  do {                                                 \
    const ::absl::Status miaug_status_ = (expr);       \
    if (!miaug_status_.ok()) return miaug_status_;     \
  } while (0)

#define MIAUG_ASSIGN_OR_RETURN_IMPL_(statusor, lhs, rexpr) \
  auto statusor = (rexpr);                                 \
  if (!statusor.ok()) return statusor.status();            \
  lhs = std::move(statusor).value()

#define MIAUG_ASSIGN_OR_RETURN(lhs, rexpr)                                   \
  MIAUG_ASSIGN_OR_RETURN_IMPL_(                                              \
      MIAUG_STATUS_CONCAT_(miaug_statusor_, __LINE__), lhs, rexpr)

#endif  // MIAUG_CORE_STATUS_MACROS_H_
