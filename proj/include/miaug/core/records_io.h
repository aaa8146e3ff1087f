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

#ifndef MIAUG_CORE_RECORDS_IO_H_
#define MIAUG_CORE_RECORDS_IO_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "miaug/core/types.h"

namespace miaug {

// Record files hold one JSON object per line:
//   {"id":7,"member":true,"split":"attack-train","losses":[...],
//    "original_loss":0.25}
// "original_loss" is omitted when absent. Reals are written with 17
// significant digits, so reading a written file reproduces every double.

// %.17g rendering shared by every text format in the toolkit.
std::string FormatDouble(double value);

std::string FormatRecordLine(const MembershipRecord& record);
absl::StatusOr<MembershipRecord> ParseRecordLine(std::string_view line);

absl::Status WriteRecords(std::span<const MembershipRecord> records,
                          const std::string& path);

// Blank lines are skipped. Errors name the 1-based line number.
absl::StatusOr<std::vector<MembershipRecord>> ReadRecords(
    const std::string& path);

}  // namespace miaug

#endif  // MIAUG_CORE_RECORDS_IO_H_
