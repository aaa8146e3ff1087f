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

#ifndef MIAUG_CORE_STRINGS_H_
#define MIAUG_CORE_STRINGS_H_

#include <string_view>

#include "absl/strings/string_view.h"

namespace miaug {

// The system abseil keeps its own string_view type; these bridge the two.
inline absl::string_view Sv(std::string_view s) { return {s.data(), s.size()}; }
inline std::string_view StdSv(absl::string_view s) {
  return {s.data(), s.size()};
}

}  // namespace miaug

#endif  // MIAUG_CORE_STRINGS_H_
