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

#include "miaug/core/records_io.h"

#include <fstream>

#include "absl/strings/str_cat.h"
#include "absl/strings/str_format.h"
#include "json.hpp"
#include "miaug/core/strings.h"

namespace miaug {

std::string FormatDouble(double value) {
  return absl::StrFormat("%.17g", value);
}

std::string FormatRecordLine(const MembershipRecord& record) {
  std::string line = absl::StrCat("{\"id\":", record.sample_id, ",\"member\":",
                                  record.member ? "true" : "false",
                                  ",\"split\":\"", Sv(SplitName(record.split)),
                                  "\",\"losses\":[");
  for (std::size_t i = 0; i < record.losses.size(); ++i) {
    if (i > 0) line += ',';
    line += FormatDouble(record.losses[i]);
  }
  line += ']';
  if (record.original_loss.has_value()) {
    absl::StrAppend(&line, ",\"original_loss\":",
                    FormatDouble(*record.original_loss));
  }
  line += '}';
  return line;
}

absl::StatusOr<MembershipRecord> ParseRecordLine(std::string_view line) {
  const nlohmann::json doc = nlohmann::json::parse(line, nullptr, false);
  if (doc.is_discarded() || !doc.is_object()) {
    return absl::InvalidArgumentError("not a JSON object");
  }
  for (const char* key : {"id", "member", "split", "losses"}) {
    if (!doc.contains(key)) {
      return absl::InvalidArgumentError(absl::StrCat("missing field '", key,
                                                     "'"));
    }
  }
  if (!doc["id"].is_number_integer() || !doc["member"].is_boolean() ||
      !doc["split"].is_string() || !doc["losses"].is_array()) {
    return absl::InvalidArgumentError("field has the wrong type");
  }
  MembershipRecord record;
  record.sample_id = doc["id"].get<std::int64_t>();
  record.member = doc["member"].get<bool>();
  auto split = ParseSplit(doc["split"].get<std::string>());
  if (!split.ok()) return split.status();
  record.split = *split;
  for (const auto& v : doc["losses"]) {
    if (!v.is_number()) {
      return absl::InvalidArgumentError("losses must be numbers");
    }
    record.losses.push_back(v.get<double>());
  }
  if (auto status = ValidateLossSet(record.losses); !status.ok()) {
    return status;
  }
  if (doc.contains("original_loss")) {
    if (!doc["original_loss"].is_number()) {
      return absl::InvalidArgumentError("original_loss must be a number");
    }
    record.original_loss = doc["original_loss"].get<double>();
  }
  return record;
}

absl::Status WriteRecords(std::span<const MembershipRecord> records,
                          const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return absl::UnavailableError(absl::StrCat("cannot open ", path));
  for (const MembershipRecord& record : records) {
    out << FormatRecordLine(record) << '\n';
  }
  out.flush();
  if (!out) return absl::DataLossError(absl::StrCat("write failed: ", path));
  return absl::OkStatus();
}

absl::StatusOr<std::vector<MembershipRecord>> ReadRecords(
    const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::vector<MembershipRecord> records;
  std::string line;
  for (int line_number = 1; std::getline(in, line); ++line_number) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    auto record = ParseRecordLine(line);
    if (!record.ok()) {
      return absl::InvalidArgumentError(absl::StrCat(
          path, ":", line_number, ": ", record.status().message()));
    }
    records.push_back(*std::move(record));
  }
  return records;
}

}  // namespace miaug
