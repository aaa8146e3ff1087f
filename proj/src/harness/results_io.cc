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

#include "miaug/harness/results_io.h"

#include <cmath>
#include <fstream>

#include "absl/strings/str_cat.h"
#include "json.hpp"
#include "miaug/core/records_io.h"

namespace miaug {

std::string FormatResultsCsv(std::span<const AttackResult> results) {
  std::string out = "attack,k,success_rate,tp,tn,fp,fn,gap,seed\n";
  for (const AttackResult& r : results) {
    absl::StrAppend(&out, r.attack, ",", r.k, ",", FormatDouble(r.success_rate),
                    ",", r.tp, ",", r.tn, ",", r.fp, ",", r.fn, ",",
                    FormatDouble(r.gap), ",", r.seed, "\n");
  }
  return out;
}

std::string FormatHistogramCsv(std::span<const Histogram> histograms) {
  std::string out =
      "statistic,bin,lower,upper,member_density,nonmember_density\n";
  for (const Histogram& h : histograms) {
    for (std::size_t b = 0; b < h.member_density.size(); ++b) {
      absl::StrAppend(&out, h.statistic, ",", b, ",",
                      FormatDouble(h.lower + h.bin_width * b), ",",
                      FormatDouble(h.lower + h.bin_width * (b + 1)), ",",
                      FormatDouble(h.member_density[b]), ",",
                      FormatDouble(h.nonmember_density[b]), "\n");
    }
  }
  return out;
}

std::string FormatSummaryJson(const ExperimentConfig& config,
                              std::span<const ExperimentResult> runs,
                              std::span<const Histogram> histograms) {
  nlohmann::ordered_json doc;
  doc["fingerprint"] = ConfigFingerprint(config);
  nlohmann::ordered_json resolved = nlohmann::ordered_json::object();
  for (const auto& [key, value] : ToKeyValues(config)) resolved[key] = value;
  doc["config"] = resolved;
  nlohmann::ordered_json run_list = nlohmann::ordered_json::array();
  for (const ExperimentResult& run : runs) {
    nlohmann::ordered_json item;
    const int k = run.attacks.empty() ? config.k : run.attacks.front().k;
    item["k"] = k;
    // NaN is not valid JSON; null marks an undefined gap
    auto real = [](double v) -> nlohmann::ordered_json {
      return std::isfinite(v) ? nlohmann::ordered_json(v) : nullptr;
    };
    item["train"] = {{"train_loss", real(run.train.train_loss)},
                     {"test_loss", real(run.train.test_loss)},
                     {"gap", real(run.train.gap)},
                     {"train_accuracy", real(run.train.train_accuracy)},
                     {"test_accuracy", real(run.train.test_accuracy)},
                     {"epochs_run", run.train.epochs_run},
                     {"instance_loss", real(run.train.instance_loss)}};
    item["single_loss_index"] = run.single_loss_index;
    nlohmann::ordered_json attacks = nlohmann::ordered_json::array();
    for (const AttackResult& r : run.attacks) {
      attacks.push_back({{"attack", r.attack},
                         {"success_rate", r.success_rate},
                         {"tp", r.tp},
                         {"tn", r.tn},
                         {"fp", r.fp},
                         {"fn", r.fn}});
    }
    item["attacks"] = attacks;
    run_list.push_back(item);
  }
  doc["runs"] = run_list;
  nlohmann::ordered_json overlaps = nlohmann::ordered_json::object();
  for (const Histogram& h : histograms) overlaps[h.statistic] = h.overlap;
  doc["histogram_overlap"] = overlaps;
  return doc.dump(2) + "\n";
}

absl::Status WriteTextFile(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return absl::UnavailableError(absl::StrCat("cannot open ", path));
  out << text;
  out.flush();
  if (!out) return absl::DataLossError(absl::StrCat("write failed: ", path));
  return absl::OkStatus();
}

}  // namespace miaug
