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

#ifndef MIAUG_HARNESS_RESULTS_IO_H_
#define MIAUG_HARNESS_RESULTS_IO_H_

#include <span>
#include <string>

#include "absl/status/status.h"
#include "miaug/core/config.h"
#include "miaug/harness/experiment.h"
#include "miaug/harness/histogram.h"

namespace miaug {

// attack,k,success_rate,tp,tn,fp,fn,gap,seed
std::string FormatResultsCsv(std::span<const AttackResult> results);

// statistic,bin,lower,upper,member_density,nonmember_density
std::string FormatHistogramCsv(std::span<const Histogram> histograms);

// Resolved config, training reports, attack results and overlaps.
std::string FormatSummaryJson(const ExperimentConfig& config,
                              std::span<const ExperimentResult> runs,
                              std::span<const Histogram> histograms);

absl::Status WriteTextFile(const std::string& path, const std::string& text);

}  // namespace miaug

#endif  // MIAUG_HARNESS_RESULTS_IO_H_
