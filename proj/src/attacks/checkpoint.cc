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

#include "miaug/attacks/checkpoint.h"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "absl/strings/str_cat.h"
#include "json.hpp"
#include "miaug/core/records_io.h"
#include "miaug/core/strings.h"

namespace miaug {
namespace {

constexpr const char* kFormat = "miaug-attack-model-v1";

std::string RealToken(double v) {
  if (std::isinf(v)) return v > 0 ? "\"inf\"" : "\"-inf\"";
  return FormatDouble(v);
}

std::string RealList(std::span<const double> values) {
  std::string text = "[";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i > 0) text += ',';
    text += RealToken(values[i]);
  }
  return text + "]";
}

absl::StatusOr<double> ReadReal(const nlohmann::json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) {
    const std::string s = v.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
  }
  return absl::InvalidArgumentError("expected a real number");
}

absl::StatusOr<std::vector<double>> ReadRealList(const nlohmann::json& v) {
  if (!v.is_array()) return absl::InvalidArgumentError("expected an array");
  std::vector<double> out;
  for (const auto& item : v) {
    auto real = ReadReal(item);
    if (!real.ok()) return real.status();
    out.push_back(*real);
  }
  return out;
}

}  // namespace

absl::StatusOr<bool> ApplyAttack(const AttackModel& model,
                                 const MembershipRecord& record) {
  if (const auto* threshold = std::get_if<ThresholdModel>(&model)) {
    return threshold->statistic == Statistic::kSingleLoss
               ? MlossAttack(record, *threshold)
               : MmeanAttack(record, *threshold);
  }
  return MiNetworkAttack(record, std::get<MINetwork>(model));
}

std::string SerializeAttackModel(const AttackModel& model) {
  if (const auto* t = std::get_if<ThresholdModel>(&model)) {
    return absl::StrCat("{\"format\":\"", kFormat,
                        "\",\"type\":\"threshold\",\"statistic\":\"",
                        Sv(StatisticName(t->statistic)),
                        "\",\"loss_index\":", t->loss_index,
                        ",\"tau\":", RealToken(t->tau), "}\n");
  }
  const MINetwork& net = std::get<MINetwork>(model);
  return absl::StrCat(
      "{\"format\":\"", kFormat, "\",\"type\":\"mi-network\",\"builder\":\"",
      Sv(FeatureBuilderName(net.builder)),
      "\",\"moment_order\":", net.builder.moment_order,
      ",\"input_size\":", net.input_size,
      ",\"feature_mean\":", RealList(net.feature_mean),
      ",\"feature_scale\":", RealList(net.feature_scale),
      ",\"params\":", RealList(net.network.params()), "}\n");
}

absl::StatusOr<AttackModel> ParseAttackModel(const std::string& text) {
  const nlohmann::json doc = nlohmann::json::parse(text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object() ||
      doc.value("format", "") != kFormat) {
    return absl::InvalidArgumentError("not an attack-model checkpoint");
  }
  try {
    const std::string type = doc.at("type").get<std::string>();
    if (type == "threshold") {
      ThresholdModel t;
      const std::string stat = doc.at("statistic").get<std::string>();
      if (stat == "single-loss") {
        t.statistic = Statistic::kSingleLoss;
      } else if (stat == "mean-loss") {
        t.statistic = Statistic::kMeanLoss;
      } else {
        return absl::InvalidArgumentError(
            absl::StrCat("unknown statistic '", stat, "'"));
      }
      t.loss_index = doc.at("loss_index").get<int>();
      auto tau = ReadReal(doc.at("tau"));
      if (!tau.ok()) return tau.status();
      t.tau = *tau;
      return AttackModel(t);
    }
    if (type != "mi-network") {
      return absl::InvalidArgumentError(
          absl::StrCat("unknown attack model type '", type, "'"));
    }
    FeatureBuilder builder;
    const std::string name = doc.at("builder").get<std::string>();
    if (name == "raw-loss") {
      builder.kind = FeatureBuilderKind::kRawLoss;
    } else if (name == "moments") {
      builder.kind = FeatureBuilderKind::kMoments;
    } else {
      return absl::InvalidArgumentError(
          absl::StrCat("unknown feature builder '", name, "'"));
    }
    builder.moment_order = doc.at("moment_order").get<int>();
    const int input_size = doc.at("input_size").get<int>();
    if (input_size < 1) return absl::InvalidArgumentError("bad input_size");
    MINetwork net = MakeMiNetwork(builder, input_size);
    auto mean = ReadRealList(doc.at("feature_mean"));
    auto scale = ReadRealList(doc.at("feature_scale"));
    auto params = ReadRealList(doc.at("params"));
    if (!mean.ok()) return mean.status();
    if (!scale.ok()) return scale.status();
    if (!params.ok()) return params.status();
    if (mean->size() != static_cast<std::size_t>(input_size) ||
        scale->size() != static_cast<std::size_t>(input_size) ||
        params->size() != net.network.num_params()) {
      return absl::InvalidArgumentError("MI network checkpoint size mismatch");
    }
    net.feature_mean = *std::move(mean);
    net.feature_scale = *std::move(scale);
    std::copy(params->begin(), params->end(), net.network.params().begin());
    return AttackModel(std::move(net));
  } catch (const nlohmann::json::exception& e) {
    return absl::InvalidArgumentError(e.what());
  }
}

absl::Status SaveAttackModel(const AttackModel& model,
                             const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return absl::UnavailableError(absl::StrCat("cannot open ", path));
  out << SerializeAttackModel(model);
  out.flush();
  if (!out) return absl::DataLossError(absl::StrCat("write failed: ", path));
  return absl::OkStatus();
}

absl::StatusOr<AttackModel> LoadAttackModel(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::stringstream buffer;
  buffer << in.rdbuf();
  auto model = ParseAttackModel(buffer.str());
  if (!model.ok()) {
    return absl::InvalidArgumentError(
        absl::StrCat(path, ": ", model.status().message()));
  }
  return model;
}

}  // namespace miaug
