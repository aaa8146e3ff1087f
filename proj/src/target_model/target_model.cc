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

#include "miaug/target_model/target_model.h"

#include <fstream>
#include <sstream>

#include "absl/strings/str_cat.h"
#include "json.hpp"
#include "miaug/core/loss.h"
#include "miaug/core/records_io.h"
#include "miaug/core/strings.h"

namespace miaug {
namespace {

constexpr const char* kFormat = "miaug-target-model-v1";

const char* ArchName(Architecture a) {
  switch (a) {
    case Architecture::kSoftmaxRegression:
      return "softmax";
    case Architecture::kMlp:
      return "mlp";
    case Architecture::kTinyConvNet:
      return "convnet";
  }
  return "?";
}

absl::StatusOr<Architecture> ParseArch(std::string_view name) {
  if (name == "softmax") return Architecture::kSoftmaxRegression;
  if (name == "mlp") return Architecture::kMlp;
  if (name == "convnet") return Architecture::kTinyConvNet;
  return absl::InvalidArgumentError(absl::StrCat("unknown arch '", Sv(name), "'"));
}

absl::Status CheckInput(const TargetModel& model, const Sample& sample) {
  if (!(sample.shape == model.input_shape) ||
      sample.features.size() != model.input_shape.size()) {
    return absl::InvalidArgumentError(absl::StrCat(
        "sample ", sample.id, " does not match the model input shape"));
  }
  if (sample.label < 0 || sample.label >= model.num_classes) {
    return absl::InvalidArgumentError(
        absl::StrCat("sample ", sample.id, " has label out of range"));
  }
  return absl::OkStatus();
}

}  // namespace

absl::StatusOr<TargetModel> BuildTargetModel(const ModelSpec& spec,
                                             const Shape& input_shape,
                                             int num_classes) {
  if (num_classes < 2) {
    return absl::InvalidArgumentError("target model needs >= 2 classes");
  }
  const int inputs = static_cast<int>(input_shape.size());
  if (inputs < 1) return absl::InvalidArgumentError("empty input shape");
  TargetModel model{spec, input_shape, num_classes, {}};
  switch (spec.architecture) {
    case Architecture::kSoftmaxRegression:
      model.network = nn::SoftmaxRegression(inputs, num_classes);
      break;
    case Architecture::kMlp:
      model.network =
          nn::Mlp(inputs, spec.hidden_sizes, spec.activation, num_classes);
      break;
    case Architecture::kTinyConvNet:
      if (!input_shape.is_grid()) {
        return absl::InvalidArgumentError("convnet needs grid inputs");
      }
      model.network = nn::TinyConvNet(
          static_cast<int>(input_shape.height()),
          static_cast<int>(input_shape.width()), spec.conv_channels,
          spec.dense_units, spec.activation, num_classes);
      break;
  }
  return model;
}

absl::StatusOr<double> LossOracle(const TargetModel& model,
                                  const Sample& sample) {
  if (auto status = CheckInput(model, sample); !status.ok()) return status;
  nn::Workspace ws;
  model.network.Forward(sample.features, ws);
  return CrossEntropyLoss(ws.activations.back(), sample.label);
}

absl::StatusOr<int> Predict(const TargetModel& model, const Sample& sample) {
  if (auto status = CheckInput(model, sample); !status.ok()) return status;
  nn::Workspace ws;
  model.network.Forward(sample.features, ws);
  const std::vector<double>& logits = ws.activations.back();
  int best = 0;
  for (int i = 1; i < static_cast<int>(logits.size()); ++i) {
    if (logits[static_cast<std::size_t>(i)] >
        logits[static_cast<std::size_t>(best)]) {
      best = i;
    }
  }
  return best;
}

absl::Status SaveTargetModel(const TargetModel& model,
                             const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) return absl::UnavailableError(absl::StrCat("cannot open ", path));
  nlohmann::json meta;
  meta["format"] = kFormat;
  meta["arch"] = ArchName(model.spec.architecture);
  meta["input_shape"] = model.input_shape.dims;
  meta["num_classes"] = model.num_classes;
  meta["hidden"] = model.spec.hidden_sizes;
  meta["activation"] =
      model.spec.activation == Activation::kTanh ? "tanh" : "relu";
  meta["conv_channels"] = model.spec.conv_channels;
  meta["dense_units"] = model.spec.dense_units;
  // Metadata through the JSON library; parameters spelled out so that the
  // 17-digit representation is guaranteed.
  std::string text = meta.dump();
  text.pop_back();
  text += ",\"params\":[";
  const auto params = model.network.params();
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i > 0) text += ',';
    text += FormatDouble(params[i]);
  }
  text += "]}\n";
  out << text;
  out.flush();
  if (!out) return absl::DataLossError(absl::StrCat("write failed: ", path));
  return absl::OkStatus();
}

absl::StatusOr<TargetModel> LoadTargetModel(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return absl::NotFoundError(absl::StrCat("cannot open ", path));
  std::stringstream buffer;
  buffer << in.rdbuf();
  const nlohmann::json doc = nlohmann::json::parse(buffer.str(), nullptr, false);
  if (doc.is_discarded() || !doc.is_object() ||
      doc.value("format", "") != kFormat) {
    return absl::InvalidArgumentError(
        absl::StrCat(path, ": not a target-model checkpoint"));
  }
  try {
    ModelSpec spec;
    auto arch = ParseArch(doc.at("arch").get<std::string>());
    if (!arch.ok()) return arch.status();
    spec.architecture = *arch;
    spec.hidden_sizes = doc.at("hidden").get<std::vector<int>>();
    spec.activation = doc.at("activation").get<std::string>() == "relu"
                          ? Activation::kRelu
                          : Activation::kTanh;
    spec.conv_channels = doc.at("conv_channels").get<int>();
    spec.dense_units = doc.at("dense_units").get<int>();
    Shape shape{doc.at("input_shape").get<std::vector<std::size_t>>()};
    auto model =
        BuildTargetModel(spec, shape, doc.at("num_classes").get<int>());
    if (!model.ok()) return model.status();
    const auto params = doc.at("params").get<std::vector<double>>();
    if (params.size() != model->network.num_params()) {
      return absl::InvalidArgumentError(absl::StrCat(
          path, ": expected ", model->network.num_params(),
          " parameters, found ", params.size()));
    }
    std::copy(params.begin(), params.end(), model->network.params().begin());
    return model;
  } catch (const nlohmann::json::exception& e) {
    return absl::InvalidArgumentError(absl::StrCat(path, ": ", e.what()));
  }
}

}  // namespace miaug
