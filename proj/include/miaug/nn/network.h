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

#ifndef MIAUG_NN_NETWORK_H_
#define MIAUG_NN_NETWORK_H_

#include <cstddef>
#include <span>
#include <variant>
#include <vector>

#include "miaug/core/config.h"
#include "miaug/core/rng.h"

namespace miaug::nn {

// Fully connected layer. Parameters: weights [out][in] then biases [out].
struct Dense {
  int inputs = 0;
  int outputs = 0;
};

struct Elementwise {
  Activation activation = Activation::kTanh;
  int size = 0;
};

// 3x3 convolution, stride 1, zero "same" padding, channel-major
// [channel][row][col] activations. Parameters: kernels
// [out][in][3][3] then biases [out].
struct Conv3x3 {
  int in_channels = 0;
  int out_channels = 0;
  int height = 0;
  int width = 0;
};

// Mean over the spatial positions of each channel.
struct GlobalAvgPool {
  int channels = 0;
  int height = 0;
  int width = 0;
};

using Layer = std::variant<Dense, Elementwise, Conv3x3, GlobalAvgPool>;

// Activations of one forward pass, kept for the backward pass.
struct Workspace {
  std::vector<std::vector<double>> activations;
  std::vector<double> grad_a;
  std::vector<double> grad_b;
};

// Feed-forward stack of layers over one flat parameter vector.
class Network {
 public:
  Network() = default;
  explicit Network(std::vector<Layer> layers);

  std::size_t num_params() const { return params_.size(); }
  int input_size() const;
  int output_size() const;
  const std::vector<Layer>& layers() const { return layers_; }

  std::span<double> params() { return params_; }
  std::span<const double> params() const { return params_; }

  // Weights ~ U[-a, a] with a = sqrt(6 / (fan_in + fan_out)); biases 0.
  void InitGlorotUniform(RngStream& rng);

  // Fills ws.activations; the output is ws.activations.back().
  void Forward(std::span<const double> input, Workspace& ws) const;

  // Accumulates d(loss)/d(params) into `grad_params` given d(loss)/d(output)
  // for the pass stored in `ws`.
  void Backward(Workspace& ws, std::span<const double> grad_output,
                std::span<double> grad_params) const;

 private:
  std::vector<Layer> layers_;
  std::vector<std::size_t> offsets_;
  std::vector<double> params_;
};

Network SoftmaxRegression(int inputs, int classes);
Network Mlp(int inputs, const std::vector<int>& hidden, Activation activation,
            int classes);
// conv(1 -> channels), act, conv(channels -> channels), act, global average
// pool, dense(channels -> dense_units), act, dense(dense_units -> classes).
Network TinyConvNet(int height, int width, int channels, int dense_units,
                    Activation activation, int classes);

// Softmax cross-entropy of one example. Accumulates the parameter gradient
// into `grad` when it is non-empty.
double SoftmaxCrossEntropy(const Network& net, std::span<const double> input,
                           int label, Workspace& ws,
                           std::span<double> grad = {});

// Binary cross-entropy of sigmoid(output[0]) against `target` in {0, 1}.
double SigmoidCrossEntropy(const Network& net, std::span<const double> input,
                           double target, Workspace& ws,
                           std::span<double> grad = {});

}  // namespace miaug::nn

#endif  // MIAUG_NN_NETWORK_H_
