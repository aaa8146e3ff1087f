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

#include "miaug/nn/network.h"

#include <cmath>

#include "miaug/core/loss.h"

namespace miaug::nn {
namespace {

template <class... Ts>
struct Overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overloaded(Ts...) -> Overloaded<Ts...>;

std::size_t ParamCount(const Layer& layer) {
  return std::visit(
      Overloaded{
          [](const Dense& d) {
            return static_cast<std::size_t>(d.outputs) * (d.inputs + 1);
          },
          [](const Elementwise&) { return std::size_t{0}; },
          [](const Conv3x3& c) {
            return static_cast<std::size_t>(c.out_channels) *
                   (c.in_channels * 9 + 1);
          },
          [](const GlobalAvgPool&) { return std::size_t{0}; },
      },
      layer);
}

int InputSize(const Layer& layer) {
  return std::visit(
      Overloaded{
          [](const Dense& d) { return d.inputs; },
          [](const Elementwise& e) { return e.size; },
          [](const Conv3x3& c) { return c.in_channels * c.height * c.width; },
          [](const GlobalAvgPool& p) {
            return p.channels * p.height * p.width;
          },
      },
      layer);
}

int OutputSize(const Layer& layer) {
  return std::visit(
      Overloaded{
          [](const Dense& d) { return d.outputs; },
          [](const Elementwise& e) { return e.size; },
          [](const Conv3x3& c) { return c.out_channels * c.height * c.width; },
          [](const GlobalAvgPool& p) { return p.channels; },
      },
      layer);
}

void ForwardLayer(const Layer& layer, const double* p,
                  std::span<const double> in, std::vector<double>& out) {
  out.assign(static_cast<std::size_t>(OutputSize(layer)), 0.0);
  std::visit(
      Overloaded{
          [&](const Dense& d) {
            const double* bias = p + static_cast<std::ptrdiff_t>(d.outputs) *
                                         d.inputs;
            for (int o = 0; o < d.outputs; ++o) {
              const double* w = p + static_cast<std::ptrdiff_t>(o) * d.inputs;
              double sum = bias[o];
              for (int i = 0; i < d.inputs; ++i) sum += w[i] * in[i];
              out[o] = sum;
            }
          },
          [&](const Elementwise& e) {
            if (e.activation == Activation::kTanh) {
              for (int i = 0; i < e.size; ++i) out[i] = std::tanh(in[i]);
            } else {
              for (int i = 0; i < e.size; ++i) out[i] = in[i] > 0 ? in[i] : 0;
            }
          },
          [&](const Conv3x3& c) {
            const int hw = c.height * c.width;
            const double* bias =
                p + static_cast<std::ptrdiff_t>(c.out_channels) *
                        c.in_channels * 9;
            for (int oc = 0; oc < c.out_channels; ++oc) {
              double* dst = out.data() + static_cast<std::ptrdiff_t>(oc) * hw;
              for (int i = 0; i < hw; ++i) dst[i] = bias[oc];
              for (int ic = 0; ic < c.in_channels; ++ic) {
                const double* kernel = p + (static_cast<std::ptrdiff_t>(oc) *
                                                c.in_channels +
                                            ic) * 9;
                const double* src = in.data() +
                                    static_cast<std::ptrdiff_t>(ic) * hw;
                for (int r = 0; r < c.height; ++r) {
                  for (int col = 0; col < c.width; ++col) {
                    double sum = 0.0;
                    for (int kr = 0; kr < 3; ++kr) {
                      const int sr = r + kr - 1;
                      if (sr < 0 || sr >= c.height) continue;
                      for (int kc = 0; kc < 3; ++kc) {
                        const int sc = col + kc - 1;
                        if (sc < 0 || sc >= c.width) continue;
                        sum += kernel[kr * 3 + kc] * src[sr * c.width + sc];
                      }
                    }
                    dst[r * c.width + col] += sum;
                  }
                }
              }
            }
          },
          [&](const GlobalAvgPool& g) {
            const int hw = g.height * g.width;
            for (int ch = 0; ch < g.channels; ++ch) {
              double sum = 0.0;
              for (int i = 0; i < hw; ++i) sum += in[ch * hw + i];
              out[ch] = sum / hw;
            }
          },
      },
      layer);
}

// Given dL/d(out), accumulates dL/d(params) into g and writes dL/d(in).
void BackwardLayer(const Layer& layer, const double* p, double* g,
                   std::span<const double> in, std::span<const double> out,
                   std::span<const double> grad_out,
                   std::vector<double>& grad_in) {
  grad_in.assign(static_cast<std::size_t>(InputSize(layer)), 0.0);
  std::visit(
      Overloaded{
          [&](const Dense& d) {
            double* gbias = g + static_cast<std::ptrdiff_t>(d.outputs) *
                                    d.inputs;
            for (int o = 0; o < d.outputs; ++o) {
              const double go = grad_out[o];
              if (go == 0.0) continue;
              const double* w = p + static_cast<std::ptrdiff_t>(o) * d.inputs;
              double* gw = g + static_cast<std::ptrdiff_t>(o) * d.inputs;
              for (int i = 0; i < d.inputs; ++i) {
                gw[i] += go * in[i];
                grad_in[i] += go * w[i];
              }
              gbias[o] += go;
            }
          },
          [&](const Elementwise& e) {
            if (e.activation == Activation::kTanh) {
              for (int i = 0; i < e.size; ++i) {
                grad_in[i] = grad_out[i] * (1.0 - out[i] * out[i]);
              }
            } else {
              for (int i = 0; i < e.size; ++i) {
                grad_in[i] = in[i] > 0 ? grad_out[i] : 0.0;
              }
            }
          },
          [&](const Conv3x3& c) {
            const int hw = c.height * c.width;
            double* gbias = g + static_cast<std::ptrdiff_t>(c.out_channels) *
                                    c.in_channels * 9;
            for (int oc = 0; oc < c.out_channels; ++oc) {
              const double* go = grad_out.data() +
                                 static_cast<std::ptrdiff_t>(oc) * hw;
              for (int i = 0; i < hw; ++i) gbias[oc] += go[i];
              for (int ic = 0; ic < c.in_channels; ++ic) {
                const std::ptrdiff_t k =
                    (static_cast<std::ptrdiff_t>(oc) * c.in_channels + ic) * 9;
                const double* kernel = p + k;
                double* gkernel = g + k;
                const double* src = in.data() +
                                    static_cast<std::ptrdiff_t>(ic) * hw;
                double* gsrc = grad_in.data() +
                               static_cast<std::ptrdiff_t>(ic) * hw;
                for (int r = 0; r < c.height; ++r) {
                  for (int col = 0; col < c.width; ++col) {
                    const double d = go[r * c.width + col];
                    if (d == 0.0) continue;
                    for (int kr = 0; kr < 3; ++kr) {
                      const int sr = r + kr - 1;
                      if (sr < 0 || sr >= c.height) continue;
                      for (int kc = 0; kc < 3; ++kc) {
                        const int sc = col + kc - 1;
                        if (sc < 0 || sc >= c.width) continue;
                        gkernel[kr * 3 + kc] += d * src[sr * c.width + sc];
                        gsrc[sr * c.width + sc] += d * kernel[kr * 3 + kc];
                      }
                    }
                  }
                }
              }
            }
          },
          [&](const GlobalAvgPool& gp) {
            const int hw = gp.height * gp.width;
            for (int ch = 0; ch < gp.channels; ++ch) {
              const double share = grad_out[ch] / hw;
              for (int i = 0; i < hw; ++i) grad_in[ch * hw + i] = share;
            }
          },
      },
      layer);
}

}  // namespace

Network::Network(std::vector<Layer> layers) : layers_(std::move(layers)) {
  std::size_t total = 0;
  for (const Layer& layer : layers_) {
    offsets_.push_back(total);
    total += ParamCount(layer);
  }
  params_.assign(total, 0.0);
}

int Network::input_size() const {
  return layers_.empty() ? 0 : InputSize(layers_.front());
}

int Network::output_size() const {
  return layers_.empty() ? 0 : OutputSize(layers_.back());
}

void Network::InitGlorotUniform(RngStream& rng) {
  for (std::size_t l = 0; l < layers_.size(); ++l) {
    double* p = params_.data() + offsets_[l];
    std::visit(
        Overloaded{
            [&](const Dense& d) {
              const double a = std::sqrt(6.0 / (d.inputs + d.outputs));
              const int n = d.inputs * d.outputs;
              for (int i = 0; i < n; ++i) p[i] = rng.Uniform(-a, a);
              for (int o = 0; o < d.outputs; ++o) p[n + o] = 0.0;
            },
            [&](const Conv3x3& c) {
              const double a =
                  std::sqrt(6.0 / (9.0 * (c.in_channels + c.out_channels)));
              const int n = c.out_channels * c.in_channels * 9;
              for (int i = 0; i < n; ++i) p[i] = rng.Uniform(-a, a);
              for (int o = 0; o < c.out_channels; ++o) p[n + o] = 0.0;
            },
            [](const auto&) {},
        },
        layers_[l]);
  }
}

void Network::Forward(std::span<const double> input, Workspace& ws) const {
  ws.activations.resize(layers_.size() + 1);
  ws.activations[0].assign(input.begin(), input.end());
  for (std::size_t l = 0; l < layers_.size(); ++l) {
    ForwardLayer(layers_[l], params_.data() + offsets_[l], ws.activations[l],
                 ws.activations[l + 1]);
  }
}

void Network::Backward(Workspace& ws, std::span<const double> grad_output,
                       std::span<double> grad_params) const {
  ws.grad_a.assign(grad_output.begin(), grad_output.end());
  for (std::size_t l = layers_.size(); l-- > 0;) {
    BackwardLayer(layers_[l], params_.data() + offsets_[l],
                  grad_params.data() + offsets_[l], ws.activations[l],
                  ws.activations[l + 1], ws.grad_a, ws.grad_b);
    std::swap(ws.grad_a, ws.grad_b);
  }
}

Network SoftmaxRegression(int inputs, int classes) {
  return Network({Dense{inputs, classes}});
}

Network Mlp(int inputs, const std::vector<int>& hidden, Activation activation,
            int classes) {
  std::vector<Layer> layers;
  int width = inputs;
  for (int h : hidden) {
    layers.push_back(Dense{width, h});
    layers.push_back(Elementwise{activation, h});
    width = h;
  }
  layers.push_back(Dense{width, classes});
  return Network(std::move(layers));
}

Network TinyConvNet(int height, int width, int channels, int dense_units,
                    Activation activation, int classes) {
  const int maps = channels * height * width;
  return Network({
      Conv3x3{1, channels, height, width},
      Elementwise{activation, maps},
      Conv3x3{channels, channels, height, width},
      Elementwise{activation, maps},
      GlobalAvgPool{channels, height, width},
      Dense{channels, dense_units},
      Elementwise{activation, dense_units},
      Dense{dense_units, classes},
  });
}

double SoftmaxCrossEntropy(const Network& net, std::span<const double> input,
                           int label, Workspace& ws, std::span<double> grad) {
  net.Forward(input, ws);
  const std::vector<double>& logits = ws.activations.back();
  if (grad.empty()) return CrossEntropyUnchecked(logits, label);
  std::vector<double> probs(logits.size());
  const double loss = CrossEntropyUnchecked(logits, label, probs);
  probs[static_cast<std::size_t>(label)] -= 1.0;
  net.Backward(ws, probs, grad);
  return loss;
}

double SigmoidCrossEntropy(const Network& net, std::span<const double> input,
                           double target, Workspace& ws,
                           std::span<double> grad) {
  net.Forward(input, ws);
  const double z = ws.activations.back()[0];
  // log(1 + exp(-|z|)) + max(z, 0) - target * z
  const double loss =
      std::log1p(std::exp(-std::abs(z))) + std::max(z, 0.0) - target * z;
  if (!grad.empty()) {
    const double p = z >= 0 ? 1.0 / (1.0 + std::exp(-z))
                            : std::exp(z) / (1.0 + std::exp(z));
    const double dz = p - target;
    net.Backward(ws, std::span<const double>(&dz, 1), grad);
  }
  return loss;
}

}  // namespace miaug::nn
