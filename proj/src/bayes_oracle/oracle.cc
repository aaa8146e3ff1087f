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

#include "miaug/bayes_oracle/oracle.h"

#include <cmath>
#include <limits>

#include "absl/strings/str_cat.h"
#include "miaug/core/numeric.h"
#include "miaug/core/status_macros.h"

namespace miaug {
namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

double SafeLog(double x) { return x > 0.0 ? std::log(x) : kNegInf; }

double LogAdd(double a, double b) {
  if (a == kNegInf) return b;
  if (b == kNegInf) return a;
  const double hi = std::max(a, b);
  return hi + std::log1p(std::exp(std::min(a, b) - hi));
}

absl::Status CheckQuery(const DiscreteWorld& world, int observed_index) {
  MIAUG_RETURN_IF_ERROR(world.Validate());
  if (observed_index < 0 || observed_index >= world.grid_size()) {
    return absl::OutOfRangeError(absl::StrCat(
        "observed grid index ", observed_index, " outside [0, ",
        world.grid_size(), ")"));
  }
  return absl::OkStatus();
}

// Log prior of the configuration of samples 1..n-1 (the audited sample
// excluded). `rest` is a full config whose bit 0 is ignored.
double LogRestPrior(const DiscreteWorld& world, MembershipConfig rest) {
  double lp = 0.0;
  for (int i = 1; i < world.num_samples(); ++i) {
    lp += SafeLog((rest >> i) & 1u ? world.q() : 1.0 - world.q());
  }
  return lp;
}

// Energy of grid point g under a configuration, in units of gamma.
double Energy(const DiscreteWorld& world, MembershipConfig config, int g) {
  double e = 0.0;
  for (int i = 0; i < world.num_samples(); ++i) {
    if ((config >> i) & 1u) e += world.SetLoss(g, i);
  }
  return e / world.gamma();
}

}  // namespace

double ConfigPrior(const DiscreteWorld& world, MembershipConfig config) {
  double p = 1.0;
  for (int i = 0; i < world.num_samples(); ++i) {
    p *= (config >> i) & 1u ? world.q() : 1.0 - world.q();
  }
  return p;
}

std::vector<double> LogPosterior(const DiscreteWorld& world,
                                 MembershipConfig config) {
  std::vector<double> lp(static_cast<std::size_t>(world.grid_size()));
  for (int g = 0; g < world.grid_size(); ++g) lp[g] = -Energy(world, config, g);
  const double log_z = LogSumExp(lp);
  for (double& v : lp) v -= log_z;
  return lp;
}

absl::StatusOr<std::vector<double>> Posterior(const DiscreteWorld& world,
                                              MembershipConfig config) {
  MIAUG_RETURN_IF_ERROR(world.Validate());
  if (world.num_samples() < 32 && (config >> world.num_samples()) != 0) {
    return absl::InvalidArgumentError("configuration names unknown samples");
  }
  std::vector<double> p = LogPosterior(world, config);
  for (double& v : p) v = std::exp(v);
  return p;
}

absl::StatusOr<double> DirectPosteriorMi(const DiscreteWorld& world,
                                         int observed_index) {
  MIAUG_RETURN_IF_ERROR(CheckQuery(world, observed_index));
  const MembershipConfig count = MembershipConfig{1} << world.num_samples();
  double log_member = kNegInf;
  double log_all = kNegInf;
  for (MembershipConfig config = 0; config < count; ++config) {
    const double log_prior = SafeLog(ConfigPrior(world, config));
    if (log_prior == kNegInf) continue;
    const double joint =
        log_prior + LogPosterior(world, config)[observed_index];
    log_all = LogAdd(log_all, joint);
    if (config & 1u) log_member = LogAdd(log_member, joint);
  }
  if (log_member == kNegInf) return 0.0;
  return std::exp(log_member - log_all);
}

absl::StatusOr<double> OptimalMiTheorem1(const DiscreteWorld& world,
                                         int observed_index) {
  MIAUG_RETURN_IF_ERROR(CheckQuery(world, observed_index));
  const double q = world.q();
  if (q == 0.0 || q == 1.0) return q;
  const double c_q = Logit(q);
  const MembershipConfig count = MembershipConfig{1} << world.num_samples();
  std::vector<double> log_weights;
  std::vector<double> values;
  for (MembershipConfig rest = 0; rest < count; rest += 2) {
    const double log_alpha = LogPosterior(world, rest | 1u)[observed_index];
    const double log_beta = LogPosterior(world, rest)[observed_index];
    // P(K | theta) is proportional to P(K) (q alpha + (1 - q) beta).
    log_weights.push_back(LogRestPrior(world, rest) +
                          LogAdd(std::log(q) + log_alpha,
                                 std::log1p(-q) + log_beta));
    values.push_back(Sigmoid(log_alpha - log_beta + c_q));
  }
  const double log_norm = LogSumExp(log_weights);
  double result = 0.0;
  for (std::size_t t = 0; t < values.size(); ++t) {
    result += std::exp(log_weights[t] - log_norm) * values[t];
  }
  return result;
}

absl::StatusOr<double> OptimalMiTheorem2(const DiscreteWorld& world,
                                         int observed_index) {
  MIAUG_RETURN_IF_ERROR(CheckQuery(world, observed_index));
  const double q = world.q();
  if (q == 0.0 || q == 1.0) return q;
  const double c_q = Logit(q);
  const double energy_1 = world.SetLoss(observed_index, 0) / world.gamma();
  const MembershipConfig count = MembershipConfig{1} << world.num_samples();
  std::vector<double> terms(static_cast<std::size_t>(world.grid_size()));
  std::vector<double> log_weights;
  std::vector<double> values;
  for (MembershipConfig rest = 0; rest < count; rest += 2) {
    const std::vector<double> log_p_k = LogPosterior(world, rest);
    for (int z = 0; z < world.grid_size(); ++z) {
      terms[z] = -world.SetLoss(z, 0) / world.gamma() + log_p_k[z];
    }
    const double tau = -LogSumExp(terms);
    const double shift = tau - energy_1;
    // p(theta | T(d_1), K) = p_K(theta) (q e^{shift} + 1 - q).
    log_weights.push_back(LogRestPrior(world, rest) + log_p_k[observed_index] +
                          LogAdd(std::log(q) + shift, std::log1p(-q)));
    values.push_back(Sigmoid(shift + c_q));
  }
  const double log_norm = LogSumExp(log_weights);
  double result = 0.0;
  for (std::size_t t = 0; t < values.size(); ++t) {
    result += std::exp(log_weights[t] - log_norm) * values[t];
  }
  return result;
}

}  // namespace miaug
