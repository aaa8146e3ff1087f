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

#include "miaug/bayes_oracle/entropy.h"

#include <cmath>

#include "absl/strings/str_cat.h"
#include "miaug/core/numeric.h"
#include "miaug/core/status_macros.h"

namespace miaug {
namespace {

absl::Status CheckDistribution(const std::vector<double>& p,
                               const char* what) {
  double sum = 0.0;
  for (double v : p) {
    if (!(v >= 0.0) || !std::isfinite(v)) {
      return absl::InvalidArgumentError(
          absl::StrCat(what, " has a negative or non-finite entry"));
    }
    sum += v;
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    return absl::InvalidArgumentError(absl::StrCat(what, " does not sum to 1"));
  }
  return absl::OkStatus();
}

double NegXLogY(double x, double y) {
  return x > 0.0 ? -x * std::log(x / y) : 0.0;
}

}  // namespace

absl::StatusOr<EntropyCheck> EntropyInequalityCheck(const EntropyWorld& world) {
  const DiscreteWorld& w = world.others;
  MIAUG_RETURN_IF_ERROR(w.Validate());
  MIAUG_RETURN_IF_ERROR(CheckDistribution(world.variant_prob, "variant_prob"));
  const std::size_t num_sets = world.set_losses.size();
  const std::size_t grid = static_cast<std::size_t>(w.grid_size());
  if (num_sets == 0) return absl::InvalidArgumentError("no augmented sets");
  if (world.set_given_variant.size() != world.variant_prob.size()) {
    return absl::InvalidArgumentError("one set distribution per variant");
  }
  for (const auto& row : world.set_given_variant) {
    if (row.size() != num_sets) {
      return absl::InvalidArgumentError("set distribution has the wrong size");
    }
    MIAUG_RETURN_IF_ERROR(CheckDistribution(row, "set_given_variant row"));
  }
  for (const auto& row : world.set_losses) {
    if (row.size() != grid) {
      return absl::InvalidArgumentError("set loss row has the wrong size");
    }
  }

  const double q = w.q();
  const double gamma = w.gamma();
  const int n = w.num_samples();
  // joint[a][m][g] = sum_K P(K) p(theta_g | m_1 = m, K, a)
  std::vector<std::vector<std::vector<double>>> joint(
      num_sets, std::vector<std::vector<double>>(2, std::vector<double>(grid)));
  std::vector<double> log_post(grid);
  for (std::uint32_t rest = 0; rest < (1u << n); rest += 2) {
    double prior = 1.0;
    for (int i = 1; i < n; ++i) prior *= (rest >> i) & 1u ? q : 1.0 - q;
    if (prior == 0.0) continue;
    for (std::size_t a = 0; a < num_sets; ++a) {
      for (int m = 0; m < 2; ++m) {
        for (std::size_t g = 0; g < grid; ++g) {
          double e = m ? world.set_losses[a][g] : 0.0;
          for (int i = 1; i < n; ++i) {
            if ((rest >> i) & 1u) e += w.SetLoss(static_cast<int>(g), i);
          }
          log_post[g] = -e / gamma;
        }
        const double log_z = LogSumExp(log_post);
        for (std::size_t g = 0; g < grid; ++g) {
          joint[a][m][g] += prior * std::exp(log_post[g] - log_z);
        }
      }
    }
  }

  const double prior_m[2] = {1.0 - q, q};
  EntropyCheck out;
  for (std::size_t a = 0; a < num_sets; ++a) {
    double p_a = 0.0;
    for (std::size_t v = 0; v < world.variant_prob.size(); ++v) {
      p_a += world.variant_prob[v] * world.set_given_variant[v][a];
    }
    for (std::size_t g = 0; g < grid; ++g) {
      const double p0 = p_a * prior_m[0] * joint[a][0][g];
      const double p1 = p_a * prior_m[1] * joint[a][1][g];
      out.h_given_set += NegXLogY(p0, p0 + p1) + NegXLogY(p1, p0 + p1);
    }
  }
  for (std::size_t v = 0; v < world.variant_prob.size(); ++v) {
    for (std::size_t g = 0; g < grid; ++g) {
      double p[2] = {0.0, 0.0};
      for (int m = 0; m < 2; ++m) {
        for (std::size_t a = 0; a < num_sets; ++a) {
          p[m] += world.set_given_variant[v][a] * joint[a][m][g];
        }
        p[m] *= world.variant_prob[v] * prior_m[m];
      }
      out.h_given_variant += NegXLogY(p[0], p[0] + p[1]) +
                             NegXLogY(p[1], p[0] + p[1]);
    }
  }
  return out;
}

EntropyWorld RandomEntropyWorld(const EntropyWorldOptions& options,
                                RngStream& rng) {
  DiscreteWorld others = RandomWorld(options.base, rng);
  const int num_variants = options.num_variants;
  const int num_sets = options.deterministic ? num_variants : options.num_sets;
  auto random_simplex = [&rng](int size) {
    std::vector<double> p(static_cast<std::size_t>(size));
    double sum = 0.0;
    for (double& v : p) sum += (v = 0.05 + rng.Uniform());
    for (double& v : p) v /= sum;
    return p;
  };
  EntropyWorld world{std::move(others), random_simplex(num_variants), {}, {}};
  for (int v = 0; v < num_variants; ++v) {
    if (options.deterministic) {
      std::vector<double> row(static_cast<std::size_t>(num_sets), 0.0);
      row[static_cast<std::size_t>(v)] = 1.0;
      world.set_given_variant.push_back(std::move(row));
    } else {
      world.set_given_variant.push_back(random_simplex(num_sets));
    }
  }
  for (int a = 0; a < num_sets; ++a) {
    std::vector<double> row(static_cast<std::size_t>(world.others.grid_size()));
    for (double& l : row) {
      l = 0.0;
      for (int j = 0; j < options.base.k; ++j) {
        l += rng.Uniform(0.0, options.base.max_loss);
      }
    }
    world.set_losses.push_back(std::move(row));
  }
  return world;
}

}  // namespace miaug
