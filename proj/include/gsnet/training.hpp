/*
 * Copyright 2026 The gsnet Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "gsnet/constraints.hpp"
#include "gsnet/distribution.hpp"
#include "gsnet/network.hpp"

namespace gsnet {

enum class Enforcement { RowProjection, Bjorck, None };

/// Constant keeps the learning rate fixed; Cosine anneals it from
/// `learning_rate` to `learning_rate * lr_final_fraction` over the run.
enum class LrSchedule { Constant, Cosine };

struct ArchSpec {
  std::size_t input_dim = 1;
  std::vector<std::size_t> hidden_widths;
  std::size_t grouping_size = 2;
  Activation activation = Activation::GroupSort;

  /// `depth` layers with constant hidden width.
  static ArchSpec uniform(std::size_t input_dim, std::size_t depth, std::size_t width, std::size_t k,
                          Activation activation = Activation::GroupSort);
  std::size_t depth() const noexcept { return hidden_widths.size() + 1; }
  void validate() const;
};

struct TrainConfig {
  std::size_t batch_size = 256;
  double learning_rate = 0.0025;
  double adam_beta1 = 0.5;
  double adam_beta2 = 0.5;
  double adam_epsilon = 1e-8;
  LrSchedule lr_schedule = LrSchedule::Constant;
  double lr_final_fraction = 0.05;
  std::size_t steps = 2000;
  std::uint64_t seed = 0;
  Enforcement enforcement = Enforcement::Bjorck;
  std::size_t enforce_every = 1;
  BjorckConfig bjorck{};
  /// First-layer biases start uniform in [-bias_init, bias_init], later
  /// ones in [-hidden_bias_init, hidden_bias_init].
  double bias_init = 0.5;
  double hidden_bias_init = 0.05;
  /// Metrics are recorded every `eval_every` steps and after the last step.
  std::size_t eval_every = 100;
  std::size_t eval_grid = 2001;
  /// Exact region enumeration at checkpoints (1-D regression only).
  bool track_regions = true;

  void validate() const;
};

struct Dataset {
  std::vector<Vector> inputs;
  Vector targets;

  std::size_t size() const noexcept { return targets.size(); }
  std::size_t dim() const { return inputs.empty() ? 0 : inputs.front().size(); }
  void validate() const;
};

/// Per-layer gradients of a scalar objective, shaped like the layers.
struct Gradients {
  std::vector<Matrix> weights;
  std::vector<Vector> biases;
  double loss = 0.0;
};

/// Mean squared error and its gradient. At sort ties the stable order
/// defines the subgradient.
Gradients grad_mse(const GroupSortNetwork& net, const Dataset& batch);
double mse(const GroupSortNetwork& net, const Dataset& batch);

/// Gaussian weights scaled by 1/sqrt(fan-in), uniform biases, then the
/// requested enforcement applied once.
GroupSortNetwork init_network(const ArchSpec& arch, std::uint64_t seed, double bias_init = 0.5,
                              double hidden_bias_init = 0.05, Enforcement enforcement = Enforcement::None,
                              const BjorckConfig& bjorck = {});

/// Learning rate used at 1-based `step`.
double learning_rate_at(const TrainConfig& cfg, std::size_t step);

struct MetricsRecord {
  std::size_t step = 0;
  double loss = 0.0;
  double uniform_error = std::numeric_limits<double>::quiet_NaN();
  double lipschitz_estimate = std::numeric_limits<double>::quiet_NaN();
  std::size_t region_count = 0;
};

/// Without `data`, every step draws a fresh uniform batch from [lo, hi]
/// labelled by `target`. With `data`, minibatches come from the fixed set.
/// Uniform error is always measured against `target`.
struct RegressionProblem {
  std::function<double(double)> target;
  double lo = 0.0;
  double hi = 1.0;
  std::optional<Dataset> data;
};

struct RegressionResult {
  GroupSortNetwork net;
  std::vector<MetricsRecord> history;
};

/// Adam on the squared error with the configured enforcement after every
/// `enforce_every` steps. Throws TrainingError when the loss is not finite.
RegressionResult train_regression(const RegressionProblem& problem, const ArchSpec& arch, const TrainConfig& cfg);

struct CriticResult {
  GroupSortNetwork net;
  /// Best full-cloud value of mean_mu(net) - mean_nu(net) seen; never negative.
  double neural_distance = 0.0;
  std::vector<MetricsRecord> history;  // loss = minus the objective
};

/// Gradient ascent on mean_mu(f) - mean_nu(f). A negative best critic is
/// negated, which keeps it in the constrained class.
CriticResult train_critic(const DiscreteDistribution& mu, const DiscreteDistribution& nu, const ArchSpec& arch,
                          const TrainConfig& cfg);

/// mean_mu(net) - mean_nu(net) with the distributions' weights.
double critic_objective(const GroupSortNetwork& net, const DiscreteDistribution& mu, const DiscreteDistribution& nu);

/// Per-layer spectral norms (power iteration).
std::vector<double> spectral_norms(const GroupSortNetwork& net);

/// CSV: optional `# config:` line, header `step,loss,uniform_error,lipschitz_estimate,region_count`.
std::string to_csv(const std::vector<MetricsRecord>& history, const std::string& config_line = "");

std::string to_string(Enforcement e);
Enforcement parse_enforcement(const std::string& name);

}  // namespace gsnet
