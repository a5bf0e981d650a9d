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

// Targets, data generators and summary statistics for the regression and
// critic experiments.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "gsnet/distribution.hpp"
#include "gsnet/pwl1d.hpp"
#include "gsnet/training.hpp"

namespace gsnet {

/// Continuous function with `pieces` equal-width linear pieces on [lo, hi],
/// slopes uniform in [-1, 1] rescaled so the steepest has magnitude
/// `max_slope`, values centred to zero mean at the breakpoints.
Pwl1d random_pwl_target(std::size_t pieces, double lo, double hi, std::uint64_t seed, double max_slope = 1.0);

/// 32 pieces on [-8, 8].
Pwl1d pwl32_target();
/// 20 pieces on [-5, 5], steepest slope 0.5.
Pwl1d pwl20_target();

/// sin(15 x) / 15.
double sinus_target(double x);

/// n inputs uniform on [0, 1] labelled by sinus_target plus N(0, sigma²) noise.
Dataset sinus_dataset(std::size_t n, double sigma, std::uint64_t seed);

struct GaussianMixture {
  std::vector<Vector> means;
  std::vector<double> sigmas;  // isotropic standard deviations
};

/// Means uniform in [-4, 4]^dim, sigmas uniform in [0.3, 1].
GaussianMixture random_mixture(std::size_t components, std::size_t dim, std::mt19937_64& rng);

/// Equal component weights; returns a uniform point cloud of n samples.
DiscreteDistribution sample_mixture(const GaussianMixture& mix, std::size_t n, std::mt19937_64& rng);

/// neural ≈ a w² + b w + c, fitted by least squares on residuals relative
/// to w. `lre` is the root mean squared relative residual and `envelope`
/// the largest one.
struct ParabolicFit {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
  double lre = 0.0;
  double envelope = 0.0;
};
ParabolicFit parabolic_fit(const std::vector<double>& w1, const std::vector<double>& neural);

/// Regression set-ups: "pwl32" (fresh uniform batches on [-8, 8]),
/// "sinus" and "sinus-noise" (fixed n = 100 sample on [0, 1], noise
/// sigma 0.05 for the latter), "pwl-gs" (pwl20_target on [-5, 5]).
/// The returned config carries the experiment's step budget and schedule.
struct RegressionExperiment {
  std::string name;
  RegressionProblem problem;
  TrainConfig config;
};
RegressionExperiment regression_experiment(const std::string& name, std::uint64_t seed);
std::vector<std::string> regression_experiment_names();

struct WassersteinRow {
  std::size_t pair_id = 0;
  double w1 = 0.0;
  double neural = 0.0;
  double relative_error = 0.0;  // (w1 - neural) / w1, 0 when w1 = 0
  bool diverged = false;
  bool control = false;  // identical clouds
};

struct WassersteinRun {
  std::vector<WassersteinRow> rows;
  ParabolicFit fit;  // over the non-control, non-diverged rows
};

/// `pairs` random mixture pairs plus one identical-cloud control row.
/// Pair i is drawn from a generator seeded by (seed, i) and trained with
/// its own seed, so rows do not depend on each other.
struct WassersteinOptions {
  std::size_t pairs = 40;
  std::size_t components = 4;
  std::size_t samples = 256;
  std::size_t depth = 2;
  std::size_t width = 20;
  std::size_t k = 2;
  std::uint64_t seed = 0;
  std::size_t steps = 1000;
  bool control = true;
};
WassersteinRun run_wasserstein(const WassersteinOptions& opt);

/// Seed for stream `index` of a run seeded with `seed` (splitmix64).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

/// 64-bit FNV-1a.
std::uint64_t fnv1a(const std::string& text);

}  // namespace gsnet
