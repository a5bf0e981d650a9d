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

#include "gsnet/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <Eigen/Dense>

#include "gsnet/error.hpp"
#include "gsnet/oracle.hpp"

namespace gsnet {

Pwl1d random_pwl_target(std::size_t pieces, double lo, double hi, std::uint64_t seed, double max_slope) {
  if (pieces == 0) throw DomainError("need at least one piece");
  if (!(lo < hi)) throw DomainError("need lo < hi");
  if (!(max_slope >= 0 && max_slope <= 1)) throw DomainError("max_slope must lie in [0, 1]");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> us(-1.0, 1.0);
  std::vector<double> slopes(pieces);
  for (double& s : slopes) s = us(rng);
  double steepest = 0.0;
  for (double s : slopes) steepest = std::max(steepest, std::abs(s));
  for (double& s : slopes) s *= max_slope / steepest;
  std::vector<double> x(pieces + 1), y(pieces + 1);
  const double h = (hi - lo) / static_cast<double>(pieces);
  x[0] = lo;
  y[0] = 0.0;
  for (std::size_t i = 1; i <= pieces; ++i) {
    x[i] = i == pieces ? hi : lo + h * static_cast<double>(i);
    y[i] = y[i - 1] + slopes[i - 1] * (x[i] - x[i - 1]);
  }
  double mean = 0.0;
  for (double v : y) mean += v;
  mean /= static_cast<double>(y.size());
  for (double& v : y) v -= mean;
  return Pwl1d(std::move(x), std::move(y), 0.0, 0.0);
}

Pwl1d pwl32_target() { return random_pwl_target(32, -8.0, 8.0, 32); }

Pwl1d pwl20_target() { return random_pwl_target(20, -5.0, 5.0, 20, 0.5); }

double sinus_target(double x) { return std::sin(15.0 * x) / 15.0; }

Dataset sinus_dataset(std::size_t n, double sigma, std::uint64_t seed) {
  if (n == 0) throw DomainError("dataset size must be positive");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> ux(0.0, 1.0);
  std::normal_distribution<double> noise(0.0, 1.0);
  Dataset d;
  for (std::size_t i = 0; i < n; ++i) {
    const double x = ux(rng);
    double y = sinus_target(x);
    if (sigma > 0) y += sigma * noise(rng);
    d.inputs.push_back({x});
    d.targets.push_back(y);
  }
  return d;
}

GaussianMixture random_mixture(std::size_t components, std::size_t dim, std::mt19937_64& rng) {
  if (components == 0 || dim == 0) throw DomainError("mixture needs components and dimension");
  std::uniform_real_distribution<double> um(-4.0, 4.0);
  std::uniform_real_distribution<double> us(0.3, 1.0);
  GaussianMixture g;
  for (std::size_t c = 0; c < components; ++c) {
    Vector m(dim);
    for (double& v : m) v = um(rng);
    g.means.push_back(std::move(m));
    g.sigmas.push_back(us(rng));
  }
  return g;
}

DiscreteDistribution sample_mixture(const GaussianMixture& mix, std::size_t n, std::mt19937_64& rng) {
  if (n == 0) throw DomainError("sample size must be positive");
  std::uniform_int_distribution<std::size_t> pick(0, mix.means.size() - 1);
  std::normal_distribution<double> z(0.0, 1.0);
  std::vector<Vector> pts;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t c = pick(rng);
    Vector p = mix.means[c];
    for (double& v : p) v += mix.sigmas[c] * z(rng);
    pts.push_back(std::move(p));
  }
  return DiscreteDistribution::uniform(std::move(pts));
}

ParabolicFit parabolic_fit(const std::vector<double>& w1, const std::vector<double>& neural) {
  if (w1.size() != neural.size()) throw DimensionError("parabolic_fit: lengths differ");
  if (w1.size() < 3) throw DimensionError("parabolic_fit needs at least 3 points");
  const auto n = static_cast<Eigen::Index>(w1.size());
  Eigen::MatrixXd A(n, 3);
  Eigen::VectorXd y(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    const double w = w1[static_cast<std::size_t>(i)];
    if (!(w > 0)) throw DomainError("parabolic_fit needs positive reference distances");
    A(i, 0) = w;  // rows divided by w
    A(i, 1) = 1.0;
    A(i, 2) = 1.0 / w;
    y(i) = neural[static_cast<std::size_t>(i)] / w;
  }
  const Eigen::Vector3d coef = A.colPivHouseholderQr().solve(y);
  ParabolicFit f{coef(0), coef(1), coef(2), 0.0, 0.0};
  const Eigen::VectorXd r = A * coef - y;
  f.lre = std::sqrt(r.squaredNorm() / static_cast<double>(n));
  f.envelope = r.cwiseAbs().maxCoeff();
  return f;
}

RegressionExperiment regression_experiment(const std::string& name, std::uint64_t seed) {
  RegressionExperiment e;
  e.name = name;
  e.config.seed = seed;
  e.config.lr_schedule = LrSchedule::Cosine;
  e.config.steps = 2000;
  e.config.eval_every = 100;
  if (name == "pwl32") {
    const Pwl1d f = pwl32_target();
    e.problem = RegressionProblem{[f](double x) { return f(x); }, -8.0, 8.0, std::nullopt};
    e.config.bias_init = 1.0;
  } else if (name == "pwl-gs") {
    const Pwl1d f = pwl20_target();
    e.problem = RegressionProblem{[f](double x) { return f(x); }, -5.0, 5.0, std::nullopt};
    e.config.bias_init = 1.0;
  } else if (name == "sinus" || name == "sinus-noise") {
    const double sigma = name == "sinus" ? 0.0 : 0.05;
    // the sample is fixed per experiment, the seed only drives training
    e.problem = RegressionProblem{sinus_target, 0.0, 1.0, sinus_dataset(100, sigma, 100)};
    e.config.bias_init = 0.2;
  } else {
    throw DomainError("unknown experiment '" + name + "'");
  }
  return e;
}

std::vector<std::string> regression_experiment_names() { return {"pwl32", "sinus", "sinus-noise", "pwl-gs"}; }

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

WassersteinRun run_wasserstein(const WassersteinOptions& opt) {
  if (opt.pairs == 0 && !opt.control) throw DomainError("nothing to run");
  if (opt.components == 0 || opt.samples == 0 || opt.depth == 0 || opt.width == 0 || opt.steps == 0)
    throw DomainError("wasserstein options must be positive");
  const ArchSpec arch = ArchSpec::uniform(2, opt.depth, opt.width, opt.k);
  TrainConfig cfg;
  cfg.steps = opt.steps;
  cfg.eval_every = 50;
  cfg.bias_init = 1.0;
  cfg.lr_schedule = LrSchedule::Cosine;
  WassersteinRun run;
  const std::size_t total = opt.pairs + (opt.control ? 1 : 0);
  for (std::size_t i = 0; i < total; ++i) {
    WassersteinRow row;
    row.pair_id = i;
    row.control = i == opt.pairs;
    std::mt19937_64 rng(derive_seed(opt.seed, 2 * i));
    const GaussianMixture a = random_mixture(opt.components, 2, rng);
    const DiscreteDistribution mu = sample_mixture(a, opt.samples, rng);
    const DiscreteDistribution nu =
        row.control ? mu : sample_mixture(random_mixture(opt.components, 2, rng), opt.samples, rng);
    row.w1 = wasserstein1_discrete(mu, nu);
    cfg.seed = derive_seed(opt.seed, 2 * i + 1);
    try {
      row.neural = train_critic(mu, nu, arch, cfg).neural_distance;
    } catch (const TrainingError&) {
      row.diverged = true;
      row.neural = std::numeric_limits<double>::quiet_NaN();
    }
    row.relative_error = row.w1 > 0 ? (row.w1 - row.neural) / row.w1 : 0.0;
    run.rows.push_back(row);
  }
  std::vector<double> w, n;
  for (const WassersteinRow& r : run.rows)
    if (!r.control && !r.diverged) {
      w.push_back(r.w1);
      n.push_back(r.neural);
    }
  if (w.size() >= 3) run.fit = parabolic_fit(w, n);
  return run;
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace gsnet
