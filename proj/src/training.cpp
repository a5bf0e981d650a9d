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

#include "gsnet/training.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

#include <Eigen/Dense>

#include "gsnet/analysis.hpp"
#include "gsnet/error.hpp"

namespace gsnet {
namespace {

using Mat = Eigen::MatrixXd;  // one column per sample
using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<const RowMajor> view(const Matrix& m) {
  return {m.entries().data(), static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols())};
}
Eigen::Map<const Eigen::VectorXd> view(const Vector& v) { return {v.data(), static_cast<Eigen::Index>(v.size())}; }

struct Tape {
  std::vector<Mat> acts;                        // acts[l] feeds layer l
  std::vector<std::vector<std::uint32_t>> perm;  // perm[l - 1] produced acts[l]
  Eigen::RowVectorXd out;
};

// Stable descending sort of every group in every column; perm receives the
// source row of each slot.
void sort_groups(Mat& z, std::size_t k, std::vector<std::uint32_t>& perm) {
  const std::size_t rows = static_cast<std::size_t>(z.rows());
  const std::size_t cols = static_cast<std::size_t>(z.cols());
  perm.resize(rows * cols);
  for (std::size_t j = 0; j < cols; ++j) {
    double* c = z.col(static_cast<Eigen::Index>(j)).data();
    std::uint32_t* p = perm.data() + j * rows;
    for (std::size_t i = 0; i < rows; ++i) p[i] = static_cast<std::uint32_t>(i);
    for (std::size_t g = 0; g < rows; g += k) {
      if (k == 2) {
        if (c[g] < c[g + 1]) {
          std::swap(c[g], c[g + 1]);
          std::swap(p[g], p[g + 1]);
        }
        continue;
      }
      for (std::size_t i = 1; i < k; ++i) {
        const double v = c[g + i];
        const std::uint32_t pi = p[g + i];
        std::size_t m = i;
        while (m > 0 && c[g + m - 1] < v) {
          c[g + m] = c[g + m - 1];
          p[g + m] = p[g + m - 1];
          --m;
        }
        c[g + m] = v;
        p[g + m] = pi;
      }
    }
  }
}

void forward_tape(const std::vector<GroupSortLayer>& layers, Activation act, std::size_t k, Mat x, Tape& t) {
  const std::size_t q = layers.size();
  t.acts.resize(q);
  t.perm.resize(q > 0 ? q - 1 : 0);
  t.acts[0] = std::move(x);
  for (std::size_t l = 0; l + 1 < q; ++l) {
    Mat z = view(layers[l].weight) * t.acts[l];
    z.colwise() += view(layers[l].bias);
    if (act == Activation::GroupSort) {
      sort_groups(z, k, t.perm[l]);
    } else {
      z = z.cwiseMax(0.0);
    }
    t.acts[l + 1] = std::move(z);
  }
  t.out = view(layers[q - 1].weight) * t.acts[q - 1];
  t.out.array() += layers[q - 1].bias[0];
}

// Gradients for an objective whose derivative w.r.t. the outputs is g.
Gradients backward(const std::vector<GroupSortLayer>& layers, Activation act, const Tape& t,
                   const Eigen::RowVectorXd& g) {
  const std::size_t q = layers.size();
  Gradients out;
  out.weights.resize(q);
  out.biases.resize(q);
  Mat dz = g;
  for (std::size_t l = q; l-- > 0;) {
    const Matrix& w = layers[l].weight;
    out.weights[l] = Matrix(w.rows(), w.cols());
    Eigen::Map<RowMajor>(out.weights[l].entries().data(), static_cast<Eigen::Index>(w.rows()),
                         static_cast<Eigen::Index>(w.cols())) = dz * t.acts[l].transpose();
    out.biases[l].resize(w.rows());
    Eigen::Map<Eigen::VectorXd>(out.biases[l].data(), static_cast<Eigen::Index>(w.rows())) = dz.rowwise().sum();
    if (l == 0) break;
    Mat da = view(w).transpose() * dz;
    if (act == Activation::GroupSort) {
      Mat prev(da.rows(), da.cols());
      const std::size_t rows = static_cast<std::size_t>(da.rows());
      const auto& perm = t.perm[l - 1];
      for (Eigen::Index j = 0; j < da.cols(); ++j) {
        const std::uint32_t* p = perm.data() + static_cast<std::size_t>(j) * rows;
        for (std::size_t i = 0; i < rows; ++i) prev(p[i], j) = da(static_cast<Eigen::Index>(i), j);
      }
      dz = std::move(prev);
    } else {
      dz = da.cwiseProduct((t.acts[l].array() > 0.0).cast<double>().matrix());
    }
  }
  return out;
}

Mat columns(const std::vector<Vector>& pts, std::size_t dim) {
  Mat x(static_cast<Eigen::Index>(dim), static_cast<Eigen::Index>(pts.size()));
  for (std::size_t j = 0; j < pts.size(); ++j)
    for (std::size_t i = 0; i < dim; ++i) x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = pts[j][i];
  return x;
}

class Adam {
 public:
  Adam(const std::vector<GroupSortLayer>& layers, const TrainConfig& cfg) : cfg_(cfg) {
    for (const auto& L : layers) {
      m_.emplace_back(L.weight.entries().size() + L.bias.size(), 0.0);
      v_.emplace_back(L.weight.entries().size() + L.bias.size(), 0.0);
    }
  }

  void step(std::vector<GroupSortLayer>& layers, const Gradients& g) {
    ++t_;
    lr_ = learning_rate_at(cfg_, t_);
    const double c1 = 1.0 - std::pow(cfg_.adam_beta1, static_cast<double>(t_));
    const double c2 = 1.0 - std::pow(cfg_.adam_beta2, static_cast<double>(t_));
    for (std::size_t l = 0; l < layers.size(); ++l) {
      auto w = layers[l].weight.entries();
      auto gw = g.weights[l].entries();
      update(w.data(), gw.data(), w.size(), m_[l].data(), v_[l].data(), c1, c2);
      update(layers[l].bias.data(), g.biases[l].data(), layers[l].bias.size(), m_[l].data() + w.size(),
             v_[l].data() + w.size(), c1, c2);
    }
  }

 private:
  void update(double* p, const double* g, std::size_t n, double* m, double* v, double c1, double c2) const {
    const double b1 = cfg_.adam_beta1;
    const double b2 = cfg_.adam_beta2;
    for (std::size_t i = 0; i < n; ++i) {
      m[i] = b1 * m[i] + (1.0 - b1) * g[i];
      v[i] = b2 * v[i] + (1.0 - b2) * g[i] * g[i];
      p[i] -= lr_ * (m[i] / c1) / (std::sqrt(v[i] / c2) + cfg_.adam_epsilon);
    }
  }

  const TrainConfig& cfg_;
  std::vector<Vector> m_;
  std::vector<Vector> v_;
  std::size_t t_ = 0;
  double lr_ = 0.0;
};

void apply_enforcement(std::vector<GroupSortLayer>& layers, const TrainConfig& cfg) {
  if (cfg.enforcement == Enforcement::None) return;
  if (cfg.enforcement == Enforcement::RowProjection) {
    enforce_layers(layers, EnforcementMode::RowProjection);
    return;
  }
  // Layers start orthonormal and one Adam step moves each entry by at most
  // about the learning rate, so the iteration stays in its convergence
  // region without rescaling.
  BjorckConfig b = cfg.bjorck;
  b.pre_scale = false;
  enforce_layers(layers, EnforcementMode::Bjorck, b);
}

bool finite_layers(const std::vector<GroupSortLayer>& layers) {
  for (const auto& L : layers) {
    for (double v : L.weight.entries())
      if (!std::isfinite(v)) return false;
    for (double v : L.bias)
      if (!std::isfinite(v)) return false;
  }
  return true;
}

MetricsRecord checkpoint_1d(const GroupSortNetwork& net, const RegressionProblem& p, const TrainConfig& cfg,
                            std::size_t step, double loss) {
  MetricsRecord r;
  r.step = step;
  r.loss = loss;
  r.uniform_error = uniform_error(net, p.target, p.lo, p.hi, cfg.eval_grid);
  if (cfg.track_regions) {
    const RegionProfile prof = enumerate_regions_1d(net, p.lo, p.hi);
    r.region_count = prof.region_count;
    double best = 0.0;
    for (double s : prof.slopes) best = std::max(best, std::abs(s));
    r.lipschitz_estimate = best;
  } else {
    double best = 0.0;
    double x[1] = {p.lo};
    double prev = net(x);
    for (std::size_t i = 1; i < cfg.eval_grid; ++i) {
      const double xi = p.lo + (p.hi - p.lo) * static_cast<double>(i) / static_cast<double>(cfg.eval_grid - 1);
      x[0] = xi;
      const double v = net(x);
      best = std::max(best, std::abs(v - prev) * static_cast<double>(cfg.eval_grid - 1) / (p.hi - p.lo));
      prev = v;
    }
    r.lipschitz_estimate = best;
  }
  return r;
}

}  // namespace

ArchSpec ArchSpec::uniform(std::size_t input_dim, std::size_t depth, std::size_t width, std::size_t k,
                           Activation activation) {
  if (depth == 0) throw DomainError("depth must be at least 1");
  ArchSpec a;
  a.input_dim = input_dim;
  a.hidden_widths.assign(depth - 1, width);
  a.grouping_size = k;
  a.activation = activation;
  return a;
}

void ArchSpec::validate() const {
  if (input_dim == 0) throw DimensionError("input dimension must be positive");
  if (grouping_size < 2) throw DomainError("grouping size must be at least 2");
  for (std::size_t w : hidden_widths) {
    if (w == 0) throw DimensionError("hidden widths must be positive");
    if (activation == Activation::GroupSort && w % grouping_size != 0)
      throw DimensionError("hidden width " + std::to_string(w) + " is not a multiple of " +
                           std::to_string(grouping_size));
  }
}

void TrainConfig::validate() const {
  if (batch_size == 0 || steps == 0 || enforce_every == 0 || eval_every == 0)
    throw DomainError("TrainConfig counts must be positive");
  if (eval_grid < 2) throw DomainError("TrainConfig: eval_grid must be at least 2");
  if (!(learning_rate > 0)) throw DomainError("TrainConfig: learning rate must be positive");
  if (!(adam_beta1 >= 0 && adam_beta1 < 1) || !(adam_beta2 >= 0 && adam_beta2 < 1))
    throw DomainError("TrainConfig: Adam betas must lie in [0, 1)");
  if (!(adam_epsilon > 0)) throw DomainError("TrainConfig: Adam epsilon must be positive");
  if (!(bias_init >= 0) || !(hidden_bias_init >= 0))
    throw DomainError("TrainConfig: bias scales must be non-negative");
  if (!(lr_final_fraction > 0 && lr_final_fraction <= 1))
    throw DomainError("TrainConfig: lr_final_fraction must lie in (0, 1]");
  bjorck.validate();
}

void Dataset::validate() const {
  if (inputs.size() != targets.size()) throw DimensionError("dataset inputs and targets differ in length");
  if (inputs.empty()) throw DimensionError("dataset is empty");
  const std::size_t d = inputs.front().size();
  if (d == 0) throw DimensionError("dataset inputs are empty vectors");
  for (const Vector& x : inputs)
    if (x.size() != d) throw DimensionError("dataset inputs have inconsistent dimensions");
}

Gradients grad_mse(const GroupSortNetwork& net, const Dataset& batch) {
  batch.validate();
  if (batch.dim() != net.input_dim()) throw DimensionError("batch dimension does not match the network");
  Tape t;
  forward_tape(net.layers(), net.activation(), net.grouping_size(), columns(batch.inputs, batch.dim()), t);
  const double n = static_cast<double>(batch.size());
  Eigen::RowVectorXd r = t.out - view(batch.targets).transpose();
  Gradients g = backward(net.layers(), net.activation(), t, (2.0 / n) * r);
  g.loss = r.squaredNorm() / n;
  return g;
}

double mse(const GroupSortNetwork& net, const Dataset& batch) {
  batch.validate();
  if (batch.dim() != net.input_dim()) throw DimensionError("batch dimension does not match the network");
  double s = 0.0;
  for (std::size_t i = 0; i < batch.size(); ++i) {
    const double r = net(batch.inputs[i]) - batch.targets[i];
    s += r * r;
  }
  return s / static_cast<double>(batch.size());
}

double learning_rate_at(const TrainConfig& cfg, std::size_t step) {
  if (cfg.lr_schedule == LrSchedule::Constant || cfg.steps <= 1) return cfg.learning_rate;
  const double t = static_cast<double>(std::clamp<std::size_t>(step, 1, cfg.steps) - 1) / static_cast<double>(cfg.steps - 1);
  const double f = cfg.lr_final_fraction + (1.0 - cfg.lr_final_fraction) * 0.5 * (1.0 + std::cos(M_PI * t));
  return cfg.learning_rate * f;
}

GroupSortNetwork init_network(const ArchSpec& arch, std::uint64_t seed, double bias_init, double hidden_bias_init,
                              Enforcement enforcement, const BjorckConfig& bjorck) {
  arch.validate();
  std::mt19937_64 rng(seed);
  std::vector<GroupSortLayer> layers;
  std::size_t cols = arch.input_dim;
  std::vector<std::size_t> rows_list = arch.hidden_widths;
  rows_list.push_back(1);
  const double gain = arch.activation == Activation::ReLU && enforcement == Enforcement::None ? 2.0 : 1.0;
  std::uniform_real_distribution<double> ub(-1.0, 1.0);
  for (std::size_t rows : rows_list) {
    std::normal_distribution<double> nd(0.0, std::sqrt(gain / static_cast<double>(cols)));
    Matrix w(rows, cols);
    for (double& v : w.entries()) v = nd(rng);
    Vector b(rows);
    const double scale = layers.empty() ? bias_init : hidden_bias_init;
    for (double& v : b) v = scale * ub(rng);
    layers.push_back(GroupSortLayer{std::move(w), std::move(b)});
    cols = rows;
  }
  if (enforcement == Enforcement::Bjorck) enforce_layers(layers, EnforcementMode::Bjorck, bjorck);
  if (enforcement == Enforcement::RowProjection) enforce_layers(layers, EnforcementMode::RowProjection);
  return GroupSortNetwork(arch.input_dim, arch.grouping_size, std::move(layers), arch.activation);
}

RegressionResult train_regression(const RegressionProblem& p, const ArchSpec& arch, const TrainConfig& cfg) {
  cfg.validate();
  arch.validate();
  if (arch.input_dim != 1) throw DimensionError("regression targets are functions of one variable");
  if (!(p.lo < p.hi)) throw DomainError("regression domain needs lo < hi");
  if (p.data) {
    p.data->validate();
    if (p.data->dim() != 1) throw DimensionError("regression data must be one-dimensional");
  }
  std::mt19937_64 rng(cfg.seed);
  std::vector<GroupSortLayer> layers =
      init_network(arch, rng(), cfg.bias_init, cfg.hidden_bias_init, cfg.enforcement, cfg.bjorck).layers();
  const std::size_t k = arch.grouping_size;
  const Activation act = arch.activation;

  // start the output bias at the mean residual
  {
    double shift = 0.0;
    GroupSortNetwork net(1, k, layers, act);
    if (p.data) {
      for (std::size_t i = 0; i < p.data->size(); ++i) shift += p.data->targets[i] - net(p.data->inputs[i]);
      shift /= static_cast<double>(p.data->size());
    } else {
      constexpr int kProbe = 257;
      for (int i = 0; i < kProbe; ++i) {
        double x[1] = {p.lo + (p.hi - p.lo) * i / (kProbe - 1.0)};
        shift += p.target(x[0]) - net(x);
      }
      shift /= kProbe;
    }
    layers.back().bias[0] += shift;
  }

  Adam adam(layers, cfg);
  std::uniform_real_distribution<double> ux(p.lo, p.hi);
  std::vector<std::size_t> order;
  if (p.data) {
    order.resize(p.data->size());
    std::iota(order.begin(), order.end(), 0);
  }
  const std::size_t bsz = p.data ? std::min(cfg.batch_size, p.data->size()) : cfg.batch_size;
  Mat x(1, static_cast<Eigen::Index>(bsz));
  Eigen::VectorXd y(static_cast<Eigen::Index>(bsz));
  Tape tape;
  RegressionResult result{GroupSortNetwork(1, k, layers, act), {}};
  for (std::size_t step = 1; step <= cfg.steps; ++step) {
    if (p.data) {
      if (bsz < order.size()) {
        for (std::size_t i = 0; i < bsz; ++i) {
          std::uniform_int_distribution<std::size_t> pick(i, order.size() - 1);
          std::swap(order[i], order[pick(rng)]);
        }
      }
      for (std::size_t i = 0; i < bsz; ++i) {
        x(0, static_cast<Eigen::Index>(i)) = p.data->inputs[order[i]][0];
        y(static_cast<Eigen::Index>(i)) = p.data->targets[order[i]];
      }
    } else {
      for (std::size_t i = 0; i < bsz; ++i) {
        const double xi = ux(rng);
        x(0, static_cast<Eigen::Index>(i)) = xi;
        y(static_cast<Eigen::Index>(i)) = p.target(xi);
      }
    }
    forward_tape(layers, act, k, x, tape);
    Eigen::RowVectorXd r = tape.out - y.transpose();
    const double loss = r.squaredNorm() / static_cast<double>(bsz);
    if (!std::isfinite(loss)) throw TrainingError("loss is not finite", step);
    const Gradients g = backward(layers, act, tape, (2.0 / static_cast<double>(bsz)) * r);
    adam.step(layers, g);
    if (step % cfg.enforce_every == 0) {
      try {
        apply_enforcement(layers, cfg);
      } catch (const ConvergenceError& e) {
        throw TrainingError(e.what(), step);
      }
    }
    if (!finite_layers(layers)) throw TrainingError("parameters are not finite", step);
    if (step % cfg.eval_every == 0 || step == cfg.steps) {
      GroupSortNetwork net(1, k, layers, act);
      result.history.push_back(checkpoint_1d(net, p, cfg, step, loss));
    }
  }
  result.net = GroupSortNetwork(1, k, std::move(layers), act);
  return result;
}

double critic_objective(const GroupSortNetwork& net, const DiscreteDistribution& mu, const DiscreteDistribution& nu) {
  if (mu.dim() != net.input_dim() || nu.dim() != net.input_dim())
    throw DimensionError("distribution dimension does not match the critic");
  double a = 0.0;
  for (std::size_t i = 0; i < mu.size(); ++i) a += mu.weights()[i] * net(mu.points()[i]);
  double b = 0.0;
  for (std::size_t j = 0; j < nu.size(); ++j) b += nu.weights()[j] * net(nu.points()[j]);
  return a - b;
}

CriticResult train_critic(const DiscreteDistribution& mu, const DiscreteDistribution& nu, const ArchSpec& arch,
                          const TrainConfig& cfg) {
  cfg.validate();
  arch.validate();
  if (mu.dim() != nu.dim()) throw DimensionError("distributions differ in dimension");
  if (mu.dim() != arch.input_dim) throw DimensionError("distribution dimension does not match the critic");
  std::mt19937_64 rng(cfg.seed);
  std::vector<GroupSortLayer> layers =
      init_network(arch, rng(), cfg.bias_init, cfg.hidden_bias_init, cfg.enforcement, cfg.bjorck).layers();
  const std::size_t k = arch.grouping_size;
  const Activation act = arch.activation;
  const std::size_t d = arch.input_dim;

  // Small clouds are used whole with their weights; large ones are sampled.
  const bool full_mu = mu.size() <= cfg.batch_size;
  const bool full_nu = nu.size() <= cfg.batch_size;
  const std::size_t nm = full_mu ? mu.size() : cfg.batch_size;
  const std::size_t nn = full_nu ? nu.size() : cfg.batch_size;
  std::discrete_distribution<std::size_t> pick_mu(mu.weights().begin(), mu.weights().end());
  std::discrete_distribution<std::size_t> pick_nu(nu.weights().begin(), nu.weights().end());
  Mat x(static_cast<Eigen::Index>(d), static_cast<Eigen::Index>(nm + nn));
  Eigen::RowVectorXd g(static_cast<Eigen::Index>(nm + nn));
  auto put = [&](std::size_t col, const Vector& pt) {
    for (std::size_t i = 0; i < d; ++i) x(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(col)) = pt[i];
  };
  if (full_mu)
    for (std::size_t i = 0; i < nm; ++i) {
      put(i, mu.points()[i]);
      g(static_cast<Eigen::Index>(i)) = -mu.weights()[i];
    }
  if (full_nu)
    for (std::size_t j = 0; j < nn; ++j) {
      put(nm + j, nu.points()[j]);
      g(static_cast<Eigen::Index>(nm + j)) = nu.weights()[j];
    }

  Adam adam(layers, cfg);
  Tape tape;
  CriticResult result{GroupSortNetwork(d, k, layers, act), 0.0, {}};
  double best = -1.0;
  double best_signed = 0.0;
  for (std::size_t step = 1; step <= cfg.steps; ++step) {
    if (!full_mu)
      for (std::size_t i = 0; i < nm; ++i) {
        put(i, mu.points()[pick_mu(rng)]);
        g(static_cast<Eigen::Index>(i)) = -1.0 / static_cast<double>(nm);
      }
    if (!full_nu)
      for (std::size_t j = 0; j < nn; ++j) {
        put(nm + j, nu.points()[pick_nu(rng)]);
        g(static_cast<Eigen::Index>(nm + j)) = 1.0 / static_cast<double>(nn);
      }
    forward_tape(layers, act, k, x, tape);
    const double loss = tape.out.dot(g);
    if (!std::isfinite(loss)) throw TrainingError("critic objective is not finite", step);
    adam.step(layers, backward(layers, act, tape, g));
    if (step % cfg.enforce_every == 0) {
      try {
        apply_enforcement(layers, cfg);
      } catch (const ConvergenceError& e) {
        throw TrainingError(e.what(), step);
      }
    }
    if (!finite_layers(layers)) throw TrainingError("parameters are not finite", step);
    if (step % cfg.eval_every == 0 || step == cfg.steps) {
      GroupSortNetwork net(d, k, layers, act);
      const double j = critic_objective(net, mu, nu);
      MetricsRecord r;
      r.step = step;
      r.loss = -j;
      result.history.push_back(r);
      if (std::abs(j) > best) {
        best = std::abs(j);
        best_signed = j;
        result.net = std::move(net);
      }
    }
  }
  if (best_signed < 0) {
    std::vector<GroupSortLayer> flipped = result.net.layers();
    for (double& v : flipped.back().weight.entries()) v = -v;
    flipped.back().bias[0] = -flipped.back().bias[0];
    result.net = GroupSortNetwork(d, k, std::move(flipped), act);
  }
  result.neural_distance = best;
  return result;
}

std::vector<double> spectral_norms(const GroupSortNetwork& net) {
  std::vector<double> out;
  for (const auto& L : net.layers()) out.push_back(norm_2(L.weight));
  return out;
}

std::string to_csv(const std::vector<MetricsRecord>& history, const std::string& config_line) {
  std::ostringstream os;
  os.precision(12);
  if (!config_line.empty()) os << "# config: " << config_line << '\n';
  os << "step,loss,uniform_error,lipschitz_estimate,region_count\n";
  for (const MetricsRecord& r : history)
    os << r.step << ',' << r.loss << ',' << r.uniform_error << ',' << r.lipschitz_estimate << ','
       << r.region_count << '\n';
  return os.str();
}

std::string to_string(Enforcement e) {
  switch (e) {
    case Enforcement::RowProjection:
      return "row";
    case Enforcement::Bjorck:
      return "bjorck";
    case Enforcement::None:
      return "none";
  }
  return "none";
}

Enforcement parse_enforcement(const std::string& name) {
  if (name == "row" || name == "row_projection") return Enforcement::RowProjection;
  if (name == "bjorck") return Enforcement::Bjorck;
  if (name == "none") return Enforcement::None;
  throw DomainError("unknown enforcement '" + name + "'");
}

}  // namespace gsnet
