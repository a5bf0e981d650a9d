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

#include "gsnet/constraints.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "gsnet/error.hpp"

namespace gsnet {

namespace {

constexpr double kDivergenceLimit = 1e6;

using RowMajor = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

Eigen::Map<RowMajor> view(Matrix& a) { return {a.entries().data(), static_cast<Eigen::Index>(a.rows()), static_cast<Eigen::Index>(a.cols())}; }

double gram_residual(const RowMajor& g) {
  return (RowMajor::Identity(g.rows(), g.cols()) - g).cwiseAbs().maxCoeff();
}

Matrix bjorck_tall(Matrix a, const BjorckConfig& cfg) {
  if (cfg.pre_scale) {
    const double s = norm_2(a);
    if (s > 0.0)
      for (double& v : a.entries()) v /= s;
  }
  auto A = view(a);
  const Eigen::Index n = A.cols();
  RowMajor g(n, n);
  for (std::size_t it = 0; it < cfg.iterations; ++it) {
    g.noalias() = A.transpose() * A;
    if (gram_residual(g) <= cfg.tolerance) break;
    g = RowMajor::Identity(n, n) - g;
    RowMajor step = A * g;
    A += cfg.beta * step;
    if (!(A.cwiseAbs().maxCoeff() <= kDivergenceLimit)) {
      throw ConvergenceError("bjorck_orthonormalize diverged at iteration " + std::to_string(it + 1) +
                             (cfg.pre_scale ? "" : "; enable pre_scale"));
    }
  }
  return a;
}

}  // namespace

void BjorckConfig::validate() const {
  if (iterations < 1) throw DomainError("BjorckConfig: iterations must be at least 1");
  if (!(beta > 0.0 && beta <= 0.5)) throw DomainError("BjorckConfig: beta must lie in (0, 0.5]");
  if (!(tolerance >= 0.0)) throw DomainError("BjorckConfig: tolerance must be non-negative");
}

Matrix project_rows_inf(const Matrix& w) {
  Matrix out = w;
  for (std::size_t i = 0; i < out.rows(); ++i) {
    auto row = out.row(i);
    double s = 0.0;
    for (double v : row) s += std::abs(v);
    if (s > 1.0)
      for (double& v : row) v /= s;
  }
  return out;
}

Matrix project_rows_2inf(const Matrix& w) {
  Matrix out = w;
  for (std::size_t i = 0; i < out.rows(); ++i) {
    auto row = out.row(i);
    const double n = norm2(row);
    if (n > 1.0)
      for (double& v : row) v /= n;
  }
  return out;
}

Matrix bjorck_orthonormalize(const Matrix& w, const BjorckConfig& cfg) {
  cfg.validate();
  if (w.empty()) throw DimensionError("bjorck_orthonormalize: empty matrix");
  if (w.rows() < w.cols()) return bjorck_tall(w.transpose(), cfg).transpose();
  return bjorck_tall(w, cfg);
}

double orthonormality_residual(const Matrix& w) {
  Matrix a = w.rows() < w.cols() ? w.transpose() : w;
  auto A = view(a);
  return gram_residual(A.transpose() * A);
}

void enforce_layers(std::vector<GroupSortLayer>& layers, EnforcementMode mode, const BjorckConfig& cfg) {
  for (std::size_t i = 0; i < layers.size(); ++i) {
    auto& w = layers[i].weight;
    if (mode == EnforcementMode::Bjorck) {
      w = bjorck_orthonormalize(w, cfg);
    } else {
      w = i == 0 ? project_rows_2inf(w) : project_rows_inf(w);
    }
  }
}

GroupSortNetwork enforce(const GroupSortNetwork& net, EnforcementMode mode, const BjorckConfig& cfg) {
  auto layers = net.layers();
  enforce_layers(layers, mode, cfg);
  return GroupSortNetwork(net.input_dim(), net.grouping_size(), std::move(layers), net.activation());
}

}  // namespace gsnet
