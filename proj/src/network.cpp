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

#include "gsnet/network.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "gsnet/error.hpp"

namespace gsnet {

void groupsort_inplace(std::span<double> x, std::size_t k, std::span<std::size_t> perm) {
  if (k == 0 || x.size() % k != 0) {
    throw DimensionError("groupsort: length " + std::to_string(x.size()) +
                         " is not divisible by grouping size " + std::to_string(k));
  }
  const bool track = !perm.empty();
  if (track && perm.size() != x.size()) throw DimensionError("groupsort: permutation size mismatch");
  for (std::size_t g = 0; g < x.size(); g += k) {
    if (track)
      for (std::size_t i = 0; i < k; ++i) perm[g + i] = g + i;
    // Insertion sort, descending; strict comparison keeps ties stable.
    for (std::size_t i = 1; i < k; ++i) {
      const double v = x[g + i];
      const std::size_t p = track ? perm[g + i] : 0;
      std::size_t j = i;
      while (j > 0 && x[g + j - 1] < v) {
        x[g + j] = x[g + j - 1];
        if (track) perm[g + j] = perm[g + j - 1];
        --j;
      }
      x[g + j] = v;
      if (track) perm[g + j] = p;
    }
  }
}

Vector groupsort(std::span<const double> x, std::size_t k) {
  Vector out(x.begin(), x.end());
  groupsort_inplace(out, k);
  return out;
}

GroupSortNetwork::GroupSortNetwork(std::size_t input_dim, std::size_t grouping_size,
                                   std::vector<GroupSortLayer> layers, Activation activation)
    : input_dim_(input_dim),
      grouping_size_(grouping_size),
      activation_(activation),
      layers_(std::move(layers)) {
  if (input_dim_ == 0) throw DimensionError("network: input dimension must be positive");
  if (grouping_size_ < 2) throw DimensionError("network: grouping size must be at least 2");
  if (layers_.empty()) throw DimensionError("network: at least one layer is required");
  std::size_t prev = input_dim_;
  for (std::size_t i = 0; i < layers_.size(); ++i) {
    const auto& l = layers_[i];
    const std::string where = "network layer " + std::to_string(i + 1);
    if (l.weight.cols() != prev) {
      throw DimensionError(where + ": expects " + std::to_string(l.weight.cols()) +
                           " inputs, previous width is " + std::to_string(prev));
    }
    if (l.bias.size() != l.weight.rows()) throw DimensionError(where + ": bias length differs from row count");
    if (l.weight.rows() == 0) throw DimensionError(where + ": zero width");
    const bool last = i + 1 == layers_.size();
    if (last && l.weight.rows() != 1) throw DimensionError(where + ": output layer must have exactly one row");
    if (!last && activation_ == Activation::GroupSort && l.weight.rows() % grouping_size_ != 0) {
      throw DimensionError(where + ": width " + std::to_string(l.weight.rows()) +
                           " is not divisible by grouping size " + std::to_string(grouping_size_));
    }
    prev = l.weight.rows();
  }
  sparse_.reserve(layers_.size());
  for (const auto& l : layers_) {
    SparseRows sr;
    sr.start.reserve(l.weight.rows() + 1);
    sr.start.push_back(0);
    for (std::size_t r = 0; r < l.weight.rows(); ++r) {
      const auto row = l.weight.row(r);
      for (std::size_t c = 0; c < row.size(); ++c) {
        if (row[c] == 0.0) continue;
        sr.col.push_back(c);
        sr.val.push_back(row[c]);
      }
      sr.start.push_back(sr.col.size());
    }
    sparse_.push_back(std::move(sr));
  }
}

std::vector<std::size_t> GroupSortNetwork::hidden_widths() const {
  std::vector<std::size_t> w;
  for (std::size_t i = 0; i + 1 < layers_.size(); ++i) w.push_back(layers_[i].weight.rows());
  return w;
}

std::size_t GroupSortNetwork::neuron_count() const {
  std::size_t n = 0;
  for (std::size_t w : hidden_widths()) n += w;
  return n;
}

double GroupSortNetwork::operator()(std::span<const double> x) const {
  if (x.size() != input_dim_) {
    throw DimensionError("forward: input length " + std::to_string(x.size()) +
                         " differs from input dimension " + std::to_string(input_dim_));
  }
  Vector cur(x.begin(), x.end());
  Vector next;
  for (std::size_t i = 0; i < layers_.size(); ++i) {
    const auto& l = layers_[i];
    const SparseRows& sr = sparse_[i];
    next.assign(l.bias.begin(), l.bias.end());
    for (std::size_t r = 0; r < l.weight.rows(); ++r) {
      double s = 0.0;
      for (std::size_t j = sr.start[r]; j < sr.start[r + 1]; ++j) s += sr.val[j] * cur[sr.col[j]];
      next[r] += s;
    }
    if (i + 1 < layers_.size()) {
      if (activation_ == Activation::GroupSort) {
        groupsort_inplace(next, grouping_size_);
      } else {
        for (double& v : next) v = std::max(v, 0.0);
      }
    }
    std::swap(cur, next);
  }
  return cur[0];
}

double forward(const GroupSortNetwork& net, std::span<const double> x) { return net(x); }

std::string ConstraintReport::violations() const {
  std::ostringstream os;
  if (first_layer_2inf > 1.0 + tolerance) os << "layer 1 (2,inf)-norm " << first_layer_2inf << " > 1; ";
  for (std::size_t i = 0; i < later_layer_inf_norms.size(); ++i)
    if (later_layer_inf_norms[i] > 1.0 + tolerance)
      os << "layer " << i + 2 << " inf-norm " << later_layer_inf_norms[i] << " > 1; ";
  for (std::size_t i = 0; i < bias_inf_norms.size(); ++i)
    if (bias_inf_norms[i] > k2 + tolerance) os << "bias " << i + 1 << " norm " << bias_inf_norms[i] << " > K2; ";
  return os.str();
}

ConstraintReport check_assumption1(const GroupSortNetwork& net, double k2, double tolerance) {
  ConstraintReport rep;
  rep.tolerance = tolerance;
  rep.k2 = k2;
  const auto& layers = net.layers();
  rep.first_layer_2inf = norm_2inf(layers.front().weight);
  bool ok = rep.first_layer_2inf <= 1.0 + tolerance;
  for (std::size_t i = 1; i < layers.size(); ++i) {
    const double n = norm_inf(layers[i].weight);
    rep.later_layer_inf_norms.push_back(n);
    ok = ok && n <= 1.0 + tolerance;
  }
  for (const auto& l : layers) {
    const double b = norm_max(l.bias);
    rep.bias_inf_norms.push_back(b);
    ok = ok && b <= k2 + tolerance;
  }
  rep.satisfied = ok;
  return rep;
}

}  // namespace gsnet
