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
#include <limits>
#include <span>
#include <string>
#include <vector>

#include "gsnet/core.hpp"

namespace gsnet {

enum class Activation { GroupSort, ReLU };

/// Sorts each consecutive block of `k` entries into descending order.
/// Ties keep their input order. Throws DimensionError unless k divides the length.
Vector groupsort(std::span<const double> x, std::size_t k);

/// In-place variant. When `perm` is non-empty it receives, for every output
/// slot, the input index that landed there.
void groupsort_inplace(std::span<double> x, std::size_t k, std::span<std::size_t> perm = {});

struct GroupSortLayer {
  Matrix weight;  // v_i × v_{i-1}
  Vector bias;    // v_i

  friend bool operator==(const GroupSortLayer&, const GroupSortLayer&) = default;
};

/// Alternating affine / GroupSort composition with a scalar output:
///   x ↦ V_q σ_k(… σ_k(V_1 x + c_1) …) + c_q.
/// A single layer is a plain affine map. Immutable once constructed.
class GroupSortNetwork {
 public:
  /// Validates the layer chain, the single output row and the divisibility of
  /// every hidden width by `grouping_size`; throws DimensionError otherwise.
  GroupSortNetwork(std::size_t input_dim, std::size_t grouping_size,
                   std::vector<GroupSortLayer> layers,
                   Activation activation = Activation::GroupSort);

  std::size_t input_dim() const noexcept { return input_dim_; }
  std::size_t grouping_size() const noexcept { return grouping_size_; }
  Activation activation() const noexcept { return activation_; }
  std::size_t depth() const noexcept { return layers_.size(); }
  const std::vector<GroupSortLayer>& layers() const noexcept { return layers_; }
  const GroupSortLayer& layer(std::size_t i) const { return layers_.at(i); }

  /// v_1, …, v_{q-1}.
  std::vector<std::size_t> hidden_widths() const;
  /// Sum of hidden widths.
  std::size_t neuron_count() const;

  double operator()(std::span<const double> x) const;

  friend bool operator==(const GroupSortNetwork& a, const GroupSortNetwork& b) {
    return a.input_dim_ == b.input_dim_ && a.grouping_size_ == b.grouping_size_ &&
           a.activation_ == b.activation_ && a.layers_ == b.layers_;
  }

 private:
  // Nonzero weights in row-compressed form; compiled networks are mostly zeros.
  struct SparseRows {
    std::vector<std::size_t> start;
    std::vector<std::size_t> col;
    std::vector<double> val;
  };

  std::size_t input_dim_;
  std::size_t grouping_size_;
  Activation activation_;
  std::vector<GroupSortLayer> layers_;
  std::vector<SparseRows> sparse_;
};

double forward(const GroupSortNetwork& net, std::span<const double> x);

/// Per-layer norm audit against the weight constraints: ‖V_1‖_{2,∞} ≤ 1,
/// ‖V_i‖_∞ ≤ 1 for i ≥ 2, and ‖c_i‖_∞ ≤ K2.
struct ConstraintReport {
  double first_layer_2inf = 0.0;
  std::vector<double> later_layer_inf_norms;
  std::vector<double> bias_inf_norms;
  bool satisfied = false;
  double tolerance = 0.0;
  double k2 = 0.0;

  /// Human-readable list of the violated bounds (empty when satisfied).
  std::string violations() const;
};

inline constexpr double kCompiledTolerance = 1e-9;
inline constexpr double kTrainedTolerance = 1e-6;

ConstraintReport check_assumption1(const GroupSortNetwork& net,
                                   double k2 = std::numeric_limits<double>::infinity(),
                                   double tolerance = kCompiledTolerance);

// JSON document: {version, input_dim, grouping_size, activation, layers:[{rows, cols, weights, bias}]}.
inline constexpr int kNetworkFormatVersion = 1;
inline constexpr const char* kNetworkFileExtension = ".gsnet.json";

std::string serialize(const GroupSortNetwork& net);
/// Throws ParseError carrying the byte offset or JSON pointer of the defect.
GroupSortNetwork deserialize(const std::string& document);

void save_network(const GroupSortNetwork& net, const std::string& path);
GroupSortNetwork load_network(const std::string& path);

}  // namespace gsnet
