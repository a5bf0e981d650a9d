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

// Compiles max–min expressions of affine functions into GroupSort networks
// whose weights satisfy the norm constraints exactly, and records how the
// resulting depth and size compare with the known construction bounds.

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "gsnet/expr.hpp"
#include "gsnet/network.hpp"
#include "gsnet/pwl1d.hpp"

namespace gsnet {

enum class Extremum { Max, Min };

/// Canonical pads the 1-D front-ends with passthrough layers to exactly the
/// construction depth; Minimal keeps whatever depth the expression needs.
enum class DepthPolicy { Minimal, Canonical };

/// Size accounting for a compiled network. A gadget is one sort group that
/// computes a max or min; passthrough groups only carry a value one layer
/// further. `neuron_count` is the sum of hidden widths and counts both.
struct SizeCertificate {
  std::size_t depth = 0;
  std::size_t gadget_count = 0;
  std::size_t passthrough_count = 0;
  std::size_t neuron_count = 0;
  std::size_t depth_bound = 0;
  std::size_t size_bound = 0;
  std::string bound_rule;

  bool within_bounds() const noexcept { return depth <= depth_bound && gadget_count <= size_bound; }
};

struct CompiledNetwork {
  GroupSortNetwork network;
  SizeCertificate certificate;
};

/// Appends identity passthrough layers until the network has `target_depth`
/// layers. The output function is unchanged.
GroupSortNetwork pad_depth(const GroupSortNetwork& net, std::size_t target_depth);

/// Pointwise max (or min) of the inputs. Inputs must share the input
/// dimension and grouping size and satisfy the weight constraints; shallower
/// inputs are padded. Depth grows by ⌈log_k m⌉.
CompiledNetwork combine_extremum(std::vector<CompiledNetwork> parts, Extremum kind, std::size_t k);
CompiledNetwork combine_extremum(const std::vector<GroupSortNetwork>& nets, Extremum kind, std::size_t k);

/// Leaves need ‖a‖₂ ≤ 1 (ConstraintError otherwise). The compiled network
/// equals the expression everywhere and passes check_assumption1 with
/// K2 = max leaf |b|.
CompiledNetwork compile_maxmin(const MaxMinExpr& expr, std::size_t k);

/// f = max_j min_{i ∈ S_j} ℓ_i over the distinct pieces of a 1-Lipschitz f.
/// Throws CertificateError if f is not 1-Lipschitz.
MaxMinExpr maxmin_from_pwl1d(const Pwl1d& f);

/// General 1-D front-end: decomposition followed by compile_maxmin.
CompiledNetwork compile_pwl1d(const Pwl1d& f, std::size_t k, DepthPolicy policy = DepthPolicy::Canonical);

/// Convex f → max of its pieces; concave f → min of its pieces.
/// Throws ShapeError otherwise.
CompiledNetwork convex_pwl1d_to_net(const Pwl1d& f, std::size_t k);

/// Smallest n with k^n ≥ 1/epsilon.
std::size_t interpolation_levels(double epsilon, std::size_t k);

/// Interpolates f on k^n + 1 equispaced nodes of [0, 1] (n from
/// interpolation_levels) and compiles the interpolant. Sup error ≤ epsilon
/// for any 1-Lipschitz f. Sampled chords steeper than 1 + 1e-9 are rejected.
CompiledNetwork interpolate_lipschitz_1d(const std::function<double(double)>& f, double epsilon,
                                         std::size_t k, DepthPolicy policy = DepthPolicy::Canonical);

/// Closed-form depth and size bounds. Fields that do not apply to the given
/// arguments are NaN (floating) or 0 (counts).
struct TheoryBounds {
  double ordered_subdomains_upper = 0;   // min(2^{m²/2}, (m/√2)^{2d})
  std::size_t maxmin_depth = 0;          // ⌈log₂ M⌉ + ⌈log₂ m⌉ + 1
  double maxmin_size = 0;                // 3mM + M − 1
  std::size_t convex_regions_depth = 0;  // 2⌈log₂ m⌉ + 1
  double convex_regions_size = 0;        // 3m² + m − 1
  std::size_t convex_function_depth = 0; // ⌈log₂ m⌉ + 1
  double convex_function_size = 0;       // 2m − 1 (m a power of two), else 3m − 1
  double size_lower_bound = 0;           // ½(q−1) m^{1/(q−1)}
  std::size_t extremum_depth_increase = 0;  // ⌈log_k m⌉
  double extremum_gadgets = 0;           // (k^⌈log_k m⌉ − 1)/(k − 1)
  std::size_t grouped_depth = 0;         // 2⌈log_k m⌉ + 1
  double grouped_size = 0;               // (m² − 1)/(k − 1)
  std::size_t interpolation_depth = 0;   // 2⌈log_k(1/ε)⌉ + 1
  std::size_t interpolation_convex_depth = 0;  // ⌈log_k(1/ε)⌉ + 1
  double high_dim_depth_scale = 0;       // d² log₂(2√d/ε)
  double high_dim_size_scale = 0;        // (2√d/ε)^{d²}
  std::size_t high_dim_grouping = 0;     // ⌈2√d/ε⌉
  double high_dim_grouped_size_scale = 0;  // (2√d/ε)^{d²−1}
};

TheoryBounds bound_calculator(std::size_t m_f, std::size_t M_f, std::size_t d, std::size_t k,
                              std::size_t q, double epsilon);

/// ⌈log_k m⌉ for m ≥ 1, computed in integers.
std::size_t ceil_log(std::size_t m, std::size_t k);

}  // namespace gsnet
