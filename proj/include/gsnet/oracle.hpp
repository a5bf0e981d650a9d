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
#include <span>
#include <vector>

#include "gsnet/core.hpp"
#include "gsnet/distribution.hpp"
#include "gsnet/expr.hpp"

namespace gsnet {

/// Direct recursive evaluation of a max–min expression.
double eval_maxmin(const MaxMinExpr& expr, std::span<const double> x);

struct TransportResult {
  double cost = 0.0;       // primal optimum Σ π_ij ‖x_i − y_j‖
  double dual_value = 0.0; // Kantorovich dual value of the final potentials
  std::size_t augmentations = 0;
  bool integral = false;   // masses were rescaled to integers
  /// Transport plan (|μ| × |ν|, row-major) in probability units.
  std::vector<double> plan;
};

/// Exact discrete optimal transport with Euclidean ground cost, solved by
/// successive shortest paths on the complete bipartite graph.
TransportResult solve_transport(const DiscreteDistribution& mu, const DiscreteDistribution& nu);

/// 1-Wasserstein distance. Throws CertificateError if the primal/dual gap
/// exceeds 1e-9 (relative to max(1, cost)).
double wasserstein1_discrete(const DiscreteDistribution& mu, const DiscreteDistribution& nu);

/// Number of intervals the real line is cut into by the pairwise intersection
/// abscissas of distinct non-parallel lines (crossings merged at 1e-10).
std::size_t count_ordered_subdomains_1d(std::span<const AffineFunction> lines);

}  // namespace gsnet
