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

#include "gsnet/core.hpp"
#include "gsnet/network.hpp"

namespace gsnet {

/// Björck–Bowie orthonormalization, first order: A ← A(I + β(I − AᵀA)).
struct BjorckConfig {
  std::size_t iterations = 30;
  double beta = 0.5;
  bool pre_scale = true;
  /// Stop once max |I − AᵀA| falls below this. Zero runs every iteration.
  double tolerance = 1e-12;

  void validate() const;
};

/// Rows with absolute sum above one are divided by that sum.
Matrix project_rows_inf(const Matrix& w);
/// Rows with Euclidean norm above one are divided by that norm.
Matrix project_rows_2inf(const Matrix& w);

/// Orthonormal columns for tall/square input, orthonormal rows for wide input.
/// Throws ConvergenceError when an entry exceeds 1e6 in magnitude.
Matrix bjorck_orthonormalize(const Matrix& w, const BjorckConfig& cfg = {});

/// max |I − AᵀA| (tall) or max |I − AAᵀ| (wide).
double orthonormality_residual(const Matrix& w);

enum class EnforcementMode { RowProjection, Bjorck };

/// RowProjection: first layer by the (2,∞) rule, later layers by the ∞ rule.
/// Bjorck: every layer orthonormalized. Biases are left alone in both modes.
GroupSortNetwork enforce(const GroupSortNetwork& net, EnforcementMode mode,
                         const BjorckConfig& cfg = {});

/// In-place version on a bare layer stack (used by the trainer).
void enforce_layers(std::vector<GroupSortLayer>& layers, EnforcementMode mode,
                    const BjorckConfig& cfg = {});

}  // namespace gsnet
