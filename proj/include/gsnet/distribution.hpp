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
#include <vector>

#include "gsnet/core.hpp"

namespace gsnet {

/// Weighted point cloud. Weights are non-negative and sum to one (±1e-12);
/// all points share one dimension.
class DiscreteDistribution {
 public:
  DiscreteDistribution(std::vector<Vector> points, std::vector<double> weights);
  static DiscreteDistribution uniform(std::vector<Vector> points);

  const std::vector<Vector>& points() const noexcept { return points_; }
  const std::vector<double>& weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return points_.size(); }
  std::size_t dim() const noexcept { return points_.front().size(); }

 private:
  std::vector<Vector> points_;
  std::vector<double> weights_;
};

}  // namespace gsnet
