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
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gsnet/network.hpp"

namespace gsnet {

/// Maximal linear regions of a 1-D network restricted to [lo, hi].
struct RegionProfile {
  double lo = 0;
  double hi = 0;
  std::vector<double> breakpoints;  // strictly inside (lo, hi), sorted
  std::size_t region_count = 0;     // breakpoints.size() + 1
  std::vector<double> slopes;       // one per region, left to right
  std::vector<double> intercepts;   // one per region
};

/// Exact enumeration by propagating affine pieces layer by layer. Adjacent
/// regions with equal slopes are merged. Throws DimensionError unless the
/// network has one input, DomainError unless lo < hi.
RegionProfile enumerate_regions_1d(const GroupSortNetwork& net, double lo, double hi);

/// Upper bound on the number of linear regions of a 1-D network with the
/// given hidden widths: k^{q-2} ((k-1) v_1 / 2 + 1) v_2 ... v_{q-1}.
/// Saturates at UINT64_MAX. Throws DimensionError if a width is not a multiple of k.
std::uint64_t region_upper_bound(const std::vector<std::size_t>& widths, std::size_t k);

/// For d = 1 the largest absolute slope of the exact region profile on
/// [lo, hi]; otherwise the largest difference quotient over `samples` random
/// pairs drawn from [lo, hi]^d.
double empirical_lipschitz(const GroupSortNetwork& net, double lo, double hi, std::size_t samples = 1000,
                           std::uint64_t seed = 0);

/// max |net(x) - target(x)| over `grid` evenly spaced points of [lo, hi].
double uniform_error(const GroupSortNetwork& net, const std::function<double(double)>& target, double lo,
                     double hi, std::size_t grid);

/// CSV with header `breakpoint,left_slope,right_slope`, one row per breakpoint.
std::string to_csv(const RegionProfile& profile);

}  // namespace gsnet
