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

#include "gsnet/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "gsnet/error.hpp"

namespace gsnet {
namespace {

// Every neuron of the current layer is affine on each interval:
// value(x) = slope[i] * x + offset[i].
struct Cell {
  double lo;
  double hi;
  std::vector<double> slope;
  std::vector<double> offset;
};

constexpr double kMergeGap = 1e-10;

void affine_layer(Cell& c, const GroupSortLayer& L) {
  const std::size_t rows = L.weight.rows();
  const std::size_t cols = L.weight.cols();
  std::vector<double> s(rows, 0.0);
  std::vector<double> o(L.bias.begin(), L.bias.end());
  for (std::size_t r = 0; r < rows; ++r) {
    const auto w = L.weight.row(r);
    for (std::size_t j = 0; j < cols; ++j) {
      s[r] += w[j] * c.slope[j];
      o[r] += w[j] * c.offset[j];
    }
  }
  c.slope = std::move(s);
  c.offset = std::move(o);
}

// Abscissas strictly inside (lo, hi) where the activation can change branch.
std::vector<double> switch_points(const Cell& c, Activation act, std::size_t k) {
  std::vector<double> pts;
  auto add = [&](double x) {
    if (std::isfinite(x) && x > c.lo + kMergeGap && x < c.hi - kMergeGap) pts.push_back(x);
  };
  const std::size_t n = c.slope.size();
  if (act == Activation::ReLU) {
    for (std::size_t i = 0; i < n; ++i)
      if (c.slope[i] != 0.0) add(-c.offset[i] / c.slope[i]);
  } else {
    for (std::size_t g = 0; g < n; g += k)
      for (std::size_t i = g; i < g + k; ++i)
        for (std::size_t j = i + 1; j < g + k; ++j) {
          const double ds = c.slope[i] - c.slope[j];
          if (ds != 0.0) add((c.offset[j] - c.offset[i]) / ds);
        }
  }
  std::sort(pts.begin(), pts.end());
  std::vector<double> out;
  for (double x : pts)
    if (out.empty() || x - out.back() > kMergeGap) out.push_back(x);
  return out;
}

// Applies the activation on a cell where its branch is fixed; the branch is
// read off at the midpoint.
void activate(Cell& c, Activation act, std::size_t k, std::vector<double>& scratch,
              std::vector<std::size_t>& perm) {
  const double mid = 0.5 * (c.lo + c.hi);
  const std::size_t n = c.slope.size();
  if (act == Activation::ReLU) {
    for (std::size_t i = 0; i < n; ++i) {
      if (c.slope[i] * mid + c.offset[i] <= 0.0) c.slope[i] = c.offset[i] = 0.0;
    }
    return;
  }
  scratch.resize(n);
  perm.resize(n);
  for (std::size_t i = 0; i < n; ++i) scratch[i] = c.slope[i] * mid + c.offset[i];
  groupsort_inplace(scratch, k, perm);
  std::vector<double> s(n), o(n);
  for (std::size_t i = 0; i < n; ++i) {
    s[i] = c.slope[perm[i]];
    o[i] = c.offset[perm[i]];
  }
  c.slope = std::move(s);
  c.offset = std::move(o);
}

bool same_slope(double a, double b) { return std::abs(a - b) <= 1e-9 * std::max(1.0, std::abs(a)); }

}  // namespace

RegionProfile enumerate_regions_1d(const GroupSortNetwork& net, double lo, double hi) {
  if (net.input_dim() != 1) throw DimensionError("region enumeration needs a 1-D network");
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) throw DomainError("need finite lo < hi");
  const std::size_t k = net.grouping_size();
  std::vector<Cell> cells{Cell{lo, hi, {1.0}, {0.0}}};
  std::vector<double> scratch;
  std::vector<std::size_t> perm;
  const auto& layers = net.layers();
  for (std::size_t l = 0; l < layers.size(); ++l) {
    for (Cell& c : cells) affine_layer(c, layers[l]);
    if (l + 1 == layers.size()) break;
    std::vector<Cell> next;
    next.reserve(cells.size());
    for (Cell& c : cells) {
      const std::vector<double> pts = switch_points(c, net.activation(), k);
      double left = c.lo;
      for (std::size_t i = 0; i <= pts.size(); ++i) {
        const double right = i < pts.size() ? pts[i] : c.hi;
        Cell part{left, right, c.slope, c.offset};
        activate(part, net.activation(), k, scratch, perm);
        next.push_back(std::move(part));
        left = right;
      }
    }
    cells = std::move(next);
  }
  RegionProfile p;
  p.lo = lo;
  p.hi = hi;
  for (const Cell& c : cells) {
    if (!p.slopes.empty() && same_slope(p.slopes.back(), c.slope[0])) continue;
    if (!p.slopes.empty()) p.breakpoints.push_back(c.lo);
    p.slopes.push_back(c.slope[0]);
    p.intercepts.push_back(c.offset[0]);
  }
  p.region_count = p.slopes.size();
  return p;
}

std::uint64_t region_upper_bound(const std::vector<std::size_t>& widths, std::size_t k) {
  if (k < 2) throw DomainError("grouping size must be at least 2");
  for (std::size_t w : widths)
    if (w == 0 || w % k != 0) throw DimensionError("hidden width " + std::to_string(w) + " is not a multiple of k");
  if (widths.empty()) return 1;
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  auto mul = [&](std::uint64_t a, std::uint64_t b) -> std::uint64_t {
    if (a != 0 && b > kMax / a) return kMax;
    return a * b;
  };
  std::uint64_t r = (k - 1) * widths[0] / 2 + 1;
  for (std::size_t i = 1; i < widths.size(); ++i) r = mul(r, widths[i]);
  for (std::size_t i = 1; i < widths.size(); ++i) r = mul(r, k);  // k^{q-2}
  return r;
}

double empirical_lipschitz(const GroupSortNetwork& net, double lo, double hi, std::size_t samples,
                           std::uint64_t seed) {
  if (net.input_dim() == 1) {
    const RegionProfile p = enumerate_regions_1d(net, lo, hi);
    double best = 0.0;
    for (double s : p.slopes) best = std::max(best, std::abs(s));
    return best;
  }
  if (samples < 2) throw DomainError("need at least 2 samples");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> U(lo, hi);
  const std::size_t d = net.input_dim();
  std::vector<double> x(d), y(d);
  double best = 0.0;
  for (std::size_t s = 0; s < samples; ++s) {
    for (std::size_t i = 0; i < d; ++i) {
      x[i] = U(rng);
      y[i] = U(rng);
    }
    double dist = 0.0;
    for (std::size_t i = 0; i < d; ++i) dist += (x[i] - y[i]) * (x[i] - y[i]);
    dist = std::sqrt(dist);
    if (dist == 0.0) continue;
    best = std::max(best, std::abs(net(x) - net(y)) / dist);
  }
  return best;
}

double uniform_error(const GroupSortNetwork& net, const std::function<double(double)>& target, double lo,
                     double hi, std::size_t grid) {
  if (grid < 2) throw DomainError("grid needs at least 2 points");
  if (net.input_dim() != 1) throw DimensionError("uniform_error needs a 1-D network");
  double worst = 0.0;
  double x[1];
  for (std::size_t i = 0; i < grid; ++i) {
    x[0] = i + 1 == grid ? hi : lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(grid - 1);
    worst = std::max(worst, std::abs(net(x) - target(x[0])));
  }
  return worst;
}

std::string to_csv(const RegionProfile& profile) {
  std::ostringstream os;
  os.precision(17);
  os << "breakpoint,left_slope,right_slope\n";
  for (std::size_t i = 0; i < profile.breakpoints.size(); ++i)
    os << profile.breakpoints[i] + 0.0 << ',' << profile.slopes[i] + 0.0 << ',' << profile.slopes[i + 1] + 0.0 << '\n';  // no -0
  return os.str();
}

}  // namespace gsnet
