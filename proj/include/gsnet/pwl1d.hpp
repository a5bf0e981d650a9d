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
#include <functional>
#include <string>
#include <vector>

#include "gsnet/core.hpp"

namespace gsnet {

/// Maximal interval on which a 1-D piecewise-linear function is affine.
/// `lo` may be -inf and `hi` may be +inf. `piece` indexes Pwl1d::pieces().
struct LinearRegion {
  double lo;
  double hi;
  double slope;
  double intercept;
  std::size_t piece;
};

/// Continuous piecewise-linear function on the real line given by strictly
/// increasing breakpoints, their values, and the slopes used beyond the ends.
class Pwl1d {
 public:
  Pwl1d(std::vector<double> breakpoints, std::vector<double> values, double left_slope,
        double right_slope);
  /// Extension slopes continue the first and last chords.
  static Pwl1d from_samples(std::vector<double> breakpoints, std::vector<double> values);

  const std::vector<double>& breakpoints() const noexcept { return x_; }
  const std::vector<double>& values() const noexcept { return y_; }
  double left_slope() const noexcept { return left_; }
  double right_slope() const noexcept { return right_; }

  double operator()(double x) const;

  std::vector<double> chord_slopes() const;
  /// Every chord and both extension slopes have magnitude ≤ 1 (+tol).
  bool is_lipschitz(double tol = 1e-12) const;
  /// Slopes (left, chords…, right) nondecreasing / nonincreasing.
  bool is_convex(double tol = 1e-12) const;
  bool is_concave(double tol = 1e-12) const;

  /// Maximal linear regions over ℝ, collinear neighbours merged.
  std::vector<LinearRegion> regions() const;
  /// The m_f distinct affine pieces, in order of first appearance.
  std::vector<AffineFunction> pieces() const;

 private:
  std::vector<double> all_slopes() const;

  std::vector<double> x_;
  std::vector<double> y_;
  double left_;
  double right_;
};

/// CSV: optional `# left_slope=<a> right_slope=<b>` comment, optional `x,f`
/// header, then `x,f(x)` rows. Missing slopes continue the end chords.
Pwl1d parse_pwl_csv(const std::string& text);
std::string to_csv(const Pwl1d& f);
Pwl1d load_pwl_csv(const std::string& path);

/// Interpolant of `f` on `n + 1` equispaced nodes of [lo, hi].
Pwl1d interpolate_uniform(const std::function<double(double)>& f, double lo, double hi, std::size_t n);

}  // namespace gsnet
