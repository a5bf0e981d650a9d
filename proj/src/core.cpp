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

#include "gsnet/core.hpp"

#include <algorithm>
#include <cmath>

#include "gsnet/error.hpp"

namespace gsnet {

namespace {

constexpr int kPowerIterations = 200;
constexpr double kPowerTolerance = 1e-10;

void require_non_empty(const Matrix& w, const char* op) {
  if (w.empty()) throw DimensionError(std::string(op) + ": empty matrix");
}

// One power-iteration run on WᵀW from `v` (normalized in place).
double power_iteration(const Matrix& w, Vector v) {
  double n = norm2(v);
  if (n == 0.0) return 0.0;
  for (double& e : v) e /= n;
  double sigma = 0.0;
  for (int it = 0; it < kPowerIterations; ++it) {
    const Vector u = w.apply(v);
    const double next = norm2(u);
    Vector z = w.apply_transposed(u);
    const double zn = norm2(z);
    if (zn == 0.0) return next;
    for (std::size_t i = 0; i < z.size(); ++i) v[i] = z[i] / zn;
    const bool done = std::abs(next - sigma) <= kPowerTolerance * next;
    sigma = next;
    if (done) break;
  }
  // Final Rayleigh estimate with the converged direction.
  return std::max(sigma, norm2(w.apply(v)));
}

}  // namespace

Matrix::Matrix(std::size_t rows, std::size_t cols, double fill)
    : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries)
    : rows_(rows), cols_(cols), data_(std::move(entries)) {
  if (data_.size() != rows * cols) {
    throw DimensionError("matrix entries: expected " + std::to_string(rows * cols) +
                         ", got " + std::to_string(data_.size()));
  }
  if (!all_finite()) throw DomainError("matrix has a non-finite entry");
}

Matrix Matrix::from_rows(std::initializer_list<std::initializer_list<double>> rows) {
  const std::size_t r = rows.size();
  const std::size_t c = r == 0 ? 0 : rows.begin()->size();
  std::vector<double> data;
  data.reserve(r * c);
  for (const auto& row : rows) {
    if (row.size() != c) throw DimensionError("from_rows: ragged rows");
    data.insert(data.end(), row.begin(), row.end());
  }
  return Matrix(r, c, std::move(data));
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::diagonal(std::span<const double> diag) {
  Matrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Vector Matrix::apply(std::span<const double> x) const {
  if (x.size() != cols_) {
    throw DimensionError("apply: vector length " + std::to_string(x.size()) +
                         " does not match " + std::to_string(cols_) + " columns");
  }
  Vector y(rows_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) y[i] = dot(row(i), x);
  return y;
}

Vector Matrix::apply_transposed(std::span<const double> x) const {
  if (x.size() != rows_) {
    throw DimensionError("apply_transposed: vector length " + std::to_string(x.size()) +
                         " does not match " + std::to_string(rows_) + " rows");
  }
  Vector y(cols_, 0.0);
  for (std::size_t i = 0; i < rows_; ++i) {
    const double xi = x[i];
    const auto r = row(i);
    for (std::size_t j = 0; j < cols_; ++j) y[j] += xi * r[j];
  }
  return y;
}

bool Matrix::all_finite() const {
  return std::all_of(data_.begin(), data_.end(), [](double v) { return std::isfinite(v); });
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionError("matrix product: inner dimensions differ");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto out = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      const auto br = b.row(k);
      for (std::size_t j = 0; j < b.cols(); ++j) out[j] += aik * br[j];
    }
  }
  return c;
}

double AffineFunction::operator()(std::span<const double> x) const {
  if (x.size() != a.size()) throw DimensionError("affine function: input dimension mismatch");
  return dot(a, x) + b;
}

double dot(std::span<const double> x, std::span<const double> y) {
  double s = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * y[i];
  return s;
}

double norm2(std::span<const double> x) { return std::sqrt(dot(x, x)); }

double norm_max(std::span<const double> x) {
  double m = 0.0;
  for (double v : x) m = std::max(m, std::abs(v));
  return m;
}

double norm_inf(const Matrix& w) {
  require_non_empty(w, "norm_inf");
  double best = 0.0;
  for (std::size_t i = 0; i < w.rows(); ++i) {
    double s = 0.0;
    for (double v : w.row(i)) s += std::abs(v);
    best = std::max(best, s);
  }
  return best;
}

double norm_2inf(const Matrix& w) {
  require_non_empty(w, "norm_2inf");
  double best = 0.0;
  for (std::size_t i = 0; i < w.rows(); ++i) best = std::max(best, norm2(w.row(i)));
  return best;
}

double norm_2(const Matrix& w) {
  require_non_empty(w, "norm_2");
  const std::size_t n = w.cols();
  const double ones = power_iteration(w, Vector(n, 1.0));
  // Second start: deterministic, irrational-ish entries so it is not
  // orthogonal to the singular vectors that an all-ones start can miss.
  Vector alt(n);
  for (std::size_t j = 0; j < n; ++j) alt[j] = 1.0 + std::fmod(0.6180339887498949 * double(j + 1), 1.0);
  alt[n - 1] = -alt[n - 1];
  return std::max(ones, power_iteration(w, std::move(alt)));
}

}  // namespace gsnet
