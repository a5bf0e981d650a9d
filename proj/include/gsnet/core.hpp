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

// Minimal dense linear algebra: vectors, row-major matrices, affine maps and
// the three operator norms used to state the weight constraints.

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace gsnet {

using Vector = std::vector<double>;

/// Row-major dense matrix of finite doubles.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0);
  /// Throws DimensionError if `entries.size() != rows * cols` and
  /// DomainError on a non-finite entry.
  Matrix(std::size_t rows, std::size_t cols, std::vector<double> entries);

  static Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);
  static Matrix identity(std::size_t n);
  static Matrix diagonal(std::span<const double> diag);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0 || cols_ == 0; }

  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  double& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }

  std::span<const double> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  std::span<double> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const double> entries() const { return data_; }
  std::span<double> entries() { return data_; }

  Matrix transpose() const;
  /// y = W x.
  Vector apply(std::span<const double> x) const;
  /// y = Wᵀ x.
  Vector apply_transposed(std::span<const double> x) const;

  bool all_finite() const;

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator*(const Matrix& a, const Matrix& b);

/// x ↦ a·x + b.
struct AffineFunction {
  Vector a;
  double b = 0.0;

  std::size_t dim() const noexcept { return a.size(); }
  double operator()(std::span<const double> x) const;

  friend bool operator==(const AffineFunction&, const AffineFunction&) = default;
};

double dot(std::span<const double> x, std::span<const double> y);
double norm2(std::span<const double> x);
double norm_max(std::span<const double> x);

/// max_i Σ_j |w_ij|.
double norm_inf(const Matrix& w);
/// max_i ‖row_i‖₂, i.e. sup over unit x of ‖Wx‖_∞.
double norm_2inf(const Matrix& w);
/// Largest singular value by power iteration on WᵀW.
double norm_2(const Matrix& w);

}  // namespace gsnet
