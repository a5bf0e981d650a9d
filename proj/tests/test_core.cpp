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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>
#include <random>

#include "gsnet/core.hpp"
#include "gsnet/error.hpp"

using namespace gsnet;

namespace {

Matrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c) {
  std::normal_distribution<double> n;
  Matrix m(r, c);
  for (double& v : m.entries()) v = n(rng);
  return m;
}

// largest singular value through an SVD, independent of power iteration
double svd_norm(const Matrix& m) {
  Eigen::MatrixXd e(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) e(i, j) = m(i, j);
  return Eigen::JacobiSVD<Eigen::MatrixXd>(e).singularValues()(0);
}

}  // namespace

TEST_CASE("matrix construction validates shape and finiteness") {
  CHECK_THROWS_AS(Matrix(2, 2, std::vector<double>{1, 2, 3}), DimensionError);
  CHECK_THROWS_AS(Matrix(1, 2, std::vector<double>{1, NAN}), DomainError);
  const Matrix m = Matrix::from_rows({{1, 2}, {3, 4}});
  CHECK(m(1, 0) == 3);
  CHECK(m.transpose()(0, 1) == 3);
  CHECK(Matrix::identity(3) == Matrix::diagonal(Vector{1, 1, 1}));
}

TEST_CASE("norm_inf") {
  CHECK(norm_inf(Matrix::identity(3)) == 1.0);
  CHECK(norm_inf(Matrix(2, 4)) == 0.0);
  CHECK(norm_inf(Matrix::from_rows({{1, -2}, {0, 3}})) == 3.0);
  CHECK_THROWS_AS(norm_inf(Matrix()), DimensionError);
}

TEST_CASE("norm_2inf") {
  CHECK(norm_2inf(Matrix::identity(2)) == 1.0);
  CHECK(norm_2inf(Matrix::from_rows({{3, 4}})) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK(norm_2inf(Matrix::from_rows({{1, 0}, {0.6, 0.8}})) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(norm_2inf(Matrix()), DimensionError);
}

TEST_CASE("norm_2") {
  CHECK(norm_2(Matrix::diagonal(Vector{2, 0.5})) == doctest::Approx(2.0).epsilon(1e-8));
  CHECK(norm_2(Matrix(3, 3)) == 0.0);
  CHECK(norm_2(Matrix::from_rows({{0, 1}, {0, 0}})) == doctest::Approx(1.0).epsilon(1e-8));
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    const Matrix m = random_matrix(rng, 1 + rng() % 7, 1 + rng() % 7);
    CHECK(norm_2(m) == doctest::Approx(svd_norm(m)).epsilon(1e-8));
  }
}

TEST_CASE("norm inequalities on random matrices") {
  std::mt19937_64 rng(3);
  std::normal_distribution<double> n;
  for (int t = 0; t < 1000; ++t) {
    const std::size_t r = 1 + rng() % 6, c = 1 + rng() % 6;
    const Matrix w = random_matrix(rng, r, c);
    Vector x(c);
    for (double& v : x) v = n(rng);
    const double nx = norm2(x);
    for (double& v : x) v /= nx;
    const Vector y = w.apply(x);
    CHECK(norm_max(y) <= norm_inf(w) * norm_max(x) + 1e-12);
    CHECK(norm_max(y) <= norm_2inf(w) * norm2(x) + 1e-12);
    CHECK(norm_2inf(w) <= norm_2(w) * (1 + 1e-8));
  }
}

TEST_CASE("norms are deterministic") {
  std::mt19937_64 rng(5);
  const Matrix w = random_matrix(rng, 9, 4);
  CHECK(norm_2(w) == norm_2(w));
  CHECK(norm_inf(w) == norm_inf(w));
  CHECK(norm_2inf(w) == norm_2inf(w));
}

TEST_CASE("affine function evaluation") {
  const AffineFunction f{{1.0, -2.0}, 0.5};
  const Vector x{3.0, 1.0};
  CHECK(f(x) == 1.5);
  CHECK(f.dim() == 2);
  CHECK(dot(x, x) == 10.0);
}
