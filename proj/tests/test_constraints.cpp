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

#include <cmath>
#include <random>

#include "gsnet/constraints.hpp"
#include "gsnet/error.hpp"

using namespace gsnet;

namespace {

Matrix gaussian(std::mt19937_64& rng, std::size_t r, std::size_t c, double scale = 1.0) {
  std::normal_distribution<double> n(0.0, scale);
  Matrix m(r, c);
  for (double& v : m.entries()) v = n(rng);
  return m;
}

GroupSortNetwork random_net(std::mt19937_64& rng, double scale) {
  return GroupSortNetwork(3, 2,
                          {GroupSortLayer{gaussian(rng, 4, 3, scale), {0.1, 0.2, 0.3, 0.4}},
                           GroupSortLayer{gaussian(rng, 4, 4, scale), {0, 0, 0, 0}},
                           GroupSortLayer{gaussian(rng, 1, 4, scale), {0.5}}});
}

double max_entry_gap(const GroupSortNetwork& a, const GroupSortNetwork& b) {
  double gap = 0;
  for (std::size_t l = 0; l < a.depth(); ++l)
    for (std::size_t i = 0; i < a.layer(l).weight.entries().size(); ++i)
      gap = std::max(gap, std::abs(a.layer(l).weight.entries()[i] - b.layer(l).weight.entries()[i]));
  return gap;
}

}  // namespace

TEST_CASE("row projections") {
  CHECK(project_rows_inf(Matrix::from_rows({{2, 0}})) == Matrix::from_rows({{1, 0}}));
  CHECK(project_rows_inf(Matrix::from_rows({{0.5, 0.3}})) == Matrix::from_rows({{0.5, 0.3}}));
  CHECK(project_rows_inf(Matrix::from_rows({{-1, 1}})) == Matrix::from_rows({{-0.5, 0.5}}));
  const Matrix p = project_rows_2inf(Matrix::from_rows({{3, 4}}));
  CHECK(p(0, 0) == doctest::Approx(0.6));
  CHECK(p(0, 1) == doctest::Approx(0.8));
  CHECK(project_rows_2inf(Matrix::from_rows({{0.6, 0.8}})) == Matrix::from_rows({{0.6, 0.8}}));
  CHECK(project_rows_2inf(Matrix(1, 2)) == Matrix(1, 2));
}

TEST_CASE("projection never grows rows and keeps feasible rows bit-exact") {
  std::mt19937_64 rng(4);
  for (int t = 0; t < 500; ++t) {
    const Matrix w = gaussian(rng, 1 + rng() % 5, 1 + rng() % 5, 0.6);
    const Matrix pi = project_rows_inf(w), p2 = project_rows_2inf(w);
    CHECK(norm_inf(pi) <= 1 + 1e-15);
    CHECK(norm_2inf(p2) <= 1 + 1e-15);
    for (std::size_t r = 0; r < w.rows(); ++r) {
      double s = 0, q = 0;
      for (double v : w.row(r)) {
        s += std::abs(v);
        q += v * v;
      }
      for (std::size_t c = 0; c < w.cols(); ++c) {
        CHECK(std::abs(pi(r, c)) <= std::abs(w(r, c)));
        CHECK(std::abs(p2(r, c)) <= std::abs(w(r, c)));
        if (s <= 1) CHECK(pi(r, c) == w(r, c));
        if (std::sqrt(q) <= 1) CHECK(p2(r, c) == w(r, c));
      }
    }
  }
}

TEST_CASE("bjorck fixed point, scaled identity and random matrices") {
  const double c = std::cos(0.7), s = std::sin(0.7);
  const Matrix rot = Matrix::from_rows({{c, -s}, {s, c}});
  const Matrix r2 = bjorck_orthonormalize(rot);
  for (std::size_t i = 0; i < 4; ++i) CHECK(std::abs(r2.entries()[i] - rot.entries()[i]) <= 1e-12);

  const Matrix two = Matrix::diagonal(Vector{2, 2});
  const Matrix id = bjorck_orthonormalize(two);
  CHECK(orthonormality_residual(id) <= 1e-6);
  CHECK(id(0, 0) == doctest::Approx(1.0).epsilon(1e-6));

  std::mt19937_64 rng(8);
  BjorckConfig cfg;
  cfg.iterations = 50;
  for (int t = 0; t < 20; ++t) {
    const Matrix b = bjorck_orthonormalize(gaussian(rng, 8, 8), cfg);
    CHECK(orthonormality_residual(b) < 1e-6);
    CHECK(norm_2(b) <= 1 + 1e-6);
    CHECK(norm_2inf(b) <= 1 + 1e-6);
  }
}

TEST_CASE("bjorck handles tall and wide matrices") {
  std::mt19937_64 rng(9);
  const Matrix tall = bjorck_orthonormalize(gaussian(rng, 7, 3));
  const Matrix wide = bjorck_orthonormalize(gaussian(rng, 3, 7));
  CHECK(tall.rows() == 7);
  CHECK(wide.rows() == 3);
  CHECK(orthonormality_residual(tall) < 1e-6);
  CHECK(orthonormality_residual(wide) < 1e-6);
  CHECK(norm_2(wide) <= 1 + 1e-6);
}

TEST_CASE("bjorck without pre-scaling diverges on large input") {
  BjorckConfig cfg;
  cfg.pre_scale = false;
  CHECK_THROWS_AS(bjorck_orthonormalize(Matrix::diagonal(Vector{40, 1}), cfg), ConvergenceError);
  cfg.beta = 0.9;
  CHECK_THROWS_AS(cfg.validate(), DomainError);
}

TEST_CASE("enforce") {
  std::mt19937_64 rng(10);
  const GroupSortNetwork feasible = enforce(random_net(rng, 1.0), EnforcementMode::RowProjection);
  CHECK(max_entry_gap(enforce(feasible, EnforcementMode::RowProjection), feasible) <= 1e-12);

  const GroupSortNetwork big = random_net(rng, 2.0);
  const GroupSortNetwork rp = enforce(big, EnforcementMode::RowProjection);
  CHECK(check_assumption1(rp, INFINITY, kTrainedTolerance).satisfied);
  CHECK(max_entry_gap(enforce(rp, EnforcementMode::RowProjection), rp) <= 1e-9);

  const GroupSortNetwork bj = enforce(big, EnforcementMode::Bjorck);
  for (const auto& L : bj.layers()) CHECK(norm_2(L.weight) <= 1 + 1e-6);
  CHECK(bj.layer(0).bias == big.layer(0).bias);
}

TEST_CASE("enforced networks pass the empirical Lipschitz test") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(-10, 10);
  for (EnforcementMode mode : {EnforcementMode::RowProjection, EnforcementMode::Bjorck}) {
    for (int t = 0; t < 50; ++t) {
      const GroupSortNetwork net = enforce(random_net(rng, 2.0), mode);
      for (int p = 0; p < 200; ++p) {
        Vector x{u(rng), u(rng), u(rng)}, y{u(rng), u(rng), u(rng)};
        Vector d{x[0] - y[0], x[1] - y[1], x[2] - y[2]};
        CHECK(std::abs(net(x) - net(y)) <= norm2(d) * (1 + 1e-6));
      }
    }
  }
}
