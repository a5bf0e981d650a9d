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

#include "gsnet/error.hpp"
#include "gsnet/pwl1d.hpp"

using namespace gsnet;

TEST_CASE("evaluation inside and beyond the breakpoints") {
  const Pwl1d f({-1, 0, 1}, {1, 0, 1}, -1, 1);
  CHECK(f(-3) == 3);
  CHECK(f(-0.5) == 0.5);
  CHECK(f(0.25) == 0.25);
  CHECK(f(4) == 4);
  CHECK(f.is_lipschitz());
  CHECK(f.is_convex());
  CHECK_FALSE(f.is_concave());
}

TEST_CASE("regions merge collinear neighbours and pieces are distinct") {
  const Pwl1d f({0, 1, 2, 3, 4}, {0, 1, 2, 1, 2}, 1, 1);
  const auto r = f.regions();
  REQUIRE(r.size() == 3);
  CHECK(r[0].hi == 2);
  CHECK(std::isinf(r[0].lo));
  CHECK(r[1].slope == -1);
  CHECK(r[2].piece != r[0].piece);  // parallel but offset
  CHECK(f.pieces().size() == 3);

  const Pwl1d zig({0, 1, 2, 3}, {0, 1, 0, 1}, 1, 1);
  CHECK(zig.pieces().size() == 3);  // x, 2 - x, x - 2
}

TEST_CASE("validation") {
  CHECK_THROWS_AS(Pwl1d({0, 0}, {1, 2}, 0, 0), DomainError);
  CHECK_THROWS_AS(Pwl1d({0, 1}, {1}, 0, 0), DimensionError);
  CHECK_FALSE(Pwl1d({0, 1}, {0, 2}, 0, 0).is_lipschitz());
  CHECK_FALSE(Pwl1d({0, 1}, {0, 1}, 0, 1.5).is_lipschitz());
}

TEST_CASE("csv round trip and slope comment") {
  const Pwl1d f = parse_pwl_csv("# left_slope=-1 right_slope=0.5\nx,f\n-1,1\n0,0\n2,1\n");
  CHECK(f.left_slope() == -1);
  CHECK(f.right_slope() == 0.5);
  CHECK(f.breakpoints().size() == 3);
  const Pwl1d g = parse_pwl_csv(to_csv(f));
  CHECK(g.breakpoints() == f.breakpoints());
  CHECK(g.values() == f.values());
  CHECK(g.left_slope() == f.left_slope());

  const Pwl1d h = parse_pwl_csv("0,0\n1,1\n3,0\n");
  CHECK(h.left_slope() == 1);
  CHECK(h.right_slope() == -0.5);
}

TEST_CASE("csv errors name the line") {
  try {
    parse_pwl_csv("x,f\n0,0\n1,abc\n");
    FAIL("accepted");
  } catch (const ParseError& e) {
    CHECK(e.where() == "line 3");
  }
  CHECK_THROWS_AS(parse_pwl_csv(""), ParseError);
  CHECK_THROWS_AS(parse_pwl_csv("0,0,0\n"), ParseError);
}

TEST_CASE("uniform interpolation") {
  const Pwl1d f = interpolate_uniform([](double x) { return x * x; }, 0, 1, 4);
  CHECK(f.breakpoints().size() == 5);
  CHECK(f(0.5) == 0.25);
  CHECK(f(0.375) == doctest::Approx((0.0625 + 0.25) / 2));
}
