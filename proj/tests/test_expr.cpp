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

#include "gsnet/error.hpp"
#include "gsnet/expr.hpp"

using namespace gsnet;

TEST_CASE("parse and print") {
  const MaxMinExpr e = parse_maxmin("(max (min (affine 1 0) (affine -1 1)) (affine 0 0))");
  CHECK(e.kind() == MaxMinExpr::Kind::Max);
  CHECK(e.children().size() == 2);
  CHECK(e.leaf_count() == 3);
  CHECK(e.height() == 2);
  CHECK(e.input_dim() == 1);
  CHECK(parse_maxmin(to_string(e)) == e);
}

TEST_CASE("comments, whitespace and exponents") {
  const MaxMinExpr e = parse_maxmin("; hat\n(min\n  (affine 1e0 -0.5e-1 0)  ; left\n  (affine -1 0 2.5))\n");
  CHECK(e.input_dim() == 2);
  CHECK(e.children()[0].affine().a[1] == -0.05);
  CHECK(e.children()[1].affine().b == 2.5);
}

TEST_CASE("a bare leaf is an expression") {
  const MaxMinExpr e = parse_maxmin("(affine 0.5 1)");
  CHECK(e.is_leaf());
  CHECK(e.affine().a == Vector{0.5});
}

TEST_CASE("malformed input reports line and column") {
  for (const char* text : {"(max (affine 1 0)", "(max (affine 1 0))", "(foo 1)", "(affine)", "(max (affine 1 0) (affine 1 2 3))",
                           "(affine 1 x)", "", "(affine 1 0) trailing"}) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse_maxmin(text), ParseError);
  }
  try {
    parse_maxmin("(max\n  (affine 1 0)\n  (affine 1 q))");
    FAIL("accepted");
  } catch (const ParseError& e) {
    CHECK(e.where().find("line 3") == 0);
  }
}

TEST_CASE("constructors validate arity and dimension") {
  const MaxMinExpr a = MaxMinExpr::leaf({{1.0}, 0.0});
  const MaxMinExpr b = MaxMinExpr::leaf({{1.0, 2.0}, 0.0});
  CHECK_THROWS(MaxMinExpr::max({a}));
  CHECK_THROWS(MaxMinExpr::min({a, b}));
}
