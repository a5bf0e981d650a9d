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
#include <string>
#include <vector>

#include "gsnet/core.hpp"

namespace gsnet {

/// Lattice expression over affine leaves: Leaf | Max(children) | Min(children).
/// Internal nodes have at least two children and all leaves share one input
/// dimension; both are checked on construction.
class MaxMinExpr {
 public:
  enum class Kind { Leaf, Max, Min };

  static MaxMinExpr leaf(AffineFunction f);
  static MaxMinExpr max(std::vector<MaxMinExpr> children);
  static MaxMinExpr min(std::vector<MaxMinExpr> children);

  Kind kind() const noexcept { return kind_; }
  bool is_leaf() const noexcept { return kind_ == Kind::Leaf; }
  const AffineFunction& affine() const;
  const std::vector<MaxMinExpr>& children() const noexcept { return children_; }

  std::size_t input_dim() const noexcept { return dim_; }
  std::size_t leaf_count() const;
  /// Leaves in left-to-right order.
  std::vector<AffineFunction> leaves() const;
  /// Nesting depth; a leaf has height 0.
  std::size_t height() const;

  friend bool operator==(const MaxMinExpr&, const MaxMinExpr&) = default;

 private:
  MaxMinExpr(Kind kind, AffineFunction leaf, std::vector<MaxMinExpr> children);

  Kind kind_;
  AffineFunction leaf_;
  std::vector<MaxMinExpr> children_;
  std::size_t dim_;
};

/// Prefix text form, e.g. `(max (min (affine 1 0) (affine -1 1)) (affine 0 0))`
/// where `(affine a_1 … a_d b)` is a leaf. `;` starts a comment to end of line.
/// Throws ParseError with "line L, column C".
MaxMinExpr parse_maxmin(const std::string& text);
std::string to_string(const MaxMinExpr& expr);

MaxMinExpr load_maxmin(const std::string& path);

}  // namespace gsnet
