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

#include "gsnet/expr.hpp"

#include <cctype>
#include <cmath>
#include <charconv>
#include <fstream>
#include <sstream>

#include "gsnet/error.hpp"

namespace gsnet {

MaxMinExpr::MaxMinExpr(Kind kind, AffineFunction leaf, std::vector<MaxMinExpr> children)
    : kind_(kind), leaf_(std::move(leaf)), children_(std::move(children)), dim_(0) {
  if (kind_ == Kind::Leaf) {
    if (leaf_.a.empty()) throw DimensionError("maxmin leaf: zero input dimension");
    dim_ = leaf_.a.size();
    return;
  }
  if (children_.size() < 2) throw DimensionError("maxmin node: needs at least two children");
  dim_ = children_.front().dim_;
  for (const auto& c : children_)
    if (c.dim_ != dim_) throw DimensionError("maxmin node: children disagree on input dimension");
}

MaxMinExpr MaxMinExpr::leaf(AffineFunction f) { return MaxMinExpr(Kind::Leaf, std::move(f), {}); }
MaxMinExpr MaxMinExpr::max(std::vector<MaxMinExpr> children) {
  return MaxMinExpr(Kind::Max, {}, std::move(children));
}
MaxMinExpr MaxMinExpr::min(std::vector<MaxMinExpr> children) {
  return MaxMinExpr(Kind::Min, {}, std::move(children));
}

const AffineFunction& MaxMinExpr::affine() const {
  if (kind_ != Kind::Leaf) throw Error("maxmin: affine() on an internal node");
  return leaf_;
}

std::size_t MaxMinExpr::leaf_count() const {
  if (is_leaf()) return 1;
  std::size_t n = 0;
  for (const auto& c : children_) n += c.leaf_count();
  return n;
}

std::vector<AffineFunction> MaxMinExpr::leaves() const {
  if (is_leaf()) return {leaf_};
  std::vector<AffineFunction> out;
  for (const auto& c : children_) {
    auto sub = c.leaves();
    out.insert(out.end(), sub.begin(), sub.end());
  }
  return out;
}

std::size_t MaxMinExpr::height() const {
  std::size_t h = 0;
  for (const auto& c : children_) h = std::max(h, c.height() + 1);
  return h;
}

namespace {

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  MaxMinExpr parse_document() {
    MaxMinExpr e = parse_node();
    skip_space();
    if (pos_ != text_.size()) fail("trailing input after expression");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(msg, "line " + std::to_string(line) + ", column " + std::to_string(col));
  }

  void skip_space() {
    while (pos_ < text_.size()) {
      if (std::isspace(static_cast<unsigned char>(text_[pos_]))) {
        ++pos_;
      } else if (text_[pos_] == ';') {
        while (pos_ < text_.size() && text_[pos_] != '\n') ++pos_;
      } else {
        break;
      }
    }
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size()) fail(std::string("unexpected end of input, expected '") + c + "'");
    if (text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string word() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a keyword");
    return text_.substr(start, pos_ - start);
  }

  bool at_number() {
    skip_space();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || c == '.';
  }

  double number() {
    skip_space();
    const char* begin = text_.data() + pos_;
    const char* end = text_.data() + text_.size();
    if (*begin == '+') ++begin;
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(begin, end, v);
    if (ec != std::errc() || !std::isfinite(v)) fail("malformed number");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return v;
  }

  MaxMinExpr parse_node() {
    expect('(');
    const std::size_t head = pos_;
    const std::string kw = word();
    if (kw == "affine") {
      std::vector<double> nums;
      while (at_number()) nums.push_back(number());
      if (nums.size() < 2) fail("affine leaf needs at least one coefficient and an offset");
      expect(')');
      const double b = nums.back();
      nums.pop_back();
      return MaxMinExpr::leaf({std::move(nums), b});
    }
    if (kw != "max" && kw != "min") {
      pos_ = head;
      fail("unknown operator '" + kw + "'");
    }
    std::vector<MaxMinExpr> children;
    for (;;) {
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == ')') break;
      children.push_back(parse_node());
    }
    const std::size_t close = pos_;
    expect(')');
    try {
      return kw == "max" ? MaxMinExpr::max(std::move(children)) : MaxMinExpr::min(std::move(children));
    } catch (const DimensionError& e) {
      pos_ = close;
      fail(e.what());
    }
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

void print(const MaxMinExpr& e, std::ostringstream& os) {
  if (e.is_leaf()) {
    os << "(affine";
    for (double v : e.affine().a) os << ' ' << v;
    os << ' ' << e.affine().b << ')';
    return;
  }
  os << (e.kind() == MaxMinExpr::Kind::Max ? "(max" : "(min");
  for (const auto& c : e.children()) {
    os << ' ';
    print(c, os);
  }
  os << ')';
}

}  // namespace

MaxMinExpr parse_maxmin(const std::string& text) { return Parser(text).parse_document(); }

std::string to_string(const MaxMinExpr& expr) {
  std::ostringstream os;
  os.precision(17);
  print(expr, os);
  return os.str();
}

MaxMinExpr load_maxmin(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_maxmin(ss.str());
}

}  // namespace gsnet
