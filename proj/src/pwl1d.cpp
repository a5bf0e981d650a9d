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

#include "gsnet/pwl1d.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "gsnet/error.hpp"

namespace gsnet {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kSlopeMergeTol = 1e-12;

bool same_slope(double a, double b) {
  return std::abs(a - b) <= kSlopeMergeTol * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

}  // namespace

Pwl1d::Pwl1d(std::vector<double> breakpoints, std::vector<double> values, double left_slope,
             double right_slope)
    : x_(std::move(breakpoints)), y_(std::move(values)), left_(left_slope), right_(right_slope) {
  if (x_.empty()) throw DimensionError("Pwl1d: at least one breakpoint is required");
  if (x_.size() != y_.size()) throw DimensionError("Pwl1d: breakpoints and values differ in length");
  for (std::size_t i = 0; i < x_.size(); ++i) {
    if (!std::isfinite(x_[i]) || !std::isfinite(y_[i])) throw DomainError("Pwl1d: non-finite entry");
    if (i > 0 && !(x_[i] > x_[i - 1])) throw DomainError("Pwl1d: breakpoints must be strictly increasing");
  }
  if (!std::isfinite(left_) || !std::isfinite(right_)) throw DomainError("Pwl1d: non-finite slope");
}

Pwl1d Pwl1d::from_samples(std::vector<double> breakpoints, std::vector<double> values) {
  if (breakpoints.size() < 2) throw DimensionError("Pwl1d::from_samples: need at least two points");
  const std::size_t n = breakpoints.size();
  const double l = (values[1] - values[0]) / (breakpoints[1] - breakpoints[0]);
  const double r = (values[n - 1] - values[n - 2]) / (breakpoints[n - 1] - breakpoints[n - 2]);
  return Pwl1d(std::move(breakpoints), std::move(values), l, r);
}

double Pwl1d::operator()(double x) const {
  if (x <= x_.front()) return y_.front() + left_ * (x - x_.front());
  if (x >= x_.back()) return y_.back() + right_ * (x - x_.back());
  const auto it = std::upper_bound(x_.begin(), x_.end(), x);
  const std::size_t i = static_cast<std::size_t>(it - x_.begin()) - 1;
  const double t = (x - x_[i]) / (x_[i + 1] - x_[i]);
  return y_[i] + t * (y_[i + 1] - y_[i]);
}

std::vector<double> Pwl1d::chord_slopes() const {
  std::vector<double> s;
  for (std::size_t i = 0; i + 1 < x_.size(); ++i) s.push_back((y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]));
  return s;
}

std::vector<double> Pwl1d::all_slopes() const {
  std::vector<double> s{left_};
  for (double c : chord_slopes()) s.push_back(c);
  s.push_back(right_);
  return s;
}

bool Pwl1d::is_lipschitz(double tol) const {
  for (double s : all_slopes())
    if (std::abs(s) > 1.0 + tol) return false;
  return true;
}

bool Pwl1d::is_convex(double tol) const {
  const auto s = all_slopes();
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] < s[i - 1] - tol) return false;
  return true;
}

bool Pwl1d::is_concave(double tol) const {
  const auto s = all_slopes();
  for (std::size_t i = 1; i < s.size(); ++i)
    if (s[i] > s[i - 1] + tol) return false;
  return true;
}

std::vector<LinearRegion> Pwl1d::regions() const {
  const auto s = all_slopes();
  // Region i spans [x_{i-1}, x_i] with x_{-1} = -inf and x_{m+1} = +inf.
  std::vector<LinearRegion> out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double lo = i == 0 ? -kInf : x_[i - 1];
    const double hi = i + 1 == s.size() ? kInf : x_[i];
    if (!out.empty() && same_slope(out.back().slope, s[i])) {
      out.back().hi = hi;
      continue;
    }
    const std::size_t anchor = i == 0 ? 0 : i - 1;
    out.push_back({lo, hi, s[i], y_[anchor] - s[i] * x_[anchor], 0});
  }
  // Assign distinct piece ids; non-adjacent regions may share a line.
  std::vector<std::size_t> firsts;
  for (auto& r : out) {
    std::size_t id = firsts.size();
    for (std::size_t p = 0; p < firsts.size(); ++p) {
      const auto& q = out[firsts[p]];
      if (same_slope(q.slope, r.slope) &&
          std::abs(q.intercept - r.intercept) <= 1e-10 * std::max(1.0, std::abs(q.intercept))) {
        id = p;
        break;
      }
    }
    if (id == firsts.size()) firsts.push_back(static_cast<std::size_t>(&r - out.data()));
    r.piece = id;
  }
  return out;
}

std::vector<AffineFunction> Pwl1d::pieces() const {
  std::vector<AffineFunction> out;
  for (const auto& r : regions())
    if (r.piece == out.size()) out.push_back({{r.slope}, r.intercept});
  return out;
}

Pwl1d parse_pwl_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::size_t lineno = 0;
  double left = std::numeric_limits<double>::quiet_NaN();
  double right = std::numeric_limits<double>::quiet_NaN();
  std::vector<double> xs, ys;
  bool header_allowed = true;
  auto where = [&] { return "line " + std::to_string(lineno); };
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      for (const char* key : {"left_slope=", "right_slope="}) {
        const auto p = line.find(key);
        if (p == std::string::npos) continue;
        const char* b = line.c_str() + p + std::char_traits<char>::length(key);
        char* e = nullptr;
        const double v = std::strtod(b, &e);
        if (e == b) throw ParseError(std::string("malformed ") + key, where());
        (key[0] == 'l' ? left : right) = v;
      }
      continue;
    }
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw ParseError("expected 'x,f(x)'", where());
    const std::string a = line.substr(0, comma);
    const std::string b = line.substr(comma + 1);
    char* ea = nullptr;
    char* eb = nullptr;
    const double x = std::strtod(a.c_str(), &ea);
    const double y = std::strtod(b.c_str(), &eb);
    const bool numeric = ea != a.c_str() && eb != b.c_str() &&
                         a.find_first_not_of(" \t", ea - a.c_str()) == std::string::npos &&
                         b.find_first_not_of(" \t", eb - b.c_str()) == std::string::npos;
    if (!numeric) {
      if (header_allowed) {
        header_allowed = false;
        continue;
      }
      throw ParseError("expected two numbers", where());
    }
    header_allowed = false;
    xs.push_back(x);
    ys.push_back(y);
  }
  if (xs.size() < 2 && (std::isnan(left) || std::isnan(right)))
    throw ParseError("need two rows, or one row plus both slopes", where());
  if (xs.empty()) throw ParseError("no data rows", where());
  const std::size_t n = xs.size();
  if (std::isnan(left)) left = (ys[1] - ys[0]) / (xs[1] - xs[0]);
  if (std::isnan(right)) right = (ys[n - 1] - ys[n - 2]) / (xs[n - 1] - xs[n - 2]);
  try {
    return Pwl1d(std::move(xs), std::move(ys), left, right);
  } catch (const Error& e) {
    throw ParseError(e.what(), "");
  }
}

std::string to_csv(const Pwl1d& f) {
  std::ostringstream os;
  os.precision(17);
  os << "# left_slope=" << f.left_slope() << " right_slope=" << f.right_slope() << "\n";
  os << "x,f\n";
  for (std::size_t i = 0; i < f.breakpoints().size(); ++i)
    os << f.breakpoints()[i] << ',' << f.values()[i] << '\n';
  return os.str();
}

Pwl1d load_pwl_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_pwl_csv(ss.str());
}

Pwl1d interpolate_uniform(const std::function<double(double)>& f, double lo, double hi, std::size_t n) {
  if (n < 1 || !(hi > lo)) throw DomainError("interpolate_uniform: need n >= 1 and lo < hi");
  std::vector<double> xs(n + 1), ys(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    xs[i] = i == n ? hi : lo + (hi - lo) * double(i) / double(n);
    ys[i] = f(xs[i]);
  }
  return Pwl1d::from_samples(std::move(xs), std::move(ys));
}

}  // namespace gsnet
