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

#include "gsnet/builder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include "gsnet/error.hpp"
#include "gsnet/oracle.hpp"

namespace gsnet {
namespace {

// A network under construction together with its running gadget counts.
struct Piece {
  std::vector<GroupSortLayer> layers;
  std::size_t gadgets = 0;
  std::size_t passthroughs = 0;
};

void require_grouping(std::size_t k) {
  if (k < 2) throw DomainError("grouping size must be at least 2");
}

double gadget_bound(std::size_t m, std::size_t k) {
  // internal nodes of a complete k-ary tree of height ⌈log_k m⌉
  const std::size_t n = ceil_log(m, k);
  return (std::pow(static_cast<double>(k), static_cast<double>(n)) - 1.0) / static_cast<double>(k - 1);
}

std::size_t to_count(double v) {
  if (!(v < 1.8e19)) return std::numeric_limits<std::size_t>::max();
  return static_cast<std::size_t>(std::llround(std::floor(v + 1e-9)));
}

// Moves the output one layer down: the final row is copied into a full sort
// group and read back by the first selector.
void pad_once(std::vector<GroupSortLayer>& layers, std::size_t k) {
  GroupSortLayer& last = layers.back();
  const std::size_t cols = last.weight.cols();
  Matrix hidden(k, cols);
  for (std::size_t r = 0; r < k; ++r)
    for (std::size_t c = 0; c < cols; ++c) hidden(r, c) = last.weight(0, c);
  Vector bias(k, last.bias[0]);
  last = GroupSortLayer{std::move(hidden), std::move(bias)};
  Matrix selector(1, k);
  selector(0, 0) = 1.0;
  layers.push_back(GroupSortLayer{std::move(selector), Vector{0.0}});
}

void pad_piece(Piece& p, std::size_t depth, std::size_t k) {
  while (p.layers.size() < depth) {
    pad_once(p.layers, k);
    ++p.passthroughs;
  }
}

// One sort group over m ≤ k children of equal depth.
Piece gadget(std::vector<Piece> children, Extremum kind, std::size_t k) {
  const std::size_t m = children.size();
  const std::size_t q = children.front().layers.size();
  Piece out;
  for (const Piece& c : children) {
    out.gadgets += c.gadgets;
    out.passthroughs += c.passthroughs;
  }
  for (std::size_t l = 0; l < q; ++l) {
    std::size_t rows = 0;
    std::size_t cols = 0;
    for (const Piece& c : children) {
      rows += c.layers[l].weight.rows();
      cols += c.layers[l].weight.cols();
    }
    if (l == 0) cols = children.front().layers[0].weight.cols();
    const bool last = l + 1 == q;
    const std::size_t out_rows = last ? k : rows;
    Matrix w(out_rows, cols);
    Vector b(out_rows, 0.0);
    std::size_t r0 = 0;
    std::size_t c0 = 0;
    for (const Piece& c : children) {
      const GroupSortLayer& L = c.layers[l];
      for (std::size_t r = 0; r < L.weight.rows(); ++r) {
        for (std::size_t j = 0; j < L.weight.cols(); ++j) w(r0 + r, c0 + j) = L.weight(r, j);
        b[r0 + r] = L.bias[r];
      }
      r0 += L.weight.rows();
      if (l > 0) c0 += L.weight.cols();
    }
    if (last) {
      // pad the group with copies of the last child's output
      for (std::size_t r = m; r < k; ++r) {
        for (std::size_t j = 0; j < cols; ++j) w(r, j) = w(m - 1, j);
        b[r] = b[m - 1];
      }
    }
    out.layers.push_back(GroupSortLayer{std::move(w), std::move(b)});
  }
  Matrix selector(1, k);
  selector(0, kind == Extremum::Max ? 0 : k - 1) = 1.0;
  out.layers.push_back(GroupSortLayer{std::move(selector), Vector{0.0}});
  ++out.gadgets;
  return out;
}

std::size_t max_depth(const std::vector<Piece>& items) {
  std::size_t q = 0;
  for (const Piece& p : items) q = std::max(q, p.layers.size());
  return q;
}

Piece build_tree(std::vector<Piece> items, Extremum kind, std::size_t k) {
  const std::size_t m = items.size();
  if (m == 1) return std::move(items.front());
  const std::size_t n = ceil_log(m, k);
  if (n > 1) {
    std::size_t chunk = 1;
    for (std::size_t i = 0; i + 1 < n; ++i) chunk *= k;
    std::vector<Piece> grouped;
    for (std::size_t start = 0; start < m; start += chunk) {
      const std::size_t stop = std::min(m, start + chunk);
      std::vector<Piece> part(std::make_move_iterator(items.begin() + static_cast<std::ptrdiff_t>(start)),
                              std::make_move_iterator(items.begin() + static_cast<std::ptrdiff_t>(stop)));
      grouped.push_back(build_tree(std::move(part), kind, k));
    }
    items = std::move(grouped);
  }
  const std::size_t q = max_depth(items);
  for (Piece& p : items) pad_piece(p, q, k);
  return gadget(std::move(items), kind, k);
}

Piece leaf_piece(const AffineFunction& f) {
  return Piece{{GroupSortLayer{Matrix(1, f.dim(), f.a), Vector{f.b}}}, 0, 0};
}

struct RecursiveBound {
  std::size_t depth;
  double size;
};

RecursiveBound expression_bound(const MaxMinExpr& e, std::size_t k) {
  if (e.is_leaf()) return {1, 0.0};
  RecursiveBound out{0, 0.0};
  for (const MaxMinExpr& c : e.children()) {
    const RecursiveBound b = expression_bound(c, k);
    out.depth = std::max(out.depth, b.depth);
    out.size += b.size;
  }
  out.depth += ceil_log(e.children().size(), k);
  out.size += gadget_bound(e.children().size(), k);
  return out;
}

Piece compile_node(const MaxMinExpr& e, std::size_t k) {
  if (e.is_leaf()) return leaf_piece(e.affine());
  std::vector<Piece> items;
  items.reserve(e.children().size());
  for (const MaxMinExpr& c : e.children()) items.push_back(compile_node(c, k));
  return build_tree(std::move(items), e.kind() == MaxMinExpr::Kind::Max ? Extremum::Max : Extremum::Min, k);
}

CompiledNetwork finish(Piece p, std::size_t dim, std::size_t k, std::size_t depth_bound, double size_bound,
                       std::string rule) {
  GroupSortNetwork net(dim, k, std::move(p.layers));
  SizeCertificate cert;
  cert.depth = net.depth();
  cert.gadget_count = p.gadgets;
  cert.passthrough_count = p.passthroughs;
  cert.neuron_count = net.neuron_count();
  cert.depth_bound = depth_bound;
  cert.size_bound = to_count(size_bound);
  cert.bound_rule = std::move(rule);
  return CompiledNetwork{std::move(net), std::move(cert)};
}

Piece piece_of(const GroupSortNetwork& net) { return Piece{net.layers(), 0, 0}; }

double scale_of(double v) { return std::max(1.0, std::abs(v)); }

// Points where a 1-D max–min candidate is compared with f.
std::vector<double> validation_points(const Pwl1d& f, const std::vector<AffineFunction>& pieces) {
  const auto& x = f.breakpoints();
  const double lo = x.front();
  const double hi = x.back();
  const double span = std::max(1.0, hi - lo);
  std::vector<double> pts(x.begin(), x.end());
  for (std::size_t i = 0; i + 1 < x.size(); ++i) pts.push_back(0.5 * (x[i] + x[i + 1]));
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    for (std::size_t j = i + 1; j < pieces.size(); ++j) {
      const double ds = pieces[i].a[0] - pieces[j].a[0];
      if (std::abs(ds) < 1e-14) continue;
      const double xc = (pieces[j].b - pieces[i].b) / ds;
      if (xc > lo - 2 * span && xc < hi + 2 * span) pts.push_back(xc);
    }
  }
  constexpr int kGrid = 2000;
  for (int i = 0; i <= kGrid; ++i) pts.push_back(lo - span + (hi - lo + 2 * span) * i / kGrid);
  pts.push_back(lo - 10 * span);
  pts.push_back(hi + 10 * span);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

// Is line i ≥ line j over the whole region?
bool dominates_on(const AffineFunction& li, const AffineFunction& lj, const LinearRegion& r) {
  const double si = li.a[0];
  const double sj = lj.a[0];
  auto ok_at = [&](double x) {
    const double diff = (si * x + li.b) - (sj * x + lj.b);
    return diff >= -1e-11 * scale_of(sj * x + lj.b);
  };
  if (std::isfinite(r.lo) && !ok_at(r.lo)) return false;
  if (std::isfinite(r.hi) && !ok_at(r.hi)) return false;
  if (!std::isfinite(r.lo) && si > sj + 1e-12) return false;
  if (!std::isfinite(r.hi) && si < sj - 1e-12) return false;
  return true;
}

double eval_terms(const std::vector<std::vector<std::size_t>>& terms, const std::vector<AffineFunction>& pieces,
                  double x) {
  double best = -std::numeric_limits<double>::infinity();
  for (const auto& t : terms) {
    double v = std::numeric_limits<double>::infinity();
    for (std::size_t i : t) v = std::min(v, pieces[i].a[0] * x + pieces[i].b);
    best = std::max(best, v);
  }
  return best;
}

bool terms_match(const std::vector<std::vector<std::size_t>>& terms, const std::vector<AffineFunction>& pieces,
                 const Pwl1d& f, const std::vector<double>& pts) {
  for (double x : pts) {
    const double fx = f(x);
    if (std::abs(eval_terms(terms, pieces, x) - fx) > 1e-9 * scale_of(fx)) return false;
  }
  return true;
}

void normalize_terms(std::vector<std::vector<std::size_t>>& terms) {
  for (auto& t : terms) {
    std::sort(t.begin(), t.end());
    t.erase(std::unique(t.begin(), t.end()), t.end());
  }
  std::vector<std::vector<std::size_t>> kept;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    bool drop = false;
    for (std::size_t j = 0; j < terms.size() && !drop; ++j) {
      if (i == j) continue;
      // a superset has a smaller min and is never the max
      const bool subset = std::includes(terms[i].begin(), terms[i].end(), terms[j].begin(), terms[j].end());
      if (subset && (terms[i] != terms[j] || j < i)) drop = true;
    }
    if (!drop) kept.push_back(terms[i]);
  }
  terms = std::move(kept);
}

// Sampled fallback for ill-conditioned inputs: per region, the largest set of
// pieces whose min stays above f on the region and below f everywhere.
std::vector<std::vector<std::size_t>> repair_terms(const Pwl1d& f, const std::vector<AffineFunction>& pieces,
                                                   const std::vector<LinearRegion>& regions,
                                                   const std::vector<double>& pts) {
  const std::size_t mf = pieces.size();
  std::vector<std::vector<std::size_t>> terms;
  for (const LinearRegion& r : regions) {
    std::vector<double> local;
    for (double x : pts)
      if (x >= r.lo && x <= r.hi) local.push_back(x);
    std::vector<std::size_t> best;
    for (std::uint32_t mask = 0; mask < (1u << mf); ++mask) {
      if (!(mask & (1u << r.piece))) continue;
      std::vector<std::size_t> s;
      for (std::size_t i = 0; i < mf; ++i)
        if (mask & (1u << i)) s.push_back(i);
      if (s.size() <= best.size()) continue;
      auto min_at = [&](double x) {
        double v = std::numeric_limits<double>::infinity();
        for (std::size_t i : s) v = std::min(v, pieces[i].a[0] * x + pieces[i].b);
        return v;
      };
      bool ok = true;
      for (double x : local)
        if (min_at(x) < f(x) - 1e-9 * scale_of(f(x))) ok = false;
      for (std::size_t t = 0; ok && t < pts.size(); ++t)
        if (min_at(pts[t]) > f(pts[t]) + 1e-9 * scale_of(f(pts[t]))) ok = false;
      if (ok) best = std::move(s);
    }
    if (best.empty()) throw CertificateError("max-min decomposition failed validation");
    terms.push_back(std::move(best));
  }
  return terms;
}

MaxMinExpr term_expr(const std::vector<std::size_t>& t, const std::vector<AffineFunction>& pieces) {
  if (t.size() == 1) return MaxMinExpr::leaf(pieces[t.front()]);
  std::vector<MaxMinExpr> leaves;
  for (std::size_t i : t) leaves.push_back(MaxMinExpr::leaf(pieces[i]));
  return MaxMinExpr::min(std::move(leaves));
}

std::size_t outer_arity(const MaxMinExpr& e) {
  return e.kind() == MaxMinExpr::Kind::Max ? e.children().size() : 1;
}

void require_lipschitz(const Pwl1d& f) {
  if (!f.is_lipschitz()) {
    std::ostringstream os;
    double worst = std::max(std::abs(f.left_slope()), std::abs(f.right_slope()));
    for (double s : f.chord_slopes()) worst = std::max(worst, std::abs(s));
    os << "function is not 1-Lipschitz (steepest slope " << worst << ")";
    throw CertificateError(os.str());
  }
}

double pow_size(std::size_t k, std::size_t n) {
  return std::pow(static_cast<double>(k), static_cast<double>(n));
}

}  // namespace

std::size_t ceil_log(std::size_t m, std::size_t k) {
  if (m == 0) throw DomainError("ceil_log of zero");
  require_grouping(k);
  std::size_t n = 0;
  std::size_t p = 1;
  while (p < m) {
    if (p > std::numeric_limits<std::size_t>::max() / k) return n + 1;
    p *= k;
    ++n;
  }
  return n;
}

GroupSortNetwork pad_depth(const GroupSortNetwork& net, std::size_t target_depth) {
  if (net.activation() != Activation::GroupSort)
    throw DomainError("passthrough padding needs the GroupSort activation");
  if (target_depth < net.depth()) throw DomainError("target depth below current depth");
  std::vector<GroupSortLayer> layers = net.layers();
  while (layers.size() < target_depth) pad_once(layers, net.grouping_size());
  return GroupSortNetwork(net.input_dim(), net.grouping_size(), std::move(layers));
}

CompiledNetwork combine_extremum(std::vector<CompiledNetwork> parts, Extremum kind, std::size_t k) {
  require_grouping(k);
  if (parts.empty()) throw DimensionError("combine_extremum needs at least one network");
  const std::size_t dim = parts.front().network.input_dim();
  std::vector<Piece> items;
  std::size_t depth_bound = 0;
  double size_bound = 0;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    const GroupSortNetwork& net = parts[i].network;
    if (net.input_dim() != dim) throw DimensionError("combine_extremum: input dimensions differ");
    if (net.activation() != Activation::GroupSort)
      throw DomainError("combine_extremum: network " + std::to_string(i) + " is not a GroupSort network");
    if (net.depth() > 1 && net.grouping_size() != k)
      throw DimensionError("combine_extremum: network " + std::to_string(i) + " has a different grouping size");
    const ConstraintReport rep = check_assumption1(net);
    if (!rep.satisfied)
      throw ConstraintError("combine_extremum: network " + std::to_string(i) + " violates " + rep.violations());
    Piece p = piece_of(net);
    p.gadgets = parts[i].certificate.gadget_count;
    p.passthroughs = parts[i].certificate.passthrough_count;
    depth_bound = std::max(depth_bound, parts[i].certificate.depth_bound);
    size_bound += static_cast<double>(parts[i].certificate.size_bound);
    items.push_back(std::move(p));
  }
  depth_bound += ceil_log(parts.size(), k);
  size_bound += gadget_bound(parts.size(), k);
  Piece out = build_tree(std::move(items), kind, k);
  return finish(std::move(out), dim, k, depth_bound, size_bound,
                "extremum of m networks: depth max_i q_i + ceil(log_k m), size sum_i s_i + (k^n - 1)/(k - 1)");
}

CompiledNetwork combine_extremum(const std::vector<GroupSortNetwork>& nets, Extremum kind, std::size_t k) {
  std::vector<CompiledNetwork> parts;
  for (const GroupSortNetwork& n : nets) {
    SizeCertificate c;
    c.depth = c.depth_bound = n.depth();
    c.neuron_count = n.neuron_count();
    parts.push_back(CompiledNetwork{n, c});
  }
  return combine_extremum(std::move(parts), kind, k);
}

CompiledNetwork compile_maxmin(const MaxMinExpr& expr, std::size_t k) {
  require_grouping(k);
  const std::vector<AffineFunction> leaves = expr.leaves();
  for (std::size_t i = 0; i < leaves.size(); ++i) {
    const double n = norm2(leaves[i].a);
    if (n > 1.0 + 1e-12) {
      std::ostringstream os;
      os.precision(17);
      os << "leaf " << i << " " << to_string(MaxMinExpr::leaf(leaves[i])) << " has gradient norm " << n
         << " > 1";
      throw ConstraintError(os.str());
    }
  }
  const RecursiveBound b = expression_bound(expr, k);
  return finish(compile_node(expr, k), expr.input_dim(), k, b.depth, b.size,
                "recursive: depth max child + ceil(log_k m), size sum of children + (k^n - 1)/(k - 1)");
}

MaxMinExpr maxmin_from_pwl1d(const Pwl1d& f) {
  require_lipschitz(f);
  const std::vector<AffineFunction> pieces = f.pieces();
  const std::vector<LinearRegion> regions = f.regions();
  if (pieces.size() == 1) return MaxMinExpr::leaf(pieces.front());

  std::vector<std::vector<std::size_t>> terms;
  for (const LinearRegion& r : regions) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < pieces.size(); ++i)
      if (i == r.piece || dominates_on(pieces[i], pieces[r.piece], r)) s.push_back(i);
    terms.push_back(std::move(s));
  }
  normalize_terms(terms);
  const std::vector<double> pts = validation_points(f, pieces);
  if (!terms_match(terms, pieces, f, pts)) {
    if (pieces.size() > 16) throw CertificateError("max-min decomposition failed validation");
    terms = repair_terms(f, pieces, regions, pts);
    normalize_terms(terms);
    if (!terms_match(terms, pieces, f, pts)) throw CertificateError("max-min decomposition failed validation");
  }
  if (terms.size() == 1) return term_expr(terms.front(), pieces);
  std::vector<MaxMinExpr> children;
  for (const auto& t : terms) children.push_back(term_expr(t, pieces));
  return MaxMinExpr::max(std::move(children));
}

CompiledNetwork compile_pwl1d(const Pwl1d& f, std::size_t k, DepthPolicy policy) {
  require_grouping(k);
  const MaxMinExpr expr = maxmin_from_pwl1d(f);
  const std::size_t mf = f.pieces().size();
  const std::size_t M = std::max(outer_arity(expr), mf);
  const std::size_t n1 = ceil_log(mf, k);
  const std::size_t n2 = ceil_log(M, k);
  const std::size_t depth_bound = n1 + n2 + 1;
  double size_bound = 0;
  std::string rule;
  if (k == 2) {
    size_bound = 3.0 * static_cast<double>(mf) * static_cast<double>(M) + static_cast<double>(M) - 1.0;
    rule = "1-D piecewise linear, k = 2: depth ceil(log2 m_f) + ceil(log2 M) + 1, size 3 m_f M + M - 1";
  } else {
    size_bound = static_cast<double>(M) * (pow_size(k, n1) - 1.0) / static_cast<double>(k - 1) +
                 (pow_size(k, n2) - 1.0) / static_cast<double>(k - 1);
    rule = "1-D piecewise linear: depth ceil(log_k m_f) + ceil(log_k M) + 1, size M (k^n1 - 1)/(k - 1) + (k^n2 - 1)/(k - 1)";
  }
  CompiledNetwork c = compile_maxmin(expr, k);
  if (c.network.depth() > depth_bound) throw CertificateError("compiled depth exceeds the construction bound");
  if (policy == DepthPolicy::Canonical && c.network.depth() < depth_bound) {
    const std::size_t extra = depth_bound - c.network.depth();
    c.network = pad_depth(c.network, depth_bound);
    c.certificate.passthrough_count += extra;
    c.certificate.depth = c.network.depth();
    c.certificate.neuron_count = c.network.neuron_count();
  }
  c.certificate.depth_bound = depth_bound;
  c.certificate.size_bound = to_count(size_bound);
  c.certificate.bound_rule = std::move(rule);
  return c;
}

CompiledNetwork convex_pwl1d_to_net(const Pwl1d& f, std::size_t k) {
  require_grouping(k);
  require_lipschitz(f);
  const bool convex = f.is_convex();
  if (!convex && !f.is_concave()) throw ShapeError("function is neither convex nor concave");
  const std::vector<AffineFunction> pieces = f.pieces();
  const std::size_t mf = pieces.size();
  std::vector<MaxMinExpr> leaves;
  for (const AffineFunction& p : pieces) leaves.push_back(MaxMinExpr::leaf(p));
  const MaxMinExpr expr = mf == 1 ? leaves.front()
                          : convex ? MaxMinExpr::max(std::move(leaves))
                                   : MaxMinExpr::min(std::move(leaves));
  CompiledNetwork c = compile_maxmin(expr, k);
  const std::size_t n = ceil_log(mf, k);
  c.certificate.depth_bound = n + 1;
  if (k == 2) {
    const bool pow2 = (mf & (mf - 1)) == 0;
    c.certificate.size_bound = pow2 ? 2 * mf - 1 : 3 * mf - 1;
    c.certificate.bound_rule = "convex 1-D, k = 2: depth ceil(log2 m_f) + 1, size 2 m_f - 1 (power of two) or 3 m_f - 1";
  } else {
    c.certificate.size_bound = to_count((pow_size(k, n) - 1.0) / static_cast<double>(k - 1));
    c.certificate.bound_rule = "convex 1-D: depth ceil(log_k m_f) + 1, size (k^n - 1)/(k - 1)";
  }
  return c;
}

std::size_t interpolation_levels(double epsilon, std::size_t k) {
  require_grouping(k);
  if (!(epsilon > 0) || !std::isfinite(epsilon)) throw DomainError("epsilon must be positive and finite");
  std::size_t n = 0;
  double p = 1.0;
  while (p * epsilon < 1.0 - 1e-12) {
    p *= static_cast<double>(k);
    ++n;
  }
  return n;
}

CompiledNetwork interpolate_lipschitz_1d(const std::function<double(double)>& f, double epsilon, std::size_t k,
                                         DepthPolicy policy) {
  const std::size_t n = interpolation_levels(epsilon, k);
  const double cells = pow_size(k, n);
  if (cells > 1e6) throw DomainError("interpolation grid too large (k^n > 1e6)");
  const std::size_t N = static_cast<std::size_t>(cells);
  std::vector<double> x(N + 1);
  std::vector<double> y(N + 1);
  for (std::size_t i = 0; i <= N; ++i) {
    x[i] = static_cast<double>(i) / static_cast<double>(N);
    y[i] = f(x[i]);
    if (!std::isfinite(y[i])) throw DomainError("sampled function value is not finite");
  }
  for (std::size_t i = 0; i < N; ++i) {
    const double s = (y[i + 1] - y[i]) / (x[i + 1] - x[i]);
    if (std::abs(s) > 1.0 + 1e-9) {
      std::ostringstream os;
      os << "sampled chord on [" << x[i] << ", " << x[i + 1] << "] has slope " << s;
      throw CertificateError(os.str());
    }
  }
  CompiledNetwork c = compile_pwl1d(Pwl1d::from_samples(std::move(x), std::move(y)), k, DepthPolicy::Minimal);
  const std::size_t depth_bound = 2 * n + 1;
  if (policy == DepthPolicy::Canonical && c.network.depth() < depth_bound) {
    const std::size_t extra = depth_bound - c.network.depth();
    c.network = pad_depth(c.network, depth_bound);
    c.certificate.passthrough_count += extra;
    c.certificate.depth = c.network.depth();
    c.certificate.neuron_count = c.network.neuron_count();
  }
  c.certificate.depth_bound = depth_bound;
  c.certificate.size_bound = to_count((pow_size(k, 2 * n) - 1.0) / static_cast<double>(k - 1));
  c.certificate.bound_rule = "interpolation on k^n cells: depth 2n + 1, size (k^{2n} - 1)/(k - 1)";
  return c;
}

TheoryBounds bound_calculator(std::size_t m_f, std::size_t M_f, std::size_t d, std::size_t k, std::size_t q,
                              double epsilon) {
  require_grouping(k);
  if (m_f == 0 || M_f == 0) throw DomainError("piece counts must be positive");
  const double nan = std::numeric_limits<double>::quiet_NaN();
  const double m = static_cast<double>(m_f);
  const double M = static_cast<double>(M_f);
  const double dd = static_cast<double>(d);
  const double kk = static_cast<double>(k);
  TheoryBounds b;
  b.ordered_subdomains_upper = d == 0 ? nan : std::min(std::pow(2.0, m * m / 2.0), std::pow(m, 2.0 * dd) / std::pow(2.0, dd));
  b.maxmin_depth = ceil_log(M_f, 2) + ceil_log(m_f, 2) + 1;
  b.maxmin_size = 3.0 * m * M + M - 1.0;
  b.convex_regions_depth = 2 * ceil_log(m_f, 2) + 1;
  b.convex_regions_size = 3.0 * m * m + m - 1.0;
  b.convex_function_depth = ceil_log(m_f, 2) + 1;
  b.convex_function_size = (m_f & (m_f - 1)) == 0 ? 2.0 * m - 1.0 : 3.0 * m - 1.0;
  b.size_lower_bound = q >= 2 ? 0.5 * static_cast<double>(q - 1) * std::pow(m, 1.0 / static_cast<double>(q - 1)) : nan;
  b.extremum_depth_increase = ceil_log(m_f, k);
  b.extremum_gadgets = gadget_bound(m_f, k);
  b.grouped_depth = 2 * ceil_log(m_f, k) + 1;
  b.grouped_size = (m * m - 1.0) / (kk - 1.0);
  if (epsilon > 0 && std::isfinite(epsilon)) {
    const std::size_t n = interpolation_levels(epsilon, k);
    b.interpolation_depth = 2 * n + 1;
    b.interpolation_convex_depth = n + 1;
    if (d > 0) {
      const double r = 2.0 * std::sqrt(dd) / epsilon;
      b.high_dim_depth_scale = dd * dd * std::log2(r);
      b.high_dim_size_scale = std::pow(r, dd * dd);
      b.high_dim_grouping = static_cast<std::size_t>(std::ceil(r - 1e-12));
      b.high_dim_grouped_size_scale = std::pow(r, dd * dd - 1.0);
    } else {
      b.high_dim_depth_scale = b.high_dim_size_scale = b.high_dim_grouped_size_scale = nan;
    }
  } else {
    b.high_dim_depth_scale = b.high_dim_size_scale = b.high_dim_grouped_size_scale = nan;
  }
  return b;
}

}  // namespace gsnet
