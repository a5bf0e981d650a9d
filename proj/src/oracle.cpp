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

#include "gsnet/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <tuple>
#include <utility>

#include "gsnet/error.hpp"

namespace gsnet {

DiscreteDistribution::DiscreteDistribution(std::vector<Vector> points, std::vector<double> weights)
    : points_(std::move(points)), weights_(std::move(weights)) {
  if (points_.empty()) throw DimensionError("distribution: empty support");
  if (points_.size() != weights_.size()) throw DimensionError("distribution: points and weights differ in length");
  const std::size_t d = points_.front().size();
  if (d == 0) throw DimensionError("distribution: zero-dimensional points");
  double total = 0.0;
  for (std::size_t i = 0; i < points_.size(); ++i) {
    if (points_[i].size() != d) throw DimensionError("distribution: inconsistent point dimension");
    for (double v : points_[i])
      if (!std::isfinite(v)) throw DomainError("distribution: non-finite coordinate");
    if (!(weights_[i] >= 0.0) || !std::isfinite(weights_[i])) throw DomainError("distribution: negative weight");
    total += weights_[i];
  }
  if (std::abs(total - 1.0) > 1e-12) throw DomainError("distribution: weights must sum to one");
}

DiscreteDistribution DiscreteDistribution::uniform(std::vector<Vector> points) {
  const std::size_t n = points.size();
  if (n == 0) throw DimensionError("distribution: empty support");
  return DiscreteDistribution(std::move(points), std::vector<double>(n, 1.0 / double(n)));
}

double eval_maxmin(const MaxMinExpr& expr, std::span<const double> x) {
  if (x.size() != expr.input_dim()) throw DimensionError("eval_maxmin: input dimension mismatch");
  switch (expr.kind()) {
    case MaxMinExpr::Kind::Leaf:
      return expr.affine()(x);
    case MaxMinExpr::Kind::Max: {
      double best = -std::numeric_limits<double>::infinity();
      for (const auto& c : expr.children()) best = std::max(best, eval_maxmin(c, x));
      return best;
    }
    case MaxMinExpr::Kind::Min: {
      double best = std::numeric_limits<double>::infinity();
      for (const auto& c : expr.children()) best = std::min(best, eval_maxmin(c, x));
      return best;
    }
  }
  return 0.0;
}

namespace {

// Masses as integers over a common denominator when the weights allow it.
bool rationalize(const std::vector<double>& a, const std::vector<double>& b, std::vector<double>& ia,
                 std::vector<double>& ib, double& denom) {
  const std::size_t l = std::lcm(a.size(), b.size());
  if (l > (std::size_t(1) << 20)) return false;
  denom = double(l);
  ia.resize(a.size());
  ib.resize(b.size());
  auto convert = [&](const std::vector<double>& w, std::vector<double>& out) {
    for (std::size_t i = 0; i < w.size(); ++i) {
      const double scaled = w[i] * denom;
      const double r = std::round(scaled);
      if (std::abs(scaled - r) > 1e-9) return false;
      out[i] = r;
    }
    return true;
  };
  if (!convert(a, ia) || !convert(b, ib)) return false;
  return std::accumulate(ia.begin(), ia.end(), 0.0) == std::accumulate(ib.begin(), ib.end(), 0.0);
}

}  // namespace

TransportResult solve_transport(const DiscreteDistribution& mu, const DiscreteDistribution& nu) {
  if (mu.dim() != nu.dim()) throw DimensionError("transport: distributions differ in dimension");
  const std::size_t n = mu.size();
  const std::size_t m = nu.size();
  std::vector<double> cost(n * m);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      double s = 0.0;
      for (std::size_t d = 0; d < mu.dim(); ++d) {
        const double t = mu.points()[i][d] - nu.points()[j][d];
        s += t * t;
      }
      cost[i * m + j] = std::sqrt(s);
    }

  TransportResult res;
  std::vector<double> supply, demand;
  double denom = 1.0;
  res.integral = rationalize(mu.weights(), nu.weights(), supply, demand, denom);
  double eps = 0.0;
  if (!res.integral) {
    supply = mu.weights();
    demand = nu.weights();
    denom = 1.0;
    eps = 1e-15;
  }

  constexpr double kInf = std::numeric_limits<double>::infinity();
  // Nodes 0..n-1 are sources, n..n+m-1 sinks. Reduced cost of i→j is
  // c_ij + pot_i − pot_{n+j} ≥ 0; reverse arcs exist where flow > 0.
  std::vector<double> flow(n * m, 0.0);
  std::vector<double> pot(n + m, 0.0);
  for (std::size_t j = 0; j < m; ++j) {
    double best = kInf;
    for (std::size_t i = 0; i < n; ++i) best = std::min(best, cost[i * m + j]);
    pot[n + j] = best;
  }
  std::vector<double> dist(n + m);
  std::vector<std::size_t> parent(n + m);
  std::vector<char> done(n + m);
  const std::size_t none = std::numeric_limits<std::size_t>::max();

  for (;;) {
    double remaining = 0.0;
    for (double s : supply) remaining += s;
    if (remaining <= eps * double(n)) break;

    std::fill(dist.begin(), dist.end(), kInf);
    std::fill(parent.begin(), parent.end(), none);
    std::fill(done.begin(), done.end(), 0);
    for (std::size_t i = 0; i < n; ++i)
      if (supply[i] > eps) dist[i] = 0.0;

    std::size_t target = none;
    for (;;) {
      std::size_t u = none;
      double du = kInf;
      for (std::size_t v = 0; v < n + m; ++v)
        if (!done[v] && dist[v] < du) {
          du = dist[v];
          u = v;
        }
      if (u == none) break;
      done[u] = 1;
      if (u >= n && demand[u - n] > eps) {
        target = u;
        break;
      }
      if (u < n) {
        for (std::size_t j = 0; j < m; ++j) {
          const std::size_t v = n + j;
          if (done[v]) continue;
          const double nd = du + std::max(0.0, cost[u * m + j] + pot[u] - pot[v]);
          if (nd < dist[v]) {
            dist[v] = nd;
            parent[v] = u;
          }
        }
      } else {
        const std::size_t j = u - n;
        for (std::size_t i = 0; i < n; ++i) {
          if (done[i] || flow[i * m + j] <= eps) continue;
          const double nd = du + std::max(0.0, -cost[i * m + j] + pot[u] - pot[i]);
          if (nd < dist[i]) {
            dist[i] = nd;
            parent[i] = u;
          }
        }
      }
    }
    if (target == none) throw Error("transport: no augmenting path (inconsistent masses)");

    const double dt = dist[target];
    for (std::size_t v = 0; v < n + m; ++v) pot[v] += std::min(dist[v], dt);

    double push = demand[target - n];
    std::size_t v = target;
    while (parent[v] != none) {
      const std::size_t p = parent[v];
      if (p >= n) push = std::min(push, flow[v * m + (p - n)]);  // reverse arc sink p → source v
      v = p;
    }
    push = std::min(push, supply[v]);

    demand[target - n] -= push;
    supply[v] -= push;
    v = target;
    while (parent[v] != none) {
      const std::size_t p = parent[v];
      if (p < n) {
        flow[p * m + (v - n)] += push;
      } else {
        flow[v * m + (p - n)] -= push;
      }
      v = p;
    }
    ++res.augmentations;
  }

  double primal = 0.0;
  for (std::size_t k = 0; k < n * m; ++k) primal += flow[k] * cost[k];
  res.cost = primal / denom;

  // Dual: α_i = −pot_i, β_j = c-transform of α (feasible by construction).
  std::vector<double> alpha(n);
  for (std::size_t i = 0; i < n; ++i) alpha[i] = -pot[i];
  double dual = 0.0;
  for (std::size_t i = 0; i < n; ++i) dual += mu.weights()[i] * alpha[i];
  for (std::size_t j = 0; j < m; ++j) {
    double beta = kInf;
    for (std::size_t i = 0; i < n; ++i) beta = std::min(beta, cost[i * m + j] - alpha[i]);
    dual += nu.weights()[j] * beta;
  }
  res.dual_value = dual;
  res.plan.resize(n * m);
  for (std::size_t k = 0; k < n * m; ++k) res.plan[k] = flow[k] / denom;
  return res;
}

double wasserstein1_discrete(const DiscreteDistribution& mu, const DiscreteDistribution& nu) {
  // Solve in a fixed argument order so the result is bitwise symmetric.
  const auto key = [](const DiscreteDistribution& d) { return std::tie(d.points(), d.weights()); };
  const bool swap = std::make_pair(nu.size(), key(nu)) < std::make_pair(mu.size(), key(mu));
  const TransportResult r = swap ? solve_transport(nu, mu) : solve_transport(mu, nu);
  if (std::abs(r.cost - r.dual_value) > 1e-9 * std::max(1.0, r.cost)) {
    throw CertificateError("wasserstein1_discrete: primal/dual gap " + std::to_string(r.cost - r.dual_value));
  }
  return r.cost;
}

std::size_t count_ordered_subdomains_1d(std::span<const AffineFunction> lines) {
  std::vector<double> xs;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (lines[i].dim() != 1) throw DimensionError("count_ordered_subdomains_1d: lines must be 1-D");
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const double da = lines[i].a[0] - lines[j].a[0];
      if (da == 0.0) continue;  // parallel or identical
      xs.push_back((lines[j].b - lines[i].b) / da);
    }
  }
  std::sort(xs.begin(), xs.end());
  std::size_t distinct = 0;
  double last = 0.0;
  for (double x : xs) {
    if (distinct == 0 || x - last > 1e-10 * std::max(1.0, std::abs(x))) {
      ++distinct;
      last = x;
    }
  }
  return distinct + 1;
}

}  // namespace gsnet
