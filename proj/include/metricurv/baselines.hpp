#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <optional>
#include <span>
#include <vector>

#include "metricurv/errors.hpp"
#include "metricurv/metric.hpp"
#include "metricurv/network.hpp"
#include "metricurv/paths.hpp"
#include "metricurv/transport.hpp"

namespace metricurv {

/// Augmented Forman-Ricci curvature 4 - deg(u) - deg(v) + 3 t(e) of an
/// undirected edge, t(e) the number of adjacent triangles. Weights are
/// ignored.
inline double forman_augmented(const Network& net, EdgeId e) {
  if (net.directed()) throw UnsupportedError("augmented Forman-Ricci needs an undirected network");
  const Edge& ed = net.edge(e);
  const auto triangles = static_cast<double>(enumerate_triangles(net, e).size());
  return 4.0 - static_cast<double>(net.degree(ed.u)) - static_cast<double>(net.degree(ed.v)) +
         3.0 * triangles;
}

/// Ollivier-Ricci curvature 1 - W1(m_u, m_v).
///
/// m_x keeps `idleness` at x and spreads the rest uniformly over the
/// neighbours of x; W1 is the exact optimal transport cost under
/// shortest-path distances. On the combinatorial metric with zero idleness
/// the problem is scaled to integers and solved exactly.
inline double ollivier(const Network& net, EdgeId e, double idleness = 0.0,
                       const MetricContext& ctx = {}) {
  if (net.directed()) throw UnsupportedError("Ollivier-Ricci needs an undirected network");
  if (!(idleness >= 0.0 && idleness < 1.0)) throw DomainError("idleness must lie in [0, 1)");
  check_context(net, ctx);
  const Edge& ed = net.edge(e);

  auto support = [&](Vertex x) {
    std::vector<Vertex> s(net.neighbors(x).begin(), net.neighbors(x).end());
    if (idleness > 0.0) s.push_back(x);
    return s;
  };
  const std::vector<Vertex> src = support(ed.u);
  const std::vector<Vertex> dst = support(ed.v);
  const std::size_t du = net.degree(ed.u);
  const std::size_t dv = net.degree(ed.v);

  const bool exact = ctx.length_source == LengthSource::combinatorial && idleness == 0.0;
  Matrix<double> dcost(src.size(), dst.size(), 0.0);
  for (std::size_t i = 0; i < src.size(); ++i) {
    const auto dist = shortest_path_lengths(net, ctx, src[i]);
    for (std::size_t j = 0; j < dst.size(); ++j) dcost(i, j) = dist[dst[j]];
  }

  if (exact) {
    // Masses 1/du and 1/dv scaled by du*dv.
    using I = std::int64_t;
    Matrix<I> icost(src.size(), dst.size(), 0);
    for (std::size_t i = 0; i < src.size(); ++i) {
      for (std::size_t j = 0; j < dst.size(); ++j) {
        icost(i, j) = dcost(i, j) == kUnreachable ? std::numeric_limits<I>::max()
                                                  : static_cast<I>(dcost(i, j));
      }
    }
    std::vector<I> supply(src.size(), static_cast<I>(dv));
    std::vector<I> demand(dst.size(), static_cast<I>(du));
    auto plan = solve_transport<I>(supply, demand, icost);
    return 1.0 - static_cast<double>(plan.cost) / static_cast<double>(du * dv);
  }

  auto masses = [&](std::size_t deg, std::size_t count) {
    std::vector<double> m(count, (1.0 - idleness) / static_cast<double>(deg));
    if (idleness > 0.0) m.back() = idleness;
    return m;
  };
  std::vector<double> supply = masses(du, src.size());
  std::vector<double> demand = masses(dv, dst.size());
  const double blocked = std::numeric_limits<double>::max();
  for (std::size_t i = 0; i < src.size(); ++i) {
    for (std::size_t j = 0; j < dst.size(); ++j) {
      if (dcost(i, j) == kUnreachable) dcost(i, j) = blocked;
    }
  }
  auto plan = solve_transport<double>(supply, demand, dcost, blocked);
  return 1.0 - plan.cost;
}

/// Unnormalised edge betweenness centrality, indexed by EdgeId.
///
/// Brandes-style accumulation from every source. Undirected networks count
/// unordered vertex pairs, directed ones ordered pairs. Pair dependencies are
/// accumulated in 128-bit fixed point so the result does not depend on the
/// order in which vertices are processed.
inline std::vector<double> edge_betweenness(const Network& net, const MetricContext& ctx = {}) {
  check_context(net, ctx);
  using Fixed = __int128;
  constexpr int kShift = 64;
  auto to_fixed = [](double x) { return static_cast<Fixed>(std::ldexp(x, kShift)); };
  auto to_double = [](Fixed x) { return std::ldexp(static_cast<double>(x), -kShift); };

  const std::size_t n = net.vertex_count();
  std::vector<Fixed> total(net.edge_count(), 0);
  std::vector<double> sigma(n);
  std::vector<Fixed> delta(n);
  std::vector<Vertex> order(n);
  const bool unit = ctx.length_source == LengthSource::combinatorial;

  auto same = [&](double a, double b) {
    return unit ? a == b : std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b));
  };

  for (Vertex s = 0; s < n; ++s) {
    const std::vector<double> dist = shortest_path_lengths(net, ctx, s);
    order.clear();
    for (Vertex v = 0; v < n; ++v) {
      if (dist[v] != kUnreachable) order.push_back(v);
    }
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return dist[a] < dist[b]; });
    std::fill(sigma.begin(), sigma.end(), 0.0);
    std::fill(delta.begin(), delta.end(), Fixed{0});
    sigma[s] = 1.0;
    // Shortest-path counts; predecessors are found on the fly.
    for (Vertex w : order) {
      if (w == s) continue;
      for (Vertex v : net.predecessors(w)) {
        if (dist[v] == kUnreachable) continue;
        EdgeId eid = *net.find_edge(v, w);
        if (same(dist[v] + edge_length(net, ctx, eid), dist[w])) sigma[w] += sigma[v];
      }
    }
    for (auto it = order.rbegin(); it != order.rend(); ++it) {
      Vertex w = *it;
      if (w == s) continue;
      const double carry = 1.0 + to_double(delta[w]);
      for (Vertex v : net.predecessors(w)) {
        if (dist[v] == kUnreachable) continue;
        EdgeId eid = *net.find_edge(v, w);
        if (!same(dist[v] + edge_length(net, ctx, eid), dist[w])) continue;
        const Fixed c = to_fixed(sigma[v] / sigma[w] * carry);
        total[eid] += c;
        delta[v] += c;
      }
    }
  }
  std::vector<double> out(net.edge_count());
  for (std::size_t e = 0; e < out.size(); ++e) {
    out[e] = to_double(total[e]);
    if (!net.directed()) out[e] *= 0.5;
  }
  return out;
}

/// Pearson product-moment correlation; nullopt when either vector has zero
/// variance.
inline std::optional<double> pearson(std::span<const double> xs, std::span<const double> ys) {
  if (xs.size() != ys.size()) throw ValidationError("pearson: vectors differ in length");
  if (xs.size() < 2) throw ValidationError("pearson: need at least two samples");
  const double n = static_cast<double>(xs.size());
  const double mx = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
  const double my = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double dx = xs[i] - mx;
    const double dy = ys[i] - my;
    sxy += dx * dy;
    sxx += dx * dx;
    syy += dy * dy;
  }
  if (sxx == 0.0 || syy == 0.0) return std::nullopt;
  return std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
}

}  // namespace metricurv
