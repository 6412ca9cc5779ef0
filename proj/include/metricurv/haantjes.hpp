#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <optional>
#include <queue>
#include <span>
#include <vector>

#include "metricurv/errors.hpp"
#include "metricurv/menger.hpp"
#include "metricurv/metric.hpp"
#include "metricurv/network.hpp"
#include "metricurv/numeric.hpp"
#include "metricurv/paths.hpp"

namespace metricurv {

enum class HaantjesVariant { simple, strong };

struct HaantjesParams {
  int max_path_edges = 5;
  HaantjesVariant variant = HaantjesVariant::simple;
  /// Paths shorter than their chord get a negative curvature instead of
  /// raising a domain error.
  bool weighted_sign_rule = true;
  /// Divide cell sectional curvature by the face weight.
  bool use_face_weights = false;
};

/// Haantjes curvature of a path relative to its chord:
/// sqrt((l(path) - l(chord)) / l(chord)^3). For n unit edges over a unit
/// chord this is sqrt(n - 1).
inline double haantjes_path(double path_length, double chord_length) {
  if (!(chord_length > 0.0)) throw DomainError("chord length must be positive");
  if (path_length < chord_length) {
    throw DomainError("path shorter than its chord; use haantjes_weighted_signed");
  }
  return std::sqrt((path_length - chord_length) / (chord_length * chord_length * chord_length));
}

/// Variable-sign Haantjes curvature for general weights: the roles of path
/// and chord are swapped and the sign flipped when the path is shorter.
inline double haantjes_weighted_signed(double path_length, double chord_length) {
  if (!(chord_length > 0.0) || !(path_length > 0.0)) {
    throw DomainError("path and chord lengths must be positive");
  }
  const double excess = path_length - chord_length;
  const double kappa = std::sqrt(std::abs(excess) / (chord_length * chord_length * chord_length));
  return excess < 0.0 ? -kappa : kappa;
}

namespace detail {

inline double path_kappa(double path_length, double chord_length, const HaantjesParams& params) {
  return params.weighted_sign_rule ? haantjes_weighted_signed(path_length, chord_length)
                                   : haantjes_path(path_length, chord_length);
}

inline Traversal cycle_traversal(const Network& net) {
  return net.directed() ? Traversal::underlying : Traversal::follow_direction;
}

}  // namespace detail

/// Strong (Gauss-Bonnet) sectional curvature of one 2-cell relative to an edge.
struct CellCurvature {
  PathRecord boundary;  ///< cell boundary minus the edge
  double kappa_H = 0.0;
  double K_strong = 0.0;
  int sign = 1;
};

/// K = 2 pi - kappa_H(boundary), divided by the face weight when
/// params.use_face_weights is set.
inline CellCurvature haantjes_strong_sectional(const PathRecord& boundary, double chord_length,
                                               double face_weight, const HaantjesParams& params) {
  if (!(face_weight > 0.0)) throw DomainError("face weight must be positive");
  CellCurvature out;
  out.boundary = boundary;
  out.sign = boundary.sign;
  out.kappa_H = detail::path_kappa(boundary.length, chord_length, params);
  out.K_strong = 2.0 * std::numbers::pi - out.kappa_H;
  if (params.use_face_weights) out.K_strong /= face_weight;
  return out;
}

/// Simple Haantjes-Ricci curvature of edge e: sum of eps(pi) kappa_H(pi)
/// over the paths pi closing an elementary cycle with e.
///
/// Declared faces, when present, define the paths (one per cell, retrograde
/// faces negative). Otherwise all simple paths of at most
/// params.max_path_edges edges are used; on directed networks they are
/// searched in the underlying graph and signed by cycle_sign.
inline double haantjes_ricci_simple(const Network& net, const MetricContext& ctx, EdgeId e,
                                    const HaantjesParams& params = {}) {
  check_context(net, ctx);
  const Edge ed = net.edge(e);
  const double chord = edge_length(net, ctx, e);
  std::vector<double> terms;
  if (net.has_faces()) {
    for (const Cell& cell : enumerate_cells(net, ctx, e, std::max(3, params.max_path_edges + 1))) {
      const int sign = cell.boundary.sign * cell.orientation;
      if (sign == 0) continue;
      terms.push_back(sign * detail::path_kappa(cell.boundary.length, chord, params));
    }
    return canonical_sum(terms);
  }
  if (params.max_path_edges < 2) return 0.0;
  SimplePathEnumerator walker(net, ctx, detail::cycle_traversal(net));
  walker.for_each(ed.u, ed.v, params.max_path_edges, true,
                  [&](std::span<const Vertex> p, double length) {
                    const int sign = cycle_sign(net, ed, p);
                    if (sign == 0) return;
                    terms.push_back(sign * detail::path_kappa(length, chord, params));
                  });
  return canonical_sum(terms);
}

/// haantjes_ricci_simple of e for every cutoff 2..params.max_path_edges
/// from a single path enumeration; entry i belongs to cutoff i + 2.
inline std::vector<double> haantjes_ricci_simple_cutoffs(const Network& net,
                                                         const MetricContext& ctx, EdgeId e,
                                                         const HaantjesParams& params = {}) {
  if (params.max_path_edges < 2) return {};
  const auto count = static_cast<std::size_t>(params.max_path_edges - 1);
  if (net.has_faces()) {
    return std::vector<double>(count, haantjes_ricci_simple(net, ctx, e, params));
  }
  check_context(net, ctx);
  const Edge ed = net.edge(e);
  const double chord = edge_length(net, ctx, e);
  std::vector<std::vector<double>> by_edges(count);
  SimplePathEnumerator walker(net, ctx, detail::cycle_traversal(net));
  walker.for_each(ed.u, ed.v, params.max_path_edges, true,
                  [&](std::span<const Vertex> p, double length) {
                    const int sign = cycle_sign(net, ed, p);
                    if (sign == 0) return;
                    by_edges[p.size() - 3].push_back(
                        sign * detail::path_kappa(length, chord, params));
                  });
  std::vector<double> out(count);
  std::vector<double> terms;
  for (std::size_t i = 0; i < count; ++i) {
    terms.insert(terms.end(), by_edges[i].begin(), by_edges[i].end());
    std::vector<double> copy = terms;
    out[i] = canonical_sum(copy);
  }
  return out;
}

/// Strong Haantjes-Ricci curvature of edge e: sum of signed strong sectional
/// curvatures of the 2-cells adjacent to e.
inline double haantjes_ricci_strong(const Network& net, const MetricContext& ctx, EdgeId e,
                                    const HaantjesParams& params = {}) {
  check_context(net, ctx);
  const double chord = edge_length(net, ctx, e);
  std::vector<double> terms;
  if (!net.has_faces() && params.max_path_edges < 2) return 0.0;
  for (const Cell& cell : enumerate_cells(net, ctx, e, std::max(3, params.max_path_edges + 1))) {
    const int sign = cell.boundary.sign * cell.orientation;
    if (sign == 0) continue;
    terms.push_back(sign *
                    haantjes_strong_sectional(cell.boundary, chord, cell.weight, params).K_strong);
  }
  return canonical_sum(terms);
}

inline double haantjes_ricci(const Network& net, const MetricContext& ctx, EdgeId e,
                             const HaantjesParams& params = {}) {
  return params.variant == HaantjesVariant::strong ? haantjes_ricci_strong(net, ctx, e, params)
                                                   : haantjes_ricci_simple(net, ctx, e, params);
}

/// Haantjes-scalar curvature: selected Ricci variant summed over the edges at v.
inline double haantjes_scalar(const Network& net, const MetricContext& ctx, Vertex v,
                              const HaantjesParams& params = {}) {
  std::vector<double> terms;
  for (EdgeId e : incident_edges(net, v)) terms.push_back(haantjes_ricci(net, ctx, e, params));
  return canonical_sum(terms);
}

/// Haantjes-Ricci curvature in the direction u -> v.
///
/// pi_0 is a shortest path from u to v among the simple paths of at most
/// params.max_path_edges edges (ties: lexicographically smallest). Every
/// other such path sharing no interior vertex with pi_0 contributes
/// sqrt((l(pi_i) - l(pi_0)) / l(pi_0)^3). On directed networks paths follow
/// edge direction. Returns nullopt when no path exists within the cutoff.
inline std::optional<double> haantjes_ricci_directional(const Network& net,
                                                        const MetricContext& ctx, Vertex u,
                                                        Vertex v,
                                                        const HaantjesParams& params = {}) {
  if (u == v) throw DomainError("direction needs two distinct vertices");
  auto paths = enumerate_simple_paths(net, ctx, u, v, std::max(1, params.max_path_edges), false);
  if (paths.empty()) return std::nullopt;
  std::size_t best = 0;
  for (std::size_t i = 1; i < paths.size(); ++i) {
    if (paths[i].length < paths[best].length) best = i;
  }
  const PathRecord& geodesic = paths[best];
  const double l0 = geodesic.length;
  std::vector<char> interior(net.vertex_count(), 0);
  for (std::size_t i = 1; i + 1 < geodesic.vertices.size(); ++i) interior[geodesic.vertices[i]] = 1;
  std::vector<double> terms;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    if (i == best) continue;
    const auto& vs = paths[i].vertices;
    bool disjoint = std::none_of(vs.begin() + 1, vs.end() - 1,
                                 [&](Vertex x) { return interior[x] != 0; });
    if (!disjoint) continue;
    terms.push_back(std::sqrt((paths[i].length - l0) / (l0 * l0 * l0)));
  }
  return canonical_sum(terms);
}

/// Largest of the three sums "two sides at a vertex minus the opposite side".
inline double excess(MetricTriangle d) {
  if (!(std::max({d.a, d.b, d.c}) > 0.0)) throw DomainError("triangle has zero diameter");
  return std::max({d.a + d.b - d.c, d.b + d.c - d.a, d.a + d.c - d.b});
}

/// Excess divided by the diameter of the triangle.
inline double aspect_ratio(MetricTriangle d) {
  const double diam = std::max({d.a, d.b, d.c});
  if (!(diam > 0.0)) throw DomainError("triangle has zero diameter");
  return excess(d) / diam;
}

/// Shortest-path distance between x and y, searched no further than
/// `bound` (an upper bound such as the length of an edge joining them).
inline double bounded_distance(const Network& net, const MetricContext& ctx, Vertex x, Vertex y,
                               double bound) {
  if (ctx.length_source == LengthSource::combinatorial) return std::min(bound, 1.0);
  using Item = std::pair<double, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  std::vector<std::pair<Vertex, double>> settled;
  auto best = [&](Vertex z) {
    for (auto& [w, d] : settled) {
      if (w == z) return d;
    }
    return kUnreachable;
  };
  heap.emplace(0.0, x);
  while (!heap.empty()) {
    auto [d, z] = heap.top();
    heap.pop();
    if (d > bound) break;
    if (best(z) <= d) continue;
    settled.emplace_back(z, d);
    if (z == y) return d;
    for (Vertex w : net.successors(z)) {
      double nd = d + edge_length(net, ctx, *net.find_edge(z, w));
      if (nd <= bound && best(w) > nd) heap.emplace(nd, w);
    }
  }
  return bound;
}

/// Side lengths d(u,v), d(v,w), d(u,w) of a network triangle, taken from
/// shortest-path distances.
inline MetricTriangle triangle_distances(const Network& net, const MetricContext& ctx,
                                         const Triangle& t) {
  if (net.directed()) throw UnsupportedError("excess and aspect ratio need an undirected network");
  auto d = [&](Vertex x, Vertex y) {
    return bounded_distance(net, ctx, x, y, link_length(net, ctx, x, y));
  };
  return {d(t.u, t.v), d(t.v, t.w), d(t.u, t.w)};
}

/// Maximal excess over the triangles adjacent to e, nullopt if there are none.
inline std::optional<double> edge_max_excess(const Network& net, const MetricContext& ctx,
                                             EdgeId e) {
  std::optional<double> best;
  for (const Triangle& t : enumerate_triangles(net, e)) {
    double x = excess(triangle_distances(net, ctx, t));
    if (!best || x > *best) best = x;
  }
  return best;
}

/// Minimal aspect ratio over the triangles adjacent to e, nullopt if none.
inline std::optional<double> edge_min_aspect_ratio(const Network& net, const MetricContext& ctx,
                                                   EdgeId e) {
  std::optional<double> best;
  for (const Triangle& t : enumerate_triangles(net, e)) {
    double x = aspect_ratio(triangle_distances(net, ctx, t));
    if (!best || x < *best) best = x;
  }
  return best;
}

struct TriangleExtremes {
  double max_excess = 0.0;
  double min_aspect_ratio = 0.0;
  std::size_t triangles = 0;
};

/// Maximal excess and minimal aspect ratio over all triangles of the
/// network; nullopt when it is triangle-free.
inline std::optional<TriangleExtremes> triangle_extremes(const Network& net,
                                                         const MetricContext& ctx) {
  TriangleExtremes out;
  out.min_aspect_ratio = std::numeric_limits<double>::infinity();
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    const Edge& ed = net.edge(e);
    for (const Triangle& t : enumerate_triangles(net, e)) {
      // Count each triangle once, from its two smallest vertices.
      if (t.w < std::max(ed.u, ed.v)) continue;
      MetricTriangle d = triangle_distances(net, ctx, t);
      out.max_excess = std::max(out.max_excess, excess(d));
      out.min_aspect_ratio = std::min(out.min_aspect_ratio, aspect_ratio(d));
      ++out.triangles;
    }
  }
  if (out.triangles == 0) return std::nullopt;
  return out;
}

}  // namespace metricurv
