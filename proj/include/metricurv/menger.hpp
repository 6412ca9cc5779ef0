#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <string>
#include <vector>

#include "metricurv/errors.hpp"
#include "metricurv/metric.hpp"
#include "metricurv/network.hpp"
#include "metricurv/numeric.hpp"
#include "metricurv/paths.hpp"

namespace metricurv {

/// Side lengths of a metric triple of points.
struct MetricTriangle {
  double a = 0.0;
  double b = 0.0;
  double c = 0.0;
};

/// Menger curvature of a metric triangle in the given background geometry.
///
///   euclidean:  abc / (4 sqrt(p (p-a)(p-b)(p-c)))
///   spherical:  sqrt(sin p sin(p-a) sin(p-b) sin(p-c)) / (2 sin(a/2) sin(b/2) sin(c/2))
///   hyperbolic: same with sinh
///
/// p is the half-perimeter. The normalising constants 4 and 2 are kept.
/// The Euclidean form is evaluated with Kahan's stable arrangement of
/// Heron's product. Sides are sorted first, so the result is exactly
/// symmetric in (a, b, c).
///
/// Throws InfiniteCurvatureError for a degenerate (collinear) triple and
/// DomainError for non-positive sides or, on the sphere, sides >= pi or
/// perimeter >= 2 pi.
inline double menger_triangle(MetricTriangle t, Geometry geometry = Geometry::euclidean) {
  double s[3] = {t.a, t.b, t.c};
  std::sort(s, s + 3, std::greater<>());
  const double a = s[0], b = s[1], c = s[2];  // a >= b >= c
  if (!(c > 0.0) || !std::isfinite(a)) throw DomainError("triangle sides must be positive and finite");
  // Twice the Gromov products; zero means collinear.
  const double ga = c - (a - b);
  const double gb = c + (a - b);
  const double gc = a + (b - c);
  if (!(ga > 0.0)) {
    throw InfiniteCurvatureError("degenerate triangle (" + std::to_string(t.a) + ", " +
                                 std::to_string(t.b) + ", " + std::to_string(t.c) + ")");
  }
  switch (geometry) {
    case Geometry::euclidean: {
      // 4 * sqrt(p(p-a)(p-b)(p-c)) == sqrt((a+(b+c)) ga gb gc)
      double area4 = std::sqrt((a + (b + c)) * ga * gb * gc);
      return a * b * c / area4;
    }
    case Geometry::spherical: {
      if (a >= std::numbers::pi || a + b + c >= 2.0 * std::numbers::pi) {
        throw DomainError("spherical triangle needs sides < pi and perimeter < 2 pi");
      }
      double p = 0.5 * (a + b + c);
      double num = std::sqrt(std::sin(p) * std::sin(0.5 * ga) * std::sin(0.5 * gb) *
                             std::sin(0.5 * gc));
      return num / (2.0 * std::sin(0.5 * a) * std::sin(0.5 * b) * std::sin(0.5 * c));
    }
    case Geometry::hyperbolic: {
      double p = 0.5 * (a + b + c);
      double num = std::sqrt(std::sinh(p) * std::sinh(0.5 * ga) * std::sinh(0.5 * gb) *
                             std::sinh(0.5 * gc));
      return num / (2.0 * std::sinh(0.5 * a) * std::sinh(0.5 * b) * std::sinh(0.5 * c));
    }
  }
  return 0.0;
}

/// eps(T) * kappa for triangle (u, v, w) over the chord u->v; eps is the
/// orientation of the two-edge path u, w, v (always +1 when undirected).
inline double menger_signed(const Network& net, const Triangle& t, double kappa) {
  const Vertex path[3] = {t.u, t.w, t.v};
  return cycle_sign(net, Edge{t.u, t.v}, path) * kappa;
}

/// Menger-Ricci curvature: sum of signed Menger curvatures of the triangles
/// adjacent to e, side lengths from ctx.
inline double menger_ricci(const Network& net, const MetricContext& ctx, EdgeId e) {
  check_context(net, ctx);
  const double chord = edge_length(net, ctx, e);
  std::vector<double> terms;
  for (const Triangle& t : enumerate_triangles(net, e)) {
    const Vertex path[3] = {t.u, t.w, t.v};
    const int sign = cycle_sign(net, Edge{t.u, t.v}, path);
    if (sign == 0) continue;
    MetricTriangle sides{link_length(net, ctx, t.u, t.w), link_length(net, ctx, t.w, t.v), chord};
    double kappa = 0.0;
    try {
      kappa = menger_triangle(sides, ctx.geometry);
    } catch (const InfiniteCurvatureError&) {
      throw InfiniteCurvatureError("degenerate triangle " + net.label(t.u) + " " + net.label(t.v) +
                                   " " + net.label(t.w) + " under the chosen metric");
    }
    terms.push_back(sign * kappa);
  }
  return canonical_sum(terms);
}

/// Menger-scalar curvature: sum of menger_ricci over the edges at v. Each
/// triangle at v is therefore counted once per incident edge it contains.
inline double menger_scalar(const Network& net, const MetricContext& ctx, Vertex v) {
  std::vector<double> terms;
  for (EdgeId e : incident_edges(net, v)) terms.push_back(menger_ricci(net, ctx, e));
  return canonical_sum(terms);
}

/// Menger curvature of the metric triangle (v_0, v_k, v_n) cut out of a path
/// by its k-th vertex: sides l(v_0..v_k), l(v_k..v_n) and the chord length,
/// which is the edge (v_0, v_n) when present and the shortest-path distance
/// otherwise.
inline double menger_path(const Network& net, const MetricContext& ctx, const PathRecord& path,
                          std::size_t k, Geometry geometry) {
  const auto& vs = path.vertices;
  if (vs.size() < 3 || k < 1 || k + 1 > vs.size() - 1) {
    throw DomainError("split vertex must be interior to the path");
  }
  double first = 0.0, second = 0.0;
  for (std::size_t i = 0; i + 1 < vs.size(); ++i) {
    (i < k ? first : second) += link_length(net, ctx, vs[i], vs[i + 1]);
  }
  double chord = 0.0;
  if (auto e = net.find_link(vs.front(), vs.back())) {
    chord = edge_length(net, ctx, *e);
  } else {
    auto d = shortest_path_length(net, ctx, vs.front(), vs.back());
    if (!d) throw DomainError("path endpoints are not connected");
    chord = *d;
  }
  return menger_triangle({first, second, chord}, geometry);
}

}  // namespace metricurv
