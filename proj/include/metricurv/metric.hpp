#pragma once

#include <cmath>
#include <string>
#include <string_view>

#include "metricurv/network.hpp"

namespace metricurv {

enum class LengthSource { combinatorial, edge_weights, path_degree };

/// Background geometry for Menger curvature.
enum class Geometry { euclidean, spherical, hyperbolic };

/// How edge lengths are obtained, plus the model geometry for Menger.
struct MetricContext {
  LengthSource length_source = LengthSource::combinatorial;
  Geometry geometry = Geometry::euclidean;
};

inline std::string_view to_string(LengthSource s) {
  switch (s) {
    case LengthSource::combinatorial: return "comb";
    case LengthSource::edge_weights: return "weights";
    case LengthSource::path_degree: return "pathdeg";
  }
  return "?";
}

inline std::string_view to_string(Geometry g) {
  switch (g) {
    case Geometry::euclidean: return "euc";
    case Geometry::spherical: return "sph";
    case Geometry::hyperbolic: return "hyp";
  }
  return "?";
}

/// Throws ValidationError if the context cannot be used on `net`.
inline void check_context(const Network& net, const MetricContext& ctx) {
  if (ctx.length_source == LengthSource::path_degree && net.directed()) {
    throw ValidationError("the path-degree metric requires an undirected network");
  }
}

/// Length of edge e under ctx.
///
/// Path-degree lengths are (deg(u) deg(v))^(-1/2), degrees taken in the
/// underlying undirected graph.
inline double edge_length(const Network& net, const MetricContext& ctx, EdgeId e) {
  switch (ctx.length_source) {
    case LengthSource::combinatorial: return 1.0;
    case LengthSource::edge_weights: return net.weight(e);
    case LengthSource::path_degree: {
      check_context(net, ctx);
      const Edge& ed = net.edge(e);
      double du = static_cast<double>(net.degree(ed.u));
      double dv = static_cast<double>(net.degree(ed.v));
      return 1.0 / std::sqrt(du * dv);
    }
  }
  return 1.0;
}

/// Length of the step x -> y between adjacent vertices, ignoring direction.
/// Uses the x->y edge when both orientations exist.
inline double link_length(const Network& net, const MetricContext& ctx, Vertex x, Vertex y) {
  auto e = net.find_link(x, y);
  if (!e) {
    throw ValidationError("vertices " + std::to_string(x) + " and " + std::to_string(y) +
                          " are not adjacent");
  }
  return edge_length(net, ctx, *e);
}

}  // namespace metricurv
