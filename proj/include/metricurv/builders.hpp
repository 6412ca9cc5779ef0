#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <map>
#include <numbers>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "metricurv/errors.hpp"
#include "metricurv/network.hpp"

namespace metricurv {

enum class LatticeKind { triangular, square, hexagonal, cubic };

/// A tessellation patch. `dims` holds two side lengths (three for cubic).
/// With `wrap` the patch is closed toroidally so every edge is interior.
struct LatticeSpec {
  LatticeKind kind = LatticeKind::square;
  std::vector<std::size_t> dims;
  bool wrap = false;
};

namespace detail {

inline Network assemble(std::size_t n, std::vector<Edge> edges, std::vector<Face> faces) {
  for (Edge& e : edges) {
    if (e.v < e.u) std::swap(e.u, e.v);
  }
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return std::pair{a.u, a.v} < std::pair{b.u, b.v}; });
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Network(n, std::move(edges), false, {}, std::move(faces));
}

}  // namespace detail

/// Builds a triangular, square, hexagonal (honeycomb) or cubic lattice with
/// every 2-cell declared as a face. Unwrapped patches declare only the
/// cells that lie completely inside the patch. Wrapped hexagonal lattices
/// need even side lengths.
inline Network build_lattice(const LatticeSpec& spec) {
  const bool cubic = spec.kind == LatticeKind::cubic;
  if (spec.dims.size() != (cubic ? 3u : 2u)) {
    throw ParameterError(cubic ? "cubic lattice needs three dims" : "planar lattice needs two dims");
  }
  for (std::size_t d : spec.dims) {
    if (d < (spec.wrap ? 3u : 2u)) throw ParameterError("lattice side too short");
  }
  const bool wrap = spec.wrap;
  std::vector<Edge> edges;
  std::vector<Face> faces;

  if (!cubic) {
    const std::size_t R = spec.dims[0], C = spec.dims[1];
    auto inside = [&](std::size_t i, std::size_t j) { return wrap || (i < R && j < C); };
    auto id = [&](std::size_t i, std::size_t j) { return static_cast<Vertex>((i % R) * C + (j % C)); };
    auto link = [&](std::size_t i0, std::size_t j0, std::size_t i1, std::size_t j1) {
      if (inside(i0, j0) && inside(i1, j1)) edges.push_back({id(i0, j0), id(i1, j1)});
    };
    auto face = [&](std::initializer_list<std::pair<std::size_t, std::size_t>> corners) {
      Face f;
      for (auto [i, j] : corners) {
        if (!inside(i, j)) return;
        f.boundary.push_back(id(i, j));
      }
      faces.push_back(std::move(f));
    };
    switch (spec.kind) {
      case LatticeKind::triangular:
        for (std::size_t i = 0; i < R; ++i) {
          for (std::size_t j = 0; j < C; ++j) {
            link(i, j, i, j + 1);
            link(i, j, i + 1, j);
            link(i, j, i + 1, j + 1);
            face({{i, j}, {i, j + 1}, {i + 1, j + 1}});
            face({{i, j}, {i + 1, j + 1}, {i + 1, j}});
          }
        }
        break;
      case LatticeKind::square:
        for (std::size_t i = 0; i < R; ++i) {
          for (std::size_t j = 0; j < C; ++j) {
            link(i, j, i, j + 1);
            link(i, j, i + 1, j);
            face({{i, j}, {i, j + 1}, {i + 1, j + 1}, {i + 1, j}});
          }
        }
        break;
      case LatticeKind::hexagonal:
        // Brick-wall honeycomb: rows i, columns j; vertical rungs where i+j is even.
        if (wrap && (R % 2 != 0 || C % 2 != 0)) {
          throw ParameterError("wrapped hexagonal lattice needs even dims");
        }
        for (std::size_t i = 0; i < R; ++i) {
          for (std::size_t j = 0; j < C; ++j) {
            link(i, j, i, j + 1);
            if ((i + j) % 2 == 0) {
              link(i, j, i + 1, j);
              face({{i, j}, {i, j + 1}, {i, j + 2}, {i + 1, j + 2}, {i + 1, j + 1}, {i + 1, j}});
            }
          }
        }
        break;
      case LatticeKind::cubic: break;
    }
    return detail::assemble(R * C, std::move(edges), std::move(faces));
  }

  const std::size_t A = spec.dims[0], B = spec.dims[1], C = spec.dims[2];
  using P = std::array<std::size_t, 3>;
  auto inside = [&](P p) { return wrap || (p[0] < A && p[1] < B && p[2] < C); };
  auto id = [&](P p) { return static_cast<Vertex>(((p[0] % A) * B + (p[1] % B)) * C + (p[2] % C)); };
  auto step = [](P p, int axis) {
    p[static_cast<std::size_t>(axis)] += 1;
    return p;
  };
  for (std::size_t i = 0; i < A; ++i) {
    for (std::size_t j = 0; j < B; ++j) {
      for (std::size_t k = 0; k < C; ++k) {
        const P p{i, j, k};
        for (int a = 0; a < 3; ++a) {
          if (inside(step(p, a))) edges.push_back({id(p), id(step(p, a))});
          for (int b = a + 1; b < 3; ++b) {
            P q = step(p, a), r = step(step(p, a), b), s = step(p, b);
            if (inside(q) && inside(r) && inside(s)) {
              faces.push_back(Face{{id(p), id(q), id(r), id(s)}});
            }
          }
        }
      }
    }
  }
  return detail::assemble(A * B * C, std::move(edges), std::move(faces));
}

namespace detail {

using Point = std::array<double, 3>;

inline double dist(const Point& a, const Point& b) {
  return std::hypot(a[0] - b[0], a[1] - b[1], a[2] - b[2]);
}

inline Point sub(const Point& a, const Point& b) { return {a[0] - b[0], a[1] - b[1], a[2] - b[2]}; }

inline Point cross(const Point& a, const Point& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

inline double dot(const Point& a, const Point& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

// All sign choices of the given cyclic (even) or all permutations of the triple.
inline void add_orbit(std::vector<Point>& pts, Point base, bool even_only) {
  std::vector<std::array<int, 3>> perms = {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  if (!even_only) {
    perms.push_back({1, 0, 2});
    perms.push_back({0, 2, 1});
    perms.push_back({2, 1, 0});
  }
  for (auto& pm : perms) {
    for (int s = 0; s < 8; ++s) {
      Point p;
      for (int c = 0; c < 3; ++c) {
        double x = base[static_cast<std::size_t>(pm[static_cast<std::size_t>(c)])];
        p[static_cast<std::size_t>(c)] = (s >> c & 1) ? -x : x;
      }
      bool dup = std::any_of(pts.begin(), pts.end(), [&](const Point& q) { return dist(p, q) < 1e-9; });
      if (!dup) pts.push_back(p);
    }
  }
}

inline std::vector<Edge> edges_at_length(const std::vector<Point>& pts, double length) {
  std::vector<Edge> edges;
  for (Vertex i = 0; i < pts.size(); ++i) {
    for (Vertex j = i + 1; j < pts.size(); ++j) {
      if (std::abs(dist(pts[i], pts[j]) - length) < 1e-6) edges.push_back({i, j});
    }
  }
  return edges;
}

inline double shortest_distance(const std::vector<Point>& pts) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::min(best, dist(pts[i], pts[j]));
  }
  return best;
}

// Orders coplanar vertices cyclically around their centroid.
inline std::vector<Vertex> cyclic_order(const std::vector<Point>& pts, std::vector<Vertex> ids,
                                        const Point& normal) {
  Point c{0, 0, 0};
  for (Vertex v : ids) {
    for (int k = 0; k < 3; ++k) c[static_cast<std::size_t>(k)] += pts[v][static_cast<std::size_t>(k)];
  }
  for (auto& x : c) x /= static_cast<double>(ids.size());
  Point e1 = sub(pts[ids[0]], c);
  Point e2 = cross(normal, e1);
  std::sort(ids.begin(), ids.end(), [&](Vertex a, Vertex b) {
    Point da = sub(pts[a], c), db = sub(pts[b], c);
    return std::atan2(dot(da, e2), dot(da, e1)) < std::atan2(dot(db, e2), dot(db, e1));
  });
  return ids;
}

// Faces of a convex polyhedron: supporting planes through a vertex and two
// of its neighbours.
inline std::vector<Face> convex_faces(const std::vector<Point>& pts, const std::vector<Edge>& edges) {
  std::vector<std::vector<Vertex>> nb(pts.size());
  for (const Edge& e : edges) {
    nb[e.u].push_back(e.v);
    nb[e.v].push_back(e.u);
  }
  std::set<std::vector<Vertex>> seen;
  std::vector<Face> faces;
  for (Vertex x = 0; x < pts.size(); ++x) {
    for (std::size_t i = 0; i < nb[x].size(); ++i) {
      for (std::size_t j = i + 1; j < nb[x].size(); ++j) {
        Point n = cross(sub(pts[nb[x][i]], pts[x]), sub(pts[nb[x][j]], pts[x]));
        double len = std::sqrt(dot(n, n));
        if (len < 1e-9) continue;
        for (auto& c : n) c /= len;
        bool above = false, below = false;
        std::vector<Vertex> on;
        for (Vertex p = 0; p < pts.size(); ++p) {
          double h = dot(sub(pts[p], pts[x]), n);
          if (h > 1e-7) above = true;
          else if (h < -1e-7) below = true;
          else on.push_back(p);
        }
        if (above && below) continue;
        if (!seen.insert(on).second) continue;
        faces.push_back(Face{cyclic_order(pts, on, n)});
      }
    }
  }
  return faces;
}

inline std::vector<std::array<Vertex, 3>> triangles_of(std::size_t n, const std::vector<Edge>& edges) {
  std::set<std::pair<Vertex, Vertex>> has;
  for (const Edge& e : edges) has.insert({std::min(e.u, e.v), std::max(e.u, e.v)});
  auto adj = [&](Vertex a, Vertex b) { return has.count({std::min(a, b), std::max(a, b)}) > 0; };
  std::vector<std::array<Vertex, 3>> out;
  for (Vertex a = 0; a < n; ++a) {
    for (Vertex b = a + 1; b < n; ++b) {
      if (!adj(a, b)) continue;
      for (Vertex c = b + 1; c < n; ++c) {
        if (adj(a, c) && adj(b, c)) out.push_back({a, b, c});
      }
    }
  }
  return out;
}

}  // namespace detail

inline const std::vector<std::string_view>& polyhedron_names() {
  static const std::vector<std::string_view> names = {
      "truncated_dodecahedron", "truncated_octahedron",    "truncated_icosidodecahedron",
      "tetrahemihexahedron",    "octahemoctahedron",       "quasi_rhombicuboctahedron",
      "seifert_weber",          "poincare_sphere"};
  return names;
}

/// 1-skeleton and declared faces of a named polyhedron or polyhedral complex.
///
/// The Seifert-Weber and Poincare dodecahedral spaces are represented by a
/// pentagon whose single 2-cell has multiplicity 5 and 3, the number of
/// pentagonal faces around every edge of those complexes. The triangles of
/// the quasi-rhombicuboctahedron are flagged retrograde.
inline Network build_polyhedron(std::string_view name) {
  using detail::Point;
  const double phi = std::numbers::phi;
  std::vector<Point> pts;

  if (name == "seifert_weber" || name == "poincare_sphere") {
    std::vector<Edge> edges = {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}};
    Face f{{0, 1, 2, 3, 4}};
    f.multiplicity = name == "seifert_weber" ? 5 : 3;
    return detail::assemble(5, std::move(edges), {f});
  }
  if (name == "tetrahemihexahedron") {
    // Octahedron vertices +x -x +y -y +z -z; three equatorial squares and
    // four alternate octahedron triangles.
    std::vector<Edge> edges = {{0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2}, {1, 3},
                               {1, 4}, {1, 5}, {2, 4}, {2, 5}, {3, 4}, {3, 5}};
    std::vector<Face> faces = {Face{{0, 2, 1, 3}}, Face{{0, 4, 1, 5}}, Face{{2, 4, 3, 5}},
                               Face{{0, 2, 4}},    Face{{0, 3, 5}},    Face{{1, 2, 5}},
                               Face{{1, 3, 4}}};
    return detail::assemble(6, std::move(edges), std::move(faces));
  }
  if (name == "octahemoctahedron") {
    detail::add_orbit(pts, {1, 1, 0}, false);
    auto edges = detail::edges_at_length(pts, std::sqrt(2.0));
    std::vector<Face> faces;
    for (auto t : detail::triangles_of(pts.size(), edges)) faces.push_back(Face{{t[0], t[1], t[2]}});
    for (Point s : {Point{1, 1, 1}, Point{1, 1, -1}, Point{1, -1, 1}, Point{-1, 1, 1}}) {
      std::vector<Vertex> on;
      for (Vertex v = 0; v < pts.size(); ++v) {
        if (std::abs(detail::dot(pts[v], s)) < 1e-9) on.push_back(v);
      }
      faces.push_back(Face{detail::cyclic_order(pts, on, s)});
    }
    return detail::assemble(pts.size(), std::move(edges), std::move(faces));
  }
  if (name == "quasi_rhombicuboctahedron") {
    // Nonconvex great rhombicuboctahedron on the truncated-cube vertex set.
    detail::add_orbit(pts, {std::numbers::sqrt2 - 1.0, 1, 1}, false);
    auto edges = detail::edges_at_length(pts, 2.0);
    std::vector<Face> faces;
    for (auto t : detail::triangles_of(pts.size(), edges)) {
      Face f{{t[0], t[1], t[2]}};
      f.retrograde = true;
      faces.push_back(f);
    }
    std::vector<std::vector<Vertex>> nb(pts.size());
    for (const Edge& e : edges) {
      nb[e.u].push_back(e.v);
      nb[e.v].push_back(e.u);
    }
    std::set<std::vector<Vertex>> seen;
    const double diagonal = 2.0 * std::numbers::sqrt2;
    for (Vertex a = 0; a < pts.size(); ++a) {
      for (Vertex b : nb[a]) {
        for (Vertex d : nb[a]) {
          if (d <= b) continue;
          for (Vertex c : nb[b]) {
            if (c == a || std::find(nb[d].begin(), nb[d].end(), c) == nb[d].end()) continue;
            if (std::abs(detail::dist(pts[a], pts[c]) - diagonal) > 1e-9 ||
                std::abs(detail::dist(pts[b], pts[d]) - diagonal) > 1e-9) {
              continue;
            }
            std::vector<Vertex> key = {a, b, c, d};
            std::sort(key.begin(), key.end());
            if (seen.insert(key).second) faces.push_back(Face{{a, b, c, d}});
          }
        }
      }
    }
    return detail::assemble(pts.size(), std::move(edges), std::move(faces));
  }
  if (name == "truncated_octahedron") {
    detail::add_orbit(pts, {0, 1, 2}, false);
  } else if (name == "truncated_dodecahedron") {
    detail::add_orbit(pts, {0, 1 / phi, 2 + phi}, true);
    detail::add_orbit(pts, {1 / phi, phi, 2 * phi}, true);
    detail::add_orbit(pts, {phi, 2, phi + 1}, true);
  } else if (name == "truncated_icosidodecahedron") {
    detail::add_orbit(pts, {1 / phi, 1 / phi, 3 + phi}, true);
    detail::add_orbit(pts, {2 / phi, phi, 1 + 2 * phi}, true);
    detail::add_orbit(pts, {1 / phi, phi * phi, -1 + 3 * phi}, true);
    detail::add_orbit(pts, {2 * phi - 1, 2, 2 + phi}, true);
    detail::add_orbit(pts, {phi, 3, 2 * phi}, true);
  } else {
    std::string msg = "unknown polyhedron '" + std::string(name) + "'; supported:";
    for (auto n : polyhedron_names()) msg += " " + std::string(n);
    throw ParameterError(msg);
  }
  auto edges = detail::edges_at_length(pts, detail::shortest_distance(pts));
  auto faces = detail::convex_faces(pts, edges);
  return detail::assemble(pts.size(), std::move(edges), std::move(faces));
}

}  // namespace metricurv
