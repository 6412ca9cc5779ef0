#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <limits>
#include <optional>
#include <queue>
#include <span>
#include <utility>
#include <vector>

#include "metricurv/metric.hpp"
#include "metricurv/network.hpp"

namespace metricurv {

/// A simple path v_0..v_n with its length and its orientation sign relative
/// to the chord (v_0, v_n).
struct PathRecord {
  std::vector<Vertex> vertices;
  double length = 0.0;
  int sign = 1;

  std::size_t edge_count() const noexcept {
    return vertices.empty() ? 0 : vertices.size() - 1;
  }

  friend bool operator==(const PathRecord&, const PathRecord&) = default;
};

/// Whether path searches follow edge direction or walk the underlying
/// undirected graph. Identical on undirected networks.
enum class Traversal { follow_direction, underlying };

inline constexpr double kUnreachable = std::numeric_limits<double>::infinity();

/// Single-source shortest-path distances under ctx (direction respected).
/// Unreachable vertices get kUnreachable.
inline std::vector<double> shortest_path_lengths(const Network& net, const MetricContext& ctx,
                                                 Vertex source) {
  check_context(net, ctx);
  const std::size_t n = net.vertex_count();
  std::vector<double> dist(n, kUnreachable);
  if (source >= n) throw ValidationError("vertex " + std::to_string(source) + " out of range");
  dist[source] = 0.0;
  if (ctx.length_source == LengthSource::combinatorial) {
    std::vector<Vertex> frontier{source};
    for (std::size_t head = 0; head < frontier.size(); ++head) {
      Vertex x = frontier[head];
      for (Vertex y : net.successors(x)) {
        if (dist[y] == kUnreachable) {
          dist[y] = dist[x] + 1.0;
          frontier.push_back(y);
        }
      }
    }
    return dist;
  }
  using Item = std::pair<double, Vertex>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> heap;
  heap.emplace(0.0, source);
  while (!heap.empty()) {
    auto [d, x] = heap.top();
    heap.pop();
    if (d > dist[x]) continue;
    for (Vertex y : net.successors(x)) {
      double nd = d + edge_length(net, ctx, *net.find_edge(x, y));
      if (nd < dist[y]) {
        dist[y] = nd;
        heap.emplace(nd, y);
      }
    }
  }
  return dist;
}

/// d(u, v), or nullopt when v cannot be reached from u.
inline std::optional<double> shortest_path_length(const Network& net, const MetricContext& ctx,
                                                  Vertex u, Vertex v) {
  if (v >= net.vertex_count()) throw ValidationError("vertex " + std::to_string(v) + " out of range");
  double d = shortest_path_lengths(net, ctx, u)[v];
  if (d == kUnreachable) return std::nullopt;
  return d;
}

/// Orientation of a path from u to v relative to the chord u->v.
///
/// +1 when every step follows an edge from u's side toward v (feed-forward),
/// -1 when every step runs against it so that chord and path close a directed
/// cycle (feed-backward), 0 for mixed directions. Always +1 on undirected
/// networks. A path coherent in both senses (reciprocal edges) counts as +1.
inline int cycle_sign(const Network& net, Edge chord, std::span<const Vertex> path) {
  if (path.size() < 2 || path.front() != chord.u || path.back() != chord.v) {
    throw ValidationError("cycle_sign: path endpoints do not match the chord");
  }
  if (!net.directed()) return 1;
  bool forward = true;
  bool backward = true;
  for (std::size_t i = 0; i + 1 < path.size(); ++i) {
    forward = forward && net.find_edge(path[i], path[i + 1]).has_value();
    backward = backward && net.find_edge(path[i + 1], path[i]).has_value();
  }
  if (forward) return 1;
  if (backward) return -1;
  return 0;
}

inline int cycle_sign(const Network& net, Edge chord, const PathRecord& path) {
  return cycle_sign(net, chord, std::span<const Vertex>(path.vertices));
}

/// Depth-limited simple-path search with reusable scratch space.
///
/// Visits paths in lexicographic order of their vertex sequence. A bounded
/// reverse BFS from the target prunes branches that cannot reach it within
/// the remaining edge budget. One instance per thread.
class SimplePathEnumerator {
 public:
  SimplePathEnumerator(const Network& net, const MetricContext& ctx,
                       Traversal traversal = Traversal::follow_direction)
      : net_(&net),
        ctx_(ctx),
        traversal_(traversal),
        hops_(net.vertex_count(), kFar),
        on_path_(net.vertex_count(), 0) {
    check_context(net, ctx);
  }

  /// Calls visit(std::span<const Vertex> vertices, double length) for every
  /// simple path from u to v with at most max_edges edges. With
  /// exclude_direct_edge the one-edge path u,v is skipped.
  template <class Visitor>
  void for_each(Vertex u, Vertex v, int max_edges, bool exclude_direct_edge, Visitor&& visit) {
    const std::size_t n = net_->vertex_count();
    if (u >= n || v >= n) throw ValidationError("path endpoint out of range");
    if (max_edges < 1) throw ValidationError("max_edges must be >= 1");
    if (u == v) return;
    label_hops(v, max_edges);
    if (hops_[u] > max_edges) {
      clear_hops();
      return;
    }
    path_.assign(1, u);
    lengths_.assign(1, 0.0);
    on_path_[u] = 1;
    extend(v, max_edges, exclude_direct_edge, visit);
    on_path_[u] = 0;
    clear_hops();
  }

 private:
  static constexpr int kFar = std::numeric_limits<int>::max();

  std::span<const Vertex> forward(Vertex x) const {
    return traversal_ == Traversal::underlying ? net_->neighbors(x) : net_->successors(x);
  }
  std::span<const Vertex> backward(Vertex x) const {
    return traversal_ == Traversal::underlying ? net_->neighbors(x) : net_->predecessors(x);
  }

  double step(Vertex x, Vertex y) const {
    if (ctx_.length_source == LengthSource::combinatorial) return 1.0;
    auto e = traversal_ == Traversal::underlying ? net_->find_link(x, y) : net_->find_edge(x, y);
    return edge_length(*net_, ctx_, *e);
  }

  void label_hops(Vertex target, int limit) {
    touched_.assign(1, target);
    hops_[target] = 0;
    for (std::size_t head = 0; head < touched_.size(); ++head) {
      Vertex x = touched_[head];
      if (hops_[x] >= limit) continue;
      for (Vertex y : backward(x)) {
        if (hops_[y] == kFar) {
          hops_[y] = hops_[x] + 1;
          touched_.push_back(y);
        }
      }
    }
  }

  void clear_hops() {
    for (Vertex x : touched_) hops_[x] = kFar;
    touched_.clear();
  }

  template <class Visitor>
  void extend(Vertex target, int max_edges, bool exclude_direct, Visitor& visit) {
    const Vertex x = path_.back();
    const int used = static_cast<int>(path_.size()) - 1;
    const int remaining = max_edges - used - 1;
    for (Vertex y : forward(x)) {
      if (on_path_[y]) continue;
      if (y == target) {
        if (exclude_direct && used == 0) continue;
        path_.push_back(y);
        lengths_.push_back(lengths_.back() + step(x, y));
        visit(std::span<const Vertex>(path_), lengths_.back());
        path_.pop_back();
        lengths_.pop_back();
        continue;
      }
      if (hops_[y] > remaining) continue;
      path_.push_back(y);
      lengths_.push_back(lengths_.back() + step(x, y));
      on_path_[y] = 1;
      extend(target, max_edges, exclude_direct, visit);
      on_path_[y] = 0;
      path_.pop_back();
      lengths_.pop_back();
    }
  }

  const Network* net_;
  MetricContext ctx_;
  Traversal traversal_;
  std::vector<int> hops_;
  std::vector<char> on_path_;
  std::vector<Vertex> touched_;
  std::vector<Vertex> path_;
  std::vector<double> lengths_;
};

/// All simple paths from u to v with at most max_edges edges, in
/// lexicographic order. Each record's sign is cycle_sign relative to u->v.
inline std::vector<PathRecord> enumerate_simple_paths(
    const Network& net, const MetricContext& ctx, Vertex u, Vertex v, int max_edges,
    bool exclude_direct_edge, Traversal traversal = Traversal::follow_direction) {
  std::vector<PathRecord> out;
  SimplePathEnumerator walker(net, ctx, traversal);
  walker.for_each(u, v, max_edges, exclude_direct_edge,
                  [&](std::span<const Vertex> p, double length) {
                    PathRecord rec{{p.begin(), p.end()}, length, 1};
                    rec.sign = cycle_sign(net, Edge{u, v}, p);
                    out.push_back(std::move(rec));
                  });
  return out;
}

/// A triangle over edge (u, v) closed by w.
struct Triangle {
  Vertex u = 0;
  Vertex v = 0;
  Vertex w = 0;

  friend bool operator==(const Triangle&, const Triangle&) = default;
};

/// Triangles adjacent to edge e, ordered by the closing vertex. Adjacency
/// ignores direction.
inline std::vector<Triangle> enumerate_triangles(const Network& net, EdgeId e) {
  const Edge& ed = net.edge(e);
  auto a = net.neighbors(ed.u);
  auto b = net.neighbors(ed.v);
  std::vector<Triangle> out;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) {
      ++i;
    } else if (b[j] < a[i]) {
      ++j;
    } else {
      out.push_back({ed.u, ed.v, a[i]});
      ++i;
      ++j;
    }
  }
  return out;
}

/// A 2-cell adjacent to an edge: its boundary minus the edge, oriented from
/// the edge's tail to its head.
struct Cell {
  std::optional<std::size_t> face;  ///< declared face index; empty for implicit cells
  PathRecord boundary;
  double weight = 1.0;
  int orientation = 1;  ///< -1 for retrograde faces
};

/// 2-cells adjacent to edge e.
///
/// With declared faces: every face containing e, repeated per multiplicity.
/// Otherwise one implicit cell per simple path of at most
/// max_boundary_edges - 1 edges closing an elementary cycle with e; implicit
/// cells are found in the underlying undirected graph so that their sign can
/// be any of -1, 0, +1.
inline std::vector<Cell> enumerate_cells(const Network& net, const MetricContext& ctx, EdgeId e,
                                         int max_boundary_edges) {
  if (max_boundary_edges < 3) throw ValidationError("max_boundary_edges must be >= 3");
  const Edge ed = net.edge(e);
  std::vector<Cell> out;
  if (!net.has_faces()) {
    for (auto& p : enumerate_simple_paths(net, ctx, ed.u, ed.v, max_boundary_edges - 1, true,
                                          Traversal::underlying)) {
      out.push_back(Cell{std::nullopt, std::move(p), 1.0, 1});
    }
    return out;
  }
  for (std::size_t f : net.faces_at(e)) {
    const Face& face = net.faces()[f];
    const auto& b = face.boundary;
    const std::size_t k = b.size();
    std::size_t i = static_cast<std::size_t>(std::find(b.begin(), b.end(), ed.u) - b.begin());
    // Walk away from v so the path ends at v.
    const bool v_next = b[(i + 1) % k] == ed.v;
    PathRecord rec;
    rec.vertices.reserve(k);
    for (std::size_t s = 0; s < k; ++s) {
      std::size_t idx = v_next ? (i + k - s) % k : (i + s) % k;
      rec.vertices.push_back(b[idx]);
    }
    for (std::size_t s = 0; s + 1 < rec.vertices.size(); ++s) {
      rec.length += link_length(net, ctx, rec.vertices[s], rec.vertices[s + 1]);
    }
    rec.sign = cycle_sign(net, ed, rec);
    for (int m = 0; m < face.multiplicity; ++m) {
      out.push_back(Cell{f, rec, face.weight, face.orientation()});
    }
  }
  return out;
}

}  // namespace metricurv
