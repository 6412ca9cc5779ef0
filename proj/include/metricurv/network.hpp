#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "metricurv/errors.hpp"

namespace metricurv {

using Vertex = std::uint32_t;
using EdgeId = std::uint32_t;

/// An edge. In directed networks it runs from `u` to `v`.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// A declared 2-cell.
///
/// `multiplicity` repeats the cell for complexes in which several 2-cells
/// share one boundary. A retrograde face contributes with negative
/// orientation.
struct Face {
  std::vector<Vertex> boundary;
  double weight = 1.0;
  int multiplicity = 1;
  bool retrograde = false;

  int orientation() const noexcept { return retrograde ? -1 : 1; }
};

/// Immutable vertex/edge container with optional weights and 2-cells.
///
/// Adjacency is stored in sorted CSR form so that every enumeration built on
/// top of it visits vertices in increasing order. For directed networks the
/// "underlying" adjacency (`neighbors`) ignores direction.
class Network {
 public:
  Network() = default;

  Network(std::size_t vertex_count, std::vector<Edge> edges, bool directed = false,
          std::vector<double> edge_weights = {}, std::vector<Face> faces = {},
          std::vector<double> vertex_weights = {})
      : vertex_count_(vertex_count),
        directed_(directed),
        edges_(std::move(edges)),
        weights_(std::move(edge_weights)),
        vertex_weights_(std::move(vertex_weights)),
        faces_(std::move(faces)) {
    validate_edges();
    build_adjacency();
    validate_faces();
  }

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  bool directed() const noexcept { return directed_; }
  bool weighted() const noexcept { return !weights_.empty(); }

  std::span<const Edge> edges() const noexcept { return edges_; }
  const Edge& edge(EdgeId e) const { return edges_.at(e); }

  /// Given weight, or 1 when the network is combinatorial.
  double weight(EdgeId e) const { return weights_.empty() ? 1.0 : weights_.at(e); }

  std::optional<double> vertex_weight(Vertex v) const {
    if (vertex_weights_.empty()) return std::nullopt;
    return vertex_weights_.at(v);
  }

  /// The edge u->v (directed) or {u,v} (undirected), if present.
  std::optional<EdgeId> find_edge(Vertex u, Vertex v) const {
    if (u >= vertex_count_ || v >= vertex_count_) return std::nullopt;
    return lookup(out_offsets_, out_targets_, out_ids_, u, v);
  }

  /// An edge joining x and y in either orientation, preferring x->y.
  std::optional<EdgeId> find_link(Vertex x, Vertex y) const {
    if (auto e = find_edge(x, y)) return e;
    if (directed_) return find_edge(y, x);
    return std::nullopt;
  }

  bool adjacent(Vertex x, Vertex y) const { return find_link(x, y).has_value(); }

  /// Underlying undirected neighbours, sorted and unique.
  std::span<const Vertex> neighbors(Vertex v) const { return row(nb_offsets_, nb_targets_, v); }

  /// Heads of edges leaving v (all neighbours when undirected).
  std::span<const Vertex> successors(Vertex v) const {
    return row(out_offsets_, out_targets_, v);
  }

  /// Tails of edges entering v (all neighbours when undirected).
  std::span<const Vertex> predecessors(Vertex v) const {
    return directed_ ? row(in_offsets_, in_targets_, v) : neighbors(v);
  }

  /// Degree in the underlying undirected simple graph.
  std::size_t degree(Vertex v) const { return neighbors(v).size(); }

  bool has_faces() const noexcept { return !faces_.empty(); }
  std::span<const Face> faces() const noexcept { return faces_; }

  /// Indices of declared faces whose boundary contains edge e.
  std::span<const std::size_t> faces_at(EdgeId e) const {
    if (faces_.empty()) return {};
    return {face_ids_.data() + face_offsets_.at(e), face_ids_.data() + face_offsets_.at(e + 1)};
  }

  /// Original vertex names (as read from a file); empty when unnamed.
  std::span<const std::string> labels() const noexcept { return labels_; }

  std::string label(Vertex v) const {
    return labels_.empty() ? std::to_string(v) : labels_.at(v);
  }

  void set_labels(std::vector<std::string> labels) {
    if (!labels.empty() && labels.size() != vertex_count_) {
      throw ValidationError("label count does not match vertex count");
    }
    labels_ = std::move(labels);
  }

  /// Copy of this network with a different set of declared faces.
  Network with_faces(std::vector<Face> faces) const {
    Network out(vertex_count_, edges_, directed_, weights_, std::move(faces), vertex_weights_);
    out.labels_ = labels_;
    return out;
  }

 private:
  static std::span<const Vertex> row(const std::vector<std::size_t>& offsets,
                                     const std::vector<Vertex>& targets, Vertex v) {
    if (offsets.empty()) return {};
    return {targets.data() + offsets.at(v), targets.data() + offsets.at(v + 1)};
  }

  static std::optional<EdgeId> lookup(const std::vector<std::size_t>& offsets,
                                      const std::vector<Vertex>& targets,
                                      const std::vector<EdgeId>& ids, Vertex u, Vertex v) {
    auto first = targets.begin() + static_cast<std::ptrdiff_t>(offsets[u]);
    auto last = targets.begin() + static_cast<std::ptrdiff_t>(offsets[u + 1]);
    auto it = std::lower_bound(first, last, v);
    if (it == last || *it != v) return std::nullopt;
    return ids[static_cast<std::size_t>(it - targets.begin())];
  }

  void validate_edges() const {
    if (!weights_.empty() && weights_.size() != edges_.size()) {
      throw ValidationError("edge weight count does not match edge count");
    }
    if (!vertex_weights_.empty() && vertex_weights_.size() != vertex_count_) {
      throw ValidationError("vertex weight count does not match vertex count");
    }
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const Edge& e = edges_[i];
      if (e.u >= vertex_count_ || e.v >= vertex_count_) {
        throw ValidationError("edge " + std::to_string(i) + " references a missing vertex");
      }
      if (e.u == e.v) {
        throw ValidationError("self-loop at vertex " + std::to_string(e.u));
      }
      if (!weights_.empty() && !(std::isfinite(weights_[i]) && weights_[i] > 0.0)) {
        throw ValidationError("edge " + std::to_string(i) + " has a non-positive weight");
      }
    }
    for (double w : vertex_weights_) {
      if (!(std::isfinite(w) && w > 0.0)) throw ValidationError("non-positive vertex weight");
    }
  }

  // Fills offsets/targets/ids from (from, to, id) triples; rejects duplicates.
  void build_rows(std::vector<std::tuple<Vertex, Vertex, EdgeId>> triples,
                  std::vector<std::size_t>& offsets, std::vector<Vertex>& targets,
                  std::vector<EdgeId>* ids, bool reject_duplicates) const {
    std::sort(triples.begin(), triples.end());
    offsets.assign(vertex_count_ + 1, 0);
    targets.clear();
    if (ids) ids->clear();
    for (std::size_t i = 0; i < triples.size(); ++i) {
      auto [from, to, id] = triples[i];
      if (i > 0 && std::get<0>(triples[i - 1]) == from && std::get<1>(triples[i - 1]) == to) {
        if (reject_duplicates) {
          throw ValidationError("duplicate edge " + std::to_string(from) + "-" +
                                std::to_string(to));
        }
        continue;
      }
      ++offsets[from + 1];
      targets.push_back(to);
      if (ids) ids->push_back(id);
    }
    for (std::size_t v = 0; v < vertex_count_; ++v) offsets[v + 1] += offsets[v];
  }

  void build_adjacency() {
    std::vector<std::tuple<Vertex, Vertex, EdgeId>> out, in, both;
    out.reserve(edges_.size() * (directed_ ? 1 : 2));
    for (EdgeId i = 0; i < edges_.size(); ++i) {
      const Edge& e = edges_[i];
      out.emplace_back(e.u, e.v, i);
      if (directed_) {
        in.emplace_back(e.v, e.u, i);
      } else {
        out.emplace_back(e.v, e.u, i);
      }
      both.emplace_back(e.u, e.v, i);
      both.emplace_back(e.v, e.u, i);
    }
    build_rows(std::move(out), out_offsets_, out_targets_, &out_ids_, true);
    if (directed_) {
      build_rows(std::move(in), in_offsets_, in_targets_, nullptr, true);
      build_rows(std::move(both), nb_offsets_, nb_targets_, nullptr, false);
    } else {
      nb_offsets_ = out_offsets_;
      nb_targets_ = out_targets_;
    }
  }

  void validate_faces() {
    if (faces_.empty()) return;
    std::vector<std::vector<std::size_t>> incident(edges_.size());
    for (std::size_t f = 0; f < faces_.size(); ++f) {
      const Face& face = faces_[f];
      const auto& b = face.boundary;
      if (b.size() < 3) throw ValidationError("face " + std::to_string(f) + " has < 3 vertices");
      if (!(std::isfinite(face.weight) && face.weight > 0.0)) {
        throw ValidationError("face " + std::to_string(f) + " has a non-positive weight");
      }
      if (face.multiplicity < 1) {
        throw ValidationError("face " + std::to_string(f) + " has multiplicity < 1");
      }
      std::vector<Vertex> sorted = b;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw ValidationError("face " + std::to_string(f) + " repeats a vertex");
      }
      for (std::size_t i = 0; i < b.size(); ++i) {
        Vertex x = b[i];
        Vertex y = b[(i + 1) % b.size()];
        if (x >= vertex_count_ || y >= vertex_count_) {
          throw ValidationError("face " + std::to_string(f) + " references a missing vertex");
        }
        bool any = false;
        for (auto e : {find_edge(x, y), directed_ ? find_edge(y, x) : std::nullopt}) {
          if (e) {
            incident[*e].push_back(f);
            any = true;
          }
        }
        if (!any) {
          throw ValidationError("face " + std::to_string(f) + " uses missing edge " +
                                std::to_string(x) + "-" + std::to_string(y));
        }
      }
    }
    face_offsets_.assign(edges_.size() + 1, 0);
    face_ids_.clear();
    for (std::size_t e = 0; e < edges_.size(); ++e) {
      face_ids_.insert(face_ids_.end(), incident[e].begin(), incident[e].end());
      face_offsets_[e + 1] = face_ids_.size();
    }
  }

  std::size_t vertex_count_ = 0;
  bool directed_ = false;
  std::vector<Edge> edges_;
  std::vector<double> weights_;
  std::vector<double> vertex_weights_;
  std::vector<Face> faces_;
  std::vector<std::string> labels_;

  std::vector<std::size_t> out_offsets_;
  std::vector<Vertex> out_targets_;
  std::vector<EdgeId> out_ids_;
  std::vector<std::size_t> in_offsets_;
  std::vector<Vertex> in_targets_;
  std::vector<std::size_t> nb_offsets_;
  std::vector<Vertex> nb_targets_;
  std::vector<std::size_t> face_offsets_;
  std::vector<std::size_t> face_ids_;
};

/// Edges having v as an endpoint, in order of neighbour then orientation.
inline std::vector<EdgeId> incident_edges(const Network& net, Vertex v) {
  std::vector<EdgeId> out;
  for (Vertex x : net.neighbors(v)) {
    if (auto e = net.find_edge(v, x)) out.push_back(*e);
    if (net.directed()) {
      if (auto e = net.find_edge(x, v)) out.push_back(*e);
    }
  }
  return out;
}

}  // namespace metricurv
