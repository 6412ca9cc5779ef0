#pragma once

#include <cstddef>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "metricurv/errors.hpp"
#include "metricurv/format.hpp"
#include "metricurv/network.hpp"

namespace metricurv {

struct LoadOptions {
  bool directed = false;
  bool weighted = false;
};

namespace detail {

inline std::vector<std::string_view> split_tokens(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

}  // namespace detail

/// Reads a whitespace-separated edge list, one `u v [w]` per line.
///
/// `#` starts a comment. A line with a single token declares a vertex.
/// Vertex names are re-indexed densely in order of first appearance and kept
/// as labels. A repeated edge keeps its first weight; the number of dropped
/// repeats is stored in `duplicates` when given.
inline Network load_edge_list(std::istream& in, LoadOptions options,
                              std::size_t* duplicates = nullptr) {
  std::unordered_map<std::string, Vertex> index;
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  std::vector<double> weights;
  std::unordered_set<std::uint64_t> seen;
  std::size_t dropped = 0;

  auto vertex = [&](std::string_view name) {
    auto [it, inserted] = index.try_emplace(std::string(name), static_cast<Vertex>(labels.size()));
    if (inserted) labels.emplace_back(name);
    return it->second;
  };

  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = detail::split_tokens(line);
    if (tokens.empty()) continue;
    if (tokens.size() > 3) throw ParseError(lineno, "expected `u v [w]`");
    Vertex u = vertex(tokens[0]);
    if (tokens.size() == 1) continue;
    Vertex v = vertex(tokens[1]);
    double w = 1.0;
    if (tokens.size() == 3 && options.weighted) {
      auto parsed = parse_double(tokens[2]);
      if (!parsed) throw ParseError(lineno, "bad weight '" + std::string(tokens[2]) + "'");
      w = *parsed;
      if (!(w > 0.0) || !std::isfinite(w)) {
        throw ValidationError("line " + std::to_string(lineno) + ": weight must be positive");
      }
    }
    if (u == v) {
      throw ValidationError("line " + std::to_string(lineno) + ": self-loop on " +
                            std::string(tokens[0]));
    }
    Vertex a = u, b = v;
    if (!options.directed && b < a) std::swap(a, b);
    std::uint64_t key = (static_cast<std::uint64_t>(a) << 32) | b;
    if (!seen.insert(key).second) {
      ++dropped;
      continue;
    }
    edges.push_back({u, v});
    weights.push_back(w);
  }
  if (duplicates) *duplicates = dropped;
  Network net(labels.size(), std::move(edges), options.directed,
              options.weighted ? std::move(weights) : std::vector<double>{});
  net.set_labels(std::move(labels));
  return net;
}

inline Network load_edge_list(std::string_view text, LoadOptions options,
                              std::size_t* duplicates = nullptr) {
  std::istringstream in{std::string(text)};
  return load_edge_list(in, options, duplicates);
}

/// Reads the face sidecar: `F v0 v1 ... vk [w=<weight>] [m=<multiplicity>] [o=-1]`.
/// Vertex names are resolved through the labels of `net`.
inline std::vector<Face> load_faces(std::istream& in, const Network& net) {
  std::unordered_map<std::string, Vertex> index;
  for (Vertex v = 0; v < net.vertex_count(); ++v) index.emplace(net.label(v), v);

  std::vector<Face> faces;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = detail::split_tokens(line);
    if (tokens.empty()) continue;
    if (tokens[0] != "F") throw ParseError(lineno, "face lines start with 'F'");
    Face face;
    for (std::size_t i = 1; i < tokens.size(); ++i) {
      std::string_view t = tokens[i];
      if (t.starts_with("w=")) {
        auto w = parse_double(t.substr(2));
        if (!w) throw ParseError(lineno, "bad face weight");
        face.weight = *w;
      } else if (t.starts_with("m=")) {
        auto m = parse_int(t.substr(2));
        if (!m || *m < 1) throw ParseError(lineno, "bad multiplicity");
        face.multiplicity = static_cast<int>(*m);
      } else if (t.starts_with("o=")) {
        auto o = parse_int(t.substr(2));
        if (!o || (*o != 1 && *o != -1)) throw ParseError(lineno, "orientation must be 1 or -1");
        face.retrograde = *o < 0;
      } else {
        auto it = index.find(std::string(t));
        if (it == index.end()) throw ParseError(lineno, "unknown vertex '" + std::string(t) + "'");
        face.boundary.push_back(it->second);
      }
    }
    faces.push_back(std::move(face));
  }
  return faces;
}

inline void write_edge_list(std::ostream& out, const Network& net) {
  std::vector<char> touched(net.vertex_count(), 0);
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    const Edge& ed = net.edge(e);
    touched[ed.u] = touched[ed.v] = 1;
    out << net.label(ed.u) << ' ' << net.label(ed.v);
    if (net.weighted()) out << ' ' << format_number(net.weight(e), 17);
    out << '\n';
  }
  for (Vertex v = 0; v < net.vertex_count(); ++v) {
    if (!touched[v]) out << net.label(v) << '\n';
  }
}

inline void write_faces(std::ostream& out, const Network& net) {
  for (const Face& f : net.faces()) {
    out << 'F';
    for (Vertex v : f.boundary) out << ' ' << net.label(v);
    if (f.weight != 1.0) out << " w=" << format_number(f.weight, 17);
    if (f.multiplicity != 1) out << " m=" << f.multiplicity;
    if (f.retrograde) out << " o=-1";
    out << '\n';
  }
}

}  // namespace metricurv
