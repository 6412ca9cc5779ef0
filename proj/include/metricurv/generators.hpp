#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "metricurv/errors.hpp"
#include "metricurv/network.hpp"
#include "metricurv/random.hpp"

namespace metricurv {

enum class ModelKind { er, ws, ba };

/// Parameters of a random network model. Unused fields are ignored.
struct GeneratorSpec {
  ModelKind kind = ModelKind::er;
  std::size_t n = 0;
  double p = 0.0;        // er
  std::size_t k = 0;     // ws: even ring degree
  double beta = 0.0;     // ws: rewiring probability
  std::size_t m0 = 0;    // ba: seed vertices
  std::size_t m = 0;     // ba: edges per new vertex
  std::uint64_t seed = 0;
};

inline void validate(const GeneratorSpec& spec) {
  switch (spec.kind) {
    case ModelKind::er:
      if (!(spec.p >= 0.0 && spec.p <= 1.0)) throw ParameterError("er: p must lie in [0, 1]");
      break;
    case ModelKind::ws:
      if (spec.k % 2 != 0 || spec.k >= spec.n) {
        throw ParameterError("ws: k must be even and smaller than n");
      }
      if (!(spec.beta >= 0.0 && spec.beta <= 1.0)) {
        throw ParameterError("ws: beta must lie in [0, 1]");
      }
      break;
    case ModelKind::ba:
      if (!(spec.m >= 1 && spec.m <= spec.m0 && spec.m0 < spec.n)) {
        throw ParameterError("ba: need 1 <= m <= m0 < n");
      }
      break;
  }
}

namespace detail {

inline Network erdos_renyi(const GeneratorSpec& spec) {
  RandomStream rng(spec.seed, 1);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < spec.n; ++u) {
    for (Vertex v = u + 1; v < spec.n; ++v) {
      if (rng.bernoulli(spec.p)) edges.push_back({u, v});
    }
  }
  return Network(spec.n, std::move(edges));
}

// Ring lattice with k/2 neighbours on each side; each lattice edge (i, i+j)
// is rewired with probability beta to a uniformly chosen new endpoint that
// creates neither a self-loop nor a duplicate.
inline Network watts_strogatz(const GeneratorSpec& spec) {
  RandomStream rng(spec.seed, 2);
  const std::size_t n = spec.n;
  std::set<std::pair<Vertex, Vertex>> present;
  std::vector<std::pair<Vertex, Vertex>> order;
  auto key = [](Vertex a, Vertex b) { return a < b ? std::pair{a, b} : std::pair{b, a}; };
  for (std::size_t j = 1; j <= spec.k / 2; ++j) {
    for (std::size_t i = 0; i < n; ++i) {
      auto e = key(static_cast<Vertex>(i), static_cast<Vertex>((i + j) % n));
      present.insert(e);
      order.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + j) % n));
    }
  }
  std::vector<std::size_t> degree(n, spec.k);
  for (auto& [u, v] : order) {
    if (!rng.bernoulli(spec.beta)) continue;
    if (degree[u] >= n - 1) continue;
    Vertex w;
    do {
      w = static_cast<Vertex>(rng.below(n));
    } while (w == u || present.count(key(u, w)));
    present.erase(key(u, v));
    present.insert(key(u, w));
    --degree[v];
    ++degree[w];
    v = w;
  }
  std::vector<Edge> edges;
  edges.reserve(order.size());
  for (auto [u, v] : order) edges.push_back({std::min(u, v), std::max(u, v)});
  std::sort(edges.begin(), edges.end(),
            [](const Edge& a, const Edge& b) { return std::pair{a.u, a.v} < std::pair{b.u, b.v}; });
  return Network(n, std::move(edges));
}

// m0 seed vertices chained in a path; each new vertex attaches to m distinct
// existing vertices chosen with probability proportional to degree + 1e-9.
inline Network barabasi_albert(const GeneratorSpec& spec) {
  RandomStream rng(spec.seed, 3);
  constexpr double kFloor = 1e-9;
  std::vector<Edge> edges;
  std::vector<double> degree(spec.n, 0.0);
  for (Vertex v = 1; v < spec.m0; ++v) {
    edges.push_back({v - 1, v});
    degree[v - 1] += 1.0;
    degree[v] += 1.0;
  }
  std::vector<Vertex> chosen;
  for (Vertex v = static_cast<Vertex>(spec.m0); v < spec.n; ++v) {
    chosen.clear();
    while (chosen.size() < spec.m) {
      double total = 0.0;
      for (Vertex x = 0; x < v; ++x) {
        if (std::find(chosen.begin(), chosen.end(), x) == chosen.end()) total += degree[x] + kFloor;
      }
      double r = rng.uniform() * total;
      Vertex pick = v;
      for (Vertex x = 0; x < v; ++x) {
        if (std::find(chosen.begin(), chosen.end(), x) != chosen.end()) continue;
        pick = x;
        r -= degree[x] + kFloor;
        if (r < 0.0) break;
      }
      chosen.push_back(pick);
    }
    for (Vertex x : chosen) {
      edges.push_back({x, v});
      degree[x] += 1.0;
      degree[v] += 1.0;
    }
  }
  return Network(spec.n, std::move(edges));
}

}  // namespace detail

/// Draws a network from the model named in `spec`. Equal specs give equal
/// networks.
inline Network generate(const GeneratorSpec& spec) {
  validate(spec);
  switch (spec.kind) {
    case ModelKind::er: return detail::erdos_renyi(spec);
    case ModelKind::ws: return detail::watts_strogatz(spec);
    case ModelKind::ba: return detail::barabasi_albert(spec);
  }
  throw ParameterError("unknown model");
}

inline GeneratorSpec er_spec(std::size_t n, double p, std::uint64_t seed) {
  GeneratorSpec s;
  s.kind = ModelKind::er;
  s.n = n;
  s.p = p;
  s.seed = seed;
  return s;
}

inline GeneratorSpec ws_spec(std::size_t n, std::size_t k, double beta, std::uint64_t seed) {
  GeneratorSpec s;
  s.kind = ModelKind::ws;
  s.n = n;
  s.k = k;
  s.beta = beta;
  s.seed = seed;
  return s;
}

inline GeneratorSpec ba_spec(std::size_t n, std::size_t m0, std::size_t m, std::uint64_t seed) {
  GeneratorSpec s;
  s.kind = ModelKind::ba;
  s.n = n;
  s.m0 = m0;
  s.m = m;
  s.seed = seed;
  return s;
}

}  // namespace metricurv
