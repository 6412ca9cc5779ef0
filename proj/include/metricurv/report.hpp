#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "metricurv/baselines.hpp"
#include "metricurv/errors.hpp"
#include "metricurv/haantjes.hpp"
#include "metricurv/menger.hpp"
#include "metricurv/metric.hpp"
#include "metricurv/network.hpp"
#include "metricurv/numeric.hpp"

namespace metricurv {

enum class Measure {
  menger_ricci,
  haantjes_simple,
  haantjes_strong,
  haantjes_directional,
  forman,
  ollivier,
  betweenness,
  excess,
  aspect_ratio
};

inline constexpr std::pair<Measure, std::string_view> kMeasureNames[] = {
    {Measure::menger_ricci, "menger-ricci"},
    {Measure::haantjes_simple, "haantjes-simple"},
    {Measure::haantjes_strong, "haantjes-strong"},
    {Measure::haantjes_directional, "haantjes-directional"},
    {Measure::forman, "forman"},
    {Measure::ollivier, "ollivier"},
    {Measure::betweenness, "betweenness"},
    {Measure::excess, "excess"},
    {Measure::aspect_ratio, "aspect-ratio"},
};

inline std::string_view to_string(Measure m) {
  for (auto [k, name] : kMeasureNames) {
    if (k == m) return name;
  }
  return "?";
}

inline std::optional<Measure> parse_measure(std::string_view name) {
  for (auto [k, n] : kMeasureNames) {
    if (n == name) return k;
  }
  return std::nullopt;
}

inline bool is_haantjes(Measure m) {
  return m == Measure::haantjes_simple || m == Measure::haantjes_strong ||
         m == Measure::haantjes_directional;
}

struct EvalOptions {
  MetricContext ctx;
  HaantjesParams haantjes;
  double idleness = 0.0;  // ollivier
  unsigned threads = 1;
};

namespace detail {

// Runs body(e) for every edge, splitting the edge range into contiguous
// blocks; results land in their own slot so order never depends on timing.
template <class Body>
void for_each_edge(const Network& net, unsigned threads, Body body) {
  const std::size_t m = net.edge_count();
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(threads, m));
  if (workers == 1) {
    for (EdgeId e = 0; e < m; ++e) body(e);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> failures(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t e = w * m / workers; e < (w + 1) * m / workers; ++e) {
          body(static_cast<EdgeId>(e));
        }
      } catch (...) {
        failures[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
}

}  // namespace detail

/// Value of `measure` on every edge, indexed by EdgeId. Measures that are
/// undefined on an edge (directional with no path, excess or aspect ratio
/// without an adjacent triangle) give NaN.
inline std::vector<double> edge_values(const Network& net, Measure measure,
                                       const EvalOptions& opt = {}) {
  check_context(net, opt.ctx);
  constexpr double nan = std::numeric_limits<double>::quiet_NaN();
  if (measure == Measure::betweenness) return edge_betweenness(net, opt.ctx);
  std::vector<double> out(net.edge_count(), nan);
  HaantjesParams hp = opt.haantjes;
  if (measure == Measure::haantjes_simple) hp.variant = HaantjesVariant::simple;
  if (measure == Measure::haantjes_strong) hp.variant = HaantjesVariant::strong;
  detail::for_each_edge(net, opt.threads, [&](EdgeId e) {
    const Edge& ed = net.edge(e);
    switch (measure) {
      case Measure::menger_ricci: out[e] = menger_ricci(net, opt.ctx, e); break;
      case Measure::haantjes_simple:
      case Measure::haantjes_strong: out[e] = haantjes_ricci(net, opt.ctx, e, hp); break;
      case Measure::haantjes_directional:
        out[e] = haantjes_ricci_directional(net, opt.ctx, ed.u, ed.v, hp).value_or(nan);
        break;
      case Measure::forman: out[e] = forman_augmented(net, e); break;
      case Measure::ollivier: out[e] = ollivier(net, e, opt.idleness, opt.ctx); break;
      case Measure::excess: out[e] = edge_max_excess(net, opt.ctx, e).value_or(nan); break;
      case Measure::aspect_ratio:
        out[e] = edge_min_aspect_ratio(net, opt.ctx, e).value_or(nan);
        break;
      case Measure::betweenness: break;
    }
  });
  return out;
}

/// Aggregates per-edge values to vertices: the sum over incident edges,
/// skipping undefined (NaN) edges. Equals menger_scalar / haantjes_scalar
/// for the corresponding Ricci measures.
inline std::vector<double> vertex_values(const Network& net, const std::vector<double>& per_edge) {
  std::vector<double> out(net.vertex_count());
  std::vector<double> terms;
  for (Vertex v = 0; v < net.vertex_count(); ++v) {
    terms.clear();
    for (EdgeId e : incident_edges(net, v)) {
      if (!std::isnan(per_edge[e])) terms.push_back(per_edge[e]);
    }
    out[v] = canonical_sum(terms);
  }
  return out;
}

struct Summary {
  std::size_t count = 0;
  double mean = 0.0;
  double sd = 0.0;  ///< sample standard deviation (n - 1)
  double min = 0.0;
  double max = 0.0;
};

inline Summary summarize(const std::vector<double>& xs) {
  Summary s;
  s.count = xs.size();
  if (xs.empty()) return s;
  auto [lo, hi] = std::minmax_element(xs.begin(), xs.end());
  s.min = *lo;
  s.max = *hi;
  double sum = 0.0;
  for (double x : xs) sum += x;
  s.mean = sum / static_cast<double>(xs.size());
  if (xs.size() > 1) {
    double ss = 0.0;
    for (double x : xs) ss += (x - s.mean) * (x - s.mean);
    s.sd = std::sqrt(ss / static_cast<double>(xs.size() - 1));
  }
  return s;
}

struct CorrelationResult {
  std::optional<double> pearson;  ///< nullopt when a measure has zero variance
  std::size_t n = 0;
  Summary a;
  Summary b;
};

/// Pearson correlation over the edges where both values are defined.
inline CorrelationResult correlate(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw ValidationError("measures cover different edge sets");
  std::vector<double> xs, ys;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::isfinite(a[i]) && std::isfinite(b[i])) {
      xs.push_back(a[i]);
      ys.push_back(b[i]);
    }
  }
  CorrelationResult r;
  r.n = xs.size();
  r.a = summarize(xs);
  r.b = summarize(ys);
  if (xs.size() >= 2) r.pearson = pearson(xs, ys);
  return r;
}

/// Simple Haantjes-Ricci values for cutoffs 2..max_cutoff; entry i holds
/// the per-edge vector for cutoff i + 2. One enumeration per edge.
inline std::vector<std::vector<double>> haantjes_simple_sweep(const Network& net, int max_cutoff,
                                                              const EvalOptions& opt = {}) {
  HaantjesParams hp = opt.haantjes;
  hp.max_path_edges = max_cutoff;
  hp.variant = HaantjesVariant::simple;
  const std::size_t count = max_cutoff >= 2 ? static_cast<std::size_t>(max_cutoff - 1) : 0;
  std::vector<std::vector<double>> out(count, std::vector<double>(net.edge_count()));
  detail::for_each_edge(net, opt.threads, [&](EdgeId e) {
    auto values = haantjes_ricci_simple_cutoffs(net, opt.ctx, e, hp);
    for (std::size_t i = 0; i < count; ++i) out[i][e] = values[i];
  });
  return out;
}

struct Bin {
  double low;
  double high;
  std::size_t count;
};

/// Fixed-width histogram over [min, max] of the finite values, or over
/// `range` when given (values outside it are dropped). The last bin is
/// closed on the right. A single-valued sample is binned over
/// [x - 0.5, x + 0.5].
inline std::vector<Bin> histogram(const std::vector<double>& values, std::size_t bins,
                                  std::optional<std::pair<double, double>> range = std::nullopt) {
  if (bins == 0) throw ParameterError("need at least one bin");
  std::vector<double> xs;
  for (double x : values) {
    if (std::isfinite(x)) xs.push_back(x);
  }
  if (xs.empty()) throw ValidationError("no values to bin");
  double lo, hi;
  if (range) {
    std::tie(lo, hi) = *range;
    if (!(lo < hi)) throw ParameterError("histogram range must satisfy low < high");
  } else {
    auto [a, b] = std::minmax_element(xs.begin(), xs.end());
    lo = *a;
    hi = *b;
    if (lo == hi) {
      lo -= 0.5;
      hi += 0.5;
    }
  }
  const double width = (hi - lo) / static_cast<double>(bins);
  std::vector<Bin> out(bins);
  for (std::size_t i = 0; i < bins; ++i) {
    out[i].low = lo + width * static_cast<double>(i);
    out[i].high = i + 1 == bins ? hi : lo + width * static_cast<double>(i + 1);
    out[i].count = 0;
  }
  for (double x : xs) {
    if (x < lo || x > hi) continue;
    auto i = static_cast<std::size_t>((x - lo) / width);
    i = std::min(i, bins - 1);
    // Guard against rounding at bin edges.
    while (i > 0 && x < out[i].low) --i;
    while (i + 1 < bins && x >= out[i + 1].low) ++i;
    ++out[i].count;
  }
  return out;
}

}  // namespace metricurv
