#pragma once

#include <algorithm>
#include <cstddef>
#include <limits>
#include <span>
#include <type_traits>
#include <vector>

#include "metricurv/errors.hpp"

namespace metricurv {

/// Dense row-major matrix.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, T fill = T{})
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

template <class T>
struct TransportPlan {
  T cost{};
  Matrix<T> flow;
};

namespace detail {

template <class T>
constexpr T transport_tolerance() {
  if constexpr (std::is_floating_point_v<T>) {
    return T(1e-12);
  } else {
    return T(0);
  }
}

}  // namespace detail

/// Exact minimum-cost transportation from `supply` to `demand`.
///
/// Successive shortest augmenting paths with Dijkstra on reduced costs over
/// the dense residual network. With an integral T every pivot is exact.
/// Costs must be non-negative; a cost of `blocked` marks a missing route.
/// Throws TransportError on unequal totals or when no feasible coupling
/// exists.
template <class T>
TransportPlan<T> solve_transport(std::span<const T> supply, std::span<const T> demand,
                                 const Matrix<T>& cost,
                                 T blocked = std::numeric_limits<T>::max()) {
  const std::size_t m = supply.size();
  const std::size_t n = demand.size();
  if (cost.rows() != m || cost.cols() != n) throw TransportError("cost matrix shape mismatch");
  const T tol = detail::transport_tolerance<T>();
  T total_s{}, total_d{};
  for (T s : supply) {
    if (s < T{}) throw TransportError("negative supply");
    total_s += s;
  }
  for (T d : demand) {
    if (d < T{}) throw TransportError("negative demand");
    total_d += d;
  }
  const T scale = std::max<T>(T(1), total_s);
  if (total_s - total_d > tol * scale * 1000 || total_d - total_s > tol * scale * 1000) {
    throw TransportError("supply and demand totals differ");
  }

  TransportPlan<T> plan{T{}, Matrix<T>(m, n, T{})};
  std::vector<T> left_s(supply.begin(), supply.end());
  std::vector<T> left_d(demand.begin(), demand.end());

  // Nodes: sources 0..m-1, sinks m..m+n-1, super source S, super sink T.
  // Potentials keep every residual reduced cost non-negative.
  const std::size_t S = m + n;
  const std::size_t Tn = m + n + 1;
  const std::size_t nodes = m + n + 2;
  const T inf = std::numeric_limits<T>::max() / 4;
  const T eps = tol * scale;
  std::vector<T> potential(nodes, T{});
  std::vector<T> dist(nodes);
  std::vector<std::size_t> parent(nodes);
  std::vector<char> done(nodes);

  auto remaining = [](const std::vector<T>& left) {
    T r{};
    for (T x : left) r += x;
    return r;
  };

  while (remaining(left_s) > eps && remaining(left_d) > eps) {
    std::fill(dist.begin(), dist.end(), inf);
    std::fill(done.begin(), done.end(), 0);
    dist[S] = T{};
    for (;;) {
      std::size_t x = nodes;
      for (std::size_t k = 0; k < nodes; ++k) {
        if (!done[k] && dist[k] < inf && (x == nodes || dist[k] < dist[x])) x = k;
      }
      if (x == nodes || x == Tn) break;
      done[x] = 1;
      auto relax = [&](std::size_t y, T c) {
        if (done[y]) return;
        T reduced = c + potential[x] - potential[y];
        if (reduced < T{}) reduced = T{};
        if (dist[x] + reduced < dist[y]) {
          dist[y] = dist[x] + reduced;
          parent[y] = x;
        }
      };
      if (x == S) {
        for (std::size_t i = 0; i < m; ++i) {
          if (left_s[i] > eps) relax(i, T{});
        }
      } else if (x < m) {
        for (std::size_t j = 0; j < n; ++j) {
          if (cost(x, j) != blocked) relax(m + j, cost(x, j));
        }
      } else {
        const std::size_t j = x - m;
        for (std::size_t i = 0; i < m; ++i) {
          if (plan.flow(i, j) > eps) relax(i, -cost(i, j));
        }
        if (left_d[j] > eps) relax(Tn, T{});
      }
    }
    if (dist[Tn] >= inf) throw TransportError("no feasible coupling: supports are disconnected");
    const T reach = dist[Tn];
    for (std::size_t k = 0; k < nodes; ++k) potential[k] += std::min(dist[k], reach);

    // Bottleneck along S -> i -> j (-> i' -> j' ...) -> T.
    T amount = inf;
    for (std::size_t y = Tn; y != S; y = parent[y]) {
      const std::size_t x = parent[y];
      if (x == S) {
        amount = std::min(amount, left_s[y]);
      } else if (y == Tn) {
        amount = std::min(amount, left_d[x - m]);
      } else if (x >= m) {
        amount = std::min(amount, plan.flow(y, x - m));
      }
    }
    for (std::size_t y = Tn; y != S; y = parent[y]) {
      const std::size_t x = parent[y];
      if (x == S) {
        left_s[y] -= amount;
      } else if (y == Tn) {
        left_d[x - m] -= amount;
      } else if (x < m) {
        plan.flow(x, y - m) += amount;
      } else {
        plan.flow(y, x - m) -= amount;
      }
    }
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (plan.flow(i, j) != T{}) plan.cost += plan.flow(i, j) * cost(i, j);
    }
  }
  return plan;
}

}  // namespace metricurv
