#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "metricurv/metricurv.hpp"
#include "oracles.hpp"

using namespace metricurv;

namespace {

constexpr double kPi = std::numbers::pi;

// Random non-degenerate triangle with sides in (lo, hi).
MetricTriangle random_triangle(std::mt19937_64& rng, double lo, double hi) {
  std::uniform_real_distribution<double> side(lo, hi);
  for (;;) {
    MetricTriangle t{side(rng), side(rng), side(rng)};
    double s[3] = {t.a, t.b, t.c};
    std::sort(s, s + 3);
    if (s[0] + s[1] > s[2] * (1 + 1e-3)) return t;
  }
}

}  // namespace

TEST(MengerTriangle, EuclideanExamples) {
  EXPECT_NEAR(menger_triangle({1, 1, 1}), std::sqrt(3.0) / 3.0, 1e-15);
  EXPECT_NEAR(menger_triangle({3, 4, 5}), 2.5, 1e-15);
}

TEST(MengerTriangle, EuclideanMatchesCircumcenterOracle) {
  std::mt19937_64 rng(1);
  for (int i = 0; i < 2000; ++i) {
    auto t = random_triangle(rng, 0.1, 10.0);
    double want = oracle::euclidean_circumradius(t.a, t.b, t.c);
    EXPECT_NEAR(menger_triangle(t), want, 1e-8 * want);
  }
}

TEST(MengerTriangle, SphericalOctant) {
  EXPECT_NEAR(menger_triangle({kPi / 2, kPi / 2, kPi / 2}, Geometry::spherical),
              std::sqrt(2.0) / 2.0, 1e-12);
}

TEST(MengerTriangle, SphericalMatchesEmbeddingOracle) {
  std::mt19937_64 rng(2);
  int checked = 0;
  while (checked < 2000) {
    auto t = random_triangle(rng, 0.05, 2.0);
    if (t.a + t.b + t.c >= 2 * kPi) continue;
    double want = oracle::spherical_cot_circumradius(t.a, t.b, t.c);
    EXPECT_NEAR(menger_triangle(t, Geometry::spherical), want, 1e-7 * (1 + want));
    ++checked;
  }
}

TEST(MengerTriangle, HyperbolicMatchesHyperboloidOracle) {
  std::mt19937_64 rng(3);
  int checked = 0;
  for (int i = 0; i < 20000 && checked < 1000; ++i) {
    auto t = random_triangle(rng, 0.05, 1.5);
    auto want = oracle::hyperbolic_coth_circumradius(t.a, t.b, t.c);
    if (!want || *want > 1e4) continue;
    EXPECT_NEAR(menger_triangle(t, Geometry::hyperbolic), *want, 1e-6 * *want);
    ++checked;
  }
  EXPECT_GT(checked, 500);
}

TEST(MengerTriangle, Errors) {
  EXPECT_THROW(menger_triangle({1, 1, 2}), InfiniteCurvatureError);
  EXPECT_THROW(menger_triangle({1, 2, 0.5}), InfiniteCurvatureError);
  EXPECT_THROW(menger_triangle({0, 1, 1}), DomainError);
  EXPECT_THROW(menger_triangle({-1, 1, 1}), DomainError);
  EXPECT_THROW(menger_triangle({kPi, 2, 2}, Geometry::spherical), DomainError);
  EXPECT_THROW(menger_triangle({2.2, 2.2, 2.2}, Geometry::spherical), DomainError);
}

TEST(MengerTriangle, PermutationSymmetry) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 10000; ++i) {
    auto t = random_triangle(rng, 0.01, 3.0);
    for (Geometry g : {Geometry::euclidean, Geometry::hyperbolic, Geometry::spherical}) {
      if (g == Geometry::spherical && t.a + t.b + t.c >= 2 * kPi) continue;
      const double k = menger_triangle(t, g);
      EXPECT_EQ(menger_triangle({t.b, t.a, t.c}, g), k);
      EXPECT_EQ(menger_triangle({t.c, t.b, t.a}, g), k);
      EXPECT_EQ(menger_triangle({t.b, t.c, t.a}, g), k);
      EXPECT_EQ(menger_triangle({t.a, t.c, t.b}, g), k);
      EXPECT_EQ(menger_triangle({t.c, t.a, t.b}, g), k);
    }
  }
}

TEST(MengerTriangle, EuclideanScaleLaw) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> scale(0.01, 100.0);
  for (int i = 0; i < 10000; ++i) {
    auto t = random_triangle(rng, 0.1, 10.0);
    const double l = scale(rng);
    const double k = menger_triangle(t);
    EXPECT_NEAR(menger_triangle({l * t.a, l * t.b, l * t.c}), l * k, 1e-10 * l * k);
  }
}

TEST(MengerTriangle, CurvedFormsApproachReciprocalEuclideanForSmallTriangles) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 500; ++i) {
    auto t = random_triangle(rng, 0.5, 1.5);
    const double l = 1e-4;
    MetricTriangle small{l * t.a, l * t.b, l * t.c};
    const double inv = 1.0 / menger_triangle(small);
    EXPECT_NEAR(menger_triangle(small, Geometry::spherical), inv, 1e-6 * inv);
    EXPECT_NEAR(menger_triangle(small, Geometry::hyperbolic), inv, 1e-6 * inv);
  }
}

TEST(MengerRicci, TriangleCountOnCombinatorialGraphs) {
  const double unit = std::sqrt(3.0) / 3.0;
  for (int trial = 0; trial < 10; ++trial) {
    Network net = oracle::random_graph(15, 0.3, 700 + trial);
    for (EdgeId e = 0; e < net.edge_count(); ++e) {
      const auto t = oracle::triangle_count(net, net.edge(e).u, net.edge(e).v);
      EXPECT_NEAR(menger_ricci(net, {}, e), unit * static_cast<double>(t), 1e-12);
    }
  }
}

TEST(MengerRicci, TreeIsFlat) {
  Network tree(6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {3, 5}});
  for (EdgeId e = 0; e < tree.edge_count(); ++e) EXPECT_EQ(menger_ricci(tree, {}, e), 0.0);
}

TEST(MengerRicci, DirectedSigns) {
  // Edge 0->1 with feed-forward apex 2, feed-backward apex 3, mixed apex 4.
  Network net(5, {{0, 1}, {0, 2}, {2, 1}, {3, 0}, {1, 3}, {0, 4}, {1, 4}}, true);
  EXPECT_NEAR(menger_ricci(net, {}, 0), 0.0, 1e-15);
  Network ff(3, {{0, 1}, {0, 2}, {2, 1}}, true);
  EXPECT_NEAR(menger_ricci(ff, {}, 0), std::sqrt(3.0) / 3.0, 1e-15);
  Network fb(3, {{0, 1}, {2, 0}, {1, 2}}, true);
  EXPECT_NEAR(menger_ricci(fb, {}, 0), -std::sqrt(3.0) / 3.0, 1e-15);
}

TEST(MengerRicci, WeightedUsesEdgeLengths) {
  Network net(3, {{0, 1}, {1, 2}, {0, 2}}, false, {5, 3, 4});
  EXPECT_NEAR(menger_ricci(net, {LengthSource::edge_weights}, 0), 2.5, 1e-15);
  Network flat(3, {{0, 1}, {1, 2}, {0, 2}}, false, {2, 1, 1});
  EXPECT_THROW(menger_ricci(flat, {LengthSource::edge_weights}, 0), InfiniteCurvatureError);
}

TEST(MengerScalar, SumsIncidentEdges) {
  Network k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const double unit = std::sqrt(3.0) / 3.0;
  EXPECT_NEAR(menger_scalar(k4, {}, 0), 3 * 2 * unit, 1e-12);
}

TEST(MengerPath, TwoEdgePathIsTriangle) {
  Network k3(3, {{0, 1}, {1, 2}, {0, 2}});
  PathRecord p{{0, 1, 2}, 2.0, 1};
  EXPECT_NEAR(menger_path(k3, {}, p, 1, Geometry::euclidean), std::sqrt(3.0) / 3.0, 1e-15);
  EXPECT_THROW(menger_path(k3, {}, p, 0, Geometry::euclidean), DomainError);
}

TEST(MengerPath, ChordFallsBackToDistance) {
  // Path 0-1-2-3 closed by 0-4-3: chord d(0,3) = 2, sides 1 and 2.
  Network net(5, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {4, 3}});
  PathRecord p{{0, 1, 2, 3}, 3.0, 1};
  EXPECT_NEAR(menger_path(net, {}, p, 1, Geometry::euclidean),
              oracle::euclidean_circumradius(1, 2, 2), 1e-12);
}
