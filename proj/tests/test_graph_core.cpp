#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "metricurv/metricurv.hpp"
#include "oracles.hpp"

using namespace metricurv;

TEST(LoadEdgeList, ReadsPlainPairs) {
  Network net = load_edge_list("0 1\n1 2\n", {});
  EXPECT_EQ(net.vertex_count(), 3u);
  EXPECT_EQ(net.edge_count(), 2u);
  EXPECT_FALSE(net.directed());
  EXPECT_FALSE(net.weighted());
}

TEST(LoadEdgeList, ReadsWeights) {
  Network net = load_edge_list("0 1 2.5\n", {false, true});
  ASSERT_EQ(net.edge_count(), 1u);
  EXPECT_DOUBLE_EQ(net.weight(0), 2.5);
}

TEST(LoadEdgeList, RejectsNegativeWeight) {
  EXPECT_THROW(load_edge_list("0 1 -3\n", {false, true}), ValidationError);
  EXPECT_THROW(load_edge_list("0 1 0\n", {false, true}), ValidationError);
}

TEST(LoadEdgeList, ParseErrorCarriesLine) {
  try {
    load_edge_list("0 1\n# note\n1 2 3 4\n", {});
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
  EXPECT_THROW(load_edge_list("0 1 abc\n", {false, true}), ParseError);
}

TEST(LoadEdgeList, RejectsSelfLoop) { EXPECT_THROW(load_edge_list("4 4\n", {}), ValidationError); }

TEST(LoadEdgeList, FirstAppearanceOrderAndComments) {
  Network net = load_edge_list("# header\nb a  # trailing\na c\nz\n", {});
  ASSERT_EQ(net.vertex_count(), 4u);
  EXPECT_EQ(net.label(0), "b");
  EXPECT_EQ(net.label(1), "a");
  EXPECT_EQ(net.label(2), "c");
  EXPECT_EQ(net.label(3), "z");
  EXPECT_EQ(net.degree(3), 0u);
}

TEST(LoadEdgeList, CollapsesUndirectedDuplicatesKeepingFirstWeight) {
  std::size_t dup = 0;
  Network net = load_edge_list("0 1 2\n1 0 5\n0 1 7\n", {false, true}, &dup);
  ASSERT_EQ(net.edge_count(), 1u);
  EXPECT_EQ(dup, 2u);
  EXPECT_DOUBLE_EQ(net.weight(0), 2.0);
}

TEST(LoadEdgeList, DirectedKeepsBothOrientations) {
  Network net = load_edge_list("0 1\n1 0\n", {true, false});
  EXPECT_EQ(net.edge_count(), 2u);
  EXPECT_TRUE(net.find_edge(0, 1).has_value());
  EXPECT_TRUE(net.find_edge(1, 0).has_value());
}

TEST(LoadEdgeList, RoundTripsThroughWriter) {
  Network net = load_edge_list("x y 0.1\ny z 3\nw\n", {false, true});
  std::ostringstream out;
  write_edge_list(out, net);
  Network back = load_edge_list(out.str(), {false, true});
  ASSERT_EQ(back.vertex_count(), net.vertex_count());
  ASSERT_EQ(back.edge_count(), net.edge_count());
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    EXPECT_EQ(back.weight(e), net.weight(e));
    EXPECT_EQ(back.label(back.edge(e).u), net.label(net.edge(e).u));
  }
}

TEST(Network, Invariants) {
  EXPECT_THROW(Network(2, {{0, 0}}), ValidationError);
  EXPECT_THROW(Network(2, {{0, 1}, {1, 0}}), ValidationError);
  EXPECT_NO_THROW(Network(2, {{0, 1}, {1, 0}}, true));
  EXPECT_THROW(Network(2, {{0, 1}, {0, 1}}, true), ValidationError);
  EXPECT_THROW(Network(2, {{0, 2}}), ValidationError);
  EXPECT_THROW(Network(2, {{0, 1}}, false, {0.0}), ValidationError);
  EXPECT_THROW(Network(2, {{0, 1}}, false, {INFINITY}), ValidationError);
}

TEST(Network, FaceInvariants) {
  std::vector<Edge> square = {{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  EXPECT_NO_THROW(Network(4, square, false, {}, {Face{{0, 1, 2, 3}}}));
  EXPECT_THROW(Network(4, square, false, {}, {Face{{0, 1, 2}}}), ValidationError);  // no edge 2-0
  EXPECT_THROW(Network(4, square, false, {}, {Face{{0, 1}}}), ValidationError);
  EXPECT_THROW(Network(4, square, false, {}, {Face{{0, 1, 0, 3}}}), ValidationError);
  Face heavy{{0, 1, 2, 3}};
  heavy.weight = -1;
  EXPECT_THROW(Network(4, square, false, {}, {heavy}), ValidationError);
}

TEST(Faces, SidecarRoundTrip) {
  Network net = load_edge_list("a b\nb c\nc a\n", {});
  std::istringstream in("F a b c w=2 m=3 o=-1\n");
  auto faces = load_faces(in, net);
  ASSERT_EQ(faces.size(), 1u);
  EXPECT_EQ(faces[0].multiplicity, 3);
  EXPECT_TRUE(faces[0].retrograde);
  EXPECT_DOUBLE_EQ(faces[0].weight, 2.0);
  Network with = net.with_faces(faces);
  std::ostringstream out;
  write_faces(out, with);
  EXPECT_EQ(out.str(), "F a b c w=2 m=3 o=-1\n");
  std::istringstream bad("F a b q\n");
  EXPECT_THROW(load_faces(bad, net), ParseError);
}

TEST(EdgeLength, Sources) {
  // Star centre 0 with degree 4, plus a 4-cycle on the leaves keeps 1..4 at degree 3.
  Network net(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4}, {4, 1}}, false,
              {1, 2.5, 1, 1, 1, 1, 1, 1});
  EXPECT_EQ(edge_length(net, {}, 0), 1.0);
  EXPECT_EQ(edge_length(net, {LengthSource::edge_weights}, 1), 2.5);
  EXPECT_DOUBLE_EQ(edge_length(net, {LengthSource::path_degree}, 0), 1.0 / std::sqrt(12.0));
  Network reg(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 2}, {1, 3}, {2, 4}, {3, 0}, {4, 1}});
  EXPECT_EQ(edge_length(reg, {LengthSource::path_degree}, 0), 0.25);
}

TEST(EdgeLength, PathDegreeNeedsUndirected) {
  Network net(2, {{0, 1}}, true);
  EXPECT_THROW(edge_length(net, {LengthSource::path_degree}, 0), ValidationError);
}

TEST(ShortestPath, Basics) {
  Network path(3, {{0, 1}, {1, 2}});
  EXPECT_EQ(shortest_path_length(path, {}, 0, 2), 2.0);
  EXPECT_EQ(shortest_path_length(path, {}, 1, 1), 0.0);
  Network split(4, {{0, 1}, {2, 3}});
  EXPECT_FALSE(shortest_path_length(split, {}, 0, 3).has_value());
  Network arrow(2, {{0, 1}}, true);
  EXPECT_EQ(shortest_path_length(arrow, {}, 0, 1), 1.0);
  EXPECT_FALSE(shortest_path_length(arrow, {}, 1, 0).has_value());
}

TEST(ShortestPath, MatchesFloydWarshallOnWeightedGraphs) {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> w(0.1, 3.0);
  for (int trial = 0; trial < 30; ++trial) {
    Network base = oracle::random_graph(9, 0.3, 100 + trial, trial % 2 == 1);
    std::vector<double> weights(base.edge_count());
    for (double& x : weights) x = w(rng);
    Network net(base.vertex_count(), {base.edges().begin(), base.edges().end()}, base.directed(),
                weights);
    MetricContext ctx{LengthSource::edge_weights};
    auto d = oracle::all_pairs(net, ctx);
    for (Vertex s = 0; s < net.vertex_count(); ++s) {
      auto got = shortest_path_lengths(net, ctx, s);
      for (Vertex t = 0; t < net.vertex_count(); ++t) {
        if (d[s][t] == oracle::kInf) {
          EXPECT_EQ(got[t], kUnreachable);
        } else {
          EXPECT_NEAR(got[t], d[s][t], 1e-12);
        }
      }
    }
  }
}

TEST(SimplePaths, TriangleExcludingDirectEdge) {
  Network k3(3, {{0, 1}, {1, 2}, {0, 2}});
  auto paths = enumerate_simple_paths(k3, {}, 0, 1, 5, true);
  ASSERT_EQ(paths.size(), 1u);
  EXPECT_EQ(paths[0].vertices, (std::vector<Vertex>{0, 2, 1}));
  EXPECT_EQ(paths[0].length, 2.0);
}

TEST(SimplePaths, K4Count) {
  Network k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(enumerate_simple_paths(k4, {}, 0, 1, 3, true).size(), 4u);
  EXPECT_EQ(enumerate_simple_paths(k4, {}, 0, 1, 3, false).size(), 5u);
}

TEST(SimplePaths, DirectedFollowsArrows) {
  Network net(3, {{0, 2}, {2, 1}, {0, 1}}, true);
  EXPECT_EQ(enumerate_simple_paths(net, {}, 0, 1, 5, true).size(), 1u);
  EXPECT_EQ(enumerate_simple_paths(net, {}, 1, 0, 5, true).size(), 0u);
}

TEST(SimplePaths, MatchBruteForceOnSmallGraphs) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const bool directed = trial % 3 == 0;
    Network net = oracle::random_graph(7 + trial % 2, 0.45, 900 + trial, directed);
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(net.vertex_count() - 1));
    for (int q = 0; q < 6; ++q) {
      Vertex u = pick(rng), v = pick(rng);
      if (u == v) continue;
      for (int k = 1; k <= 6; ++k) {
        for (bool excl : {false, true}) {
          auto got = enumerate_simple_paths(net, {}, u, v, k, excl);
          auto want = oracle::all_simple_paths(net, {}, u, v, k, excl);
          ASSERT_EQ(got.size(), want.size());
          for (std::size_t i = 0; i < got.size(); ++i) {
            EXPECT_EQ(got[i].vertices, want[i].vertices);  // lexicographic order
            EXPECT_EQ(got[i].length, want[i].length);
          }
        }
      }
    }
  }
}

TEST(SimplePaths, PathRecordInvariants) {
  Network base = oracle::random_graph(8, 0.5, 42);
  std::vector<double> w(base.edge_count());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = 0.3 + 0.17 * static_cast<double>(i % 7);
  Network net(8, {base.edges().begin(), base.edges().end()}, false, w);
  MetricContext ctx{LengthSource::edge_weights};
  for (const auto& p : enumerate_simple_paths(net, ctx, 0, 5, 6, false)) {
    std::vector<Vertex> sorted = p.vertices;
    std::sort(sorted.begin(), sorted.end());
    EXPECT_EQ(std::adjacent_find(sorted.begin(), sorted.end()), sorted.end());
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < p.vertices.size(); ++i) {
      auto e = net.find_edge(p.vertices[i], p.vertices[i + 1]);
      ASSERT_TRUE(e.has_value());
      sum += net.weight(*e);
    }
    EXPECT_NEAR(p.length, sum, 1e-12 * sum);
  }
}

TEST(Triangles, MatchBruteForce) {
  for (int trial = 0; trial < 20; ++trial) {
    Network net = oracle::random_graph(12, 0.4, 300 + trial, trial % 2 == 0);
    for (EdgeId e = 0; e < net.edge_count(); ++e) {
      const Edge& ed = net.edge(e);
      auto ts = enumerate_triangles(net, e);
      EXPECT_EQ(ts.size(), oracle::triangle_count(net, ed.u, ed.v));
      for (const auto& t : ts) {
        EXPECT_TRUE(net.adjacent(t.u, t.w));
        EXPECT_TRUE(net.adjacent(t.v, t.w));
      }
    }
  }
}

TEST(CycleSign, Classes) {
  // u=0 -> v=1 with a feed-forward apex 2, a feed-backward apex 3, a mixed apex 4.
  Network net(5, {{0, 1}, {0, 2}, {2, 1}, {3, 0}, {1, 3}, {0, 4}, {1, 4}}, true);
  std::vector<Vertex> ff{0, 2, 1}, fb{0, 3, 1}, mixed{0, 4, 1};
  EXPECT_EQ(cycle_sign(net, {0, 1}, ff), 1);
  EXPECT_EQ(cycle_sign(net, {0, 1}, fb), -1);
  EXPECT_EQ(cycle_sign(net, {0, 1}, mixed), 0);
  Network und(3, {{0, 1}, {1, 2}, {0, 2}});
  std::vector<Vertex> p{0, 2, 1};
  EXPECT_EQ(cycle_sign(und, {0, 1}, p), 1);
}

TEST(Cells, DeclaredFacesRepeatByMultiplicity) {
  Face f{{0, 1, 2, 3, 4}};
  f.multiplicity = 5;
  Network net(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}}, false, {}, {f});
  auto cells = enumerate_cells(net, {}, 0, 6);
  ASSERT_EQ(cells.size(), 5u);
  EXPECT_EQ(cells[0].boundary.vertices, (std::vector<Vertex>{0, 4, 3, 2, 1}));
  EXPECT_EQ(cells[0].boundary.length, 4.0);
}

TEST(Cells, ImplicitCellsAreClosingPaths) {
  Network k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  EXPECT_EQ(enumerate_cells(k4, {}, 0, 3).size(), 2u);
  EXPECT_EQ(enumerate_cells(k4, {}, 0, 4).size(), 4u);
}

TEST(Format, TwelveSignificantDigits) {
  EXPECT_EQ(format_number(1.0 / 3.0), "0.333333333333");
  EXPECT_EQ(format_number(2.0), "2");
  EXPECT_EQ(format_number(-0.0), "0");
  EXPECT_EQ(format_number(std::nan("")), "nan");
  EXPECT_EQ(format_number(4 * std::numbers::pi - 2), "10.5663706144");
}
