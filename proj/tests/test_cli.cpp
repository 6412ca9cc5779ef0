#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>

#include <json.hpp>

#include "metricurv/metricurv.hpp"

using namespace metricurv;

namespace {

const std::string kData = TEST_DATA_DIR;

int run(const std::string& args) {
  const std::string cmd = std::string(CLI_PATH) + " " + args + " >cli_stdout.txt 2>cli_stderr.txt";
  int status = std::system(cmd.c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

std::vector<std::vector<std::string>> csv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

}  // namespace

TEST(Cli, HaantjesSimpleOnTriangle) {
  ASSERT_EQ(run("curvature " + kData + "/k3.txt --measure haantjes-simple --max-path-len 2"), 0);
  auto rows = csv(slurp("cli_stdout.txt"));
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"u", "v", "value"}));
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_EQ(rows[i][2], "1");
}

TEST(Cli, MengerOnTreeIsZero) {
  ASSERT_EQ(run("curvature " + kData + "/tree.txt --measure menger-ricci"), 0);
  auto rows = csv(slurp("cli_stdout.txt"));
  ASSERT_EQ(rows.size(), 6u);
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_EQ(rows[i][2], "0");
}

TEST(Cli, StrongOnWrappedCubicLattice) {
  ASSERT_EQ(run("generate lattice --kind cubic --dims 4x4x4 --wrap --output cube.txt "
                "--faces-output cube.faces"),
            0);
  ASSERT_EQ(run("curvature cube.txt --faces cube.faces --measure haantjes-strong --format json "
                "--output cube.json"),
            0);
  auto doc = nlohmann::json::parse(slurp("cube.json"));
  ASSERT_EQ(doc["rows"].size(), 192u);
  const double want = 8 * std::numbers::pi - 4 * std::sqrt(2.0);
  for (const auto& row : doc["rows"]) EXPECT_NEAR(row["value"].get<double>(), want, 1e-12);
  EXPECT_EQ(doc["manifest"]["haantjes"]["variant"], "strong");
  EXPECT_EQ(doc["manifest"]["metric"]["length_source"], "comb");
}

TEST(Cli, ValuesMatchLibraryToTwelveDigits) {
  ASSERT_EQ(run("curvature " + kData + "/karate.txt --measure ollivier --output k.csv"), 0);
  Network net = load_edge_list(slurp(kData + "/karate.txt"), {});
  auto rows = csv(slurp("k.csv"));
  ASSERT_EQ(rows.size(), net.edge_count() + 1);
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    EXPECT_EQ(rows[e + 1][0], net.label(net.edge(e).u));
    EXPECT_EQ(rows[e + 1][2], format_number(ollivier(net, e)));
  }
  auto man = nlohmann::json::parse(slurp("k.csv.manifest.json"));
  EXPECT_EQ(man["input"]["vertices"], 34);
  EXPECT_EQ(man["input"]["edges"], 78);
}

TEST(Cli, ScalarRows) {
  ASSERT_EQ(run("curvature " + kData + "/k3.txt --measure menger-ricci --scalar"), 0);
  auto rows = csv(slurp("cli_stdout.txt"));
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"v", "value"}));
  EXPECT_EQ(rows[1][1], format_number(2 * std::sqrt(3.0) / 3));
}

TEST(Cli, ThreadsKeepOutputIdentical) {
  ASSERT_EQ(run("curvature " + kData + "/karate.txt --measure haantjes-simple --output t1.csv"), 0);
  ASSERT_EQ(run("curvature " + kData +
                "/karate.txt --measure haantjes-simple --threads 3 --output t3.csv"),
            0);
  EXPECT_EQ(slurp("t1.csv"), slurp("t3.csv"));
}

TEST(Cli, GeometryWithHaantjesIsUsageError) {
  EXPECT_EQ(run("curvature " + kData + "/k3.txt --measure haantjes-simple --geometry sph"), 2);
  EXPECT_EQ(run("curvature " + kData + "/k3.txt --measure menger-ricci --geometry sph"), 0);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run("curvature " + kData + "/k3.txt --measure nope"), 2);
  EXPECT_EQ(run("curvature " + kData + "/k3.txt"), 2);
  EXPECT_EQ(run("frobnicate"), 2);
  EXPECT_EQ(run("curvature missing-file.txt --measure forman"), 3);
  {
    std::ofstream bad("bad.txt");
    bad << "0 1 -2\n";
  }
  EXPECT_EQ(run("curvature bad.txt --weighted --measure forman"), 3);
  EXPECT_EQ(run("curvature " + kData + "/k3.txt --directed --measure forman"), 4);
  EXPECT_EQ(run("generate ws --n 10 --k 3 --beta 0.1"), 2);
}

TEST(Cli, GenerateIsDeterministic) {
  ASSERT_EQ(run("generate er --n 1000 --p 0.004 --seed 7 --output er1.txt"), 0);
  ASSERT_EQ(run("generate er --n 1000 --p 0.004 --seed 7 --output er2.txt"), 0);
  EXPECT_EQ(slurp("er1.txt"), slurp("er2.txt"));
  EXPECT_FALSE(slurp("er1.txt").empty());
  auto man = nlohmann::json::parse(slurp("er1.txt.manifest.json"));
  EXPECT_EQ(man["seeds"][0], 7);
  ASSERT_EQ(run("generate er --n 1000 --p 0.004 --seed 8 --output er3.txt"), 0);
  EXPECT_NE(slurp("er1.txt"), slurp("er3.txt"));
}

TEST(Cli, GenerateTriangularLatticeFaces) {
  ASSERT_EQ(run("generate lattice --kind triangular --dims 20x20 --wrap --output tri.txt"), 0);
  Network net = load_edge_list(slurp("tri.txt"), {});
  std::ifstream faces("tri.txt.faces");
  net = net.with_faces(load_faces(faces, net));
  EXPECT_EQ(net.faces().size(), 800u);
  for (EdgeId e = 0; e < net.edge_count(); ++e) {
    ASSERT_EQ(net.faces_at(e).size(), 2u);
    for (std::size_t f : net.faces_at(e)) EXPECT_EQ(net.faces()[f].boundary.size(), 3u);
  }
}

TEST(Cli, GeneratePolyhedronPassesEulerCheck) {
  ASSERT_EQ(run("generate polyhedron --name truncated_octahedron --output to.txt"), 0);
  Network net = load_edge_list(slurp("to.txt"), {});
  std::ifstream faces("to.txt.faces");
  net = net.with_faces(load_faces(faces, net));
  EXPECT_EQ(static_cast<long>(net.vertex_count()) - static_cast<long>(net.edge_count()) +
                static_cast<long>(net.faces().size()),
            2);
  EXPECT_EQ(run("generate polyhedron --name cube"), 2);
}

TEST(Cli, CompareSelfAndTriangleCount) {
  ASSERT_EQ(run("compare " + kData +
                "/karate.txt --measure-a menger-ricci --measure-b menger-ricci"),
            0);
  auto rows = csv(slurp("cli_stdout.txt"));
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0][4], "pearson");
  EXPECT_EQ(rows[1][4], "1");
  ASSERT_EQ(run("compare " + kData +
                "/karate.txt --measure-a menger-ricci --measure-b haantjes-simple "
                "--sweep-max-path-len 2:5"),
            0);
  rows = csv(slurp("cli_stdout.txt"));
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[1][0], "2");
  EXPECT_EQ(std::stod(rows[1][4]), 1.0);
  EXPECT_EQ(rows[4][0], "5");
}

TEST(Cli, CompareZeroVarianceIsReported) {
  ASSERT_EQ(run("compare " + kData + "/tree.txt --measure-a menger-ricci --measure-b forman"), 0);
  auto rows = csv(slurp("cli_stdout.txt"));
  EXPECT_EQ(rows[1][4], "nan");
}

TEST(Cli, HistogramOfReport) {
  ASSERT_EQ(run("curvature " + kData + "/karate.txt --measure haantjes-simple --output h.csv"), 0);
  ASSERT_EQ(run("histogram h.csv --bins 7"), 0);
  const std::string from_csv = slurp("cli_stdout.txt");
  auto rows = csv(from_csv);
  ASSERT_EQ(rows.size(), 8u);
  EXPECT_EQ(rows[0], (std::vector<std::string>{"bin_low", "bin_high", "count"}));
  long total = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) total += std::stol(rows[i][2]);
  EXPECT_EQ(total, 78);
  ASSERT_EQ(run("curvature " + kData +
                "/karate.txt --measure haantjes-simple --format json --output h.json"),
            0);
  ASSERT_EQ(run("histogram h.json --bins 7 --output hj.csv"), 0);
  EXPECT_EQ(slurp("hj.csv"), from_csv);
}

TEST(Cli, HistogramOfIdenticalValues) {
  {
    std::ofstream r("same.csv");
    r << "u,v,value\n";
    for (int i = 0; i < 100; ++i) r << i << ',' << i + 1 << ",3\n";
  }
  ASSERT_EQ(run("histogram same.csv --bins 10"), 0);
  auto rows = csv(slurp("cli_stdout.txt"));
  int nonzero = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) nonzero += rows[i][2] != "0";
  EXPECT_EQ(nonzero, 1);
  {
    std::ofstream r("empty.csv");
    r << "u,v,value\n";
  }
  EXPECT_EQ(run("histogram empty.csv --bins 10"), 3);
}
