#pragma once

#include <array>
#include <fstream>
#include <string>
#include <string_view>
#include <vector>

#include "metricurv/errors.hpp"
#include "metricurv/io.hpp"
#include "metricurv/network.hpp"

namespace metricurv {

struct DatasetInfo {
  std::string_view name;
  std::size_t vertices;
  std::size_t edges;
  bool directed;
};

inline constexpr std::array<DatasetInfo, 6> kDatasets = {{
    {"karate", 34, 78, false},
    {"euroroad", 1174, 1417, false},
    {"yeast", 1870, 2277, false},
    {"powergrid", 4941, 6594, false},
    {"airtraffic", 1226, 2613, true},
    {"ecoli", 3073, 7853, true},
}};

struct LoadedDataset {
  Network network;
  std::vector<std::string> warnings;
};

/// Loads a local edge-list file. For a known dataset name the direction flag
/// is taken from the table above and size mismatches become warnings; any
/// other name loads the file as undirected without checks.
inline LoadedDataset fetch_real_network(std::string_view name, const std::string& path) {
  const DatasetInfo* info = nullptr;
  for (const auto& d : kDatasets) {
    if (d.name == name) info = &d;
  }
  std::ifstream in(path);
  if (!in) throw IoError("cannot open '" + path + "'");
  LoadOptions options;
  options.directed = info != nullptr && info->directed;
  LoadedDataset out{load_edge_list(in, options), {}};
  if (in.bad()) throw IoError("error reading '" + path + "'");
  if (info != nullptr) {
    const Network& net = out.network;
    if (net.vertex_count() != info->vertices) {
      out.warnings.push_back(std::string(name) + ": expected " + std::to_string(info->vertices) +
                             " vertices, found " + std::to_string(net.vertex_count()));
    }
    if (net.edge_count() != info->edges) {
      out.warnings.push_back(std::string(name) + ": expected " + std::to_string(info->edges) +
                             " edges, found " + std::to_string(net.edge_count()));
    }
  }
  return out;
}

}  // namespace metricurv
