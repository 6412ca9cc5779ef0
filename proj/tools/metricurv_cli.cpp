// metricurv: batch front end for the curvature library.

#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "metricurv/metricurv.hpp"

namespace mc = metricurv;
using nlohmann::json;

namespace {

constexpr const char* kVersion = "0.1.0";

enum Exit { kOk = 0, kUsage = 2, kInput = 3, kCompute = 4 };

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Common {
  std::string input;
  bool directed = false;
  bool weighted = false;
  std::string metric = "comb";
  std::string geometry = "euc";
  int max_path_len = 5;
  std::string faces;
  std::string output;
  std::string format = "csv";
  unsigned threads = 1;
  double idleness = 0.0;
  bool strict_sign = false;
  bool face_weights = false;
  CLI::Option* geometry_opt = nullptr;
};

void add_common(CLI::App* app, Common& c) {
  app->add_option("input", c.input, "edge-list file")->required();
  app->add_flag("--directed", c.directed, "treat edges as directed");
  app->add_flag("--weighted", c.weighted, "read a third column of edge weights");
  app->add_option("--metric", c.metric, "edge lengths")
      ->check(CLI::IsMember({"comb", "weights", "pathdeg"}));
  c.geometry_opt = app->add_option("--geometry", c.geometry, "Menger model geometry")
                       ->check(CLI::IsMember({"euc", "sph", "hyp"}));
  app->add_option("--max-path-len", c.max_path_len, "Haantjes path cutoff in edges")
      ->check(CLI::PositiveNumber);
  app->add_option("--faces", c.faces, "face sidecar file");
  app->add_option("--output", c.output, "output file (default stdout)");
  app->add_option("--format", c.format, "output format")->check(CLI::IsMember({"csv", "json"}));
  app->add_option("--threads", c.threads, "worker threads")->check(CLI::PositiveNumber);
  app->add_option("--idleness", c.idleness, "Ollivier idleness in [0, 1)");
  app->add_flag("--strict-sign", c.strict_sign,
                "reject paths shorter than their chord instead of signing them");
  app->add_flag("--face-weights", c.face_weights, "divide sectional curvature by face weight");
}

mc::MetricContext context(const Common& c) {
  mc::MetricContext ctx;
  if (c.metric == "weights") ctx.length_source = mc::LengthSource::edge_weights;
  if (c.metric == "pathdeg") ctx.length_source = mc::LengthSource::path_degree;
  if (c.geometry == "sph") ctx.geometry = mc::Geometry::spherical;
  if (c.geometry == "hyp") ctx.geometry = mc::Geometry::hyperbolic;
  return ctx;
}

mc::EvalOptions eval_options(const Common& c) {
  mc::EvalOptions opt;
  opt.ctx = context(c);
  opt.haantjes.max_path_edges = c.max_path_len;
  opt.haantjes.weighted_sign_rule = !c.strict_sign;
  opt.haantjes.use_face_weights = c.face_weights;
  opt.idleness = c.idleness;
  opt.threads = c.threads;
  return opt;
}

mc::Network load_input(const Common& c) {
  if (c.metric == "weights" && !c.weighted) throw UsageError("--metric weights needs --weighted");
  std::ifstream in(c.input);
  if (!in) throw mc::IoError("cannot open '" + c.input + "'");
  mc::Network net = mc::load_edge_list(in, {c.directed, c.weighted});
  if (!c.faces.empty()) {
    std::ifstream fin(c.faces);
    if (!fin) throw mc::IoError("cannot open '" + c.faces + "'");
    net = net.with_faces(mc::load_faces(fin, net));
  }
  return net;
}

json manifest(const std::string& command, const Common& c, const mc::Network& net,
              const mc::EvalOptions& opt, double seconds) {
  const char* variant =
      opt.haantjes.variant == mc::HaantjesVariant::strong ? "strong" : "simple";
  return json{
      {"command", command},
      {"input",
       {{"path", c.input},
        {"vertices", net.vertex_count()},
        {"edges", net.edge_count()},
        {"directed", net.directed()},
        {"weighted", net.weighted()},
        {"faces", c.faces}}},
      {"metric",
       {{"length_source", mc::to_string(opt.ctx.length_source)},
        {"geometry", mc::to_string(opt.ctx.geometry)}}},
      {"haantjes",
       {{"max_path_edges", opt.haantjes.max_path_edges},
        {"variant", variant},
        {"weighted_sign_rule", opt.haantjes.weighted_sign_rule},
        {"use_face_weights", opt.haantjes.use_face_weights}}},
      {"seeds", json::array()},
      {"version", kVersion},
      {"duration_seconds", seconds}};
}

// A table of string cells plus the numeric values behind them, rendered as
// CSV (12 significant digits) or as JSON rows.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<json>> rows;
};

std::string csv_cell(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_null()) return "nan";
  if (v.is_number_float()) return mc::format_number(v.get<double>());
  return v.dump();
}

json number(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

void emit(const Table& t, const json& man, const std::string& output, const std::string& format) {
  std::ostringstream body;
  if (format == "json") {
    json rows = json::array();
    for (const auto& r : t.rows) {
      json o = json::object();
      for (std::size_t i = 0; i < t.header.size(); ++i) o[t.header[i]] = r[i];
      rows.push_back(o);
    }
    body << json{{"manifest", man}, {"rows", rows}}.dump(2) << '\n';
  } else {
    for (std::size_t i = 0; i < t.header.size(); ++i) body << (i ? "," : "") << t.header[i];
    body << '\n';
    for (const auto& r : t.rows) {
      for (std::size_t i = 0; i < r.size(); ++i) body << (i ? "," : "") << csv_cell(r[i]);
      body << '\n';
    }
  }
  if (output.empty()) {
    std::cout << body.str();
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) throw mc::IoError("cannot write '" + output + "'");
  out << body.str();
  if (format == "csv") {
    std::ofstream side(output + ".manifest.json", std::ios::binary);
    side << man.dump(2) << '\n';
  }
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

mc::Measure measure_of(const std::string& name) {
  auto m = mc::parse_measure(name);
  if (!m) throw UsageError("unknown measure '" + name + "'");
  return *m;
}

void check_geometry(const Common& c, mc::Measure m) {
  if (c.geometry_opt->count() > 0 && mc::is_haantjes(m)) {
    throw UsageError("--geometry applies to Menger measures only");
  }
}

mc::EvalOptions options_for(const Common& c, mc::Measure m) {
  mc::EvalOptions opt = eval_options(c);
  if (m == mc::Measure::haantjes_strong) opt.haantjes.variant = mc::HaantjesVariant::strong;
  return opt;
}

int cmd_curvature(const Common& c, const std::string& measure_name, bool scalar, bool normalize) {
  const auto t0 = std::chrono::steady_clock::now();
  const mc::Measure m = measure_of(measure_name);
  check_geometry(c, m);
  if (normalize && m != mc::Measure::betweenness) {
    throw UsageError("--normalize applies to betweenness only");
  }
  const mc::Network net = load_input(c);
  const mc::EvalOptions opt = options_for(c, m);
  std::vector<double> values = mc::edge_values(net, m, opt);
  if (normalize) {
    const double n = static_cast<double>(net.vertex_count());
    const double pairs = net.directed() ? n * (n - 1) : n * (n - 1) / 2;
    for (double& x : values) x = pairs > 0 ? x / pairs : 0.0;
  }
  Table t;
  if (scalar) {
    t.header = {"v", "value"};
    const auto per_vertex = mc::vertex_values(net, values);
    for (mc::Vertex v = 0; v < net.vertex_count(); ++v) {
      t.rows.push_back({net.label(v), number(per_vertex[v])});
    }
  } else {
    t.header = {"u", "v", "value"};
    for (mc::EdgeId e = 0; e < net.edge_count(); ++e) {
      const mc::Edge& ed = net.edge(e);
      t.rows.push_back({net.label(ed.u), net.label(ed.v), number(values[e])});
    }
  }
  json man = manifest("curvature " + measure_name + (scalar ? " --scalar" : ""), c, net, opt,
                      seconds_since(t0));
  man["measure"] = measure_name;
  emit(t, man, c.output, c.format);
  return kOk;
}

std::vector<json> correlation_row(int cutoff, const std::string& a, const std::string& b,
                                  const mc::CorrelationResult& r) {
  return {cutoff, a, b, r.n, r.pearson ? json(*r.pearson) : json(nullptr),
          number(r.a.mean), number(r.a.sd), number(r.a.min), number(r.a.max),
          number(r.b.mean), number(r.b.sd), number(r.b.min), number(r.b.max)};
}

std::pair<int, int> parse_sweep(const std::string& s) {
  auto colon = s.find(':');
  if (colon == std::string::npos) throw UsageError("sweep must look like LO:HI");
  auto lo = mc::parse_int(std::string_view(s).substr(0, colon));
  auto hi = mc::parse_int(std::string_view(s).substr(colon + 1));
  if (!lo || !hi || *lo < 1 || *hi < *lo) throw UsageError("bad sweep range '" + s + "'");
  return {static_cast<int>(*lo), static_cast<int>(*hi)};
}

int cmd_compare(const Common& c, const std::string& a_name, const std::string& b_name,
                const std::string& sweep) {
  const auto t0 = std::chrono::steady_clock::now();
  const mc::Measure a = measure_of(a_name);
  const mc::Measure b = measure_of(b_name);
  check_geometry(c, a);
  check_geometry(c, b);
  const mc::Network net = load_input(c);
  Table t;
  t.header = {"max_path_len", "measure_a", "measure_b", "n", "pearson", "mean_a", "sd_a",
              "min_a", "max_a", "mean_b", "sd_b", "min_b", "max_b"};
  mc::EvalOptions opt = eval_options(c);
  if (sweep.empty()) {
    const auto va = mc::edge_values(net, a, options_for(c, a));
    const auto vb = mc::edge_values(net, b, options_for(c, b));
    t.rows.push_back(correlation_row(c.max_path_len, a_name, b_name, mc::correlate(va, vb)));
  } else {
    const auto [lo, hi] = parse_sweep(sweep);
    opt.haantjes.max_path_edges = hi;
    std::optional<std::vector<std::vector<double>>> simple;
    if ((a == mc::Measure::haantjes_simple || b == mc::Measure::haantjes_simple) && lo >= 2) {
      simple = mc::haantjes_simple_sweep(net, hi, opt);
    }
    for (int k = lo; k <= hi; ++k) {
      auto values = [&](mc::Measure m) {
        if (m == mc::Measure::haantjes_simple && simple) return (*simple)[static_cast<std::size_t>(k - 2)];
        mc::EvalOptions o = options_for(c, m);
        o.haantjes.max_path_edges = k;
        return mc::edge_values(net, m, o);
      };
      t.rows.push_back(correlation_row(k, a_name, b_name, mc::correlate(values(a), values(b))));
    }
  }
  json man = manifest("compare " + a_name + " " + b_name, c, net, opt, seconds_since(t0));
  if (!sweep.empty()) man["sweep_max_path_len"] = sweep;
  emit(t, man, c.output, c.format);
  return kOk;
}

struct GenerateArgs {
  std::string model;
  std::size_t n = 0;
  double p = 0.0;
  std::size_t k = 0;
  double beta = 0.0;
  std::size_t m0 = 0;
  std::size_t m = 0;
  std::uint64_t seed = 0;
  std::string kind;
  std::string dims;
  bool wrap = false;
  std::string name;
  std::string output;
  std::string faces_output;
};

std::vector<std::size_t> parse_dims(const std::string& s) {
  std::vector<std::size_t> dims;
  std::size_t start = 0;
  while (start <= s.size()) {
    auto x = s.find('x', start);
    auto part = std::string_view(s).substr(start, x == std::string::npos ? std::string::npos : x - start);
    auto v = mc::parse_int(part);
    if (!v || *v < 1) throw UsageError("bad dims '" + s + "'");
    dims.push_back(static_cast<std::size_t>(*v));
    if (x == std::string::npos) break;
    start = x + 1;
  }
  return dims;
}

int cmd_generate(const GenerateArgs& g) {
  const auto t0 = std::chrono::steady_clock::now();
  mc::Network net(0, {});
  json params;
  json seeds = json::array();
  if (g.model == "er" || g.model == "ws" || g.model == "ba") {
    mc::GeneratorSpec spec;
    if (g.model == "er") spec = mc::er_spec(g.n, g.p, g.seed);
    if (g.model == "ws") spec = mc::ws_spec(g.n, g.k, g.beta, g.seed);
    if (g.model == "ba") spec = mc::ba_spec(g.n, g.m0, g.m, g.seed);
    net = mc::generate(spec);
    params = {{"n", g.n}, {"p", g.p}, {"k", g.k}, {"beta", g.beta}, {"m0", g.m0}, {"m", g.m}};
    seeds.push_back(g.seed);
  } else if (g.model == "lattice") {
    mc::LatticeSpec spec;
    if (g.kind == "triangular") spec.kind = mc::LatticeKind::triangular;
    else if (g.kind == "square") spec.kind = mc::LatticeKind::square;
    else if (g.kind == "hexagonal") spec.kind = mc::LatticeKind::hexagonal;
    else if (g.kind == "cubic") spec.kind = mc::LatticeKind::cubic;
    else throw UsageError("unknown lattice kind '" + g.kind + "'");
    spec.dims = parse_dims(g.dims);
    spec.wrap = g.wrap;
    net = mc::build_lattice(spec);
    params = {{"kind", g.kind}, {"dims", g.dims}, {"wrap", g.wrap}};
  } else {
    net = mc::build_polyhedron(g.name);
    params = {{"name", g.name}};
  }

  std::ostringstream edges;
  mc::write_edge_list(edges, net);
  std::string faces_path = g.faces_output;
  if (faces_path.empty() && !g.output.empty()) faces_path = g.output + ".faces";
  if (g.output.empty()) {
    std::cout << edges.str();
  } else {
    std::ofstream out(g.output, std::ios::binary);
    if (!out) throw mc::IoError("cannot write '" + g.output + "'");
    out << edges.str();
  }
  if (net.has_faces() && !faces_path.empty()) {
    std::ofstream out(faces_path, std::ios::binary);
    if (!out) throw mc::IoError("cannot write '" + faces_path + "'");
    mc::write_faces(out, net);
  }
  if (!g.output.empty()) {
    json man{{"command", "generate " + g.model},
             {"parameters", params},
             {"output", {{"vertices", net.vertex_count()}, {"edges", net.edge_count()},
                         {"faces", net.faces().size()}}},
             {"seeds", seeds},
             {"version", kVersion},
             {"duration_seconds", seconds_since(t0)}};
    std::ofstream side(g.output + ".manifest.json", std::ios::binary);
    side << man.dump(2) << '\n';
  }
  return kOk;
}

// Values of the last column of a CSV report, or of "value" in JSON rows.
std::vector<double> read_report(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw mc::IoError("cannot open '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  std::vector<double> values;
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    json doc;
    try {
      doc = json::parse(text);
    } catch (const json::exception& e) {
      throw mc::ValidationError(std::string("bad JSON report: ") + e.what());
    }
    for (const auto& row : doc.at("rows")) {
      const json& v = row.at("value");
      values.push_back(v.is_null() ? std::nan("") : v.get<double>());
    }
  } else {
    std::istringstream lines(text);
    std::string line;
    std::size_t lineno = 0;
    bool header = true;
    while (std::getline(lines, line)) {
      ++lineno;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty() || line[0] == '#') continue;
      if (header) {
        header = false;
        continue;
      }
      auto cell = std::string_view(line).substr(line.rfind(',') + 1);
      if (cell == "nan") {
        values.push_back(std::nan(""));
        continue;
      }
      auto x = mc::parse_double(cell);
      if (!x) throw mc::ParseError(lineno, "not a number: '" + std::string(cell) + "'");
      values.push_back(*x);
    }
  }
  if (values.empty()) throw mc::ValidationError("report '" + path + "' has no rows");
  return values;
}

int cmd_histogram(const std::string& report, std::size_t bins, const std::string& range,
                  const std::string& output) {
  const auto values = read_report(report);
  std::optional<std::pair<double, double>> r;
  if (!range.empty()) {
    auto colon = range.find(':');
    auto lo = colon == std::string::npos ? std::nullopt : mc::parse_double(range.substr(0, colon));
    auto hi = colon == std::string::npos ? std::nullopt : mc::parse_double(range.substr(colon + 1));
    if (!lo || !hi) throw UsageError("range must look like LO:HI");
    r = std::pair{*lo, *hi};
  }
  std::ostringstream body;
  body << "bin_low,bin_high,count\n";
  for (const auto& b : mc::histogram(values, bins, r)) {
    body << mc::format_number(b.low) << ',' << mc::format_number(b.high) << ',' << b.count << '\n';
  }
  if (output.empty()) {
    std::cout << body.str();
  } else {
    std::ofstream out(output, std::ios::binary);
    if (!out) throw mc::IoError("cannot write '" + output + "'");
    out << body.str();
  }
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Metric curvature of networks"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  Common curv;
  std::string measure;
  bool scalar = false;
  bool normalize = false;
  auto* curvature = app.add_subcommand("curvature", "per-edge or per-vertex curvature report");
  add_common(curvature, curv);
  curvature->add_option("--measure", measure, "measure to compute")->required();
  curvature->add_flag("--scalar", scalar, "aggregate edge values to vertices");
  curvature->add_flag("--normalize", normalize, "divide betweenness by the number of pairs");

  Common cmp;
  std::string measure_a, measure_b, sweep;
  auto* compare = app.add_subcommand("compare", "correlate two per-edge measures");
  add_common(compare, cmp);
  compare->add_option("--measure-a", measure_a, "first measure")->required();
  compare->add_option("--measure-b", measure_b, "second measure")->required();
  compare->add_option("--sweep-max-path-len", sweep, "cutoff range LO:HI");

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "write a model network or builder output");
  generate->require_subcommand(1);
  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--output", gen.output, "edge-list file (default stdout)");
    sub->add_option("--faces-output", gen.faces_output, "face file (default OUTPUT.faces)");
  };
  auto* er = generate->add_subcommand("er", "Erdos-Renyi G(n, p)");
  er->add_option("--n", gen.n, "vertices")->required();
  er->add_option("--p", gen.p, "edge probability")->required();
  er->add_option("--seed", gen.seed, "random seed");
  auto* ws = generate->add_subcommand("ws", "Watts-Strogatz small world");
  ws->add_option("--n", gen.n, "vertices")->required();
  ws->add_option("--k", gen.k, "ring degree (even)")->required();
  ws->add_option("--beta", gen.beta, "rewiring probability")->required();
  ws->add_option("--seed", gen.seed, "random seed");
  auto* ba = generate->add_subcommand("ba", "Barabasi-Albert preferential attachment");
  ba->add_option("--n", gen.n, "vertices")->required();
  ba->add_option("--m0", gen.m0, "seed path length")->required();
  ba->add_option("--m", gen.m, "edges per new vertex")->required();
  ba->add_option("--seed", gen.seed, "random seed");
  auto* lattice = generate->add_subcommand("lattice", "tessellation patch with faces");
  lattice->add_option("--kind", gen.kind, "tessellation")
      ->required()
      ->check(CLI::IsMember({"triangular", "square", "hexagonal", "cubic"}));
  lattice->add_option("--dims", gen.dims, "side lengths, e.g. 20x20")->required();
  lattice->add_flag("--wrap", gen.wrap, "close the patch toroidally");
  auto* poly = generate->add_subcommand("polyhedron", "named polyhedron or complex");
  poly->add_option("--name", gen.name, "polyhedron name")->required();
  for (auto* sub : {er, ws, ba, lattice, poly}) {
    add_out(sub);
    sub->callback([&gen, sub] { gen.model = sub->get_name(); });
  }

  std::string report, range, hist_output;
  std::size_t bins = 20;
  auto* hist = app.add_subcommand("histogram", "bin the values of a report");
  hist->add_option("report", report, "CSV or JSON report")->required();
  hist->add_option("--bins", bins, "number of bins")->check(CLI::PositiveNumber);
  hist->add_option("--range", range, "binning range LO:HI");
  hist->add_option("--output", hist_output, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*curvature) return cmd_curvature(curv, measure, scalar, normalize);
    if (*compare) return cmd_compare(cmp, measure_a, measure_b, sweep);
    if (*generate) return cmd_generate(gen);
    if (*hist) return cmd_histogram(report, bins, range, hist_output);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const mc::ParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const mc::ParseError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const mc::ValidationError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const mc::IoError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const mc::Error& e) {
    std::cerr << "computation error: " << e.what() << '\n';
    return kCompute;
  }
  return kUsage;
}
