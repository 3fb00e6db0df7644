/*
Copyright (c) 2026 The hybridgraph Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

       http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include "hg/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <sstream>

#include "hg/algorithms.hpp"
#include "hg/generators.hpp"
#include "hg/graph_io.hpp"
#include "hg/perf_model.hpp"
#include "hg/random.hpp"
#include "hg/telemetry.hpp"

namespace hg {

namespace {

using nlohmann::json;

// Streams derived from the master seed.
enum SeedStream : std::uint64_t { kPlanSeed = 1, kWeightSeed = 2, kSourceSeed = 3 };

struct GraphOptions {
  std::string path;
  std::string kind = "rmat";
  unsigned scale = 16;
  std::uint64_t degree = 16;
  double a = 0.57, b = 0.19, c = 0.19;
  bool undirected = false;
  bool weighted = false;
  bool synth_weights = false;
};

struct ExperimentConfig {
  std::string command;
  GraphOptions graph;
  std::string algorithm = "bfs";
  std::string strategy = "high";
  double alpha = 1.0;
  std::string elements = "host:1";
  std::optional<std::int64_t> source;
  unsigned iterations = 5;
  double damping = 0.85;
  unsigned bc_sources = 1;
  bool reduction = true;
  bool bitmap = true;
  double dilation = 1.0;
  std::uint64_t seed = 1;
  std::string output;
  std::string output_format = "text";
  std::string report;
  std::string ledger;
  bool json = false;
  bool full = false;
  // sweep
  std::string axis = "alpha";
  std::string grid = "0.5,0.6,0.7,0.8,0.9,1.0";
  std::string strategies = "rand,high,low";
  // model / validate
  double beta = 0.05;
  double r_cpu = 1e9;
  double r_gpu = 4e9;
  double comm_rate = 3e9;
  bool comm_rate_set = false;
  double bytes = 4.0;
};

json graph_json(const GraphOptions& g, std::uint64_t seed) {
  json j;
  if (!g.path.empty()) {
    j["path"] = g.path;
  } else {
    j["generator"] = {{"kind", g.kind}, {"scale", g.scale}, {"degree", g.degree},
                      {"seed", seed}};
    if (g.kind == "rmat") j["generator"]["abc"] = {g.a, g.b, g.c};
  }
  j["undirected"] = g.undirected;
  j["weighted"] = g.weighted;
  j["synth_weights"] = g.synth_weights;
  return j;
}

json config_json(const ExperimentConfig& c) {
  json j = {{"command", c.command},
            {"graph", graph_json(c.graph, c.seed)},
            {"algorithm", c.algorithm},
            {"strategy", c.strategy},
            {"alpha", c.alpha},
            {"elements", c.elements},
            {"iterations", c.iterations},
            {"damping", c.damping},
            {"reduction", c.reduction},
            {"bitmap", c.bitmap},
            {"time_dilation", c.dilation},
            {"seed", c.seed},
            {"plan_seed", derive_seed(c.seed, kPlanSeed)}};
  if (c.graph.synth_weights) j["weight_seed"] = derive_seed(c.seed, kWeightSeed);
  if (c.source) j["source"] = *c.source;
  if (c.algorithm == "bc") j["bc_sources"] = c.bc_sources;
  return j;
}

std::vector<double> parse_grid(const std::string& text) {
  std::vector<double> out;
  auto number = [&](std::string_view s) {
    try {
      std::size_t used = 0;
      const double v = std::stod(std::string(s), &used);
      if (used != s.size()) throw std::invalid_argument("trailing");
      return v;
    } catch (const std::exception&) {
      throw ValidationError("bad grid value '" + std::string(s) + "'");
    }
  };
  // start:stop:step
  if (std::count(text.begin(), text.end(), ':') == 2) {
    const auto first = text.find(':');
    const auto second = text.find(':', first + 1);
    const double start = number(std::string_view(text).substr(0, first));
    const double stop = number(std::string_view(text).substr(first + 1, second - first - 1));
    const double step = number(std::string_view(text).substr(second + 1));
    if (!(step > 0.0)) throw ValidationError("grid step must be positive");
    const auto count = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    for (std::size_t i = 0; i < count; ++i) out.push_back(start + step * static_cast<double>(i));
  } else {
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
      if (!item.empty()) out.push_back(number(item));
    }
  }
  if (out.empty()) throw ValidationError("empty grid");
  return out;
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

CsrGraph generate(const GraphOptions& o, std::uint64_t seed) {
  if (o.kind == "rmat") {
    return generate_rmat({o.scale, o.degree, o.a, o.b, o.c, seed});
  }
  if (o.kind == "uniform") return generate_uniform(o.scale, o.degree, seed);
  throw ValidationError("unknown generator kind '" + o.kind + "' (expected rmat or uniform)");
}

CsrGraph resolve_graph(const ExperimentConfig& c) {
  CsrGraph g;
  if (!c.graph.path.empty()) {
    if (!std::filesystem::exists(c.graph.path)) {
      throw IoError("graph file not found: " + c.graph.path);
    }
    g = load_graph(c.graph.path, !c.graph.undirected, c.graph.weighted);
  } else {
    g = generate(c.graph, c.seed);
  }
  if (c.graph.undirected && g.directed()) g = symmetrize(g);
  if (c.graph.synth_weights && !g.weighted()) {
    g = with_random_weights(g, derive_seed(c.seed, kWeightSeed));
  }
  return g;
}

PartitionPlan resolve_plan(const CsrGraph& g, const ExperimentConfig& c,
                           const std::string& strategy, double alpha,
                           std::vector<ElementDescriptor> elements) {
  return make_plan(g, parse_strategy(strategy), alpha, std::move(elements),
                   derive_seed(c.seed, kPlanSeed));
}

// A pseudo-random vertex with at least one out-edge when one exists.
vid_t default_source(const CsrGraph& g, std::uint64_t seed) {
  if (g.vertex_count() == 0) throw ValidationError("graph has no vertices");
  std::mt19937_64 rng(derive_seed(seed, kSourceSeed));
  vid_t v = 0;
  for (int attempt = 0; attempt < 1024; ++attempt) {
    v = static_cast<vid_t>(uniform_below(rng, g.vertex_count()));
    if (g.degree(v) > 0) return v;
  }
  return v;
}

vid_t resolve_source(const CsrGraph& g, ExperimentConfig& c) {
  if (c.source) {
    if (*c.source < 0 || static_cast<std::uint64_t>(*c.source) >= g.vertex_count()) {
      throw ValidationError("source vertex " + std::to_string(*c.source) + " out of range");
    }
    return static_cast<vid_t>(*c.source);
  }
  const vid_t s = default_source(g, c.seed);
  c.source = s;
  return s;
}

struct Outcome {
  RunReport report;
  std::vector<double> real;
  std::vector<std::uint32_t> integral;
};

Outcome execute(const CsrGraph& g, const PartitionPlan& plan, ExperimentConfig& c) {
  RunOptions opts;
  opts.engine.time_dilation = c.dilation;
  opts.reduce_messages = c.reduction;
  opts.bitmap = c.bitmap;
  Outcome out;
  switch (parse_algorithm(c.algorithm)) {
    case Algorithm::kBfs: {
      auto r = bfs(g, plan, resolve_source(g, c), opts);
      out.report = std::move(r.report);
      out.integral = std::move(r.values);
      break;
    }
    case Algorithm::kPageRank: {
      auto r = pagerank(g, plan, c.damping, c.iterations, opts);
      out.report = std::move(r.report);
      out.real = std::move(r.values);
      break;
    }
    case Algorithm::kBc: {
      std::vector<vid_t> sources{resolve_source(g, c)};
      std::mt19937_64 rng(derive_seed(c.seed, kSourceSeed + 1));
      while (sources.size() < std::max(1u, c.bc_sources)) {
        sources.push_back(static_cast<vid_t>(uniform_below(rng, g.vertex_count())));
      }
      auto r = betweenness(g, plan, sources, opts);
      out.report = std::move(r.report);
      out.real = std::move(r.values);
      break;
    }
    case Algorithm::kSssp: {
      auto r = sssp(g, plan, resolve_source(g, c), opts);
      out.report = std::move(r.report);
      out.real = std::move(r.values);
      break;
    }
    case Algorithm::kCc: {
      auto r = connected_components(g, plan, opts);
      out.report = std::move(r.report);
      out.integral = std::move(r.values);
      break;
    }
  }
  out.report.config = config_json(c);
  return out;
}

std::ofstream open_output(const std::string& path, std::ios::openmode mode = std::ios::out) {
  std::ofstream f(path, mode);
  if (!f) throw IoError("cannot open " + path + " for writing");
  return f;
}

void write_results(const Outcome& o, const std::string& path, const std::string& format) {
  if (format == "binary") {
    auto f = open_output(path, std::ios::out | std::ios::binary);
    if (!o.integral.empty()) {
      for (std::uint32_t v : o.integral) {
        const unsigned char bytes[4] = {static_cast<unsigned char>(v), static_cast<unsigned char>(v >> 8),
                                        static_cast<unsigned char>(v >> 16),
                                        static_cast<unsigned char>(v >> 24)};
        f.write(reinterpret_cast<const char*>(bytes), 4);
      }
    } else {
      f.write(reinterpret_cast<const char*>(o.real.data()),
              static_cast<std::streamsize>(o.real.size() * sizeof(double)));
    }
    if (!f) throw IoError("failed writing " + path);
    return;
  }
  if (format != "text") throw ValidationError("output format must be text or binary");
  auto f = open_output(path);
  f << std::setprecision(17);
  if (!o.integral.empty()) {
    for (std::size_t v = 0; v < o.integral.size(); ++v) {
      f << v << ' ';
      if (o.integral[v] == kUnreached) f << "inf"; else f << o.integral[v];
      f << '\n';
    }
  } else {
    for (std::size_t v = 0; v < o.real.size(); ++v) f << v << ' ' << o.real[v] << '\n';
  }
  if (!f) throw IoError("failed writing " + path);
}

json plan_json(const PartitionPlan& plan, bool include_assignment) {
  json elements = json::array();
  for (std::size_t p = 0; p < plan.elements.size(); ++p) {
    const auto& e = plan.elements[p];
    json el = {{"element_id", e.element_id},
               {"kind", std::string(to_string(e.kind))},
               {"workers", e.worker_count},
               {"vertices", plan.vertex_counts[p]},
               {"edges", plan.edge_counts[p]}};
    if (e.throttle) el["throttle"] = *e.throttle;
    if (e.memory_budget) el["memory_budget"] = *e.memory_budget;
    elements.push_back(el);
  }
  json j = {{"strategy", std::string(to_string(plan.strategy))},
            {"alpha_target", plan.alpha_target},
            {"alpha_actual", plan.alpha_actual},
            {"beta_raw", plan.beta_raw},
            {"beta_reduced", plan.beta_reduced},
            {"vertex_share", vertex_share(plan)},
            {"elements", elements}};
  if (include_assignment) {
    j["assignment"] = plan.assignment;
  } else {
    j["assignment_elided"] = true;
  }
  return j;
}

void print_summary(const RunReport& r, std::ostream& out) {
  out << "algorithm      " << r.algorithm << '\n'
      << "graph          V=" << r.vertex_count << " E=" << r.edge_count << '\n'
      << "plan           " << r.plan.strategy << " alpha_target=" << r.plan.alpha_target
      << " alpha_actual=" << r.plan.alpha_actual << " beta_raw=" << r.plan.beta_raw
      << " beta_reduced=" << r.plan.beta_reduced << '\n'
      << "supersteps     " << r.supersteps << '\n'
      << "total_ms       " << r.total_ms << '\n'
      << "makespan_ms    " << r.makespan_ms << '\n'
      << "teps           " << r.teps << '\n'
      << "bytes          " << r.bytes_transferred << '\n';
  const Breakdown b = breakdown(r);
  for (std::size_t p = 0; p < b.partitions.size(); ++p) {
    out << "partition " << p << "    compute " << std::fixed << std::setprecision(1)
        << b.partitions[p].compute_pct << "%  comm " << b.partitions[p].comm_pct << "%\n"
        << std::defaultfloat << std::setprecision(6);
  }
  if (b.accelerator_bottleneck) out << "warning        accelerator partition is the bottleneck\n";
  if (r.aborted) out << "error          " << r.error << '\n';
}

void add_graph_options(CLI::App* cmd, ExperimentConfig& c) {
  cmd->add_option("--graph,-g", c.graph.path, "Graph file (binary CSR or text edge list)");
  cmd->add_option("--kind", c.graph.kind, "Generator when no --graph: rmat or uniform");
  cmd->add_option("--scale", c.graph.scale, "Generator scale (2^scale vertices)");
  cmd->add_option("--degree", c.graph.degree, "Generator average degree");
  cmd->add_option("--rmat-a", c.graph.a, "RMAT quadrant probability a");
  cmd->add_option("--rmat-b", c.graph.b, "RMAT quadrant probability b");
  cmd->add_option("--rmat-c", c.graph.c, "RMAT quadrant probability c");
  cmd->add_flag("--undirected", c.graph.undirected, "Treat the graph as undirected");
  cmd->add_flag("--weighted", c.graph.weighted, "Text input carries a weight column");
  cmd->add_flag("--synth-weights", c.graph.synth_weights,
                "Draw integer weights in [1,64) when the graph has none");
  cmd->add_option("--seed", c.seed, "Master seed");
}

void add_plan_options(CLI::App* cmd, ExperimentConfig& c) {
  cmd->add_option("--strategy", c.strategy, "rand, high or low");
  cmd->add_option("--alpha", c.alpha, "Target share of edges on the host");
  cmd->add_option("--elements", c.elements, "e.g. host:8,accel:64@throttle=4e9");
}

void add_run_options(CLI::App* cmd, ExperimentConfig& c) {
  const std::map<std::string, bool> on_off{{"on", true}, {"off", false}};
  cmd->add_option("--alg", c.algorithm, "bfs, pagerank, bc, sssp or cc");
  cmd->add_option("--source", c.source, "Source vertex (default: drawn from the seed)");
  cmd->add_option("--iterations", c.iterations, "PageRank iterations");
  cmd->add_option("--damping", c.damping, "PageRank damping factor");
  cmd->add_option("--bc-sources", c.bc_sources, "Number of BC sources");
  cmd->add_option("--reduction", c.reduction, "Combine messages per remote vertex (on/off)")
      ->transform(CLI::CheckedTransformer(on_off, CLI::ignore_case));
  cmd->add_option("--bitmap", c.bitmap, "BFS visited bitmap on host elements (on/off)")
      ->transform(CLI::CheckedTransformer(on_off, CLI::ignore_case));
  cmd->add_option("--dilation", c.dilation, "Stretch factor for throttle sleeps");
}

int cmd_generate(ExperimentConfig& c, std::ostream& out) {
  CsrGraph g = generate(c.graph, c.seed);
  if (c.graph.undirected) g = symmetrize(g);
  if (c.graph.synth_weights) g = with_random_weights(g, derive_seed(c.seed, kWeightSeed));
  if (!c.output.empty()) {
    const std::filesystem::path p(c.output);
    if (p.extension() == ".txt" || p.extension() == ".el") {
      write_edge_list(g, p);
    } else {
      write_binary(g, p);
    }
  }
  const json j = {{"vertices", g.vertex_count()},
                  {"edges", g.edge_count()},
                  {"max_degree", g.max_degree()},
                  {"config", config_json(c)}};
  if (c.json) {
    out << j.dump(2) << '\n';
  } else {
    out << "V=" << g.vertex_count() << " E=" << g.edge_count()
        << " max_degree=" << g.max_degree() << '\n';
  }
  return 0;
}

int cmd_partition(ExperimentConfig& c, std::ostream& out) {
  const CsrGraph g = resolve_graph(c);
  const PartitionPlan plan = resolve_plan(g, c, c.strategy, c.alpha, parse_elements(c.elements));
  json j = plan_json(plan, c.full || g.vertex_count() <= 1'000'000);
  j["config"] = config_json(c);
  if (!c.output.empty()) {
    auto f = open_output(c.output);
    f << j.dump(2) << '\n';
  }
  if (c.json) {
    out << j.dump(2) << '\n';
  } else {
    out << "strategy=" << to_string(plan.strategy) << " alpha_actual=" << plan.alpha_actual
        << " beta_raw=" << plan.beta_raw << " beta_reduced=" << plan.beta_reduced << '\n';
    const auto share = vertex_share(plan);
    for (std::size_t p = 0; p < plan.elements.size(); ++p) {
      out << "element " << plan.elements[p].element_id << " ("
          << to_string(plan.elements[p].kind) << ") vertices=" << plan.vertex_counts[p]
          << " edges=" << plan.edge_counts[p] << " vertex_share=" << share[p] << '\n';
    }
  }
  return 0;
}

int cmd_run(ExperimentConfig& c, std::ostream& out) {
  const CsrGraph g = resolve_graph(c);
  const PartitionPlan plan = resolve_plan(g, c, c.strategy, c.alpha, parse_elements(c.elements));
  Outcome o = execute(g, plan, c);
  if (!c.output.empty()) write_results(o, c.output, c.output_format);
  const json j = to_json(o.report);
  if (!c.report.empty()) {
    auto f = open_output(c.report);
    f << j.dump(2) << '\n';
  }
  if (!c.ledger.empty()) {
    auto f = open_output(c.ledger);
    write_ledger_csv(o.report, f);
  }
  if (c.json) {
    out << j.dump(2) << '\n';
  } else {
    print_summary(o.report, out);
  }
  if (o.report.aborted) throw Error(ExitCode::kInternal, o.report.error);
  return 0;
}

struct SweepPoint {
  std::string label;
  std::string strategy;
  double alpha;
  std::vector<ElementDescriptor> elements;
};

int cmd_sweep(ExperimentConfig& c, std::ostream& out) {
  const CsrGraph g = resolve_graph(c);
  const auto elements = parse_elements(c.elements);
  const auto host = std::find_if(elements.begin(), elements.end(), [](const auto& e) {
    return e.kind == ElementKind::kHost;
  });
  if (host == elements.end()) throw ValidationError("elements need a host-like entry");

  std::vector<SweepPoint> points;
  points.push_back({"baseline", "high", 1.0, {*host}});
  if (c.axis == "alpha") {
    for (const auto& s : split_list(c.strategies)) {
      for (double a : parse_grid(c.grid)) points.push_back({"hybrid", s, a, elements});
    }
  } else if (c.axis == "strategy") {
    for (const auto& s : split_list(c.strategies)) points.push_back({"hybrid", s, c.alpha, elements});
  } else {
    throw ValidationError("sweep axis must be alpha or strategy");
  }

  std::ofstream file;
  if (!c.output.empty()) file = open_output(c.output);
  std::ostream& csv = c.output.empty() ? out : file;
  csv << std::setprecision(10);
  csv << "row,strategy,alpha_target,alpha_actual,beta_raw,beta_reduced,supersteps,"
         "total_ms,makespan_ms,critical_path_ms,teps,bytes_transferred,status\n";
  json rows = json::array();
  for (const auto& pt : points) {
    csv << pt.label << ',' << pt.strategy << ',' << pt.alpha << ',';
    try {
      ExperimentConfig rc = c;
      const PartitionPlan plan = resolve_plan(g, rc, pt.strategy, pt.alpha, pt.elements);
      Outcome o = execute(g, plan, rc);
      c.source = rc.source;  // every row traverses from the same source
      const RunReport& r = o.report;
      csv << r.plan.alpha_actual << ',' << r.plan.beta_raw << ',' << r.plan.beta_reduced << ','
          << r.supersteps << ',' << r.total_ms << ',' << r.makespan_ms << ','
          << r.critical_path_ms << ',' << r.teps << ',' << r.bytes_transferred << ','
          << (r.aborted ? "error: " + r.error : std::string("ok")) << '\n';
      if (c.json) rows.push_back(to_json(r));
    } catch (const std::exception& e) {
      std::string msg = e.what();
      std::replace(msg.begin(), msg.end(), ',', ';');
      csv << ",,,,,,,,,error: " << msg << '\n';
    }
  }
  if (c.json && !c.output.empty()) out << rows.dump(2) << '\n';
  return 0;
}

int cmd_model(ExperimentConfig& c, std::ostream& out) {
  ModelParams p;
  p.alpha = c.alpha;
  p.beta = c.beta;
  p.c = c.comm_rate;
  p.r_cpu = c.r_cpu;
  p.r_gpu = c.r_gpu;
  p.bytes_per_edge_message = c.bytes;
  const auto grid = parse_grid(c.grid);
  const auto rows = sweep(p, parse_sweep_axis(c.axis), grid);
  std::ofstream file;
  if (!c.output.empty()) file = open_output(c.output);
  std::ostream& sink = c.output.empty() ? out : file;
  if (c.json) {
    json j = json::array();
    for (const auto& r : rows) {
      j.push_back({{"axis", std::string(to_string(r.axis))}, {"value", r.value}, {"speedup", r.speedup}});
    }
    sink << j.dump(2) << '\n';
  } else {
    write_sweep_csv(rows, sink);
  }
  return 0;
}

int cmd_validate(ExperimentConfig& c, std::ostream& out) {
  const CsrGraph g = resolve_graph(c);
  const auto elements = parse_elements(c.elements);
  const PartitionPlan plan = resolve_plan(g, c, c.strategy, c.alpha, elements);
  PartitionPlan single;
  for (const auto& e : elements) {
    if (e.kind == ElementKind::kHost) single = resolve_plan(g, c, c.strategy, 1.0, {e});
  }
  if (single.elements.empty()) throw ValidationError("elements need a host-like entry");
  Outcome baseline = execute(g, single, c);
  Outcome hybrid = execute(g, plan, c);
  const double r_cpu = calibrate_rate(baseline.report);
  const double beta = c.reduction ? plan.beta_reduced : plan.beta_raw;
  double comm = c.comm_rate;
  if (!c.comm_rate_set) {
    comm = beta > 0.0 ? calibrate_comm_rate(hybrid.report, beta * static_cast<double>(g.edge_count()))
                      : 1e300;
  }
  const ModelValidation v =
      validate_model(plan, baseline.report, hybrid.report, r_cpu, comm, c.bytes);
  json j = to_json(v);
  j["r_cpu"] = r_cpu;
  j["c"] = comm;
  j["config"] = config_json(c);
  out << j.dump(2) << '\n';
  return 0;
}

int exit_code_of(ExitCode code) { return static_cast<int>(code); }

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Partitioned BSP graph engine with emulated heterogeneous elements"};
  app.require_subcommand(1);
  ExperimentConfig c;

  auto* gen = app.add_subcommand("generate", "Generate an RMAT or uniform graph");
  gen->add_option("--kind", c.graph.kind, "rmat or uniform");
  gen->add_option("--scale", c.graph.scale, "2^scale vertices");
  gen->add_option("--degree", c.graph.degree, "Average out-degree");
  gen->add_option("-a,--rmat-a", c.graph.a, "RMAT quadrant probability a");
  gen->add_option("-b,--rmat-b", c.graph.b, "RMAT quadrant probability b");
  gen->add_option("-c,--rmat-c", c.graph.c, "RMAT quadrant probability c");
  gen->add_option("--seed", c.seed, "Generator seed");
  gen->add_flag("--undirected", c.graph.undirected, "Symmetrize the result");
  gen->add_flag("--synth-weights", c.graph.synth_weights, "Attach integer weights in [1,64)");
  gen->add_option("-o,--output", c.output, "Output file (.txt/.el writes an edge list)");

  auto* part = app.add_subcommand("partition", "Build a partition plan and report beta");
  add_graph_options(part, c);
  add_plan_options(part, c);
  part->add_option("-o,--output", c.output, "Write the plan as JSON");
  part->add_flag("--full", c.full, "Include the assignment array for large graphs");

  auto* run = app.add_subcommand("run", "Run one algorithm");
  add_graph_options(run, c);
  add_plan_options(run, c);
  add_run_options(run, c);
  run->add_option("-o,--output", c.output, "Per-vertex results");
  run->add_option("--output-format", c.output_format, "text or binary");
  run->add_option("--report", c.report, "Write the run report as JSON");
  run->add_option("--ledger", c.ledger, "Write the phase ledger as CSV");

  auto* sw = app.add_subcommand("sweep", "Repeat runs over alpha or strategy");
  add_graph_options(sw, c);
  add_plan_options(sw, c);
  add_run_options(sw, c);
  sw->add_option("--axis", c.axis, "alpha or strategy");
  sw->add_option("--grid", c.grid, "Comma list or start:stop:step");
  sw->add_option("--strategies", c.strategies, "Comma list of strategies");
  sw->add_option("-o,--output", c.output, "CSV destination (default stdout)");

  auto* model = app.add_subcommand("model", "Evaluate the speedup model over a grid");
  model->add_option("--axis", c.axis, "alpha, beta, r_cpu or bytes");
  model->add_option("--grid", c.grid, "Comma list or start:stop:step");
  model->add_option("--alpha", c.alpha, "Host edge share");
  model->add_option("--beta", c.beta, "Boundary edge share");
  model->add_option("--rcpu", c.r_cpu, "Host rate (edges/s)");
  model->add_option("--rgpu", c.r_gpu, "Accelerator rate (edges/s)");
  model->add_option("--c", c.comm_rate, "Transfer rate (edges/s at 4 bytes)");
  model->add_option("--bytes", c.bytes, "Bytes per edge message");
  model->add_option("-o,--output", c.output, "CSV destination (default stdout)");

  auto* val = app.add_subcommand("validate", "Compare predicted and measured speedup");
  add_graph_options(val, c);
  add_plan_options(val, c);
  add_run_options(val, c);
  auto* c_opt = val->add_option("--c", c.comm_rate, "Transfer rate (default: calibrated)");
  val->add_option("--bytes", c.bytes, "Bytes per edge message");

  for (auto* cmd : {gen, part, run, sw, model, val}) {
    cmd->add_flag("--json", c.json, "Print JSON");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_of(ExitCode::kValidation);
  }
  c.comm_rate_set = c_opt->count() > 0;

  try {
    for (auto* cmd : app.get_subcommands()) {
      c.command = cmd->get_name();
      if (cmd == gen) return cmd_generate(c, out);
      if (cmd == part) return cmd_partition(c, out);
      if (cmd == run) return cmd_run(c, out);
      if (cmd == sw) return cmd_sweep(c, out);
      if (cmd == model) return cmd_model(c, out);
      if (cmd == val) return cmd_validate(c, out);
    }
    return exit_code_of(ExitCode::kInternal);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_of(e.code());
  } catch (const std::filesystem::filesystem_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_of(ExitCode::kIo);
  } catch (const std::bad_alloc&) {
    err << "error: out of memory\n";
    return exit_code_of(ExitCode::kCapacity);
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return exit_code_of(ExitCode::kInternal);
  }
}

}  // namespace hg
