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

#include "hg/perf_model.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>

namespace hg {

void ModelParams::validate() const {
  if (!(c > 0.0) || !(r_cpu > 0.0) || !(r_gpu > 0.0)) {
    throw ValidationError("model rates must be positive");
  }
  if (!(bytes_per_edge_message > 0.0)) {
    throw ValidationError("bytes per edge message must be positive");
  }
  if (!(alpha >= 0.0 && alpha <= 1.0) || !(beta >= 0.0 && beta <= 1.0)) {
    throw ValidationError("alpha and beta must lie in [0, 1]");
  }
}

double partition_time(double edge_count, double boundary_count, double rate,
                      const ModelParams& params) {
  if (!(rate > 0.0) || !(params.c_effective() > 0.0)) {
    throw ValidationError("processing and communication rates must be positive");
  }
  if (edge_count < 0.0 || boundary_count < 0.0) {
    throw ValidationError("edge counts must be non-negative");
  }
  return boundary_count / params.c_effective() + edge_count / rate;
}

double makespan(std::span<const double> partition_times) {
  if (partition_times.empty()) throw ValidationError("makespan of no partitions");
  return *std::max_element(partition_times.begin(), partition_times.end());
}

double speedup(const ModelParams& params) {
  params.validate();
  const double denominator = params.beta * params.r_cpu / params.c_effective() + params.alpha;
  if (denominator <= 0.0) {
    throw ValidationError("speedup undefined for alpha = beta = 0");
  }
  return 1.0 / denominator;
}

std::string_view to_string(SweepAxis axis) {
  switch (axis) {
    case SweepAxis::kAlpha: return "alpha";
    case SweepAxis::kBeta: return "beta";
    case SweepAxis::kRcpu: return "r_cpu";
    case SweepAxis::kBytesPerEdge: return "bytes_per_edge_message";
  }
  return "unknown";
}

SweepAxis parse_sweep_axis(std::string_view name) {
  if (name == "alpha") return SweepAxis::kAlpha;
  if (name == "beta") return SweepAxis::kBeta;
  if (name == "r_cpu" || name == "rcpu") return SweepAxis::kRcpu;
  if (name == "bytes_per_edge_message" || name == "bytes") return SweepAxis::kBytesPerEdge;
  throw ValidationError("unknown sweep axis '" + std::string(name) +
                        "' (expected alpha, beta, r_cpu or bytes)");
}

std::vector<SweepRow> sweep(const ModelParams& base, SweepAxis axis,
                            std::span<const double> grid) {
  if (grid.empty()) throw ValidationError("sweep grid is empty");
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (double value : grid) {
    ModelParams p = base;
    switch (axis) {
      case SweepAxis::kAlpha: p.alpha = value; break;
      case SweepAxis::kBeta: p.beta = value; break;
      case SweepAxis::kRcpu: p.r_cpu = value; break;
      case SweepAxis::kBytesPerEdge: p.bytes_per_edge_message = value; break;
    }
    rows.push_back({axis, value, speedup(p)});
  }
  return rows;
}

void write_sweep_csv(std::span<const SweepRow> rows, std::ostream& out) {
  const auto precision = out.precision(17);
  out << "axis,value,speedup\n";
  for (const auto& r : rows) out << to_string(r.axis) << ',' << r.value << ',' << r.speedup << '\n';
  out.precision(precision);
}

double calibrate_rate(const RunReport& baseline) {
  double compute_ms = 0.0;
  eid_t edges = 0;
  for (const auto& e : baseline.ledger) {
    compute_ms += e.compute_ms;
    edges += e.edges_processed;
  }
  if (compute_ms <= 0.0 || edges == 0) {
    throw ValidationError("baseline run processed no edges; cannot calibrate r_cpu");
  }
  return static_cast<double>(edges) / (compute_ms / 1000.0);
}

double calibrate_comm_rate(const RunReport& hybrid, double boundary_edges) {
  // Per superstep, the slowest partition's communication time.
  std::size_t steps = 0;
  for (const auto& e : hybrid.ledger) steps = std::max(steps, e.superstep + 1);
  std::vector<double> comm(steps, 0.0);
  for (const auto& e : hybrid.ledger) comm[e.superstep] = std::max(comm[e.superstep], e.comm_ms);
  double total_ms = 0.0;
  for (double c : comm) total_ms += c;
  if (total_ms <= 0.0 || boundary_edges <= 0.0) {
    throw ValidationError("run has no communication to calibrate against");
  }
  return boundary_edges / (total_ms / 1000.0);
}

ModelValidation validate_model(const PartitionPlan& plan, const RunReport& baseline,
                               const RunReport& hybrid, double r_cpu, double c,
                               double bytes_per_edge_message) {
  if (baseline.ledger.empty() || !(baseline.makespan_ms > 0.0)) {
    throw ValidationError("model validation needs a completed single-partition baseline");
  }
  if (!(hybrid.makespan_ms > 0.0)) throw ValidationError("hybrid run has no timing");

  ModelValidation v;
  v.alpha = plan.alpha_actual;
  v.beta = hybrid.reduced ? plan.beta_reduced : plan.beta_raw;
  ModelParams params;
  params.alpha = v.alpha;
  params.beta = v.beta;
  params.r_cpu = r_cpu;
  params.c = c;
  params.bytes_per_edge_message = bytes_per_edge_message;
  v.predicted = speedup(params);
  v.measured = baseline.makespan_ms / hybrid.makespan_ms;
  v.error = (v.predicted - v.measured) / v.measured;

  const auto totals = partition_totals_ms(hybrid);
  const std::size_t host = plan.host_index();
  for (std::size_t p = 0; p < totals.size() && p < plan.elements.size(); ++p) {
    if (p == host || plan.elements[p].kind != ElementKind::kAccelerator) continue;
    if (totals[p] > totals[host]) {
      v.out_of_contract = true;
      v.warning = "accelerator partition " + std::to_string(p) +
                  " finished after the host; the prediction assumes the opposite";
    }
  }
  return v;
}

nlohmann::json to_json(const ModelValidation& v) {
  nlohmann::json j = {{"alpha", v.alpha},
                      {"beta", v.beta},
                      {"predicted", v.predicted},
                      {"measured", v.measured},
                      {"error", v.error}};
  if (v.out_of_contract) j["warning"] = v.warning;
  return j;
}

double pearson(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw ValidationError("correlation needs two equally sized samples of at least 2");
  }
  const double n = static_cast<double>(x.size());
  double mx = 0.0, my = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    mx += x[i];
    my += y[i];
  }
  mx /= n;
  my /= n;
  double sxy = 0.0, sxx = 0.0, syy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxy += (x[i] - mx) * (y[i] - my);
    sxx += (x[i] - mx) * (x[i] - mx);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0.0 || syy == 0.0) return 0.0;
  return sxy / std::sqrt(sxx * syy);
}

}  // namespace hg
