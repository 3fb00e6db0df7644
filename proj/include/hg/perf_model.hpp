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

#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "hg/partitioner.hpp"
#include "hg/run_report.hpp"

namespace hg {

// Rates are edges per second. c is the transfer rate for 4-byte messages;
// larger messages scale it down proportionally.
struct ModelParams {
  double alpha = 1.0;
  double beta = 0.0;
  double c = 3e9;
  double r_cpu = 1e9;
  double r_gpu = 4e9;
  double bytes_per_edge_message = 4.0;

  double c_effective() const { return c * 4.0 / bytes_per_edge_message; }
  // Throws ValidationError on non-positive rates or fractions outside [0, 1].
  void validate() const;
};

// Seconds to process a partition: boundary edges over the link plus local
// edges at the element's rate.
double partition_time(double edge_count, double boundary_count, double rate,
                      const ModelParams& params);

double makespan(std::span<const double> partition_times);

// Predicted speedup over the host alone: 1 / (beta * r_cpu / c + alpha).
double speedup(const ModelParams& params);

enum class SweepAxis { kAlpha, kBeta, kRcpu, kBytesPerEdge };
std::string_view to_string(SweepAxis axis);
SweepAxis parse_sweep_axis(std::string_view name);

struct SweepRow {
  SweepAxis axis;
  double value;
  double speedup;
};

std::vector<SweepRow> sweep(const ModelParams& base, SweepAxis axis,
                            std::span<const double> grid);
void write_sweep_csv(std::span<const SweepRow> rows, std::ostream& out);

// Edges per second of compute, from a single-partition run's ledger.
double calibrate_rate(const RunReport& baseline);
// Boundary edges per second of communication along the bottleneck path.
double calibrate_comm_rate(const RunReport& hybrid, double boundary_edges);

struct ModelValidation {
  double alpha = 1.0;
  double beta = 0.0;
  double predicted = 1.0;
  double measured = 1.0;
  double error = 0.0;  // (predicted - measured) / measured
  // Set when an accelerator-like partition took longer than the host, which
  // the model assumes never happens.
  bool out_of_contract = false;
  std::string warning;
};

// alpha and beta come from the plan (beta_reduced when the run reduced
// messages). measured = baseline makespan / hybrid makespan.
ModelValidation validate_model(const PartitionPlan& plan, const RunReport& baseline,
                               const RunReport& hybrid, double r_cpu, double c,
                               double bytes_per_edge_message = 4.0);

nlohmann::json to_json(const ModelValidation& v);

double pearson(std::span<const double> x, std::span<const double> y);

}  // namespace hg
