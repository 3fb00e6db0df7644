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

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include <json.hpp>

#include "hg/common.hpp"
#include "hg/partition.hpp"

namespace hg {

// Wall time one partition spent in each phase of one superstep.
struct PhaseEntry {
  std::size_t superstep = 0;
  std::size_t partition = 0;
  double compute_ms = 0.0;
  double comm_ms = 0.0;
  std::uint64_t bytes_transferred = 0;  // received by this partition
  eid_t edges_processed = 0;
};

struct PartitionInfo {
  ElementKind kind = ElementKind::kHost;
  vid_t vertices = 0;
  eid_t edges = 0;
  std::size_t outbox_slots = 0;
  std::size_t inbox_slots = 0;
  double throttle = 0.0;  // 0 when unthrottled
  Footprint footprint;
};

struct PlanSummary {
  std::string strategy;
  double alpha_target = 1.0;
  double alpha_actual = 1.0;
  double beta_raw = 0.0;
  double beta_reduced = 0.0;
  std::vector<double> vertex_share;
};

struct RunReport {
  std::string algorithm;
  vid_t vertex_count = 0;
  eid_t edge_count = 0;
  bool reduced = true;
  PlanSummary plan;
  std::vector<PartitionInfo> partitions;
  std::size_t supersteps = 0;
  std::vector<PhaseEntry> ledger;
  // Wall clock of the superstep loop, barriers included.
  double total_ms = 0.0;
  // max over partitions of their summed compute + communication time.
  double makespan_ms = 0.0;
  // Sum over supersteps of the slowest partition's time in that superstep.
  double critical_path_ms = 0.0;
  double teps = 0.0;
  std::uint64_t bytes_transferred = 0;
  // Throttled runs sleep this many times longer than the emulated rate
  // implies; divide wall times by it to get emulated seconds.
  double time_dilation = 1.0;
  bool aborted = false;
  std::string error;
  nlohmann::json config;  // echo of the resolved experiment settings
};

std::vector<double> partition_totals_ms(const RunReport& r);
std::vector<double> superstep_makespans_ms(const RunReport& r);

// Recomputes makespan_ms, critical_path_ms and bytes_transferred from the
// ledger.
void summarize(RunReport& r);

// Appends b's ledger to a, renumbering supersteps so they follow a's.
void append_run(RunReport& a, const RunReport& b);

void fill_plan_summary(RunReport& r, const PartitionPlan& plan);
void fill_partition_info(RunReport& r, const PartitionSet& set,
                         std::size_t payload_bytes,
                         std::uint64_t state_bytes_per_vertex);

nlohmann::json to_json(const RunReport& r);
RunReport report_from_json(const nlohmann::json& j);

// One row per (superstep, partition, phase).
void write_ledger_csv(const RunReport& r, std::ostream& out);

}  // namespace hg
