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
#include <span>
#include <vector>

#include "hg/csr_graph.hpp"
#include "hg/run_report.hpp"

namespace hg {

// Seconds charged to a run for TEPS: the superstep loop's wall time.
double elapsed_seconds(const RunReport& r);

// Sum of out-degrees of vertices with a finite value.
eid_t traversed_edges(const CsrGraph& g, std::span<const std::uint32_t> levels);
eid_t traversed_edges(const CsrGraph& g, std::span<const double> distances);

// All of these throw ValidationError when seconds <= 0.
double teps_bfs(const CsrGraph& g, std::span<const std::uint32_t> levels, double seconds);
double teps_sssp(const CsrGraph& g, std::span<const double> distances, double seconds);
// Forward and backward passes both traverse the reached edges.
double teps_bc(const CsrGraph& g, std::span<const std::uint32_t> forward_levels,
               double seconds);
double teps_pagerank(eid_t edge_count, double seconds_per_iteration);
double teps_cc(eid_t edge_count, double seconds);

struct PartitionBreakdown {
  double compute_ms = 0.0;
  double comm_ms = 0.0;
  double compute_pct = 0.0;
  double comm_pct = 0.0;
};

struct Breakdown {
  std::vector<PartitionBreakdown> partitions;
  // Slowest partition in each superstep.
  std::vector<std::size_t> superstep_bottleneck;
  // Partition with the largest total time.
  std::size_t bottleneck = 0;
  // Time along the per-superstep bottleneck path, split by phase.
  double path_compute_ms = 0.0;
  double path_comm_ms = 0.0;
  double path_comm_share = 0.0;  // fraction in [0, 1]
  // The model expects the host to finish last; set when an accelerator-like
  // partition is the overall bottleneck.
  bool accelerator_bottleneck = false;
};

Breakdown breakdown(const RunReport& r);

}  // namespace hg
