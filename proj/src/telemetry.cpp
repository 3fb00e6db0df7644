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

#include "hg/telemetry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hg {

namespace {

void check_seconds(double seconds) {
  if (!(seconds > 0.0)) throw ValidationError("elapsed time must be positive for TEPS");
}

}  // namespace

double elapsed_seconds(const RunReport& r) { return r.total_ms / 1000.0; }

eid_t traversed_edges(const CsrGraph& g, std::span<const std::uint32_t> levels) {
  eid_t sum = 0;
  for (vid_t v = 0; v < levels.size(); ++v) {
    if (levels[v] != std::numeric_limits<std::uint32_t>::max()) sum += g.degree(v);
  }
  return sum;
}

eid_t traversed_edges(const CsrGraph& g, std::span<const double> distances) {
  eid_t sum = 0;
  for (vid_t v = 0; v < distances.size(); ++v) {
    if (std::isfinite(distances[v])) sum += g.degree(v);
  }
  return sum;
}

double teps_bfs(const CsrGraph& g, std::span<const std::uint32_t> levels, double seconds) {
  check_seconds(seconds);
  return static_cast<double>(traversed_edges(g, levels)) / seconds;
}

double teps_sssp(const CsrGraph& g, std::span<const double> distances, double seconds) {
  check_seconds(seconds);
  return static_cast<double>(traversed_edges(g, distances)) / seconds;
}

double teps_bc(const CsrGraph& g, std::span<const std::uint32_t> forward_levels,
               double seconds) {
  check_seconds(seconds);
  return 2.0 * static_cast<double>(traversed_edges(g, forward_levels)) / seconds;
}

double teps_pagerank(eid_t edge_count, double seconds_per_iteration) {
  check_seconds(seconds_per_iteration);
  return static_cast<double>(edge_count) / seconds_per_iteration;
}

double teps_cc(eid_t edge_count, double seconds) {
  check_seconds(seconds);
  return static_cast<double>(edge_count) / seconds;
}

Breakdown breakdown(const RunReport& r) {
  Breakdown b;
  std::size_t k = 0, steps = 0;
  for (const auto& e : r.ledger) {
    k = std::max(k, e.partition + 1);
    steps = std::max(steps, e.superstep + 1);
  }
  b.partitions.assign(k, {});
  std::vector<const PhaseEntry*> slowest(steps, nullptr);
  for (const auto& e : r.ledger) {
    b.partitions[e.partition].compute_ms += e.compute_ms;
    b.partitions[e.partition].comm_ms += e.comm_ms;
    const PhaseEntry*& s = slowest[e.superstep];
    if (!s || e.compute_ms + e.comm_ms > s->compute_ms + s->comm_ms) s = &e;
  }
  for (auto& p : b.partitions) {
    const double total = p.compute_ms + p.comm_ms;
    if (total > 0.0) {
      p.compute_pct = 100.0 * p.compute_ms / total;
      p.comm_pct = 100.0 * p.comm_ms / total;
    } else {
      p.compute_pct = 100.0;
    }
  }
  for (const PhaseEntry* s : slowest) {
    b.superstep_bottleneck.push_back(s ? s->partition : 0);
    if (!s) continue;
    b.path_compute_ms += s->compute_ms;
    b.path_comm_ms += s->comm_ms;
  }
  const double path = b.path_compute_ms + b.path_comm_ms;
  b.path_comm_share = path > 0.0 ? b.path_comm_ms / path : 0.0;
  double worst = -1.0;
  for (std::size_t p = 0; p < k; ++p) {
    const double t = b.partitions[p].compute_ms + b.partitions[p].comm_ms;
    if (t > worst) {
      worst = t;
      b.bottleneck = p;
    }
  }
  if (b.bottleneck < r.partitions.size()) {
    b.accelerator_bottleneck = r.partitions[b.bottleneck].kind == ElementKind::kAccelerator;
  }
  return b;
}

}  // namespace hg
