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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hg/csr_graph.hpp"

namespace hg {

enum class ElementKind { kHost, kAccelerator };

// One processing element. The throttle caps the element's edge-processing
// rate (edges/second) so experiments can emulate rate asymmetry.
struct ElementDescriptor {
  int element_id = 0;
  ElementKind kind = ElementKind::kHost;
  unsigned worker_count = 1;
  std::optional<double> throttle;
  std::optional<std::uint64_t> memory_budget;
};

enum class Strategy { kRand, kHigh, kLow };

std::string_view to_string(Strategy s);
std::string_view to_string(ElementKind k);
Strategy parse_strategy(std::string_view name);

struct PartitionPlan {
  Strategy strategy = Strategy::kRand;
  double alpha_target = 1.0;
  std::vector<ElementDescriptor> elements;
  // Indexed by global vertex id. Values are positions in `elements`.
  std::vector<std::uint8_t> assignment;
  std::vector<vid_t> local_id;
  std::vector<vid_t> vertex_counts;  // per element
  std::vector<eid_t> edge_counts;    // per element
  double alpha_actual = 1.0;
  double beta_raw = 0.0;
  double beta_reduced = 0.0;

  std::size_t partition_count() const noexcept { return elements.size(); }
  std::size_t host_index() const;
};

// Splits g across `elements` (exactly one host-like) so that the host keeps
// about alpha_target of the edges:
//  HIGH  walks vertices from highest degree, LOW from lowest, filling the
//        host first and then each accelerator to an equal share of the rest;
//  RAND  draws each vertex independently, weighted by the edge-share
//        targets, then moves the highest-degree misfits until the host share
//        is within one vertex's degree of the target.
PartitionPlan make_plan(const CsrGraph& g, Strategy strategy,
                        double alpha_target,
                        std::vector<ElementDescriptor> elements,
                        std::uint64_t seed);

struct BoundaryStats {
  double beta_raw = 0.0;
  double beta_reduced = 0.0;
  eid_t cross_edges = 0;
  eid_t reduced_slots = 0;
};

// beta_raw counts cross-partition edges; beta_reduced counts distinct
// (source partition, remote target) pairs. Both are fractions of |E|.
BoundaryStats boundary_stats(const CsrGraph& g, const PartitionPlan& plan);

std::vector<double> vertex_share(const PartitionPlan& plan);

// Graph bytes an element would need for its share; used for the memory
// budget check.
std::uint64_t estimated_partition_bytes(const CsrGraph& g, vid_t vertices,
                                        eid_t edges);

// "host:8", "accel:64@throttle=4e9", optionally "@mem=BYTES"; comma
// separated list. Element ids follow list order.
std::vector<ElementDescriptor> parse_elements(std::string_view spec);

}  // namespace hg
