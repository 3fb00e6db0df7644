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
#include <limits>
#include <string_view>
#include <vector>

#include "hg/csr_graph.hpp"
#include "hg/engine.hpp"
#include "hg/partitioner.hpp"
#include "hg/run_report.hpp"

namespace hg {

inline constexpr std::uint32_t kUnreached = std::numeric_limits<std::uint32_t>::max();
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct RunOptions {
  EngineOptions engine;
  bool reduce_messages = true;
  // BFS: test-and-set visited bits on host-like elements.
  bool bitmap = true;
};

template <typename T>
struct AlgorithmResult {
  std::vector<T> values;  // indexed by global vertex id
  RunReport report;
};

// Levels from `source`; kUnreached for vertices it cannot reach.
AlgorithmResult<std::uint32_t> bfs(const CsrGraph& g, const PartitionPlan& plan,
                                   vid_t source, const RunOptions& options = {});

// Pull-based PageRank with out-degree-normalized contributions, exactly
// `iterations` supersteps. Rank held by dangling vertices is not
// redistributed.
AlgorithmResult<double> pagerank(const CsrGraph& g, const PartitionPlan& plan,
                                 double d_factor = 0.85, unsigned iterations = 5,
                                 const RunOptions& options = {});

// Dependency of every vertex on shortest paths from `source` (zero at the
// source and at unreached vertices). The report covers both the forward and
// the backward pass.
AlgorithmResult<double> betweenness_single_source(const CsrGraph& g,
                                                  const PartitionPlan& plan,
                                                  vid_t source,
                                                  const RunOptions& options = {});

// Bellman-Ford distances; kInfinity when unreachable. Runs on 64-bit
// integers when every weight is integral, so results are exact.
AlgorithmResult<double> sssp(const CsrGraph& g, const PartitionPlan& plan, vid_t source,
                             const RunOptions& options = {});

// Minimum global id in each vertex's component. g must be undirected.
AlgorithmResult<vid_t> connected_components(const CsrGraph& g, const PartitionPlan& plan,
                                            const RunOptions& options = {});

// Sum of betweenness contributions over `sources`.
AlgorithmResult<double> betweenness(const CsrGraph& g, const PartitionPlan& plan,
                                    std::span<const vid_t> sources,
                                    const RunOptions& options = {});

// BC payload. Forward pass: value is the number of shortest paths.
// Backward pass: value is (1 + dependency) / paths, the factor a
// predecessor multiplies by its own path count.
struct BcSlot {
  double value;
  std::uint32_t level;
  std::uint32_t pad;
  bool operator==(const BcSlot&) const = default;
};

// Shallower level wins; equal levels add their path counts.
inline BcSlot merge_paths(const BcSlot& a, const BcSlot& b) {
  if (a.level != b.level) return a.level < b.level ? a : b;
  return {a.value + b.value, a.level, 0};
}

enum class Algorithm { kBfs, kPageRank, kBc, kSssp, kCc };
std::string_view to_string(Algorithm a);
Algorithm parse_algorithm(std::string_view name);

}  // namespace hg
