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

#include <string>

#include "hg/algorithms.hpp"
#include "hg/partition.hpp"
#include "hg/telemetry.hpp"

namespace hg::detail {

inline void check_source(const CsrGraph& g, vid_t source) {
  if (source >= g.vertex_count()) {
    throw ValidationError("source vertex " + std::to_string(source) +
                          " out of range (graph has " +
                          std::to_string(g.vertex_count()) + " vertices)");
  }
}

inline PartitionSet prepare(const CsrGraph& g, const PartitionPlan& plan,
                            const RunOptions& options) {
  return build_partitions(g, plan, BuildOptions{options.reduce_messages});
}

inline void describe(RunReport& r, const PartitionPlan& plan, const PartitionSet& set,
                     std::size_t payload_bytes, std::uint64_t state_bytes) {
  fill_plan_summary(r, plan);
  fill_partition_info(r, set, payload_bytes, state_bytes);
}

// Copies each partition's per-vertex values into a global array.
template <typename T, typename Msg, typename Fn>
void gather(const PartitionContext<Msg>& ctx, std::vector<T>& out, Fn&& value_of) {
  const auto& globals = ctx.partition().global_of_local;
  const auto state = ctx.state();
  for (vid_t lv = 0; lv < globals.size(); ++lv) out[globals[lv]] = value_of(lv, state[lv]);
}

}  // namespace hg::detail
