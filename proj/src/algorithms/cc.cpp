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

#include <algorithm>
#include <atomic>

#include "common.hpp"

namespace hg {

namespace {

vid_t min_label(const vid_t& a, const vid_t& b) { return std::min(a, b); }

}  // namespace

AlgorithmResult<vid_t> connected_components(const CsrGraph& g, const PartitionPlan& plan,
                                            const RunOptions& options) {
  if (g.directed()) {
    throw ConfigurationError(
        "connected components needs an undirected graph; symmetrize it first");
  }
  const PartitionSet set = detail::prepare(g, plan, options);
  const std::size_t k = set.size();
  std::vector<std::vector<std::uint8_t>> active(k);

  AlgorithmResult<vid_t> result;
  result.values.assign(g.vertex_count(), kInvalidVertex);

  using Ctx = PartitionContext<vid_t>;
  AlgorithmSpec<vid_t> spec;
  spec.name = "cc";
  spec.direction = Direction::kPush;
  spec.identity = kInvalidVertex;
  spec.combine = &min_label;
  spec.init = [&](Ctx& ctx) {
    const auto& globals = ctx.partition().global_of_local;
    std::copy(globals.begin(), globals.end(), ctx.state().begin());
    active[ctx.id()].assign(globals.size(), 1);
  };
  spec.compute = [&](Ctx& ctx) {
    const Partition& part = ctx.partition();
    auto& act = active[ctx.id()];
    return ctx.for_each_vertex([&](vid_t v, eid_t& work) {
      std::atomic_ref<std::uint8_t> flag(act[v]);
      if (!flag.load(std::memory_order_relaxed) ||
          !flag.exchange(0, std::memory_order_relaxed)) {
        return true;
      }
      const vid_t label = ctx.load(v);
      const eid_t begin = part.row_offsets[v];
      const eid_t split = part.remote_begin[v];
      const eid_t end = part.row_offsets[v + 1];
      work += end - begin;
      bool finished = true;
      for (eid_t i = begin; i < split; ++i) {
        const vid_t n = part.edges[i].payload();
        if (ctx.fold_local(n, label)) {
          std::atomic_ref<std::uint8_t>(act[n]).store(1, std::memory_order_relaxed);
          finished = false;
        }
      }
      for (eid_t i = split; i < end; ++i) {
        if (ctx.fold(part.edges[i], label)) finished = false;
      }
      return finished;
    });
  };
  spec.scatter = [&](Ctx& ctx) {
    auto& act = active[ctx.id()];
    ctx.scatter_inbox([&](vid_t v) { act[v] = 1; });
  };
  spec.collect = [&](Ctx& ctx) {
    detail::gather(ctx, result.values, [](vid_t, vid_t l) { return l; });
  };

  Engine<vid_t> engine(set, options.engine);
  result.report = engine.run(spec);
  detail::describe(result.report, plan, set, sizeof(vid_t), sizeof(vid_t) + 1);
  if (const double s = elapsed_seconds(result.report); s > 0.0) {
    result.report.teps = teps_cc(g.edge_count(), s);
  }
  return result;
}

}  // namespace hg
