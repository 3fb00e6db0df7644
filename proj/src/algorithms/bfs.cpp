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

using Level = std::uint32_t;

Level min_level(const Level& a, const Level& b) { return std::min(a, b); }

// Returns true if the bit was already set.
bool test_and_set(std::vector<std::uint64_t>& bits, vid_t v) {
  const std::uint64_t mask = std::uint64_t{1} << (v & 63);
  std::atomic_ref<std::uint64_t> word(bits[v >> 6]);
  if (word.load(std::memory_order_relaxed) & mask) return true;
  return word.fetch_or(mask, std::memory_order_relaxed) & mask;
}

}  // namespace

AlgorithmResult<std::uint32_t> bfs(const CsrGraph& g, const PartitionPlan& plan,
                                   vid_t source, const RunOptions& options) {
  detail::check_source(g, source);
  const PartitionSet set = detail::prepare(g, plan, options);
  const std::size_t k = set.size();
  const std::size_t source_part = set.owner[source];
  const vid_t source_local = set.local_id[source];

  std::vector<std::vector<std::uint64_t>> visited(k);
  for (std::size_t p = 0; p < k; ++p) {
    if (options.bitmap && set.parts[p].element.kind == ElementKind::kHost) {
      visited[p].assign((set.parts[p].vertex_count() + 63) / 64, 0);
    }
  }

  AlgorithmResult<Level> result;
  result.values.assign(g.vertex_count(), kUnreached);

  using Ctx = PartitionContext<Level>;
  AlgorithmSpec<Level> spec;
  spec.name = "bfs";
  spec.direction = Direction::kPush;
  spec.identity = kUnreached;
  spec.combine = &min_level;
  spec.init = [&](Ctx& ctx) {
    if (ctx.id() != source_part) return;
    ctx.state()[source_local] = 0;
    if (!visited[ctx.id()].empty()) test_and_set(visited[ctx.id()], source_local);
  };
  spec.compute = [&](Ctx& ctx) {
    const auto level = static_cast<Level>(ctx.superstep());
    const Partition& part = ctx.partition();
    auto& bits = visited[ctx.id()];
    const bool use_bits = !bits.empty();
    return ctx.for_each_vertex([&](vid_t v, eid_t& work) {
      if (ctx.load(v) != level) return true;
      const eid_t begin = part.row_offsets[v];
      const eid_t split = part.remote_begin[v];
      const eid_t end = part.row_offsets[v + 1];
      work += end - begin;
      bool finished = true;
      for (eid_t i = begin; i < split; ++i) {
        const vid_t n = part.edges[i].payload();
        if (use_bits && test_and_set(bits, n)) continue;
        if (ctx.fold_local(n, level + 1)) finished = false;
      }
      for (eid_t i = split; i < end; ++i) {
        if (ctx.fold(part.edges[i], level + 1)) finished = false;
      }
      return finished;
    });
  };
  spec.scatter = [&](Ctx& ctx) {
    auto& bits = visited[ctx.id()];
    if (bits.empty()) {
      ctx.scatter_inbox();
    } else {
      ctx.scatter_inbox([&](vid_t v) { test_and_set(bits, v); });
    }
  };
  spec.collect = [&](Ctx& ctx) {
    detail::gather(ctx, result.values, [](vid_t, Level l) { return l; });
  };

  Engine<Level> engine(set, options.engine);
  result.report = engine.run(spec);
  detail::describe(result.report, plan, set, sizeof(Level), sizeof(Level));
  if (const double s = elapsed_seconds(result.report); s > 0.0) {
    result.report.teps = teps_bfs(g, result.values, s);
  }
  return result;
}

}  // namespace hg
