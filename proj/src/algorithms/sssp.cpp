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
#include <cmath>
#include <limits>

#include "common.hpp"

namespace hg {

namespace {

template <typename Dist>
constexpr Dist kFar = std::numeric_limits<Dist>::has_infinity
                          ? std::numeric_limits<Dist>::infinity()
                          : std::numeric_limits<Dist>::max();

template <typename Dist>
Dist min_dist(const Dist& a, const Dist& b) {
  return std::min(a, b);
}

void set_flag(std::uint8_t& flag, std::uint8_t value) {
  std::atomic_ref<std::uint8_t>(flag).store(value, std::memory_order_relaxed);
}

bool take_flag(std::uint8_t& flag) {
  std::atomic_ref<std::uint8_t> ref(flag);
  return ref.load(std::memory_order_relaxed) && ref.exchange(0, std::memory_order_relaxed);
}

template <typename Dist>
AlgorithmResult<double> run_sssp(const CsrGraph& g, const PartitionPlan& plan,
                                 vid_t source, const RunOptions& options) {
  const PartitionSet set = detail::prepare(g, plan, options);
  const std::size_t k = set.size();
  const std::size_t source_part = set.owner[source];
  const vid_t source_local = set.local_id[source];
  std::vector<std::vector<std::uint8_t>> active(k);

  AlgorithmResult<double> result;
  result.values.assign(g.vertex_count(), kInfinity);

  using Ctx = PartitionContext<Dist>;
  AlgorithmSpec<Dist> spec;
  spec.name = "sssp";
  spec.direction = Direction::kPush;
  spec.identity = kFar<Dist>;
  spec.combine = &min_dist<Dist>;
  spec.init = [&](Ctx& ctx) {
    active[ctx.id()].assign(ctx.partition().vertex_count(), 0);
    if (ctx.id() != source_part) return;
    ctx.state()[source_local] = Dist{0};
    active[ctx.id()][source_local] = 1;
  };
  spec.compute = [&](Ctx& ctx) {
    const Partition& part = ctx.partition();
    auto& act = active[ctx.id()];
    // Vertices improved earlier in this loop are relaxed again before the
    // superstep ends if the loop has not reached them yet.
    return ctx.for_each_vertex([&](vid_t v, eid_t& work) {
      if (!take_flag(act[v])) return true;
      const Dist base = ctx.load(v);
      const eid_t begin = part.row_offsets[v];
      const eid_t split = part.remote_begin[v];
      const eid_t end = part.row_offsets[v + 1];
      work += end - begin;
      bool finished = true;
      for (eid_t i = begin; i < split; ++i) {
        const vid_t n = part.edges[i].payload();
        if (ctx.fold_local(n, base + static_cast<Dist>(part.weights[i]))) {
          set_flag(act[n], 1);
          finished = false;
        }
      }
      for (eid_t i = split; i < end; ++i) {
        if (ctx.fold(part.edges[i], base + static_cast<Dist>(part.weights[i]))) {
          finished = false;
        }
      }
      return finished;
    });
  };
  spec.scatter = [&](Ctx& ctx) {
    auto& act = active[ctx.id()];
    ctx.scatter_inbox([&](vid_t v) { act[v] = 1; });
  };
  spec.collect = [&](Ctx& ctx) {
    detail::gather(ctx, result.values, [](vid_t, Dist d) {
      return d == kFar<Dist> ? kInfinity : static_cast<double>(d);
    });
  };

  Engine<Dist> engine(set, options.engine);
  result.report = engine.run(spec);
  detail::describe(result.report, plan, set, sizeof(Dist), sizeof(Dist) + 1);
  if (const double s = elapsed_seconds(result.report); s > 0.0) {
    result.report.teps = teps_sssp(g, result.values, s);
  }
  return result;
}

}  // namespace

AlgorithmResult<double> sssp(const CsrGraph& g, const PartitionPlan& plan, vid_t source,
                             const RunOptions& options) {
  if (!g.weighted()) {
    throw ConfigurationError("sssp needs edge weights (use --synth-weights to draw them)");
  }
  detail::check_source(g, source);
  if (g.integral_weights()) return run_sssp<std::uint64_t>(g, plan, source, options);
  return run_sssp<double>(g, plan, source, options);
}

}  // namespace hg
