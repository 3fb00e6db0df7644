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

#include "common.hpp"

namespace hg {

namespace {

constexpr BcSlot kEmpty{0.0, kUnreached, 0};

BcSlot keep_first(const BcSlot& a, const BcSlot&) { return a; }

}  // namespace

AlgorithmResult<double> betweenness_single_source(const CsrGraph& g,
                                                  const PartitionPlan& plan,
                                                  vid_t source,
                                                  const RunOptions& options) {
  detail::check_source(g, source);
  const PartitionSet set = detail::prepare(g, plan, options);
  const std::size_t k = set.size();
  const std::size_t source_part = set.owner[source];
  const vid_t source_local = set.local_id[source];

  using Ctx = PartitionContext<BcSlot>;
  AlgorithmSpec<BcSlot> forward;
  forward.name = "bc";
  forward.direction = Direction::kPush;
  forward.identity = kEmpty;
  forward.combine = &merge_paths;
  forward.init = [&](Ctx& ctx) {
    if (ctx.id() == source_part) ctx.state()[source_local] = {1.0, 0, 0};
  };
  forward.compute = [&](Ctx& ctx) {
    const auto level = static_cast<std::uint32_t>(ctx.superstep());
    const Partition& part = ctx.partition();
    auto state = ctx.state();
    return ctx.for_each_vertex([&](vid_t v, eid_t& work) {
      // Slots at this level are final: they only receive folds tagged with
      // deeper levels during this superstep.
      if (state[v].level != level) return true;
      const BcSlot msg{state[v].value, level + 1, 0};
      const eid_t begin = part.row_offsets[v];
      const eid_t end = part.row_offsets[v + 1];
      work += end - begin;
      bool finished = true;
      for (eid_t i = begin; i < end; ++i) {
        if (ctx.fold(part.edges[i], msg)) finished = false;
      }
      return finished;
    });
  };

  std::vector<std::vector<BcSlot>> paths(k);
  std::uint32_t depth = 0;
  forward.collect = [&](Ctx& ctx) {
    paths[ctx.id()].assign(ctx.state().begin(), ctx.state().end());
    for (const BcSlot& s : paths[ctx.id()]) {
      if (s.level != kUnreached) depth = std::max(depth, s.level);
    }
  };

  AlgorithmResult<double> result;
  result.values.assign(g.vertex_count(), 0.0);
  std::vector<std::uint32_t> levels(g.vertex_count(), kUnreached);

  Engine<BcSlot> forward_engine(set, options.engine);
  result.report = forward_engine.run(forward);
  for (std::size_t p = 0; p < k; ++p) {
    const auto& globals = set.parts[p].global_of_local;
    for (vid_t v = 0; v < globals.size(); ++v) levels[globals[v]] = paths[p][v].level;
  }

  // Backward pass: one superstep per level, deepest first. Each vertex pulls
  // the factors of its successors one level down.
  if (!result.report.aborted && depth > 1) {
    std::vector<std::vector<double>> dependency(k);
    AlgorithmSpec<BcSlot> backward;
    backward.name = "bc";
    backward.direction = Direction::kPull;
    backward.identity = kEmpty;
    backward.combine = &keep_first;
    backward.max_supersteps = depth - 1;
    backward.init = [&](Ctx& ctx) {
      const auto& fwd = paths[ctx.id()];
      auto state = ctx.state();
      dependency[ctx.id()].assign(fwd.size(), 0.0);
      for (vid_t v = 0; v < fwd.size(); ++v) {
        state[v] = fwd[v].level == kUnreached ? kEmpty
                                              : BcSlot{1.0 / fwd[v].value, fwd[v].level, 0};
      }
    };
    backward.compute = [&](Ctx& ctx) {
      const auto level = depth - 1 - static_cast<std::uint32_t>(ctx.superstep());
      const Partition& part = ctx.partition();
      const auto& fwd = paths[ctx.id()];
      auto& dep = dependency[ctx.id()];
      auto state = ctx.state();
      ctx.for_each_vertex([&](vid_t v, eid_t& work) {
        if (fwd[v].level != level) return true;
        const eid_t begin = part.row_offsets[v];
        const eid_t end = part.row_offsets[v + 1];
        work += end - begin;
        double sum = 0.0;
        for (eid_t i = begin; i < end; ++i) {
          const BcSlot& succ = ctx.read(part.edges[i]);
          if (succ.level == level + 1) sum += succ.value;
        }
        dep[v] = fwd[v].value * sum;
        state[v].value = (1.0 + dep[v]) / fwd[v].value;
        return true;
      });
      return false;
    };
    backward.collect = [&](Ctx& ctx) {
      const auto& dep = dependency[ctx.id()];
      detail::gather(ctx, result.values, [&](vid_t v, const BcSlot&) { return dep[v]; });
    };
    Engine<BcSlot> backward_engine(set, options.engine);
    append_run(result.report, backward_engine.run(backward));
  }
  result.values[source] = 0.0;

  detail::describe(result.report, plan, set, sizeof(BcSlot), sizeof(BcSlot) + sizeof(double));
  if (const double s = elapsed_seconds(result.report); s > 0.0) {
    result.report.teps = teps_bc(g, levels, s);
  }
  return result;
}

AlgorithmResult<double> betweenness(const CsrGraph& g, const PartitionPlan& plan,
                                    std::span<const vid_t> sources,
                                    const RunOptions& options) {
  AlgorithmResult<double> total;
  total.values.assign(g.vertex_count(), 0.0);
  bool first = true;
  double traversed = 0.0;
  for (vid_t s : sources) {
    auto one = betweenness_single_source(g, plan, s, options);
    for (vid_t v = 0; v < g.vertex_count(); ++v) total.values[v] += one.values[v];
    traversed += one.report.teps * elapsed_seconds(one.report);
    if (first) {
      total.report = std::move(one.report);
      first = false;
    } else {
      append_run(total.report, one.report);
    }
  }
  if (const double s = elapsed_seconds(total.report); s > 0.0) {
    total.report.teps = traversed / s;
  }
  return total;
}

}  // namespace hg
