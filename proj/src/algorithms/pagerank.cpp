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

#include "common.hpp"

namespace hg {

namespace {

double sum(const double& a, const double& b) { return a + b; }

}  // namespace

AlgorithmResult<double> pagerank(const CsrGraph& g, const PartitionPlan& plan,
                                 double d_factor, unsigned iterations,
                                 const RunOptions& options) {
  if (iterations < 1) throw ValidationError("pagerank needs at least one iteration");
  if (!(d_factor >= 0.0 && d_factor <= 1.0)) {
    throw ValidationError("damping factor must lie in [0, 1]");
  }
  // Vertices pull along their incoming edges, so partitions are cut from
  // the transpose under the same vertex assignment.
  const CsrGraph incoming = transpose(g);
  const PartitionSet set = detail::prepare(incoming, plan, options);
  const std::size_t k = set.size();
  const double n = static_cast<double>(g.vertex_count());
  const double delta = n > 0 ? (1.0 - d_factor) / n : 0.0;

  // State slots hold each vertex's outgoing contribution rank/outdeg.
  std::vector<std::vector<double>> rank(k), inv_degree(k);

  AlgorithmResult<double> result;
  result.values.assign(g.vertex_count(), 0.0);

  using Ctx = PartitionContext<double>;
  AlgorithmSpec<double> spec;
  spec.name = "pagerank";
  spec.direction = Direction::kPull;
  spec.identity = 0.0;
  spec.combine = &sum;
  spec.max_supersteps = iterations;
  spec.init = [&](Ctx& ctx) {
    const auto& globals = ctx.partition().global_of_local;
    auto& r = rank[ctx.id()];
    auto& inv = inv_degree[ctx.id()];
    r.assign(globals.size(), 1.0 / n);
    inv.resize(globals.size());
    auto state = ctx.state();
    for (vid_t v = 0; v < globals.size(); ++v) {
      const eid_t out = g.degree(globals[v]);
      inv[v] = out ? 1.0 / static_cast<double>(out) : 0.0;
      state[v] = r[v] * inv[v];
    }
  };
  spec.compute = [&](Ctx& ctx) {
    const Partition& part = ctx.partition();
    auto& r = rank[ctx.id()];
    ctx.for_each_vertex([&](vid_t v, eid_t& work) {
      const eid_t begin = part.row_offsets[v];
      const eid_t end = part.row_offsets[v + 1];
      work += end - begin;
      double s = 0.0;
      for (eid_t i = begin; i < end; ++i) s += ctx.read(part.edges[i]);
      r[v] = delta + d_factor * s;
      return true;
    });
    // Publish only after every local read of this iteration is done.
    auto state = ctx.state();
    const auto& inv = inv_degree[ctx.id()];
    for (vid_t v = 0; v < state.size(); ++v) state[v] = r[v] * inv[v];
    return false;
  };
  spec.collect = [&](Ctx& ctx) {
    const auto& r = rank[ctx.id()];
    detail::gather(ctx, result.values, [&](vid_t v, double) { return r[v]; });
  };

  Engine<double> engine(set, options.engine);
  result.report = engine.run(spec);
  detail::describe(result.report, plan, set, sizeof(double), 2 * sizeof(double));
  result.report.edge_count = g.edge_count();
  if (const double s = elapsed_seconds(result.report); s > 0.0) {
    result.report.teps = teps_pagerank(g.edge_count(), s / result.report.supersteps);
  }
  return result;
}

}  // namespace hg
