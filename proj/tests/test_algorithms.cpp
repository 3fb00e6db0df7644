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

#include <doctest.h>

#include <cmath>
#include <numeric>

#include "hg/algorithms.hpp"
#include "hg/generators.hpp"
#include "oracles.hpp"

using namespace hg;

namespace {

std::vector<ElementDescriptor> elements(std::size_t k, unsigned workers = 1) {
  std::vector<ElementDescriptor> e{{0, ElementKind::kHost, workers, {}, {}}};
  for (std::size_t i = 1; i < k; ++i) {
    e.push_back({static_cast<int>(i), ElementKind::kAccelerator, workers, {}, {}});
  }
  return e;
}

PartitionPlan single(const CsrGraph& g) { return make_plan(g, Strategy::kHigh, 1.0, elements(1), 1); }

CsrGraph directed(vid_t n, std::vector<Edge> edges, bool weighted = false) {
  return CsrGraph::from_edges(n, edges, true, weighted);
}

CsrGraph undirected(vid_t n, const std::vector<std::pair<vid_t, vid_t>>& pairs) {
  std::vector<Edge> edges;
  for (auto [u, v] : pairs) {
    edges.push_back({u, v});
    edges.push_back({v, u});
  }
  return CsrGraph::from_edges(n, edges, false, false);
}

// Plans covering every strategy, two alphas and 1-3 partitions.
std::vector<PartitionPlan> plans(const CsrGraph& g) {
  std::vector<PartitionPlan> out;
  for (Strategy s : {Strategy::kRand, Strategy::kHigh, Strategy::kLow}) {
    for (double alpha : {0.5, 0.8}) {
      for (std::size_t k : {1, 2, 3}) out.push_back(make_plan(g, s, alpha, elements(k), 17));
    }
  }
  return out;
}

}  // namespace

TEST_CASE("bfs: path") {
  const CsrGraph g = directed(3, {{0, 1}, {1, 2}});
  CHECK(bfs(g, single(g), 0).values == std::vector<std::uint32_t>{0, 1, 2});
}

TEST_CASE("bfs: isolated source") {
  const CsrGraph g = directed(4, {{1, 2}, {2, 3}});
  CHECK(bfs(g, single(g), 0).values ==
        std::vector<std::uint32_t>{0, kUnreached, kUnreached, kUnreached});
  CHECK(bfs(g, single(g), 0).report.teps == 0.0);
}

TEST_CASE("bfs: source out of range") {
  const CsrGraph g = directed(3, {{0, 1}});
  CHECK_THROWS_AS(bfs(g, single(g), 3), ValidationError);
}

TEST_CASE("bfs: partition invariance and level consistency") {
  const CsrGraph g = generate_rmat({.scale = 11, .avg_degree = 8, .seed = 3});
  const vid_t source = 0;
  const auto expect = oracle::bfs(g, source);
  for (const auto& plan : plans(g)) {
    for (bool bitmap : {true, false}) {
      RunOptions opts;
      opts.bitmap = bitmap;
      CHECK(bfs(g, plan, source, opts).values == expect);
    }
  }
  const CsrGraph t = transpose(g);
  for (vid_t v = 0; v < g.vertex_count(); ++v) {
    if (v == source || expect[v] == kUnreached) continue;
    bool parent = false;
    for (vid_t u : t.neighbors(v)) parent = parent || expect[u] + 1 == expect[v];
    CHECK(parent);
  }
}

TEST_CASE("bfs: unreduced buffers give the same levels") {
  const CsrGraph g = generate_uniform(10, 4, 9);
  RunOptions opts;
  opts.reduce_messages = false;
  const auto plan = make_plan(g, Strategy::kRand, 0.5, elements(3), 2);
  CHECK(bfs(g, plan, 5, opts).values == oracle::bfs(g, 5));
}

TEST_CASE("pagerank: isolated vertex") {
  const CsrGraph g = directed(1, {});
  const auto r = pagerank(g, single(g), 0.85, 1);
  CHECK(r.values[0] == doctest::Approx(0.15));
  CHECK(r.report.supersteps == 1);
}

TEST_CASE("pagerank: two-cycle converges to one half") {
  const CsrGraph g = directed(2, {{0, 1}, {1, 0}});
  const auto r = pagerank(g, make_plan(g, Strategy::kHigh, 0.5, elements(2), 1), 0.85, 200);
  CHECK(r.values[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(r.values[1] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("pagerank: runs exactly the requested iterations") {
  const CsrGraph g = generate_rmat({.scale = 8, .avg_degree = 4, .seed = 1});
  CHECK(pagerank(g, make_plan(g, Strategy::kRand, 0.5, elements(2), 1), 0.85, 5).report.supersteps == 5);
  CHECK_THROWS_AS(pagerank(g, single(g), 0.85, 0), ValidationError);
}

TEST_CASE("pagerank: partition invariance and mass conservation") {
  // Out-degree >= 1 everywhere: a ring plus RMAT edges.
  const CsrGraph base = generate_rmat({.scale = 10, .avg_degree = 8, .seed = 6});
  std::vector<Edge> edges = to_edges(base);
  for (vid_t v = 0; v < base.vertex_count(); ++v) edges.push_back({v, (v + 1) % base.vertex_count()});
  const CsrGraph g = CsrGraph::from_edges(base.vertex_count(), edges, true, false);
  const auto expect = oracle::pagerank(g, 0.85, 5);
  for (const auto& plan : plans(g)) {
    const auto got = pagerank(g, plan, 0.85, 5).values;
    CHECK(oracle::max_relative_error(got, expect) <= 1e-9);
    CHECK(std::accumulate(got.begin(), got.end(), 0.0) == doctest::Approx(1.0).epsilon(1e-9));
  }
}

TEST_CASE("bc: undirected path") {
  const CsrGraph g = undirected(3, {{0, 1}, {1, 2}});
  const auto r = betweenness_single_source(g, single(g), 0);
  CHECK(r.values == std::vector<double>{0.0, 1.0, 0.0});
}

TEST_CASE("bc: isolated source") {
  const CsrGraph g = undirected(4, {{1, 2}, {2, 3}});
  CHECK(betweenness_single_source(g, single(g), 0).values == std::vector<double>(4, 0.0));
}

TEST_CASE("bc: diamond splits dependency across paths") {
  // 0 -> {1,2} -> 3 -> 4: vertices 1 and 2 each carry half of the paths to 3 and 4.
  const CsrGraph g = directed(5, {{0, 1}, {0, 2}, {1, 3}, {2, 3}, {3, 4}});
  const auto r = betweenness_single_source(g, make_plan(g, Strategy::kRand, 0.5, elements(2), 3), 0);
  CHECK(r.values[1] == doctest::Approx(1.0));
  CHECK(r.values[2] == doctest::Approx(1.0));
  CHECK(r.values[3] == doctest::Approx(1.0));
  CHECK(r.values[4] == 0.0);
}

TEST_CASE("bc: matches Brandes on every plan") {
  const CsrGraph g = symmetrize(generate_rmat({.scale = 9, .avg_degree = 4, .seed = 2}));
  for (vid_t source : {vid_t{0}, vid_t{7}}) {
    const auto expect = oracle::brandes(g, source);
    for (const auto& plan : plans(g)) {
      CHECK(oracle::max_relative_error(betweenness_single_source(g, plan, source).values, expect,
                                       1e-9) <= 1e-9);
    }
  }
  const CsrGraph d = generate_rmat({.scale = 9, .avg_degree = 8, .seed = 4});
  CHECK(oracle::max_relative_error(
            betweenness_single_source(d, make_plan(d, Strategy::kLow, 0.5, elements(3), 1), 0).values,
            oracle::brandes(d, 0), 1e-9) <= 1e-9);
}

TEST_CASE("bc: multi-source sum") {
  const CsrGraph g = symmetrize(generate_rmat({.scale = 7, .avg_degree = 4, .seed = 5}));
  const std::vector<vid_t> sources{0, 3, 9};
  std::vector<double> expect(g.vertex_count(), 0.0);
  for (vid_t s : sources) {
    const auto one = oracle::brandes(g, s);
    for (vid_t v = 0; v < g.vertex_count(); ++v) expect[v] += one[v];
  }
  const auto got = betweenness(g, make_plan(g, Strategy::kHigh, 0.5, elements(2), 1), sources);
  CHECK(oracle::max_relative_error(got.values, expect, 1e-9) <= 1e-9);
}

TEST_CASE("sssp: triangle") {
  const CsrGraph g = directed(3, {{0, 1, 5}, {0, 2, 1}, {2, 1, 1}}, true);
  CHECK(sssp(g, single(g), 0).values == std::vector<double>{0, 2, 1});
  CHECK(sssp(g, make_plan(g, Strategy::kLow, 0.5, elements(2), 1), 0).values ==
        std::vector<double>{0, 2, 1});
}

TEST_CASE("sssp: lone source and missing weights") {
  const CsrGraph g = directed(3, {}, true);
  CHECK(sssp(g, single(g), 0).values == std::vector<double>{0, kInfinity, kInfinity});
  const CsrGraph unweighted = directed(2, {{0, 1}});
  CHECK_THROWS_AS(sssp(unweighted, single(unweighted), 0), ConfigurationError);
}

TEST_CASE("sssp: matches Dijkstra and leaves nothing to relax") {
  const CsrGraph g = with_random_weights(generate_rmat({.scale = 11, .avg_degree = 8, .seed = 7}), 3);
  const auto expect = oracle::dijkstra(g, 1);
  for (const auto& plan : plans(g)) CHECK(sssp(g, plan, 1).values == expect);
  for (vid_t u = 0; u < g.vertex_count(); ++u) {
    if (std::isinf(expect[u])) continue;
    const auto nbrs = g.neighbors(u);
    const auto w = g.edge_weights(u);
    for (std::size_t i = 0; i < nbrs.size(); ++i) CHECK(expect[u] + w[i] >= expect[nbrs[i]]);
  }
}

TEST_CASE("sssp: fractional weights use floating point") {
  const CsrGraph g = directed(3, {{0, 1, 0.5f}, {1, 2, 0.25f}, {0, 2, 1.0f}}, true);
  CHECK(sssp(g, make_plan(g, Strategy::kRand, 0.5, elements(2), 1), 0).values ==
        std::vector<double>{0, 0.5, 0.75});
}

TEST_CASE("cc: two components") {
  const CsrGraph g = undirected(4, {{0, 1}, {2, 3}});
  CHECK(connected_components(g, single(g)).values == std::vector<vid_t>{0, 0, 2, 2});
}

TEST_CASE("cc: path finishes quickly") {
  const CsrGraph g = undirected(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  const auto r = connected_components(g, make_plan(g, Strategy::kRand, 0.5, elements(2), 4));
  CHECK(r.values == std::vector<vid_t>(5, 0));
  CHECK(r.report.supersteps <= 5);
}

TEST_CASE("cc: rejects directed input") {
  const CsrGraph g = directed(2, {{0, 1}});
  CHECK_THROWS_AS(connected_components(g, single(g)), ConfigurationError);
}

TEST_CASE("cc: union-find agreement and idempotence") {
  const CsrGraph g = symmetrize(generate_rmat({.scale = 11, .avg_degree = 2, .seed = 8}));
  const auto expect = oracle::components(g);
  for (const auto& plan : plans(g)) CHECK(connected_components(g, plan).values == expect);
  // Relabeling with the result's ids changes nothing.
  for (vid_t v = 0; v < g.vertex_count(); ++v) CHECK(expect[expect[v]] == expect[v]);
}

TEST_CASE("reports carry plan, partitions and a consistent makespan") {
  const CsrGraph g = generate_rmat({.scale = 10, .avg_degree = 8, .seed = 1});
  const auto plan = make_plan(g, Strategy::kHigh, 0.6, elements(3), 1);
  const RunReport r = bfs(g, plan, 0).report;
  CHECK(r.plan.strategy == "high");
  CHECK(r.plan.alpha_actual == plan.alpha_actual);
  REQUIRE(r.partitions.size() == 3);
  CHECK(r.partitions[0].kind == ElementKind::kHost);
  const auto totals = partition_totals_ms(r);
  CHECK(*std::max_element(totals.begin(), totals.end()) == doctest::Approx(r.makespan_ms));
  CHECK(r.total_ms >= r.makespan_ms);
  CHECK(r.teps > 0.0);
}

TEST_CASE("algorithm names") {
  CHECK(parse_algorithm("pagerank") == Algorithm::kPageRank);
  CHECK(to_string(Algorithm::kCc) == "cc");
  CHECK_THROWS_AS(parse_algorithm("dfs"), ValidationError);
}
