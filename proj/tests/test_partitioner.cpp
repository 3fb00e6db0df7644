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

#include <algorithm>
#include <cmath>
#include <set>

#include "hg/generators.hpp"
#include "hg/partition.hpp"
#include "hg/partitioner.hpp"

using namespace hg;

namespace {

ElementDescriptor host(int id = 0) { return {id, ElementKind::kHost, 1, {}, {}}; }
ElementDescriptor accel(int id) { return {id, ElementKind::kAccelerator, 1, {}, {}}; }

// Out-degrees [5,3,2,1,1] on five vertices.
CsrGraph five_vertex_graph() {
  std::vector<Edge> edges;
  const std::vector<int> degrees{5, 3, 2, 1, 1};
  for (vid_t u = 0; u < 5; ++u) {
    for (int i = 0; i < degrees[u]; ++i) edges.push_back({u, static_cast<vid_t>((u + i + 1) % 5)});
  }
  return CsrGraph::from_edges(5, edges, true, false);
}

void check_plan_invariants(const CsrGraph& g, const PartitionPlan& plan) {
  REQUIRE(plan.assignment.size() == g.vertex_count());
  std::vector<std::set<vid_t>> locals(plan.partition_count());
  eid_t edges = 0;
  for (vid_t v = 0; v < g.vertex_count(); ++v) {
    REQUIRE(plan.assignment[v] < plan.partition_count());
    locals[plan.assignment[v]].insert(plan.local_id[v]);
  }
  for (std::size_t p = 0; p < plan.partition_count(); ++p) {
    CHECK(locals[p].size() == plan.vertex_counts[p]);
    if (!locals[p].empty()) CHECK(*locals[p].rbegin() == plan.vertex_counts[p] - 1);
    edges += plan.edge_counts[p];
  }
  CHECK(edges == g.edge_count());
  CHECK(plan.beta_reduced <= plan.beta_raw);
  CHECK(plan.beta_raw <= 1.0);
  const double slack = static_cast<double>(g.max_degree()) / static_cast<double>(g.edge_count());
  CHECK(std::abs(plan.alpha_actual - plan.alpha_target) <= slack + 1e-12);
}

}  // namespace

TEST_CASE("HIGH walks from the highest degree") {
  const CsrGraph g = five_vertex_graph();
  const PartitionPlan plan = make_plan(g, Strategy::kHigh, 0.5, {host(), accel(1)}, 1);
  CHECK(plan.assignment == std::vector<std::uint8_t>{0, 0, 1, 1, 1});
  CHECK(plan.alpha_actual == doctest::Approx(8.0 / 12.0));
  check_plan_invariants(g, plan);
}

TEST_CASE("LOW walks from the lowest degree") {
  const CsrGraph g = five_vertex_graph();
  const PartitionPlan plan = make_plan(g, Strategy::kLow, 0.5, {host(), accel(1)}, 1);
  // 1 + 1 + 2 + 3 = 7 >= 6.
  CHECK(plan.assignment == std::vector<std::uint8_t>{1, 0, 0, 0, 0});
  CHECK(plan.alpha_actual == doctest::Approx(7.0 / 12.0));
  check_plan_invariants(g, plan);
}

TEST_CASE("alpha 1 keeps everything on the host") {
  const CsrGraph g = generate_rmat({.scale = 10, .avg_degree = 8, .seed = 1});
  for (Strategy s : {Strategy::kRand, Strategy::kHigh, Strategy::kLow}) {
    const PartitionPlan plan = make_plan(g, s, 1.0, {host(), accel(1)}, 3);
    CHECK(plan.vertex_counts[0] == g.vertex_count());
    CHECK(plan.beta_raw == 0.0);
    CHECK(plan.beta_reduced == 0.0);
  }
}

TEST_CASE("plans are deterministic and satisfy their invariants") {
  const CsrGraph g = generate_rmat({.scale = 12, .avg_degree = 8, .seed = 2});
  for (Strategy s : {Strategy::kRand, Strategy::kHigh, Strategy::kLow}) {
    for (double alpha : {0.2, 0.5, 0.8}) {
      const PartitionPlan a = make_plan(g, s, alpha, {host(), accel(1), accel(2)}, 9);
      const PartitionPlan b = make_plan(g, s, alpha, {host(), accel(1), accel(2)}, 9);
      CHECK(a.assignment == b.assignment);
      CHECK(a.local_id == b.local_id);
      check_plan_invariants(g, a);
      const auto share = vertex_share(a);
      double total = 0.0;
      for (double x : share) total += x;
      CHECK(total == doctest::Approx(1.0));
    }
  }
}

TEST_CASE("accelerators split the remainder evenly") {
  const CsrGraph g = generate_uniform(12, 8, 4);
  const PartitionPlan plan = make_plan(g, Strategy::kHigh, 0.4, {host(), accel(1), accel(2)}, 1);
  const double rest = static_cast<double>(plan.edge_counts[1] + plan.edge_counts[2]);
  CHECK(static_cast<double>(plan.edge_counts[1]) / rest == doctest::Approx(0.5).epsilon(0.01));
}

TEST_CASE("RAND two-way on a uniform graph cuts about half the edges") {
  const CsrGraph g = generate_uniform(16, 16, 3);
  const PartitionPlan plan = make_plan(g, Strategy::kRand, 0.5, {host(), accel(1)}, 5);
  CHECK(plan.beta_raw >= 0.45);
  CHECK(plan.beta_raw <= 0.55);
}

TEST_CASE("boundary stats collapse messages to one remote vertex") {
  // 0 -> 2 and 1 -> 2, with 2 alone on the accelerator.
  const CsrGraph g = CsrGraph::from_edges(3, std::vector<Edge>{{0, 2}, {1, 2}}, true, false);
  PartitionPlan plan = make_plan(g, Strategy::kLow, 0.0, {host(), accel(1)}, 1);
  plan.assignment = {0, 0, 1};
  plan.local_id = {0, 1, 0};
  const BoundaryStats b = boundary_stats(g, plan);
  CHECK(b.beta_raw == 1.0);
  CHECK(b.beta_reduced == 0.5);

  // Parallel duplicates change nothing after reduction.
  const CsrGraph dup =
      CsrGraph::from_edges(3, std::vector<Edge>{{0, 2}, {0, 2}, {1, 2}, {1, 2}}, true, false);
  CHECK(boundary_stats(dup, plan).reduced_slots == 1);
}

TEST_CASE("HIGH host vertex share grows with alpha") {
  const CsrGraph g = generate_rmat({.scale = 12, .avg_degree = 16, .seed = 3});
  double previous = 0.0;
  for (double alpha = 0.1; alpha <= 1.0; alpha += 0.1) {
    const double share =
        vertex_share(make_plan(g, Strategy::kHigh, alpha, {host(), accel(1)}, 1))[0];
    CHECK(share >= previous);
    previous = share;
  }
}

TEST_CASE("HIGH and LOW are complementary at a degree boundary") {
  // Degrees 3,3,1,1,1,1 (10 edges): HIGH at 0.6 takes {0,1}, LOW at 0.4 the rest.
  std::vector<Edge> edges;
  const std::vector<int> degrees{3, 3, 1, 1, 1, 1};
  for (vid_t u = 0; u < 6; ++u) {
    for (int i = 0; i < degrees[u]; ++i) edges.push_back({u, static_cast<vid_t>((u + i + 1) % 6)});
  }
  const CsrGraph g = CsrGraph::from_edges(6, edges, true, false);
  const auto high = make_plan(g, Strategy::kHigh, 0.6, {host(), accel(1)}, 1);
  const auto low = make_plan(g, Strategy::kLow, 0.4, {host(), accel(1)}, 1);
  for (vid_t v = 0; v < 6; ++v) CHECK(high.assignment[v] != low.assignment[v]);
}

TEST_CASE("element validation") {
  const CsrGraph g = five_vertex_graph();
  CHECK_THROWS_AS(make_plan(g, Strategy::kHigh, 0.5, {accel(0), accel(1)}, 1), ValidationError);
  CHECK_THROWS_AS(make_plan(g, Strategy::kHigh, 0.5, {host(0), host(1)}, 1), ValidationError);
  CHECK_THROWS_AS(make_plan(g, Strategy::kHigh, 0.5, {host(0), accel(0)}, 1), ValidationError);
  auto bad = accel(1);
  bad.worker_count = 0;
  CHECK_THROWS_AS(make_plan(g, Strategy::kHigh, 0.5, {host(), bad}, 1), ValidationError);
  CHECK_THROWS_AS(make_plan(g, Strategy::kHigh, 1.5, {host(), accel(1)}, 1), ValidationError);
}

TEST_CASE("memory budget makes small alpha infeasible") {
  const CsrGraph g = generate_rmat({.scale = 10, .avg_degree = 8, .seed = 1});
  auto small = accel(1);
  small.memory_budget = 1024;
  try {
    make_plan(g, Strategy::kHigh, 0.5, {host(), small}, 1);
    FAIL("expected a capacity error");
  } catch (const CapacityError& e) {
    CHECK(std::string(e.what()).find("element 1") != std::string::npos);
  }
  CHECK_NOTHROW(make_plan(g, Strategy::kHigh, 1.0, {host(), small}, 1));
}

TEST_CASE("element spec parsing") {
  const auto e = parse_elements("host:8,accel:64@throttle=4e9,gpu:2@mem=1000");
  REQUIRE(e.size() == 3);
  CHECK(e[0].kind == ElementKind::kHost);
  CHECK(e[0].worker_count == 8);
  CHECK(e[1].kind == ElementKind::kAccelerator);
  CHECK(e[1].worker_count == 64);
  CHECK(*e[1].throttle == 4e9);
  CHECK(e[2].element_id == 2);
  CHECK(*e[2].memory_budget == 1000);
  CHECK_THROWS_AS(parse_elements("tpu:1"), ValidationError);
  CHECK_THROWS_AS(parse_elements("host:x"), ValidationError);
  CHECK_THROWS_AS(parse_elements("host:1@throttle=-3"), ValidationError);
  CHECK(parse_strategy("high") == Strategy::kHigh);
  CHECK_THROWS_AS(parse_strategy("metis"), ValidationError);
}

TEST_CASE("partition build: reduction by construction") {
  // A0 -> B, A1 -> B with B remote: one outbox slot shared by both entries.
  const CsrGraph g = CsrGraph::from_edges(3, std::vector<Edge>{{0, 2}, {1, 2}}, true, false);
  PartitionPlan plan = make_plan(g, Strategy::kLow, 0.0, {host(), accel(1)}, 1);
  plan.assignment = {0, 0, 1};
  plan.local_id = {0, 1, 0};
  plan.vertex_counts = {2, 1};
  const PartitionSet set = build_partitions(g, plan);
  const Partition& a = set.parts[0];
  CHECK(a.outbox_ids[1].size() == 1);
  CHECK(a.edges[0] == EncodedTarget(1, 0));
  CHECK(a.edges[1] == EncodedTarget(1, 0));
  CHECK(set.parts[1].inbox_ids[0] == std::vector<vid_t>{0});

  const PartitionSet raw = build_partitions(g, plan, {.reduce_messages = false});
  CHECK(raw.parts[0].outbox_ids[1].size() == 2);
}

TEST_CASE("partition build: single partition has no buffers") {
  const CsrGraph g = generate_rmat({.scale = 8, .avg_degree = 4, .seed = 1});
  const PartitionSet set = build_partitions(g, make_plan(g, Strategy::kHigh, 1.0, {host()}, 1));
  REQUIRE(set.size() == 1);
  CHECK(set.total_outbox_slots() == 0);
  for (EncodedTarget t : set.parts[0].edges) CHECK(t.partition() == 0);
}

TEST_CASE("partition build: layout invariants") {
  const CsrGraph g = with_random_weights(generate_rmat({.scale = 12, .avg_degree = 8, .seed = 3}), 1);
  const PartitionPlan plan = make_plan(g, Strategy::kRand, 0.4, {host(), accel(1), accel(2)}, 4);
  const PartitionSet set = build_partitions(g, plan);
  eid_t edges = 0;
  for (const Partition& p : set.parts) {
    edges += p.edge_count();
    for (vid_t v = 0; v < p.vertex_count(); ++v) {
      const vid_t gv = p.global_of_local[v];
      CHECK(p.row_offsets[v + 1] - p.row_offsets[v] == g.degree(gv));
      for (eid_t i = p.row_offsets[v]; i < p.row_offsets[v + 1]; ++i) {
        const bool local = p.is_local(p.edges[i]);
        CHECK(local == (i < p.remote_begin[v]));
        if (!local) CHECK(p.edges[i].payload() < p.outbox_ids[p.edges[i].partition()].size());
      }
      // Remote entries resolve to the right global neighbours with weights.
      std::multiset<std::pair<vid_t, weight_t>> expect, got;
      const auto nbrs = g.neighbors(gv);
      const auto ws = g.edge_weights(gv);
      for (std::size_t i = 0; i < nbrs.size(); ++i) expect.insert({nbrs[i], ws[i]});
      for (eid_t i = p.row_offsets[v]; i < p.row_offsets[v + 1]; ++i) {
        const EncodedTarget t = p.edges[i];
        const vid_t local = p.is_local(t) ? t.payload() : p.outbox_ids[t.partition()][t.payload()];
        got.insert({set.parts[t.partition()].global_of_local[local], p.weights[i]});
      }
      CHECK(expect == got);
    }
    for (std::size_t q = 0; q < set.size(); ++q) {
      CHECK(std::is_sorted(p.inbox_ids[q].begin(), p.inbox_ids[q].end()));
      CHECK(std::adjacent_find(p.inbox_ids[q].begin(), p.inbox_ids[q].end()) ==
            p.inbox_ids[q].end());
      CHECK(p.outbox_ids[q] == set.parts[q].inbox_ids[p.id]);
    }
  }
  CHECK(edges == g.edge_count());
}

TEST_CASE("partition build: outbox slots match beta_reduced") {
  const CsrGraph g = generate_rmat({.scale = 14, .avg_degree = 16, .seed = 8});
  const PartitionPlan plan = make_plan(g, Strategy::kRand, 0.5, {host(), accel(1)}, 2);
  const PartitionSet set = build_partitions(g, plan);
  CHECK(static_cast<double>(set.total_outbox_slots()) / g.edge_count() ==
        doctest::Approx(plan.beta_reduced).epsilon(1e-12));
}

TEST_CASE("partition build: tag capacity") {
  const CsrGraph g = generate_rmat({.scale = 8, .avg_degree = 4, .seed = 1});
  std::vector<ElementDescriptor> many{host()};
  for (int i = 1; i <= 16; ++i) many.push_back(accel(i));
  const PartitionPlan plan = make_plan(g, Strategy::kHigh, 0.3, many, 1);
  CHECK_THROWS_AS(build_partitions(g, plan), ConfigurationError);
}

TEST_CASE("encoded targets pack the tag in the high bits") {
  const EncodedTarget t(5, 123456);
  CHECK(t.partition() == 5);
  CHECK(t.payload() == 123456);
  CHECK((t.raw() >> 28) == 5);
  const EncodedTarget top(15, EncodedTarget::kPayloadMask);
  CHECK(top.partition() == 15);
  CHECK(top.payload() == EncodedTarget::kPayloadMask);
}

TEST_CASE("footprint arithmetic") {
  FootprintInputs in;
  in.vertices = 10;
  in.edges = 100;
  in.inbox_vertices = 3;
  in.outbox_vertices = 5;
  const Footprint f = footprint(in);
  CHECK(f.graph_bytes == 4 * 10 + 4 * 100);
  CHECK(f.inbox_bytes == 2 * 8 * 3);
  CHECK(f.outbox_bytes == 2 * 8 * 5);
  CHECK(f.total() == f.graph_bytes + f.inbox_bytes + f.outbox_bytes);
}
