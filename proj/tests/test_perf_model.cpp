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

#include <random>
#include <sstream>

#include "hg/algorithms.hpp"
#include "hg/generators.hpp"
#include "hg/perf_model.hpp"

using namespace hg;

namespace {

ModelParams params(double alpha, double beta, double r_cpu = 1e9, double c = 3e9) {
  ModelParams p;
  p.alpha = alpha;
  p.beta = beta;
  p.r_cpu = r_cpu;
  p.c = c;
  return p;
}

RunReport fake_report(std::vector<std::pair<double, double>> per_partition_ms) {
  RunReport r;
  for (std::size_t p = 0; p < per_partition_ms.size(); ++p) {
    r.ledger.push_back({0, p, per_partition_ms[p].first, per_partition_ms[p].second, 0, 1000});
    r.partitions.push_back({p == 0 ? ElementKind::kHost : ElementKind::kAccelerator});
  }
  summarize(r);
  return r;
}

}  // namespace

TEST_CASE("partition time") {
  ModelParams p;
  CHECK(partition_time(1e9, 0, 1e9, p) == doctest::Approx(1.0));
  CHECK(partition_time(0, 1e9, 1e9, p) == doctest::Approx(1.0 / 3.0));
  CHECK(partition_time(2e9, 1e8, 1e9, p) == doctest::Approx(2.0 + 1.0 / 30.0));
  CHECK(partition_time(2e9, 1e8, 1e9, p) ==
        doctest::Approx(partition_time(2e9, 0, 1e9, p) + partition_time(0, 1e8, 1e9, p)));
  CHECK_THROWS_AS(partition_time(1, 0, 0.0, p), ValidationError);
}

TEST_CASE("makespan") {
  const std::vector<double> two{2.0, 0.5};
  CHECK(makespan(two) == 2.0);
  const std::vector<double> one{0.75};
  CHECK(makespan(one) == 0.75);
  CHECK_THROWS_AS(makespan(std::span<const double>{}), ValidationError);
}

TEST_CASE("makespan matches the engine ledger") {
  const CsrGraph g = generate_rmat({.scale = 10, .avg_degree = 8, .seed = 2});
  std::vector<ElementDescriptor> el{{0, ElementKind::kHost, 1, {}, {}},
                                    {1, ElementKind::kAccelerator, 1, {}, {}}};
  const RunReport r = bfs(g, make_plan(g, Strategy::kRand, 0.5, el, 1), 0).report;
  const auto totals = partition_totals_ms(r);
  CHECK(makespan(totals) == doctest::Approx(r.makespan_ms));
}

TEST_CASE("speedup") {
  CHECK(speedup(params(1.0, 0.0)) == 1.0);
  CHECK(speedup(params(0.4, 0.5, 1e9, 1e30)) == doctest::Approx(2.5));
  CHECK(speedup(params(0.5, 0.05)) == doctest::Approx(1.0 / (0.05 / 3.0 + 0.5)).epsilon(1e-15));
  CHECK(speedup(params(0.5, 0.05)) == doctest::Approx(1.9355).epsilon(1e-4));
  for (double a : {0.1, 0.25, 0.5, 0.9}) CHECK(speedup(params(a, 0.0)) == 1.0 / a);
  CHECK_THROWS_AS(speedup(params(0.0, 0.0)), ValidationError);
  CHECK_THROWS_AS(speedup(params(1.5, 0.0)), ValidationError);
  CHECK_THROWS_AS(speedup(params(0.5, 0.1, 1e9, 0.0)), ValidationError);
}

TEST_CASE("larger messages lower the predicted speedup") {
  ModelParams p = params(0.5, 0.2);
  const double four = speedup(p);
  p.bytes_per_edge_message = 8.0;
  CHECK(speedup(p) < four);
  CHECK(p.c_effective() == doctest::Approx(1.5e9));
}

TEST_CASE("sweep: worst-case beta crosses one at two thirds") {
  const std::vector<double> grid{0.5, 0.6, 2.0 / 3.0, 0.7, 0.8};
  const auto rows = sweep(params(1.0, 1.0), SweepAxis::kAlpha, grid);
  REQUIRE(rows.size() == grid.size());
  CHECK(rows[0].speedup > 1.0);
  CHECK(rows[1].speedup > 1.0);
  CHECK(rows[2].speedup == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(rows[3].speedup < 1.0);
  CHECK(rows[4].speedup < 1.0);
}

TEST_CASE("sweep: nothing offloaded means no speedup") {
  const std::vector<double> grid{1.0, 1.0};
  for (const auto& row : sweep(params(1.0, 0.0), SweepAxis::kAlpha, grid)) CHECK(row.speedup == 1.0);
  CHECK_THROWS_AS(sweep(params(1.0, 0.0), SweepAxis::kAlpha, {}), ValidationError);
}

TEST_CASE("sweep: monotone in alpha and beta over random grids") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> u(0.01, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<double> grid(20);
    for (double& x : grid) x = u(rng);
    std::sort(grid.begin(), grid.end());
    const auto by_alpha = sweep(params(0.5, u(rng)), SweepAxis::kAlpha, grid);
    const auto by_beta = sweep(params(u(rng), 0.5), SweepAxis::kBeta, grid);
    for (std::size_t i = 1; i < grid.size(); ++i) {
      CHECK(by_alpha[i].speedup <= by_alpha[i - 1].speedup);
      CHECK(by_beta[i].speedup <= by_beta[i - 1].speedup);
    }
  }
}

TEST_CASE("sweep CSV") {
  const std::vector<double> grid{0.5};
  std::ostringstream out;
  write_sweep_csv(sweep(params(1.0, 0.05), SweepAxis::kAlpha, grid), out);
  CHECK(out.str().rfind("axis,value,speedup\nalpha,0.5,1.93548387096774", 0) == 0);
  CHECK(parse_sweep_axis("bytes") == SweepAxis::kBytesPerEdge);
  CHECK_THROWS_AS(parse_sweep_axis("gamma"), ValidationError);
}

TEST_CASE("calibration") {
  RunReport r = fake_report({{500.0, 0.0}});
  CHECK(calibrate_rate(r) == doctest::Approx(1000.0 / 0.5));
  RunReport h = fake_report({{10.0, 4.0}, {5.0, 2.0}});
  CHECK(calibrate_comm_rate(h, 100.0) == doctest::Approx(100.0 / 0.004));
  CHECK_THROWS_AS(calibrate_rate(RunReport{}), ValidationError);
  CHECK_THROWS_AS(calibrate_comm_rate(r, 100.0), ValidationError);
}

TEST_CASE("validate_model") {
  PartitionPlan plan;
  plan.elements = {{0, ElementKind::kHost, 1, {}, {}}, {1, ElementKind::kAccelerator, 1, {}, {}}};
  plan.alpha_actual = 0.5;
  plan.beta_raw = 0.4;
  plan.beta_reduced = 0.1;
  const RunReport baseline = fake_report({{100.0, 0.0}});

  SUBCASE("reduced runs use beta_reduced") {
    const RunReport hybrid = fake_report({{45.0, 5.0}, {20.0, 5.0}});
    const ModelValidation v = validate_model(plan, baseline, hybrid, 1e9, 1e9);
    CHECK(v.beta == 0.1);
    CHECK(v.predicted == doctest::Approx(1.0 / 0.6));
    CHECK(v.measured == doctest::Approx(2.0));
    CHECK(v.error == doctest::Approx((1.0 / 0.6 - 2.0) / 2.0));
    CHECK_FALSE(v.out_of_contract);
    CHECK(to_json(v).contains("predicted"));
  }
  SUBCASE("unreduced runs use beta_raw") {
    RunReport hybrid = fake_report({{45.0, 5.0}, {20.0, 5.0}});
    hybrid.reduced = false;
    CHECK(validate_model(plan, baseline, hybrid, 1e9, 1e9).beta == 0.4);
  }
  SUBCASE("slow accelerator is out of contract") {
    const RunReport hybrid = fake_report({{20.0, 0.0}, {60.0, 0.0}});
    const ModelValidation v = validate_model(plan, baseline, hybrid, 1e9, 1e9);
    CHECK(v.out_of_contract);
    CHECK(to_json(v).contains("warning"));
  }
  SUBCASE("missing baseline") {
    CHECK_THROWS_AS(validate_model(plan, RunReport{}, baseline, 1e9, 1e9), ValidationError);
  }
}

TEST_CASE("pearson") {
  const std::vector<double> x{1, 2, 3, 4};
  const std::vector<double> y{2, 4, 6, 8};
  const std::vector<double> z{8, 6, 4, 2};
  CHECK(pearson(x, y) == doctest::Approx(1.0));
  CHECK(pearson(x, z) == doctest::Approx(-1.0));
  CHECK_THROWS_AS(pearson(x, std::vector<double>{1.0}), ValidationError);
}
