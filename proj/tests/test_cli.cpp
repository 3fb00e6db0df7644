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

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hg/cli.hpp"
#include "hg/graph_io.hpp"

using namespace hg;
namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  return {std::istreambuf_iterator<char>(in), {}};
}

struct TempDir {
  fs::path path = fs::temp_directory_path() / ("hg_cli_test_" + std::to_string(::getpid()));
  TempDir() { fs::create_directories(path); }
  ~TempDir() { fs::remove_all(path); }
  std::string operator/(const std::string& name) const { return (path / name).string(); }
};

}  // namespace

TEST_CASE("generate: counts and determinism") {
  TempDir dir;
  const Result r = cli({"generate", "--kind", "uniform", "--scale", "10", "--degree", "4",
                        "--seed", "2", "-o", dir / "a.bin"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("E=4096") != std::string::npos);
  REQUIRE(cli({"generate", "--kind", "uniform", "--scale", "10", "--degree", "4", "--seed", "2",
               "-o", dir / "b.bin"})
              .code == 0);
  CHECK(slurp(dir / "a.bin") == slurp(dir / "b.bin"));
  CHECK(load_graph(dir / "a.bin").edge_count() == 4096);

  const Result j = cli({"generate", "--kind", "rmat", "--scale", "12", "--degree", "16", "--json"});
  REQUIRE(j.code == 0);
  const auto parsed = nlohmann::json::parse(j.out);
  CHECK(parsed["vertices"] == 4096);
  CHECK(parsed["edges"] == 65536);
}

TEST_CASE("run: bfs report echoes its configuration") {
  TempDir dir;
  REQUIRE(cli({"generate", "--scale", "12", "--degree", "8", "--seed", "1", "-o", dir / "g.bin"}).code == 0);
  const Result r = cli({"run", "--alg", "bfs", "--graph", dir / "g.bin", "--strategy", "high",
                        "--alpha", "0.8", "--elements", "host:1,accel:1@throttle=4e9", "--source",
                        "0", "--json", "-o", dir / "levels.txt", "--ledger", dir / "ledger.csv"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["algorithm"] == "bfs");
  CHECK(j["plan"]["alpha_actual"].get<double>() == doctest::Approx(0.8).epsilon(0.02));
  CHECK(j["config"]["alpha"] == 0.8);
  CHECK(j["config"]["source"] == 0);
  CHECK(fs::file_size(dir / "levels.txt") > 0);
  CHECK(slurp(dir / "ledger.csv").rfind("superstep,partition,phase", 0) == 0);
}

TEST_CASE("run: pagerank performs the requested iterations") {
  const Result r = cli({"run", "--alg", "pagerank", "--kind", "rmat", "--scale", "10", "--degree",
                        "8", "--iterations", "5", "--elements", "host:1,accel:1", "--alpha", "0.5",
                        "--json"});
  REQUIRE(r.code == 0);
  CHECK(nlohmann::json::parse(r.out)["supersteps"] == 5);
}

TEST_CASE("run: every algorithm completes from a generated graph") {
  for (const char* alg : {"bfs", "bc", "cc", "sssp"}) {
    CAPTURE(alg);
    const Result r = cli({"run", "--alg", alg, "--scale", "9", "--degree", "4", "--undirected",
                          "--synth-weights", "--elements", "host:1,accel:1", "--alpha", "0.6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("teps") != std::string::npos);
  }
}

TEST_CASE("exit codes") {
  SUBCASE("sssp without weights is a configuration error") {
    const Result r = cli({"run", "--alg", "sssp", "--scale", "8", "--degree", "4"});
    CHECK(r.code == 2);
    CHECK(r.err.find("weights") != std::string::npos);
  }
  SUBCASE("unknown algorithm") { CHECK(cli({"run", "--alg", "dfs", "--scale", "6"}).code == 2); }
  SUBCASE("unknown flag") { CHECK(cli({"run", "--frobnicate"}).code == 2); }
  SUBCASE("missing subcommand") { CHECK(cli({}).code == 2); }
  SUBCASE("missing graph file") {
    const Result r = cli({"run", "--graph", "/nonexistent/g.bin"});
    CHECK(r.code == 4);
    CHECK(r.err.find("/nonexistent/g.bin") != std::string::npos);
  }
  SUBCASE("memory budget") {
    CHECK(cli({"partition", "--scale", "10", "--degree", "8", "--alpha", "0.5", "--elements",
               "host:1,accel:1@mem=1024"})
              .code == 3);
  }
}

TEST_CASE("partition prints beta statistics") {
  const Result r = cli({"partition", "--scale", "12", "--degree", "8", "--strategy", "rand",
                        "--alpha", "0.5", "--elements", "host:1,accel:1", "--json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["beta_raw"].get<double>() > j["beta_reduced"].get<double>());
  CHECK(j.contains("assignment"));
}

TEST_CASE("sweep: one row per point plus a baseline") {
  TempDir dir;
  const Result r = cli({"sweep", "--alg", "bfs", "--scale", "10", "--degree", "8", "--axis",
                        "alpha", "--grid", "0.5,0.6,0.7,0.8,0.9,1.0", "--strategies",
                        "rand,high,low", "--elements", "host:1,accel:1", "-o", dir / "s.csv"});
  REQUIRE(r.code == 0);
  std::istringstream csv(slurp(dir / "s.csv"));
  std::string line;
  std::vector<std::string> lines;
  while (std::getline(csv, line)) lines.push_back(line);
  REQUIRE(lines.size() == 20);
  CHECK(lines[1].rfind("baseline,", 0) == 0);
  for (std::size_t i = 1; i < lines.size(); ++i) CHECK(lines[i].ends_with(",ok"));
}

TEST_CASE("sweep: failing rows are recorded and the sweep continues") {
  const Result r = cli({"sweep", "--alg", "bfs", "--scale", "8", "--degree", "4", "--axis",
                        "strategy", "--strategies", "high,bogus,low", "--elements",
                        "host:1,accel:1", "--alpha", "0.5"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("error: ") != std::string::npos);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 5);
}

TEST_CASE("model: alpha curve") {
  const Result r = cli({"model", "--axis", "alpha", "--grid", "0.5,1.0", "--beta", "0.05",
                        "--rcpu", "1e9", "--c", "3e9"});
  REQUIRE(r.code == 0);
  CHECK(r.out.rfind("axis,value,speedup\nalpha,0.5,1.9354838709677", 0) == 0);
  CHECK(cli({"model", "--axis", "alpha", "--grid", "0.5", "--beta", "2"}).code == 2);
}

TEST_CASE("validate prints the model comparison") {
  const Result r = cli({"validate", "--alg", "bfs", "--scale", "10", "--degree", "8",
                        "--elements", "host:1,accel:1", "--alpha", "0.6", "--source", "0"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  for (const char* key : {"alpha", "beta", "predicted", "measured", "error", "r_cpu"}) CHECK(j.contains(key));
}
