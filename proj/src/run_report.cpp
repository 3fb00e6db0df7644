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

#include "hg/run_report.hpp"

#include <algorithm>
#include <ostream>

namespace hg {

std::vector<double> partition_totals_ms(const RunReport& r) {
  std::size_t k = 0;
  for (const auto& e : r.ledger) k = std::max(k, e.partition + 1);
  std::vector<double> totals(k, 0.0);
  for (const auto& e : r.ledger) totals[e.partition] += e.compute_ms + e.comm_ms;
  return totals;
}

std::vector<double> superstep_makespans_ms(const RunReport& r) {
  std::size_t steps = 0;
  for (const auto& e : r.ledger) steps = std::max(steps, e.superstep + 1);
  std::vector<double> out(steps, 0.0);
  for (const auto& e : r.ledger) {
    out[e.superstep] = std::max(out[e.superstep], e.compute_ms + e.comm_ms);
  }
  return out;
}

void summarize(RunReport& r) {
  const auto totals = partition_totals_ms(r);
  r.makespan_ms = totals.empty() ? 0.0 : *std::max_element(totals.begin(), totals.end());
  r.critical_path_ms = 0.0;
  for (double t : superstep_makespans_ms(r)) r.critical_path_ms += t;
  r.bytes_transferred = 0;
  for (const auto& e : r.ledger) r.bytes_transferred += e.bytes_transferred;
}

void append_run(RunReport& a, const RunReport& b) {
  const std::size_t offset = a.supersteps;
  for (PhaseEntry e : b.ledger) {
    e.superstep += offset;
    a.ledger.push_back(e);
  }
  a.supersteps += b.supersteps;
  a.total_ms += b.total_ms;
  if (b.aborted && !a.aborted) {
    a.aborted = true;
    a.error = b.error;
  }
  summarize(a);
}

void fill_plan_summary(RunReport& r, const PartitionPlan& plan) {
  r.plan.strategy = std::string(to_string(plan.strategy));
  r.plan.alpha_target = plan.alpha_target;
  r.plan.alpha_actual = plan.alpha_actual;
  r.plan.beta_raw = plan.beta_raw;
  r.plan.beta_reduced = plan.beta_reduced;
  r.plan.vertex_share = vertex_share(plan);
}

void fill_partition_info(RunReport& r, const PartitionSet& set,
                         std::size_t payload_bytes,
                         std::uint64_t state_bytes_per_vertex) {
  r.partitions.clear();
  for (std::size_t p = 0; p < set.size(); ++p) {
    const Partition& part = set.parts[p];
    PartitionInfo info;
    info.kind = part.element.kind;
    info.vertices = part.vertex_count();
    info.edges = part.edge_count();
    info.outbox_slots = part.outbox_slots();
    info.inbox_slots = part.inbox_slots();
    info.throttle = part.element.throttle.value_or(0.0);
    info.footprint = footprint(set, p, payload_bytes, state_bytes_per_vertex);
    r.partitions.push_back(info);
  }
}

namespace {

using nlohmann::json;

json footprint_json(const Footprint& f) {
  return {{"graph_bytes", f.graph_bytes},
          {"inbox_bytes", f.inbox_bytes},
          {"outbox_bytes", f.outbox_bytes},
          {"state_bytes", f.state_bytes},
          {"total_bytes", f.total()}};
}

Footprint footprint_from(const json& j) {
  Footprint f;
  f.graph_bytes = j.at("graph_bytes").get<std::uint64_t>();
  f.inbox_bytes = j.at("inbox_bytes").get<std::uint64_t>();
  f.outbox_bytes = j.at("outbox_bytes").get<std::uint64_t>();
  f.state_bytes = j.at("state_bytes").get<std::uint64_t>();
  return f;
}

}  // namespace

json to_json(const RunReport& r) {
  json ledger = json::array();
  for (const auto& e : r.ledger) {
    ledger.push_back({{"superstep", e.superstep},
                      {"partition", e.partition},
                      {"compute_ms", e.compute_ms},
                      {"comm_ms", e.comm_ms},
                      {"bytes_transferred", e.bytes_transferred},
                      {"edges_processed", e.edges_processed}});
  }
  json parts = json::array();
  for (const auto& p : r.partitions) {
    parts.push_back({{"kind", std::string(to_string(p.kind))},
                     {"vertices", p.vertices},
                     {"edges", p.edges},
                     {"outbox_slots", p.outbox_slots},
                     {"inbox_slots", p.inbox_slots},
                     {"throttle", p.throttle},
                     {"footprint", footprint_json(p.footprint)}});
  }
  json j = {{"algorithm", r.algorithm},
            {"graph", {{"vertices", r.vertex_count}, {"edges", r.edge_count}}},
            {"reduced", r.reduced},
            {"plan",
             {{"strategy", r.plan.strategy},
              {"alpha_target", r.plan.alpha_target},
              {"alpha_actual", r.plan.alpha_actual},
              {"beta_raw", r.plan.beta_raw},
              {"beta_reduced", r.plan.beta_reduced},
              {"vertex_share", r.plan.vertex_share}}},
            {"partitions", parts},
            {"supersteps", r.supersteps},
            {"ledger", ledger},
            {"total_ms", r.total_ms},
            {"makespan_ms", r.makespan_ms},
            {"critical_path_ms", r.critical_path_ms},
            {"teps", r.teps},
            {"bytes_transferred", r.bytes_transferred},
            {"time_dilation", r.time_dilation},
            {"aborted", r.aborted}};
  if (r.aborted) j["error"] = r.error;
  if (!r.config.is_null()) j["config"] = r.config;
  return j;
}

RunReport report_from_json(const json& j) {
  RunReport r;
  r.algorithm = j.at("algorithm").get<std::string>();
  r.vertex_count = j.at("graph").at("vertices").get<vid_t>();
  r.edge_count = j.at("graph").at("edges").get<eid_t>();
  r.reduced = j.at("reduced").get<bool>();
  const auto& plan = j.at("plan");
  r.plan.strategy = plan.at("strategy").get<std::string>();
  r.plan.alpha_target = plan.at("alpha_target").get<double>();
  r.plan.alpha_actual = plan.at("alpha_actual").get<double>();
  r.plan.beta_raw = plan.at("beta_raw").get<double>();
  r.plan.beta_reduced = plan.at("beta_reduced").get<double>();
  r.plan.vertex_share = plan.at("vertex_share").get<std::vector<double>>();
  for (const auto& p : j.at("partitions")) {
    PartitionInfo info;
    info.kind = p.at("kind").get<std::string>() == "host" ? ElementKind::kHost
                                                          : ElementKind::kAccelerator;
    info.vertices = p.at("vertices").get<vid_t>();
    info.edges = p.at("edges").get<eid_t>();
    info.outbox_slots = p.at("outbox_slots").get<std::size_t>();
    info.inbox_slots = p.at("inbox_slots").get<std::size_t>();
    info.throttle = p.at("throttle").get<double>();
    info.footprint = footprint_from(p.at("footprint"));
    r.partitions.push_back(info);
  }
  r.supersteps = j.at("supersteps").get<std::size_t>();
  for (const auto& e : j.at("ledger")) {
    r.ledger.push_back({e.at("superstep").get<std::size_t>(),
                        e.at("partition").get<std::size_t>(),
                        e.at("compute_ms").get<double>(), e.at("comm_ms").get<double>(),
                        e.at("bytes_transferred").get<std::uint64_t>(),
                        e.at("edges_processed").get<eid_t>()});
  }
  r.total_ms = j.at("total_ms").get<double>();
  r.makespan_ms = j.at("makespan_ms").get<double>();
  r.critical_path_ms = j.at("critical_path_ms").get<double>();
  r.teps = j.at("teps").get<double>();
  r.bytes_transferred = j.at("bytes_transferred").get<std::uint64_t>();
  r.time_dilation = j.at("time_dilation").get<double>();
  r.aborted = j.at("aborted").get<bool>();
  if (j.contains("error")) r.error = j.at("error").get<std::string>();
  if (j.contains("config")) r.config = j.at("config");
  return r;
}

void write_ledger_csv(const RunReport& r, std::ostream& out) {
  out << "superstep,partition,phase,ms,bytes_transferred,edges_processed\n";
  for (const auto& e : r.ledger) {
    out << e.superstep << ',' << e.partition << ",compute," << e.compute_ms << ",0,"
        << e.edges_processed << '\n';
    out << e.superstep << ',' << e.partition << ",communication," << e.comm_ms << ','
        << e.bytes_transferred << ",0\n";
  }
}

}  // namespace hg
