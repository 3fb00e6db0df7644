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

#include "hg/partitioner.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <random>
#include <set>

#include "hg/random.hpp"

namespace hg {

std::string_view to_string(Strategy s) {
  switch (s) {
    case Strategy::kRand: return "rand";
    case Strategy::kHigh: return "high";
    case Strategy::kLow: return "low";
  }
  return "?";
}

std::string_view to_string(ElementKind k) {
  return k == ElementKind::kHost ? "host" : "accel";
}

Strategy parse_strategy(std::string_view name) {
  if (name == "rand" || name == "random") return Strategy::kRand;
  if (name == "high") return Strategy::kHigh;
  if (name == "low") return Strategy::kLow;
  throw ValidationError("unknown strategy '" + std::string(name) +
                        "' (expected rand, high or low)");
}

std::size_t PartitionPlan::host_index() const {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (elements[i].kind == ElementKind::kHost) return i;
  }
  throw ValidationError("plan has no host-like element");
}

std::uint64_t estimated_partition_bytes(const CsrGraph& g, vid_t vertices,
                                        eid_t edges) {
  const std::uint64_t vid = id_width_for(g.vertex_count());
  const std::uint64_t eid = id_width_for(g.edge_count());
  std::uint64_t bytes = eid * vertices + vid * edges;
  if (g.weighted()) bytes += sizeof(weight_t) * edges;
  return bytes;
}

namespace {

void check_elements(const std::vector<ElementDescriptor>& elements) {
  if (elements.empty()) throw ValidationError("no processing elements given");
  if (elements.size() > 255) throw ConfigurationError("too many elements");
  std::size_t hosts = 0;
  std::set<int> ids;
  for (const auto& e : elements) {
    if (e.kind == ElementKind::kHost) ++hosts;
    if (e.worker_count < 1) {
      throw ValidationError("element " + std::to_string(e.element_id) +
                            " needs at least one worker");
    }
    if (e.throttle && !(*e.throttle > 0.0)) {
      throw ValidationError("element " + std::to_string(e.element_id) +
                            " throttle must be positive");
    }
    if (!ids.insert(e.element_id).second) {
      throw ValidationError("duplicate element id " +
                            std::to_string(e.element_id));
    }
  }
  if (hosts != 1) {
    throw ValidationError("exactly one host-like element is required, got " +
                          std::to_string(hosts));
  }
}

// Host takes vertices from the front of `order` until it holds `target`
// edges; accelerators then split the rest into equal edge budgets.
void assign_by_walk(const CsrGraph& g, std::span<const vid_t> order,
                    double target, std::size_t host,
                    std::span<const std::size_t> accels,
                    std::vector<std::uint8_t>& assignment) {
  std::size_t i = 0;
  eid_t host_edges = 0;
  while (i < order.size() && static_cast<double>(host_edges) < target) {
    assignment[order[i]] = static_cast<std::uint8_t>(host);
    host_edges += g.degree(order[i]);
    ++i;
  }
  const double rest = static_cast<double>(g.edge_count() - host_edges);
  const double share = rest / static_cast<double>(accels.size());
  std::size_t slot = 0;
  eid_t given = 0;
  for (; i < order.size(); ++i) {
    assignment[order[i]] = static_cast<std::uint8_t>(accels[slot]);
    given += g.degree(order[i]);
    if (slot + 1 < accels.size() &&
        static_cast<double>(given) >= share * static_cast<double>(slot + 1)) {
      ++slot;
    }
  }
}

void assign_random(const CsrGraph& g, const DegreeSummary& degrees,
                   double alpha, std::size_t host,
                   std::span<const std::size_t> accels, std::uint64_t seed,
                   std::vector<std::uint8_t>& assignment) {
  std::mt19937_64 rng(derive_seed(seed, 0x72616e64ULL));
  const double accel_share = (1.0 - alpha) / static_cast<double>(accels.size());
  for (vid_t v = 0; v < g.vertex_count(); ++v) {
    double r = uniform01(rng);
    if (r < alpha) {
      assignment[v] = static_cast<std::uint8_t>(host);
      continue;
    }
    r -= alpha;
    auto k = static_cast<std::size_t>(r / accel_share);
    assignment[v] = static_cast<std::uint8_t>(accels[std::min(k, accels.size() - 1)]);
  }

  // Repair: move the largest vertices that still fit across the host
  // boundary until the host share is within one vertex's degree of target.
  const double target = alpha * static_cast<double>(g.edge_count());
  eid_t host_edges = 0;
  std::vector<eid_t> accel_edges(accels.size(), 0);
  for (vid_t v = 0; v < g.vertex_count(); ++v) {
    if (assignment[v] == host) {
      host_edges += g.degree(v);
    } else {
      const auto pos = std::find(accels.begin(), accels.end(), assignment[v]) -
                       accels.begin();
      accel_edges[pos] += g.degree(v);
    }
  }
  const auto& order = degrees.degree_ordering;
  if (static_cast<double>(host_edges) > target) {
    for (vid_t v : order) {
      const eid_t d = g.degree(v);
      if (d == 0) break;
      if (assignment[v] != host) continue;
      if (static_cast<double>(host_edges - d) < target) continue;
      const auto lightest =
          std::min_element(accel_edges.begin(), accel_edges.end()) -
          accel_edges.begin();
      assignment[v] = static_cast<std::uint8_t>(accels[lightest]);
      accel_edges[lightest] += d;
      host_edges -= d;
    }
  } else if (static_cast<double>(host_edges) < target) {
    for (vid_t v : order) {
      const eid_t d = g.degree(v);
      if (d == 0) break;
      if (assignment[v] == host) continue;
      if (static_cast<double>(host_edges + d) > target) continue;
      const auto pos = std::find(accels.begin(), accels.end(), assignment[v]) -
                       accels.begin();
      accel_edges[pos] -= d;
      assignment[v] = static_cast<std::uint8_t>(host);
      host_edges += d;
    }
  }
}

}  // namespace

PartitionPlan make_plan(const CsrGraph& g, Strategy strategy,
                        double alpha_target,
                        std::vector<ElementDescriptor> elements,
                        std::uint64_t seed) {
  check_elements(elements);
  if (!(alpha_target >= 0.0 && alpha_target <= 1.0)) {
    throw ValidationError("alpha must lie in [0, 1]");
  }

  PartitionPlan plan;
  plan.strategy = strategy;
  plan.alpha_target = alpha_target;
  plan.elements = std::move(elements);
  const std::size_t k = plan.elements.size();
  const std::size_t host = plan.host_index();
  std::vector<std::size_t> accels;
  for (std::size_t i = 0; i < k; ++i) {
    if (i != host) accels.push_back(i);
  }

  const vid_t n = g.vertex_count();
  plan.assignment.assign(n, static_cast<std::uint8_t>(host));
  if (!accels.empty() && alpha_target < 1.0) {
    const DegreeSummary degrees = degree_summary(g);
    const double target = alpha_target * static_cast<double>(g.edge_count());
    switch (strategy) {
      case Strategy::kHigh:
        assign_by_walk(g, degrees.degree_ordering, target, host, accels,
                       plan.assignment);
        break;
      case Strategy::kLow: {
        std::vector<vid_t> ascending(degrees.degree_ordering.rbegin(),
                                     degrees.degree_ordering.rend());
        assign_by_walk(g, ascending, target, host, accels, plan.assignment);
        break;
      }
      case Strategy::kRand:
        assign_random(g, degrees, alpha_target, host, accels, seed,
                      plan.assignment);
        break;
    }
  }

  plan.local_id.resize(n);
  plan.vertex_counts.assign(k, 0);
  plan.edge_counts.assign(k, 0);
  for (vid_t v = 0; v < n; ++v) {
    const auto p = plan.assignment[v];
    plan.local_id[v] = plan.vertex_counts[p]++;
    plan.edge_counts[p] += g.degree(v);
  }
  plan.alpha_actual =
      g.edge_count() == 0
          ? alpha_target
          : static_cast<double>(plan.edge_counts[host]) /
                static_cast<double>(g.edge_count());

  for (std::size_t p = 0; p < k; ++p) {
    const auto& element = plan.elements[p];
    if (!element.memory_budget) continue;
    const auto need =
        estimated_partition_bytes(g, plan.vertex_counts[p], plan.edge_counts[p]);
    if (need > *element.memory_budget) {
      throw CapacityError(
          "element " + std::to_string(element.element_id) + " (" +
          std::string(to_string(element.kind)) + ") needs " +
          std::to_string(need) + " bytes at alpha " +
          std::to_string(alpha_target) + " but its budget is " +
          std::to_string(*element.memory_budget));
    }
  }

  const BoundaryStats stats = boundary_stats(g, plan);
  plan.beta_raw = stats.beta_raw;
  plan.beta_reduced = stats.beta_reduced;
  return plan;
}

BoundaryStats boundary_stats(const CsrGraph& g, const PartitionPlan& plan) {
  const vid_t n = g.vertex_count();
  if (plan.assignment.size() != n) {
    throw ValidationError("plan does not cover every vertex of the graph");
  }
  const std::size_t k = plan.partition_count();
  BoundaryStats stats;
  // seen[t * k + p]: some vertex of partition p already targets t.
  std::vector<bool> seen(static_cast<std::size_t>(n) * k, false);
  for (vid_t u = 0; u < n; ++u) {
    const auto p = plan.assignment[u];
    for (vid_t t : g.neighbors(u)) {
      if (plan.assignment[t] == p) continue;
      ++stats.cross_edges;
      const std::size_t key = static_cast<std::size_t>(t) * k + p;
      if (!seen[key]) {
        seen[key] = true;
        ++stats.reduced_slots;
      }
    }
  }
  if (g.edge_count() > 0) {
    const auto m = static_cast<double>(g.edge_count());
    stats.beta_raw = static_cast<double>(stats.cross_edges) / m;
    stats.beta_reduced = static_cast<double>(stats.reduced_slots) / m;
  }
  return stats;
}

std::vector<double> vertex_share(const PartitionPlan& plan) {
  std::vector<double> share(plan.partition_count(), 0.0);
  const auto n = plan.assignment.size();
  if (n == 0) {
    share[plan.host_index()] = 1.0;
    return share;
  }
  for (std::size_t p = 0; p < share.size(); ++p) {
    share[p] = static_cast<double>(plan.vertex_counts[p]) / static_cast<double>(n);
  }
  return share;
}

namespace {

double parse_rate(std::string_view text, std::string_view what) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size()) {
    throw ValidationError("bad " + std::string(what) + " value '" +
                          std::string(text) + "'");
  }
  return value;
}

}  // namespace

std::vector<ElementDescriptor> parse_elements(std::string_view spec) {
  std::vector<ElementDescriptor> out;
  std::size_t pos = 0;
  while (pos <= spec.size()) {
    const auto comma = std::min(spec.find(',', pos), spec.size());
    std::string_view item = spec.substr(pos, comma - pos);
    pos = comma + 1;
    if (item.empty()) {
      if (comma == spec.size()) break;
      continue;
    }
    ElementDescriptor e;
    e.element_id = static_cast<int>(out.size());
    auto at = item.find('@');
    std::string_view head = at == std::string_view::npos ? item : item.substr(0, at);
    const auto colon = head.find(':');
    const std::string_view kind = colon == std::string_view::npos ? head : head.substr(0, colon);
    if (kind == "host" || kind == "cpu") {
      e.kind = ElementKind::kHost;
    } else if (kind == "accel" || kind == "gpu") {
      e.kind = ElementKind::kAccelerator;
    } else {
      throw ValidationError("unknown element kind '" + std::string(kind) +
                            "' (expected host or accel)");
    }
    if (colon != std::string_view::npos) {
      const double workers = parse_rate(head.substr(colon + 1), "worker count");
      if (workers < 1 || workers != static_cast<unsigned>(workers)) {
        throw ValidationError("worker count must be a positive integer");
      }
      e.worker_count = static_cast<unsigned>(workers);
    }
    while (at != std::string_view::npos) {
      const auto next = item.find('@', at + 1);
      const std::string_view opt = item.substr(at + 1, next - at - 1);
      const auto eq = opt.find('=');
      if (eq == std::string_view::npos) {
        throw ValidationError("element option '" + std::string(opt) +
                              "' needs key=value");
      }
      const auto key = opt.substr(0, eq);
      const auto val = opt.substr(eq + 1);
      if (key == "throttle") {
        e.throttle = parse_rate(val, "throttle");
        if (!(*e.throttle > 0.0)) throw ValidationError("throttle must be positive");
      } else if (key == "mem") {
        e.memory_budget = static_cast<std::uint64_t>(parse_rate(val, "mem"));
      } else {
        throw ValidationError("unknown element option '" + std::string(key) + "'");
      }
      at = next;
    }
    out.push_back(e);
    if (comma == spec.size()) break;
  }
  if (out.empty()) throw ValidationError("empty element list");
  return out;
}

}  // namespace hg
