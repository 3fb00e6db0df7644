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

#include "hg/partition.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

namespace hg {

std::size_t Partition::outbox_slots() const noexcept {
  std::size_t total = 0;
  for (const auto& ids : outbox_ids) total += ids.size();
  return total;
}

std::size_t Partition::inbox_slots() const noexcept {
  std::size_t total = 0;
  for (const auto& ids : inbox_ids) total += ids.size();
  return total;
}

std::size_t PartitionSet::total_outbox_slots() const noexcept {
  std::size_t total = 0;
  for (const auto& p : parts) total += p.outbox_slots();
  return total;
}

namespace {

struct RemoteRef {
  vid_t remote_local;  // neighbour's local id in its own partition
  eid_t position;      // where the entry lands in this partition's edges
};

void build_one(const CsrGraph& g, const PartitionPlan& plan, std::size_t pid,
               bool reduce, Partition& part) {
  const std::size_t k = plan.partition_count();
  part.id = pid;
  part.element = plan.elements[pid];
  part.global_of_local.reserve(plan.vertex_counts[pid]);
  for (vid_t v = 0; v < g.vertex_count(); ++v) {
    if (plan.assignment[v] == pid) part.global_of_local.push_back(v);
  }
  const vid_t n = part.vertex_count();
  part.row_offsets.assign(static_cast<std::size_t>(n) + 1, 0);
  part.remote_begin.assign(n, 0);
  for (vid_t lv = 0; lv < n; ++lv) {
    part.row_offsets[lv + 1] = part.row_offsets[lv] + g.degree(part.global_of_local[lv]);
  }
  const eid_t m = part.row_offsets[n];
  part.edges.resize(m);
  if (g.weighted()) part.weights.resize(m);
  const auto weights = g.weights();

  // Per vertex: locals first (sorted by local id), then remotes grouped by
  // partition. Remote payloads are fixed up once slots are known.
  std::vector<std::vector<RemoteRef>> remote(k);
  struct Entry {
    std::uint8_t part;
    vid_t local;
    weight_t weight;
  };
  std::vector<Entry> scratch;
  for (vid_t lv = 0; lv < n; ++lv) {
    const vid_t gv = part.global_of_local[lv];
    scratch.clear();
    const eid_t base = g.row_offsets()[gv];
    const auto nbrs = g.neighbors(gv);
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      const vid_t t = nbrs[i];
      scratch.push_back({plan.assignment[t], plan.local_id[t],
                         g.weighted() ? weights[base + i] : 1.0f});
    }
    std::stable_sort(scratch.begin(), scratch.end(),
                     [pid](const Entry& a, const Entry& b) {
                       const bool al = a.part == pid;
                       const bool bl = b.part == pid;
                       if (al != bl) return al;
                       return std::tie(a.part, a.local) < std::tie(b.part, b.local);
                     });
    eid_t pos = part.row_offsets[lv];
    part.remote_begin[lv] = part.row_offsets[lv + 1];
    bool seen_remote = false;
    for (const Entry& e : scratch) {
      if (e.part == pid) {
        part.edges[pos] = EncodedTarget(pid, e.local);
      } else {
        if (!seen_remote) {
          part.remote_begin[lv] = pos;
          seen_remote = true;
        }
        remote[e.part].push_back({e.local, pos});
      }
      if (g.weighted()) part.weights[pos] = e.weight;
      ++pos;
    }
  }

  part.outbox_ids.assign(k, {});
  for (std::size_t q = 0; q < k; ++q) {
    auto& refs = remote[q];
    auto& ids = part.outbox_ids[q];
    if (reduce) {
      ids.reserve(refs.size());
      for (const auto& r : refs) ids.push_back(r.remote_local);
      std::sort(ids.begin(), ids.end());
      ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
      for (const auto& r : refs) {
        const auto slot = std::lower_bound(ids.begin(), ids.end(), r.remote_local) - ids.begin();
        part.edges[r.position] = EncodedTarget(q, static_cast<std::uint32_t>(slot));
      }
    } else {
      std::stable_sort(refs.begin(), refs.end(),
                       [](const RemoteRef& a, const RemoteRef& b) {
                         return a.remote_local < b.remote_local;
                       });
      ids.reserve(refs.size());
      for (std::size_t slot = 0; slot < refs.size(); ++slot) {
        ids.push_back(refs[slot].remote_local);
        part.edges[refs[slot].position] =
            EncodedTarget(q, static_cast<std::uint32_t>(slot));
      }
    }
    if (ids.size() > EncodedTarget::kPayloadMask) {
      throw CapacityError("outbox of partition " + std::to_string(pid) +
                          " exceeds the encodable slot range");
    }
  }
}

}  // namespace

PartitionSet build_partitions(const CsrGraph& g, const PartitionPlan& plan,
                              BuildOptions options) {
  const std::size_t k = plan.partition_count();
  if (k == 0) throw ValidationError("plan has no partitions");
  if (k > kMaxPartitions) {
    throw ConfigurationError(std::to_string(k) + " partitions exceed the " +
                             std::to_string(kTagBits) + "-bit partition tag (max " +
                             std::to_string(kMaxPartitions) + ")");
  }
  if (plan.assignment.size() != g.vertex_count() ||
      plan.local_id.size() != g.vertex_count()) {
    throw ValidationError("plan does not match the graph's vertex count");
  }
  for (vid_t count : plan.vertex_counts) {
    if (count > EncodedTarget::kPayloadMask) {
      throw CapacityError("partition too large for the encoded id payload");
    }
  }

  PartitionSet set;
  set.global_vertex_count = g.vertex_count();
  set.global_edge_count = g.edge_count();
  set.weighted = g.weighted();
  set.reduced = options.reduce_messages;
  set.owner = plan.assignment;
  set.local_id = plan.local_id;
  set.parts.resize(k);
  for (std::size_t p = 0; p < k; ++p) {
    build_one(g, plan, p, options.reduce_messages, set.parts[p]);
  }
  for (std::size_t p = 0; p < k; ++p) {
    set.parts[p].inbox_ids.assign(k, {});
    for (std::size_t q = 0; q < k; ++q) {
      if (q != p) set.parts[p].inbox_ids[q] = set.parts[q].outbox_ids[p];
    }
  }
  return set;
}

Footprint footprint(const FootprintInputs& in) {
  Footprint f;
  f.graph_bytes = in.eid_bytes * in.vertices + in.vid_bytes * in.edges +
                  in.weight_bytes * in.edges;
  const std::uint64_t slot = in.vid_bytes + in.payload_bytes;
  f.inbox_bytes = in.buffer_copies * slot * in.inbox_vertices;
  f.outbox_bytes = in.buffer_copies * slot * in.outbox_vertices;
  f.state_bytes = in.state_bytes;
  return f;
}

Footprint footprint(const PartitionSet& set, std::size_t partition,
                    std::size_t payload_bytes,
                    std::uint64_t state_bytes_per_vertex) {
  const Partition& p = set.parts.at(partition);
  FootprintInputs in;
  in.vertices = p.vertex_count();
  in.edges = p.edge_count();
  in.inbox_vertices = p.inbox_slots();
  in.outbox_vertices = p.outbox_slots();
  in.vid_bytes = id_width_for(set.global_vertex_count);
  in.eid_bytes = id_width_for(set.global_edge_count);
  in.payload_bytes = payload_bytes;
  in.weight_bytes = set.weighted ? sizeof(weight_t) : 0;
  in.state_bytes = state_bytes_per_vertex * p.vertex_count();
  return footprint(in);
}

}  // namespace hg
