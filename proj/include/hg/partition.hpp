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

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hg/csr_graph.hpp"
#include "hg/partitioner.hpp"

namespace hg {

// Partition ids live in the top bits of every edge entry.
inline constexpr unsigned kTagBits = 4;
inline constexpr std::size_t kMaxPartitions = std::size_t{1} << kTagBits;

// Edge entry of a partitioned CSR. The tag names the partition holding the
// neighbour; the payload is the neighbour's local id when the tag is the
// owning partition, and an outbox slot index otherwise.
class EncodedTarget {
 public:
  static constexpr unsigned kPayloadBits = 32 - kTagBits;
  static constexpr std::uint32_t kPayloadMask = (std::uint32_t{1} << kPayloadBits) - 1;

  constexpr EncodedTarget() = default;
  constexpr EncodedTarget(std::size_t partition, std::uint32_t payload)
      : raw_((static_cast<std::uint32_t>(partition) << kPayloadBits) |
             (payload & kPayloadMask)) {}

  constexpr std::size_t partition() const noexcept { return raw_ >> kPayloadBits; }
  constexpr std::uint32_t payload() const noexcept { return raw_ & kPayloadMask; }
  constexpr std::uint32_t raw() const noexcept { return raw_; }

  constexpr bool operator==(const EncodedTarget&) const = default;

 private:
  std::uint32_t raw_ = 0;
};

struct Partition {
  std::size_t id = 0;
  ElementDescriptor element;
  std::vector<eid_t> row_offsets;
  // First remote entry of each vertex; local entries precede it.
  std::vector<eid_t> remote_begin;
  std::vector<EncodedTarget> edges;
  std::vector<weight_t> weights;  // empty when the graph is unweighted
  std::vector<vid_t> global_of_local;
  // outbox_ids[q]: local ids, in partition q, of the neighbours this
  // partition's edges reach in q; one slot each, ascending.
  std::vector<std::vector<vid_t>> outbox_ids;
  // inbox_ids[q]: local vertices here that q's edges reach; always equal to
  // partition q's outbox_ids[id].
  std::vector<std::vector<vid_t>> inbox_ids;

  vid_t vertex_count() const noexcept {
    return static_cast<vid_t>(global_of_local.size());
  }
  eid_t edge_count() const noexcept { return edges.size(); }
  bool is_local(EncodedTarget t) const noexcept { return t.partition() == id; }

  std::size_t outbox_slots() const noexcept;
  std::size_t inbox_slots() const noexcept;
};

struct PartitionSet {
  std::vector<Partition> parts;
  vid_t global_vertex_count = 0;
  eid_t global_edge_count = 0;
  bool weighted = false;
  bool reduced = true;
  // Per global vertex: owning partition and local id.
  std::vector<std::uint8_t> owner;
  std::vector<vid_t> local_id;

  std::size_t size() const noexcept { return parts.size(); }
  std::size_t total_outbox_slots() const noexcept;
};

struct BuildOptions {
  // One outbox slot per distinct (partition, remote vertex) pair. When off,
  // every boundary edge gets its own slot and nothing is combined at the
  // source.
  bool reduce_messages = true;
};

PartitionSet build_partitions(const CsrGraph& g, const PartitionPlan& plan,
                              BuildOptions options = {});

// Byte breakdown of one partition. Buffers are counted twice because they
// are double buffered.
struct Footprint {
  std::uint64_t graph_bytes = 0;
  std::uint64_t inbox_bytes = 0;
  std::uint64_t outbox_bytes = 0;
  std::uint64_t state_bytes = 0;

  std::uint64_t total() const noexcept {
    return graph_bytes + inbox_bytes + outbox_bytes + state_bytes;
  }
};

struct FootprintInputs {
  std::uint64_t vertices = 0;
  std::uint64_t edges = 0;
  std::uint64_t inbox_vertices = 0;
  std::uint64_t outbox_vertices = 0;
  std::size_t vid_bytes = 4;
  std::size_t eid_bytes = 4;
  std::size_t payload_bytes = 4;
  std::size_t weight_bytes = 0;  // 0 for unweighted graphs
  std::uint64_t state_bytes = 0;
  unsigned buffer_copies = 2;
};

Footprint footprint(const FootprintInputs& in);

// Footprint of a built partition; id widths follow the whole graph's size.
Footprint footprint(const PartitionSet& set, std::size_t partition,
                    std::size_t payload_bytes,
                    std::uint64_t state_bytes_per_vertex = 0);

}  // namespace hg
