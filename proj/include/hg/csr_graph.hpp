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

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "hg/common.hpp"

namespace hg {

struct Edge {
  vid_t src;
  vid_t dst;
  weight_t weight = 1.0f;
};

// Immutable compressed-sparse-row graph. Edges of a vertex are sorted by
// target id (ties keep input order).
class CsrGraph {
 public:
  CsrGraph() : row_offsets_(1, 0) {}

  // Takes ownership of prebuilt arrays and checks every CSR invariant.
  CsrGraph(std::vector<eid_t> row_offsets, std::vector<vid_t> column_targets,
           std::optional<std::vector<weight_t>> weights, bool directed);

  // Builds from an edge multiset; duplicates and self-loops are kept.
  static CsrGraph from_edges(vid_t vertex_count, std::span<const Edge> edges,
                             bool directed, bool weighted);

  vid_t vertex_count() const noexcept {
    return static_cast<vid_t>(row_offsets_.size() - 1);
  }
  eid_t edge_count() const noexcept { return column_targets_.size(); }
  bool directed() const noexcept { return directed_; }
  bool weighted() const noexcept { return weights_.has_value(); }

  std::span<const eid_t> row_offsets() const noexcept { return row_offsets_; }
  std::span<const vid_t> column_targets() const noexcept {
    return column_targets_;
  }
  std::span<const weight_t> weights() const noexcept {
    return weights_ ? std::span<const weight_t>(*weights_)
                    : std::span<const weight_t>();
  }

  eid_t degree(vid_t v) const noexcept {
    return row_offsets_[v + 1] - row_offsets_[v];
  }
  std::span<const vid_t> neighbors(vid_t v) const noexcept {
    return std::span<const vid_t>(column_targets_)
        .subspan(row_offsets_[v], degree(v));
  }
  std::span<const weight_t> edge_weights(vid_t v) const noexcept {
    return weights().subspan(row_offsets_[v], degree(v));
  }

  eid_t max_degree() const noexcept;

  // True when every weight is a whole number (SSSP then runs on integers).
  bool integral_weights() const noexcept;

  // Re-checks all invariants, including multiset symmetry of undirected
  // graphs. Throws ValidationError.
  void validate() const;

  bool operator==(const CsrGraph&) const = default;

 private:
  std::vector<eid_t> row_offsets_;
  std::vector<vid_t> column_targets_;
  std::optional<std::vector<weight_t>> weights_;
  bool directed_ = true;
};

struct DegreeSummary {
  std::vector<eid_t> out_degree;
  eid_t max_degree = 0;
  // Descending out-degree, ties by ascending id.
  std::vector<vid_t> degree_ordering;
};

DegreeSummary degree_summary(const CsrGraph& g);

// Undirected version of g. The multiplicity of (u,v) in the result is
// max(count(u,v), count(v,u)) in g, so a graph with no reciprocal edges
// doubles its edge count.
CsrGraph symmetrize(const CsrGraph& g);

// Graph with every edge reversed; used to pull along incoming edges.
CsrGraph transpose(const CsrGraph& g);

// Copy of g with integer weights drawn uniformly from [lo, hi).
CsrGraph with_random_weights(const CsrGraph& g, std::uint64_t seed,
                             std::uint32_t lo = 1, std::uint32_t hi = 64);

std::vector<Edge> to_edges(const CsrGraph& g);

}  // namespace hg
