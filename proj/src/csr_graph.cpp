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

#include "hg/csr_graph.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "hg/random.hpp"

namespace hg {

namespace {

std::vector<vid_t> reversed_targets(const CsrGraph& g) {
  const vid_t n = g.vertex_count();
  std::vector<eid_t> cursor(static_cast<std::size_t>(n) + 1, 0);
  for (vid_t t : g.column_targets()) ++cursor[t + 1];
  std::partial_sum(cursor.begin(), cursor.end(), cursor.begin());
  std::vector<vid_t> out(g.edge_count());
  for (vid_t u = 0; u < n; ++u) {
    for (vid_t t : g.neighbors(u)) out[cursor[t]++] = u;
  }
  return out;
}

}  // namespace

CsrGraph::CsrGraph(std::vector<eid_t> row_offsets,
                   std::vector<vid_t> column_targets,
                   std::optional<std::vector<weight_t>> weights, bool directed)
    : row_offsets_(std::move(row_offsets)),
      column_targets_(std::move(column_targets)),
      weights_(std::move(weights)),
      directed_(directed) {
  if (row_offsets_.empty()) {
    throw ValidationError("row_offsets must hold vertex_count + 1 entries");
  }
  validate();
}

CsrGraph CsrGraph::from_edges(vid_t vertex_count, std::span<const Edge> edges,
                              bool directed, bool weighted) {
  std::vector<eid_t> offsets(static_cast<std::size_t>(vertex_count) + 1, 0);
  for (const Edge& e : edges) {
    if (e.src >= vertex_count || e.dst >= vertex_count) {
      throw ValidationError("edge (" + std::to_string(e.src) + ", " +
                            std::to_string(e.dst) +
                            ") references a vertex >= vertex_count " +
                            std::to_string(vertex_count));
    }
    if (weighted && !(e.weight >= 0.0f)) {
      throw ValidationError("negative or NaN weight on edge (" +
                            std::to_string(e.src) + ", " +
                            std::to_string(e.dst) + ")");
    }
    ++offsets[e.src + 1];
  }
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());

  std::vector<vid_t> targets(edges.size());
  std::vector<weight_t> wts(weighted ? edges.size() : 0);
  std::vector<eid_t> cursor(offsets.begin(), offsets.end() - 1);
  for (const Edge& e : edges) {
    const eid_t slot = cursor[e.src]++;
    targets[slot] = e.dst;
    if (weighted) wts[slot] = e.weight;
  }

  // Sort each segment by target; stable so duplicate edges keep input order.
  std::vector<std::pair<vid_t, weight_t>> scratch;
  for (vid_t v = 0; v < vertex_count; ++v) {
    const eid_t begin = offsets[v];
    const eid_t end = offsets[v + 1];
    if (end - begin < 2) continue;
    if (!weighted) {
      std::sort(targets.begin() + begin, targets.begin() + end);
      continue;
    }
    scratch.clear();
    for (eid_t i = begin; i < end; ++i) scratch.emplace_back(targets[i], wts[i]);
    std::stable_sort(scratch.begin(), scratch.end(),
                     [](const auto& a, const auto& b) { return a.first < b.first; });
    for (eid_t i = begin; i < end; ++i) {
      targets[i] = scratch[i - begin].first;
      wts[i] = scratch[i - begin].second;
    }
  }

  std::optional<std::vector<weight_t>> maybe_weights;
  if (weighted) maybe_weights = std::move(wts);
  return CsrGraph(std::move(offsets), std::move(targets),
                  std::move(maybe_weights), directed);
}

eid_t CsrGraph::max_degree() const noexcept {
  eid_t best = 0;
  for (vid_t v = 0; v < vertex_count(); ++v) best = std::max(best, degree(v));
  return best;
}

bool CsrGraph::integral_weights() const noexcept {
  if (!weights_) return true;
  return std::all_of(weights_->begin(), weights_->end(),
                     [](weight_t w) { return std::floor(w) == w; });
}

void CsrGraph::validate() const {
  if (row_offsets_.front() != 0) {
    throw ValidationError("row_offsets[0] must be 0");
  }
  if (row_offsets_.back() != column_targets_.size()) {
    throw ValidationError("row_offsets[vertex_count] must equal edge_count");
  }
  if (!std::is_sorted(row_offsets_.begin(), row_offsets_.end())) {
    throw ValidationError("row_offsets must be non-decreasing");
  }
  const vid_t n = vertex_count();
  for (vid_t t : column_targets_) {
    if (t >= n) {
      throw ValidationError("column target " + std::to_string(t) +
                            " out of range");
    }
  }
  if (weights_) {
    if (weights_->size() != column_targets_.size()) {
      throw ValidationError("weights length must equal edge_count");
    }
    for (weight_t w : *weights_) {
      if (!(w >= 0.0f)) throw ValidationError("weights must be non-negative");
    }
  }
  if (!directed_) {
    // Segments are sorted by target, and transposition lists sources in
    // ascending order, so a symmetric multiset yields identical arrays.
    if (reversed_targets(*this) != column_targets_) {
      throw ValidationError("undirected graph is not symmetric");
    }
  }
}

DegreeSummary degree_summary(const CsrGraph& g) {
  DegreeSummary summary;
  const vid_t n = g.vertex_count();
  summary.out_degree.resize(n);
  for (vid_t v = 0; v < n; ++v) {
    summary.out_degree[v] = g.degree(v);
    summary.max_degree = std::max(summary.max_degree, summary.out_degree[v]);
  }
  summary.degree_ordering.resize(n);
  std::iota(summary.degree_ordering.begin(), summary.degree_ordering.end(),
            vid_t{0});
  const auto& deg = summary.out_degree;
  std::sort(summary.degree_ordering.begin(), summary.degree_ordering.end(),
            [&deg](vid_t a, vid_t b) {
              return deg[a] != deg[b] ? deg[a] > deg[b] : a < b;
            });
  return summary;
}

CsrGraph transpose(const CsrGraph& g) {
  if (!g.directed()) return g;
  const vid_t n = g.vertex_count();
  std::vector<eid_t> offsets(static_cast<std::size_t>(n) + 1, 0);
  for (vid_t t : g.column_targets()) ++offsets[t + 1];
  std::partial_sum(offsets.begin(), offsets.end(), offsets.begin());

  std::vector<vid_t> targets(g.edge_count());
  std::vector<weight_t> wts(g.weighted() ? g.edge_count() : 0);
  std::vector<eid_t> cursor(offsets.begin(), offsets.end() - 1);
  const auto cols = g.column_targets();
  const auto weights = g.weights();
  for (vid_t u = 0; u < n; ++u) {
    for (eid_t i = g.row_offsets()[u]; i < g.row_offsets()[u + 1]; ++i) {
      const eid_t slot = cursor[cols[i]]++;
      targets[slot] = u;
      if (g.weighted()) wts[slot] = weights[i];
    }
  }
  std::optional<std::vector<weight_t>> maybe_weights;
  if (g.weighted()) maybe_weights = std::move(wts);
  // Scanning sources in ascending order keeps every new segment sorted.
  return CsrGraph(std::move(offsets), std::move(targets),
                  std::move(maybe_weights), /*directed=*/true);
}

CsrGraph symmetrize(const CsrGraph& g) {
  const vid_t n = g.vertex_count();
  const CsrGraph rev = transpose(g);
  std::vector<Edge> edges;
  edges.reserve(2 * g.edge_count());
  const auto fwd_cols = g.column_targets();
  const auto rev_cols = rev.column_targets();
  const auto fwd_w = g.weights();
  const auto rev_w = rev.weights();
  for (vid_t u = 0; u < n; ++u) {
    eid_t i = g.row_offsets()[u];
    const eid_t i_end = g.row_offsets()[u + 1];
    eid_t j = rev.row_offsets()[u];
    const eid_t j_end = rev.row_offsets()[u + 1];
    while (i < i_end || j < j_end) {
      const vid_t t = (j == j_end || (i < i_end && fwd_cols[i] <= rev_cols[j]))
                          ? fwd_cols[i]
                          : rev_cols[j];
      eid_t a = i;
      while (a < i_end && fwd_cols[a] == t) ++a;
      eid_t b = j;
      while (b < j_end && rev_cols[b] == t) ++b;
      const bool from_fwd = (a - i) >= (b - j);
      const eid_t begin = from_fwd ? i : j;
      const eid_t end = from_fwd ? a : b;
      for (eid_t k = begin; k < end; ++k) {
        Edge e{u, t, 1.0f};
        if (g.weighted()) e.weight = from_fwd ? fwd_w[k] : rev_w[k];
        edges.push_back(e);
      }
      i = a;
      j = b;
    }
  }
  return CsrGraph::from_edges(n, edges, /*directed=*/false, g.weighted());
}

CsrGraph with_random_weights(const CsrGraph& g, std::uint64_t seed,
                             std::uint32_t lo, std::uint32_t hi) {
  if (hi <= lo) throw ValidationError("weight range must be non-empty");
  std::mt19937_64 rng(derive_seed(seed, 0x77656967ULL));
  std::vector<weight_t> wts(g.edge_count());
  for (auto& w : wts) {
    w = static_cast<weight_t>(lo + uniform_below(rng, hi - lo));
  }
  if (!g.directed()) {
    // Mirror edges must carry the same weight: draw per unordered pair.
    std::vector<Edge> edges = to_edges(g);
    std::vector<Edge> half;
    for (const Edge& e : edges) {
      if (e.src <= e.dst) half.push_back(e);
    }
    std::vector<Edge> sym;
    std::size_t k = 0;
    for (const Edge& e : half) {
      const auto w = wts[k++ % wts.size()];
      sym.push_back({e.src, e.dst, w});
      // Each self-loop occurrence is its own mirror.
      if (e.src != e.dst) sym.push_back({e.dst, e.src, w});
    }
    return CsrGraph::from_edges(g.vertex_count(), sym, false, true);
  }
  std::vector<eid_t> offsets(g.row_offsets().begin(), g.row_offsets().end());
  std::vector<vid_t> targets(g.column_targets().begin(),
                             g.column_targets().end());
  return CsrGraph(std::move(offsets), std::move(targets), std::move(wts),
                  /*directed=*/true);
}

std::vector<Edge> to_edges(const CsrGraph& g) {
  std::vector<Edge> edges;
  edges.reserve(g.edge_count());
  const auto weights = g.weights();
  for (vid_t u = 0; u < g.vertex_count(); ++u) {
    for (eid_t i = g.row_offsets()[u]; i < g.row_offsets()[u + 1]; ++i) {
      edges.push_back({u, g.column_targets()[i],
                       g.weighted() ? weights[i] : 1.0f});
    }
  }
  return edges;
}

}  // namespace hg
