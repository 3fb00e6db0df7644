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

#include "hg/generators.hpp"

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "hg/random.hpp"

namespace hg {

namespace {

constexpr std::uint64_t kEdgesPerChunk = 1 << 16;

void check_shape(unsigned scale, std::uint64_t avg_degree) {
  if (scale < 1 || scale > 30) {
    throw ValidationError("scale must be in [1, 30], got " +
                          std::to_string(scale));
  }
  if (avg_degree < 1) throw ValidationError("avg_degree must be >= 1");
  const std::uint64_t edges = avg_degree << scale;
  if ((edges >> scale) != avg_degree) {
    throw CapacityError("edge count overflows 64 bits");
  }
}

// Each chunk of edges draws from its own stream, so the output does not
// depend on how chunks are scheduled.
template <typename DrawEdge>
std::vector<Edge> draw_edges(std::uint64_t edge_count, std::uint64_t seed,
                             DrawEdge&& draw) {
  std::vector<Edge> edges(edge_count);
  const std::uint64_t chunks = (edge_count + kEdgesPerChunk - 1) / kEdgesPerChunk;
  for (std::uint64_t chunk = 0; chunk < chunks; ++chunk) {
    std::mt19937_64 rng(derive_seed(seed, chunk));
    const std::uint64_t begin = chunk * kEdgesPerChunk;
    const std::uint64_t end = std::min(edge_count, begin + kEdgesPerChunk);
    for (std::uint64_t i = begin; i < end; ++i) edges[i] = draw(rng);
  }
  return edges;
}

}  // namespace

CsrGraph generate_rmat(const RmatParams& p) {
  check_shape(p.scale, p.avg_degree);
  for (double prob : {p.a, p.b, p.c}) {
    if (!(prob >= 0.0 && prob <= 1.0)) {
      throw ValidationError("quadrant probabilities must lie in [0, 1]");
    }
  }
  if (p.a + p.b + p.c > 1.0 + 1e-12) {
    throw ValidationError("quadrant probabilities a + b + c must be <= 1");
  }
  const double ab = p.a + p.b;
  const double abc = ab + p.c;
  const unsigned scale = p.scale;
  auto edges = draw_edges(p.avg_degree << scale, p.seed, [&](std::mt19937_64& rng) {
    vid_t row = 0;
    vid_t col = 0;
    for (unsigned level = 0; level < scale; ++level) {
      const double r = uniform01(rng);
      const vid_t bit = vid_t{1} << (scale - 1 - level);
      if (r < p.a) {
      } else if (r < ab) {
        col |= bit;
      } else if (r < abc) {
        row |= bit;
      } else {
        row |= bit;
        col |= bit;
      }
    }
    return Edge{row, col, 1.0f};
  });
  return CsrGraph::from_edges(vid_t{1} << scale, edges, /*directed=*/true,
                              /*weighted=*/false);
}

CsrGraph generate_uniform(unsigned scale, std::uint64_t avg_degree,
                          std::uint64_t seed) {
  check_shape(scale, avg_degree);
  const std::uint64_t n = std::uint64_t{1} << scale;
  auto edges = draw_edges(avg_degree << scale, seed, [n](std::mt19937_64& rng) {
    const auto src = static_cast<vid_t>(uniform_below(rng, n));
    const auto dst = static_cast<vid_t>(uniform_below(rng, n));
    return Edge{src, dst, 1.0f};
  });
  return CsrGraph::from_edges(static_cast<vid_t>(n), edges, /*directed=*/true,
                              /*weighted=*/false);
}

}  // namespace hg
