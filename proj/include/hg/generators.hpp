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

#include "hg/csr_graph.hpp"

namespace hg {

struct RmatParams {
  unsigned scale = 16;
  std::uint64_t avg_degree = 16;
  double a = 0.57;
  double b = 0.19;
  double c = 0.19;
  std::uint64_t seed = 1;
};

// Recursive-matrix generator: 2^scale vertices, avg_degree * 2^scale
// directed edges, each placed by descending `scale` levels of the quadrant
// choice (a, b, c, 1-a-b-c). Duplicates and self-loops are kept. Output is
// a pure function of the parameters.
CsrGraph generate_rmat(const RmatParams& params);

// Directed graph with avg_degree * 2^scale edges whose endpoints are drawn
// independently and uniformly.
CsrGraph generate_uniform(unsigned scale, std::uint64_t avg_degree,
                          std::uint64_t seed);

}  // namespace hg
