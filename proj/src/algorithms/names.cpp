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

#include <string>

#include "hg/algorithms.hpp"

namespace hg {

std::string_view to_string(Algorithm a) {
  switch (a) {
    case Algorithm::kBfs: return "bfs";
    case Algorithm::kPageRank: return "pagerank";
    case Algorithm::kBc: return "bc";
    case Algorithm::kSssp: return "sssp";
    case Algorithm::kCc: return "cc";
  }
  return "unknown";
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : {Algorithm::kBfs, Algorithm::kPageRank, Algorithm::kBc,
                      Algorithm::kSssp, Algorithm::kCc}) {
    if (name == to_string(a)) return a;
  }
  throw ValidationError("unknown algorithm '" + std::string(name) +
                        "' (expected bfs, pagerank, bc, sssp or cc)");
}

}  // namespace hg
