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

#include <filesystem>
#include <iosfwd>

#include "hg/csr_graph.hpp"

namespace hg {

// Text edge list: one "src dst" or "src dst weight" per line, '#' starts a
// comment, and a "# nodes: N" comment fixes the vertex count.
CsrGraph load_edge_list(const std::filesystem::path& path, bool directed,
                        bool weighted);
CsrGraph parse_edge_list(std::istream& in, bool directed, bool weighted);

// Writes every stored edge once. For undirected graphs that means both
// directions appear, so reload with directed=true to get the same arrays.
void write_edge_list(const CsrGraph& g, std::ostream& out);
void write_edge_list(const CsrGraph& g, const std::filesystem::path& path);

// Binary CSR: "TOTM", u32 version, u32 flags, u64 vertex_count,
// u64 edge_count, row_offsets, column_targets, optional f32 weights.
// Integers are little-endian with the id widths recorded in flags.
inline constexpr std::uint32_t kBinaryFormatVersion = 1;

namespace binary_flags {
inline constexpr std::uint32_t kDirected = 1u << 0;
inline constexpr std::uint32_t kWeighted = 1u << 1;
inline constexpr std::uint32_t kWideVertexIds = 1u << 2;
inline constexpr std::uint32_t kWideEdgeIds = 1u << 3;
}  // namespace binary_flags

void write_binary(const CsrGraph& g, std::ostream& out);
void write_binary(const CsrGraph& g, const std::filesystem::path& path);
CsrGraph read_binary(std::istream& in);
CsrGraph read_binary(const std::filesystem::path& path);

// Picks the reader by content: binary when the file starts with the magic.
CsrGraph load_graph(const std::filesystem::path& path, bool directed = true,
                    bool weighted = false);

}  // namespace hg
