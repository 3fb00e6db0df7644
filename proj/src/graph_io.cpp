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

#include "hg/graph_io.hpp"

#include <array>
#include <bit>
#include <charconv>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>

namespace hg {

namespace {

constexpr std::array<char, 4> kMagic = {'T', 'O', 'T', 'M'};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

template <typename T>
bool parse_number(std::string_view token, T& out) {
  const auto* begin = token.data();
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end;
}

std::vector<std::string_view> split_ws(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    if (i > start) tokens.push_back(line.substr(start, i - start));
  }
  return tokens;
}

template <typename T>
void put_le(std::ostream& out, T value, std::size_t width) {
  std::array<char, 8> bytes{};
  auto v = static_cast<std::uint64_t>(value);
  for (std::size_t i = 0; i < width; ++i) {
    bytes[i] = static_cast<char>(v & 0xff);
    v >>= 8;
  }
  out.write(bytes.data(), static_cast<std::streamsize>(width));
}

std::uint64_t get_le(std::istream& in, std::size_t width) {
  std::array<unsigned char, 8> bytes{};
  in.read(reinterpret_cast<char*>(bytes.data()),
          static_cast<std::streamsize>(width));
  if (!in) throw IoError("truncated binary graph");
  std::uint64_t v = 0;
  for (std::size_t i = width; i-- > 0;) v = (v << 8) | bytes[i];
  return v;
}

template <typename Range>
void put_array_le(std::ostream& out, const Range& values, std::size_t width) {
  std::vector<char> buffer;
  buffer.reserve(std::size(values) * width);
  for (auto value : values) {
    std::uint64_t v;
    if constexpr (std::is_floating_point_v<std::decay_t<decltype(value)>>) {
      v = std::bit_cast<std::uint32_t>(value);
    } else {
      v = static_cast<std::uint64_t>(value);
    }
    for (std::size_t i = 0; i < width; ++i) {
      buffer.push_back(static_cast<char>(v & 0xff));
      v >>= 8;
    }
  }
  out.write(buffer.data(), static_cast<std::streamsize>(buffer.size()));
}

template <typename Fn>
void get_array_le(std::istream& in, std::uint64_t count, std::size_t width,
                  Fn&& sink) {
  constexpr std::uint64_t kChunk = 1 << 16;
  std::vector<unsigned char> buffer(kChunk * width);
  std::uint64_t index = 0;
  while (index < count) {
    const std::uint64_t n = std::min(kChunk, count - index);
    in.read(reinterpret_cast<char*>(buffer.data()),
            static_cast<std::streamsize>(n * width));
    if (!in) throw IoError("truncated binary graph");
    for (std::uint64_t k = 0; k < n; ++k) {
      std::uint64_t v = 0;
      for (std::size_t i = width; i-- > 0;) v = (v << 8) | buffer[k * width + i];
      sink(index + k, v);
    }
    index += n;
  }
}

}  // namespace

CsrGraph parse_edge_list(std::istream& in, bool directed, bool weighted) {
  std::vector<Edge> edges;
  std::optional<std::uint64_t> declared;
  std::uint64_t max_id = 0;
  bool any = false;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string_view body = trim(line);
    if (body.empty()) continue;
    if (body.front() == '#') {
      const std::string_view rest = trim(body.substr(1));
      constexpr std::string_view kNodes = "nodes:";
      if (rest.starts_with(kNodes)) {
        std::uint64_t n = 0;
        if (!parse_number(trim(rest.substr(kNodes.size())), n)) {
          throw ParseError("malformed '# nodes:' header", line_no);
        }
        declared = n;
      }
      continue;
    }
    const auto tokens = split_ws(body);
    if (tokens.size() != 2 && tokens.size() != 3) {
      throw ParseError("expected 'src dst' or 'src dst weight'", line_no);
    }
    std::uint64_t src = 0;
    std::uint64_t dst = 0;
    if (!parse_number(tokens[0], src) || !parse_number(tokens[1], dst)) {
      throw ParseError("vertex ids must be non-negative integers", line_no);
    }
    Edge e{static_cast<vid_t>(src), static_cast<vid_t>(dst), 1.0f};
    if (tokens.size() == 3) {
      double w = 0.0;
      if (!parse_number(tokens[2], w)) {
        throw ParseError("malformed weight", line_no);
      }
      if (w < 0.0) {
        throw ValidationError("line " + std::to_string(line_no) +
                              ": negative weight");
      }
      e.weight = static_cast<weight_t>(w);
    } else if (weighted) {
      throw ParseError("weighted graph requires a weight column", line_no);
    }
    if (src >= kInvalidVertex || dst >= kInvalidVertex) {
      throw CapacityError("line " + std::to_string(line_no) +
                          ": vertex id exceeds 32-bit range");
    }
    if (declared && (src >= *declared || dst >= *declared)) {
      throw ValidationError("line " + std::to_string(line_no) + ": vertex id " +
                            std::to_string(std::max(src, dst)) +
                            " >= declared node count " +
                            std::to_string(*declared));
    }
    max_id = std::max({max_id, src, dst});
    any = true;
    edges.push_back(e);
    if (!directed && src != dst) edges.push_back({e.dst, e.src, e.weight});
    if (!directed && src == dst) edges.push_back(e);
  }
  if (in.bad()) throw IoError("read error while parsing edge list");
  const std::uint64_t n = declared ? *declared : (any ? max_id + 1 : 0);
  if (n >= kInvalidVertex) throw CapacityError("vertex count exceeds 32 bits");
  for (const Edge& e : edges) {
    if (e.src >= n || e.dst >= n) {
      throw ValidationError("vertex id >= declared vertex count");
    }
  }
  return CsrGraph::from_edges(static_cast<vid_t>(n), edges, directed, weighted);
}

CsrGraph load_edge_list(const std::filesystem::path& path, bool directed,
                        bool weighted) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return parse_edge_list(in, directed, weighted);
}

void write_edge_list(const CsrGraph& g, std::ostream& out) {
  out << "# nodes: " << g.vertex_count() << '\n';
  const auto weights = g.weights();
  for (vid_t u = 0; u < g.vertex_count(); ++u) {
    for (eid_t i = g.row_offsets()[u]; i < g.row_offsets()[u + 1]; ++i) {
      out << u << ' ' << g.column_targets()[i];
      if (g.weighted()) out << ' ' << weights[i];
      out << '\n';
    }
  }
}

void write_edge_list(const CsrGraph& g, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path.string());
  write_edge_list(g, out);
  if (!out) throw IoError("write failed for " + path.string());
}

void write_binary(const CsrGraph& g, std::ostream& out) {
  const std::size_t vid_w = id_width_for(g.vertex_count());
  const std::size_t eid_w = id_width_for(g.edge_count());
  std::uint32_t flags = 0;
  if (g.directed()) flags |= binary_flags::kDirected;
  if (g.weighted()) flags |= binary_flags::kWeighted;
  if (vid_w == 8) flags |= binary_flags::kWideVertexIds;
  if (eid_w == 8) flags |= binary_flags::kWideEdgeIds;

  out.write(kMagic.data(), kMagic.size());
  put_le(out, kBinaryFormatVersion, 4);
  put_le(out, flags, 4);
  put_le(out, std::uint64_t{g.vertex_count()}, 8);
  put_le(out, std::uint64_t{g.edge_count()}, 8);
  put_array_le(out, g.row_offsets(), eid_w);
  put_array_le(out, g.column_targets(), vid_w);
  put_array_le(out, g.weights(), 4);
}

void write_binary(const CsrGraph& g, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  write_binary(g, out);
  if (!out) throw IoError("write failed for " + path.string());
}

CsrGraph read_binary(std::istream& in) {
  std::array<char, 4> magic{};
  in.read(magic.data(), magic.size());
  if (!in || magic != kMagic) throw IoError("not a binary CSR graph");
  const auto version = get_le(in, 4);
  if (version != kBinaryFormatVersion) {
    throw IoError("unsupported binary graph version " +
                  std::to_string(version));
  }
  const auto flags = static_cast<std::uint32_t>(get_le(in, 4));
  const std::uint64_t n = get_le(in, 8);
  const std::uint64_t m = get_le(in, 8);
  if (n >= kInvalidVertex) {
    throw CapacityError("graph has more vertices than 32-bit ids can hold");
  }
  const std::size_t vid_w = (flags & binary_flags::kWideVertexIds) ? 8 : 4;
  const std::size_t eid_w = (flags & binary_flags::kWideEdgeIds) ? 8 : 4;

  std::vector<eid_t> offsets(n + 1);
  get_array_le(in, n + 1, eid_w,
               [&](std::uint64_t i, std::uint64_t v) { offsets[i] = v; });
  std::vector<vid_t> targets(m);
  get_array_le(in, m, vid_w, [&](std::uint64_t i, std::uint64_t v) {
    if (v >= n) throw ValidationError("column target out of range");
    targets[i] = static_cast<vid_t>(v);
  });
  std::optional<std::vector<weight_t>> weights;
  if (flags & binary_flags::kWeighted) {
    weights.emplace(m);
    get_array_le(in, m, 4, [&](std::uint64_t i, std::uint64_t v) {
      (*weights)[i] = std::bit_cast<weight_t>(static_cast<std::uint32_t>(v));
    });
  }
  return CsrGraph(std::move(offsets), std::move(targets), std::move(weights),
                  (flags & binary_flags::kDirected) != 0);
}

CsrGraph read_binary(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read_binary(in);
}

CsrGraph load_graph(const std::filesystem::path& path, bool directed,
                    bool weighted) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::array<char, 4> head{};
  in.read(head.data(), head.size());
  const bool binary = in.gcount() == 4 && head == kMagic;
  in.clear();
  in.seekg(0);
  if (binary) return read_binary(in);
  return parse_edge_list(in, directed, weighted);
}

}  // namespace hg
