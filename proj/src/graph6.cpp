// Copyright 2026 The eigmult Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "eigmult/graph6.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace eigmult {

namespace {

constexpr std::string_view kHeader = ">>graph6<<";

int payload(char c, std::size_t pos) {
  const int v = static_cast<unsigned char>(c);
  if (v < 63 || v > 126)
    throw Graph6Error(Graph6ErrorKind::kMalformedByte,
                      "graph6: byte " + std::to_string(v) + " at offset " + std::to_string(pos) +
                          " outside 63..126");
  return v - 63;
}

std::string strip_line_end(std::string line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
  return line;
}

}  // namespace

Graph parse_graph6(std::string_view text) {
  if (text.starts_with(kHeader)) text.remove_prefix(kHeader.size());
  if (text.empty()) throw Graph6Error(Graph6ErrorKind::kTruncated, "graph6: empty input");
  std::size_t pos = 0;
  std::size_t n = 0;
  const int first = payload(text[0], 0);
  if (first < 63) {
    n = static_cast<std::size_t>(first);
    pos = 1;
  } else {
    if (text.size() < 4) throw Graph6Error(Graph6ErrorKind::kTruncated, "graph6: truncated long header");
    if (payload(text[1], 1) == 63)
      throw Graph6Error(Graph6ErrorKind::kMalformedByte, "graph6: 8-byte headers are not supported");
    for (std::size_t i = 1; i <= 3; ++i) n = (n << 6) | static_cast<std::size_t>(payload(text[i], i));
    pos = 4;
  }
  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() < pos + bytes)
    throw Graph6Error(Graph6ErrorKind::kTruncated,
                      "graph6: expected " + std::to_string(bytes) + " payload bytes, found " +
                          std::to_string(text.size() - pos));
  if (text.size() > pos + bytes)
    throw Graph6Error(Graph6ErrorKind::kTrailingData,
                      "graph6: " + std::to_string(text.size() - pos - bytes) + " trailing bytes");
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i, ++k) {
      const int byte = payload(text[pos + k / 6], pos + k / 6);
      if (byte & (1 << (5 - k % 6))) edges.emplace_back(i, j);
    }
  if (bits % 6 != 0) {
    const int last = payload(text[pos + bytes - 1], pos + bytes - 1);
    if (last & ((1 << (6 - bits % 6)) - 1))
      throw Graph6Error(Graph6ErrorKind::kNonzeroPadding, "graph6: nonzero padding bits");
  }
  return Graph::from_edge_list(n, edges);
}

std::string emit_graph6(const Graph& g) {
  const std::size_t n = g.order();
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(126));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + 63));
  } else {
    throw GraphError("graph6: order " + std::to_string(n) + " too large");
  }
  int acc = 0;
  int used = 0;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
      if (++used == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        used = 0;
      }
    }
  if (used > 0) out.push_back(static_cast<char>((acc << (6 - used)) + 63));
  return out;
}

std::vector<Graph> read_graph6_stream(std::istream& in) {
  std::vector<Graph> out;
  std::string line;
  while (std::getline(in, line)) {
    line = strip_line_end(std::move(line));
    if (line.empty()) continue;
    out.push_back(parse_graph6(line));
  }
  return out;
}

std::vector<Graph> read_graph6_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_graph6_stream(in);
}

Graph parse_edge_list(std::istream& in) {
  std::string content;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    content += line;
    content += '\n';
  }
  std::istringstream tokens(content);
  long n = -1;
  if (!(tokens >> n) || n < 0) throw GraphError("edge list: missing vertex count");
  std::vector<Edge> edges;
  long u = 0;
  long v = 0;
  while (tokens >> u) {
    if (!(tokens >> v)) throw GraphError("edge list: odd number of endpoints");
    if (u < 0 || v < 0) throw GraphError("edge list: negative vertex index");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  if (!tokens.eof()) throw GraphError("edge list: unexpected token");
  return Graph::from_edge_list(static_cast<std::size_t>(n), edges);
}

std::vector<Graph> read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::string first;
  while (std::getline(in, first)) {
    first = strip_line_end(std::move(first));
    const auto start = first.find_first_not_of(" \t");
    if (start != std::string::npos && first[start] != '#') break;
  }
  in.clear();
  in.seekg(0);
  const auto start = first.find_first_not_of(" \t");
  bool numeric = start != std::string::npos;
  for (std::size_t i = start; numeric && i < first.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(first[i])) && !std::isspace(static_cast<unsigned char>(first[i])))
      numeric = false;
  if (numeric) return {parse_edge_list(in)};
  return read_graph6_stream(in);
}

}  // namespace eigmult
