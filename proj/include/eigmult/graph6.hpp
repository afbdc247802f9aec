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

#ifndef EIGMULT_GRAPH6_HPP
#define EIGMULT_GRAPH6_HPP

#include <istream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "eigmult/graph.hpp"

namespace eigmult {

enum class Graph6ErrorKind { kMalformedByte, kTruncated, kTrailingData, kNonzeroPadding };

class Graph6Error : public std::invalid_argument {
 public:
  Graph6Error(Graph6ErrorKind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
  Graph6ErrorKind kind() const noexcept { return kind_; }

 private:
  Graph6ErrorKind kind_;
};

/// Standard graph6 (short and 4-byte headers). An optional ">>graph6<<" prefix is accepted.
Graph parse_graph6(std::string_view text);
/// Emits the short header for n <= 62 and the 4-byte header up to n = 258047.
std::string emit_graph6(const Graph& g);

/// One graph per non-empty line.
std::vector<Graph> read_graph6_stream(std::istream& in);
std::vector<Graph> read_graph6_file(const std::string& path);

/// Edge-list text: first line n, then "u v" pairs, 0-indexed. '#' starts a comment.
Graph parse_edge_list(std::istream& in);

/// Reads a file holding either one edge list or graph6 lines (detected by the first token).
std::vector<Graph> read_graph_file(const std::string& path);

}  // namespace eigmult

#endif  // EIGMULT_GRAPH6_HPP
