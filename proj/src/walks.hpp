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

#ifndef EIGMULT_SRC_WALKS_HPP
#define EIGMULT_SRC_WALKS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "eigmult/graph.hpp"

namespace eigmult::detail {

inline Vertex step(const Graph& g, Vertex prev, Vertex cur) {
  const auto nb = g.neighbors(cur);
  return nb[0] == prev ? nb[1] : nb[0];
}

// Order of the path hanging from v through x when it ends in a leaf, else nullopt.
inline std::optional<std::size_t> leg_order(const Graph& g, Vertex v, Vertex x) {
  Vertex prev = v;
  Vertex cur = x;
  std::size_t order = 1;
  while (true) {
    if (g.degree(cur) == 1) return order;
    if (g.degree(cur) != 2) return std::nullopt;
    const Vertex next = step(g, prev, cur);
    if (next == v) return std::nullopt;
    prev = cur;
    cur = next;
    ++order;
  }
}

// Vertices of the leg from v through x, leaf last.
inline std::vector<Vertex> leg_vertices(const Graph& g, Vertex v, Vertex x) {
  std::vector<Vertex> out{x};
  Vertex prev = v;
  Vertex cur = x;
  while (g.degree(cur) == 2) {
    const Vertex next = step(g, prev, cur);
    prev = cur;
    cur = next;
    out.push_back(cur);
  }
  return out;
}

struct Walk {
  std::vector<Vertex> interior;
  Vertex end = 0;
};

// From v through x across degree-2 vertices up to the first vertex of degree >= 3.
// nullopt when the walk ends in a leaf or returns to v.
inline std::optional<Walk> walk_to_branch(const Graph& g, Vertex v, Vertex x) {
  Walk w;
  Vertex prev = v;
  Vertex cur = x;
  while (g.degree(cur) == 2) {
    w.interior.push_back(cur);
    const Vertex next = step(g, prev, cur);
    if (next == v) return std::nullopt;
    prev = cur;
    cur = next;
  }
  if (g.degree(cur) < 3) return std::nullopt;
  w.end = cur;
  return w;
}

}  // namespace eigmult::detail

#endif  // EIGMULT_SRC_WALKS_HPP
