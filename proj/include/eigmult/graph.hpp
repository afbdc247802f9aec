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

#ifndef EIGMULT_GRAPH_HPP
#define EIGMULT_GRAPH_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace eigmult {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

/// Raised for malformed graph input (bad endpoints, self-loops, bad vertex ids).
class GraphError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an operation is called outside its structural precondition.
class PreconditionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/**
 * Finite simple undirected graph on vertices 0..n-1.
 *
 * Neighbor lists are sorted and free of duplicates; there are no self-loops.
 * A graph never changes after construction. Vertices may carry a text label
 * (constructors use these to mark centers, l-vertices and attachment points);
 * an empty string means "unlabeled".
 */
class Graph {
 public:
  Graph() = default;

  /// Builds a graph from an edge list. Duplicate pairs collapse; (v,v) and
  /// endpoints >= n are rejected with a GraphError naming the offending edge.
  static Graph from_edge_list(std::size_t n, std::span<const Edge> edges);
  static Graph from_edge_list(std::size_t n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
  }

  std::size_t order() const noexcept { return adj_.size(); }
  std::size_t size() const noexcept { return edge_count_; }
  bool empty() const noexcept { return adj_.empty(); }

  std::span<const Vertex> neighbors(Vertex v) const { return adj_.at(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).size(); }
  bool adjacent(Vertex u, Vertex v) const;
  std::vector<Edge> edges() const;

  const std::string& label(Vertex v) const;
  std::optional<Vertex> find_label(std::string_view text) const;
  /// Copy of this graph with vertex v labeled `text`.
  Graph with_label(Vertex v, std::string text) const;

  friend bool operator==(const Graph& a, const Graph& b) { return a.adj_ == b.adj_; }

 private:
  std::vector<std::vector<Vertex>> adj_;
  std::vector<std::string> labels_;
  std::size_t edge_count_ = 0;
};

/// Result of deleting vertices: the induced subgraph plus the old-to-new index map.
struct Subgraph {
  Graph graph;
  std::vector<std::optional<Vertex>> old_to_new;
  std::vector<Vertex> new_to_old;
};

/// Result of join_bridge: vertex i of G becomes g_map[i], vertex j of H becomes h_map[j].
struct Bridged {
  Graph graph;
  std::vector<Vertex> g_map;
  std::vector<Vertex> h_map;
};

/// G[V \ removed]; surviving vertices keep their relative order. Labels are kept.
Subgraph induced_delete(const Graph& g, std::span<const Vertex> removed);
inline Subgraph induced_delete(const Graph& g, std::initializer_list<Vertex> removed) {
  return induced_delete(g, std::span<const Vertex>(removed.begin(), removed.size()));
}

/// Disjoint union of G and H plus the edge {u, v}.
Bridged join_bridge(const Graph& g, Vertex u, const Graph& h, Vertex v);

/// Disjoint union; H's vertices are shifted by |G|.
Graph disjoint_union(const Graph& g, const Graph& h);

std::size_t component_count(const Graph& g);
bool is_connected(const Graph& g);
bool is_tree(const Graph& g);
/// |E| - |V| + #components.
std::size_t cyclomatic_number(const Graph& g);

std::vector<Vertex> pendant_vertices(const Graph& g);
std::vector<Vertex> high_degree_vertices(const Graph& g);

/// A pendant path u1..ut read from the leaf inward. `anchor` is the first vertex
/// of degree >= 3 after the path. When the whole component is a path there is no
/// anchor and `bare_component` is set; such a component is reported once.
struct PendantPath {
  std::vector<Vertex> vertices;
  std::optional<Vertex> anchor;
  bool bare_component = false;

  std::size_t order() const noexcept { return vertices.size(); }
};

std::vector<PendantPath> pendant_paths(const Graph& g);

/// True when every anchored pendant path has order >= s and every path
/// component has order >= 2s+1. Graphs without pendant paths qualify.
bool in_pendant_class(const Graph& g, std::size_t s);

/// Vertices at distance exactly s from some pendant vertex (BFS from every leaf).
/// Throws PreconditionError naming a too-short pendant path if !in_pendant_class(g, s).
std::vector<Vertex> s_pendant_set(const Graph& g, std::size_t s);
/// Same set, obtained by stepping s vertices along each pendant path.
std::vector<Vertex> s_pendant_set_by_walk(const Graph& g, std::size_t s);
inline std::size_t s_pendant_count(const Graph& g, std::size_t s) {
  return s_pendant_set(g, s).size();
}

/// Iterated removal of vertices of degree <= 1. Forests give the empty graph.
Subgraph plinth(const Graph& g);

enum class BlockKind { kEdge, kCycle, kOther };

struct BlockDecomposition {
  std::vector<std::vector<Vertex>> blocks;  // sorted vertex sets
  std::vector<BlockKind> kinds;
  std::vector<std::size_t> block_edges;
  std::vector<Vertex> cut_vertices;  // sorted
};

BlockDecomposition block_decomposition(const Graph& g);

/// Every block is a bridge or a chordless cycle, and no two cycles share a vertex.
bool cycles_pairwise_disjoint(const Graph& g);

/// A cycle block that meets the rest of the graph in exactly one cut vertex.
/// `cycle` lists the vertices in ring order starting at the attachment.
struct PendantCycle {
  std::vector<Vertex> cycle;
  Vertex attachment = 0;
};

std::vector<PendantCycle> pendant_cycles(const Graph& g);

/// Maximal paths between two vertices of degree >= 3 through degree-2 vertices,
/// not lying on a cycle. Each entry holds the internal vertices only (possibly none).
std::vector<std::vector<Vertex>> internal_paths(const Graph& g);

/// BFS distance, or nullopt when u and v lie in different components.
std::optional<std::size_t> distance(const Graph& g, Vertex u, Vertex v);
std::vector<std::optional<std::size_t>> distances_from(const Graph& g, Vertex source);

/// Vertex list of a cycle graph in ring order, or nullopt when g is not a cycle.
std::optional<std::vector<Vertex>> cycle_order(const Graph& g);
bool is_cycle(const Graph& g);
/// True for a connected graph whose vertices all have degree <= 2 and that has no cycle.
bool is_path(const Graph& g);

inline constexpr std::size_t kDefaultCanonicalLimit = 10;

/// Isomorphism-complete code: the lexicographically smallest upper-triangle
/// adjacency string over vertex orders compatible with a canonical color
/// refinement. Equal codes iff isomorphic. Rejects graphs with more than
/// `limit` vertices.
std::string canonical_code(const Graph& g, std::size_t limit = kDefaultCanonicalLimit);

/// Canonical code for trees of any order (center-rooted AHU encoding).
std::string tree_code(const Graph& tree);

/// True when g and h are isomorphic (uses tree_code for trees, canonical_code otherwise).
bool isomorphic(const Graph& g, const Graph& h, std::size_t limit = kDefaultCanonicalLimit);

/// Graph with vertices renumbered so that vertex i becomes perm[i].
Graph relabel(const Graph& g, std::span<const Vertex> perm);

}  // namespace eigmult

#endif  // EIGMULT_GRAPH_HPP
