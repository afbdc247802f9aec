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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "eigmult/graph.hpp"
#include "support.hpp"

using namespace eigmult;
using eigmult::testing::cycle_graph;
using eigmult::testing::path_graph;

namespace {

// Star K_{1,3} with each leg extended to a path of order `leg`.
Graph spider(std::size_t legs, std::size_t leg) {
  std::vector<Edge> e;
  Vertex next = 1;
  for (std::size_t i = 0; i < legs; ++i) {
    Vertex prev = 0;
    for (std::size_t j = 0; j < leg; ++j) {
      e.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph::from_edge_list(next, e);
}

}  // namespace

TEST_CASE("construction rejects loops and out-of-range endpoints, collapses duplicates") {
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 0}}), GraphError);
  CHECK(Graph::from_edge_list(3, {{0, 1}, {1, 0}}).size() == 1);
  CHECK_THROWS_AS(Graph::from_edge_list(3, {{0, 3}}), GraphError);
  const Graph g = Graph::from_edge_list(3, {{0, 1}, {1, 2}});
  CHECK(g.order() == 3);
  CHECK(g.size() == 2);
  CHECK(g.adjacent(2, 1));
  CHECK_FALSE(g.adjacent(0, 2));
}

TEST_CASE("cyclomatic number and connectivity") {
  CHECK(cyclomatic_number(cycle_graph(6)) == 1);
  CHECK(cyclomatic_number(path_graph(6)) == 0);
  const Graph two = disjoint_union(cycle_graph(3), path_graph(2));
  CHECK(component_count(two) == 2);
  CHECK_FALSE(is_connected(two));
  CHECK(cyclomatic_number(two) == 1);
  CHECK(is_tree(path_graph(1)));
  CHECK_FALSE(is_tree(two));
}

TEST_CASE("pendant paths and the s-pendant set") {
  // C_6 with a pendant path of order 3 at vertex 0.
  const Graph g = Graph::from_edge_list(
      9, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 6}, {6, 7}, {7, 8}});
  const auto paths = pendant_paths(g);
  REQUIRE(paths.size() == 1);
  CHECK(paths[0].order() == 3);
  CHECK(paths[0].anchor == Vertex{0});
  CHECK(in_pendant_class(g, 2));
  CHECK(in_pendant_class(g, 3));
  CHECK_FALSE(in_pendant_class(g, 4));
  CHECK(s_pendant_set(g, 2) == std::vector<Vertex>{6});
  CHECK(s_pendant_set(g, 3) == std::vector<Vertex>{0});
  CHECK_THROWS_AS(s_pendant_set(g, 4), PreconditionError);

  // Paths as whole components need order 2s+1.
  CHECK(in_pendant_class(path_graph(5), 2));
  CHECK_FALSE(in_pendant_class(path_graph(4), 2));
  CHECK(s_pendant_set(path_graph(5), 2) == std::vector<Vertex>{2});
  CHECK(s_pendant_set(path_graph(7), 2) == std::vector<Vertex>{2, 4});

  // A single vertex counts as a path of order 1.
  CHECK_FALSE(in_pendant_class(Graph::from_edge_list(1, {}), 1));
  CHECK(in_pendant_class(cycle_graph(5), 4));
  CHECK(s_pendant_set(cycle_graph(5), 4).empty());
}

TEST_CASE("spider s-pendant sets") {
  const Graph s3 = spider(3, 3);
  CHECK(s_pendant_set(s3, 2).size() == 3);
  CHECK(s_pendant_set(s3, 3) == std::vector<Vertex>{0});
}

TEST_CASE("plinth strips trees hanging off the core") {
  const Graph g = Graph::from_edge_list(
      7, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {3, 5}, {0, 6}});
  const auto core = plinth(g);
  CHECK(core.graph.order() == 3);
  CHECK(is_cycle(core.graph));
  CHECK(plinth(spider(3, 2)).graph.order() == 0);
}

TEST_CASE("block decomposition of a bowtie with a tail") {
  const Graph g = Graph::from_edge_list(
      6, {{0, 1}, {1, 2}, {2, 0}, {2, 3}, {3, 4}, {4, 2}, {4, 5}});
  const auto bd = block_decomposition(g);
  CHECK(bd.blocks.size() == 3);
  CHECK(bd.cut_vertices == std::vector<Vertex>{2, 4});
  std::size_t cycles = 0;
  for (auto k : bd.kinds) cycles += k == BlockKind::kCycle;
  CHECK(cycles == 2);
  CHECK_FALSE(cycles_pairwise_disjoint(g));

  const Graph k4 = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  const auto bk = block_decomposition(k4);
  REQUIRE(bk.blocks.size() == 1);
  CHECK(bk.kinds[0] == BlockKind::kOther);
}

TEST_CASE("pendant cycles and internal paths") {
  // Two triangles joined by a path 2-6-7-3.
  const Graph g = Graph::from_edge_list(
      8, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}, {2, 6}, {6, 7}, {7, 3}});
  const auto pcs = pendant_cycles(g);
  REQUIRE(pcs.size() == 2);
  CHECK(pcs[0].cycle.front() == pcs[0].attachment);
  const auto ips = internal_paths(g);
  REQUIRE(ips.size() == 1);
  CHECK(ips[0].size() == 2);
  CHECK(cycles_pairwise_disjoint(g));
}

TEST_CASE("join_bridge and induced_delete") {
  const auto b = join_bridge(cycle_graph(4), 0, path_graph(3), 2);
  CHECK(b.graph.order() == 7);
  CHECK(b.graph.adjacent(b.g_map[0], b.h_map[2]));
  const auto sub = induced_delete(b.graph, {b.g_map[0]});
  CHECK(sub.graph.order() == 6);
  CHECK(component_count(sub.graph) == 2);
  CHECK_FALSE(sub.old_to_new[b.g_map[0]].has_value());
}

TEST_CASE("cycle and path recognition") {
  CHECK(is_cycle(cycle_graph(7)));
  CHECK_FALSE(is_cycle(path_graph(7)));
  CHECK(is_path(path_graph(1)));
  CHECK(is_path(path_graph(4)));
  CHECK_FALSE(is_path(cycle_graph(4)));
  const auto ring = cycle_order(cycle_graph(5));
  REQUIRE(ring.has_value());
  CHECK(ring->size() == 5);
}

TEST_CASE("canonical code separates isomorphism classes like the brute-force code") {
  std::mt19937_64 rng(7);
  std::map<std::string, std::string> brute_to_fast;
  std::map<std::string, std::string> fast_to_brute;
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 2 + trial % 5;
    const Graph g = eigmult::testing::random_graph(rng, n, 0.45);
    const std::string fast = canonical_code(g);
    const std::string brute = std::to_string(n) + ":" + eigmult::testing::brute_force_code(g);
    auto [it, fresh] = brute_to_fast.emplace(brute, fast);
    CHECK(it->second == fast);
    auto [jt, fresh2] = fast_to_brute.emplace(fast, brute);
    CHECK(jt->second == brute);
  }
}

TEST_CASE("canonical code is invariant under relabeling") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 10;
    const Graph g = eigmult::testing::random_graph(rng, n, 0.3 + 0.05 * (trial % 5));
    const auto perm = eigmult::testing::random_permutation(rng, n);
    CHECK(canonical_code(relabel(g, perm)) == canonical_code(g));
  }
  CHECK_THROWS_AS(canonical_code(path_graph(11)), PreconditionError);
}

TEST_CASE("canonical code on order 8 under many relabelings") {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = eigmult::testing::random_graph(rng, 8, 0.2 + 0.05 * (trial % 7));
    const std::string code = canonical_code(g);
    for (int k = 0; k < 20; ++k)
      CHECK(canonical_code(relabel(g, eigmult::testing::random_permutation(rng, 8))) == code);
  }
}

TEST_CASE("tree code is invariant under relabeling and separates small trees") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + trial % 14;
    const Graph t = eigmult::testing::random_connected(rng, n, 0);
    const auto perm = eigmult::testing::random_permutation(rng, n);
    CHECK(tree_code(relabel(t, perm)) == tree_code(t));
    if (n <= 9) CHECK(isomorphic(t, relabel(t, perm)));
  }
  CHECK(tree_code(path_graph(5)) != tree_code(spider(4, 1)));
}

TEST_CASE("property: Q_s by BFS equals Q_s by walking pendant paths") {
  std::mt19937_64 rng(3);
  int checked = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const std::size_t n = 3 + trial % 13;
    const Graph g = eigmult::testing::random_connected(rng, n, trial % 4);
    for (std::size_t s = 1; s <= 3; ++s) {
      if (!in_pendant_class(g, s)) continue;
      CHECK(s_pendant_set(g, s) == s_pendant_set_by_walk(g, s));
      ++checked;
    }
  }
  CHECK(checked > 100);
}

TEST_CASE("property: plinth is idempotent and has minimum degree >= 2") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = eigmult::testing::random_connected(rng, 3 + trial % 12, trial % 5);
    const auto core = plinth(g).graph;
    for (Vertex v = 0; v < core.order(); ++v) CHECK(core.degree(v) >= 2);
    CHECK(plinth(core).graph == core);
    CHECK(cyclomatic_number(core) == cyclomatic_number(g));
  }
}

TEST_CASE("property: block edges sum to |E| and cut vertices disconnect") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = eigmult::testing::random_connected(rng, 3 + trial % 10, trial % 4);
    const auto bd = block_decomposition(g);
    std::size_t total = 0;
    for (auto e : bd.block_edges) total += e;
    CHECK(total == g.size());
    std::set<Vertex> cuts(bd.cut_vertices.begin(), bd.cut_vertices.end());
    for (Vertex v = 0; v < g.order(); ++v) {
      const bool splits = component_count(induced_delete(g, {v}).graph) > 1;
      CHECK(splits == cuts.count(v) > 0);
    }
  }
}
