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

#include "eigmult/graph.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace eigmult {

namespace {

void check_vertex(const Graph& g, Vertex v, const char* what) {
  if (v >= g.order()) {
    std::ostringstream msg;
    msg << what << ": vertex " << v << " out of range for graph of order " << g.order();
    throw GraphError(msg.str());
  }
}

const std::string kNoLabel;

}  // namespace

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> edges) {
  Graph g;
  g.adj_.assign(n, {});
  g.labels_.assign(n, {});
  for (const auto& [u, v] : edges) {
    if (u >= n || v >= n) {
      std::ostringstream msg;
      msg << "edge (" << u << "," << v << "): endpoint out of range for n=" << n;
      throw GraphError(msg.str());
    }
    if (u == v) {
      std::ostringstream msg;
      msg << "edge (" << u << "," << v << "): self-loop";
      throw GraphError(msg.str());
    }
    g.adj_[u].push_back(v);
    g.adj_[v].push_back(u);
  }
  std::size_t twice = 0;
  for (auto& nb : g.adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    twice += nb.size();
  }
  g.edge_count_ = twice / 2;
  return g;
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& nb = adj_.at(u);
  return std::binary_search(nb.begin(), nb.end(), v);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < adj_.size(); ++u)
    for (Vertex v : adj_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

const std::string& Graph::label(Vertex v) const {
  if (v >= labels_.size()) return kNoLabel;
  return labels_[v];
}

std::optional<Vertex> Graph::find_label(std::string_view text) const {
  for (Vertex v = 0; v < labels_.size(); ++v)
    if (labels_[v] == text) return v;
  return std::nullopt;
}

Graph Graph::with_label(Vertex v, std::string text) const {
  check_vertex(*this, v, "with_label");
  Graph copy = *this;
  copy.labels_.resize(copy.adj_.size());
  copy.labels_[v] = std::move(text);
  return copy;
}

Subgraph induced_delete(const Graph& g, std::span<const Vertex> removed) {
  std::vector<bool> gone(g.order(), false);
  for (Vertex v : removed) {
    check_vertex(g, v, "induced_delete");
    gone[v] = true;
  }
  Subgraph out;
  out.old_to_new.assign(g.order(), std::nullopt);
  for (Vertex v = 0; v < g.order(); ++v) {
    if (gone[v]) continue;
    out.old_to_new[v] = out.new_to_old.size();
    out.new_to_old.push_back(v);
  }
  std::vector<Edge> kept;
  for (const auto& [u, v] : g.edges())
    if (!gone[u] && !gone[v]) kept.emplace_back(*out.old_to_new[u], *out.old_to_new[v]);
  out.graph = Graph::from_edge_list(out.new_to_old.size(), kept);
  for (Vertex nv = 0; nv < out.new_to_old.size(); ++nv) {
    const auto& text = g.label(out.new_to_old[nv]);
    if (!text.empty()) out.graph = out.graph.with_label(nv, text);
  }
  return out;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const std::size_t shift = g.order();
  std::vector<Edge> edges = g.edges();
  for (const auto& [a, b] : h.edges()) edges.emplace_back(a + shift, b + shift);
  Graph out = Graph::from_edge_list(g.order() + h.order(), edges);
  for (Vertex v = 0; v < g.order(); ++v)
    if (!g.label(v).empty()) out = out.with_label(v, g.label(v));
  for (Vertex v = 0; v < h.order(); ++v)
    if (!h.label(v).empty()) out = out.with_label(v + shift, h.label(v));
  return out;
}

Bridged join_bridge(const Graph& g, Vertex u, const Graph& h, Vertex v) {
  check_vertex(g, u, "join_bridge");
  check_vertex(h, v, "join_bridge");
  Bridged out;
  const Graph both = disjoint_union(g, h);
  std::vector<Edge> edges = both.edges();
  edges.emplace_back(u, v + g.order());
  out.graph = Graph::from_edge_list(both.order(), edges);
  for (Vertex w = 0; w < both.order(); ++w)
    if (!both.label(w).empty()) out.graph = out.graph.with_label(w, both.label(w));
  out.g_map.resize(g.order());
  std::iota(out.g_map.begin(), out.g_map.end(), Vertex{0});
  out.h_map.resize(h.order());
  std::iota(out.h_map.begin(), out.h_map.end(), g.order());
  return out;
}

std::vector<std::optional<std::size_t>> distances_from(const Graph& g, Vertex source) {
  check_vertex(g, source, "distance");
  std::vector<std::optional<std::size_t>> dist(g.order());
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    for (Vertex y : g.neighbors(x)) {
      if (dist[y]) continue;
      dist[y] = *dist[x] + 1;
      queue.push_back(y);
    }
  }
  return dist;
}

std::optional<std::size_t> distance(const Graph& g, Vertex u, Vertex v) {
  check_vertex(g, v, "distance");
  return distances_from(g, u)[v];
}

std::size_t component_count(const Graph& g) {
  std::vector<bool> seen(g.order(), false);
  std::size_t count = 0;
  for (Vertex start = 0; start < g.order(); ++start) {
    if (seen[start]) continue;
    ++count;
    std::vector<Vertex> stack{start};
    seen[start] = true;
    while (!stack.empty()) {
      const Vertex x = stack.back();
      stack.pop_back();
      for (Vertex y : g.neighbors(x))
        if (!seen[y]) {
          seen[y] = true;
          stack.push_back(y);
        }
    }
  }
  return count;
}

bool is_connected(const Graph& g) { return g.order() > 0 && component_count(g) == 1; }

std::size_t cyclomatic_number(const Graph& g) {
  return g.size() + component_count(g) - g.order();
}

bool is_tree(const Graph& g) { return is_connected(g) && g.size() + 1 == g.order(); }

std::vector<Vertex> pendant_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) == 1) out.push_back(v);
  return out;
}

std::vector<Vertex> high_degree_vertices(const Graph& g) {
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) >= 3) out.push_back(v);
  return out;
}

std::vector<PendantPath> pendant_paths(const Graph& g) {
  std::vector<PendantPath> out;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) == 0) {
      out.push_back({{v}, std::nullopt, true});
      continue;
    }
    if (g.degree(v) != 1) continue;
    PendantPath path;
    path.vertices.push_back(v);
    Vertex prev = v;
    Vertex cur = g.neighbors(v)[0];
    while (g.degree(cur) == 2) {
      path.vertices.push_back(cur);
      const auto nb = g.neighbors(cur);
      const Vertex next = nb[0] == prev ? nb[1] : nb[0];
      prev = cur;
      cur = next;
    }
    if (g.degree(cur) == 1) {
      // The component is a path; report it from its smaller end only.
      if (cur < v) continue;
      path.vertices.push_back(cur);
      path.bare_component = true;
    } else {
      path.anchor = cur;
    }
    out.push_back(std::move(path));
  }
  return out;
}

namespace {

std::optional<std::string> short_path_reason(const Graph& g, std::size_t s) {
  for (const auto& path : pendant_paths(g)) {
    const std::size_t need = path.bare_component ? 2 * s + 1 : s;
    if (path.order() < need) {
      std::ostringstream msg;
      msg << (path.bare_component ? "path component" : "pendant path") << " of order "
          << path.order() << " starting at vertex " << path.vertices.front()
          << " is shorter than required " << need << " (s=" << s << ")";
      return msg.str();
    }
  }
  return std::nullopt;
}

}  // namespace

bool in_pendant_class(const Graph& g, std::size_t s) { return !short_path_reason(g, s); }

std::vector<Vertex> s_pendant_set(const Graph& g, std::size_t s) {
  if (auto reason = short_path_reason(g, s)) throw PreconditionError(*reason);
  std::vector<bool> hit(g.order(), false);
  for (Vertex leaf : pendant_vertices(g)) {
    const auto dist = distances_from(g, leaf);
    for (Vertex v = 0; v < g.order(); ++v)
      if (dist[v] && *dist[v] == s) hit[v] = true;
  }
  std::vector<Vertex> out;
  for (Vertex v = 0; v < g.order(); ++v)
    if (hit[v]) out.push_back(v);
  return out;
}

std::vector<Vertex> s_pendant_set_by_walk(const Graph& g, std::size_t s) {
  if (auto reason = short_path_reason(g, s)) throw PreconditionError(*reason);
  std::set<Vertex> hit;
  for (const auto& path : pendant_paths(g)) {
    if (path.bare_component) {
      hit.insert(path.vertices[s]);
      hit.insert(path.vertices[path.order() - 1 - s]);
    } else if (s < path.order()) {
      hit.insert(path.vertices[s]);
    } else {
      hit.insert(*path.anchor);
    }
  }
  return {hit.begin(), hit.end()};
}

Subgraph plinth(const Graph& g) {
  std::vector<std::size_t> deg(g.order());
  std::vector<bool> gone(g.order(), false);
  std::vector<Vertex> queue;
  for (Vertex v = 0; v < g.order(); ++v) {
    deg[v] = g.degree(v);
    if (deg[v] <= 1) {
      gone[v] = true;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    const Vertex x = queue.back();
    queue.pop_back();
    for (Vertex y : g.neighbors(x)) {
      if (gone[y]) continue;
      if (--deg[y] <= 1) {
        gone[y] = true;
        queue.push_back(y);
      }
    }
  }
  std::vector<Vertex> removed;
  for (Vertex v = 0; v < g.order(); ++v)
    if (gone[v]) removed.push_back(v);
  return induced_delete(g, removed);
}

BlockDecomposition block_decomposition(const Graph& g) {
  const std::size_t n = g.order();
  BlockDecomposition out;
  std::vector<std::size_t> disc(n, 0), low(n, 0);
  std::size_t timer = 0;
  std::vector<Edge> stack;
  std::set<Vertex> cuts;

  std::function<void(Vertex, std::optional<Vertex>)> dfs = [&](Vertex u,
                                                               std::optional<Vertex> parent) {
    disc[u] = low[u] = ++timer;
    std::size_t children = 0;
    for (Vertex w : g.neighbors(u)) {
      if (parent && w == *parent) continue;
      if (disc[w] == 0) {
        ++children;
        stack.emplace_back(u, w);
        dfs(w, u);
        low[u] = std::min(low[u], low[w]);
        if (low[w] >= disc[u]) {
          if (parent || children > 1) cuts.insert(u);
          std::set<Vertex> verts;
          std::size_t edge_count = 0;
          while (true) {
            const Edge e = stack.back();
            stack.pop_back();
            verts.insert(e.first);
            verts.insert(e.second);
            ++edge_count;
            if (e == Edge{u, w}) break;
          }
          out.blocks.emplace_back(verts.begin(), verts.end());
          out.block_edges.push_back(edge_count);
        }
      } else if (disc[w] < disc[u]) {
        stack.emplace_back(u, w);
        low[u] = std::min(low[u], disc[w]);
      }
    }
  };
  for (Vertex v = 0; v < n; ++v)
    if (disc[v] == 0) dfs(v, std::nullopt);

  for (std::size_t b = 0; b < out.blocks.size(); ++b) {
    const std::size_t vcount = out.blocks[b].size();
    const std::size_t ecount = out.block_edges[b];
    if (vcount == 2 && ecount == 1)
      out.kinds.push_back(BlockKind::kEdge);
    else if (vcount >= 3 && ecount == vcount)
      out.kinds.push_back(BlockKind::kCycle);
    else
      out.kinds.push_back(BlockKind::kOther);
  }
  out.cut_vertices.assign(cuts.begin(), cuts.end());
  return out;
}

bool cycles_pairwise_disjoint(const Graph& g) {
  const auto bd = block_decomposition(g);
  std::vector<int> cycle_hits(g.order(), 0);
  for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
    if (bd.kinds[b] == BlockKind::kOther) return false;
    if (bd.kinds[b] != BlockKind::kCycle) continue;
    for (Vertex v : bd.blocks[b])
      if (++cycle_hits[v] > 1) return false;
  }
  return true;
}

std::vector<PendantCycle> pendant_cycles(const Graph& g) {
  const auto bd = block_decomposition(g);
  std::vector<PendantCycle> out;
  for (std::size_t b = 0; b < bd.blocks.size(); ++b) {
    if (bd.kinds[b] != BlockKind::kCycle) continue;
    const auto& verts = bd.blocks[b];
    std::vector<Vertex> cuts_here;
    std::set_intersection(verts.begin(), verts.end(), bd.cut_vertices.begin(),
                          bd.cut_vertices.end(), std::back_inserter(cuts_here));
    if (cuts_here.size() != 1) continue;
    PendantCycle pc;
    pc.attachment = cuts_here[0];
    auto in_block = [&](Vertex v) { return std::binary_search(verts.begin(), verts.end(), v); };
    Vertex prev = pc.attachment;
    Vertex cur = pc.attachment;
    // Start towards the smaller in-block neighbor so the ring order is deterministic.
    for (Vertex w : g.neighbors(cur))
      if (in_block(w)) {
        pc.cycle.push_back(cur);
        prev = cur;
        cur = w;
        break;
      }
    while (cur != pc.attachment) {
      pc.cycle.push_back(cur);
      Vertex next = cur;
      for (Vertex w : g.neighbors(cur))
        if (w != prev && in_block(w)) {
          next = w;
          break;
        }
      prev = cur;
      cur = next;
    }
    out.push_back(std::move(pc));
  }
  std::sort(out.begin(), out.end(),
            [](const PendantCycle& a, const PendantCycle& b) { return a.cycle < b.cycle; });
  return out;
}

std::vector<std::vector<Vertex>> internal_paths(const Graph& g) {
  const auto bd = block_decomposition(g);
  std::set<Edge> bridges;
  for (std::size_t b = 0; b < bd.blocks.size(); ++b)
    if (bd.kinds[b] == BlockKind::kEdge) bridges.insert({bd.blocks[b][0], bd.blocks[b][1]});
  auto is_bridge = [&](Vertex a, Vertex b) {
    return bridges.count({std::min(a, b), std::max(a, b)}) > 0;
  };

  std::vector<std::vector<Vertex>> out;
  for (Vertex a : high_degree_vertices(g)) {
    for (Vertex first : g.neighbors(a)) {
      if (!is_bridge(a, first)) continue;
      std::vector<Vertex> inner;
      Vertex prev = a;
      Vertex cur = first;
      while (g.degree(cur) == 2) {
        inner.push_back(cur);
        const auto nb = g.neighbors(cur);
        const Vertex next = nb[0] == prev ? nb[1] : nb[0];
        prev = cur;
        cur = next;
      }
      if (g.degree(cur) < 3) continue;
      // Bridge paths join distinct endpoints; report each once from the smaller one.
      if (cur < a) continue;
      out.push_back(std::move(inner));
    }
  }
  return out;
}

std::optional<std::vector<Vertex>> cycle_order(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return std::nullopt;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) != 2) return std::nullopt;
  std::vector<Vertex> ring{0};
  Vertex prev = 0;
  Vertex cur = g.neighbors(0)[0];
  while (cur != 0) {
    ring.push_back(cur);
    const auto nb = g.neighbors(cur);
    const Vertex next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  return ring;
}

bool is_cycle(const Graph& g) { return cycle_order(g).has_value(); }

bool is_path(const Graph& g) {
  if (!is_tree(g)) return false;
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) > 2) return false;
  return true;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.order()) throw GraphError("relabel: permutation size mismatch");
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  Graph out = Graph::from_edge_list(g.order(), edges);
  for (Vertex v = 0; v < g.order(); ++v)
    if (!g.label(v).empty()) out = out.with_label(perm[v], g.label(v));
  return out;
}

namespace {

// Canonical color refinement: colors are ranks of (color, sorted neighbor colors).
std::vector<std::size_t> refine_colors(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<std::size_t> color(n);
  for (Vertex v = 0; v < n; ++v) color[v] = g.degree(v);
  std::size_t classes = 0;
  while (true) {
    std::vector<std::pair<std::size_t, std::vector<std::size_t>>> sig(n);
    for (Vertex v = 0; v < n; ++v) {
      sig[v].first = color[v];
      for (Vertex w : g.neighbors(v)) sig[v].second.push_back(color[w]);
      std::sort(sig[v].second.begin(), sig[v].second.end());
    }
    auto distinct = sig;
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()), distinct.end());
    for (Vertex v = 0; v < n; ++v)
      color[v] = static_cast<std::size_t>(
          std::lower_bound(distinct.begin(), distinct.end(), sig[v]) - distinct.begin());
    if (distinct.size() == classes) break;
    classes = distinct.size();
  }
  return color;
}

struct CanonSearch {
  const Graph& g;
  std::size_t n;
  std::vector<std::size_t> slot_color;
  std::vector<std::size_t> color;
  std::vector<Vertex> perm;
  std::vector<bool> used;
  std::string current;
  std::string best;
  bool have_best = false;

  std::size_t column_start(std::size_t j) const { return j * (j - 1) / 2; }

  bool twins(Vertex a, Vertex b) const {
    auto na = g.neighbors(a);
    auto nb = g.neighbors(b);
    std::vector<Vertex> xa, xb;
    for (Vertex w : na)
      if (w != b) xa.push_back(w);
    for (Vertex w : nb)
      if (w != a) xb.push_back(w);
    return xa == xb;
  }

  void search(std::size_t j) {
    if (j == n) {
      if (!have_best || current < best) {
        best = current;
        have_best = true;
      }
      return;
    }
    std::vector<Vertex> tried;
    for (Vertex w = 0; w < n; ++w) {
      if (used[w] || color[w] != slot_color[j]) continue;
      bool redundant = false;
      for (Vertex t : tried)
        if (twins(t, w)) {
          redundant = true;
          break;
        }
      if (redundant) continue;
      tried.push_back(w);

      const std::size_t start = column_start(j);
      for (std::size_t i = 0; i < j; ++i) current[start + i] = g.adjacent(perm[i], w) ? '1' : '0';
      // best can shrink inside sibling subtrees, so compare the whole prefix each time.
      if (have_best && current.compare(0, start + j, best, 0, start + j) > 0) continue;
      perm[j] = w;
      used[w] = true;
      search(j + 1);
      used[w] = false;
    }
  }
};

}  // namespace

std::string canonical_code(const Graph& g, std::size_t limit) {
  const std::size_t n = g.order();
  if (n > limit) {
    std::ostringstream msg;
    msg << "canonical_code: order " << n << " exceeds limit " << limit;
    throw PreconditionError(msg.str());
  }
  CanonSearch cs{g, n, {}, refine_colors(g), std::vector<Vertex>(n), std::vector<bool>(n, false),
                 std::string(n * (n > 0 ? n - 1 : 0) / 2, '0'), {}, false};
  cs.slot_color = cs.color;
  std::sort(cs.slot_color.begin(), cs.slot_color.end());
  cs.search(0);

  std::string code;
  code.push_back(static_cast<char>(n));
  unsigned char byte = 0;
  int filled = 0;
  for (char bit : cs.best) {
    byte = static_cast<unsigned char>((byte << 1) | (bit == '1' ? 1 : 0));
    if (++filled == 8) {
      code.push_back(static_cast<char>(byte));
      byte = 0;
      filled = 0;
    }
  }
  if (filled > 0) code.push_back(static_cast<char>(byte << (8 - filled)));
  return code;
}

std::string tree_code(const Graph& tree) {
  if (!is_tree(tree)) throw PreconditionError("tree_code: graph is not a tree");
  const std::size_t n = tree.order();
  if (n == 1) return "()";
  // Centers by repeated leaf stripping.
  std::vector<std::size_t> deg(n);
  std::vector<Vertex> layer;
  for (Vertex v = 0; v < n; ++v) {
    deg[v] = tree.degree(v);
    if (deg[v] <= 1) layer.push_back(v);
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex leaf : layer)
      for (Vertex w : tree.neighbors(leaf))
        if (--deg[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::function<std::string(Vertex, std::optional<Vertex>)> encode =
      [&](Vertex v, std::optional<Vertex> parent) {
        std::vector<std::string> kids;
        for (Vertex w : tree.neighbors(v))
          if (!parent || w != *parent) kids.push_back(encode(w, v));
        std::sort(kids.begin(), kids.end());
        std::string s = "(";
        for (const auto& k : kids) s += k;
        return s + ")";
      };
  std::string best;
  for (Vertex c : layer) {
    std::string code = encode(c, std::nullopt);
    if (best.empty() || code < best) best = std::move(code);
  }
  return best;
}

bool isomorphic(const Graph& g, const Graph& h, std::size_t limit) {
  if (g.order() != h.order() || g.size() != h.size()) return false;
  if (is_tree(g) || is_tree(h)) return is_tree(g) && is_tree(h) && tree_code(g) == tree_code(h);
  return canonical_code(g, limit) == canonical_code(h, limit);
}

}  // namespace eigmult
