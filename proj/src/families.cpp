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

#include "eigmult/families.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <set>
#include <sstream>
#include <tuple>

#include "eigmult/graph6.hpp"
#include "walks.hpp"

namespace eigmult {

namespace {

using detail::leg_order;
using detail::leg_vertices;
using detail::walk_to_branch;

void require(bool ok, const std::string& what) {
  if (!ok) throw PreconditionError(what);
}

void check_order(const Graph& g, std::size_t expected, const char* who) {
  if (g.order() != expected)
    throw std::logic_error(std::string(who) + ": built " + std::to_string(g.order()) +
                           " vertices, expected " + std::to_string(expected));
}

std::string add_role(const std::string& existing, std::string_view role) {
  if (existing.empty()) return std::string(role);
  return existing + "+" + std::string(role);
}

Graph mark(const Graph& g, Vertex v, std::string_view role) {
  return g.with_label(v, add_role(g.label(v), role));
}

// Builder for graphs assembled from pieces.
struct Assembly {
  std::size_t n = 0;
  std::vector<Edge> edges;

  Vertex add() { return n++; }
  void link(Vertex a, Vertex b) { edges.emplace_back(a, b); }
  // Leg of `order` vertices hanging from `root`.
  void leg(Vertex root, std::size_t order) {
    Vertex prev = root;
    for (std::size_t i = 0; i < order; ++i) {
      const Vertex v = add();
      link(prev, v);
      prev = v;
    }
  }
  // Path of `order` vertices starting at `from`; returns the far end.
  Vertex tail(Vertex from, std::size_t order) {
    Vertex prev = from;
    for (std::size_t i = 1; i < order; ++i) {
      const Vertex v = add();
      link(prev, v);
      prev = v;
    }
    return prev;
  }
  // Cycle of order g through `start` (a fresh vertex unless given).
  void cycle(Vertex start, std::size_t g) {
    Vertex prev = start;
    for (std::size_t i = 1; i < g; ++i) {
      const Vertex v = add();
      link(prev, v);
      prev = v;
    }
    link(prev, start);
  }
  Graph graph() const { return Graph::from_edge_list(n, edges); }
};

Assembly assembly_of(const Graph& h) {
  Assembly a;
  a.n = h.order();
  a.edges = h.edges();
  return a;
}

Graph copy_labels(Graph out, const Graph& from) {
  for (Vertex v = 0; v < from.order(); ++v)
    if (!from.label(v).empty()) out = out.with_label(v, from.label(v));
  return out;
}

std::string iso_key(const Graph& g) {
  if (is_tree(g)) return "t" + tree_code(g);
  return "g" + canonical_code(g, std::max<std::size_t>(g.order(), 1));
}

struct DeletionSet {
  std::set<std::tuple<std::string, std::size_t, std::size_t, std::size_t>> seen;
  std::vector<Deletion> out;

  void offer(const Graph& g, const std::vector<Vertex>& removed, Vertex u, std::size_t l, std::size_t k,
             std::size_t cyc) {
    auto sub = induced_delete(g, removed);
    Graph h = mark(sub.graph, *sub.old_to_new[u], kAttach);
    if (!seen.emplace(iso_key(h), l, k, cyc).second) return;
    out.push_back(Deletion{std::move(h), u, l, k, cyc});
  }
};

}  // namespace

std::optional<Vertex> find_mark(const Graph& g, std::string_view role) {
  for (Vertex v = 0; v < g.order(); ++v) {
    std::string_view text = g.label(v);
    while (!text.empty()) {
      const auto plus = text.find('+');
      if (text.substr(0, plus) == role) return v;
      if (plus == std::string_view::npos) break;
      text.remove_prefix(plus + 1);
    }
  }
  return std::nullopt;
}

Graph path_graph(std::size_t n) {
  require(n >= 1, "path_graph: order must be at least 1");
  Assembly a;
  a.tail(a.add(), n);
  return a.graph();
}

Graph cycle_graph(std::size_t n) {
  require(n >= 3, "cycle_graph: order must be at least 3, got " + std::to_string(n));
  Assembly a;
  a.cycle(a.add(), n);
  return a.graph();
}

Graph starlike(std::size_t k, std::size_t s) {
  require(k >= 1 && s >= 1, "starlike: need k >= 1 and s >= 1");
  Assembly a;
  const Vertex c = a.add();
  for (std::size_t i = 0; i < k; ++i) a.leg(c, s);
  Graph g = mark(a.graph(), c, kCenter);
  check_order(g, k * s + 1, "starlike");
  return g;
}

Graph spider(const std::vector<std::size_t>& legs) {
  require(!legs.empty(), "spider: need at least one leg");
  Assembly a;
  const Vertex c = a.add();
  std::size_t total = 1;
  for (std::size_t order : legs) {
    require(order >= 1, "spider: legs must have order >= 1");
    a.leg(c, order);
    total += order;
  }
  Graph g = mark(a.graph(), c, kCenter);
  check_order(g, total, "spider");
  return g;
}

Graph t_kl(std::size_t k, std::size_t s, std::size_t l) {
  require(k >= 1 && s >= 1, "t_kl: need k >= 1 and s >= 1");
  Assembly a;
  if (l == 0) {
    for (std::size_t i = 0; i < k; ++i) a.tail(a.add(), s);
    Graph g = a.graph();
    check_order(g, k * s, "t_kl");
    return g;
  }
  const Vertex c = a.add();
  for (std::size_t i = 0; i < k; ++i) a.leg(c, s);
  const Vertex end = a.tail(c, l);
  Graph g = mark(mark(a.graph(), c, kCenter), end, kLVertex);
  check_order(g, k * s + l, "t_kl");
  return g;
}

Graph t_k1k2l(std::size_t k1, std::size_t k2, std::size_t s, std::size_t l) {
  require(k1 >= 1 && k2 >= 1 && s >= 1, "t_k1k2l: need k1, k2, s >= 1");
  require(l >= 2, "t_k1k2l: the connecting path needs order >= 2, got " + std::to_string(l));
  Assembly a;
  const Vertex c1 = a.add();
  const Vertex c2 = a.tail(c1, l);
  for (std::size_t i = 0; i < k1; ++i) a.leg(c1, s);
  for (std::size_t i = 0; i < k2; ++i) a.leg(c2, s);
  Graph g = mark(mark(a.graph(), c1, "center1"), c2, "center2");
  check_order(g, (k1 + k2) * s + l, "t_k1k2l");
  return g;
}

Graph c_kl(std::size_t g, std::size_t l) {
  require(g >= 3, "c_kl: cycle order must be at least 3, got " + std::to_string(g));
  require(l >= 1, "c_kl: tail order must be at least 1");
  Assembly a;
  const Vertex c = a.add();
  a.cycle(c, g);
  const Vertex end = a.tail(c, l);
  Graph out = mark(mark(a.graph(), c, kAttach), end, kLVertex);
  check_order(out, g + l - 1, "c_kl");
  return out;
}

Graph attach_pendant_tk(const Graph& h, Vertex u, std::size_t l, std::size_t k, std::size_t s) {
  require(u < h.order(), "attach_pendant_tk: vertex out of range");
  require(h.degree(u) >= 2, "attach_pendant_tk: attachment vertex needs degree >= 2 in H");
  require(l >= 1 && k >= 1 && s >= 1, "attach_pendant_tk: need l, k, s >= 1");
  Assembly a = assembly_of(h);
  const Vertex center = a.tail(u, l);
  for (std::size_t i = 0; i < k; ++i) a.leg(center, s);
  Graph g = mark(copy_labels(a.graph(), h), center, kCenter);
  check_order(g, h.order() + l - 1 + k * s, "attach_pendant_tk");
  return g;
}

Graph attach_pendant_cycle(const Graph& h, Vertex u, std::size_t l, std::size_t g) {
  require(u < h.order(), "attach_pendant_cycle: vertex out of range");
  require(h.degree(u) >= 2, "attach_pendant_cycle: attachment vertex needs degree >= 2 in H");
  require(l >= 1 && g >= 3, "attach_pendant_cycle: need l >= 1 and g >= 3");
  Assembly a = assembly_of(h);
  const Vertex v = a.tail(u, l);
  a.cycle(v, g);
  Graph out = mark(copy_labels(a.graph(), h), v, kAttach);
  check_order(out, h.order() + l - 1 + g - 1, "attach_pendant_cycle");
  return out;
}

Graph bicyclic_b(std::size_t l, std::size_t k) {
  require(l >= 3 && k >= 3, "bicyclic_b: cycle orders must be at least 3");
  Assembly a;
  const Vertex hub = a.add();
  a.cycle(hub, l);
  a.cycle(hub, k);
  Graph g = mark(a.graph(), hub, "hub");
  check_order(g, l + k - 1, "bicyclic_b");
  return g;
}

Graph theta(std::size_t a, std::size_t b, std::size_t c) {
  require(a >= 1 && b >= 1 && c >= 1, "theta: path lengths must be positive");
  const std::size_t ones = (a == 1) + (b == 1) + (c == 1);
  require(ones <= 1, "theta: at most one path may be a single edge");
  Assembly asmb;
  const Vertex x = asmb.add();
  const Vertex y = asmb.add();
  for (std::size_t len : {a, b, c}) {
    Vertex prev = x;
    for (std::size_t i = 1; i < len; ++i) {
      const Vertex v = asmb.add();
      asmb.link(prev, v);
      prev = v;
    }
    asmb.link(prev, y);
  }
  Graph g = mark(mark(asmb.graph(), x, "branch1"), y, "branch2");
  check_order(g, a + b + c - 1, "theta");
  return g;
}

Graph build_bth(const Graph& t0, const std::vector<BranchSpec>& branches, std::size_t s) {
  require(s >= 1, "build_bth: s must be at least 1");
  require(is_tree(t0), "build_bth: T0 must be a tree");
  const auto high = high_degree_vertices(t0);
  for (std::size_t i = 0; i < high.size(); ++i)
    for (std::size_t j = i + 1; j < high.size(); ++j)
      require(!t0.adjacent(high[i], high[j]), "build_bth: T0 has adjacent vertices of degree >= 3 (" +
                                                  std::to_string(high[i]) + ", " + std::to_string(high[j]) + ")");
  auto paths = pendant_paths(t0);
  require(high.size() >= 1 && paths.size() >= 3, "build_bth: T0 needs at least three pendant vertices");
  require(paths.size() == branches.size(), "build_bth: T0 has " + std::to_string(paths.size()) +
                                               " pendant vertices but " + std::to_string(branches.size()) +
                                               " branches were given");
  std::sort(paths.begin(), paths.end(),
            [](const PendantPath& a, const PendantPath& b) { return a.vertices.front() < b.vertices.front(); });

  std::vector<Vertex> removed;
  std::size_t expected = t0.order();
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const auto& br = branches[i];
    if (br.kind == BranchSpec::Kind::kT) {
      require(br.first >= 1, "build_bth: T-branch needs k >= 1");
      require(br.second == paths[i].order(),
              "build_bth: T-branch " + std::to_string(i) + " has l = " + std::to_string(br.second) +
                  " but the pendant path of T0 has order " + std::to_string(paths[i].order()));
      expected += br.first * s;
    } else {
      require(br.first >= 3 && br.second >= 1, "build_bth: C-branch needs g >= 3 and f >= 1");
      removed.insert(removed.end(), paths[i].vertices.begin(), paths[i].vertices.end());
      expected += br.first + br.second - 1;
      expected -= paths[i].order();
    }
  }
  const auto sub = induced_delete(t0, removed);
  Assembly a = assembly_of(sub.graph);
  std::vector<std::pair<Vertex, std::string_view>> roles;
  for (std::size_t i = 0; i < paths.size(); ++i) {
    const auto& br = branches[i];
    if (br.kind == BranchSpec::Kind::kT) {
      const Vertex leaf = *sub.old_to_new[paths[i].vertices.front()];
      for (std::size_t j = 0; j < br.first; ++j) a.leg(leaf, s);
      roles.emplace_back(leaf, kCenter);
    } else {
      const Vertex anchor = *sub.old_to_new[*paths[i].anchor];
      const Vertex on_cycle = a.add();
      a.cycle(on_cycle, br.first);
      const Vertex end = a.tail(on_cycle, br.second);
      a.link(anchor, end);
      roles.emplace_back(on_cycle, kAttach);
    }
  }
  Graph g = a.graph();
  for (const auto& [v, role] : roles) g = mark(g, v, role);
  check_order(g, expected, "build_bth");
  return g;
}

std::vector<Deletion> s_p_delete(const Graph& g, std::size_t s) {
  require(s >= 1, "s_p_delete: s must be at least 1");
  DeletionSet result;
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<Vertex> legs;
    std::vector<Vertex> others;
    for (Vertex x : g.neighbors(v)) {
      const auto order = leg_order(g, v, x);
      (order == s ? legs : others).push_back(x);
    }
    if (legs.empty()) continue;
    // l = 1: the center is u itself and keeps degree >= 2 in H.
    for (std::size_t k = 1; k <= legs.size() && g.degree(v) >= k + 2; ++k) {
      std::vector<Vertex> removed;
      for (std::size_t i = 0; i < k; ++i) {
        const auto part = leg_vertices(g, v, legs[i]);
        removed.insert(removed.end(), part.begin(), part.end());
      }
      result.offer(g, removed, v, 1, k, 0);
    }
    // l >= 2: every other neighbor of v is a leg, and the remaining one leads to u.
    if (others.size() != 1) continue;
    const auto walk = walk_to_branch(g, v, others[0]);
    if (!walk) continue;
    std::vector<Vertex> removed = walk->interior;
    removed.push_back(v);
    for (Vertex x : legs) {
      const auto part = leg_vertices(g, v, x);
      removed.insert(removed.end(), part.begin(), part.end());
    }
    result.offer(g, removed, walk->end, walk->interior.size() + 2, legs.size(), 0);
  }
  return std::move(result.out);
}

std::vector<Deletion> c_p_delete(const Graph& g) {
  DeletionSet result;
  for (const auto& pc : pendant_cycles(g)) {
    const Vertex v = pc.attachment;
    std::vector<Vertex> removed(pc.cycle.begin() + 1, pc.cycle.end());
    if (g.degree(v) >= 4) {
      result.offer(g, removed, v, 1, 0, pc.cycle.size());
      continue;
    }
    if (g.degree(v) != 3) continue;
    Vertex out = v;
    for (Vertex x : g.neighbors(v))
      if (std::find(pc.cycle.begin(), pc.cycle.end(), x) == pc.cycle.end()) out = x;
    const auto walk = walk_to_branch(g, v, out);
    if (!walk) continue;
    removed.push_back(v);
    removed.insert(removed.end(), walk->interior.begin(), walk->interior.end());
    result.offer(g, removed, walk->end, walk->interior.size() + 2, 0, pc.cycle.size());
  }
  return std::move(result.out);
}

// ---- text form ------------------------------------------------------------

namespace {

class SpecParser {
 public:
  explicit SpecParser(std::string_view text) : text_(text) {}

  FamilySpec spec() {
    skip_space();
    const std::string name = identifier();
    expect('(');
    FamilySpec out;
    if (name == "P" || name == "C") {
      out.kind = name == "P" ? FamilyKind::kPath : FamilyKind::kCycle;
      out.params = {number()};
    } else if (name == "S") {
      out.kind = FamilyKind::kSpider;
      out.params.push_back(number());
      while (accept(',')) out.params.push_back(number());
    } else if (name == "G6") {
      out.kind = FamilyKind::kGraph6;
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && text_[pos_] != ')') ++pos_;
      out.graph6 = std::string(text_.substr(start, pos_ - start));
      while (!out.graph6.empty() && std::isspace(static_cast<unsigned char>(out.graph6.back())))
        out.graph6.pop_back();
    } else if (name == "BTh") {
      out.kind = FamilyKind::kBTh;
      keyword("T0");
      expect('=');
      out.base.push_back(spec());
      expect(';');
      out.branches.push_back(branch());
      while (accept(',')) out.branches.push_back(branch());
      expect(';');
      keyword("s");
      expect('=');
      out.params = {number()};
    } else {
      static const std::map<std::string, std::pair<FamilyKind, std::vector<std::string>>> named = {
          {"Tk", {FamilyKind::kStarlike, {"k", "s"}}},
          {"Tkl", {FamilyKind::kTkl, {"k", "s", "l"}}},
          {"Tk1k2l", {FamilyKind::kTk1k2l, {"k1", "k2", "s", "l"}}},
          {"Ckl", {FamilyKind::kCkl, {"g", "l"}}},
          {"B", {FamilyKind::kBicyclic, {"l", "k"}}},
          {"Theta", {FamilyKind::kTheta, {"a", "b", "c"}}},
      };
      const auto it = named.find(name);
      if (it == named.end()) fail("unknown family '" + name + "'");
      out.kind = it->second.first;
      out.params = named_params(it->second.second);
    }
    expect(')');
    return out;
  }

  void finish() {
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing text");
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("family spec: " + what + " at offset " + std::to_string(pos_) + " in '" +
                                std::string(text_) + "'");
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  std::string identifier() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  void keyword(std::string_view word) {
    if (identifier() != word) fail("expected '" + std::string(word) + "'");
  }

  std::size_t number() {
    skip_space();
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc()) fail("expected a number");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }

  std::vector<std::size_t> named_params(const std::vector<std::string>& names) {
    std::map<std::string, std::size_t> got;
    do {
      const std::string key = identifier();
      expect('=');
      if (std::find(names.begin(), names.end(), key) == names.end()) fail("unknown parameter '" + key + "'");
      if (!got.emplace(key, number()).second) fail("repeated parameter '" + key + "'");
    } while (accept(','));
    std::vector<std::size_t> out;
    for (const auto& n : names) {
      const auto it = got.find(n);
      if (it == got.end()) fail("missing parameter '" + n + "'");
      out.push_back(it->second);
    }
    return out;
  }

  BranchSpec branch() {
    const std::string name = identifier();
    BranchSpec b;
    if (name == "T")
      b.kind = BranchSpec::Kind::kT;
    else if (name == "C")
      b.kind = BranchSpec::Kind::kC;
    else
      fail("expected a T(k,l) or C(g,f) branch");
    expect('(');
    b.first = number();
    expect(',');
    b.second = number();
    expect(')');
    return b;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::size_t param(const FamilySpec& spec, std::size_t i, std::size_t count) {
  if (spec.params.size() != count) throw std::invalid_argument("family spec: wrong parameter count");
  return spec.params[i];
}

}  // namespace

FamilySpec FamilySpec::parse(std::string_view text) {
  SpecParser parser(text);
  FamilySpec out = parser.spec();
  parser.finish();
  return out;
}

std::string FamilySpec::to_string() const {
  std::ostringstream os;
  auto named = [&](const char* name, std::initializer_list<const char*> keys) {
    os << name << '(';
    std::size_t i = 0;
    for (const char* key : keys) {
      os << (i ? "," : "") << key << '=' << params.at(i);
      ++i;
    }
    os << ')';
  };
  switch (kind) {
    case FamilyKind::kPath: os << "P(" << params.at(0) << ')'; break;
    case FamilyKind::kCycle: os << "C(" << params.at(0) << ')'; break;
    case FamilyKind::kStarlike: named("Tk", {"k", "s"}); break;
    case FamilyKind::kTkl: named("Tkl", {"k", "s", "l"}); break;
    case FamilyKind::kTk1k2l: named("Tk1k2l", {"k1", "k2", "s", "l"}); break;
    case FamilyKind::kCkl: named("Ckl", {"g", "l"}); break;
    case FamilyKind::kBicyclic: named("B", {"l", "k"}); break;
    case FamilyKind::kTheta: named("Theta", {"a", "b", "c"}); break;
    case FamilyKind::kSpider:
      os << "S(";
      for (std::size_t i = 0; i < params.size(); ++i) os << (i ? "," : "") << params[i];
      os << ')';
      break;
    case FamilyKind::kGraph6: os << "G6(" << graph6 << ')'; break;
    case FamilyKind::kBTh:
      os << "BTh(T0=" << base.at(0).to_string() << ';';
      for (std::size_t i = 0; i < branches.size(); ++i)
        os << (i ? "," : "") << (branches[i].kind == BranchSpec::Kind::kT ? 'T' : 'C') << '('
           << branches[i].first << ',' << branches[i].second << ')';
      os << ";s=" << params.at(0) << ')';
      break;
  }
  return os.str();
}

Graph FamilySpec::build() const {
  switch (kind) {
    case FamilyKind::kPath: return path_graph(param(*this, 0, 1));
    case FamilyKind::kCycle: return cycle_graph(param(*this, 0, 1));
    case FamilyKind::kStarlike: return starlike(param(*this, 0, 2), params[1]);
    case FamilyKind::kTkl: return t_kl(param(*this, 0, 3), params[1], params[2]);
    case FamilyKind::kTk1k2l: return t_k1k2l(param(*this, 0, 4), params[1], params[2], params[3]);
    case FamilyKind::kCkl: return c_kl(param(*this, 0, 2), params[1]);
    case FamilyKind::kBicyclic: return bicyclic_b(param(*this, 0, 2), params[1]);
    case FamilyKind::kTheta: return theta(param(*this, 0, 3), params[1], params[2]);
    case FamilyKind::kSpider: return spider(params);
    case FamilyKind::kGraph6: return parse_graph6(graph6);
    case FamilyKind::kBTh:
      if (base.size() != 1) throw std::invalid_argument("family spec: BTh needs exactly one T0");
      return build_bth(base[0].build(), branches, param(*this, 0, 1));
  }
  throw std::logic_error("unreachable family kind");
}

}  // namespace eigmult
