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

#ifndef EIGMULT_FAMILIES_HPP
#define EIGMULT_FAMILIES_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "eigmult/graph.hpp"

namespace eigmult {

// Constructors mark semantic vertices through Graph labels. A vertex carrying
// several roles gets them joined by '+', e.g. "center+l-vertex".
inline constexpr std::string_view kCenter = "center";
inline constexpr std::string_view kLVertex = "l-vertex";
inline constexpr std::string_view kAttach = "attach";

/// First vertex whose label contains `mark` as one of its '+'-separated roles.
std::optional<Vertex> find_mark(const Graph& g, std::string_view mark);

Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);

/// k legs of order s around a center (k*s + 1 vertices). T_2 is P_{2s+1}.
Graph starlike(std::size_t k, std::size_t s);
/// Spider with one leg per entry of `legs` (a leg of order a has a vertices besides the center).
Graph spider(const std::vector<std::size_t>& legs);
/// Starlike tree with a path of order l glued at the center; l = 0 gives k disjoint copies of P_s.
Graph t_kl(std::size_t k, std::size_t s, std::size_t l);
/// Two starlike trees whose centers are the ends of a path of order l >= 2.
Graph t_k1k2l(std::size_t k1, std::size_t k2, std::size_t s, std::size_t l);
/// Cycle of order g with a path of order l glued at one cycle vertex (g + l - 1 vertices).
Graph c_kl(std::size_t g, std::size_t l);

/// H with a path of order l from u to the center of a new starlike tree T_k (l = 1 puts the center at u).
Graph attach_pendant_tk(const Graph& h, Vertex u, std::size_t l, std::size_t k, std::size_t s);
/// H with a path of order l from u to a vertex of a new cycle of order g.
Graph attach_pendant_cycle(const Graph& h, Vertex u, std::size_t l, std::size_t g);

/// Two cycles of orders l and k sharing one vertex.
Graph bicyclic_b(std::size_t l, std::size_t k);
/// Two branch vertices joined by three internally disjoint paths with a, b, c edges.
Graph theta(std::size_t a, std::size_t b, std::size_t c);

/// Branch hung from a pendant vertex of T0: T(k, l) puts k legs of order s on
/// the leaf, C(g, f) swaps the whole pendant path for a cycle of order g with a
/// tail of order f.
struct BranchSpec {
  enum class Kind { kT, kC };
  Kind kind = Kind::kT;
  std::size_t first = 0;   // k or g
  std::size_t second = 0;  // l or f
  friend bool operator==(const BranchSpec&, const BranchSpec&) = default;
};

/// Assigns branches to the pendant paths of T0 in increasing order of their leaf.
/// T-branches must name the order of the pendant path they extend.
Graph build_bth(const Graph& t0, const std::vector<BranchSpec>& branches, std::size_t s);

struct Deletion {
  Graph remainder;
  Vertex attach = 0;    // u, as a vertex of the original graph
  std::size_t l = 0;    // order of the connecting path, counting u and v
  std::size_t k = 0;    // legs removed (s-p) or 0
  std::size_t g = 0;    // cycle order removed (c-p) or 0
};

/// All ways to write G = H_u + P_l(u,v) + (T_k)_v with d_H(u) >= 2, up to isomorphism of H
/// and equal (l, k).
std::vector<Deletion> s_p_delete(const Graph& g, std::size_t s);
/// Same for G = H_u + P_l(u,v) + (C_g)_v.
std::vector<Deletion> c_p_delete(const Graph& g);

enum class FamilyKind {
  kPath,
  kCycle,
  kStarlike,
  kTkl,
  kTk1k2l,
  kCkl,
  kBicyclic,
  kTheta,
  kSpider,
  kGraph6,
  kBTh,
};

/// Parsed family description, e.g. "Tk(k=3,s=2)", "Ckl(g=6,l=4)",
/// "BTh(T0=S(2,2,2);T(2,2),T(2,2),C(6,4);s=3)".
struct FamilySpec {
  FamilyKind kind = FamilyKind::kPath;
  std::vector<std::size_t> params;  // positional, in the order of the text form
  std::string graph6;               // kGraph6 only
  std::vector<FamilySpec> base;     // kBTh: exactly one T0
  std::vector<BranchSpec> branches; // kBTh only

  static FamilySpec parse(std::string_view text);
  std::string to_string() const;
  Graph build() const;
};

}  // namespace eigmult

#endif  // EIGMULT_FAMILIES_HPP
