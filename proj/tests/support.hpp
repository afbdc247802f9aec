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

#ifndef EIGMULT_TESTS_SUPPORT_HPP
#define EIGMULT_TESTS_SUPPORT_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <set>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "eigmult/graph.hpp"

namespace eigmult::testing {

// Cyclic Jacobi sweep on the adjacency matrix. Independent of the exact code paths.
inline std::vector<double> numeric_spectrum(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<double> a(n * n, 0.0);
  for (const auto& [u, v] : g.edges()) a[u * n + v] = a[v * n + u] = 1.0;
  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a[i * n + j] * a[i * n + j];
    if (off < 1e-26) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a[p * n + q];
        if (std::abs(apq) < 1e-300) continue;
        const double theta = (a[q * n + q] - a[p * n + p]) / (2.0 * apq);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a[k * n + p];
          const double akq = a[k * n + q];
          a[k * n + p] = c * akp - s * akq;
          a[k * n + q] = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a[p * n + k];
          const double aqk = a[q * n + k];
          a[p * n + k] = c * apk - s * aqk;
          a[q * n + k] = s * apk + c * aqk;
        }
      }
  }
  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a[i * n + i];
  std::sort(ev.begin(), ev.end());
  return ev;
}

inline std::size_t numeric_multiplicity(const Graph& g, double lambda, double tol = 1e-6) {
  const auto ev = numeric_spectrum(g);
  return static_cast<std::size_t>(
      std::count_if(ev.begin(), ev.end(), [&](double x) { return std::abs(x - lambda) < tol; }));
}

// det(xI - A) by Faddeev-LeVerrier over the integers, lowest degree first.
inline std::vector<mpz_class> leverrier_charpoly(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<mpz_class> a(n * n, 0), m(n * n, 0), am(n * n);
  for (const auto& [u, v] : g.edges()) a[u * n + v] = a[v * n + u] = 1;
  std::vector<mpz_class> c(n + 1, 0);
  c[n] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    for (std::size_t i = 0; i < n; ++i) m[i * n + i] += c[n - k + 1];
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        mpz_class sum = 0;
        for (std::size_t t = 0; t < n; ++t)
          if (a[i * n + t] != 0) sum += m[t * n + j];
        am[i * n + j] = sum;
      }
    mpz_class trace = 0;
    for (std::size_t i = 0; i < n; ++i) trace += am[i * n + i];
    c[n - k] = -trace / static_cast<long>(k);
    m = am;
  }
  return c;
}

// Minimum adjacency bit string over all n! labelings.
inline std::string brute_force_code(const Graph& g) {
  const std::size_t n = g.order();
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string bits;
    for (std::size_t j = 1; j < n; ++j)
      for (std::size_t i = 0; i < j; ++i) bits.push_back(g.adjacent(perm[i], perm[j]) ? '1' : '0');
    if (best.empty() || bits < best) best = bits;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// Isomorphism classes of connected graphs (or trees) on n vertices by listing every
// edge subset of K_n and keeping the minimum code over all labelings.
inline std::size_t brute_force_class_count(std::size_t n, bool trees_only) {
  std::vector<Edge> all;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i) all.emplace_back(i, j);
  std::set<std::string> seen;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
    std::vector<Edge> edges;
    for (std::size_t b = 0; b < all.size(); ++b)
      if (mask >> b & 1) edges.push_back(all[b]);
    if (trees_only && edges.size() + 1 != n) continue;
    std::vector<Vertex> label(n);
    std::iota(label.begin(), label.end(), 0);
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& [a, b] : edges) {
        const Vertex m = std::min(label[a], label[b]);
        if (label[a] != m || label[b] != m) {
          label[a] = label[b] = m;
          changed = true;
        }
      }
    }
    if (std::any_of(label.begin(), label.end(), [](Vertex x) { return x != 0; })) continue;
    seen.insert(brute_force_code(Graph::from_edge_list(n, edges)));
  }
  return seen.size();
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex i = 0; i < n; ++i)
    for (Vertex j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph::from_edge_list(n, edges);
}

// Random tree plus a few extra edges; always connected.
inline Graph random_connected(std::mt19937_64& rng, std::size_t n, std::size_t extra) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace_back(std::uniform_int_distribution<Vertex>(0, v - 1)(rng), v);
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  for (std::size_t k = 0; k < extra && n > 2; ++k) {
    Vertex a = pick(rng), b = pick(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (std::find(edges.begin(), edges.end(), Edge{a, b}) == edges.end() &&
        std::find(edges.begin(), edges.end(), Edge{b, a}) == edges.end())
      edges.emplace_back(a, b);
  }
  return Graph::from_edge_list(n, edges);
}

inline std::vector<Vertex> random_permutation(std::mt19937_64& rng, std::size_t n) {
  std::vector<Vertex> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(v - 1, v);
  return Graph::from_edge_list(n, e);
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> e;
  for (Vertex v = 1; v < n; ++v) e.emplace_back(v - 1, v);
  e.emplace_back(n - 1, 0);
  return Graph::from_edge_list(n, e);
}

}  // namespace eigmult::testing

#endif  // EIGMULT_TESTS_SUPPORT_HPP
