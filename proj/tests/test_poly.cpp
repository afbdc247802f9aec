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

#include <cmath>
#include <numbers>
#include <random>

#include "eigmult/poly.hpp"
#include "support.hpp"

using namespace eigmult;
using eigmult::testing::cycle_graph;
using eigmult::testing::path_graph;

TEST_CASE("characteristic polynomials of small graphs") {
  CHECK(charpoly(cycle_graph(3)) == IntPoly{-2, -3, 0, 1});
  CHECK(charpoly(path_graph(3)) == IntPoly{0, -2, 0, 1});
  CHECK(charpoly(Graph::from_edge_list(1, {})) == IntPoly{0, 1});
  // K_4: (x-3)(x+1)^3
  const Graph k4 = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(charpoly(k4) == IntPoly{-3, 1} * pow(IntPoly{1, 1}, 3));
  CHECK(charpoly(cycle_graph(3)).to_string() == "x^3 - 3x - 2");
}

TEST_CASE("path and cycle recurrences match the generic charpoly") {
  for (std::size_t m = 1; m <= 40; ++m) CHECK(path_charpoly(m) == charpoly(path_graph(m)));
  for (std::size_t m = 3; m <= 40; ++m) CHECK(cycle_charpoly(m) == charpoly(cycle_graph(m)));
  CHECK_THROWS_AS(cycle_charpoly(2), std::domain_error);
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(cyclotomic(1) == IntPoly{-1, 1});
  CHECK(cyclotomic(12) == IntPoly{1, 0, -1, 0, 1});
  CHECK(cyclotomic(15).degree() == 8);
  // prod_{d | n} Phi_d = x^n - 1
  for (std::size_t n = 1; n <= 30; ++n) {
    IntPoly prod{1};
    for (std::size_t d = 1; d <= n; ++d)
      if (n % d == 0) prod *= cyclotomic(d);
    CHECK(prod == IntPoly::monomial(1, n) - IntPoly{1});
    CHECK(cyclotomic(n).degree() == static_cast<long>(euler_phi(n)));
  }
}

TEST_CASE("minimal polynomials of 2cos(p pi / q)") {
  CHECK(cos_pi_minimal_poly(1, 5) == IntPoly{-1, -1, 1});
  CHECK(cos_pi_minimal_poly(1, 3) == IntPoly{-1, 1});
  CHECK(cos_pi_minimal_poly(1, 2) == IntPoly{0, 1});
  CHECK(cos_pi_minimal_poly(0, 1) == IntPoly{-2, 1});
  CHECK(cos_pi_minimal_poly(1, 1) == IntPoly{2, 1});
  CHECK(cos_pi_minimal_poly(1, 4) == IntPoly{-2, 0, 1});
  for (std::size_t q = 2; q <= 30; ++q)
    for (std::size_t p = 1; p < q; ++p) {
      if (std::gcd(p, q) != 1) continue;
      const IntPoly mu = cos_pi_minimal_poly(p, q);
      CHECK(mu.is_monic());
      const double x = 2.0 * std::cos(static_cast<double>(p) * std::numbers::pi / static_cast<double>(q));
      CHECK(std::abs(mu.eval(x)) < 1e-7);
      const std::size_t order = p % 2 ? 2 * q : q;
      CHECK(mu.degree() == static_cast<long>(euler_phi(order) / 2));
    }
}

TEST_CASE("factor multiplicity") {
  CHECK(factor_multiplicity(charpoly(cycle_graph(6)), IntPoly{-1, 1}) == 2);
  CHECK(factor_multiplicity(charpoly(cycle_graph(6)), IntPoly{-2, 1}) == 1);
  CHECK(factor_multiplicity(pow(IntPoly{-1, -1, 1}, 4) * IntPoly{3, 1}, IntPoly{-1, -1, 1}) == 4);
  CHECK(factor_multiplicity(IntPoly{5}, IntPoly{0, 1}) == 0);
}

TEST_CASE("irreducibility for small degrees") {
  CHECK(is_irreducible_small(IntPoly{-1, -1, 1}) == true);
  CHECK(is_irreducible_small(IntPoly{-1, 0, 1}) == false);
  CHECK(is_irreducible_small(IntPoly{1, 0, -1, 0, 1}) == true);
  CHECK(is_irreducible_small(IntPoly{1, 0, 2, 0, 1}) == false);  // (x^2+1)^2
  CHECK(is_irreducible_small(IntPoly{4, 0, 0, 0, 1}) == false);  // (x^2-2x+2)(x^2+2x+2)
  CHECK(!is_irreducible_small(IntPoly{1, 1, 1, 1, 1, 1}).has_value());
}

TEST_CASE("divexact and path spectrum divisibility") {
  const auto h = divexact(charpoly(cycle_graph(6)), IntPoly{-2, 1});
  REQUIRE(h.has_value());
  CHECK(*h * IntPoly{-2, 1} == charpoly(cycle_graph(6)));
  CHECK_FALSE(divexact(IntPoly{1, 1}, IntPoly{0, 1}).has_value());
  CHECK_THROWS_AS(divexact(IntPoly{1}, IntPoly{}), std::domain_error);
  CHECK(divides_path_charpoly(IntPoly{-1, 1}, 2));
  CHECK(divides_path_charpoly(IntPoly{-1, 1}, 5));
  CHECK_FALSE(divides_path_charpoly(IntPoly{-1, 1}, 3));
}

TEST_CASE("property: charpoly coefficients encode edge and triangle counts") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 3 + trial % 10;
    const Graph g = eigmult::testing::random_graph(rng, n, 0.4);
    const IntPoly f = charpoly(g);
    CHECK(f.degree() == static_cast<long>(n));
    CHECK(f.coeff(n - 1) == 0);
    CHECK(f.coeff(n - 2) == -static_cast<long>(g.size()));
    long triangles = 0;
    for (Vertex a = 0; a < n; ++a)
      for (Vertex b = a + 1; b < n; ++b)
        for (Vertex c = b + 1; c < n; ++c)
          triangles += g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c);
    CHECK(f.coeff(n - 3) == -2 * triangles);
    CHECK(charpoly(relabel(g, eigmult::testing::random_permutation(rng, n))) == f);
  }
}

TEST_CASE("property: charpoly agrees with the numeric spectrum") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = eigmult::testing::random_graph(rng, 2 + trial % 9, 0.5);
    const IntPoly f = charpoly(g);
    for (double ev : eigmult::testing::numeric_spectrum(g)) {
      double scale = 1.0;
      for (const auto& c : f.coeffs()) scale += std::abs(c.get_d()) * std::pow(std::abs(ev) + 1.0, 10);
      CHECK(std::abs(f.eval(ev)) < 1e-8 * scale);
    }
  }
}

TEST_CASE("charpoly matches Faddeev-LeVerrier on random graphs") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 120; ++trial) {
    const Graph g = eigmult::testing::random_graph(rng, 1 + trial % 14, 0.15 + 0.05 * (trial % 10));
    const auto reference = eigmult::testing::leverrier_charpoly(g);
    const IntPoly ours = charpoly(g);
    CHECK(ours.coeffs() == reference);
  }
}
