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
#include <random>

#include "eigmult/algebraic.hpp"
#include "support.hpp"

using namespace eigmult;
using eigmult::testing::cycle_graph;
using eigmult::testing::path_graph;

TEST_CASE("algebraic numbers from angles and minimal polynomials") {
  const auto one = AlgebraicNumber::from_angle(1, 3);
  CHECK(one.minpoly() == IntPoly{-1, 1});
  CHECK(one.name() == "2cos(1pi/3)");
  const auto golden = AlgebraicNumber::from_minpoly(IntPoly{-1, -1, 1});
  REQUIRE(golden.angle().has_value());
  CHECK(golden.angle()->q == 5);
  CHECK(AlgebraicNumber::from_angle(0, 1).is_plus_two());
  CHECK(AlgebraicNumber::from_angle(1, 1).is_minus_two());
  CHECK(AlgebraicNumber::from_angle(1, 1).name() == "-2");
  CHECK_THROWS_AS(AlgebraicNumber::from_angle(2, 4), std::invalid_argument);
  CHECK_THROWS_AS(AlgebraicNumber::from_minpoly(IntPoly{-1, 0, 1}), ReducibleMinpolyError);
  CHECK_THROWS(AlgebraicNumber::from_minpoly(IntPoly{-1, 2}));
  const auto untagged = AlgebraicNumber::from_minpoly(IntPoly{-3, 1});
  CHECK_FALSE(untagged.angle().has_value());
  CHECK(untagged.name() == "root[-3,1]");
}

TEST_CASE("default lambda set") {
  const auto set = default_lambda_set(8);
  CHECK(set.size() == 23);  // +-2 and 21 coprime pairs with q <= 8
  const auto distinct = distinct_minpolys(set);
  CHECK(distinct.size() < set.size());
  CHECK(default_lambda_set(9).size() == 29);
}

TEST_CASE("number field arithmetic") {
  auto field = std::make_shared<NumberField>(IntPoly{-1, -1, 1});
  const auto phi = FieldElement::generator(field);
  // phi^2 = phi + 1
  CHECK(phi * phi == phi + FieldElement::integer(field, 1));
  const auto inv = phi.inverse();
  CHECK(inv * phi == FieldElement::integer(field, 1));
  CHECK_THROWS(FieldElement::zero(field).inverse());
}

TEST_CASE("both multiplicity oracles on cycles") {
  const auto lam1 = AlgebraicNumber::from_angle(1, 3);
  CHECK(multiplicity(cycle_graph(6), lam1) == 2);
  CHECK(rank_multiplicity(cycle_graph(6), lam1) == 2);
  for (std::size_t n = 3; n <= 30; ++n) {
    for (std::size_t i = 1; 2 * i < n; ++i) {
      // 2cos(2 i pi / n) = 2cos(p pi / q) with p/q = 2i/n reduced.
      const std::size_t g = std::gcd(2 * i, n);
      const auto lam = AlgebraicNumber::from_angle(2 * i / g, n / g);
      CHECK(multiplicity(cycle_graph(n), lam) == 2);
      if (n <= 16) CHECK(rank_multiplicity(cycle_graph(n), lam) == 2);
    }
    CHECK(multiplicity(cycle_graph(n), AlgebraicNumber::from_angle(0, 1)) == 1);
    CHECK(multiplicity(cycle_graph(n), AlgebraicNumber::from_angle(1, 1)) == (n % 2 == 0 ? 1U : 0U));
  }
}

TEST_CASE("path eigenvalues are simple") {
  for (std::size_t n = 1; n <= 20; ++n)
    for (std::size_t j = 1; j <= n; ++j) {
      const std::size_t g = std::gcd(j, n + 1);
      const auto lam = AlgebraicNumber::from_angle(j / g, (n + 1) / g);
      CHECK(multiplicity(path_graph(n), lam) == 1);
      CHECK(in_path_spectrum(lam, n));
      CHECK(in_path_spectrum_by_angle(lam, n) == true);
    }
}

TEST_CASE("path spectrum membership by divisibility matches the congruence") {
  for (const auto& lam : default_lambda_set(12))
    for (std::size_t s = 1; s <= 30; ++s) {
      const auto by_angle = in_path_spectrum_by_angle(lam, s);
      REQUIRE(by_angle.has_value());
      CHECK(*by_angle == in_path_spectrum(lam, s));
    }
}

TEST_CASE("downer vertices") {
  // P_3 with lambda = 0: deleting the middle vertex raises m, deleting an end lowers it.
  const auto zero = AlgebraicNumber::from_angle(1, 2);
  const Graph p3 = path_graph(3);
  CHECK(is_downer(p3, 0, zero));
  CHECK_FALSE(is_downer(p3, 1, zero));
  CHECK_THROWS_AS(is_downer(path_graph(2), 0, zero), PreconditionError);
}

TEST_CASE("constrained eigenspace") {
  // C_6, lambda = 1: vanishing at one vertex leaves a 1-dimensional space.
  const auto lam = AlgebraicNumber::from_angle(1, 3);
  const std::vector<Vertex> zeroed{0};
  CHECK(constrained_eigenspace_dim(cycle_graph(6), lam, zeroed) == 1);
}

TEST_CASE("property: exact oracles agree with each other and with the numeric spectrum") {
  std::mt19937_64 rng(31);
  const auto lambdas = default_lambda_set(6);
  for (int trial = 0; trial < 80; ++trial) {
    const Graph g = eigmult::testing::random_graph(rng, 2 + trial % 9, 0.4);
    const IntPoly f = charpoly(g);
    for (const auto& lam : lambdas) {
      const std::size_t m = checked_multiplicity(g, f, lam);
      CHECK(m == rank_multiplicity(g, lam));
      CHECK(m == eigmult::testing::numeric_multiplicity(g, *lam.approx(), 1e-5));
    }
  }
}

TEST_CASE("property: interlacing, deleting a vertex changes m by at most one") {
  std::mt19937_64 rng(32);
  const auto lambdas = default_lambda_set(5);
  for (int trial = 0; trial < 60; ++trial) {
    const Graph g = eigmult::testing::random_connected(rng, 3 + trial % 8, trial % 3);
    for (const auto& lam : lambdas) {
      const long m = static_cast<long>(multiplicity(g, lam));
      for (Vertex v = 0; v < g.order(); ++v) {
        const long mv = static_cast<long>(multiplicity(induced_delete(g, {v}).graph, lam));
        CHECK(std::abs(m - mv) <= 1);
      }
    }
  }
}
