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

#ifndef EIGMULT_ALGEBRAIC_HPP
#define EIGMULT_ALGEBRAIC_HPP

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "eigmult/graph.hpp"
#include "eigmult/poly.hpp"

namespace eigmult {

/// lambda = 2cos(p*pi/q).
struct CosAngle {
  std::size_t p = 0;
  std::size_t q = 1;
  friend bool operator==(const CosAngle&, const CosAngle&) = default;
};

/// Raised when arithmetic in Q[x]/(mu) finds a zero divisor, i.e. mu was reducible.
class ReducibleMinpolyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * A real algebraic number given by its monic irreducible minimal polynomial.
 *
 * Every quantity computed here (multiplicities, ranks) depends only on the
 * minimal polynomial, so all conjugates behave identically. The optional
 * angle records lambda = 2cos(p*pi/q) when known.
 */
class AlgebraicNumber {
 public:
  /// 2cos(p*pi/q); throws std::invalid_argument unless gcd(p,q) = 1 and 0 <= p <= q.
  static AlgebraicNumber from_angle(std::size_t p, std::size_t q);
  /// Checks monic, degree >= 1, and (for degree <= 4) irreducibility. Above degree 4
  /// irreducibility is taken on trust; ReducibleMinpolyError surfaces later if it fails.
  /// A matching angle with q <= 360 is attached when one exists.
  static AlgebraicNumber from_minpoly(IntPoly minpoly);

  const IntPoly& minpoly() const noexcept { return minpoly_; }
  const std::optional<CosAngle>& angle() const noexcept { return angle_; }
  const std::string& name() const noexcept { return name_; }
  std::size_t degree() const noexcept { return static_cast<std::size_t>(minpoly_.degree()); }

  bool is_plus_two() const { return minpoly_ == IntPoly{-2, 1}; }
  bool is_minus_two() const { return minpoly_ == IntPoly{2, 1}; }
  bool is_zero() const { return minpoly_ == IntPoly{0, 1}; }

  /// Numeric value of one root (the angle root when tagged); diagnostics only.
  std::optional<double> approx() const;

  friend bool operator==(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    return a.minpoly_ == b.minpoly_;
  }

 private:
  IntPoly minpoly_;
  std::optional<CosAngle> angle_;
  std::string name_;
};

/// The default probe set: 2cos(p*pi/q) for gcd(p,q) = 1, 1 <= p < q <= q_max, plus +2 and -2.
std::vector<AlgebraicNumber> default_lambda_set(std::size_t q_max = 9);
/// Same values with one representative per minimal polynomial (smallest q, then p).
std::vector<AlgebraicNumber> distinct_minpolys(std::span<const AlgebraicNumber> lambdas);

/// Q(lambda) = Q[x]/(mu) with mu monic irreducible.
class NumberField {
 public:
  explicit NumberField(const IntPoly& minpoly);
  std::size_t degree() const noexcept { return degree_; }
  const std::vector<mpq_class>& modulus() const noexcept { return modulus_; }
  /// x^k mod mu for k in [degree, 2*degree - 2], as coordinate vectors.
  const std::vector<std::vector<mpq_class>>& reduction_table() const noexcept { return table_; }

 private:
  std::size_t degree_;
  std::vector<mpq_class> modulus_;  // monic, lowest degree first
  std::vector<std::vector<mpq_class>> table_;
};

/// Element of Q(lambda) as rational coordinates over 1, x, ..., x^{d-1}.
class FieldElement {
 public:
  FieldElement(std::shared_ptr<const NumberField> field, std::vector<mpq_class> coords);
  static FieldElement zero(std::shared_ptr<const NumberField> field);
  static FieldElement integer(std::shared_ptr<const NumberField> field, long value);
  /// The class of x, i.e. lambda itself.
  static FieldElement generator(std::shared_ptr<const NumberField> field);

  bool is_zero() const;
  const std::vector<mpq_class>& coords() const noexcept { return coords_; }

  FieldElement& operator+=(const FieldElement& rhs);
  FieldElement& operator-=(const FieldElement& rhs);
  FieldElement operator*(const FieldElement& rhs) const;
  friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
  friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
  /// Multiplicative inverse via extended Euclid modulo mu.
  /// Throws ReducibleMinpolyError when a nonzero element has no inverse.
  FieldElement inverse() const;

  friend bool operator==(const FieldElement& a, const FieldElement& b) {
    return a.coords_ == b.coords_;
  }

 private:
  std::shared_ptr<const NumberField> field_;
  std::vector<mpq_class> coords_;
};

/// Dense matrix over one Q(lambda).
class FieldMatrix {
 public:
  FieldMatrix(std::shared_ptr<const NumberField> field, std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const FieldElement& at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  FieldElement& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }

  /// Rank by fraction-full Gaussian elimination, pivoting on the lowest column index.
  std::size_t rank() const;
  /// Basis of {v : M v = 0}; diagnostic use.
  std::vector<std::vector<FieldElement>> nullspace() const;

 private:
  std::vector<FieldElement> row_echelon(bool reduced, std::vector<std::size_t>& pivot_cols) const;

  std::shared_ptr<const NumberField> field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<FieldElement> data_;
};

/// A(G) - lambda I over Q(lambda), optionally followed by one indicator row per vertex of `zeroed`.
FieldMatrix shifted_adjacency(const Graph& g, const AlgebraicNumber& lambda,
                              std::span<const Vertex> zeroed = {});

/// Multiplicity of lambda as the power of its minimal polynomial in det(xI - A(G)).
std::size_t multiplicity(const Graph& g, const AlgebraicNumber& lambda);
/// Same, reusing a precomputed characteristic polynomial.
std::size_t multiplicity(const IntPoly& charpoly_of_g, const AlgebraicNumber& lambda);

/// n - rank(A(G) - lambda I) over Q(lambda).
std::size_t rank_multiplicity(const Graph& g, const AlgebraicNumber& lambda);

/// dim of the lambda-eigenspace restricted to vectors vanishing on `zeroed`.
std::size_t constrained_eigenspace_dim(const Graph& g, const AlgebraicNumber& lambda,
                                       std::span<const Vertex> zeroed);

/// True iff deleting u lowers the multiplicity of lambda by exactly one.
/// Throws PreconditionError when lambda is not an eigenvalue of G.
bool is_downer(const Graph& g, Vertex u, const AlgebraicNumber& lambda);

/// lambda is an eigenvalue of P_s (minimal-polynomial divisibility).
bool in_path_spectrum(const AlgebraicNumber& lambda, std::size_t s);
/// Congruence form for angle-tagged lambda = 2cos(i*pi/(m+1)): s = m (mod m+1).
std::optional<bool> in_path_spectrum_by_angle(const AlgebraicNumber& lambda, std::size_t s);

/// Oracle mismatch between multiplicity and rank_multiplicity.
class OracleMismatch : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Runs both oracles and throws OracleMismatch when they differ.
std::size_t checked_multiplicity(const Graph& g, const IntPoly& charpoly_of_g,
                                 const AlgebraicNumber& lambda);

}  // namespace eigmult

#endif  // EIGMULT_ALGEBRAIC_HPP
