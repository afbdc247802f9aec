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

#ifndef EIGMULT_POLY_HPP
#define EIGMULT_POLY_HPP

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "eigmult/graph.hpp"

namespace eigmult {

/// Dense polynomial with arbitrary-precision integer coefficients, lowest degree first.
/// The zero polynomial has no coefficients; otherwise the leading coefficient is nonzero.
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<mpz_class> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  static IntPoly constant(const mpz_class& c);
  static IntPoly x();
  /// c * x^k
  static IntPoly monomial(const mpz_class& c, std::size_t k);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  const std::vector<mpz_class>& coeffs() const noexcept { return coeffs_; }
  /// Coefficient of x^k (zero beyond the degree).
  mpz_class coeff(std::size_t k) const;
  const mpz_class& leading() const;

  mpz_class eval(const mpz_class& at) const;
  double eval(double at) const;
  IntPoly derivative() const;

  IntPoly& operator+=(const IntPoly& rhs);
  IntPoly& operator-=(const IntPoly& rhs);
  IntPoly& operator*=(const IntPoly& rhs);
  friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
  friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
  friend IntPoly operator*(IntPoly a, const IntPoly& b) { return a *= b; }
  IntPoly operator-() const;
  friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Human-readable form, e.g. "x^3 - 3x - 2".
  std::string to_string() const;
  /// Comma-separated coefficients, lowest degree first, e.g. "-2,-3,0,1".
  std::string to_coefficient_list() const;

 private:
  void normalize();
  std::vector<mpz_class> coeffs_;
};

IntPoly pow(const IntPoly& base, std::size_t exponent);

/// h with f = g*h over the integers, or nullopt when g does not divide f exactly.
/// Throws std::domain_error when g is zero.
std::optional<IntPoly> divexact(const IntPoly& f, const IntPoly& g);

/// det(xI - A(G)) by division-free (Berkowitz) evaluation over the integers.
IntPoly charpoly(const Graph& g);

/// f_{P_m} from f_{P_m} = x f_{P_{m-1}} - f_{P_{m-2}}, f_{P_0}=1, f_{P_1}=x. m >= 0.
IntPoly path_charpoly(std::size_t m);
/// f_{C_m} = f_{P_m} - f_{P_{m-2}} - 2, m >= 3.
IntPoly cycle_charpoly(std::size_t m);

/// n-th cyclotomic polynomial, n >= 1.
IntPoly cyclotomic(std::size_t n);

std::size_t euler_phi(std::size_t n);

/// Minimal polynomial of 2cos(2*pi/N) (the Psi_N with Phi_N(x) = x^{phi/2} Psi_N(x+1/x)).
IntPoly psi_from_cyclotomic(std::size_t order);

/// Minimal polynomial of 2cos(p*pi/q); requires q >= 1, 0 <= p <= q, gcd(p,q) = 1.
IntPoly cos_pi_minimal_poly(std::size_t p, std::size_t q);

/// Largest k with mu^k | f. mu must be monic of degree >= 1 and f nonzero.
std::size_t factor_multiplicity(const IntPoly& f, const IntPoly& mu);

/// Exact irreducibility over Q for monic polynomials of degree <= 4; nullopt above.
std::optional<bool> is_irreducible_small(const IntPoly& mu);

/// True iff mu divides f_{P_s}, i.e. the roots of mu are eigenvalues of P_s.
bool divides_path_charpoly(const IntPoly& mu, std::size_t s);

}  // namespace eigmult

#endif  // EIGMULT_POLY_HPP
