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

#include "eigmult/poly.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace eigmult {

IntPoly::IntPoly(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) { normalize(); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  coeffs_.reserve(coeffs.size());
  for (long c : coeffs) coeffs_.emplace_back(c);
  normalize();
}

IntPoly IntPoly::constant(const mpz_class& c) { return IntPoly(std::vector<mpz_class>{c}); }

IntPoly IntPoly::x() { return IntPoly{0, 1}; }

IntPoly IntPoly::monomial(const mpz_class& c, std::size_t k) {
  std::vector<mpz_class> v(k + 1, 0);
  v[k] = c;
  return IntPoly(std::move(v));
}

void IntPoly::normalize() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class IntPoly::coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : 0; }

const mpz_class& IntPoly::leading() const {
  if (coeffs_.empty()) throw std::domain_error("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

mpz_class IntPoly::eval(const mpz_class& at) const {
  mpz_class acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

double IntPoly::eval(double at) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + it->get_d();
  return acc;
}

IntPoly IntPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<mpz_class> out(coeffs_.size() - 1);
  for (std::size_t k = 1; k < coeffs_.size(); ++k) out[k - 1] = coeffs_[k] * static_cast<long>(k);
  return IntPoly(std::move(out));
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] += rhs.coeffs_[k];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size(), 0);
  for (std::size_t k = 0; k < rhs.coeffs_.size(); ++k) coeffs_[k] -= rhs.coeffs_[k];
  normalize();
  return *this;
}

IntPoly& IntPoly::operator*=(const IntPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<mpz_class> out(coeffs_.size() + rhs.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

IntPoly IntPoly::operator-() const {
  IntPoly out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

std::string IntPoly::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const mpz_class& c = coeffs_[i];
    if (c == 0) continue;
    mpz_class mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    if (mag != 1 || i == 0) os << mag.get_str();
    if (i >= 1) os << "x";
    if (i >= 2) os << "^" << i;
    first = false;
  }
  return os.str();
}

std::string IntPoly::to_coefficient_list() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) os << (i ? "," : "") << coeffs_[i].get_str();
  return os.str();
}

IntPoly pow(const IntPoly& base, std::size_t exponent) {
  IntPoly result{1};
  IntPoly b = base;
  while (exponent > 0) {
    if (exponent & 1U) result *= b;
    exponent >>= 1U;
    if (exponent) b *= b;
  }
  return result;
}

std::optional<IntPoly> divexact(const IntPoly& f, const IntPoly& g) {
  if (g.is_zero()) throw std::domain_error("divexact: division by the zero polynomial");
  if (f.is_zero()) return IntPoly{};
  if (f.degree() < g.degree()) return std::nullopt;
  std::vector<mpz_class> rem = f.coeffs();
  const auto& gc = g.coeffs();
  const std::size_t dg = gc.size() - 1;
  std::vector<mpz_class> quot(rem.size() - dg, 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const mpz_class& top = rem[k + dg];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), gc[dg].get_mpz_t())) return std::nullopt;
    quot[k] = top / gc[dg];
    for (std::size_t j = 0; j <= dg; ++j) rem[k + j] -= quot[k] * gc[j];
  }
  for (const auto& r : rem)
    if (r != 0) return std::nullopt;
  return IntPoly(std::move(quot));
}

IntPoly charpoly(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return IntPoly{1};
  // Berkowitz: the coefficients of det(xI - A_r) for the leading r x r blocks are
  // built up by multiplying a lower-triangular Toeplitz matrix into the previous
  // vector (highest degree first). All entries stay integral.
  std::vector<mpz_class> vect{1, 0};  // x - a_00, and a_00 = 0 for simple graphs
  for (std::size_t r = 1; r < n; ++r) {
    // col = [1, -a_rr, -R C, -R A C, ..., -R A^{r-1} C] with R row r, C column r of A_r.
    std::vector<mpz_class> col(r + 2, 0);
    col[0] = 1;
    col[1] = 0;
    std::vector<mpz_class> v(r, 0);  // v = A_r^k C
    for (Vertex i = 0; i < r; ++i) v[i] = g.adjacent(i, r) ? 1 : 0;
    for (std::size_t k = 0; k < r; ++k) {
      mpz_class dot = 0;
      for (Vertex i = 0; i < r; ++i)
        if (g.adjacent(r, i)) dot += v[i];
      col[k + 2] = -dot;
      if (k + 1 < r) {
        std::vector<mpz_class> next(r, 0);
        for (Vertex i = 0; i < r; ++i)
          for (Vertex j : g.neighbors(i)) {
            if (j >= r) break;
            next[i] += v[j];
          }
        v = std::move(next);
      }
    }
    std::vector<mpz_class> out(r + 2, 0);
    for (std::size_t i = 0; i < r + 2; ++i)
      for (std::size_t j = 0; j <= std::min(i, r); ++j) out[i] += col[i - j] * vect[j];
    vect = std::move(out);
  }
  std::reverse(vect.begin(), vect.end());
  return IntPoly(std::move(vect));
}

IntPoly path_charpoly(std::size_t m) {
  IntPoly prev{1};
  if (m == 0) return prev;
  IntPoly cur = IntPoly::x();
  for (std::size_t k = 2; k <= m; ++k) {
    IntPoly next = IntPoly::x() * cur - prev;
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

IntPoly cycle_charpoly(std::size_t m) {
  if (m < 3) throw std::domain_error("cycle_charpoly: cycle order must be at least 3");
  return path_charpoly(m) - path_charpoly(m - 2) - IntPoly{2};
}

IntPoly cyclotomic(std::size_t n) {
  if (n == 0) throw std::domain_error("cyclotomic: n must be positive");
  std::map<std::size_t, IntPoly> memo;
  std::function<IntPoly(std::size_t)> phi = [&](std::size_t k) -> IntPoly {
    if (auto it = memo.find(k); it != memo.end()) return it->second;
    IntPoly acc = IntPoly::monomial(1, k) - IntPoly{1};
    for (std::size_t d = 1; d < k; ++d) {
      if (k % d != 0) continue;
      auto q = divexact(acc, phi(d));
      if (!q) throw std::logic_error("cyclotomic: inexact division");
      acc = std::move(*q);
    }
    memo.emplace(k, acc);
    return acc;
  };
  return phi(n);
}

std::size_t euler_phi(std::size_t n) {
  std::size_t result = n;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

IntPoly psi_from_cyclotomic(std::size_t order) {
  if (order == 0) throw std::domain_error("psi_from_cyclotomic: order must be positive");
  if (order == 1) return IntPoly{-2, 1};
  if (order == 2) return IntPoly{2, 1};
  const IntPoly phi = cyclotomic(order);
  const std::size_t half = static_cast<std::size_t>(phi.degree()) / 2;
  // Peel off psi_j * x^half (x + 1/x)^j from the top; the term for j has top degree half + j.
  std::vector<mpz_class> residual = phi.coeffs();
  std::vector<mpz_class> psi(half + 1, 0);
  for (std::size_t j = half + 1; j-- > 0;) {
    psi[j] = residual[half + j];
    if (psi[j] == 0) continue;
    mpz_class binom = 1;
    for (std::size_t k = 0; k <= j; ++k) {
      residual[half + j - 2 * k] -= psi[j] * binom;
      binom = binom * static_cast<long>(j - k) / static_cast<long>(k + 1);
    }
  }
  for (const auto& r : residual)
    if (r != 0) throw std::logic_error("psi_from_cyclotomic: cyclotomic polynomial not palindromic");
  return IntPoly(std::move(psi));
}

IntPoly cos_pi_minimal_poly(std::size_t p, std::size_t q) {
  if (q == 0 || p > q) throw std::invalid_argument("cos_pi_minimal_poly: need q >= 1 and 0 <= p <= q");
  if (std::gcd(p, q) != 1) {
    std::ostringstream msg;
    msg << "cos_pi_minimal_poly: gcd(" << p << "," << q << ") != 1";
    throw std::invalid_argument(msg.str());
  }
  return psi_from_cyclotomic(p % 2 == 1 ? 2 * q : q);
}

std::size_t factor_multiplicity(const IntPoly& f, const IntPoly& mu) {
  if (mu.degree() < 1) throw std::invalid_argument("factor_multiplicity: mu must be non-constant");
  if (!mu.is_monic()) throw std::invalid_argument("factor_multiplicity: mu must be monic");
  if (f.is_zero()) throw std::invalid_argument("factor_multiplicity: f is the zero polynomial");
  std::size_t k = 0;
  IntPoly rest = f;
  while (rest.degree() >= mu.degree()) {
    auto q = divexact(rest, mu);
    if (!q) break;
    rest = std::move(*q);
    ++k;
  }
  return k;
}

namespace {

std::vector<mpz_class> divisors_signed(const mpz_class& c) {
  std::vector<mpz_class> out;
  mpz_class m = abs(c);
  for (mpz_class d = 1; d * d <= m; ++d) {
    if (m % d != 0) continue;
    out.push_back(d);
    out.push_back(-d);
    mpz_class e = m / d;
    if (e != d) {
      out.push_back(e);
      out.push_back(-e);
    }
  }
  return out;
}

bool has_integer_root(const IntPoly& f) {
  if (f.coeff(0) == 0) return true;
  for (const auto& d : divisors_signed(f.coeff(0)))
    if (f.eval(d) == 0) return true;
  return false;
}

}  // namespace

std::optional<bool> is_irreducible_small(const IntPoly& mu) {
  if (!mu.is_monic() || mu.degree() < 1)
    throw std::invalid_argument("is_irreducible_small: expected a monic non-constant polynomial");
  const long d = mu.degree();
  if (d == 1) return true;
  if (d > 4) return std::nullopt;
  if (has_integer_root(mu)) return false;
  if (d <= 3) return true;
  // Degree 4 without linear factors: reducible iff it splits into two monic quadratics
  // (x^2 + a x + b)(x^2 + c x + e) with b e = c0, a + c = c3, b + e + a c = c2, a e + b c = c1.
  const mpz_class c0 = mu.coeff(0), c1 = mu.coeff(1), c2 = mu.coeff(2), c3 = mu.coeff(3);
  for (const auto& b : divisors_signed(c0)) {
    const mpz_class e = c0 / b;
    if (e != b) {
      const mpz_class num = c1 - c3 * b;
      const mpz_class den = e - b;
      if (num % den != 0) continue;
      const mpz_class a = num / den;
      const mpz_class c = c3 - a;
      if (b + e + a * c == c2) return false;
    } else {
      if (c1 != c3 * b) continue;
      // a + c = c3, a c = c2 - 2b: integer roots of t^2 - c3 t + (c2 - 2b).
      const mpz_class disc = c3 * c3 - 4 * (c2 - 2 * b);
      if (disc < 0) continue;
      if (mpz_perfect_square_p(disc.get_mpz_t()) == 0) continue;
      const mpz_class root = sqrt(disc);
      if ((c3 + root) % 2 == 0) return false;
    }
  }
  return true;
}

bool divides_path_charpoly(const IntPoly& mu, std::size_t s) {
  if (s == 0) return false;
  return divexact(path_charpoly(s), mu).has_value();
}

}  // namespace eigmult
