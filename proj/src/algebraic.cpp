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

#include "eigmult/algebraic.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

namespace eigmult {

namespace {

std::string angle_name(const CosAngle& a) {
  if (a.p == 0) return "2";
  if (a.p == a.q) return "-2";
  std::ostringstream os;
  os << "2cos(" << a.p << "pi/" << a.q << ")";
  return os.str();
}

using QPoly = std::vector<mpq_class>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder of a / b over Q; b nonzero.
std::pair<QPoly, QPoly> divmod(QPoly a, const QPoly& b) {
  trim(a);
  if (a.size() < b.size()) return {{}, a};
  QPoly quot(a.size() - b.size() + 1, 0);
  const mpq_class& lead = b.back();
  for (std::size_t k = quot.size(); k-- > 0;) {
    const mpq_class top = a[k + b.size() - 1];
    if (top == 0) continue;
    quot[k] = top / lead;
    for (std::size_t j = 0; j < b.size(); ++j) a[k + j] -= quot[k] * b[j];
  }
  trim(a);
  trim(quot);
  return {quot, a};
}

QPoly sub_mul(const QPoly& a, const QPoly& q, const QPoly& b) {
  QPoly out = a;
  if (!q.empty() && !b.empty()) {
    if (out.size() < q.size() + b.size() - 1) out.resize(q.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < q.size(); ++i)
      for (std::size_t j = 0; j < b.size(); ++j) out[i + j] -= q[i] * b[j];
  }
  trim(out);
  return out;
}

}  // namespace

AlgebraicNumber AlgebraicNumber::from_angle(std::size_t p, std::size_t q) {
  AlgebraicNumber out;
  out.minpoly_ = cos_pi_minimal_poly(p, q);
  out.angle_ = CosAngle{p, q};
  out.name_ = angle_name(*out.angle_);
  return out;
}

AlgebraicNumber AlgebraicNumber::from_minpoly(IntPoly minpoly) {
  if (minpoly.degree() < 1) throw std::invalid_argument("minimal polynomial must be non-constant");
  if (!minpoly.is_monic()) throw std::invalid_argument("minimal polynomial must be monic");
  if (auto irreducible = is_irreducible_small(minpoly); irreducible && !*irreducible)
    throw ReducibleMinpolyError("minimal polynomial " + minpoly.to_string() + " is reducible");
  AlgebraicNumber out;
  out.minpoly_ = std::move(minpoly);
  out.name_ = "root[" + out.minpoly_.to_coefficient_list() + "]";
  const std::size_t d = out.degree();
  const std::size_t bound = 8 * d * d + 2;
  for (std::size_t order = 1; order <= bound && order <= 2 * 360; ++order) {
    const std::size_t half = order <= 2 ? 1 : euler_phi(order) / 2;
    if (half != d) continue;
    if (psi_from_cyclotomic(order) != out.minpoly_) continue;
    // Order 2q with p odd, or order q with p even; pick the smallest such p.
    if (order == 1)
      out.angle_ = CosAngle{0, 1};
    else if (order % 2 == 0)
      out.angle_ = CosAngle{1, order / 2};
    else
      out.angle_ = CosAngle{2, order};
    out.name_ = angle_name(*out.angle_);
    break;
  }
  return out;
}

std::optional<double> AlgebraicNumber::approx() const {
  if (angle_)
    return 2.0 * std::cos(std::numbers::pi * static_cast<double>(angle_->p) /
                          static_cast<double>(angle_->q));
  if (degree() == 1) return -minpoly_.coeff(0).get_d();
  return std::nullopt;
}

std::vector<AlgebraicNumber> default_lambda_set(std::size_t q_max) {
  std::vector<AlgebraicNumber> out;
  out.push_back(AlgebraicNumber::from_angle(0, 1));
  out.push_back(AlgebraicNumber::from_angle(1, 1));
  for (std::size_t q = 2; q <= q_max; ++q)
    for (std::size_t p = 1; p < q; ++p)
      if (std::gcd(p, q) == 1) out.push_back(AlgebraicNumber::from_angle(p, q));
  return out;
}

std::vector<AlgebraicNumber> distinct_minpolys(std::span<const AlgebraicNumber> lambdas) {
  std::vector<AlgebraicNumber> out;
  for (const auto& l : lambdas) {
    bool seen = false;
    for (const auto& o : out)
      if (o == l) {
        seen = true;
        break;
      }
    if (!seen) out.push_back(l);
  }
  return out;
}

NumberField::NumberField(const IntPoly& minpoly) {
  if (minpoly.degree() < 1 || !minpoly.is_monic())
    throw std::invalid_argument("NumberField: modulus must be monic and non-constant");
  degree_ = static_cast<std::size_t>(minpoly.degree());
  for (const auto& c : minpoly.coeffs()) modulus_.emplace_back(c);
  // x^d = -(m_0 + m_1 x + ... + m_{d-1} x^{d-1})
  std::vector<mpq_class> power(degree_);
  for (std::size_t i = 0; i < degree_; ++i) power[i] = -modulus_[i];
  for (std::size_t k = degree_; k + 1 < 2 * degree_; ++k) {
    table_.push_back(power);
    std::vector<mpq_class> next(degree_, 0);
    const mpq_class top = power[degree_ - 1];
    for (std::size_t i = degree_ - 1; i > 0; --i) next[i] = power[i - 1];
    for (std::size_t i = 0; i < degree_; ++i) next[i] -= top * modulus_[i];
    power = std::move(next);
  }
}

FieldElement::FieldElement(std::shared_ptr<const NumberField> field, std::vector<mpq_class> coords)
    : field_(std::move(field)), coords_(std::move(coords)) {
  if (coords_.size() != field_->degree())
    throw std::invalid_argument("FieldElement: coordinate count does not match field degree");
}

FieldElement FieldElement::zero(std::shared_ptr<const NumberField> field) {
  const std::size_t d = field->degree();
  return FieldElement(std::move(field), std::vector<mpq_class>(d, 0));
}

FieldElement FieldElement::integer(std::shared_ptr<const NumberField> field, long value) {
  FieldElement out = zero(std::move(field));
  out.coords_[0] = value;
  return out;
}

FieldElement FieldElement::generator(std::shared_ptr<const NumberField> field) {
  FieldElement out = zero(field);
  if (field->degree() == 1)
    out.coords_[0] = -field->modulus()[0];
  else
    out.coords_[1] = 1;
  return out;
}

bool FieldElement::is_zero() const {
  for (const auto& c : coords_)
    if (c != 0) return false;
  return true;
}

FieldElement& FieldElement::operator+=(const FieldElement& rhs) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] += rhs.coords_[i];
  return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& rhs) {
  for (std::size_t i = 0; i < coords_.size(); ++i) coords_[i] -= rhs.coords_[i];
  return *this;
}

FieldElement FieldElement::operator*(const FieldElement& rhs) const {
  const std::size_t d = coords_.size();
  if (d == 1) return FieldElement(field_, {coords_[0] * rhs.coords_[0]});
  std::vector<mpq_class> prod(2 * d - 1, 0);
  for (std::size_t i = 0; i < d; ++i) {
    if (coords_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (rhs.coords_[j] != 0) prod[i + j] += coords_[i] * rhs.coords_[j];
  }
  std::vector<mpq_class> out(prod.begin(), prod.begin() + static_cast<long>(d));
  const auto& table = field_->reduction_table();
  for (std::size_t k = d; k < prod.size(); ++k) {
    if (prod[k] == 0) continue;
    for (std::size_t i = 0; i < d; ++i) out[i] += prod[k] * table[k - d][i];
  }
  return FieldElement(field_, std::move(out));
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw std::domain_error("FieldElement::inverse: zero has no inverse");
  const std::size_t d = coords_.size();
  if (d == 1) return FieldElement(field_, {1 / coords_[0]});
  QPoly r0 = field_->modulus();
  QPoly r1 = coords_;
  trim(r1);
  QPoly s0;       // coefficient of the element in r0
  QPoly s1{1};    // coefficient of the element in r1
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    QPoly s2 = sub_mul(s0, q, s1);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  if (r0.size() != 1)
    throw ReducibleMinpolyError("nonzero element without inverse: minimal polynomial is reducible");
  const mpq_class scale = 1 / r0[0];
  auto [unused, reduced] = divmod(s0, field_->modulus());
  (void)unused;
  std::vector<mpq_class> out(d, 0);
  for (std::size_t i = 0; i < reduced.size(); ++i) out[i] = reduced[i] * scale;
  return FieldElement(field_, std::move(out));
}

FieldMatrix::FieldMatrix(std::shared_ptr<const NumberField> field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), cols_(cols), data_(rows * cols, FieldElement::zero(field)) {}

std::vector<FieldElement> FieldMatrix::row_echelon(bool reduced,
                                                   std::vector<std::size_t>& pivot_cols) const {
  std::vector<FieldElement> m = data_;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols_ && r < rows_; ++c) {
    std::size_t pivot = r;
    while (pivot < rows_ && m[pivot * cols_ + c].is_zero()) ++pivot;
    if (pivot == rows_) continue;
    if (pivot != r)
      for (std::size_t j = 0; j < cols_; ++j) std::swap(m[r * cols_ + j], m[pivot * cols_ + j]);
    const FieldElement inv = m[r * cols_ + c].inverse();
    for (std::size_t j = c; j < cols_; ++j)
      if (!m[r * cols_ + j].is_zero()) m[r * cols_ + j] = m[r * cols_ + j] * inv;
    for (std::size_t i = reduced ? 0 : r + 1; i < rows_; ++i) {
      if (i == r) continue;
      const FieldElement factor = m[i * cols_ + c];
      if (factor.is_zero()) continue;
      for (std::size_t j = c; j < cols_; ++j)
        if (!m[r * cols_ + j].is_zero()) m[i * cols_ + j] -= factor * m[r * cols_ + j];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  return m;
}

std::size_t FieldMatrix::rank() const {
  std::vector<std::size_t> pivots;
  row_echelon(false, pivots);
  return pivots.size();
}

std::vector<std::vector<FieldElement>> FieldMatrix::nullspace() const {
  std::vector<std::size_t> pivots;
  const auto rref = row_echelon(true, pivots);
  std::vector<bool> is_pivot(cols_, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<FieldElement>> basis;
  for (std::size_t free = 0; free < cols_; ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldElement> v(cols_, FieldElement::zero(field_));
    v[free] = FieldElement::integer(field_, 1);
    for (std::size_t k = 0; k < pivots.size(); ++k)
      v[pivots[k]] = FieldElement::zero(field_) - rref[k * cols_ + free];
    basis.push_back(std::move(v));
  }
  return basis;
}

FieldMatrix shifted_adjacency(const Graph& g, const AlgebraicNumber& lambda,
                              std::span<const Vertex> zeroed) {
  auto field = std::make_shared<const NumberField>(lambda.minpoly());
  const std::size_t n = g.order();
  FieldMatrix m(field, n + zeroed.size(), n);
  const FieldElement one = FieldElement::integer(field, 1);
  const FieldElement minus_lambda = FieldElement::zero(field) - FieldElement::generator(field);
  for (Vertex v = 0; v < n; ++v) {
    m.at(v, v) = minus_lambda;
    for (Vertex w : g.neighbors(v)) m.at(v, w) = one;
  }
  for (std::size_t k = 0; k < zeroed.size(); ++k) {
    if (zeroed[k] >= n) throw GraphError("constrained vertex out of range");
    m.at(n + k, zeroed[k]) = one;
  }
  return m;
}

std::size_t multiplicity(const IntPoly& charpoly_of_g, const AlgebraicNumber& lambda) {
  return factor_multiplicity(charpoly_of_g, lambda.minpoly());
}

std::size_t multiplicity(const Graph& g, const AlgebraicNumber& lambda) {
  return multiplicity(charpoly(g), lambda);
}

std::size_t rank_multiplicity(const Graph& g, const AlgebraicNumber& lambda) {
  if (g.order() == 0) return 0;
  return g.order() - shifted_adjacency(g, lambda).rank();
}

std::size_t constrained_eigenspace_dim(const Graph& g, const AlgebraicNumber& lambda,
                                       std::span<const Vertex> zeroed) {
  if (g.order() == 0) return 0;
  return g.order() - shifted_adjacency(g, lambda, zeroed).rank();
}

bool is_downer(const Graph& g, Vertex u, const AlgebraicNumber& lambda) {
  if (u >= g.order()) throw GraphError("is_downer: vertex out of range");
  const std::size_t m = multiplicity(g, lambda);
  if (m == 0)
    throw PreconditionError("is_downer: " + lambda.name() + " is not an eigenvalue of the graph");
  const Graph rest = induced_delete(g, {u}).graph;
  return multiplicity(rest, lambda) + 1 == m;
}

bool in_path_spectrum(const AlgebraicNumber& lambda, std::size_t s) {
  return divides_path_charpoly(lambda.minpoly(), s);
}

std::optional<bool> in_path_spectrum_by_angle(const AlgebraicNumber& lambda, std::size_t s) {
  if (!lambda.angle()) return std::nullopt;
  const auto [p, q] = *lambda.angle();
  if (p == 0 || p == q) return false;
  return (s + 1) % q == 0;
}

std::size_t checked_multiplicity(const Graph& g, const IntPoly& charpoly_of_g,
                                 const AlgebraicNumber& lambda) {
  const std::size_t by_poly = multiplicity(charpoly_of_g, lambda);
  const std::size_t by_rank = rank_multiplicity(g, lambda);
  if (by_poly != by_rank) {
    std::ostringstream msg;
    msg << "oracle disagreement for " << lambda.name() << ": characteristic polynomial gives "
        << by_poly << ", rank gives " << by_rank;
    throw OracleMismatch(msg.str());
  }
  return by_poly;
}

}  // namespace eigmult
