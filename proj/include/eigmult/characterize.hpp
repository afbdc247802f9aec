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

#ifndef EIGMULT_CHARACTERIZE_HPP
#define EIGMULT_CHARACTERIZE_HPP

#include <cstddef>
#include <optional>
#include <string>

#include <json.hpp>

#include "eigmult/algebraic.hpp"
#include "eigmult/graph.hpp"

namespace eigmult {

enum class VerdictStatus { kEvaluated, kOutOfHypothesis, kError };

std::string to_string(VerdictStatus status);

/**
 * Outcome of one structural check against the computed multiplicity m.
 *
 * `target` is the value of m the check is about (bound for the upper-bound
 * check, bound - 1 for the optimality checks, 2c + p - 1 for the pendant-count
 * check). `extremal` is m == target and `predicted` names the structural form
 * that forces it ("none" when no form applies). `agree` holds when extremal
 * and predicted != "none" coincide and no bound was exceeded.
 */
struct Verdict {
  std::string check;
  VerdictStatus status = VerdictStatus::kEvaluated;
  std::string reason;
  std::size_t m = 0;
  std::size_t c = 0;
  std::size_t q_s = 0;
  std::size_t p = 0;
  std::size_t bound = 0;  // 2c + q_s
  long target = 0;
  bool optimal = false;   // m == bound - 1
  bool extremal = false;  // m == target
  bool bound_ok = true;
  std::string predicted = "none";
  nlohmann::json witness = nlohmann::json::object();
  bool agree = true;

  bool evaluated() const noexcept { return status == VerdictStatus::kEvaluated; }
};

nlohmann::json to_json(const Verdict& v);

/// Reason why (G, s, lambda) is outside the common hypotheses (connected, in G_s,
/// lambda not an eigenvalue of P_s), or nullopt when all hold.
std::optional<std::string> common_hypothesis_failure(const Graph& g, std::size_t s, const AlgebraicNumber& lambda);

/// Upper bound m <= 2c + q_s, with equality exactly for starlike trees T_k and for cycles
/// (lambda not +-2). `m` may be supplied when already known.
Verdict bound_check(const Graph& g, std::size_t s, const AlgebraicNumber& lambda,
                    std::optional<std::size_t> m = std::nullopt);

/// Trees other than T_k: m <= q_s - 1, equality exactly for two joined starlike trees or
/// for the skeleton form (pendant starlike branches carrying lambda, non-adjacent branch
/// vertices, every internal path carrying lambda).
Verdict tree_classify(const Graph& t, std::size_t s, const AlgebraicNumber& lambda,
                      std::optional<std::size_t> m = std::nullopt);

/// Unicyclic graphs C_u + P_l(u,v) + (T_k)_v with q_s = 1: optimal (m = 2) exactly when
/// l = 1, k = 1, m_C = 2, m_{P_{s-1}} = 1, or l >= 3, m_C = 2, m_{T_{k,l-2}} = 1.
Verdict unicyclic_classify(const Graph& g, std::size_t s, const AlgebraicNumber& lambda,
                           std::optional<std::size_t> m = std::nullopt);

/// Graphs with leaves and cycles, c + q_s >= 3: optimal exactly when G arises from an
/// extremal skeleton tree by swapping c pendant starlike branches for pendant cycles
/// C_{g,f} with m_{C_{g,f}} = 2.
Verdict cyclic_membership(const Graph& g, std::size_t s, const AlgebraicNumber& lambda,
                          std::optional<std::size_t> m = std::nullopt);

/// m = 2c + p - 1 over all connected graphs: cycles at +-2, B(l,1,k), equal-arm theta graphs,
/// trees with the distance congruences, and trees with pendant paths turned into cycles.
Verdict pendant_count_classify(const Graph& g, const AlgebraicNumber& lambda,
                               std::optional<std::size_t> m = std::nullopt);

/// Picks the structural check that applies to G's shape.
Verdict classify(const Graph& g, std::size_t s, const AlgebraicNumber& lambda,
                 std::optional<std::size_t> m = std::nullopt);

/// m_G(lambda) = 2c + q_s - 1. Throws PreconditionError when G is not in G_s.
bool lambda_optimal(const Graph& g, std::size_t s, const AlgebraicNumber& lambda);

/// f_G = x f_{G-u} - f_{G-u-v} for a pendant vertex u with neighbor v.
bool pendant_recurrence_holds(const Graph& g, Vertex u);

/// m_{G u-v H} = m_{G-u} + m_{H-v} when u is a downer vertex of G for lambda.
/// Throws PreconditionError when u is not a downer vertex.
bool downer_bridge_identity_holds(const Graph& g, Vertex u, const Graph& h, Vertex v,
                                  const AlgebraicNumber& lambda);

}  // namespace eigmult

#endif  // EIGMULT_CHARACTERIZE_HPP
