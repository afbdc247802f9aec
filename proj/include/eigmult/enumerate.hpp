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

#ifndef EIGMULT_ENUMERATE_HPP
#define EIGMULT_ENUMERATE_HPP

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "eigmult/algebraic.hpp"
#include "eigmult/graph.hpp"

namespace eigmult {

inline constexpr std::size_t kMaxConnectedOrder = 8;
inline constexpr std::size_t kMaxTreeOrder = 14;

/// One graph per isomorphism class of connected graphs on n vertices, sorted by canonical code.
/// Results are cached; the call is thread-safe.
const std::vector<Graph>& connected_graphs(std::size_t n);
/// One tree per isomorphism class on n vertices, sorted by tree code.
const std::vector<Graph>& trees(std::size_t n);

/// Connected graph on n vertices: a random recursive tree plus `extra` random chords.
Graph random_connected_graph(std::mt19937_64& rng, std::size_t n, std::size_t extra);

enum class SweepMode { kBound, kTree, kUnicyclic, kCyclic, kAll };

SweepMode parse_sweep_mode(std::string_view text);
std::string to_string(SweepMode mode);

struct SweepRecord {
  std::string graph6;
  std::size_t n = 0;
  std::size_t c = 0;
  std::size_t q_s = 0;
  std::size_t p = 0;
  std::string lambda;
  std::size_t m = 0;
  std::size_t bound = 0;
  bool optimal = false;
  std::string predicted;
  bool agree = true;
  std::string check;
  long target = 0;
  bool extremal = false;
  std::string error;

  friend bool operator==(const SweepRecord&, const SweepRecord&) = default;
};

struct SweepSummary {
  std::size_t graphs = 0;
  std::size_t disconnected_skipped = 0;
  std::size_t out_of_hypothesis = 0;
  std::size_t records = 0;
  std::size_t extremal = 0;
  std::size_t optimal = 0;
  std::size_t bound_violations = 0;
  std::size_t disagreements = 0;
  std::size_t errors = 0;

  friend bool operator==(const SweepSummary&, const SweepSummary&) = default;
};

struct SweepReport {
  std::size_t s = 0;
  SweepMode mode = SweepMode::kBound;
  std::vector<std::string> lambdas;
  std::string corpus;
  std::vector<SweepRecord> records;
  SweepSummary summary;
};

/// Serial reference sweep.
SweepReport sweep_serial(std::span<const Graph> corpus, std::size_t s, std::span<const AlgebraicNumber> lambdas,
                         SweepMode mode);
/// OpenMP sweep over graphs; byte-identical output to sweep_serial. jobs <= 0 uses the runtime default.
SweepReport sweep_parallel(std::span<const Graph> corpus, std::size_t s, std::span<const AlgebraicNumber> lambdas,
                           SweepMode mode, int jobs = 0);

nlohmann::json to_json(const SweepReport& report);
std::string to_csv(const SweepReport& report);

}  // namespace eigmult

#endif  // EIGMULT_ENUMERATE_HPP
