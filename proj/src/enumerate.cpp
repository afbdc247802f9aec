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

#include "eigmult/enumerate.hpp"

#include <omp.h>

#include <algorithm>
#include <exception>
#include <map>
#include <mutex>
#include <set>
#include <sstream>

#include "eigmult/characterize.hpp"
#include "eigmult/graph6.hpp"
#include "eigmult/poly.hpp"

namespace eigmult {

namespace {

std::mutex cache_mutex;

std::vector<Graph> grow_connected(const std::vector<Graph>& smaller, std::size_t n) {
  std::map<std::string, Graph> found;
  const std::size_t old = n - 1;
  for (const Graph& h : smaller) {
    const auto base = h.edges();
    for (std::uint32_t mask = 1; mask < (1U << old); ++mask) {
      std::vector<Edge> edges = base;
      for (Vertex v = 0; v < old; ++v)
        if (mask & (1U << v)) edges.emplace_back(v, old);
      Graph g = Graph::from_edge_list(n, edges);
      auto code = canonical_code(g);
      found.try_emplace(std::move(code), std::move(g));
    }
  }
  std::vector<Graph> out;
  out.reserve(found.size());
  for (auto& [code, g] : found) out.push_back(std::move(g));
  return out;
}

std::vector<Graph> grow_trees(const std::vector<Graph>& smaller, std::size_t n) {
  std::map<std::string, Graph> found;
  for (const Graph& t : smaller) {
    const auto base = t.edges();
    for (Vertex v = 0; v + 1 < n; ++v) {
      std::vector<Edge> edges = base;
      edges.emplace_back(v, n - 1);
      Graph g = Graph::from_edge_list(n, edges);
      auto code = tree_code(g);
      found.try_emplace(std::move(code), std::move(g));
    }
  }
  std::vector<Graph> out;
  out.reserve(found.size());
  for (auto& [code, g] : found) out.push_back(std::move(g));
  return out;
}

}  // namespace

const std::vector<Graph>& connected_graphs(std::size_t n) {
  if (n < 1 || n > kMaxConnectedOrder)
    throw PreconditionError("connected_graphs: order must be in 1.." + std::to_string(kMaxConnectedOrder));
  static std::vector<std::vector<Graph>> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  if (cache.empty()) cache.push_back({Graph::from_edge_list(1, {})});
  while (cache.size() < n) cache.push_back(grow_connected(cache.back(), cache.size() + 1));
  return cache[n - 1];
}

const std::vector<Graph>& trees(std::size_t n) {
  if (n < 1 || n > kMaxTreeOrder)
    throw PreconditionError("trees: order must be in 1.." + std::to_string(kMaxTreeOrder));
  static std::vector<std::vector<Graph>> cache;
  std::lock_guard<std::mutex> lock(cache_mutex);
  if (cache.empty()) cache.push_back({Graph::from_edge_list(1, {})});
  while (cache.size() < n) cache.push_back(grow_trees(cache.back(), cache.size() + 1));
  return cache[n - 1];
}

Graph random_connected_graph(std::mt19937_64& rng, std::size_t n, std::size_t extra) {
  if (n == 0) throw PreconditionError("random_connected_graph: n must be positive");
  std::set<Edge> edges;
  for (Vertex v = 1; v < n; ++v) edges.emplace(std::uniform_int_distribution<Vertex>(0, v - 1)(rng), v);
  const std::size_t max_edges = n * (n - 1) / 2;
  std::uniform_int_distribution<Vertex> pick(0, n - 1);
  for (std::size_t added = 0; added < extra && edges.size() < max_edges;) {
    Vertex a = pick(rng);
    Vertex b = pick(rng);
    if (a == b) continue;
    if (a > b) std::swap(a, b);
    if (edges.emplace(a, b).second) ++added;
  }
  return Graph::from_edge_list(n, std::vector<Edge>(edges.begin(), edges.end()));
}

SweepMode parse_sweep_mode(std::string_view text) {
  if (text == "bound") return SweepMode::kBound;
  if (text == "tree") return SweepMode::kTree;
  if (text == "unicyclic") return SweepMode::kUnicyclic;
  if (text == "cyclic") return SweepMode::kCyclic;
  if (text == "all") return SweepMode::kAll;
  throw std::invalid_argument("unknown sweep mode '" + std::string(text) + "'");
}

std::string to_string(SweepMode mode) {
  switch (mode) {
    case SweepMode::kBound: return "bound";
    case SweepMode::kTree: return "tree";
    case SweepMode::kUnicyclic: return "unicyclic";
    case SweepMode::kCyclic: return "cyclic";
    case SweepMode::kAll: return "all";
  }
  return "all";
}

namespace {

// Records and counters for one graph; merged in corpus order.
struct GraphResult {
  std::vector<SweepRecord> records;
  SweepSummary counts;
};

SweepRecord make_record(const Graph& g, const std::string& g6, const AlgebraicNumber& lambda, const Verdict& v) {
  SweepRecord r;
  r.graph6 = g6;
  r.n = g.order();
  r.c = v.c;
  r.q_s = v.q_s;
  r.p = v.p;
  r.lambda = lambda.name();
  r.m = v.m;
  r.bound = v.bound;
  r.optimal = v.optimal;
  r.predicted = v.predicted;
  r.agree = v.agree;
  r.check = v.check;
  r.target = v.target;
  r.extremal = v.extremal;
  if (v.status == VerdictStatus::kError) r.error = v.reason;
  return r;
}

GraphResult sweep_one(const Graph& g, std::size_t s, std::span<const AlgebraicNumber> lambdas, SweepMode mode) {
  GraphResult out;
  out.counts.graphs = 1;
  if (g.order() == 0 || !is_connected(g)) {
    out.counts.disconnected_skipped = 1;
    return out;
  }
  const std::string g6 = emit_graph6(g);
  const bool in_class = in_pendant_class(g, s);
  std::optional<IntPoly> f;
  std::map<std::string, std::size_t> by_minpoly;
  for (const auto& lambda : lambdas) {
    if (!in_class || in_path_spectrum(lambda, s)) {
      out.counts.out_of_hypothesis += mode == SweepMode::kAll ? 2 : 1;
      continue;
    }
    if (!f) f = charpoly(g);
    const std::string key = lambda.minpoly().to_coefficient_list();
    auto it = by_minpoly.find(key);
    if (it == by_minpoly.end()) it = by_minpoly.emplace(key, checked_multiplicity(g, *f, lambda)).first;
    const std::size_t m = it->second;

    std::vector<Verdict> verdicts;
    auto run = [&](auto&& fn) {
      try {
        verdicts.push_back(fn());
      } catch (const OracleMismatch&) {
        throw;
      } catch (const std::exception& e) {
        Verdict v;
        v.status = VerdictStatus::kError;
        v.reason = e.what();
        v.agree = false;
        verdicts.push_back(std::move(v));
      }
    };
    switch (mode) {
      case SweepMode::kBound: run([&] { return bound_check(g, s, lambda, m); }); break;
      case SweepMode::kTree: run([&] { return tree_classify(g, s, lambda, m); }); break;
      case SweepMode::kUnicyclic: run([&] { return unicyclic_classify(g, s, lambda, m); }); break;
      case SweepMode::kCyclic: run([&] { return cyclic_membership(g, s, lambda, m); }); break;
      case SweepMode::kAll:
        run([&] { return bound_check(g, s, lambda, m); });
        run([&] { return classify(g, s, lambda, m); });
        if (verdicts.back().check == "bound") verdicts.pop_back();
        break;
    }
    for (const auto& v : verdicts) {
      if (v.status == VerdictStatus::kOutOfHypothesis) {
        ++out.counts.out_of_hypothesis;
        continue;
      }
      SweepRecord r = make_record(g, g6, lambda, v);
      ++out.counts.records;
      if (v.status == VerdictStatus::kError) ++out.counts.errors;
      if (r.extremal) ++out.counts.extremal;
      if (r.optimal) ++out.counts.optimal;
      if (!v.bound_ok) ++out.counts.bound_violations;
      if (!r.agree) ++out.counts.disagreements;
      out.records.push_back(std::move(r));
    }
  }
  return out;
}

void accumulate(SweepSummary& into, const SweepSummary& part) {
  into.graphs += part.graphs;
  into.disconnected_skipped += part.disconnected_skipped;
  into.out_of_hypothesis += part.out_of_hypothesis;
  into.records += part.records;
  into.extremal += part.extremal;
  into.optimal += part.optimal;
  into.bound_violations += part.bound_violations;
  into.disagreements += part.disagreements;
  into.errors += part.errors;
}

SweepReport assemble(std::vector<GraphResult>& parts, std::size_t s, std::span<const AlgebraicNumber> lambdas,
                     SweepMode mode) {
  SweepReport report;
  report.s = s;
  report.mode = mode;
  for (const auto& l : lambdas) report.lambdas.push_back(l.name());
  for (auto& part : parts) {
    accumulate(report.summary, part.counts);
    for (auto& r : part.records) report.records.push_back(std::move(r));
  }
  std::sort(report.records.begin(), report.records.end(), [](const SweepRecord& a, const SweepRecord& b) {
    return std::tie(a.graph6, a.lambda, a.check) < std::tie(b.graph6, b.lambda, b.check);
  });
  return report;
}

}  // namespace

SweepReport sweep_serial(std::span<const Graph> corpus, std::size_t s, std::span<const AlgebraicNumber> lambdas,
                         SweepMode mode) {
  std::vector<GraphResult> parts;
  parts.reserve(corpus.size());
  for (const Graph& g : corpus) parts.push_back(sweep_one(g, s, lambdas, mode));
  return assemble(parts, s, lambdas, mode);
}

SweepReport sweep_parallel(std::span<const Graph> corpus, std::size_t s, std::span<const AlgebraicNumber> lambdas,
                           SweepMode mode, int jobs) {
  std::vector<GraphResult> parts(corpus.size());
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const long count = static_cast<long>(corpus.size());
  const int threads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic, 8) num_threads(threads)
  for (long i = 0; i < count; ++i) {
    try {
      parts[static_cast<std::size_t>(i)] = sweep_one(corpus[static_cast<std::size_t>(i)], s, lambdas, mode);
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return assemble(parts, s, lambdas, mode);
}

nlohmann::json to_json(const SweepReport& report) {
  nlohmann::json j;
  j["parameters"] = {{"s", report.s}, {"mode", to_string(report.mode)}, {"lambdas", report.lambdas},
                     {"corpus", report.corpus}};
  nlohmann::json records = nlohmann::json::array();
  for (const auto& r : report.records) {
    nlohmann::json o = {{"graph6", r.graph6}, {"n", r.n}, {"c", r.c}, {"q_s", r.q_s}, {"p", r.p},
                        {"lambda", r.lambda}, {"m", r.m}, {"bound", r.bound}, {"optimal", r.optimal},
                        {"predicted", r.predicted}, {"agree", r.agree}, {"check", r.check},
                        {"target", r.target}, {"extremal", r.extremal}};
    if (!r.error.empty()) o["error"] = r.error;
    records.push_back(std::move(o));
  }
  j["records"] = std::move(records);
  const auto& s = report.summary;
  j["summary"] = {{"graphs", s.graphs},
                  {"disconnected_skipped", s.disconnected_skipped},
                  {"out_of_hypothesis", s.out_of_hypothesis},
                  {"records", s.records},
                  {"extremal", s.extremal},
                  {"optimal", s.optimal},
                  {"bound_violations", s.bound_violations},
                  {"disagreements", s.disagreements},
                  {"errors", s.errors}};
  return j;
}

std::string to_csv(const SweepReport& report) {
  std::ostringstream os;
  os << "graph6,n,c,q_s,p,lambda,m,bound,optimal,predicted,agree,check,target,extremal,error\n";
  auto quoted = [](const std::string& text) {
    if (text.find_first_of(",\"\n") == std::string::npos) return text;
    std::string out = "\"";
    for (char ch : text) {
      if (ch == '"') out += '"';
      out += ch;
    }
    return out + "\"";
  };
  for (const auto& r : report.records)
    os << quoted(r.graph6) << ',' << r.n << ',' << r.c << ',' << r.q_s << ',' << r.p << ',' << quoted(r.lambda)
       << ',' << r.m << ',' << r.bound << ',' << (r.optimal ? "true" : "false") << ',' << r.predicted << ','
       << (r.agree ? "true" : "false") << ',' << r.check << ',' << r.target << ','
       << (r.extremal ? "true" : "false") << ',' << quoted(r.error) << '\n';
  return os.str();
}

}  // namespace eigmult
