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

#include "eigmult/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <charconv>
#include <span>
#include <fstream>
#include <optional>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "eigmult/algebraic.hpp"
#include "eigmult/characterize.hpp"
#include "eigmult/enumerate.hpp"
#include "eigmult/families.hpp"
#include "eigmult/graph.hpp"
#include "eigmult/graph6.hpp"
#include "eigmult/poly.hpp"

namespace eigmult {
namespace {

using nlohmann::json;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string graph_file;
  std::string graph6;
  std::string family;
  std::size_t s = 2;
  std::string lambda;
  std::string minpoly;
  std::string format = "text";
  std::string out;
  int jobs = 0;
  std::uint64_t seed = 1;
  std::size_t n_max = 6;
  std::size_t q_max = 9;
  std::size_t count = 100;
  std::string mode = "all";
};

struct Input {
  std::vector<Graph> graphs;
  std::string source;
};

std::optional<Input> load_input(const Options& o, bool required) {
  const int given = !o.graph_file.empty() + !o.graph6.empty() + !o.family.empty();
  if (given > 1) throw UsageError("give exactly one of --graph, --graph6, --family");
  if (given == 0) {
    if (required) throw UsageError("an input graph is required (--graph, --graph6 or --family)");
    return std::nullopt;
  }
  Input in;
  try {
    if (!o.graph_file.empty()) {
      in.graphs = read_graph_file(o.graph_file);
      in.source = o.graph_file;
    } else if (!o.graph6.empty()) {
      in.graphs.push_back(parse_graph6(o.graph6));
      in.source = "graph6:" + o.graph6;
    } else {
      const auto spec = FamilySpec::parse(o.family);
      in.graphs.push_back(spec.build());
      in.source = spec.to_string();
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  } catch (const std::runtime_error& e) {
    throw UsageError(e.what());
  }
  return in;
}

std::size_t parse_count(std::string_view text, const char* what) {
  std::size_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size() || text.empty())
    throw UsageError(std::string("bad ") + what + ": '" + std::string(text) + "'");
  return value;
}

std::optional<AlgebraicNumber> load_lambda(const Options& o, bool required) {
  if (!o.lambda.empty() && !o.minpoly.empty()) throw UsageError("give only one of --lambda and --minpoly");
  try {
    if (!o.lambda.empty()) {
      const auto slash = o.lambda.find('/');
      if (slash == std::string::npos) throw UsageError("--lambda expects P/Q meaning 2cos(P*pi/Q)");
      const std::string_view text(o.lambda);
      return AlgebraicNumber::from_angle(parse_count(text.substr(0, slash), "P"),
                                         parse_count(text.substr(slash + 1), "Q"));
    }
    if (!o.minpoly.empty()) {
      std::vector<mpz_class> coeffs;
      std::stringstream ss(o.minpoly);
      std::string item;
      while (std::getline(ss, item, ',')) {
        mpz_class c;
        if (item.empty() || c.set_str(item, 10) != 0) throw UsageError("bad --minpoly coefficient '" + item + "'");
        coeffs.push_back(c);
      }
      return AlgebraicNumber::from_minpoly(IntPoly(std::move(coeffs)));
    }
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (required) throw UsageError("--lambda or --minpoly is required");
  return std::nullopt;
}

std::string csv_cell(const json& v) {
  std::string text = v.is_string() ? v.get<std::string>() : v.dump();
  if (text.find_first_of(",\"\n") == std::string::npos) return text;
  std::string quoted = "\"";
  for (char ch : text) {
    if (ch == '"') quoted += '"';
    quoted += ch;
  }
  return quoted + "\"";
}

// Writes a list of flat-ish objects as json, csv (columns from the first object) or text.
void write_items(const json& items, const std::string& format, std::ostream& out) {
  if (format == "json") {
    out << (items.size() == 1 ? items[0] : items).dump(2) << "\n";
  } else if (format == "csv") {
    if (items.empty()) return;
    std::vector<std::string> cols;
    for (const auto& [key, value] : items[0].items()) cols.push_back(key);
    for (std::size_t i = 0; i < cols.size(); ++i) out << (i ? "," : "") << cols[i];
    out << "\n";
    for (const auto& item : items) {
      for (std::size_t i = 0; i < cols.size(); ++i)
        out << (i ? "," : "") << (item.contains(cols[i]) ? csv_cell(item[cols[i]]) : "");
      out << "\n";
    }
  } else {
    bool first = true;
    for (const auto& item : items) {
      if (!first) out << "\n";
      first = false;
      for (const auto& [key, value] : item.items())
        out << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
    }
  }
}

json vertex_array(std::span<const Vertex> vs) { return json(std::vector<Vertex>(vs.begin(), vs.end())); }

json invariants_of(const Graph& g, std::size_t s) {
  json j;
  j["graph6"] = emit_graph6(g);
  j["n"] = g.order();
  j["edges"] = g.size();
  j["connected"] = is_connected(g);
  j["c"] = cyclomatic_number(g);
  j["p"] = pendant_vertices(g).size();
  j["s"] = s;
  j["in_class"] = in_pendant_class(g, s);
  j["q_s"] = s_pendant_count(g, s);
  j["high_degree"] = vertex_array(high_degree_vertices(g));
  j["plinth_order"] = plinth(g).graph.order();
  json paths = json::array();
  for (const auto& pp : pendant_paths(g)) {
    json e = {{"order", pp.order()}, {"vertices", pp.vertices}};
    e["anchor"] = pp.anchor ? json(*pp.anchor) : json(nullptr);
    paths.push_back(e);
  }
  j["pendant_paths"] = paths;
  json cycles = json::array();
  for (const auto& pc : pendant_cycles(g)) cycles.push_back({{"cycle", pc.cycle}, {"attachment", pc.attachment}});
  j["pendant_cycles"] = cycles;
  return j;
}

int cmd_invariants(const Options& o, std::ostream& out) {
  const auto in = load_input(o, true);
  json items = json::array();
  for (const Graph& g : in->graphs) items.push_back(invariants_of(g, o.s));
  write_items(items, o.format, out);
  return kExitOk;
}

int cmd_multiplicity(const Options& o, std::ostream& out, std::ostream& err) {
  const auto in = load_input(o, true);
  const auto lambda = *load_lambda(o, true);
  json items = json::array();
  for (const Graph& g : in->graphs) {
    const IntPoly f = charpoly(g);
    const std::size_t by_poly = multiplicity(f, lambda);
    const std::size_t by_rank = rank_multiplicity(g, lambda);
    if (by_poly != by_rank) {
      err << "oracle mismatch on " << emit_graph6(g) << " at " << lambda.name() << ": characteristic polynomial "
          << by_poly << ", rank " << by_rank << "\n";
      return kExitOracleMismatch;
    }
    items.push_back({{"graph6", emit_graph6(g)},
                     {"lambda", lambda.name()},
                     {"minpoly", lambda.minpoly().to_coefficient_list()},
                     {"charpoly", f.to_string()},
                     {"m", by_poly},
                     {"m_charpoly", by_poly},
                     {"m_rank", by_rank}});
  }
  write_items(items, o.format, out);
  return kExitOk;
}

int cmd_classify(const Options& o, std::ostream& out) {
  const auto in = load_input(o, true);
  const auto lambda = *load_lambda(o, true);
  json items = json::array();
  bool violated = false;
  for (const Graph& g : in->graphs) {
    std::vector<Verdict> verdicts{bound_check(g, o.s, lambda)};
    Verdict shaped = classify(g, o.s, lambda, verdicts[0].evaluated() ? std::optional(verdicts[0].m) : std::nullopt);
    if (shaped.check != verdicts[0].check) verdicts.push_back(std::move(shaped));
    for (const Verdict& v : verdicts) {
      if (v.status == VerdictStatus::kOutOfHypothesis) violated = true;
      json j = {{"graph6", emit_graph6(g)}, {"s", o.s}, {"lambda", lambda.name()}};
      j.update(to_json(v));
      items.push_back(std::move(j));
    }
  }
  write_items(items, o.format, out);
  return violated ? kExitHypothesis : kExitOk;
}

int cmd_build(const Options& o, std::ostream& out) {
  const auto in = load_input(o, true);
  const Graph& g = in->graphs.at(0);
  if (o.format == "text") {
    out << emit_graph6(g) << "\n";
    return kExitOk;
  }
  json edges = json::array();
  for (const auto& [a, b] : g.edges()) edges.push_back({a, b});
  write_items(json::array({{{"family", in->source}, {"graph6", emit_graph6(g)}, {"n", g.order()}, {"edges", edges}}}),
              o.format, out);
  return kExitOk;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  SweepMode mode;
  try {
    mode = parse_sweep_mode(o.mode);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::vector<Graph> corpus;
  std::string source;
  if (auto in = load_input(o, false)) {
    corpus = std::move(in->graphs);
    source = in->source;
  } else {
    const bool tree_only = mode == SweepMode::kTree;
    const std::size_t cap = tree_only ? kMaxTreeOrder : kMaxConnectedOrder;
    if (o.n_max < 1 || o.n_max > cap) throw UsageError("--n-max must lie in 1.." + std::to_string(cap));
    for (std::size_t n = 1; n <= o.n_max; ++n) {
      const auto& batch = tree_only ? trees(n) : connected_graphs(n);
      corpus.insert(corpus.end(), batch.begin(), batch.end());
    }
    source = std::string(tree_only ? "trees" : "connected graphs") + " n<=" + std::to_string(o.n_max);
  }
  std::vector<AlgebraicNumber> lambdas;
  if (auto lam = load_lambda(o, false)) lambdas.push_back(*lam);
  else lambdas = default_lambda_set(o.q_max);

  SweepReport report = o.jobs == 1 ? sweep_serial(corpus, o.s, lambdas, mode)
                                   : sweep_parallel(corpus, o.s, lambdas, mode, o.jobs);
  report.corpus = source;
  if (o.format == "json") {
    out << to_json(report).dump(2) << "\n";
  } else if (o.format == "csv") {
    out << to_csv(report);
  } else {
    const auto& s = report.summary;
    out << "corpus: " << source << "\n"
        << "s: " << o.s << "\n"
        << "mode: " << to_string(mode) << "\n"
        << "lambdas: " << lambdas.size() << "\n"
        << "graphs: " << s.graphs << "\n"
        << "disconnected skipped: " << s.disconnected_skipped << "\n"
        << "out of hypothesis: " << s.out_of_hypothesis << "\n"
        << "records: " << s.records << "\n"
        << "extremal: " << s.extremal << "\n"
        << "optimal: " << s.optimal << "\n"
        << "bound violations: " << s.bound_violations << "\n"
        << "disagreements: " << s.disagreements << "\n"
        << "errors: " << s.errors << "\n";
    for (const auto& r : report.records)
      if (!r.agree || !r.error.empty())
        out << "  " << r.graph6 << " " << r.check << " " << r.lambda << " m=" << r.m << " target=" << r.target
            << " predicted=" << r.predicted << (r.error.empty() ? "" : " error=" + r.error) << "\n";
  }
  return kExitOk;
}

int cmd_check_identities(const Options& o, std::ostream& out, std::ostream& err) {
  std::mt19937_64 rng(o.seed);
  std::vector<Graph> graphs;
  if (auto in = load_input(o, false)) {
    graphs = std::move(in->graphs);
  } else {
    if (o.n_max < 2) throw UsageError("--n-max must be at least 2");
    std::uniform_int_distribution<std::size_t> order(2, o.n_max);
    for (std::size_t i = 0; i < o.count; ++i) {
      const std::size_t n = order(rng);
      graphs.push_back(random_connected_graph(rng, n, std::uniform_int_distribution<std::size_t>(0, n / 3)(rng)));
    }
  }
  std::vector<AlgebraicNumber> lambdas;
  if (auto lam = load_lambda(o, false)) lambdas.push_back(*lam);
  else lambdas = default_lambda_set(o.q_max);

  std::size_t rec_checked = 0, rec_failed = 0, bridge_checked = 0, bridge_failed = 0;
  for (const Graph& g : graphs) {
    for (Vertex u : pendant_vertices(g)) {
      ++rec_checked;
      if (!pendant_recurrence_holds(g, u)) {
        ++rec_failed;
        err << "recurrence fails on " << emit_graph6(g) << " at vertex " << u << "\n";
      }
    }
    const IntPoly f = charpoly(g);
    for (const auto& lam : lambdas) {
      if (multiplicity(f, lam) == 0) continue;
      for (Vertex u = 0; u < g.order(); ++u) {
        if (!is_downer(g, u, lam)) continue;
        const Graph h = random_connected_graph(rng, std::uniform_int_distribution<std::size_t>(1, 5)(rng), 1);
        ++bridge_checked;
        if (!downer_bridge_identity_holds(g, u, h, 0, lam)) {
          ++bridge_failed;
          err << "bridge identity fails on " << emit_graph6(g) << " at vertex " << u << " for " << lam.name()
              << " with " << emit_graph6(h) << "\n";
        }
        break;
      }
    }
  }
  write_items(json::array({{{"graphs", graphs.size()},
                            {"seed", o.seed},
                            {"recurrence_checked", rec_checked},
                            {"recurrence_failed", rec_failed},
                            {"bridge_checked", bridge_checked},
                            {"bridge_failed", bridge_failed}}}),
              o.format, out);
  return rec_failed + bridge_failed == 0 ? kExitOk : kExitOracleMismatch;
}

void add_input(CLI::App* cmd, Options& o) {
  cmd->add_option("--graph", o.graph_file, "graph6 or edge-list file");
  cmd->add_option("--graph6", o.graph6, "graph6 string");
  cmd->add_option("--family", o.family, "family spec, e.g. Ckl(g=6,l=4)");
}

void add_lambda(CLI::App* cmd, Options& o) {
  cmd->add_option("--lambda", o.lambda, "P/Q for 2cos(P*pi/Q)");
  cmd->add_option("--minpoly", o.minpoly, "monic minimal polynomial c0,c1,...,1");
}

void add_format(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "csv", "text"}));
  cmd->add_option("--out", o.out, "write output to FILE");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact eigenvalue multiplicities of graphs at 2cos(p*pi/q)", "eigmult"};
  app.require_subcommand(1);

  auto* invariants = app.add_subcommand("invariants", "structural invariants of a graph");
  add_input(invariants, o);
  invariants->add_option("--s", o.s, "pendant path length s")->check(CLI::PositiveNumber);
  add_format(invariants, o);

  auto* mult = app.add_subcommand("multiplicity", "multiplicity of lambda by both oracles");
  add_input(mult, o);
  add_lambda(mult, o);
  add_format(mult, o);

  auto* cls = app.add_subcommand("classify", "run the structural check matching the graph's shape");
  add_input(cls, o);
  add_lambda(cls, o);
  cls->add_option("--s", o.s, "pendant path length s")->check(CLI::PositiveNumber);
  add_format(cls, o);

  auto* build = app.add_subcommand("build", "build a family member and print its graph6");
  build->add_option("spec", o.family, "family spec");
  build->add_option("--family", o.family, "family spec");
  add_format(build, o);

  auto* sweep = app.add_subcommand("sweep", "exhaustive verification sweep");
  add_input(sweep, o);
  add_lambda(sweep, o);
  sweep->add_option("--s", o.s, "pendant path length s")->check(CLI::PositiveNumber);
  sweep->add_option("--n-max", o.n_max, "largest order to enumerate");
  sweep->add_option("--q-max", o.q_max, "largest q in the default lambda set")->check(CLI::Range(1, 360));
  sweep->add_option("--mode", o.mode, "bound, tree, unicyclic, cyclic or all");
  sweep->add_option("--jobs", o.jobs, "worker threads (1 runs the serial reference)");
  add_format(sweep, o);

  auto* ident = app.add_subcommand("check-identities", "pendant recurrence and downer bridge identities");
  add_input(ident, o);
  add_lambda(ident, o);
  ident->add_option("--seed", o.seed, "random corpus seed");
  ident->add_option("--count", o.count, "random corpus size");
  ident->add_option("--n-max", o.n_max, "largest random order");
  ident->add_option("--q-max", o.q_max, "largest q in the default lambda set")->check(CLI::Range(1, 360));
  add_format(ident, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  std::ofstream file;
  if (!o.out.empty()) {
    file.open(o.out);
    if (!file) {
      err << "cannot open " << o.out << "\n";
      return kExitUsage;
    }
  }
  std::ostream& sink = o.out.empty() ? out : file;

  try {
    if (*invariants) return cmd_invariants(o, sink);
    if (*mult) return cmd_multiplicity(o, sink, err);
    if (*cls) return cmd_classify(o, sink);
    if (*build) return cmd_build(o, sink);
    if (*sweep) return cmd_sweep(o, sink);
    return cmd_check_identities(o, sink, err);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const OracleMismatch& e) {
    err << "oracle mismatch: " << e.what() << "\n";
    return kExitOracleMismatch;
  } catch (const ReducibleMinpolyError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}

}  // namespace eigmult
