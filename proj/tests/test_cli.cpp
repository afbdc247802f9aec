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

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "eigmult/cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "eigmult");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = eigmult::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& body) {
  const std::string path = std::string(P_tmpdir) + "/eigmult_cli_" + name;
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("build") {
  const auto r = run({"build", "Ckl(g=6,l=4)"});
  CHECK(r.code == 0);
  CHECK(r.out == "HhEK?C@\n");
  const auto j = run({"build", "--family", "Ckl(g=6,l=4)", "--format", "json"});
  CHECK(nlohmann::json::parse(j.out)["n"] == 9);
  CHECK(run({"build", "Nope(3)"}).code == 1);
}

TEST_CASE("multiplicity on C_6 from a file") {
  const std::string path = temp_file("c6.g6", "EhEG\n");
  const auto r = run({"multiplicity", "--lambda", "1/3", "--graph", path, "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["m"] == 2);
  CHECK(j["m_rank"] == 2);
  CHECK(j["m_charpoly"] == 2);

  const std::string edges = temp_file("c6.txt", "# hexagon\n6\n0 1\n1 2\n2 3\n3 4\n4 5\n5 0\n");
  CHECK(nlohmann::json::parse(run({"multiplicity", "--minpoly", "-1,1", "--graph", edges, "--format", "json"}).out)["m"] == 2);
}

TEST_CASE("usage errors exit 1") {
  CHECK(run({}).code == 1);
  CHECK(run({"multiplicity", "--graph6", "EhEG"}).code == 1);
  CHECK(run({"multiplicity", "--graph6", "EhEG", "--lambda", "2/4"}).code == 1);
  CHECK(run({"multiplicity", "--graph6", "EhEG", "--lambda", "x"}).code == 1);
  CHECK(run({"multiplicity", "--graph6", "EhEG", "--minpoly", "0,0,1"}).code == 1);
  CHECK(run({"multiplicity", "--graph6", "EhEG", "--lambda", "1/3", "--minpoly", "-1,1"}).code == 1);
  CHECK(run({"multiplicity", "--graph6", "E\x01", "--lambda", "1/3"}).code == 1);
  CHECK(run({"invariants", "--graph6", "A_", "--family", "P(2)"}).code == 1);
  CHECK(run({"invariants", "--graph", "/nonexistent/file.g6"}).code == 1);
  CHECK(run({"sweep", "--mode", "bogus"}).code == 1);
  CHECK(run({"sweep", "--n-max", "9"}).code == 1);
  CHECK(run({"invariants", "--graph6", "A_", "--format", "xml"}).code == 1);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("classify exit codes") {
  const auto bad = run({"classify", "--graph6", "EhEG", "--s", "2", "--lambda", "1/3", "--format", "json"});
  CHECK(bad.code == 2);
  const auto ok = run({"classify", "--family", "Ckl(g=6,l=4)", "--s", "3", "--lambda", "1/3", "--format", "json"});
  CHECK(ok.code == 0);
  const auto j = nlohmann::json::parse(ok.out);
  REQUIRE(j.is_array());
  CHECK(j[1]["check"] == "unicyclic");
  CHECK(j[1]["predicted"] == "short-tail");
  CHECK(j[1]["m"] == 2);
}

TEST_CASE("invariants") {
  const auto r = run({"invariants", "--family", "Ckl(g=6,l=4)", "--s", "3", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["c"] == 1);
  CHECK(j["p"] == 1);
  CHECK(j["q_s"] == 1);
  CHECK(j["plinth_order"] == 6);
  CHECK(j["pendant_cycles"].size() == 1);
  CHECK(j["pendant_paths"][0]["order"] == 3);
}

TEST_CASE("sweep") {
  const auto r = run({"sweep", "--n-max", "6", "--s", "2", "--mode", "bound", "--format", "json"});
  CHECK(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["summary"]["graphs"] == 143);
  CHECK(j["summary"]["bound_violations"] == 0);
  CHECK(j["summary"]["disagreements"] == 0);
  for (const auto& rec : j["records"])
    if (rec["extremal"]) CHECK((rec["predicted"] == "cycle" || rec["predicted"] == "starlike"));

  const auto serial = run({"sweep", "--n-max", "5", "--mode", "all", "--format", "csv", "--jobs", "1"});
  const auto parallel = run({"sweep", "--n-max", "5", "--mode", "all", "--format", "csv", "--jobs", "2"});
  CHECK(serial.out == parallel.out);

  const std::string out = std::string(P_tmpdir) + "/eigmult_cli_sweep.csv";
  CHECK(run({"sweep", "--n-max", "4", "--format", "csv", "--out", out}).code == 0);
  std::ifstream in(out);
  std::string header;
  std::getline(in, header);
  CHECK(header.rfind("graph6,n,c,q_s,p,lambda,m,bound,optimal,predicted,agree", 0) == 0);

  const std::string corpus = temp_file("corpus.g6", "A_\nA?\nBw\n");
  const auto fromfile = run({"sweep", "--graph", corpus, "--format", "json"});
  CHECK(nlohmann::json::parse(fromfile.out)["summary"]["disconnected_skipped"] == 1);
}

TEST_CASE("check-identities is deterministic") {
  const auto a = run({"check-identities", "--count", "20", "--seed", "5", "--n-max", "10", "--format", "json"});
  const auto b = run({"check-identities", "--count", "20", "--seed", "5", "--n-max", "10", "--format", "json"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["recurrence_failed"] == 0);
  CHECK(j["bridge_failed"] == 0);
  CHECK(j["bridge_checked"] > 0);
  CHECK(run({"check-identities", "--graph6", "EhEG", "--lambda", "1/3"}).code == 0);
}
