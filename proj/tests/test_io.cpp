// Copyright 2026 The Authors.
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

#include <filesystem>
#include <fstream>
#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "tamper.hpp"
#include "tripods/errors.hpp"
#include "tripods/io.hpp"
#include "tripods/oracle.hpp"
#include "tripods/pipeline.hpp"

namespace tripods {
namespace {

std::string write_temp(const std::string& name, const std::string& text) {
  auto path = std::filesystem::temp_directory_path() / ("tripods_test_" + name);
  std::ofstream(path, std::ios::binary) << text;
  return path.string();
}

void check_parse_error(const std::string& text, int line, int column) {
  try {
    parse_instance(text);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == line);
    CHECK(e.column() == column);
  }
}

TEST_CASE("instance text round-trips") {
  const std::string text =
      "format tripod-instance 1\n"
      "# two sources meet at c\n"
      "vertex a b c t\n"
      "source a b   # trailing comment\n"
      "sink t\n"
      "edge a c\nedge b c\nedge c t\n";
  InstanceDocument doc = parse_instance(text);
  CHECK(doc.names == std::vector<std::string>{"a", "b", "c", "t"});
  CHECK(doc.graph == testing::minimal_tripod());
  CHECK(parse_instance(print_instance(doc)) == doc);
  CHECK(print_instance(parse_instance(print_instance(doc))) == print_instance(doc));
}

TEST_CASE("instance parse errors carry positions") {
  check_parse_error("", 1, 1);
  check_parse_error("vertex a\n", 1, 1);
  check_parse_error("format tripod-instance 2\n", 1, 24);
  check_parse_error("format other 1\n", 1, 8);
  check_parse_error("format tripod-instance 1\nvertex a a\n", 2, 10);
  check_parse_error("format tripod-instance 1\nvertex a\nsource b\n", 3, 8);
  check_parse_error("format tripod-instance 1\nvertex a b\nedge a b\nedge a b\n", 4, 6);
  check_parse_error("format tripod-instance 1\nvertex a\nedge a a\n", 3, 6);
  check_parse_error("format tripod-instance 1\nvertex a b\nedge a\n", 3, 1);
  check_parse_error("format tripod-instance 1\n  arc a b\n", 2, 3);
  check_parse_error("format tripod-instance 1\nvertex a\nsink a a\n", 3, 8);
}

TEST_CASE("make_instance validates names") {
  MigrationDigraph d = testing::minimal_tripod();
  CHECK(make_instance(d).names[2] == "v2");
  CHECK_THROWS_AS(make_instance(d, {"a", "b", "c"}), PreconditionError);
  CHECK_THROWS_AS(make_instance(d, {"a", "b", "c", "a"}), PreconditionError);
  CHECK_THROWS_AS(make_instance(d, {"a", "b", "c d", "e"}), PreconditionError);
  CHECK_THROWS_AS(make_instance(delete_vertices(d, {1})), PreconditionError);
}

TEST_CASE("certificate documents round-trip and verify") {
  std::mt19937_64 rng(11);
  EngineConfig cfg;
  for (int trial = 0; trial < 60; ++trial) {
    MigrationDigraph d = testing::random_migration(rng, 9, 0.25, 0.4, 0.4);
    InstanceDocument inst = make_instance(d);
    const std::size_t k = 1 + static_cast<std::size_t>(trial % 2);
    CertificateDocument doc =
        make_document(theorem1_certify(d, k, cfg), k, cfg.bounds, true);
    CHECK(verify_document(inst, doc));
    CertificateDocument back = parse_certificate(print_certificate(doc, inst), inst);
    CHECK(back == doc);
    for (const auto& t : testing::tamperings(doc, inst)) {
      CHECK_MESSAGE(!verify_document(inst, t.doc), t.label);
    }
  }
}

TEST_CASE("edge certificate documents round-trip and verify") {
  std::mt19937_64 rng(5);
  EngineConfig cfg;
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t k = 1 + static_cast<std::size_t>(trial % 2);
    MigrationDigraph inst_graph = testing::random_degree_conforming(rng, 5, 0.3, 4, 3);
    InstanceDocument inst = make_instance(inst_graph);
    CertificateDocument doc =
        make_document(corollary2_certify(inst_graph, k, cfg), k, cfg.bounds, true);
    CHECK(verify_document(inst, doc));
    CHECK(parse_certificate(print_certificate(doc, inst), inst) == doc);
    for (const auto& t : testing::tamperings(doc, inst)) {
      CHECK_MESSAGE(!verify_document(inst, t.doc), t.label);
    }
  }
}

TEST_CASE("certificate parse errors") {
  InstanceDocument inst = make_instance(testing::minimal_tripod());
  CHECK_THROWS_AS(parse_certificate("{\n  \"format\": ", inst), ParseError);
  CHECK_THROWS_AS(parse_certificate("{\"format\": \"other\"}", inst), PreconditionError);
  EngineConfig cfg;
  CertificateDocument doc =
      make_document(theorem1_certify(inst.graph, 1, cfg), 1, cfg.bounds, true);
  std::string text = print_certificate(doc, inst);
  std::string bad = text;
  bad.replace(bad.find("\"v0\""), 4, "\"zz\"");
  CHECK_THROWS_AS(parse_certificate(bad, inst), PreconditionError);
  bad = text;
  bad.replace(bad.find("\"f1\": \"0\""), 9, "\"f1\": \"x\"");
  CHECK_THROWS_AS(parse_certificate(bad, inst), PreconditionError);
}

TEST_CASE("verify_document checks the bound snapshot and payload shape") {
  InstanceDocument inst = make_instance(testing::two_minimal_tripods());
  EngineConfig cfg;
  CertificateDocument doc =
      make_document(theorem1_certify(inst.graph, 2, cfg), 2, cfg.bounds, true);
  REQUIRE(doc.kind == DocumentKind::kPacking);
  CHECK(verify_document(inst, doc));
  CertificateDocument d = doc;
  d.f1 = 17;
  CHECK(verify_document(inst, d).reason().find("bound snapshot") != std::string::npos);
  d = doc;
  d.g5 = "t+";
  CHECK_FALSE(verify_document(inst, d));
  d = doc;
  d.hitting_set = {0};
  CHECK_FALSE(verify_document(inst, d));
  d = doc;
  d.route = Route::kIterative;
  CHECK_FALSE(verify_document(inst, d));
  d.f1 = BoundTable(G5(), Route::kIterative).f1(2);
  CHECK(verify_document(inst, d));
}

TEST_CASE("cli detect, certify and verify") {
  const std::string inst = write_temp("two.txt", print_instance(make_instance(
                                                     testing::two_minimal_tripods())));
  CliResult r = run_cli({"detect", inst});
  CHECK(r.status == kExitFound);
  CHECK(r.out.find("tripod s1=") == 0);

  r = run_cli({"certify", inst, "--k", "2"});
  REQUIRE(r.status == kExitFound);
  const std::string cert = write_temp("two.json", r.out);
  CHECK(run_cli({"verify", inst, cert}).status == kExitFound);

  r = run_cli({"certify", inst, "--k", "3"});
  REQUIRE(r.status == kExitNegative);
  const std::string hit = write_temp("hit.json", r.out);
  CHECK(run_cli({"verify", inst, hit}).status == kExitFound);

  InstanceDocument parsed = parse_instance(print_instance(make_instance(
      testing::two_minimal_tripods())));
  CertificateDocument doc = parse_certificate(r.out, parsed);
  REQUIRE_FALSE(doc.hitting_set.empty());
  doc.hitting_set.erase(doc.hitting_set.begin());
  const std::string tampered = write_temp("bad.json", print_certificate(doc, parsed));
  r = run_cli({"verify", inst, tampered});
  CHECK(r.status == kExitNegative);
  CHECK(r.out.find("surviving tripod") != std::string::npos);

  r = run_cli({"certify", inst, "--k", "2", "--edges"});
  CHECK(r.status == kExitFound);
  CHECK(r.out.find("edge-packing") != std::string::npos);
}

TEST_CASE("cli exit codes for input errors") {
  CHECK(run_cli({}).status == kExitInput);
  CHECK(run_cli({"frobnicate"}).status == kExitInput);
  CHECK(run_cli({"detect", "/nonexistent/instance.txt"}).status == kExitInput);
  const std::string bad = write_temp("bad.txt", "format tripod-instance 1\nedge a b\n");
  CliResult r = run_cli({"detect", bad});
  CHECK(r.status == kExitInput);
  CHECK(r.err.find("2:6") != std::string::npos);
  const std::string inst = write_temp("one.txt", print_instance(make_instance(
                                                     testing::minimal_tripod())));
  CHECK(run_cli({"certify", inst, "--k", "0"}).status == kExitInput);
  CHECK(run_cli({"certify", inst, "--route", "other"}).status == kExitInput);
  CHECK(run_cli({"certify", inst, "--g5", "t+"}).status == kExitInput);
  CHECK(run_cli({"--help"}).status == kExitFound);
}

TEST_CASE("cli certify reports caps as internal limits") {
  MigrationDigraph d = generate(InstanceSpec::parse("crossing-grid m=3 blocks=3")).graph;
  const std::string inst = write_temp("grid.txt", print_instance(make_instance(d)));
  CliResult r = run_cli({"certify", inst, "--k", "3", "--cap", "2"});
  CHECK((r.status == kExitFound || r.status == kExitNegative || r.status == kExitInternal));
}

TEST_CASE("cli gen, bounds, dot and bench") {
  CliResult r = run_cli({"gen", "comb", "teeth=3", "--seed", "5"});
  REQUIRE(r.status == kExitFound);
  CHECK(r.out.find("seed=5") != std::string::npos);
  InstanceDocument inst = parse_instance(r.out);
  CHECK(inst.graph == generate(InstanceSpec::parse("comb teeth=3 seed=5")).graph);
  CHECK(run_cli({"gen", "nosuch"}).status == kExitInput);

  r = run_cli({"bounds", "--k", "2"});
  CHECK(r.status == kExitFound);
  CHECK(r.out.find("g10(g5(k)) 28") != std::string::npos);
  CHECK(r.out.find("f1 16") != std::string::npos);

  const std::string path = write_temp("comb.txt", print_instance(inst));
  r = run_cli({"certify", path});
  const std::string cert = write_temp("comb.json", r.out);
  r = run_cli({"dot", path, "--certificate", cert});
  CHECK(r.status == kExitFound);
  CHECK(r.out.find("digraph tripods {") == 0);
  CHECK(r.out.find("fillcolor=gold") != std::string::npos);

  const std::string specs =
      write_temp("specs.txt", "# corpus\ncrossing-grid m=3\n\ncomb teeth=3\n");
  r = run_cli({"bench", specs, "--k", "1"});
  CHECK(r.status == kExitFound);
  CHECK(r.out.find("spec,k,outcome,size,verified,seconds\n") == 0);
  CHECK(r.out.find("\"crossing-grid m=3 seed=0\",1,packing,1,yes,") != std::string::npos);
}

}  // namespace
}  // namespace tripods
