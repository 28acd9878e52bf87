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

#include <random>

#include "doctest.h"
#include "fixtures.hpp"
#include "tripods/errors.hpp"
#include "tripods/menger.hpp"
#include "tripods/oracle.hpp"
#include "tripods/pipeline.hpp"

namespace tripods {
namespace {

EngineConfig route_config(Route route) {
  EngineConfig cfg;
  cfg.bounds = BoundTable(G5(), route);
  return cfg;
}

TEST_CASE("lemma10 on a straight comb returns a tripod") {
  auto inst = generate(InstanceSpec::parse("comb teeth=28"));
  const Linkage& p = inst.linkages[0];
  const Path& q = inst.transversals[0];
  Dichotomy10 r = lemma10(inst.graph, p, q, 2);
  CHECK(r.kind == DichotomyKind::kTripod);
  CHECK(check_dichotomy(inst.graph, p, q, 2, r));
  CHECK(r.p_prime.size() >= 2);
  for (Vertex v : r.r.vertices()) CHECK_FALSE(r.q_prime.contains(v));
}

TEST_CASE("lemma10 on a braided comb returns a linkage pair") {
  auto inst = generate(InstanceSpec::parse("comb teeth=28 ell=2"));
  const Linkage& p = inst.linkages[0];
  const Path& q = inst.transversals[0];
  Dichotomy10 r = lemma10(inst.graph, p, q, 2);
  REQUIRE(r.kind == DichotomyKind::kLinkagePair);
  CHECK(check_dichotomy(inst.graph, p, q, 2, r));
  CHECK(r.k.size() == 2);
  CHECK(r.l.size() == 2);
}

TEST_CASE("lemma10 preconditions") {
  auto inst = generate(InstanceSpec::parse("comb teeth=27"));
  CHECK_THROWS_AS(lemma10(inst.graph, inst.linkages[0], inst.transversals[0], 2),
                  PreconditionError);
  auto big = generate(InstanceSpec::parse("comb teeth=28"));
  Linkage p = big.linkages[0];
  CHECK_THROWS_AS(lemma10(big.graph, p, Path{p.paths[0].start()}, 2),
                  PreconditionError);
}

TEST_CASE("the dichotomy validator rejects tampering") {
  auto inst = generate(InstanceSpec::parse("comb teeth=28"));
  const Linkage& p = inst.linkages[0];
  const Path& q = inst.transversals[0];
  Dichotomy10 r = lemma10(inst.graph, p, q, 2);
  Dichotomy10 bad = r;
  bad.p_prime.paths.resize(1);
  CHECK_FALSE(check_dichotomy(inst.graph, p, q, 2, bad));
  bad = r;
  bad.q_prime = q;
  CHECK_FALSE(check_dichotomy(inst.graph, p, q, 2, bad));
}

TEST_CASE("lemma9 extracts packings") {
  EngineConfig cfg;
  auto comb = generate(InstanceSpec::parse("comb teeth=3"));
  PackingOutcome one = lemma9(comb.graph, comb.linkages[0], comb.transversals[0], 1, cfg);
  REQUIRE(one.certificate);
  CHECK(verify_certificate(comb.graph, 1, *one.certificate));
  auto braided = generate(InstanceSpec::parse("comb teeth=28 ell=2"));
  CHECK_THROWS_AS(lemma9(braided.graph, braided.linkages[0],
                         braided.transversals[0], 2, cfg),
                  PreconditionError);
  Linkage single{{comb.linkages[0].paths[0]}};
  CHECK_THROWS_AS(lemma9(comb.graph, single, comb.transversals[0], 1, cfg),
                  PreconditionError);
}

TEST_CASE("theorem4 on crossing grids, both routes") {
  struct Case {
    const char* spec;
    std::size_t k;
  };
  for (const Case& c : {Case{"crossing-grid m=3", 1}, Case{"crossing-grid m=5", 1},
                        Case{"crossing-grid m=4 blocks=2", 2},
                        Case{"crossing-grid m=3 blocks=3", 2}}) {
    auto inst = generate(InstanceSpec::parse(c.spec));
    for (Route route : {Route::kRamsey, Route::kIterative}) {
      CAPTURE(c.spec);
      CAPTURE(to_string(route));
      PackingOutcome out = theorem4(inst.graph, inst.linkages[0], inst.linkages[1],
                                    c.k, route_config(route));
      REQUIRE(out.certificate);
      CHECK(out.certificate->packing.size() == c.k);
      CHECK(verify_certificate(inst.graph, c.k, *out.certificate));
    }
  }
}

TEST_CASE("theorem4 preconditions") {
  auto inst = generate(InstanceSpec::parse("crossing-grid m=3"));
  const Linkage& rows = inst.linkages[0];
  CHECK_THROWS_AS(theorem4(inst.graph, rows, rows, 1, {}), PreconditionError);
  CHECK_THROWS_AS(theorem4(inst.graph, rows, inst.linkages[1], 2, {}),
                  PreconditionError);
  Linkage short_cols{{inst.linkages[1].paths[0]}};
  CHECK_THROWS_AS(theorem4(inst.graph, rows, short_cols, 1, {}), PreconditionError);
}

TEST_CASE("lemma12 projections") {
  auto d = testing::minimal_tripod();
  Lemma12Result none = lemma12(d, {0, 1}, {}, 2);
  CHECK_FALSE(none.packing);
  CHECK(none.projection.ell == 0);
  CHECK(none.projection.f.empty());
  CHECK(none.projection.t1 == d.sinks);

  Lemma12Result split = lemma12(d, {0}, {1}, 2);
  CHECK_FALSE(split.packing);
  CHECK(split.projection.ell == 1);
  CHECK(split.projection.f.size() == 1);
  CHECK(check_partition_projection(d, split.projection));
  CHECK(separates(d.graph, {0}, split.projection.t2, split.projection.f));
  CHECK(separates(d.graph, {1}, split.projection.t1, split.projection.f));

  CHECK_THROWS_AS(lemma12(d, {0}, {}, 2), PreconditionError);
}

TEST_CASE("lemma12 escapes with a packing when the common set is large") {
  EngineConfig cfg;
  cfg.bounds = BoundTable(G5::parse("1"), Route::kRamsey);
  auto inst = generate(InstanceSpec::parse("crossing-grid m=3"));
  VertexSet s1, s2;
  for (const Path& p : inst.linkages[0].paths) s1.insert(p.start());
  for (const Path& p : inst.linkages[1].paths) s2.insert(p.start());
  Lemma12Result r = lemma12(inst.graph, s1, s2, 1, cfg);
  REQUIRE(r.packing);
  CHECK(verify_certificate(inst.graph, 1, *r.packing));
  CHECK(r.packing->provenance.front() == "lemma12:escape");
}

TEST_CASE("theorem1 small cases") {
  MigrationDigraph path{Digraph::with_vertices(3), {0}, {2}};
  path.graph.add_edge(0, 1);
  path.graph.add_edge(1, 2);
  for (std::size_t k = 1; k <= 3; ++k) {
    Certificate c = theorem1_certify(path, k);
    CHECK(c.kind == CertificateKind::kHittingSet);
    CHECK(c.hitting_set.empty());
  }
  EngineConfig no_greedy;
  no_greedy.greedy_shortcut = false;
  auto two = testing::two_minimal_tripods();
  Certificate packed = theorem1_certify(two, 2, no_greedy);
  REQUIRE(packed.kind == CertificateKind::kPacking);
  CHECK(verify_certificate(two, 2, packed));
  CHECK(packed.provenance.front() == "theorem1:splendid");
  CHECK(brute_packing_number(two) == 2);

  auto one = testing::minimal_tripod();
  Certificate hit = theorem1_certify(one, 2, no_greedy);
  REQUIRE(hit.kind == CertificateKind::kHittingSet);
  CHECK(verify_certificate(one, 2, hit));
  CHECK(BigInt(hit.hitting_set.size()) <= BoundTable().f1(2));
  CHECK_THROWS_AS(theorem1_certify(one, 0), PreconditionError);
}

TEST_CASE("theorem1 agrees with the oracles on random instances") {
  std::mt19937_64 rng(2026);
  for (int trial = 0; trial < 150; ++trial) {
    const Vertex n = 4 + static_cast<Vertex>(rng() % 8);
    auto d = testing::random_migration(rng, n, 0.25, 0.35, 0.35);
    while (d.sources.size() > 5) d.sources.erase(d.sources.begin());
    const std::size_t k = 1 + rng() % 3;
    for (bool greedy : {true, false}) {
      EngineConfig cfg;
      cfg.greedy_shortcut = greedy;
      Certificate c = theorem1_certify(d, k, cfg);
      CHECK(verify_certificate(d, k, c));
      if (c.kind == CertificateKind::kPacking) {
        CHECK(brute_packing_number(d) >= k);
      } else {
        CHECK(brute_min_hitting_set(d).size() <= c.hitting_set.size());
        CHECK(BigInt(c.hitting_set.size()) <= cfg.bounds.f1(static_cast<long>(k)));
      }
    }
  }
}

MigrationDigraph padded_minimal_tripod() {
  // a -> s1 -> c, b -> s2 -> c, c -> t -> z with a, b sources and z the sink.
  MigrationDigraph d{Digraph::with_vertices(7), {0, 1}, {6}};
  d.graph.add_edge(0, 2);
  d.graph.add_edge(1, 3);
  d.graph.add_edge(2, 4);
  d.graph.add_edge(3, 4);
  d.graph.add_edge(4, 5);
  d.graph.add_edge(5, 6);
  return d;
}

TEST_CASE("corollary2 edge certificates") {
  auto d = padded_minimal_tripod();
  EdgeCertificate one = corollary2_certify(d, 1);
  CHECK(one.kind == CertificateKind::kPacking);
  CHECK(verify_edge_certificate(d, 1, one));
  EdgeCertificate two = corollary2_certify(d, 2);
  CHECK(two.kind == CertificateKind::kHittingSet);
  CHECK(verify_edge_certificate(d, 2, two));

  // Two tripods through the shared vertex 4 that use disjoint edges.
  MigrationDigraph shared{Digraph::with_vertices(13), {0, 1, 2, 3}, {11, 12}};
  for (auto [u, v] : std::initializer_list<std::pair<Vertex, Vertex>>{
           {0, 5}, {1, 6}, {2, 7}, {3, 8}, {5, 4}, {6, 4}, {4, 9}, {7, 10},
           {8, 10}, {10, 4}, {4, 11}, {9, 12}}) {
    shared.graph.add_edge(u, v);
  }
  CHECK(brute_edge_packing_number(shared) == 2);
  CHECK(brute_packing_number(shared) == 1);
  EdgeCertificate packed = corollary2_certify(shared, 2);
  CHECK(packed.kind == CertificateKind::kPacking);
  CHECK(verify_edge_certificate(shared, 2, packed));

  MigrationDigraph bad = padded_minimal_tripod();
  bad.graph.add_edge(0, 3);
  CHECK_THROWS_AS(corollary2_certify(bad, 1), TerminalDegreeError);
}

}  // namespace
}  // namespace tripods
