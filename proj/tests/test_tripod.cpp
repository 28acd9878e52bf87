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
#include "tripods/oracle.hpp"
#include "tripods/tripod.hpp"

namespace tripods {
namespace {

using testing::minimal_tripod;
using testing::two_minimal_tripods;

MigrationDigraph path_graph(std::vector<Vertex> walk, VertexSet s,
                            VertexSet t) {
  Vertex n = *std::max_element(walk.begin(), walk.end()) + 1;
  MigrationDigraph d{Digraph::with_vertices(n), std::move(s), std::move(t)};
  for (std::size_t i = 1; i < walk.size(); ++i) {
    d.graph.add_edge(walk[i - 1], walk[i]);
  }
  return d;
}

TEST_CASE("tripod_exists on fixed graphs") {
  CHECK(tripod_exists(minimal_tripod()));
  CHECK(tripod_exists(path_graph({0, 1, 2}, {0, 1}, {2})));
  CHECK_FALSE(tripod_exists(path_graph({0, 1, 2}, {0}, {2})));
  CHECK_FALSE(tripod_exists(MigrationDigraph{}));
}

TEST_CASE("find_tripod") {
  SUBCASE("minimal tripod") {
    auto r = find_tripod(minimal_tripod());
    REQUIRE(r);
    CHECK(r->c == 2);
    CHECK(r->branch1 == Path{0, 2});
    CHECK(r->branch2 == Path{1, 2});
    CHECK(r->tail == Path{2, 3});
  }
  SUBCASE("internal source gives a length-0 branch") {
    auto d = path_graph({0, 1, 2}, {0, 1}, {2});
    auto r = find_tripod(d);
    REQUIRE(r);
    CHECK(r->s1 == 0);
    CHECK(r->s2 == 1);
    CHECK(r->c == 1);
    CHECK(r->t == 2);
    CHECK(r->branch2.length() == 0);
    CHECK(verify_tripod(d, *r).ok());
  }
  SUBCASE("absent") {
    CHECK_FALSE(find_tripod(path_graph({0, 1, 2}, {0}, {2})));
  }
  SUBCASE("random solvable instances pass the validator") {
    std::mt19937_64 rng(50);
    int solvable = 0;
    while (solvable < 50) {
      auto d = testing::random_migration(rng, 10, 0.2, 0.3, 0.3);
      auto r = find_tripod(d);
      CHECK(r.has_value() == tripod_exists(d));
      if (!r) continue;
      ++solvable;
      CHECK(verify_tripod(d, *r).ok());
    }
  }
}

TEST_CASE("tripod_from_path_pair") {
  SUBCASE("paths meeting only at the end") {
    auto d = path_graph({0, 2, 4}, {0, 1}, {4});
    d.graph.add_vertex(3);
    d.graph.add_edge(1, 3);
    d.graph.add_edge(3, 4);
    auto r = tripod_from_path_pair(d, Path{0, 2, 4}, Path{1, 3, 4});
    CHECK(r.c == 4);
    CHECK(r.tail.length() == 0);
  }
  SUBCASE("shared suffix of length 2") {
    // 0 -> 2 -> 4 -> 5 -> 6 and 1 -> 3 -> 4 -> 5 -> 6.
    auto d = path_graph({0, 2, 4, 5, 6}, {0, 1}, {6});
    d.graph.add_edge(1, 3);
    d.graph.add_edge(3, 4);
    Path p{0, 2, 4, 5, 6}, q{1, 3, 4, 5, 6};
    auto r = tripod_from_path_pair(d, p, q);
    CHECK(r.c == 4);
    CHECK(r.tail == Path{4, 5, 6});
    // Every tripod inside p and q has its centre on the shared suffix, and
    // 4 is the one furthest from the sink.
    std::vector<Path> both{p, q};
    MigrationDigraph sub{path_union(both, 7), {0, 1}, {6}};
    CHECK(brute_minimal_tripod_masks(sub).size() == 1);
  }
  SUBCASE("crossing then re-diverging") {
    // p: 0 1 2 3 4 5 8, q: 6 2 7 4 8 share 2 and 4 but split between them.
    MigrationDigraph d{Digraph::with_vertices(9), {0, 6}, {8}};
    Path p{0, 1, 2, 3, 4, 5, 8}, q{6, 2, 7, 4, 8};
    for (const Path* path : {&p, &q}) {
      for (std::size_t i = 1; i < path->size(); ++i) {
        d.graph.add_edge((*path)[i - 1], (*path)[i]);
      }
    }
    auto r = tripod_from_path_pair(d, p, q);
    CHECK(verify_tripod(d, r).ok());
    for (Vertex v : r.vertices()) CHECK((p.contains(v) || q.contains(v)));
  }
  SUBCASE("equal starts are rejected") {
    auto d = minimal_tripod();
    CHECK_THROWS_AS(tripod_from_path_pair(d, Path{0, 2, 3}, Path{0, 2, 3}),
                    PreconditionError);
  }
}

TEST_CASE("verify_tripod diagnostics") {
  auto d = minimal_tripod();
  Tripod good{0, 1, 3, 2, Path{0, 2}, Path{1, 2}, Path{2, 3}};
  CHECK(verify_tripod(d, good).ok());
  Tripod same = good;
  same.s2 = 0;
  same.branch2 = Path{0, 2};
  CHECK_FALSE(verify_tripod(d, same).ok());
  // Branches through a shared vertex 4.
  MigrationDigraph e{Digraph::with_vertices(5), {0, 1}, {3}};
  for (auto [u, v] : std::vector<std::pair<Vertex, Vertex>>{
           {0, 4}, {1, 4}, {4, 2}, {2, 3}}) {
    e.graph.add_edge(u, v);
  }
  Tripod shared{0, 1, 3, 2, Path{0, 4, 2}, Path{1, 4, 2}, Path{2, 3}};
  auto verdict = verify_tripod(e, shared);
  CHECK_FALSE(verdict.ok());
  CHECK(verdict.reason().find("non-centre") != std::string::npos);
}

TEST_CASE("verify_certificate") {
  SUBCASE("empty hitting set on a tripod-free digraph") {
    Certificate cert;
    CHECK(verify_certificate(path_graph({0, 1}, {0}, {1}), 1, cert).ok());
  }
  SUBCASE("two disjoint tripods") {
    auto d = two_minimal_tripods();
    Certificate cert;
    cert.kind = CertificateKind::kPacking;
    cert.packing = {*find_tripod(minimal_tripod(0)), *find_tripod(minimal_tripod(4))};
    CHECK(verify_certificate(d, 2, cert).ok());
    cert.packing.push_back(cert.packing.front());
    CHECK_FALSE(verify_certificate(d, 3, cert).ok());
  }
  SUBCASE("hitting set missing a tripod") {
    auto d = two_minimal_tripods();
    Certificate cert;
    cert.hitting_set = {2};
    cert.bound = 10;
    CHECK_FALSE(verify_certificate(d, 2, cert).ok());
    auto rest = delete_vertices(d, cert.hitting_set);
    CHECK(brute_tripod_exists(rest));
    cert.hitting_set = {2, 6};
    CHECK(verify_certificate(d, 2, cert).ok());
    cert.bound = 1;
    CHECK_FALSE(verify_certificate(d, 2, cert).ok());
  }
}

TEST_CASE("edge certificates") {
  // Two tripods sharing the centre 2 but no edge.
  MigrationDigraph d{Digraph::with_vertices(7), {0, 1, 4, 5}, {3, 6}};
  for (auto [u, v] : std::vector<std::pair<Vertex, Vertex>>{
           {0, 2}, {1, 2}, {2, 3}, {4, 2}, {5, 2}, {2, 6}}) {
    d.graph.add_edge(u, v);
  }
  EdgeCertificate cert;
  cert.kind = CertificateKind::kPacking;
  cert.packing = {Tripod{0, 1, 3, 2, Path{0, 2}, Path{1, 2}, Path{2, 3}},
                  Tripod{4, 5, 6, 2, Path{4, 2}, Path{5, 2}, Path{2, 6}}};
  CHECK(verify_edge_certificate(d, 2, cert).ok());
  Certificate vertex_cert;
  vertex_cert.kind = CertificateKind::kPacking;
  vertex_cert.packing = cert.packing;
  CHECK_FALSE(verify_certificate(d, 2, vertex_cert).ok());

  EdgeCertificate hit;
  hit.hitting_set = {{2, 3}, {2, 6}};
  hit.bound = 2;
  CHECK(verify_edge_certificate(d, 2, hit).ok());
  hit.hitting_set.pop_back();
  CHECK_FALSE(verify_edge_certificate(d, 2, hit).ok());
}

TEST_CASE("detection agrees with path-triple enumeration") {
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 300; ++trial) {
    const Vertex n = 1 + static_cast<Vertex>(rng() % 9);
    auto d = testing::random_migration(rng, n, 0.25, 0.35, 0.35);
    CHECK(tripod_exists(d) == brute_tripod_exists(d));
  }
}

TEST_CASE("tripod_exists is monotone") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    auto d = testing::random_migration(rng, 9, 0.15, 0.35, 0.35);
    const bool before = tripod_exists(d);
    Vertex u = static_cast<Vertex>(rng() % 9), v = static_cast<Vertex>(rng() % 9);
    if (u != v) {
      auto more = d;
      more.graph.add_edge(u, v);
      CHECK((!before || tripod_exists(more)));
    }
    auto less = delete_vertices(d, {static_cast<Vertex>(rng() % 9)});
    CHECK((before || !tripod_exists(less)));
  }
}

TEST_CASE("minimal tripod enumeration and disjoint search") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 80; ++trial) {
    auto d = testing::random_migration(rng, 9, 0.2, 0.35, 0.35);
    auto tripods = enumerate_minimal_tripods(d, 100000);
    auto masks = brute_minimal_tripod_masks(d);
    CHECK(tripods.size() == masks.size());
    for (const auto& r : tripods) CHECK(verify_tripod(d, r).ok());
    const std::size_t packing = brute_packing_number(d);
    auto found = find_disjoint_tripods(d, packing, 100000);
    REQUIRE(found);
    CHECK(found->size() == packing);
    CHECK(check_disjoint(*found).ok());
    CHECK_FALSE(find_disjoint_tripods(d, packing + 1, 100000));
  }
  CHECK_THROWS_AS(enumerate_minimal_tripods(two_minimal_tripods(), 1),
                  CapExceededError);
}

}  // namespace
}  // namespace tripods
