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
#include "tripods/digraph.hpp"
#include "tripods/errors.hpp"

namespace tripods {
namespace {

using testing::minimal_tripod;
using testing::random_digraph;
using testing::random_subset;

TEST_CASE("digraph rejects loops, undeclared endpoints, and duplicates") {
  Digraph d = Digraph::with_vertices(3);
  CHECK(d.add_edge(0, 1));
  CHECK_FALSE(d.add_edge(0, 1));
  CHECK_THROWS_AS(d.add_edge(1, 1), PreconditionError);
  CHECK_THROWS_AS(d.add_edge(1, 7), PreconditionError);
  CHECK(d.num_edges() == 1);
  CHECK(d.remove_edge(0, 1));
  CHECK_FALSE(d.remove_edge(0, 1));
  CHECK(d.num_edges() == 0);
}

TEST_CASE("reverse") {
  SUBCASE("edgeless graph is fixed") {
    Digraph d = Digraph::with_vertices(4);
    CHECK(reverse(d) == d);
  }
  SUBCASE("single edge flips") {
    Digraph d = Digraph::with_vertices(2);
    d.add_edge(0, 1);
    Digraph r = reverse(d);
    CHECK(r.has_edge(1, 0));
    CHECK_FALSE(r.has_edge(0, 1));
    CHECK(r.num_edges() == 1);
  }
  SUBCASE("involution on random digraphs") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
      Digraph d = random_digraph(rng, 10, 0.3);
      Digraph r = reverse(d);
      for (Vertex u = 0; u < 10; ++u) {
        for (Vertex v = 0; v < 10; ++v) {
          CHECK(r.has_edge(u, v) == d.has_edge(v, u));
        }
      }
      CHECK(reverse(r) == d);
    }
  }
}

TEST_CASE("delete_vertices") {
  SUBCASE("deleting nothing is the identity") {
    auto d = minimal_tripod();
    CHECK(delete_vertices(d, {}) == d);
  }
  SUBCASE("deleting the centre of the minimal tripod leaves no edges") {
    auto d = delete_vertices(minimal_tripod(), {2});
    CHECK(d.graph.vertices() == std::vector<Vertex>{0, 1, 3});
    CHECK(d.graph.num_edges() == 0);
    CHECK(d.sources == VertexSet{0, 1});
    CHECK(d.sinks == VertexSet{3});
  }
  SUBCASE("rejects sets outside the vertex set") {
    CHECK_THROWS_AS(delete_vertices(minimal_tripod(), {9}), PreconditionError);
  }
  SUBCASE("edge count matches a filtered recount and commutes with reverse") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 50; ++trial) {
      Digraph d = random_digraph(rng, 12, 0.25);
      VertexSet f = random_subset(rng, 12, 0.3);
      std::size_t expected = 0;
      for (const Edge& e : d.edges()) {
        if (!f.contains(e.tail) && !f.contains(e.head)) ++expected;
      }
      Digraph cut = delete_vertices(d, f);
      CHECK(cut.num_edges() == expected);
      CHECK(cut.num_vertices() == 12 - f.size());
      CHECK(reverse(cut) == delete_vertices(reverse(d), f));
    }
  }
}

TEST_CASE("split_vertices") {
  SUBCASE("single vertex") {
    auto s = split_vertices(Digraph::with_vertices(1));
    CHECK(s.graph.num_vertices() == 2);
    CHECK(s.graph.num_edges() == 1);
  }
  SUBCASE("single edge") {
    Digraph d = Digraph::with_vertices(2);
    d.add_edge(0, 1);
    auto s = split_vertices(d);
    CHECK(s.graph.num_vertices() == 4);
    CHECK(s.graph.num_edges() == 3);
    CHECK(s.graph.has_edge(SplitMapping::out_copy(0), SplitMapping::in_copy(1)));
  }
  SUBCASE("doubling and lifting on random digraphs") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
      Digraph d = random_digraph(rng, 9, 0.3);
      auto s = split_vertices(d);
      CHECK(s.graph.num_vertices() == 2 * d.num_vertices());
      CHECK(s.graph.num_edges() == d.num_vertices() + d.num_edges());
      for (Vertex v = 1; v < 9; ++v) {
        auto p = shortest_path(d, 0, v);
        if (!p) continue;
        Path lifted = lift_path(*p);
        CHECK(lifted.length() == 2 * p->length() + 1);
        CHECK(check_path(s.graph, lifted).ok());
        CHECK(project_path(lifted) == *p);
      }
    }
  }
}

TEST_CASE("linegraph") {
  SUBCASE("two-edge path") {
    MigrationDigraph d{Digraph::with_vertices(3), {0}, {2}};
    d.graph.add_edge(0, 1);
    d.graph.add_edge(1, 2);
    auto lg = linegraph(d);
    CHECK(lg.graph.graph.num_vertices() == 2);
    CHECK(lg.graph.graph.num_edges() == 1);
    CHECK(lg.graph.sources == VertexSet{lg.vertex_of({0, 1})});
    CHECK(lg.graph.sinks == VertexSet{lg.vertex_of({1, 2})});
  }
  SUBCASE("minimal tripod") {
    auto d = minimal_tripod();
    auto lg = linegraph(d);
    const Vertex s1c = lg.vertex_of({0, 2});
    const Vertex s2c = lg.vertex_of({1, 2});
    const Vertex ct = lg.vertex_of({2, 3});
    CHECK(lg.graph.graph.num_edges() == 2);
    CHECK(lg.graph.graph.has_edge(s1c, ct));
    CHECK(lg.graph.graph.has_edge(s2c, ct));
    CHECK(lg.graph.sources == VertexSet{s1c, s2c});
    CHECK(lg.graph.sinks == VertexSet{ct});
  }
  SUBCASE("degree violations name the terminal") {
    auto d = minimal_tripod();
    d.graph.add_vertex(4);
    d.graph.add_edge(0, 4);
    try {
      linegraph(d);
      FAIL("expected TerminalDegreeError");
    } catch (const TerminalDegreeError& e) {
      CHECK(e.vertex() == 0);
    }
  }
}

TEST_CASE("subpath") {
  Path p{4, 5, 6, 7};
  CHECK(subpath(p, 4, 7) == p);
  CHECK(subpath(p, 5, 5) == Path{5});
  CHECK(subpath(p, 5, 7) == Path{5, 6, 7});
  CHECK_THROWS_AS(subpath(p, 7, 5), PreconditionError);
  CHECK_THROWS_AS(subpath(p, 4, 9), PreconditionError);
}

TEST_CASE("paths and linkages") {
  CHECK_THROWS_AS(Path(std::vector<Vertex>{}), PreconditionError);
  CHECK_THROWS_AS((Path{1, 2, 1}), PreconditionError);
  auto d = minimal_tripod();
  CHECK(check_path(d.graph, Path{0, 2, 3}).ok());
  CHECK_FALSE(check_path(d.graph, Path{0, 3}).ok());
  Linkage l{{Path{0, 2}, Path{1, 2}}};
  CHECK_FALSE(check_linkage(d.graph, l).ok());
  Linkage ok{{Path{0, 2, 3}, Path{1}}};
  CHECK(check_linkage(d.graph, ok, {0, 1}, {1, 3}).ok());
  CHECK_FALSE(check_linkage(d.graph, ok, {0}, {1, 3}).ok());
  CHECK(concat(Path{0, 2}, Path{2, 3}) == Path{0, 2, 3});
  CHECK(shortcut_walk({0, 1, 2, 1, 3}) == Path{0, 1, 3});
}

}  // namespace
}  // namespace tripods
