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

// Small hand-built instances shared by the unit tests.

#ifndef TRIPODS_TESTS_FIXTURES_HPP_
#define TRIPODS_TESTS_FIXTURES_HPP_

#include <random>
#include <utility>
#include <vector>

#include "tripods/digraph.hpp"

namespace tripods::testing {

// s1=0 -> c=2 <- s2=1, c -> t=3.
inline MigrationDigraph minimal_tripod(Vertex offset = 0) {
  MigrationDigraph d;
  for (Vertex v = 0; v < 4; ++v) d.graph.add_vertex(offset + v);
  d.graph.add_edge(offset + 0, offset + 2);
  d.graph.add_edge(offset + 1, offset + 2);
  d.graph.add_edge(offset + 2, offset + 3);
  d.sources = {offset + 0, offset + 1};
  d.sinks = {offset + 3};
  return d;
}

inline MigrationDigraph two_minimal_tripods() {
  MigrationDigraph a = minimal_tripod(0);
  MigrationDigraph b = minimal_tripod(4);
  for (Vertex v : b.graph.vertices()) a.graph.add_vertex(v);
  for (const Edge& e : b.graph.edges()) a.graph.add_edge(e.tail, e.head);
  a.sources.insert(b.sources.begin(), b.sources.end());
  a.sinks.insert(b.sinks.begin(), b.sinks.end());
  return a;
}

inline Digraph random_digraph(std::mt19937_64& rng, Vertex n, double p) {
  Digraph d = Digraph::with_vertices(n);
  std::bernoulli_distribution coin(p);
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && coin(rng)) d.add_edge(u, v);
    }
  }
  return d;
}

inline VertexSet random_subset(std::mt19937_64& rng, Vertex n, double p) {
  VertexSet s;
  std::bernoulli_distribution coin(p);
  for (Vertex v = 0; v < n; ++v) {
    if (coin(rng)) s.insert(v);
  }
  return s;
}

inline MigrationDigraph random_migration(std::mt19937_64& rng, Vertex n,
                                         double p, double ps, double pt) {
  return {random_digraph(rng, n, p), random_subset(rng, n, ps),
          random_subset(rng, n, pt)};
}

// Random core on 0..core-1 with pendant sources (one out-edge each) and
// pendant sinks (one in-edge each) attached to random core vertices.
inline MigrationDigraph random_degree_conforming(std::mt19937_64& rng, Vertex core,
                                                 double p, Vertex sources,
                                                 Vertex sinks) {
  MigrationDigraph d{random_digraph(rng, core, p), {}, {}};
  std::uniform_int_distribution<Vertex> pick(0, core - 1);
  Vertex next = core;
  for (Vertex i = 0; i < sources; ++i, ++next) {
    d.graph.add_vertex(next);
    d.graph.add_edge(next, pick(rng));
    d.sources.insert(next);
  }
  for (Vertex i = 0; i < sinks; ++i, ++next) {
    d.graph.add_vertex(next);
    d.graph.add_edge(pick(rng), next);
    d.sinks.insert(next);
  }
  return d;
}

}  // namespace tripods::testing

#endif  // TRIPODS_TESTS_FIXTURES_HPP_
