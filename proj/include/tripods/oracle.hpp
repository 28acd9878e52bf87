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

// Brute-force oracles and deterministic instance generators used to test
// the certifying pipeline. The oracles search path systems directly and do
// not rely on the reachability characterization of tripod existence.

#ifndef TRIPODS_ORACLE_HPP_
#define TRIPODS_ORACLE_HPP_

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "tripods/digraph.hpp"

namespace tripods {

inline constexpr std::size_t kDefaultOracleCap = 14;

// Vertex sets (bit i is vertex i) of the inclusion-minimal tripods. Vertex
// identifiers must be below 64.
std::vector<std::uint64_t> brute_minimal_tripod_masks(const MigrationDigraph& d);

bool brute_tripod_exists(const MigrationDigraph& d);

// Maximum number of pairwise vertex-disjoint tripods. Throws
// CapExceededError when d has more than `cap` vertices.
std::size_t brute_packing_number(const MigrationDigraph& d,
                                 std::size_t cap = kDefaultOracleCap);

// Minimum vertex set leaving no tripod, smallest sets tried first.
VertexSet brute_min_hitting_set(const MigrationDigraph& d,
                                std::size_t cap = kDefaultOracleCap);

// Maximum number of pairwise edge-disjoint tripods; the cap applies to the
// number of edges.
std::size_t brute_edge_packing_number(const MigrationDigraph& d,
                                      std::size_t cap = 16);

// Maximum number of pairwise vertex-disjoint A-B paths.
std::size_t brute_max_disjoint_paths(const Digraph& d, const VertexSet& a,
                                     const VertexSet& b,
                                     std::size_t cap = kDefaultOracleCap);

// mt19937_64 with doubles and bounded integers derived from raw draws, so
// results agree across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }
  bool chance(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

struct InstanceSpec {
  std::string generator;
  std::map<std::string, std::string> params;
  std::uint64_t seed = 0;

  // "comb teeth=28 ell=2 seed=7"
  static InstanceSpec parse(const std::string& text);
  std::string to_string() const;

  friend bool operator==(const InstanceSpec&, const InstanceSpec&) = default;
};

struct GeneratedInstance {
  MigrationDigraph graph;
  // names[v] is the display name of vertex v.
  std::vector<std::string> names;
  // Generator-specific linkages and transversal paths:
  //   comb: {teeth}; transversals {Q}.
  //   crossing-grid: {rows P, columns Q}; transversals {column 0}.
  //   doubled-gadget: {K, L} per copy.
  std::vector<Linkage> linkages;
  std::vector<Path> transversals;
};

// Generators: erdos-renyi-digraph (n, p, sources, sinks, overlap),
// layered-dag (layers, width, p), comb (teeth, rows, ell, shuffle),
// crossing-grid (m, blocks), doubled-gadget (copies). Throws
// PreconditionError on unknown generators or parameters.
GeneratedInstance generate(const InstanceSpec& spec);

}  // namespace tripods

#endif  // TRIPODS_ORACLE_HPP_
