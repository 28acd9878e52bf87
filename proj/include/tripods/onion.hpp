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

// Onions and onion-stars in the split auxiliary digraph of two pairwise
// intersecting linkages, a bounded search harvesting an onion-star, and the
// translation of its onions back into vertex-disjoint tripods.

#ifndef TRIPODS_ONION_HPP_
#define TRIPODS_ONION_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tripods/bigint.hpp"
#include "tripods/digraph.hpp"
#include "tripods/tripod.hpp"

namespace tripods {

// Two root-stem paths and one stem-root path, pairwise edge-disjoint.
struct Onion {
  Vertex root = 0;
  Vertex stem = 0;
  Path forward1;
  Path forward2;
  Path backward;

  friend bool operator==(const Onion&, const Onion&) = default;
};

// Order-k onion-star: k onions rooted at the centre and k onions whose stem
// is the centre, all pairwise edge-disjoint, every other root and stem
// distinct.
struct OnionStar {
  Vertex centre = 0;
  std::vector<Onion> out_onions;
  std::vector<Onion> in_onions;
};

Verdict check_onion(const Digraph& g, const Onion& z);
Verdict check_onion_star(const Digraph& g, const OnionStar& star,
                         std::size_t order);

// Split union of the K and L paths plus an apex joined to the in-copies of
// start(K) and from the out-copies of end(L). family_p are the lifted
// K-paths behind the apex, family_q the lifted L-paths followed by it.
struct AuxiliaryGraph {
  Digraph graph;
  Vertex apex = 0;
  std::vector<Path> family_p;
  std::vector<Path> family_q;
};

// Throws PreconditionError unless K and L are linkages of d with
// start(K) among the sources and end(L) among the sinks.
AuxiliaryGraph build_auxiliary(const MigrationDigraph& d, const Linkage& k,
                               const Linkage& l);

struct HarvestOptions {
  // Search nodes across all deepening rounds.
  std::size_t node_limit = 2'000'000;
};

struct HarvestResult {
  std::optional<OnionStar> star;
  // Empty on success.
  std::string diagnostic;
};

// Searches for an onion-star of order k centred at x, deepening on the
// total number of edges used. The families must start (P) and end (Q) at
// x, pairwise share an edge across families, and be edge-disjoint within
// each family; a violation throws PreconditionError naming the condition.
// A failure with both families of size at least g5_threshold is reported
// as a bound-parameter diagnostic.
HarvestResult harvest_onion_star(const Digraph& aux, Vertex x,
                                 const std::vector<Path>& p,
                                 const std::vector<Path>& q, std::size_t k,
                                 const BigInt& g5_threshold,
                                 const HarvestOptions& options = {});

// One tripod per onion rooted at the centre: forward paths lose their first
// edge, the backward path its last, and everything is projected back to d.
// The results are checked valid and pairwise disjoint (SoundnessError
// otherwise).
std::vector<Tripod> onions_to_tripods(const MigrationDigraph& d,
                                      const OnionStar& star);

struct Corollary6Options {
  HarvestOptions harvest;
  // Candidate cap of the direct fallback search.
  std::size_t fallback_cap = 200'000;
};

struct PackingOutcome {
  std::optional<Certificate> certificate;
  std::string diagnostic;
};

// k disjoint tripods from pairwise intersecting K and L: harvest an
// onion-star in the auxiliary digraph, or fall back to direct search inside
// the union of K and L. Provenance records which one succeeded. Throws
// PreconditionError when the hypotheses fail.
PackingOutcome corollary6(const MigrationDigraph& d, const Linkage& k,
                          const Linkage& l, std::size_t order,
                          const BigInt& g5_threshold,
                          const Corollary6Options& options = {});

}  // namespace tripods

#endif  // TRIPODS_ONION_HPP_
