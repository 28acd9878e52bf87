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

// The certifying engine: the linkage-pair / tripod dichotomy along a
// crossing path, iterated tripod extraction, both constructions for two
// linkages with common ends, the partition projection from matroid
// intersection, and the recursive packing-or-hitting-set certifier with its
// edge-disjoint wrapper.

#ifndef TRIPODS_PIPELINE_HPP_
#define TRIPODS_PIPELINE_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tripods/bigint.hpp"
#include "tripods/bounds.hpp"
#include "tripods/digraph.hpp"
#include "tripods/onion.hpp"
#include "tripods/tripod.hpp"

namespace tripods {

struct EngineConfig {
  BoundTable bounds;
  Corollary6Options corollary6;
  // Greedily shrink top-level hitting sets before returning them.
  bool minimize_hitting_sets = true;
  // Try greedy find-and-delete before the partition recursion.
  bool greedy_shortcut = true;
  // Partition enumeration is exponential in the number of sources.
  std::size_t max_sources = 12;
};

enum class DichotomyKind { kLinkagePair, kTripod };

// kLinkagePair: k and l pairwise intersect, |k| = |l| >= ell, starts of k
// are sources and ends of l are sinks. kTripod: r is disjoint from
// q_prime and from every path of p_prime, a sublinkage of P of size >= ell
// whose paths all meet the subpath q_prime of Q.
struct Dichotomy10 {
  DichotomyKind kind = DichotomyKind::kLinkagePair;
  Linkage k;
  Linkage l;
  Tripod r;
  Linkage p_prime;
  Path q_prime;
};

Verdict check_dichotomy(const MigrationDigraph& d, const Linkage& p,
                        const Path& q, std::size_t ell, const Dichotomy10& out);

// P is a source-sink linkage of size >= g10(ell) and Q meets all of it.
Dichotomy10 lemma10(const MigrationDigraph& d, const Linkage& p, const Path& q,
                    std::size_t ell);

// Packing of k from a linkage of size >= g9(k) crossed by one path.
PackingOutcome lemma9(const MigrationDigraph& d, const Linkage& p,
                      const Path& q, std::size_t k,
                      const EngineConfig& cfg = {});

// Packing of k from two source-sink linkages with equal end sets and
// disjoint start sets, by the route of cfg.bounds. The Ramsey route
// requires |P| >= g4(k); the iterative route runs on any size and reports
// a diagnostic when its independent set is too small.
PackingOutcome theorem4(const MigrationDigraph& d, const Linkage& p,
                        const Linkage& q, std::size_t k,
                        const EngineConfig& cfg = {});

struct PartitionProjection {
  VertexSet s1;
  VertexSet s2;
  VertexSet t1;
  VertexSet t2;
  // Meets every s1-t2 path and every s2-t1 path.
  VertexSet f;
  // Largest set of sinks linkable from both s1 and s2.
  VertexSet common;
  std::size_t ell = 0;
};

Verdict check_partition_projection(const MigrationDigraph& d,
                                   const PartitionProjection& proj);

struct Lemma12Result {
  // Set when the common linkable set exceeds g4(k).
  std::optional<Certificate> packing;
  PartitionProjection projection;
};

// Throws PreconditionError unless (s1, s2) partitions the sources, and
// BoundShortfallError when the common set exceeds g4(k) but no packing is
// found.
Lemma12Result lemma12(const MigrationDigraph& d, const VertexSet& s1,
                      const VertexSet& s2, std::size_t k,
                      const EngineConfig& cfg = {});

// Verified packing of k tripods or hitting set of at most f1(k) vertices.
// Throws SoundnessError on an internal invariant violation and
// BoundShortfallError when a hitting set would exceed f1(k).
Certificate theorem1_certify(const MigrationDigraph& d, std::size_t k,
                             const EngineConfig& cfg = {});

// Edge-disjoint version through the linegraph. Throws TerminalDegreeError
// unless sources have no in-edges and one out-edge and sinks have one
// in-edge and no out-edges.
EdgeCertificate corollary2_certify(const MigrationDigraph& d, std::size_t k,
                                   const EngineConfig& cfg = {});

}  // namespace tripods

#endif  // TRIPODS_PIPELINE_HPP_
