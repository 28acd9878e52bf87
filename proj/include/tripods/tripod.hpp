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

// Tripods: detection, extraction, validation, and the packing / hitting-set
// certificates built from them.

#ifndef TRIPODS_TRIPOD_HPP_
#define TRIPODS_TRIPOD_HPP_

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tripods/bigint.hpp"
#include "tripods/digraph.hpp"

namespace tripods {

// Branches s1->c and s2->c and tail c->t, disjoint except at c.
struct Tripod {
  Vertex s1 = 0;
  Vertex s2 = 0;
  Vertex t = 0;
  Vertex c = 0;
  Path branch1;
  Path branch2;
  Path tail;

  VertexSet vertices() const;
  std::vector<Edge> edges() const;

  friend bool operator==(const Tripod&, const Tripod&) = default;
};

Verdict verify_tripod(const MigrationDigraph& d, const Tripod& r);

// Some sink is reachable from two distinct sources.
bool tripod_exists(const MigrationDigraph& d);

// Tripod from a pair of source-sink paths of least total length, centre
// pushed as far from the sink as possible, ties broken lexicographically.
// nullopt when no tripod exists.
std::optional<Tripod> find_tripod(const MigrationDigraph& d);

// Tripod inside p and q, which must be source-sink paths of `host` with
// distinct starts and a common end.
Tripod tripod_from_path_pair(const MigrationDigraph& host, const Path& p,
                             const Path& q);

// True if no two tripods share a vertex.
Verdict check_disjoint(const std::vector<Tripod>& tripods);

enum class CertificateKind { kPacking, kHittingSet };

struct Certificate {
  CertificateKind kind = CertificateKind::kHittingSet;
  std::vector<Tripod> packing;
  VertexSet hitting_set;
  // Producing steps, outermost first.
  std::vector<std::string> provenance;
  // Claimed upper bound on the hitting set size.
  BigInt bound = 0;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

// Packing: exactly k valid, pairwise vertex-disjoint tripods. Hitting set:
// vertices of d, at most `bound` of them, leaving no tripod.
Verdict verify_certificate(const MigrationDigraph& d, std::size_t k,
                           const Certificate& cert);

struct EdgeCertificate {
  CertificateKind kind = CertificateKind::kHittingSet;
  std::vector<Tripod> packing;
  std::vector<Edge> hitting_set;
  std::vector<std::string> provenance;
  BigInt bound = 0;

  friend bool operator==(const EdgeCertificate&,
                         const EdgeCertificate&) = default;
};

// Packing: exactly k valid, pairwise edge-disjoint tripods. Hitting set:
// edges of d, at most `bound` of them, leaving no tripod.
Verdict verify_edge_certificate(const MigrationDigraph& d, std::size_t k,
                                const EdgeCertificate& cert);

// Tripods whose vertex sets are inclusion-minimal, deduplicated by vertex
// set, in order of size then vertex set. Throws CapExceededError once more
// than `cap` candidates are generated.
std::vector<Tripod> enumerate_minimal_tripods(const MigrationDigraph& d,
                                              std::size_t cap);

// k pairwise vertex-disjoint tripods, or nullopt if none exist. Greedy
// first, then exhaustive search over minimal tripods. Throws
// CapExceededError when the enumeration exceeds `cap`.
std::optional<std::vector<Tripod>> find_disjoint_tripods(
    const MigrationDigraph& d, std::size_t k, std::size_t cap);

}  // namespace tripods

#endif  // TRIPODS_TRIPOD_HPP_
