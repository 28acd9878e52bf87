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

// Vertex-disjoint path linkages and vertex separators by unit-capacity
// maximum flow on the split digraph.

#ifndef TRIPODS_MENGER_HPP_
#define TRIPODS_MENGER_HPP_

#include <cstddef>

#include "tripods/digraph.hpp"

namespace tripods {

struct MengerResult {
  Linkage linkage;
  // Minimum vertex set meeting every A-B path. May contain vertices of A
  // or B.
  VertexSet separator;
  std::size_t value = 0;
};

// Maximum A-B linkage and minimum A-B separator, both validated before
// return (SoundnessError on failure). A vertex of both A and B yields a
// length-0 path. Throws PreconditionError unless A and B are vertex sets
// of d.
MengerResult max_linkage(const Digraph& d, const VertexSet& a,
                         const VertexSet& b);

// True if some X-Y linkage ends at every vertex of Y. Requires X within the
// sources and Y within the sinks.
bool is_linkable(const MigrationDigraph& d, const VertexSet& x,
                 const VertexSet& y);

// True if deleting `cut` leaves no A-B path.
bool separates(const Digraph& d, const VertexSet& a, const VertexSet& b,
               const VertexSet& cut);

}  // namespace tripods

#endif  // TRIPODS_MENGER_HPP_
