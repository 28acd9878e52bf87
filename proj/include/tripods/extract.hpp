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

// Constructive Ramsey and transitive-subtournament extraction.

#ifndef TRIPODS_EXTRACT_HPP_
#define TRIPODS_EXTRACT_HPP_

#include <cstddef>
#include <vector>

namespace tripods {

// Dense adjacency matrix; for undirected graphs it must be symmetric.
using AdjacencyMatrix = std::vector<std::vector<char>>;

struct RamseyResult {
  bool clique = false;
  std::vector<std::size_t> vertices;
};

// Clique of size a or independent set of size b in an undirected graph with
// at least Ramsey(a, b) vertices, by the pigeonhole recursion on a pivot's
// neighbourhood. The clique side is tried first. Output verified.
RamseyResult ramsey_extract(const AdjacencyMatrix& g, std::size_t a,
                            std::size_t b);

// Vertices v1..vc with every (vi, vj), i < j, an edge, from a semi-complete
// digraph on at least 2^(c - 1) vertices. Recurses into the larger of a
// pivot's out- and in-neighbourhoods. Output verified.
std::vector<std::size_t> transitive_extract(const AdjacencyMatrix& t,
                                            std::size_t c);

}  // namespace tripods

#endif  // TRIPODS_EXTRACT_HPP_
