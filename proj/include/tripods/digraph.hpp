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

// Digraph and migration-digraph data model, paths, linkages, and the
// structural transformations (reversal, deletion, vertex splitting,
// linegraph) shared by every other module.
//
// Vertices are opaque non-negative integers. Deleting vertices keeps the
// identifiers of the survivors, so paths, tripods and vertex sets found in a
// subgraph are valid in the host without translation.

#ifndef TRIPODS_DIGRAPH_HPP_
#define TRIPODS_DIGRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace tripods {

using Vertex = std::int32_t;
using VertexSet = std::set<Vertex>;

struct Edge {
  Vertex tail = 0;
  Vertex head = 0;

  auto operator<=>(const Edge&) const = default;
};

// Outcome of a validator: either ok, or the first violated condition.
class Verdict {
 public:
  static Verdict pass() { return Verdict(); }
  static Verdict fail(std::string reason) {
    Verdict v;
    v.ok_ = false;
    v.reason_ = std::move(reason);
    return v;
  }

  bool ok() const { return ok_; }
  explicit operator bool() const { return ok_; }
  const std::string& reason() const { return reason_; }

 private:
  bool ok_ = true;
  std::string reason_;
};

// Simple loopless digraph. Adjacency lists are kept sorted so every
// traversal visits neighbours in vertex order.
class Digraph {
 public:
  Digraph() = default;

  // Digraph on vertices 0..n-1 with no edges.
  static Digraph with_vertices(Vertex n);

  void add_vertex(Vertex v);
  // Returns false when the edge is already present. Throws PreconditionError
  // on loops and undeclared endpoints.
  bool add_edge(Vertex tail, Vertex head);
  bool remove_edge(Vertex tail, Vertex head);

  bool has_vertex(Vertex v) const {
    return v >= 0 && v < id_bound() && present_[static_cast<std::size_t>(v)];
  }
  bool has_edge(Vertex tail, Vertex head) const;

  std::span<const Vertex> out_neighbors(Vertex v) const;
  std::span<const Vertex> in_neighbors(Vertex v) const;
  std::size_t out_degree(Vertex v) const { return out_neighbors(v).size(); }
  std::size_t in_degree(Vertex v) const { return in_neighbors(v).size(); }

  std::vector<Vertex> vertices() const;
  std::vector<Edge> edges() const;
  std::size_t num_vertices() const { return vertex_count_; }
  std::size_t num_edges() const { return edge_count_; }
  // One past the largest identifier that may be present.
  Vertex id_bound() const { return static_cast<Vertex>(present_.size()); }

  friend bool operator==(const Digraph& a, const Digraph& b);

 private:
  std::vector<char> present_;
  std::vector<std::vector<Vertex>> out_;
  std::vector<std::vector<Vertex>> in_;
  std::size_t vertex_count_ = 0;
  std::size_t edge_count_ = 0;
};

// Digraph with designated sources and sinks. Sources and sinks may overlap.
struct MigrationDigraph {
  Digraph graph;
  VertexSet sources;
  VertexSet sinks;

  bool is_source(Vertex v) const { return sources.contains(v); }
  bool is_sink(Vertex v) const { return sinks.contains(v); }
  // Throws PreconditionError unless sources and sinks are declared vertices.
  void validate() const;

  friend bool operator==(const MigrationDigraph&,
                         const MigrationDigraph&) = default;
};

// Nonempty sequence of distinct vertices. Adjacency against a host digraph
// is checked separately by check_path, never cached.
class Path {
 public:
  Path() = default;
  explicit Path(std::vector<Vertex> vertices);
  Path(std::initializer_list<Vertex> vertices)
      : Path(std::vector<Vertex>(vertices)) {}

  Vertex start() const { return vertices_.front(); }
  Vertex end() const { return vertices_.back(); }
  // Number of edges.
  std::size_t length() const { return vertices_.size() - 1; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  Vertex operator[](std::size_t i) const { return vertices_[i]; }
  bool contains(Vertex v) const;
  std::optional<std::size_t> position(Vertex v) const;
  bool intersects(const Path& other) const;

  friend bool operator==(const Path&, const Path&) = default;

 private:
  std::vector<Vertex> vertices_;
};

// Family of paths expected to be pairwise vertex-disjoint; check_linkage
// verifies that.
struct Linkage {
  std::vector<Path> paths;

  std::size_t size() const { return paths.size(); }
  VertexSet starts() const;
  VertexSet ends() const;
  VertexSet vertices() const;

  friend bool operator==(const Linkage&, const Linkage&) = default;
};

Verdict check_path(const Digraph& d, const Path& p);
Verdict check_linkage(const Digraph& d, const Linkage& l);
// check_linkage plus every start in a and every end in b.
Verdict check_linkage(const Digraph& d, const Linkage& l, const VertexSet& a,
                      const VertexSet& b);

Digraph reverse(const Digraph& d);

// Removes f; throws PreconditionError unless f is a subset of the vertices.
Digraph delete_vertices(const Digraph& d, const VertexSet& f);
MigrationDigraph delete_vertices(const MigrationDigraph& d, const VertexSet& f);
MigrationDigraph reverse(const MigrationDigraph& d);
MigrationDigraph delete_edges(const MigrationDigraph& d,
                              const std::vector<Edge>& edges);

// Subgraph formed by the vertices and consecutive-vertex edges of the paths.
Digraph path_union(std::span<const Path> paths, Vertex id_bound);

// Vertex splitting: v becomes in-copy 2v and out-copy 2v+1.
struct SplitMapping {
  static Vertex in_copy(Vertex v) { return 2 * v; }
  static Vertex out_copy(Vertex v) { return 2 * v + 1; }
  static Vertex original(Vertex copy) { return copy / 2; }
  static bool is_in_copy(Vertex copy) { return copy % 2 == 0; }
};

struct SplitGraph {
  Digraph graph;
  SplitMapping mapping;
};

// Each v becomes (v_in, v_out) joined by the edge (v_in, v_out); each edge
// (u, w) becomes (u_out, w_in).
SplitGraph split_vertices(const Digraph& d);
// Path (v0, ..., vl) lifts to (v0_in, v0_out, ..., vl_in, vl_out).
Path lift_path(const Path& p);
// Inverse of lift_path; also accepts paths that start at an out-copy or end
// at an in-copy. Throws PreconditionError if the copies do not pair up.
Path project_path(const Path& p);

// Linegraph of a migration digraph whose sources have no in-edges and one
// out-edge and whose sinks have one in-edge and no out-edges. Vertex i of the
// result is the edge edge_of[i] of the input.
struct LineGraph {
  MigrationDigraph graph;
  std::vector<Edge> edge_of;

  Vertex vertex_of(const Edge& e) const;
};

// Throws TerminalDegreeError naming the first offending terminal.
void check_linegraph_degrees(const MigrationDigraph& d);
LineGraph linegraph(const MigrationDigraph& d);

// Contiguous slice of p from the occurrence of `from` to that of `to`.
Path subpath(const Path& p, Vertex from, Vertex to);
Path concat(const Path& a, const Path& b);

// Vertices reachable from `from` avoiding `blocked` (blocked starts are not
// reachable). Indexed by vertex id.
std::vector<char> reachable(const Digraph& d, const VertexSet& from,
                            const VertexSet& blocked = {});
// True if some a-b path avoids `blocked`; a vertex of a and b not blocked
// counts as a length-0 path.
bool has_path(const Digraph& d, const VertexSet& a, const VertexSet& b,
              const VertexSet& blocked = {});

// Shortest path from `from` to `to` in BFS order (smallest ids first), or
// nullopt.
std::optional<Path> shortest_path(const Digraph& d, Vertex from, Vertex to);

// Drops closed sub-walks so the result has distinct vertices.
Path shortcut_walk(const std::vector<Vertex>& walk);

}  // namespace tripods

#endif  // TRIPODS_DIGRAPH_HPP_
