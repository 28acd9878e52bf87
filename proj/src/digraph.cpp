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

#include "tripods/digraph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <string>

#include "tripods/errors.hpp"

namespace tripods {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

bool sorted_insert(std::vector<Vertex>& list, Vertex v) {
  auto it = std::lower_bound(list.begin(), list.end(), v);
  if (it != list.end() && *it == v) return false;
  list.insert(it, v);
  return true;
}

bool sorted_erase(std::vector<Vertex>& list, Vertex v) {
  auto it = std::lower_bound(list.begin(), list.end(), v);
  if (it == list.end() || *it != v) return false;
  list.erase(it);
  return true;
}

}  // namespace

Digraph Digraph::with_vertices(Vertex n) {
  Digraph d;
  for (Vertex v = 0; v < n; ++v) d.add_vertex(v);
  return d;
}

void Digraph::add_vertex(Vertex v) {
  if (v < 0) throw PreconditionError("negative vertex identifier");
  if (v >= id_bound()) {
    present_.resize(idx(v) + 1, 0);
    out_.resize(idx(v) + 1);
    in_.resize(idx(v) + 1);
  }
  if (!present_[idx(v)]) {
    present_[idx(v)] = 1;
    ++vertex_count_;
  }
}

bool Digraph::add_edge(Vertex tail, Vertex head) {
  if (tail == head) {
    throw PreconditionError("loop at vertex " + std::to_string(tail));
  }
  if (!has_vertex(tail) || !has_vertex(head)) {
    throw PreconditionError("edge (" + std::to_string(tail) + ", " +
                            std::to_string(head) +
                            ") has an undeclared endpoint");
  }
  if (!sorted_insert(out_[idx(tail)], head)) return false;
  sorted_insert(in_[idx(head)], tail);
  ++edge_count_;
  return true;
}

bool Digraph::remove_edge(Vertex tail, Vertex head) {
  if (!has_vertex(tail) || !has_vertex(head)) return false;
  if (!sorted_erase(out_[idx(tail)], head)) return false;
  sorted_erase(in_[idx(head)], tail);
  --edge_count_;
  return true;
}

bool Digraph::has_edge(Vertex tail, Vertex head) const {
  if (!has_vertex(tail) || !has_vertex(head)) return false;
  const auto& list = out_[idx(tail)];
  return std::binary_search(list.begin(), list.end(), head);
}

std::span<const Vertex> Digraph::out_neighbors(Vertex v) const {
  if (!has_vertex(v)) return {};
  return out_[idx(v)];
}

std::span<const Vertex> Digraph::in_neighbors(Vertex v) const {
  if (!has_vertex(v)) return {};
  return in_[idx(v)];
}

std::vector<Vertex> Digraph::vertices() const {
  std::vector<Vertex> result;
  result.reserve(vertex_count_);
  for (Vertex v = 0; v < id_bound(); ++v) {
    if (present_[idx(v)]) result.push_back(v);
  }
  return result;
}

std::vector<Edge> Digraph::edges() const {
  std::vector<Edge> result;
  result.reserve(edge_count_);
  for (Vertex v = 0; v < id_bound(); ++v) {
    for (Vertex w : out_[idx(v)]) result.push_back({v, w});
  }
  return result;
}

bool operator==(const Digraph& a, const Digraph& b) {
  return a.vertices() == b.vertices() && a.edges() == b.edges();
}

void MigrationDigraph::validate() const {
  for (Vertex s : sources) {
    if (!graph.has_vertex(s)) {
      throw PreconditionError("source " + std::to_string(s) +
                              " is not a vertex");
    }
  }
  for (Vertex t : sinks) {
    if (!graph.has_vertex(t)) {
      throw PreconditionError("sink " + std::to_string(t) + " is not a vertex");
    }
  }
}

Path::Path(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
  if (vertices_.empty()) throw PreconditionError("path must be nonempty");
  std::vector<Vertex> sorted = vertices_;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw PreconditionError("path repeats a vertex");
  }
}

bool Path::contains(Vertex v) const {
  return std::find(vertices_.begin(), vertices_.end(), v) != vertices_.end();
}

std::optional<std::size_t> Path::position(Vertex v) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool Path::intersects(const Path& other) const {
  for (Vertex v : vertices_) {
    if (other.contains(v)) return true;
  }
  return false;
}

VertexSet Linkage::starts() const {
  VertexSet s;
  for (const auto& p : paths) s.insert(p.start());
  return s;
}

VertexSet Linkage::ends() const {
  VertexSet s;
  for (const auto& p : paths) s.insert(p.end());
  return s;
}

VertexSet Linkage::vertices() const {
  VertexSet s;
  for (const auto& p : paths) s.insert(p.vertices().begin(), p.vertices().end());
  return s;
}

Verdict check_path(const Digraph& d, const Path& p) {
  if (p.empty()) return Verdict::fail("empty path");
  VertexSet seen;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!d.has_vertex(p[i])) {
      return Verdict::fail("path vertex " + std::to_string(p[i]) +
                           " is not in the digraph");
    }
    if (!seen.insert(p[i]).second) {
      return Verdict::fail("path repeats vertex " + std::to_string(p[i]));
    }
    if (i > 0 && !d.has_edge(p[i - 1], p[i])) {
      return Verdict::fail("path uses missing edge (" + std::to_string(p[i - 1]) +
                           ", " + std::to_string(p[i]) + ")");
    }
  }
  return Verdict::pass();
}

Verdict check_linkage(const Digraph& d, const Linkage& l) {
  VertexSet seen;
  for (std::size_t i = 0; i < l.paths.size(); ++i) {
    if (auto v = check_path(d, l.paths[i]); !v) {
      return Verdict::fail("linkage path " + std::to_string(i) + ": " +
                           v.reason());
    }
    for (Vertex x : l.paths[i].vertices()) {
      if (!seen.insert(x).second) {
        return Verdict::fail("linkage paths share vertex " + std::to_string(x));
      }
    }
  }
  return Verdict::pass();
}

Verdict check_linkage(const Digraph& d, const Linkage& l, const VertexSet& a,
                      const VertexSet& b) {
  if (auto v = check_linkage(d, l); !v) return v;
  for (const auto& p : l.paths) {
    if (!a.contains(p.start())) {
      return Verdict::fail("linkage path starts outside the start set at " +
                           std::to_string(p.start()));
    }
    if (!b.contains(p.end())) {
      return Verdict::fail("linkage path ends outside the end set at " +
                           std::to_string(p.end()));
    }
  }
  return Verdict::pass();
}

Digraph reverse(const Digraph& d) {
  Digraph r;
  for (Vertex v : d.vertices()) r.add_vertex(v);
  for (const Edge& e : d.edges()) r.add_edge(e.head, e.tail);
  return r;
}

Digraph delete_vertices(const Digraph& d, const VertexSet& f) {
  for (Vertex v : f) {
    if (!d.has_vertex(v)) {
      throw PreconditionError("cannot delete " + std::to_string(v) +
                              ": not a vertex");
    }
  }
  Digraph r;
  for (Vertex v : d.vertices()) {
    if (!f.contains(v)) r.add_vertex(v);
  }
  for (const Edge& e : d.edges()) {
    if (!f.contains(e.tail) && !f.contains(e.head)) r.add_edge(e.tail, e.head);
  }
  return r;
}

MigrationDigraph delete_vertices(const MigrationDigraph& d,
                                 const VertexSet& f) {
  MigrationDigraph r;
  r.graph = delete_vertices(d.graph, f);
  for (Vertex s : d.sources) {
    if (!f.contains(s)) r.sources.insert(s);
  }
  for (Vertex t : d.sinks) {
    if (!f.contains(t)) r.sinks.insert(t);
  }
  return r;
}

MigrationDigraph reverse(const MigrationDigraph& d) {
  return {reverse(d.graph), d.sources, d.sinks};
}

MigrationDigraph delete_edges(const MigrationDigraph& d,
                              const std::vector<Edge>& edges) {
  MigrationDigraph r = d;
  for (const Edge& e : edges) {
    if (!r.graph.remove_edge(e.tail, e.head) && !d.graph.has_edge(e.tail, e.head)) {
      throw PreconditionError("cannot delete missing edge (" +
                              std::to_string(e.tail) + ", " +
                              std::to_string(e.head) + ")");
    }
  }
  return r;
}

Digraph path_union(std::span<const Path> paths, Vertex id_bound) {
  Digraph result;
  for (const auto& p : paths) {
    for (Vertex v : p.vertices()) {
      if (v >= id_bound) throw PreconditionError("path vertex out of range");
    }
  }
  for (const auto& p : paths) {
    for (Vertex v : p.vertices()) result.add_vertex(v);
  }
  for (const auto& p : paths) {
    for (std::size_t i = 1; i < p.size(); ++i) result.add_edge(p[i - 1], p[i]);
  }
  return result;
}

SplitGraph split_vertices(const Digraph& d) {
  SplitGraph s;
  for (Vertex v : d.vertices()) {
    s.graph.add_vertex(SplitMapping::in_copy(v));
    s.graph.add_vertex(SplitMapping::out_copy(v));
  }
  for (Vertex v : d.vertices()) {
    s.graph.add_edge(SplitMapping::in_copy(v), SplitMapping::out_copy(v));
  }
  for (const Edge& e : d.edges()) {
    s.graph.add_edge(SplitMapping::out_copy(e.tail),
                     SplitMapping::in_copy(e.head));
  }
  return s;
}

Path lift_path(const Path& p) {
  std::vector<Vertex> lifted;
  lifted.reserve(2 * p.size());
  for (Vertex v : p.vertices()) {
    lifted.push_back(SplitMapping::in_copy(v));
    lifted.push_back(SplitMapping::out_copy(v));
  }
  return Path(std::move(lifted));
}

Path project_path(const Path& p) {
  std::vector<Vertex> projected;
  for (std::size_t i = 0; i < p.size(); ++i) {
    Vertex v = SplitMapping::original(p[i]);
    if (!projected.empty() && projected.back() == v) {
      if (SplitMapping::is_in_copy(p[i])) {
        throw PreconditionError("split path revisits an in-copy");
      }
      continue;
    }
    // A fresh original must be entered through its in-copy, except at the
    // very start, and left through its out-copy, except at the very end.
    if (i > 0 && !SplitMapping::is_in_copy(p[i])) {
      throw PreconditionError("split path enters an out-copy directly");
    }
    if (i + 1 < p.size() && SplitMapping::is_in_copy(p[i]) &&
        SplitMapping::original(p[i + 1]) != v) {
      throw PreconditionError("split path leaves an in-copy sideways");
    }
    projected.push_back(v);
  }
  return Path(std::move(projected));
}

Vertex LineGraph::vertex_of(const Edge& e) const {
  auto it = std::lower_bound(edge_of.begin(), edge_of.end(), e);
  if (it == edge_of.end() || *it != e) {
    throw PreconditionError("edge is not a linegraph vertex");
  }
  return static_cast<Vertex>(it - edge_of.begin());
}

void check_linegraph_degrees(const MigrationDigraph& d) {
  for (Vertex s : d.sources) {
    if (d.graph.in_degree(s) != 0 || d.graph.out_degree(s) != 1) {
      throw TerminalDegreeError(
          "source " + std::to_string(s) +
              " must have no incoming edges and exactly one outgoing edge",
          s);
    }
  }
  for (Vertex t : d.sinks) {
    if (d.graph.in_degree(t) != 1 || d.graph.out_degree(t) != 0) {
      throw TerminalDegreeError(
          "sink " + std::to_string(t) +
              " must have exactly one incoming edge and no outgoing edges",
          t);
    }
  }
}

LineGraph linegraph(const MigrationDigraph& d) {
  d.validate();
  check_linegraph_degrees(d);
  LineGraph lg;
  lg.edge_of = d.graph.edges();  // sorted lexicographically
  const auto n = static_cast<Vertex>(lg.edge_of.size());
  lg.graph.graph = Digraph::with_vertices(n);
  for (Vertex i = 0; i < n; ++i) {
    const Edge& e = lg.edge_of[idx(i)];
    for (Vertex w : d.graph.out_neighbors(e.head)) {
      lg.graph.graph.add_edge(i, lg.vertex_of({e.head, w}));
    }
    if (d.is_source(e.tail)) lg.graph.sources.insert(i);
    if (d.is_sink(e.head)) lg.graph.sinks.insert(i);
  }
  return lg;
}

Path subpath(const Path& p, Vertex from, Vertex to) {
  auto i = p.position(from);
  auto j = p.position(to);
  if (!i || !j) throw PreconditionError("subpath endpoint not on path");
  if (*i > *j) throw PreconditionError("subpath endpoints in wrong order");
  return Path(std::vector<Vertex>(p.vertices().begin() + static_cast<long>(*i),
                                  p.vertices().begin() + static_cast<long>(*j) + 1));
}

Path concat(const Path& a, const Path& b) {
  if (a.end() != b.start()) {
    throw PreconditionError("concatenated paths do not meet");
  }
  std::vector<Vertex> joined = a.vertices();
  joined.insert(joined.end(), b.vertices().begin() + 1, b.vertices().end());
  return Path(std::move(joined));
}

std::vector<char> reachable(const Digraph& d, const VertexSet& from,
                            const VertexSet& blocked) {
  std::vector<char> seen(idx(d.id_bound()), 0);
  std::deque<Vertex> queue;
  for (Vertex v : from) {
    if (d.has_vertex(v) && !blocked.contains(v) && !seen[idx(v)]) {
      seen[idx(v)] = 1;
      queue.push_back(v);
    }
  }
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : d.out_neighbors(v)) {
      if (!seen[idx(w)] && !blocked.contains(w)) {
        seen[idx(w)] = 1;
        queue.push_back(w);
      }
    }
  }
  return seen;
}

bool has_path(const Digraph& d, const VertexSet& a, const VertexSet& b,
              const VertexSet& blocked) {
  auto seen = reachable(d, a, blocked);
  for (Vertex v : b) {
    if (d.has_vertex(v) && seen[idx(v)]) return true;
  }
  return false;
}

std::optional<Path> shortest_path(const Digraph& d, Vertex from, Vertex to) {
  if (!d.has_vertex(from) || !d.has_vertex(to)) return std::nullopt;
  std::vector<Vertex> parent(idx(d.id_bound()), -1);
  std::vector<char> seen(idx(d.id_bound()), 0);
  std::deque<Vertex> queue{from};
  seen[idx(from)] = 1;
  while (!queue.empty() && !seen[idx(to)]) {
    Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : d.out_neighbors(v)) {
      if (!seen[idx(w)]) {
        seen[idx(w)] = 1;
        parent[idx(w)] = v;
        queue.push_back(w);
      }
    }
  }
  if (!seen[idx(to)]) return std::nullopt;
  std::vector<Vertex> walk;
  for (Vertex v = to; v != -1; v = parent[idx(v)]) {
    walk.push_back(v);
    if (v == from) break;
  }
  std::reverse(walk.begin(), walk.end());
  return Path(std::move(walk));
}

Path shortcut_walk(const std::vector<Vertex>& walk) {
  std::vector<Vertex> out;
  std::map<Vertex, std::size_t> at;
  for (Vertex v : walk) {
    if (auto it = at.find(v); it != at.end()) {
      for (std::size_t i = it->second + 1; i < out.size(); ++i) at.erase(out[i]);
      out.resize(it->second + 1);
      continue;
    }
    at[v] = out.size();
    out.push_back(v);
  }
  return Path(std::move(out));
}

}  // namespace tripods
