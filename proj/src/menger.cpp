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

#include "tripods/menger.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <string>
#include <vector>

#include "tripods/errors.hpp"

namespace tripods {

namespace {

// Dinic's algorithm over adjacency lists kept in insertion order, so the
// resulting flow is a deterministic function of the input.
class FlowNetwork {
 public:
  struct Arc {
    int to;
    int cap;
    int rev;
    bool forward;
  };

  explicit FlowNetwork(int n) : adj_(static_cast<std::size_t>(n)) {}

  void add_arc(int from, int to, int cap) {
    auto& out = adj_[static_cast<std::size_t>(from)];
    auto& in = adj_[static_cast<std::size_t>(to)];
    out.push_back({to, cap, static_cast<int>(in.size()), true});
    in.push_back({from, 0, static_cast<int>(out.size()) - 1, false});
  }

  int max_flow(int s, int t) {
    int total = 0;
    while (bfs(s, t)) {
      iter_.assign(adj_.size(), 0);
      while (int pushed = dfs(s, t, std::numeric_limits<int>::max())) {
        total += pushed;
      }
    }
    return total;
  }

  // Nodes reachable from s in the residual network.
  std::vector<char> residual_reach(int s) const {
    std::vector<char> seen(adj_.size(), 0);
    std::deque<int> queue{s};
    seen[static_cast<std::size_t>(s)] = 1;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (const Arc& a : adj_[static_cast<std::size_t>(v)]) {
        if (a.cap > 0 && !seen[static_cast<std::size_t>(a.to)]) {
          seen[static_cast<std::size_t>(a.to)] = 1;
          queue.push_back(a.to);
        }
      }
    }
    return seen;
  }

  // Flow carried by a forward arc: the residual capacity of its reverse.
  int flow(const Arc& a) const {
    return adj_[static_cast<std::size_t>(a.to)][static_cast<std::size_t>(a.rev)]
        .cap;
  }

  std::vector<Arc>& arcs(int v) { return adj_[static_cast<std::size_t>(v)]; }

  void cancel(Arc& a) {
    a.cap += 1;
    adj_[static_cast<std::size_t>(a.to)][static_cast<std::size_t>(a.rev)].cap -=
        1;
  }

 private:
  bool bfs(int s, int t) {
    level_.assign(adj_.size(), -1);
    std::deque<int> queue{s};
    level_[static_cast<std::size_t>(s)] = 0;
    while (!queue.empty()) {
      int v = queue.front();
      queue.pop_front();
      for (const Arc& a : adj_[static_cast<std::size_t>(v)]) {
        if (a.cap > 0 && level_[static_cast<std::size_t>(a.to)] < 0) {
          level_[static_cast<std::size_t>(a.to)] =
              level_[static_cast<std::size_t>(v)] + 1;
          queue.push_back(a.to);
        }
      }
    }
    return level_[static_cast<std::size_t>(t)] >= 0;
  }

  int dfs(int v, int t, int limit) {
    if (v == t) return limit;
    auto& out = adj_[static_cast<std::size_t>(v)];
    for (auto& i = iter_[static_cast<std::size_t>(v)];
         i < static_cast<int>(out.size()); ++i) {
      Arc& a = out[static_cast<std::size_t>(i)];
      if (a.cap <= 0 || level_[static_cast<std::size_t>(a.to)] !=
                            level_[static_cast<std::size_t>(v)] + 1) {
        continue;
      }
      if (int pushed = dfs(a.to, t, std::min(limit, a.cap))) {
        a.cap -= pushed;
        adj_[static_cast<std::size_t>(a.to)][static_cast<std::size_t>(a.rev)]
            .cap += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<std::vector<Arc>> adj_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

void require_subset(const Digraph& d, const VertexSet& s, const char* name) {
  for (Vertex v : s) {
    if (!d.has_vertex(v)) {
      throw PreconditionError(std::string(name) + " contains non-vertex " +
                              std::to_string(v));
    }
  }
}

// Cuts the path at its first B vertex, then starts it at its last A vertex.
Path trim(const std::vector<Vertex>& walk, const VertexSet& a,
          const VertexSet& b) {
  std::size_t last = 0;
  while (!b.contains(walk[last])) ++last;
  std::size_t first = last;
  while (!a.contains(walk[first])) --first;
  return Path(std::vector<Vertex>(walk.begin() + static_cast<long>(first),
                                  walk.begin() + static_cast<long>(last) + 1));
}

}  // namespace

MengerResult max_linkage(const Digraph& d, const VertexSet& a,
                         const VertexSet& b) {
  require_subset(d, a, "start set");
  require_subset(d, b, "end set");
  const int bound = d.id_bound();
  const int source = 2 * bound;
  const int sink = source + 1;
  const int inf = bound + 1;
  FlowNetwork net(sink + 1);
  for (Vertex v : a) net.add_arc(source, SplitMapping::in_copy(v), inf);
  for (Vertex v : d.vertices()) {
    net.add_arc(SplitMapping::in_copy(v), SplitMapping::out_copy(v), 1);
  }
  for (const Edge& e : d.edges()) {
    net.add_arc(SplitMapping::out_copy(e.tail), SplitMapping::in_copy(e.head),
                inf);
  }
  for (Vertex v : b) net.add_arc(SplitMapping::out_copy(v), sink, inf);

  MengerResult result;
  result.value = static_cast<std::size_t>(net.max_flow(source, sink));

  auto seen = net.residual_reach(source);
  for (Vertex v : d.vertices()) {
    if (seen[static_cast<std::size_t>(SplitMapping::in_copy(v))] &&
        !seen[static_cast<std::size_t>(SplitMapping::out_copy(v))]) {
      result.separator.insert(v);
    }
  }

  // Decompose into unit paths. Every in-copy carries at most one unit, so
  // each walk is simple.
  for (std::size_t k = 0; k < result.value; ++k) {
    std::vector<Vertex> walk;
    int node = source;
    while (node != sink) {
      bool moved = false;
      for (auto& arc : net.arcs(node)) {
        if (arc.forward && net.flow(arc) > 0) {
          net.cancel(arc);
          if (arc.to != sink && SplitMapping::is_in_copy(arc.to)) {
            walk.push_back(SplitMapping::original(arc.to));
          }
          node = arc.to;
          moved = true;
          break;
        }
      }
      if (!moved) throw SoundnessError("flow decomposition stalled");
    }
    result.linkage.paths.push_back(trim(walk, a, b));
  }
  std::sort(result.linkage.paths.begin(), result.linkage.paths.end(),
            [](const Path& p, const Path& q) { return p.start() < q.start(); });

  if (auto v = check_linkage(d, result.linkage, a, b); !v) {
    throw SoundnessError("max_linkage produced an invalid linkage: " +
                         v.reason());
  }
  if (result.separator.size() != result.value) {
    throw SoundnessError("separator size differs from flow value");
  }
  if (!separates(d, a, b, result.separator)) {
    throw SoundnessError("separator misses an A-B path");
  }
  return result;
}

bool is_linkable(const MigrationDigraph& d, const VertexSet& x,
                 const VertexSet& y) {
  for (Vertex v : x) {
    if (!d.is_source(v)) {
      throw PreconditionError("linkability start " + std::to_string(v) +
                              " is not a source");
    }
  }
  for (Vertex v : y) {
    if (!d.is_sink(v)) {
      throw PreconditionError("linkability end " + std::to_string(v) +
                              " is not a sink");
    }
  }
  if (y.empty()) return true;
  return max_linkage(d.graph, x, y).value == y.size();
}

bool separates(const Digraph& d, const VertexSet& a, const VertexSet& b,
               const VertexSet& cut) {
  return !has_path(d, a, b, cut);
}

}  // namespace tripods
