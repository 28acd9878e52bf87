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

#include "tripods/oracle.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "tripods/errors.hpp"
#include "tripods/tripod.hpp"

namespace tripods {

namespace {

using Mask = std::uint64_t;

Mask bit(Vertex v) { return Mask{1} << static_cast<unsigned>(v); }

struct Candidate {
  Mask vertices;
  Mask edges;
};

// Path triples (branch, branch, tail). Tails stop at their first sink and
// branches at their first source when walked backwards from the centre;
// both rules only discard tripods that contain a smaller one.
class TripleSearch {
 public:
  TripleSearch(const MigrationDigraph& d, bool stop_at_first, bool track_edges)
      : d_(d), stop_at_first_(stop_at_first), track_edges_(track_edges) {
    if (d.graph.id_bound() > 64) {
      throw CapExceededError("brute-force oracles need vertex ids below 64");
    }
    if (!track_edges) return;
    const auto edges = d.graph.edges();
    if (edges.size() > 64) {
      throw CapExceededError("brute-force oracles need at most 64 edges");
    }
    for (std::size_t i = 0; i < edges.size(); ++i) edge_id_[edges[i]] = i;
  }

  std::vector<Candidate> run() {
    for (Vertex c : d_.graph.vertices()) {
      tail(c, c, bit(c), 0);
      if (done()) break;
    }
    return found_;
  }

 private:
  bool done() const { return stop_at_first_ && !found_.empty(); }

  Mask edge_bit(Vertex u, Vertex v) const {
    if (!track_edges_) return 0;
    return Mask{1} << edge_id_.at({u, v});
  }

  void tail(Vertex c, Vertex v, Mask verts, Mask edges) {
    if (done()) return;
    if (d_.is_sink(v)) {
      branches_for(c, verts, edges);
      return;
    }
    for (Vertex w : d_.graph.out_neighbors(v)) {
      if (verts & bit(w)) continue;
      tail(c, w, verts | bit(w), edges | edge_bit(v, w));
    }
  }

  struct Branch {
    Vertex source;
    Mask verts;
    Mask edges;
  };

  void branches_for(Vertex c, Mask tail_verts, Mask tail_edges) {
    std::vector<Branch> list;
    if (d_.is_source(c)) list.push_back({c, bit(c), 0});
    collect(c, bit(c), 0, tail_verts, list);
    for (std::size_t i = 0; i < list.size(); ++i) {
      for (std::size_t j = i + 1; j < list.size(); ++j) {
        if (list[i].source == list[j].source) continue;
        if ((list[i].verts & list[j].verts) != bit(c)) continue;
        found_.push_back({list[i].verts | list[j].verts | tail_verts,
                          list[i].edges | list[j].edges | tail_edges});
        if (done()) return;
      }
    }
  }

  void collect(Vertex v, Mask verts, Mask edges, Mask avoid,
               std::vector<Branch>& out) {
    for (Vertex w : d_.graph.in_neighbors(v)) {
      if ((verts | avoid) & bit(w)) continue;
      Mask nv = verts | bit(w);
      Mask ne = edges | edge_bit(w, v);
      if (d_.is_source(w)) {
        out.push_back({w, nv, ne});
      } else {
        collect(w, nv, ne, avoid, out);
      }
    }
  }

  const MigrationDigraph& d_;
  bool stop_at_first_;
  bool track_edges_;
  std::map<Edge, unsigned> edge_id_;
  std::vector<Candidate> found_;
};

std::vector<Mask> minimal_masks(std::vector<Mask> masks) {
  std::sort(masks.begin(), masks.end(), [](Mask a, Mask b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<Mask> kept;
  for (Mask m : masks) {
    bool minimal = true;
    for (Mask k : kept) {
      if ((k & m) == k) {
        minimal = false;
        break;
      }
    }
    if (minimal) kept.push_back(m);
  }
  return kept;
}

// Maximum number of pairwise disjoint masks, branching on the lowest
// element still coverable.
class DisjointPacking {
 public:
  explicit DisjointPacking(std::vector<Mask> masks) : masks_(std::move(masks)) {}

  std::size_t solve() {
    Mask all = 0;
    for (Mask m : masks_) all |= m;
    return best(all);
  }

 private:
  std::size_t best(Mask avail) {
    if (auto it = memo_.find(avail); it != memo_.end()) return it->second;
    Mask coverable = 0;
    for (Mask m : masks_) {
      if ((m & avail) == m) coverable |= m;
    }
    std::size_t result = 0;
    if (coverable != 0) {
      Mask low = coverable & (~coverable + 1);
      result = best(avail & ~low);
      for (Mask m : masks_) {
        if ((m & low) && (m & avail) == m) {
          result = std::max(result, 1 + best(avail & ~m));
        }
      }
    }
    memo_.emplace(avail, result);
    return result;
  }

  std::vector<Mask> masks_;
  std::unordered_map<Mask, std::size_t> memo_;
};

void require_cap(std::size_t size, std::size_t cap, const char* what) {
  if (size > cap) {
    throw CapExceededError(std::string(what) + " " + std::to_string(size) +
                           " exceeds oracle cap " + std::to_string(cap));
  }
}

}  // namespace

std::vector<std::uint64_t> brute_minimal_tripod_masks(
    const MigrationDigraph& d) {
  std::vector<Mask> masks;
  for (const Candidate& c : TripleSearch(d, false, false).run()) {
    masks.push_back(c.vertices);
  }
  return minimal_masks(std::move(masks));
}

bool brute_tripod_exists(const MigrationDigraph& d) {
  return !TripleSearch(d, true, false).run().empty();
}

std::size_t brute_packing_number(const MigrationDigraph& d, std::size_t cap) {
  require_cap(d.graph.num_vertices(), cap, "vertex count");
  return DisjointPacking(brute_minimal_tripod_masks(d)).solve();
}

VertexSet brute_min_hitting_set(const MigrationDigraph& d, std::size_t cap) {
  require_cap(d.graph.num_vertices(), cap, "vertex count");
  const auto verts = d.graph.vertices();
  const std::size_t n = verts.size();
  for (std::size_t size = 0; size <= n; ++size) {
    // Lexicographic walk over size-subsets of positions.
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    for (;;) {
      VertexSet f;
      for (std::size_t i : pick) f.insert(verts[i]);
      if (!tripod_exists(delete_vertices(d, f))) return f;
      std::size_t i = size;
      while (i > 0 && pick[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < size; ++j) pick[j] = pick[j - 1] + 1;
    }
  }
  return VertexSet(verts.begin(), verts.end());
}

std::size_t brute_edge_packing_number(const MigrationDigraph& d,
                                      std::size_t cap) {
  require_cap(d.graph.num_edges(), cap, "edge count");
  std::vector<Mask> masks;
  for (const Candidate& c : TripleSearch(d, false, true).run()) {
    masks.push_back(c.edges);
  }
  return DisjointPacking(minimal_masks(std::move(masks))).solve();
}

std::size_t brute_max_disjoint_paths(const Digraph& d, const VertexSet& a,
                                     const VertexSet& b, std::size_t cap) {
  require_cap(d.num_vertices(), cap, "vertex count");
  if (d.id_bound() > 64) {
    throw CapExceededError("brute-force oracles need vertex ids below 64");
  }
  std::vector<Mask> masks;
  // Paths whose only A vertex is the start and only B vertex is the end.
  auto extend = [&](auto&& self, Vertex v, Mask verts) -> void {
    if (b.contains(v)) {
      masks.push_back(verts);
      return;
    }
    for (Vertex w : d.out_neighbors(v)) {
      if ((verts & bit(w)) || a.contains(w)) continue;
      self(self, w, verts | bit(w));
    }
  };
  for (Vertex s : a) {
    if (d.has_vertex(s)) extend(extend, s, bit(s));
  }
  return DisjointPacking(minimal_masks(std::move(masks))).solve();
}

// ---------------------------------------------------------------------------
// Generators.

InstanceSpec InstanceSpec::parse(const std::string& text) {
  std::istringstream in(text);
  InstanceSpec spec;
  if (!(in >> spec.generator)) {
    throw PreconditionError("instance spec: missing generator name");
  }
  std::string token;
  while (in >> token) {
    auto eq = token.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == token.size()) {
      throw PreconditionError("instance spec: expected key=value, got '" +
                              token + "'");
    }
    std::string key = token.substr(0, eq);
    std::string value = token.substr(eq + 1);
    if (key == "seed") {
      try {
        spec.seed = std::stoull(value);
      } catch (const std::exception&) {
        throw PreconditionError("instance spec: bad seed '" + value + "'");
      }
    } else {
      spec.params[key] = value;
    }
  }
  return spec;
}

std::string InstanceSpec::to_string() const {
  std::string out = generator;
  for (const auto& [key, value] : params) out += " " + key + "=" + value;
  out += " seed=" + std::to_string(seed);
  return out;
}

namespace {

class Params {
 public:
  Params(const InstanceSpec& spec, std::vector<std::string> allowed)
      : spec_(spec) {
    for (const auto& [key, value] : spec.params) {
      if (std::find(allowed.begin(), allowed.end(), key) == allowed.end()) {
        throw PreconditionError("generator " + spec.generator +
                                ": unknown parameter '" + key + "'");
      }
    }
  }

  long integer(const std::string& key, long fallback, long min) const {
    auto it = spec_.params.find(key);
    long value = fallback;
    if (it != spec_.params.end()) {
      try {
        std::size_t used = 0;
        value = std::stol(it->second, &used);
        if (used != it->second.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw PreconditionError("generator " + spec_.generator + ": '" + key +
                                "' must be an integer");
      }
    }
    if (value < min) {
      throw PreconditionError("generator " + spec_.generator + ": '" + key +
                              "' must be at least " + std::to_string(min));
    }
    return value;
  }

  double real(const std::string& key, double fallback) const {
    auto it = spec_.params.find(key);
    if (it == spec_.params.end()) return fallback;
    double value = 0;
    try {
      std::size_t used = 0;
      value = std::stod(it->second, &used);
      if (used != it->second.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw PreconditionError("generator " + spec_.generator + ": '" + key +
                              "' must be a number");
    }
    if (value < 0 || value > 1) {
      throw PreconditionError("generator " + spec_.generator + ": '" + key +
                              "' must lie in [0, 1]");
    }
    return value;
  }

 private:
  const InstanceSpec& spec_;
};

class Builder {
 public:
  Vertex add(std::string name) {
    const auto v = static_cast<Vertex>(out.names.size());
    out.graph.graph.add_vertex(v);
    out.names.push_back(std::move(name));
    return v;
  }
  void chain(const std::vector<Vertex>& walk) {
    for (std::size_t i = 1; i < walk.size(); ++i) {
      out.graph.graph.add_edge(walk[i - 1], walk[i]);
    }
  }

  GeneratedInstance out;
};

std::string nm(const std::string& prefix, long i) {
  return prefix + std::to_string(i);
}

std::string nm(const std::string& prefix, long i, long j) {
  return prefix + std::to_string(i) + "_" + std::to_string(j);
}

GeneratedInstance erdos_renyi(const InstanceSpec& spec) {
  Params params(spec, {"n", "p", "sources", "sinks", "overlap"});
  const long n = params.integer("n", 10, 1);
  const double p = params.real("p", 0.3);
  const long sources = params.integer("sources", 2, 0);
  const long sinks = params.integer("sinks", 2, 0);
  const bool overlap = params.integer("overlap", 0, 0) != 0;
  if (sources > n || (!overlap && sources + sinks > n) || sinks > n) {
    throw PreconditionError("erdos-renyi-digraph: too many terminals");
  }
  Rng rng(spec.seed);
  Builder b;
  for (long i = 0; i < n; ++i) b.add(nm("v", i));
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = 0; v < n; ++v) {
      if (u != v && rng.chance(p)) b.out.graph.graph.add_edge(u, v);
    }
  }
  std::vector<Vertex> order(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) order[static_cast<std::size_t>(v)] = v;
  for (std::size_t i = order.size(); i > 1; --i) {
    std::swap(order[i - 1], order[rng.below(i)]);
  }
  for (long i = 0; i < sources; ++i) {
    b.out.graph.sources.insert(order[static_cast<std::size_t>(i)]);
  }
  if (overlap) {
    for (std::size_t i = order.size(); i > 1; --i) {
      std::swap(order[i - 1], order[rng.below(i)]);
    }
    for (long i = 0; i < sinks; ++i) {
      b.out.graph.sinks.insert(order[static_cast<std::size_t>(i)]);
    }
  } else {
    for (long i = 0; i < sinks; ++i) {
      b.out.graph.sinks.insert(order[static_cast<std::size_t>(sources + i)]);
    }
  }
  return std::move(b.out);
}

GeneratedInstance layered_dag(const InstanceSpec& spec) {
  Params params(spec, {"layers", "width", "p"});
  const long layers = params.integer("layers", 4, 2);
  const long width = params.integer("width", 3, 1);
  const double p = params.real("p", 0.5);
  Rng rng(spec.seed);
  Builder b;
  std::vector<std::vector<Vertex>> grid(static_cast<std::size_t>(layers));
  for (long i = 0; i < layers; ++i) {
    for (long j = 0; j < width; ++j) {
      grid[static_cast<std::size_t>(i)].push_back(b.add(nm("l", i, j)));
    }
  }
  for (std::size_t i = 0; i + 1 < grid.size(); ++i) {
    for (Vertex u : grid[i]) {
      for (Vertex v : grid[i + 1]) {
        if (rng.chance(p)) b.out.graph.graph.add_edge(u, v);
      }
    }
  }
  b.out.graph.sources.insert(grid.front().begin(), grid.front().end());
  b.out.graph.sinks.insert(grid.back().begin(), grid.back().end());
  return std::move(b.out);
}

// Vertical teeth s_j -> x_j_1 -> ... -> t_j crossed by a transversal Q.
// Plain combs visit the teeth row by row (optionally in shuffled order).
// Braided combs (ell > 0) alternate blocks of ell + ell^3 fresh teeth with
// visits to the same ell^2 core teeth, one row of the core per block.
GeneratedInstance comb(const InstanceSpec& spec) {
  Params params(spec, {"teeth", "rows", "ell", "shuffle"});
  const long teeth = params.integer("teeth", 3, 1);
  const long ell = params.integer("ell", 0, 0);
  const long rows = ell > 0 ? ell : params.integer("rows", 1, 1);
  const bool shuffle = params.integer("shuffle", 0, 0) != 0;
  const long core = ell * ell;
  const long block = ell + core * ell;
  if (ell > 0 && teeth < core + ell * block) {
    throw PreconditionError("comb: a braided comb with ell=" +
                            std::to_string(ell) + " needs at least " +
                            std::to_string(core + ell * block) + " teeth");
  }
  Rng rng(spec.seed);
  Builder b;
  Linkage teeth_paths;
  std::vector<std::vector<Vertex>> row_vertex(static_cast<std::size_t>(teeth));
  for (long j = 0; j < teeth; ++j) {
    // Core teeth carry one vertex per row; the others a single one.
    const bool is_core = ell > 0 && j < core;
    const long own_rows = ell > 0 ? (is_core ? rows : 1) : rows;
    std::vector<Vertex> walk{b.add(nm("s", j))};
    for (long r = 0; r < own_rows; ++r) {
      Vertex x = b.add(nm("x", j, r));
      walk.push_back(x);
      row_vertex[static_cast<std::size_t>(j)].push_back(x);
    }
    walk.push_back(b.add(nm("t", j)));
    b.chain(walk);
    b.out.graph.sources.insert(walk.front());
    b.out.graph.sinks.insert(walk.back());
    teeth_paths.paths.emplace_back(walk);
  }
  std::vector<Vertex> q;
  if (ell == 0) {
    std::vector<long> order(static_cast<std::size_t>(teeth));
    for (long j = 0; j < teeth; ++j) order[static_cast<std::size_t>(j)] = j;
    if (shuffle) {
      for (std::size_t i = order.size(); i > 1; --i) {
        std::swap(order[i - 1], order[rng.below(i)]);
      }
    }
    for (long r = 0; r < rows; ++r) {
      for (long j : order) {
        q.push_back(row_vertex[static_cast<std::size_t>(j)]
                              [static_cast<std::size_t>(r)]);
      }
    }
  } else {
    long next_fresh = core;
    for (long i = 0; i < ell; ++i) {
      for (long j = 0; j < block; ++j) {
        q.push_back(row_vertex[static_cast<std::size_t>(next_fresh++)][0]);
      }
      for (long c = 0; c < core; ++c) {
        q.push_back(row_vertex[static_cast<std::size_t>(c)]
                              [static_cast<std::size_t>(i)]);
      }
    }
    while (next_fresh < teeth) {
      q.push_back(row_vertex[static_cast<std::size_t>(next_fresh++)][0]);
    }
  }
  b.chain(q);
  b.out.linkages.push_back(std::move(teeth_paths));
  b.out.transversals.emplace_back(q);
  return std::move(b.out);
}

// Rows p_i -> g_i_* -> y_i and columns q_j -> g_*_j -> y_j inside each of
// `blocks` m-by-m blocks; row y meets column z exactly when both lie in the
// same block.
GeneratedInstance crossing_grid(const InstanceSpec& spec) {
  Params params(spec, {"m", "blocks"});
  const long m = params.integer("m", 2, 1);
  const long blocks = params.integer("blocks", 1, 1);
  const long total = m * blocks;
  Builder b;
  std::vector<Vertex> p(static_cast<std::size_t>(total));
  std::vector<Vertex> q(static_cast<std::size_t>(total));
  std::vector<Vertex> y(static_cast<std::size_t>(total));
  for (long i = 0; i < total; ++i) p[static_cast<std::size_t>(i)] = b.add(nm("p", i));
  for (long i = 0; i < total; ++i) q[static_cast<std::size_t>(i)] = b.add(nm("q", i));
  std::vector<std::vector<Vertex>> g(static_cast<std::size_t>(total));
  for (long i = 0; i < total; ++i) {
    const long base = (i / m) * m;
    for (long j = base; j < base + m; ++j) {
      g[static_cast<std::size_t>(i)].push_back(b.add(nm("g", i, j)));
    }
  }
  for (long i = 0; i < total; ++i) y[static_cast<std::size_t>(i)] = b.add(nm("y", i));
  Linkage rows, columns;
  for (long i = 0; i < total; ++i) {
    const auto si = static_cast<std::size_t>(i);
    std::vector<Vertex> walk{p[si]};
    walk.insert(walk.end(), g[si].begin(), g[si].end());
    walk.push_back(y[si]);
    b.chain(walk);
    rows.paths.emplace_back(walk);
  }
  for (long j = 0; j < total; ++j) {
    const long base = (j / m) * m;
    std::vector<Vertex> walk{q[static_cast<std::size_t>(j)]};
    for (long i = base; i < base + m; ++i) {
      walk.push_back(g[static_cast<std::size_t>(i)][static_cast<std::size_t>(j - base)]);
    }
    walk.push_back(y[static_cast<std::size_t>(j)]);
    b.chain(walk);
    columns.paths.emplace_back(walk);
  }
  b.out.graph.sources.insert(p.begin(), p.end());
  b.out.graph.sources.insert(q.begin(), q.end());
  b.out.graph.sinks.insert(y.begin(), y.end());
  b.out.transversals.push_back(columns.paths.front());
  b.out.linkages.push_back(std::move(rows));
  b.out.linkages.push_back(std::move(columns));
  return std::move(b.out);
}

// Per copy: K1 = p1 x1 y2, K2 = p2 x2 y1, L1 = q1 x1 y1 t1, L2 = q2 x2 y2 t2.
GeneratedInstance doubled_gadget(const InstanceSpec& spec) {
  Params params(spec, {"copies"});
  const long copies = params.integer("copies", 1, 1);
  Builder b;
  for (long c = 0; c < copies; ++c) {
    const std::string tag = "_" + std::to_string(c);
    Vertex p1 = b.add("p1" + tag), p2 = b.add("p2" + tag);
    Vertex q1 = b.add("q1" + tag), q2 = b.add("q2" + tag);
    Vertex x1 = b.add("x1" + tag), x2 = b.add("x2" + tag);
    Vertex y1 = b.add("y1" + tag), y2 = b.add("y2" + tag);
    Vertex t1 = b.add("t1" + tag), t2 = b.add("t2" + tag);
    Linkage k{{Path{p1, x1, y2}, Path{p2, x2, y1}}};
    Linkage l{{Path{q1, x1, y1, t1}, Path{q2, x2, y2, t2}}};
    for (const Linkage* link : {&k, &l}) {
      for (const Path& path : link->paths) b.chain(path.vertices());
    }
    b.out.graph.sources.insert({p1, p2, q1, q2});
    b.out.graph.sinks.insert({t1, t2});
    b.out.linkages.push_back(std::move(k));
    b.out.linkages.push_back(std::move(l));
  }
  return std::move(b.out);
}

}  // namespace

GeneratedInstance generate(const InstanceSpec& spec) {
  if (spec.generator == "erdos-renyi-digraph") return erdos_renyi(spec);
  if (spec.generator == "layered-dag") return layered_dag(spec);
  if (spec.generator == "comb") return comb(spec);
  if (spec.generator == "crossing-grid") return crossing_grid(spec);
  if (spec.generator == "doubled-gadget") return doubled_gadget(spec);
  throw PreconditionError("unknown generator '" + spec.generator + "'");
}

}  // namespace tripods
