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

#include "tripods/onion.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <map>
#include <set>
#include <string>

#include "tripods/errors.hpp"

namespace tripods {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

std::set<Edge> edge_set(const Path& p) {
  std::set<Edge> out;
  for (std::size_t i = 1; i < p.size(); ++i) out.insert({p[i - 1], p[i]});
  return out;
}

bool share_edge(const std::set<Edge>& a, const std::set<Edge>& b) {
  for (const Edge& e : a) {
    if (b.contains(e)) return true;
  }
  return false;
}

Path drop_front(const Path& p) {
  return Path(std::vector<Vertex>(p.vertices().begin() + 1, p.vertices().end()));
}

Path drop_back(const Path& p) {
  return Path(std::vector<Vertex>(p.vertices().begin(), p.vertices().end() - 1));
}

}  // namespace

Verdict check_onion(const Digraph& g, const Onion& z) {
  if (z.root == z.stem) return Verdict::fail("onion root equals its stem");
  struct Part {
    const Path* path;
    Vertex from;
    Vertex to;
    const char* name;
  };
  for (const Part& part : {Part{&z.forward1, z.root, z.stem, "forward1"},
                           Part{&z.forward2, z.root, z.stem, "forward2"},
                           Part{&z.backward, z.stem, z.root, "backward"}}) {
    if (part.path->empty()) return Verdict::fail(std::string(part.name) + " is empty");
    if (auto v = check_path(g, *part.path); !v) {
      return Verdict::fail(std::string(part.name) + ": " + v.reason());
    }
    if (part.path->start() != part.from || part.path->end() != part.to) {
      return Verdict::fail(std::string(part.name) + " has the wrong endpoints");
    }
  }
  auto f1 = edge_set(z.forward1), f2 = edge_set(z.forward2),
       b = edge_set(z.backward);
  if (share_edge(f1, f2) || share_edge(f1, b) || share_edge(f2, b)) {
    return Verdict::fail("onion paths share an edge");
  }
  return Verdict::pass();
}

Verdict check_onion_star(const Digraph& g, const OnionStar& star,
                         std::size_t order) {
  if (star.out_onions.size() != order || star.in_onions.size() != order) {
    return Verdict::fail("onion-star does not have order " + std::to_string(order));
  }
  VertexSet others;
  std::set<Edge> used;
  auto absorb = [&](const Onion& z, std::size_t i) -> Verdict {
    if (auto v = check_onion(g, z); !v) {
      return Verdict::fail("onion " + std::to_string(i) + ": " + v.reason());
    }
    for (const Path* p : {&z.forward1, &z.forward2, &z.backward}) {
      for (const Edge& e : edge_set(*p)) {
        if (!used.insert(e).second) {
          return Verdict::fail("onions share edge (" + std::to_string(e.tail) +
                               ", " + std::to_string(e.head) + ")");
        }
      }
    }
    return Verdict::pass();
  };
  std::size_t i = 0;
  for (const Onion& z : star.out_onions) {
    if (z.root != star.centre) return Verdict::fail("out-onion not rooted at the centre");
    if (!others.insert(z.stem).second) return Verdict::fail("repeated stem");
    if (auto v = absorb(z, i++); !v) return v;
  }
  for (const Onion& z : star.in_onions) {
    if (z.stem != star.centre) return Verdict::fail("in-onion stem is not the centre");
    if (!others.insert(z.root).second) return Verdict::fail("repeated root");
    if (auto v = absorb(z, i++); !v) return v;
  }
  if (others.contains(star.centre)) {
    return Verdict::fail("centre reused as another root or stem");
  }
  return Verdict::pass();
}

AuxiliaryGraph build_auxiliary(const MigrationDigraph& d, const Linkage& k,
                               const Linkage& l) {
  for (const auto* link : {&k, &l}) {
    if (auto v = check_linkage(d.graph, *link); !v) {
      throw PreconditionError("auxiliary digraph needs linkages: " + v.reason());
    }
  }
  for (const Path& p : k.paths) {
    if (!d.is_source(p.start())) {
      throw PreconditionError("a K-path does not start at a source");
    }
  }
  for (const Path& p : l.paths) {
    if (!d.is_sink(p.end())) {
      throw PreconditionError("an L-path does not end at a sink");
    }
  }
  std::vector<Path> all = k.paths;
  all.insert(all.end(), l.paths.begin(), l.paths.end());
  AuxiliaryGraph aux;
  aux.graph = split_vertices(path_union(all, d.graph.id_bound())).graph;
  aux.apex = SplitMapping::in_copy(d.graph.id_bound());
  aux.graph.add_vertex(aux.apex);
  for (const Path& p : k.paths) {
    aux.graph.add_edge(aux.apex, SplitMapping::in_copy(p.start()));
    std::vector<Vertex> walk{aux.apex};
    const Path lifted = lift_path(p);
    walk.insert(walk.end(), lifted.vertices().begin(), lifted.vertices().end());
    aux.family_p.emplace_back(std::move(walk));
  }
  for (const Path& p : l.paths) {
    aux.graph.add_edge(SplitMapping::out_copy(p.end()), aux.apex);
    std::vector<Vertex> walk = lift_path(p).vertices();
    walk.push_back(aux.apex);
    aux.family_q.emplace_back(std::move(walk));
  }
  return aux;
}

namespace {

constexpr int kUnreachable = std::numeric_limits<int>::max() / 4;

class Harvester {
 public:
  Harvester(const Digraph& g, Vertex x, std::size_t order, std::size_t limit)
      : g_(g), x_(x), order_(order), limit_(limit) {
    const auto edges = g.edges();
    out_.resize(idx(g.id_bound()));
    for (std::size_t i = 0; i < edges.size(); ++i) {
      out_[idx(edges[i].tail)].push_back({edges[i].head, i});
    }
    used_.assign(edges.size(), 0);
    on_path_.assign(idx(g.id_bound()), 0);
    dist_.assign(idx(g.id_bound()), {});
    for (Vertex v : g.vertices()) dist_[idx(v)] = bfs(v);
    for (Vertex v : g.vertices()) {
      if (v == x) continue;
      if (g.in_degree(v) >= 2) out_stems_.push_back(v);
      if (g.out_degree(v) >= 2) in_roots_.push_back(v);
    }
    min_out_ = min_cost(true);
    min_in_ = min_cost(false);
  }

  // Returns the star or nullopt; `exhausted` tells whether the node limit
  // cut the search short.
  std::optional<OnionStar> run() {
    if (min_out_ >= kUnreachable || min_in_ >= kUnreachable) return std::nullopt;
    const long max_budget =
        static_cast<long>(6 * order_) * static_cast<long>(g_.num_vertices());
    for (long budget = rest_lb(0); budget <= max_budget; ++budget) {
      budget_cut_ = false;
      slots_.assign(2 * order_, {});
      if (onion(0, budget)) {
        OnionStar star;
        star.centre = x_;
        for (std::size_t j = 0; j < slots_.size(); ++j) {
          (j < order_ ? star.out_onions : star.in_onions).push_back(slots_[j]);
        }
        return star;
      }
      if (aborted_ || !budget_cut_) break;
    }
    return std::nullopt;
  }

  bool aborted() const { return aborted_; }
  std::size_t nodes() const { return nodes_; }

 private:
  struct Arc {
    Vertex head;
    std::size_t id;
  };

  std::vector<int> bfs(Vertex from) const {
    std::vector<int> d(idx(g_.id_bound()), kUnreachable);
    std::deque<Vertex> queue{from};
    d[idx(from)] = 0;
    while (!queue.empty()) {
      Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g_.out_neighbors(v)) {
        if (d[idx(w)] == kUnreachable) {
          d[idx(w)] = d[idx(v)] + 1;
          queue.push_back(w);
        }
      }
    }
    return d;
  }

  int dist(Vertex a, Vertex b) const { return dist_[idx(a)][idx(b)]; }

  // Lower bound on the edges of an onion whose free terminal is v.
  int cost(bool out, Vertex v) const {
    const int there = out ? dist(x_, v) : dist(v, x_);
    const int back = out ? dist(v, x_) : dist(x_, v);
    if (there >= kUnreachable || back >= kUnreachable) return kUnreachable;
    return 2 * there + back;
  }

  int min_cost(bool out) const {
    int best = kUnreachable;
    for (Vertex v : out ? out_stems_ : in_roots_) best = std::min(best, cost(out, v));
    return best;
  }

  long rest_lb(std::size_t j) const {
    const std::size_t outs = j < order_ ? order_ - j : 0;
    const std::size_t ins = j < order_ ? order_ : 2 * order_ - j;
    return static_cast<long>(outs) * min_out_ + static_cast<long>(ins) * min_in_;
  }

  bool onion(std::size_t j, long budget) {
    if (j == 2 * order_) return true;
    const bool out = j < order_;
    const Vertex prev = (j == 0 || j == order_) ? -1 : slots_[j - 1].stem;
    const Vertex prev_root = (j == 0 || j == order_) ? -1 : slots_[j - 1].root;
    for (Vertex v : out ? out_stems_ : in_roots_) {
      if (out ? v <= prev : v <= prev_root) continue;
      if (terminals_.contains(v)) continue;
      const int c = cost(out, v);
      if (c >= kUnreachable) continue;
      if (c + rest_lb(j + 1) > budget) {
        budget_cut_ = true;
        continue;
      }
      terminals_.insert(v);
      slots_[j].root = out ? x_ : v;
      slots_[j].stem = out ? v : x_;
      bool found = path(j, 0, budget);
      terminals_.erase(v);
      if (found) return true;
      if (aborted_) return false;
    }
    return false;
  }

  // Paths 0 and 1 run root -> stem, path 2 stem -> root.
  bool path(std::size_t j, int which, long budget) {
    const Onion& z = slots_[j];
    const Vertex from = which < 2 ? z.root : z.stem;
    const Vertex to = which < 2 ? z.stem : z.root;
    long after = rest_lb(j + 1);
    if (which == 0) after += dist(z.root, z.stem) + dist(z.stem, z.root);
    if (which == 1) after += dist(z.stem, z.root);
    walk_.clear();
    walk_edges_.clear();
    walk_.push_back(from);
    on_path_[idx(from)] = 1;
    bool found = extend(j, which, to, budget, after);
    on_path_[idx(from)] = 0;
    return found;
  }

  bool extend(std::size_t j, int which, Vertex to, long budget, long after) {
    if (++nodes_ > limit_) {
      aborted_ = true;
      return false;
    }
    const Vertex cur = walk_.back();
    const long len = static_cast<long>(walk_edges_.size());
    if (cur == to) return finish(j, which, budget - len);
    for (const Arc& a : out_[idx(cur)]) {
      if (used_[a.id] || on_path_[idx(a.head)]) continue;
      if (which == 1 && walk_edges_.empty() && a.id <= first_edge_) continue;
      const int rest = dist(a.head, to);
      if (rest >= kUnreachable) continue;
      if (len + 1 + rest + after > budget) {
        budget_cut_ = true;
        continue;
      }
      walk_.push_back(a.head);
      walk_edges_.push_back(a.id);
      on_path_[idx(a.head)] = 1;
      bool found = extend(j, which, to, budget, after);
      on_path_[idx(a.head)] = 0;
      walk_edges_.pop_back();
      walk_.pop_back();
      if (found) return true;
      if (aborted_) return false;
    }
    return false;
  }

  bool finish(std::size_t j, int which, long budget) {
    Path p{std::vector<Vertex>(walk_)};
    const std::vector<std::size_t> ids = walk_edges_;
    (which == 0 ? slots_[j].forward1
                : which == 1 ? slots_[j].forward2 : slots_[j].backward) = p;
    for (std::size_t id : ids) used_[id] = 1;
    const std::size_t saved_first = first_edge_;
    const std::vector<Vertex> saved_walk = walk_;
    const std::vector<std::size_t> saved_edges = walk_edges_;
    const std::vector<char> saved_on_path = on_path_;
    std::fill(on_path_.begin(), on_path_.end(), 0);
    bool found;
    if (which == 0) {
      first_edge_ = ids.front();
      found = path(j, 1, budget);
    } else if (which == 1) {
      found = path(j, 2, budget);
    } else {
      found = onion(j + 1, budget);
    }
    first_edge_ = saved_first;
    on_path_ = saved_on_path;
    walk_ = saved_walk;
    walk_edges_ = saved_edges;
    if (!found) {
      for (std::size_t id : ids) used_[id] = 0;
    }
    return found;
  }

  const Digraph& g_;
  Vertex x_;
  std::size_t order_;
  std::size_t limit_;
  std::vector<std::vector<Arc>> out_;
  std::vector<std::vector<int>> dist_;
  std::vector<Vertex> out_stems_;
  std::vector<Vertex> in_roots_;
  int min_out_ = kUnreachable;
  int min_in_ = kUnreachable;

  std::vector<char> used_;
  std::vector<char> on_path_;
  VertexSet terminals_;
  std::vector<Onion> slots_;
  std::vector<Vertex> walk_;
  std::vector<std::size_t> walk_edges_;
  std::size_t first_edge_ = 0;
  std::size_t nodes_ = 0;
  bool aborted_ = false;
  bool budget_cut_ = false;
};

void check_hypotheses(const Digraph& aux, Vertex x, const std::vector<Path>& p,
                      const std::vector<Path>& q) {
  for (const auto* family : {&p, &q}) {
    for (const Path& path : *family) {
      if (auto v = check_path(aux, path); !v) {
        throw PreconditionError("harvest family path is invalid: " + v.reason());
      }
    }
  }
  for (const Path& path : p) {
    if (path.start() != x) {
      throw PreconditionError(
          "harvest hypothesis violated (every P-path starts and every Q-path "
          "ends at the centre): a P-path starts elsewhere");
    }
  }
  for (const Path& path : q) {
    if (path.end() != x) {
      throw PreconditionError(
          "harvest hypothesis violated (every P-path starts and every Q-path "
          "ends at the centre): a Q-path ends elsewhere");
    }
  }
  std::vector<std::set<Edge>> pe, qe;
  for (const Path& path : p) pe.push_back(edge_set(path));
  for (const Path& path : q) qe.push_back(edge_set(path));
  for (std::size_t i = 0; i < pe.size(); ++i) {
    for (std::size_t j = 0; j < qe.size(); ++j) {
      if (!share_edge(pe[i], qe[j])) {
        throw PreconditionError(
            "harvest hypothesis violated (every P-path shares an edge with "
            "every Q-path): P-path " + std::to_string(i) + " and Q-path " +
            std::to_string(j) + " share no edge");
      }
    }
  }
  for (const auto* family : {&pe, &qe}) {
    for (std::size_t i = 0; i < family->size(); ++i) {
      for (std::size_t j = i + 1; j < family->size(); ++j) {
        if (share_edge((*family)[i], (*family)[j])) {
          throw PreconditionError(
              "harvest hypothesis violated (paths within a family are "
              "edge-disjoint): paths " + std::to_string(i) + " and " +
              std::to_string(j) + " share an edge");
        }
      }
    }
  }
}

}  // namespace

HarvestResult harvest_onion_star(const Digraph& aux, Vertex x,
                                 const std::vector<Path>& p,
                                 const std::vector<Path>& q, std::size_t k,
                                 const BigInt& g5_threshold,
                                 const HarvestOptions& options) {
  if (k < 1) throw PreconditionError("onion-star order must be >= 1");
  if (!aux.has_vertex(x)) throw PreconditionError("centre is not a vertex");
  check_hypotheses(aux, x, p, q);
  const bool above = BigInt(p.size()) >= g5_threshold &&
                     BigInt(q.size()) >= g5_threshold;
  auto failure = [&](const std::string& why) {
    HarvestResult r;
    r.diagnostic = above ? "bound-parameter: " + why +
                               " although both families reach g5 = " +
                               g5_threshold.str()
                         : "search exhausted: " + why;
    return r;
  };
  if (aux.out_degree(x) < 3 * k || aux.in_degree(x) < 3 * k) {
    return failure("the centre has fewer than " + std::to_string(3 * k) +
                   " out- or in-edges");
  }
  Harvester h(aux, x, k, options.node_limit);
  auto star = h.run();
  if (!star) {
    return failure(h.aborted() ? "node limit of " +
                                     std::to_string(options.node_limit) +
                                     " reached"
                               : "no onion-star of order " + std::to_string(k));
  }
  if (auto v = check_onion_star(aux, *star, k); !v) {
    throw SoundnessError("harvested onion-star is invalid: " + v.reason());
  }
  return {std::move(star), ""};
}

std::vector<Tripod> onions_to_tripods(const MigrationDigraph& d,
                                      const OnionStar& star) {
  std::vector<Tripod> out;
  for (const Onion& z : star.out_onions) {
    if (z.root != star.centre || z.forward1.size() < 2 ||
        z.forward2.size() < 2 || z.backward.size() < 2) {
      throw PreconditionError("onion does not leave and re-enter the centre");
    }
    if (!SplitMapping::is_in_copy(z.stem)) {
      throw PreconditionError("onion stem is not an in-copy");
    }
    Path p1 = project_path(drop_front(z.forward1));
    Path p2 = project_path(drop_front(z.forward2));
    Path tail = project_path(drop_back(z.backward));
    const Vertex c = SplitMapping::original(z.stem);
    if (p2.start() < p1.start()) std::swap(p1, p2);
    Tripod r{p1.start(), p2.start(), tail.end(), c, p1, p2, tail};
    if (auto v = verify_tripod(d, r); !v) {
      throw SoundnessError("onion did not yield a tripod: " + v.reason());
    }
    out.push_back(std::move(r));
  }
  if (auto v = check_disjoint(out); !v) {
    throw SoundnessError("onion tripods are not disjoint: " + v.reason());
  }
  return out;
}

PackingOutcome corollary6(const MigrationDigraph& d, const Linkage& k,
                          const Linkage& l, std::size_t order,
                          const BigInt& g5_threshold,
                          const Corollary6Options& options) {
  if (order < 1) throw PreconditionError("packing order must be >= 1");
  if (k.size() == 0 || l.size() == 0) {
    throw PreconditionError("both linkages must be nonempty");
  }
  for (std::size_t i = 0; i < k.size(); ++i) {
    for (std::size_t j = 0; j < l.size(); ++j) {
      if (!k.paths[i].intersects(l.paths[j])) {
        throw PreconditionError("K-path " + std::to_string(i) +
                                " and L-path " + std::to_string(j) +
                                " do not intersect");
      }
    }
  }
  AuxiliaryGraph aux = build_auxiliary(d, k, l);
  HarvestResult harvest = harvest_onion_star(
      aux.graph, aux.apex, aux.family_p, aux.family_q, order, g5_threshold,
      options.harvest);

  PackingOutcome outcome;
  Certificate cert;
  cert.kind = CertificateKind::kPacking;
  if (harvest.star) {
    cert.packing = onions_to_tripods(d, *harvest.star);
    cert.provenance = {"corollary6", "onion-star harvest"};
  } else {
    std::vector<Path> all = k.paths;
    all.insert(all.end(), l.paths.begin(), l.paths.end());
    MigrationDigraph sub{path_union(all, d.graph.id_bound()), {}, {}};
    for (Vertex v : sub.graph.vertices()) {
      if (d.is_source(v)) sub.sources.insert(v);
      if (d.is_sink(v)) sub.sinks.insert(v);
    }
    std::optional<std::vector<Tripod>> found;
    try {
      found = find_disjoint_tripods(sub, order, options.fallback_cap);
    } catch (const CapExceededError& e) {
      outcome.diagnostic = harvest.diagnostic + "; fallback: " + e.what();
      return outcome;
    }
    if (!found) {
      outcome.diagnostic = harvest.diagnostic + "; fallback: the union of K "
                           "and L holds fewer than " + std::to_string(order) +
                           " disjoint tripods";
      return outcome;
    }
    cert.packing = std::move(*found);
    cert.provenance = {"corollary6", "direct search fallback"};
    outcome.diagnostic = harvest.diagnostic;
  }
  if (auto v = verify_certificate(d, order, cert); !v) {
    throw SoundnessError("corollary6 packing failed verification: " + v.reason());
  }
  outcome.certificate = std::move(cert);
  return outcome;
}

}  // namespace tripods
