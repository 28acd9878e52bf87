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

#include "tripods/tripod.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <string>
#include <tuple>

#include "tripods/errors.hpp"

namespace tripods {

namespace {

std::size_t idx(Vertex v) { return static_cast<std::size_t>(v); }

// BFS distances from `from` (or to `from` when `backward`), -1 if
// unreachable.
std::vector<int> distances(const Digraph& d, Vertex from, bool backward) {
  std::vector<int> dist(idx(d.id_bound()), -1);
  std::deque<Vertex> queue{from};
  dist[idx(from)] = 0;
  while (!queue.empty()) {
    Vertex v = queue.front();
    queue.pop_front();
    auto next = backward ? d.in_neighbors(v) : d.out_neighbors(v);
    for (Vertex w : next) {
      if (dist[idx(w)] < 0) {
        dist[idx(w)] = dist[idx(v)] + 1;
        queue.push_back(w);
      }
    }
  }
  return dist;
}

// Lexicographically least shortest path from `from` to `to`, given the
// distances to `to`.
Path least_shortest_path(const Digraph& d, Vertex from, Vertex to,
                         const std::vector<int>& dist_to) {
  std::vector<Vertex> walk{from};
  Vertex cur = from;
  while (cur != to) {
    for (Vertex w : d.out_neighbors(cur)) {
      if (dist_to[idx(w)] == dist_to[idx(cur)] - 1) {
        cur = w;
        break;
      }
    }
    walk.push_back(cur);
  }
  return Path(std::move(walk));
}

std::string vtx(Vertex v) { return std::to_string(v); }

Verdict check_shared_only_centre(const Path& a, const Path& b, Vertex c,
                                 const char* what) {
  for (Vertex v : a.vertices()) {
    if (v != c && b.contains(v)) {
      return Verdict::fail(std::string(what) + " share non-centre vertex " +
                           vtx(v));
    }
  }
  return Verdict::pass();
}

}  // namespace

VertexSet Tripod::vertices() const {
  VertexSet out;
  for (const Path* p : {&branch1, &branch2, &tail}) {
    out.insert(p->vertices().begin(), p->vertices().end());
  }
  return out;
}

std::vector<Edge> Tripod::edges() const {
  std::vector<Edge> out;
  for (const Path* p : {&branch1, &branch2, &tail}) {
    for (std::size_t i = 1; i < p->size(); ++i) {
      out.push_back({(*p)[i - 1], (*p)[i]});
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

Verdict verify_tripod(const MigrationDigraph& d, const Tripod& r) {
  if (r.s1 == r.s2) return Verdict::fail("the two sources coincide");
  if (!d.is_source(r.s1)) return Verdict::fail("s1 is not a source");
  if (!d.is_source(r.s2)) return Verdict::fail("s2 is not a source");
  if (!d.is_sink(r.t)) return Verdict::fail("t is not a sink");
  struct Part {
    const Path* path;
    Vertex from;
    Vertex to;
    const char* name;
  };
  for (const Part& part : {Part{&r.branch1, r.s1, r.c, "branch1"},
                           Part{&r.branch2, r.s2, r.c, "branch2"},
                           Part{&r.tail, r.c, r.t, "tail"}}) {
    if (part.path->empty()) {
      return Verdict::fail(std::string(part.name) + " is empty");
    }
    if (auto v = check_path(d.graph, *part.path); !v) {
      return Verdict::fail(std::string(part.name) + ": " + v.reason());
    }
    if (part.path->start() != part.from || part.path->end() != part.to) {
      return Verdict::fail(std::string(part.name) +
                           " has the wrong endpoints");
    }
  }
  if (auto v = check_shared_only_centre(r.branch1, r.branch2, r.c,
                                        "branches");
      !v) {
    return v;
  }
  if (auto v = check_shared_only_centre(r.branch1, r.tail, r.c,
                                        "branch1 and tail");
      !v) {
    return v;
  }
  return check_shared_only_centre(r.branch2, r.tail, r.c, "branch2 and tail");
}

bool tripod_exists(const MigrationDigraph& d) {
  if (d.sources.size() < 2) return false;
  for (Vertex t : d.sinks) {
    if (!d.graph.has_vertex(t)) continue;
    auto seen = reachable(reverse(d.graph), {t});
    int count = 0;
    for (Vertex s : d.sources) {
      if (d.graph.has_vertex(s) && seen[idx(s)] && ++count >= 2) return true;
    }
  }
  return false;
}

std::optional<Tripod> find_tripod(const MigrationDigraph& d) {
  std::vector<Vertex> sources;
  for (Vertex s : d.sources) {
    if (d.graph.has_vertex(s)) sources.push_back(s);
  }
  if (sources.size() < 2) return std::nullopt;
  std::map<Vertex, std::vector<int>> from_source;
  for (Vertex s : sources) from_source[s] = distances(d.graph, s, false);

  // Key: (total length, -tail length); iteration order breaks remaining
  // ties lexicographically on (t, s1, s2, c).
  std::optional<std::pair<int, int>> best_key;
  Vertex best_t = 0, best_s1 = 0, best_s2 = 0, best_c = 0;
  std::vector<int> best_to_t;
  const auto verts = d.graph.vertices();
  for (Vertex t : d.sinks) {
    if (!d.graph.has_vertex(t)) continue;
    auto to_t = distances(d.graph, t, true);
    for (std::size_t i = 0; i < sources.size(); ++i) {
      Vertex s1 = sources[i];
      if (to_t[idx(s1)] < 0) continue;
      const auto& d1 = from_source[s1];
      for (std::size_t j = i + 1; j < sources.size(); ++j) {
        Vertex s2 = sources[j];
        if (to_t[idx(s2)] < 0) continue;
        const int total = to_t[idx(s1)] + to_t[idx(s2)];
        if (best_key && total > best_key->first) continue;
        const auto& d2 = from_source[s2];
        for (Vertex c : verts) {
          if (to_t[idx(c)] < 0 || d1[idx(c)] < 0 || d2[idx(c)] < 0) continue;
          if (d1[idx(c)] + to_t[idx(c)] != to_t[idx(s1)]) continue;
          if (d2[idx(c)] + to_t[idx(c)] != to_t[idx(s2)]) continue;
          std::pair<int, int> key{total, -to_t[idx(c)]};
          if (!best_key || key < *best_key) {
            best_key = key;
            best_t = t;
            best_s1 = s1;
            best_s2 = s2;
            best_c = c;
            best_to_t = to_t;
          }
        }
      }
    }
  }
  if (!best_key) return std::nullopt;

  auto to_c = distances(d.graph, best_c, true);
  Tripod r;
  r.s1 = best_s1;
  r.s2 = best_s2;
  r.t = best_t;
  r.c = best_c;
  r.branch1 = least_shortest_path(d.graph, best_s1, best_c, to_c);
  r.branch2 = least_shortest_path(d.graph, best_s2, best_c, to_c);
  r.tail = least_shortest_path(d.graph, best_c, best_t, best_to_t);
  if (auto v = verify_tripod(d, r); !v) {
    throw SoundnessError("find_tripod built an invalid tripod: " + v.reason());
  }
  return r;
}

Tripod tripod_from_path_pair(const MigrationDigraph& host, const Path& p,
                             const Path& q) {
  for (const Path* path : {&p, &q}) {
    if (auto v = check_path(host.graph, *path); !v) {
      throw PreconditionError("path pair: " + v.reason());
    }
    if (!host.is_source(path->start())) {
      throw PreconditionError("path pair: start is not a source");
    }
    if (!host.is_sink(path->end())) {
      throw PreconditionError("path pair: end is not a sink");
    }
  }
  if (p.start() == q.start()) {
    throw PreconditionError("path pair: equal start vertices");
  }
  if (p.end() != q.end()) {
    throw PreconditionError("path pair: different end vertices");
  }
  std::vector<Path> both{p, q};
  MigrationDigraph sub{path_union(both, host.graph.id_bound()),
                       {p.start(), q.start()},
                       {p.end()}};
  auto r = find_tripod(sub);
  if (!r) throw SoundnessError("path pair union holds no tripod");
  if (auto v = verify_tripod(host, *r); !v) {
    throw SoundnessError("path pair tripod invalid in host: " + v.reason());
  }
  return *r;
}

Verdict check_disjoint(const std::vector<Tripod>& tripods) {
  std::map<Vertex, std::size_t> owner;
  for (std::size_t i = 0; i < tripods.size(); ++i) {
    for (Vertex v : tripods[i].vertices()) {
      auto [it, fresh] = owner.emplace(v, i);
      if (!fresh) {
        return Verdict::fail("tripods " + std::to_string(it->second) +
                             " and " + std::to_string(i) + " share vertex " +
                             vtx(v));
      }
    }
  }
  return Verdict::pass();
}

Verdict verify_certificate(const MigrationDigraph& d, std::size_t k,
                           const Certificate& cert) {
  if (cert.kind == CertificateKind::kPacking) {
    if (cert.packing.size() != k) {
      return Verdict::fail("packing has " + std::to_string(cert.packing.size()) +
                           " tripods, expected " + std::to_string(k));
    }
    for (std::size_t i = 0; i < cert.packing.size(); ++i) {
      if (auto v = verify_tripod(d, cert.packing[i]); !v) {
        return Verdict::fail("tripod " + std::to_string(i) + ": " + v.reason());
      }
    }
    return check_disjoint(cert.packing);
  }
  for (Vertex v : cert.hitting_set) {
    if (!d.graph.has_vertex(v)) {
      return Verdict::fail("hitting set contains non-vertex " + vtx(v));
    }
  }
  if (BigInt(cert.hitting_set.size()) > cert.bound) {
    return Verdict::fail("hitting set exceeds its bound");
  }
  if (tripod_exists(delete_vertices(d, cert.hitting_set))) {
    return Verdict::fail("a tripod survives the hitting set");
  }
  return Verdict::pass();
}

Verdict verify_edge_certificate(const MigrationDigraph& d, std::size_t k,
                                const EdgeCertificate& cert) {
  if (cert.kind == CertificateKind::kPacking) {
    if (cert.packing.size() != k) {
      return Verdict::fail("edge packing has " +
                           std::to_string(cert.packing.size()) +
                           " tripods, expected " + std::to_string(k));
    }
    std::map<Edge, std::size_t> owner;
    for (std::size_t i = 0; i < cert.packing.size(); ++i) {
      if (auto v = verify_tripod(d, cert.packing[i]); !v) {
        return Verdict::fail("tripod " + std::to_string(i) + ": " + v.reason());
      }
      for (const Edge& e : cert.packing[i].edges()) {
        auto [it, fresh] = owner.emplace(e, i);
        if (!fresh) {
          return Verdict::fail("tripods " + std::to_string(it->second) +
                               " and " + std::to_string(i) + " share edge (" +
                               vtx(e.tail) + ", " + vtx(e.head) + ")");
        }
      }
    }
    return Verdict::pass();
  }
  std::set<Edge> unique(cert.hitting_set.begin(), cert.hitting_set.end());
  if (unique.size() != cert.hitting_set.size()) {
    return Verdict::fail("edge hitting set repeats an edge");
  }
  for (const Edge& e : cert.hitting_set) {
    if (!d.graph.has_edge(e.tail, e.head)) {
      return Verdict::fail("edge hitting set contains non-edge (" +
                           vtx(e.tail) + ", " + vtx(e.head) + ")");
    }
  }
  if (BigInt(cert.hitting_set.size()) > cert.bound) {
    return Verdict::fail("edge hitting set exceeds its bound");
  }
  if (tripod_exists(delete_edges(d, cert.hitting_set))) {
    return Verdict::fail("a tripod survives the edge hitting set");
  }
  return Verdict::pass();
}

namespace {

class MinimalTripodEnumerator {
 public:
  MinimalTripodEnumerator(const MigrationDigraph& d, std::size_t cap)
      : d_(d), cap_(cap), on_path_(idx(d.graph.id_bound()), 0) {}

  std::vector<Tripod> run() {
    for (Vertex c : d_.graph.vertices()) tails_from(c);
    std::vector<std::pair<std::vector<Vertex>, Tripod>> ordered;
    for (auto& [key, r] : by_set_) ordered.emplace_back(key, r);
    std::stable_sort(ordered.begin(), ordered.end(),
                     [](const auto& a, const auto& b) {
                       return a.first.size() < b.first.size();
                     });
    std::vector<std::vector<Vertex>> kept_sets;
    std::vector<Tripod> kept;
    for (auto& [set, r] : ordered) {
      bool minimal = true;
      for (const auto& smaller : kept_sets) {
        if (smaller.size() < set.size() &&
            std::includes(set.begin(), set.end(), smaller.begin(),
                          smaller.end())) {
          minimal = false;
          break;
        }
      }
      if (minimal) {
        kept_sets.push_back(set);
        kept.push_back(r);
      }
    }
    return kept;
  }

 private:
  // Tails: c -> t, no sink before t, no source after c.
  void tails_from(Vertex c) {
    std::vector<Vertex> tail{c};
    on_path_[idx(c)] = 1;
    extend_tail(tail);
    on_path_[idx(c)] = 0;
  }

  void extend_tail(std::vector<Vertex>& tail) {
    Vertex v = tail.back();
    if (d_.is_sink(v)) {
      with_tail(Path(tail));
      return;
    }
    for (Vertex w : d_.graph.out_neighbors(v)) {
      if (on_path_[idx(w)] || d_.is_source(w)) continue;
      on_path_[idx(w)] = 1;
      tail.push_back(w);
      extend_tail(tail);
      tail.pop_back();
      on_path_[idx(w)] = 0;
    }
  }

  void with_tail(const Path& tail) {
    const Vertex c = tail.start();
    std::vector<Path> branches;
    if (d_.is_source(c)) {
      branches.emplace_back(std::vector<Vertex>{c});
    }
    std::vector<Vertex> rev{c};
    collect_branches(rev, branches);
    for (std::size_t i = 0; i < branches.size(); ++i) {
      for (std::size_t j = i + 1; j < branches.size(); ++j) {
        const Path& a = branches[i];
        const Path& b = branches[j];
        if (a.start() == b.start()) continue;
        if (d_.is_source(c) && a.size() > 1 && b.size() > 1) continue;
        bool clash = false;
        for (std::size_t x = 0; x + 1 < a.size() && !clash; ++x) {
          clash = b.contains(a[x]);
        }
        if (clash) continue;
        Tripod r;
        const bool swap = b.start() < a.start();
        r.branch1 = swap ? b : a;
        r.branch2 = swap ? a : b;
        r.s1 = r.branch1.start();
        r.s2 = r.branch2.start();
        r.c = c;
        r.t = tail.end();
        r.tail = tail;
        if (++generated_ > cap_) {
          throw CapExceededError("minimal tripod enumeration exceeded cap of " +
                                 std::to_string(cap_));
        }
        auto set = r.vertices();
        by_set_.emplace(std::vector<Vertex>(set.begin(), set.end()), r);
      }
    }
  }

  // Reverse walks from c that stop at their first source. Tail vertices are
  // marked on_path_ and therefore avoided.
  void collect_branches(std::vector<Vertex>& rev, std::vector<Path>& out) {
    Vertex v = rev.back();
    for (Vertex w : d_.graph.in_neighbors(v)) {
      if (on_path_[idx(w)]) continue;
      rev.push_back(w);
      if (d_.is_source(w)) {
        out.emplace_back(std::vector<Vertex>(rev.rbegin(), rev.rend()));
      } else {
        on_path_[idx(w)] = 1;
        collect_branches(rev, out);
        on_path_[idx(w)] = 0;
      }
      rev.pop_back();
    }
  }

  const MigrationDigraph& d_;
  std::size_t cap_;
  std::size_t generated_ = 0;
  std::vector<char> on_path_;
  std::map<std::vector<Vertex>, Tripod> by_set_;
};

class PackingSearch {
 public:
  PackingSearch(std::vector<Tripod> tripods, std::size_t limit)
      : tripods_(std::move(tripods)), limit_(limit) {
    for (const auto& r : tripods_) sets_.push_back(r.vertices());
  }

  std::optional<std::vector<Tripod>> run(std::size_t k) {
    chosen_.clear();
    used_.clear();
    if (!search(0, k)) return std::nullopt;
    std::vector<Tripod> out;
    for (std::size_t i : chosen_) out.push_back(tripods_[i]);
    return out;
  }

 private:
  bool search(std::size_t from, std::size_t k) {
    if (chosen_.size() == k) return true;
    if (++nodes_ > limit_) {
      throw CapExceededError("disjoint tripod search exceeded its node limit");
    }
    for (std::size_t i = from; i + (k - chosen_.size()) <= tripods_.size();
         ++i) {
      bool free = true;
      for (Vertex v : sets_[i]) {
        if (used_.contains(v)) {
          free = false;
          break;
        }
      }
      if (!free) continue;
      used_.insert(sets_[i].begin(), sets_[i].end());
      chosen_.push_back(i);
      if (search(i + 1, k)) return true;
      chosen_.pop_back();
      for (Vertex v : sets_[i]) used_.erase(v);
    }
    return false;
  }

  std::vector<Tripod> tripods_;
  std::vector<VertexSet> sets_;
  std::size_t limit_;
  std::size_t nodes_ = 0;
  std::vector<std::size_t> chosen_;
  VertexSet used_;
};

}  // namespace

std::vector<Tripod> enumerate_minimal_tripods(const MigrationDigraph& d,
                                              std::size_t cap) {
  return MinimalTripodEnumerator(d, cap).run();
}

std::optional<std::vector<Tripod>> find_disjoint_tripods(
    const MigrationDigraph& d, std::size_t k, std::size_t cap) {
  std::vector<Tripod> greedy;
  MigrationDigraph rest = d;
  while (greedy.size() < k) {
    auto r = find_tripod(rest);
    if (!r) break;
    greedy.push_back(*r);
    rest = delete_vertices(rest, r->vertices());
  }
  if (greedy.size() == k) return greedy;
  if (greedy.size() < k && !tripod_exists(d)) return std::nullopt;
  auto minimal = enumerate_minimal_tripods(d, cap);
  return PackingSearch(std::move(minimal), cap * 64).run(k);
}

}  // namespace tripods
