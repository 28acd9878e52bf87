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

#include "tripods/pipeline.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <map>
#include <set>
#include <string>
#include <utility>

#include "tripods/errors.hpp"
#include "tripods/extract.hpp"
#include "tripods/matroid.hpp"
#include "tripods/menger.hpp"

namespace tripods {

namespace {

std::size_t to_size(const BigInt& v, const std::string& what) {
  if (v < 0 || v > BigInt(std::numeric_limits<std::size_t>::max() / 4)) {
    throw PreconditionError(what + " = " + v.str() + " is out of range");
  }
  return static_cast<std::size_t>(v);
}

bool meets(const Path& p, const VertexSet& s) {
  for (Vertex v : p.vertices()) {
    if (s.contains(v)) return true;
  }
  return false;
}

std::vector<std::string> prefixed(std::vector<std::string> head,
                                  const std::vector<std::string>& rest) {
  head.insert(head.end(), rest.begin(), rest.end());
  return head;
}

void require_verified(const MigrationDigraph& d, std::size_t k,
                      const Certificate& cert, const std::string& where) {
  if (auto v = verify_certificate(d, k, cert); !v) {
    throw SoundnessError(where + " produced an invalid certificate: " +
                         v.reason());
  }
}

Certificate packing_of(std::vector<Tripod> tripods,
                       std::vector<std::string> provenance) {
  Certificate c;
  c.kind = CertificateKind::kPacking;
  c.packing = std::move(tripods);
  c.provenance = std::move(provenance);
  return c;
}

}  // namespace

Verdict check_dichotomy(const MigrationDigraph& d, const Linkage& p,
                        const Path& q, std::size_t ell,
                        const Dichotomy10& out) {
  if (out.kind == DichotomyKind::kLinkagePair) {
    if (auto v = check_linkage(d.graph, out.k); !v) {
      return Verdict::fail("K is not a linkage: " + v.reason());
    }
    if (auto v = check_linkage(d.graph, out.l); !v) {
      return Verdict::fail("L is not a linkage: " + v.reason());
    }
    if (out.k.size() != out.l.size()) return Verdict::fail("|K| differs from |L|");
    if (out.k.size() < ell) return Verdict::fail("|K| is below ell");
    for (const Path& path : out.k.paths) {
      if (!d.is_source(path.start())) {
        return Verdict::fail("a K-path does not start at a source");
      }
    }
    for (const Path& path : out.l.paths) {
      if (!d.is_sink(path.end())) {
        return Verdict::fail("an L-path does not end at a sink");
      }
    }
    for (const Path& a : out.k.paths) {
      for (const Path& b : out.l.paths) {
        if (!a.intersects(b)) {
          return Verdict::fail("K and L do not pairwise intersect");
        }
      }
    }
    return Verdict::pass();
  }
  if (auto v = verify_tripod(d, out.r); !v) {
    return Verdict::fail("R is not a tripod: " + v.reason());
  }
  if (out.p_prime.size() < ell) return Verdict::fail("|P'| is below ell");
  if (auto v = check_linkage(d.graph, out.p_prime); !v) {
    return Verdict::fail("P' is not a linkage: " + v.reason());
  }
  for (const Path& path : out.p_prime.paths) {
    if (std::find(p.paths.begin(), p.paths.end(), path) == p.paths.end()) {
      return Verdict::fail("P' is not a sublinkage of P");
    }
  }
  if (out.q_prime.empty()) return Verdict::fail("Q' is empty");
  auto at = q.position(out.q_prime.start());
  if (!at || *at + out.q_prime.size() > q.size()) {
    return Verdict::fail("Q' is not a subpath of Q");
  }
  for (std::size_t i = 0; i < out.q_prime.size(); ++i) {
    if (q[*at + i] != out.q_prime[i]) {
      return Verdict::fail("Q' is not a subpath of Q");
    }
  }
  const VertexSet rv = out.r.vertices();
  if (meets(out.q_prime, rv)) return Verdict::fail("Q' meets R");
  for (const Path& path : out.p_prime.paths) {
    if (!path.intersects(out.q_prime)) {
      return Verdict::fail("Q' misses a path of P'");
    }
    if (meets(path, rv)) return Verdict::fail("a path of P' meets R");
  }
  return Verdict::pass();
}

Dichotomy10 lemma10(const MigrationDigraph& d, const Linkage& p, const Path& q,
                    std::size_t ell) {
  if (ell < 1) throw PreconditionError("ell must be >= 1");
  if (auto v = check_linkage(d.graph, p, d.sources, d.sinks); !v) {
    throw PreconditionError("P must be a source-sink linkage: " + v.reason());
  }
  if (q.empty()) throw PreconditionError("Q is empty");
  if (auto v = check_path(d.graph, q); !v) {
    throw PreconditionError("Q is not a path: " + v.reason());
  }
  const BigInt need = BoundTable().g10(ell);
  if (BigInt(p.size()) < need) {
    throw PreconditionError("|P| = " + std::to_string(p.size()) +
                            " is below g10(" + std::to_string(ell) +
                            ") = " + need.str());
  }
  std::map<Vertex, std::size_t> owner;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!p.paths[i].intersects(q)) {
      throw PreconditionError("Q misses P-path " + std::to_string(i));
    }
    for (Vertex v : p.paths[i].vertices()) owner[v] = i;
  }

  struct Segment {
    std::size_t begin = 0;
    std::size_t end = 0;  // inclusive
    std::set<std::size_t> hit;
  };
  std::size_t pos = 0;
  auto grab = [&](std::size_t count) {
    Segment s;
    s.begin = pos;
    while (s.hit.size() < count) {
      if (pos >= q.size()) {
        throw SoundnessError("segment construction ran out of Q");
      }
      if (auto it = owner.find(q[pos]); it != owner.end()) s.hit.insert(it->second);
      ++pos;
    }
    s.end = pos - 1;
    return s;
  };
  const std::size_t pp = ell * ell;
  std::vector<Segment> a_seg, b_seg;
  for (std::size_t i = 0; i < ell; ++i) {
    a_seg.push_back(grab(ell + pp * ell));
    b_seg.push_back(grab(pp));
  }
  auto segment_path = [&](const Segment& s) {
    return Path(std::vector<Vertex>(q.vertices().begin() + static_cast<long>(s.begin),
                                    q.vertices().begin() + static_cast<long>(s.end) + 1));
  };

  Dichotomy10 out;
  bool found = false;
  for (std::size_t i = 0; i < ell && !found; ++i) {
    for (std::size_t j = 0; j < ell && !found; ++j) {
      if (i == j) continue;
      std::vector<std::size_t> diff;
      std::set_difference(b_seg[i].hit.begin(), b_seg[i].hit.end(),
                          b_seg[j].hit.begin(), b_seg[j].hit.end(),
                          std::back_inserter(diff));
      if (diff.size() < ell) continue;
      const Segment& bi = b_seg[i];
      auto first_on_segment = [&](const Path& path) {
        for (Vertex v : path.vertices()) {
          auto at = q.position(v);
          if (at && *at >= bi.begin && *at <= bi.end) return *at;
        }
        throw SoundnessError("a path of P(B) misses B");
      };
      const Path* p1 = &p.paths[diff[0]];
      const Path* p2 = &p.paths[diff[1]];
      std::size_t u1 = first_on_segment(*p1);
      std::size_t u2 = first_on_segment(*p2);
      if (u2 < u1) {
        std::swap(p1, p2);
        std::swap(u1, u2);
      }
      std::size_t w = u1 + 1;
      while (!p2->contains(q[w])) ++w;
      const Vertex u = q[u1];
      const Vertex c = q[w];
      Path along(std::vector<Vertex>(q.vertices().begin() + static_cast<long>(u1),
                                     q.vertices().begin() + static_cast<long>(w) + 1));
      out.kind = DichotomyKind::kTripod;
      out.r = Tripod{p1->start(),
                     p2->start(),
                     p2->end(),
                     c,
                     concat(subpath(*p1, p1->start(), u), along),
                     subpath(*p2, p2->start(), c),
                     subpath(*p2, c, p2->end())};
      out.q_prime = segment_path(b_seg[j]);
      for (std::size_t index : b_seg[j].hit) {
        if (!bi.hit.contains(index)) out.p_prime.paths.push_back(p.paths[index]);
      }
      found = true;
    }
  }
  if (!found) {
    std::set<std::size_t> common = b_seg[0].hit;
    std::set<std::size_t> seen;
    for (const Segment& s : b_seg) {
      std::set<std::size_t> next;
      std::set_intersection(common.begin(), common.end(), s.hit.begin(),
                            s.hit.end(), std::inserter(next, next.end()));
      common = std::move(next);
      seen.insert(s.hit.begin(), s.hit.end());
    }
    if (common.size() < ell) {
      throw SoundnessError("the B-segments share fewer than ell paths");
    }
    out.kind = DichotomyKind::kLinkagePair;
    for (std::size_t index : common) {
      if (out.l.size() == ell) break;
      out.l.paths.push_back(p.paths[index]);
    }
    std::vector<Path> parts;
    VertexSet starts, ends;
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (seen.contains(i)) continue;
      parts.push_back(p.paths[i]);
      starts.insert(p.paths[i].start());
    }
    parts.push_back(q);
    for (const Segment& s : b_seg) ends.insert(q[s.end]);
    MengerResult m = max_linkage(path_union(parts, d.graph.id_bound()), starts, ends);
    if (m.value < ell) {
      throw SoundnessError("the auxiliary digraph has no linkage of size ell");
    }
    m.linkage.paths.resize(ell);
    out.k = std::move(m.linkage);
  }
  if (auto v = check_dichotomy(d, p, q, ell, out); !v) {
    throw SoundnessError("lemma10 outcome failed validation: " + v.reason());
  }
  return out;
}

PackingOutcome lemma9(const MigrationDigraph& d, const Linkage& p,
                      const Path& q, std::size_t k, const EngineConfig& cfg) {
  if (k < 1) throw PreconditionError("k must be >= 1");
  const BoundTable& b = cfg.bounds;
  const long kk = static_cast<long>(k);
  const BigInt g9 = b.g9(kk);
  if (BigInt(p.size()) < g9) {
    throw PreconditionError("|P| = " + std::to_string(p.size()) +
                            " is below g9(" + std::to_string(k) +
                            ") = " + g9.str());
  }
  std::vector<Tripod> found;
  std::vector<std::string> trail{"lemma9"};
  Linkage cur_p = p;
  Path cur_q = q;
  for (std::size_t round = 1; round <= k; ++round) {
    const std::size_t ell = to_size(b.g10_iterate(b.g5(kk), kk - static_cast<long>(round)),
                                    "round threshold");
    Dichotomy10 r = lemma10(d, cur_p, cur_q, ell);
    if (r.kind == DichotomyKind::kTripod) {
      found.push_back(std::move(r.r));
      trail.push_back("lemma10:tripod");
      cur_p = std::move(r.p_prime);
      cur_q = std::move(r.q_prime);
      continue;
    }
    trail.push_back("lemma10:linkage-pair");
    const std::size_t rest = k - found.size();
    PackingOutcome inner = corollary6(d, r.k, r.l, rest,
                                      b.g5(static_cast<long>(rest)), cfg.corollary6);
    if (!inner.certificate) {
      return {std::nullopt, "lemma9 round " + std::to_string(round) + ": " +
                                inner.diagnostic};
    }
    found.insert(found.end(), inner.certificate->packing.begin(),
                 inner.certificate->packing.end());
    Certificate cert = packing_of(std::move(found),
                                  prefixed(trail, inner.certificate->provenance));
    require_verified(d, k, cert, "lemma9");
    return {std::move(cert), inner.diagnostic};
  }
  Certificate cert = packing_of(std::move(found), trail);
  require_verified(d, k, cert, "lemma9");
  return {std::move(cert), ""};
}

namespace {

struct CommonEnds {
  std::vector<Vertex> ys;
  std::vector<const Path*> p_of;
  std::vector<const Path*> q_of;
};

CommonEnds check_theorem4_shape(const MigrationDigraph& d, const Linkage& p,
                                const Linkage& q, std::size_t k) {
  if (k < 1) throw PreconditionError("k must be >= 1");
  for (const auto* link : {&p, &q}) {
    if (auto v = check_linkage(d.graph, *link, d.sources, d.sinks); !v) {
      throw PreconditionError("theorem4 needs source-sink linkages: " + v.reason());
    }
  }
  if (p.size() == 0) throw PreconditionError("theorem4 needs nonempty linkages");
  if (p.ends() != q.ends()) {
    throw PreconditionError("theorem4 needs end(P) = end(Q)");
  }
  for (Vertex s : p.starts()) {
    if (q.starts().contains(s)) {
      throw PreconditionError("theorem4 needs disjoint start sets");
    }
  }
  std::map<Vertex, const Path*> p_at, q_at;
  for (const Path& path : p.paths) p_at[path.end()] = &path;
  for (const Path& path : q.paths) q_at[path.end()] = &path;
  CommonEnds out;
  for (const auto& [y, path] : p_at) {
    out.ys.push_back(y);
    out.p_of.push_back(path);
    out.q_of.push_back(q_at.at(y));
  }
  return out;
}

PackingOutcome pairs_to_packing(const MigrationDigraph& d, const CommonEnds& e,
                                const std::vector<std::size_t>& chosen,
                                std::vector<std::string> provenance,
                                std::size_t k) {
  std::vector<Tripod> tripods;
  for (std::size_t i : chosen) {
    tripods.push_back(tripod_from_path_pair(d, *e.p_of[i], *e.q_of[i]));
  }
  Certificate cert = packing_of(std::move(tripods), std::move(provenance));
  require_verified(d, k, cert, "theorem4");
  return {std::move(cert), ""};
}

PackingOutcome ramsey_route(const MigrationDigraph& d, const CommonEnds& e,
                            std::size_t k, const EngineConfig& cfg) {
  const BoundTable& b = cfg.bounds;
  const long kk = static_cast<long>(k);
  const std::size_t n = e.ys.size();
  const BigInt g4 = b.g4_ramsey(kk);
  if (BigInt(n) < g4) {
    throw PreconditionError("the Ramsey route needs |P| >= g4(" +
                            std::to_string(k) + ") = " + g4.str() + ", got " +
                            std::to_string(n));
  }
  AdjacencyMatrix dir(n, std::vector<char>(n, 0));
  AdjacencyMatrix und(n, std::vector<char>(n, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && e.p_of[i]->intersects(*e.q_of[j])) dir[i][j] = 1;
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) und[i][j] = dir[i][j] || dir[j][i];
  }
  const BigInt ell_big = b.g5(kk);
  const BigInt a_big = transitive_bound(2 * ell_big);
  // With b = 1 the size requirement is 1 for every a; a clique larger than
  // the graph cannot exist.
  const std::size_t a = a_big > BigInt(n) ? n + 1 : static_cast<std::size_t>(a_big);
  RamseyResult r = ramsey_extract(und, a, k);
  if (!r.clique) {
    return pairs_to_packing(d, e, r.vertices, {"theorem4:ramsey", "independent-set"}, k);
  }
  const std::size_t ell = to_size(ell_big, "g5(k)");
  AdjacencyMatrix sub(a, std::vector<char>(a, 0));
  for (std::size_t i = 0; i < a; ++i) {
    for (std::size_t j = 0; j < a; ++j) sub[i][j] = dir[r.vertices[i]][r.vertices[j]];
  }
  std::vector<std::size_t> chain = transitive_extract(sub, 2 * ell);
  Linkage kl, ll;
  for (std::size_t i = 0; i < ell; ++i) {
    kl.paths.push_back(*e.p_of[r.vertices[chain[i]]]);
    ll.paths.push_back(*e.q_of[r.vertices[chain[ell + i]]]);
  }
  PackingOutcome out = corollary6(d, kl, ll, k, ell_big, cfg.corollary6);
  if (out.certificate) {
    out.certificate->provenance =
        prefixed({"theorem4:ramsey", "clique"}, out.certificate->provenance);
  } else {
    out.diagnostic = "theorem4 Ramsey route: " + out.diagnostic;
  }
  return out;
}

PackingOutcome iterative_route(const MigrationDigraph& d, const Linkage& p,
                               const Linkage& q, const CommonEnds& e,
                               std::size_t k, const EngineConfig& cfg) {
  const BoundTable& b = cfg.bounds;
  const long kk = static_cast<long>(k);
  const BigInt g9 = b.g9(kk);
  for (const auto& [crossing, family] :
       {std::pair{&q, &p}, std::pair{&p, &q}}) {
    for (const Path& path : crossing->paths) {
      Linkage met;
      for (const Path& other : family->paths) {
        if (other.intersects(path)) met.paths.push_back(other);
      }
      if (BigInt(met.size()) < g9) continue;
      PackingOutcome out = lemma9(d, met, path, k, cfg);
      if (out.certificate) {
        out.certificate->provenance =
            prefixed({"theorem4:iterative"}, out.certificate->provenance);
      } else {
        out.diagnostic = "theorem4 iterative route: " + out.diagnostic;
      }
      return out;
    }
  }
  const std::size_t n = e.ys.size();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  std::vector<std::size_t> degree(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && (e.p_of[i]->intersects(*e.q_of[j]) ||
                     e.q_of[i]->intersects(*e.p_of[j]))) {
        adj[i][j] = 1;
        ++degree[i];
      }
    }
  }
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return degree[x] < degree[y];
  });
  std::vector<std::size_t> chosen;
  for (std::size_t v : order) {
    if (std::none_of(chosen.begin(), chosen.end(),
                     [&](std::size_t u) { return adj[u][v]; })) {
      chosen.push_back(v);
    }
  }
  if (chosen.size() < k) {
    return {std::nullopt,
            "theorem4 iterative route: independent set of size " +
                std::to_string(chosen.size()) + " < k = " + std::to_string(k) +
                "; the route guarantees k only when |P| >= g4(k) = " +
                b.g4_iter(kk).str()};
  }
  chosen.resize(k);
  std::sort(chosen.begin(), chosen.end());
  return pairs_to_packing(d, e, chosen, {"theorem4:iterative", "independent-set"}, k);
}

}  // namespace

PackingOutcome theorem4(const MigrationDigraph& d, const Linkage& p,
                        const Linkage& q, std::size_t k,
                        const EngineConfig& cfg) {
  CommonEnds e = check_theorem4_shape(d, p, q, k);
  if (cfg.bounds.route() == Route::kRamsey) return ramsey_route(d, e, k, cfg);
  return iterative_route(d, p, q, e, k, cfg);
}

Verdict check_partition_projection(const MigrationDigraph& d,
                                   const PartitionProjection& proj) {
  VertexSet s = proj.s1, t = proj.t1;
  s.insert(proj.s2.begin(), proj.s2.end());
  t.insert(proj.t2.begin(), proj.t2.end());
  if (s != d.sources || s.size() != proj.s1.size() + proj.s2.size()) {
    return Verdict::fail("(S1, S2) is not a partition of the sources");
  }
  if (t != d.sinks || t.size() != proj.t1.size() + proj.t2.size()) {
    return Verdict::fail("(T1, T2) is not a partition of the sinks");
  }
  if (proj.f.size() > proj.ell) return Verdict::fail("|F| exceeds ell");
  if (!separates(d.graph, proj.s1, proj.t2, proj.f)) {
    return Verdict::fail("an S1-T2 path avoids F");
  }
  if (!separates(d.graph, proj.s2, proj.t1, proj.f)) {
    return Verdict::fail("an S2-T1 path avoids F");
  }
  return Verdict::pass();
}

Lemma12Result lemma12(const MigrationDigraph& d, const VertexSet& s1,
                      const VertexSet& s2, std::size_t k,
                      const EngineConfig& cfg) {
  if (k < 1) throw PreconditionError("k must be >= 1");
  VertexSet all = s1;
  all.insert(s2.begin(), s2.end());
  if (all != d.sources || all.size() != s1.size() + s2.size()) {
    throw PreconditionError("(S1, S2) must partition the sources");
  }
  GammoidOracle m1(d, s1), m2(d, s2);
  IntersectionCertificate ic = matroid_intersection(m1, m2);
  Lemma12Result out;
  PartitionProjection& proj = out.projection;
  proj.s1 = s1;
  proj.s2 = s2;
  proj.common = m1.to_vertices(ic.common);
  proj.ell = ic.common.size();
  proj.t2 = m1.to_vertices(ic.first_side);
  proj.t1 = m1.to_vertices(ic.second_side);
  const BigInt g4 = cfg.bounds.g4(static_cast<long>(k));
  if (BigInt(proj.ell) > g4) {
    MengerResult from1 = max_linkage(d.graph, s1, proj.common);
    MengerResult from2 = max_linkage(d.graph, s2, proj.common);
    if (from1.value != proj.ell || from2.value != proj.ell) {
      throw SoundnessError("common independent set is not linkable from both sides");
    }
    PackingOutcome packed = theorem4(d, from1.linkage, from2.linkage, k, cfg);
    if (!packed.certificate) {
      throw BoundShortfallError("common linkable set of size " +
                                std::to_string(proj.ell) + " exceeds g4(" +
                                std::to_string(k) + ") = " + g4.str() +
                                " but no packing was found: " + packed.diagnostic);
    }
    packed.certificate->provenance =
        prefixed({"lemma12:escape"}, packed.certificate->provenance);
    out.packing = std::move(packed.certificate);
    return out;
  }
  MengerResult f1 = max_linkage(d.graph, s1, proj.t2);
  MengerResult f2 = max_linkage(d.graph, s2, proj.t1);
  if (f1.value != ic.rank_first || f2.value != ic.rank_second) {
    throw SoundnessError("separator sizes disagree with the intersection ranks");
  }
  proj.f = f1.separator;
  proj.f.insert(f2.separator.begin(), f2.separator.end());
  if (auto v = check_partition_projection(d, proj); !v) {
    throw SoundnessError("lemma12 projection failed validation: " + v.reason());
  }
  return out;
}

namespace {

MigrationDigraph associated(const MigrationDigraph& d, const VertexSet& f,
                            const VertexSet& sources, const VertexSet& sinks) {
  MigrationDigraph out;
  out.graph = delete_vertices(d.graph, f);
  for (Vertex s : sources) {
    if (!f.contains(s)) out.sources.insert(s);
  }
  for (Vertex t : sinks) {
    if (!f.contains(t)) out.sinks.insert(t);
  }
  return out;
}

class Certifier {
 public:
  explicit Certifier(const EngineConfig& cfg) : cfg_(cfg) {}

  Certificate run(const MigrationDigraph& d, std::size_t k) {
    if (k == 1) {
      if (auto r = find_tripod(d)) return finish(d, k, packing_of({*r}, {"theorem1:base"}));
      return finish(d, k, hitting({}, {"theorem1:base"}));
    }
    if (!tripod_exists(d)) return finish(d, k, hitting({}, {"theorem1:tripod-free"}));
    if (cfg_.greedy_shortcut) {
      if (auto greedy = greedy_packing(d, k)) {
        return finish(d, k, packing_of(std::move(*greedy), {"theorem1:greedy"}));
      }
    }

    const std::vector<Vertex> sources(d.sources.begin(), d.sources.end());
    if (sources.size() > cfg_.max_sources) {
      throw CapExceededError("partition enumeration over " +
                             std::to_string(sources.size()) +
                             " sources exceeds the cap of " +
                             std::to_string(cfg_.max_sources));
    }
    const std::uint64_t total = std::uint64_t{1} << sources.size();
    auto side = [&](std::uint64_t mask) {
      VertexSet s;
      for (std::size_t i = 0; i < sources.size(); ++i) {
        if (mask >> i & 1) s.insert(sources[i]);
      }
      return s;
    };

    struct Associated {
      PartitionProjection proj;
      MigrationDigraph d1;
      MigrationDigraph d2;
      bool empty1 = false;
      bool empty2 = false;
    };
    std::vector<Associated> objects(total);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      Lemma12Result r = lemma12(d, side(mask), side(~mask & (total - 1)), k, cfg_);
      if (r.packing) {
        r.packing->provenance = prefixed({"theorem1:escape"}, r.packing->provenance);
        return finish(d, k, std::move(*r.packing));
      }
      Associated& a = objects[mask];
      a.proj = std::move(r.projection);
      a.d1 = associated(d, a.proj.f, a.proj.s1, a.proj.t1);
      a.d2 = associated(d, a.proj.f, a.proj.s2, a.proj.t2);
      a.empty1 = !tripod_exists(a.d1);
      a.empty2 = !tripod_exists(a.d2);
    }

    for (std::uint64_t mask = 0; mask < total; ++mask) {
      const Associated& a = objects[mask];
      if (a.empty1 || a.empty2) continue;
      Certificate c1 = run(a.d1, k - 1);
      if (c1.kind == CertificateKind::kPacking) {
        c1.packing.push_back(*find_tripod(a.d2));
        return finish(d, k, packing_of(std::move(c1.packing),
                                       prefixed({"theorem1:splendid", "combine"},
                                                c1.provenance)));
      }
      Certificate c2 = run(a.d2, k - 1);
      if (c2.kind == CertificateKind::kPacking) {
        c2.packing.push_back(*find_tripod(a.d1));
        return finish(d, k, packing_of(std::move(c2.packing),
                                       prefixed({"theorem1:splendid", "combine"},
                                                c2.provenance)));
      }
      VertexSet h = a.proj.f;
      h.insert(c1.hitting_set.begin(), c1.hitting_set.end());
      h.insert(c2.hitting_set.begin(), c2.hitting_set.end());
      return finish(d, k, hitting(std::move(h), {"theorem1:splendid", "union"}));
    }

    // Every partition has a tripod-free side; take a largest one.
    std::uint64_t best_side = 0;
    std::uint64_t best_mask = 0;
    int best_size = -1;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      const Associated& a = objects[mask];
      if (!a.empty1 && !a.empty2) {
        throw SoundnessError("splendid partition left unhandled");
      }
      for (std::uint64_t empty : {mask, ~mask & (total - 1)}) {
        const bool is_empty = empty == mask ? a.empty1 : a.empty2;
        const int size = std::popcount(empty);
        if (is_empty && size > best_size) {
          best_size = size;
          best_side = empty;
          best_mask = mask;
        }
      }
    }
    const Associated& best = objects[best_mask];
    if (best_side == total - 1) {
      return finish(d, k, hitting(best.proj.f, {"theorem1:empty-side"}));
    }
    std::uint64_t moved = best_side;
    for (std::size_t i = 0; i < sources.size(); ++i) {
      if (!(best_side >> i & 1)) {
        moved |= std::uint64_t{1} << i;
        break;
      }
    }
    const Associated& next = objects[moved];
    if (!next.empty2) {
      throw SoundnessError("enlarging a largest empty side left a nonempty complement");
    }
    VertexSet h = best.proj.f;
    h.insert(next.proj.f.begin(), next.proj.f.end());
    return finish(d, k, hitting(std::move(h), {"theorem1:empty-side", "pair"}));
  }

 private:
  static Certificate hitting(VertexSet h, std::vector<std::string> provenance) {
    Certificate c;
    c.kind = CertificateKind::kHittingSet;
    c.hitting_set = std::move(h);
    c.provenance = std::move(provenance);
    return c;
  }

  static std::optional<std::vector<Tripod>> greedy_packing(
      const MigrationDigraph& d, std::size_t k) {
    MigrationDigraph rest = d;
    std::vector<Tripod> found;
    while (found.size() < k) {
      auto r = find_tripod(rest);
      if (!r) return std::nullopt;
      rest = delete_vertices(rest, r->vertices());
      found.push_back(std::move(*r));
    }
    return found;
  }

  Certificate finish(const MigrationDigraph& d, std::size_t k, Certificate c) {
    c.bound = cfg_.bounds.f1(static_cast<long>(k));
    if (c.kind == CertificateKind::kHittingSet &&
        BigInt(c.hitting_set.size()) > c.bound) {
      throw BoundShortfallError("hitting set of size " +
                                std::to_string(c.hitting_set.size()) +
                                " exceeds f1(" + std::to_string(k) +
                                ") = " + c.bound.str());
    }
    require_verified(d, k, c, "theorem1");
    return c;
  }

  const EngineConfig& cfg_;
};

}  // namespace

Certificate theorem1_certify(const MigrationDigraph& d, std::size_t k,
                             const EngineConfig& cfg) {
  if (k < 1) throw PreconditionError("k must be >= 1");
  d.validate();
  Certificate cert = Certifier(cfg).run(d, k);
  if (cert.kind == CertificateKind::kHittingSet && cfg.minimize_hitting_sets) {
    VertexSet h = cert.hitting_set;
    for (Vertex v : cert.hitting_set) {
      VertexSet trial = h;
      trial.erase(v);
      if (!tripod_exists(delete_vertices(d, trial))) h = std::move(trial);
    }
    if (h.size() < cert.hitting_set.size()) {
      cert.hitting_set = std::move(h);
      cert.provenance.push_back("minimized");
      require_verified(d, k, cert, "theorem1");
    }
  }
  return cert;
}

EdgeCertificate corollary2_certify(const MigrationDigraph& d, std::size_t k,
                                   const EngineConfig& cfg) {
  if (k < 1) throw PreconditionError("k must be >= 1");
  LineGraph lg = linegraph(d);
  EngineConfig inner = cfg;
  inner.minimize_hitting_sets = false;
  Certificate vc = theorem1_certify(lg.graph, k, inner);
  EdgeCertificate ec;
  ec.kind = vc.kind;
  ec.bound = vc.bound;
  ec.provenance = prefixed({"corollary2"}, vc.provenance);
  auto to_walk = [&](const Path& p) {
    std::vector<Vertex> walk{lg.edge_of[static_cast<std::size_t>(p[0])].tail};
    for (Vertex v : p.vertices()) walk.push_back(lg.edge_of[static_cast<std::size_t>(v)].head);
    return shortcut_walk(walk);
  };
  if (vc.kind == CertificateKind::kPacking) {
    for (const Tripod& r : vc.packing) {
      ec.packing.push_back(tripod_from_path_pair(
          d, to_walk(concat(r.branch1, r.tail)), to_walk(concat(r.branch2, r.tail))));
    }
  } else {
    std::vector<Edge> h;
    for (Vertex v : vc.hitting_set) h.push_back(lg.edge_of[static_cast<std::size_t>(v)]);
    if (cfg.minimize_hitting_sets) {
      for (std::size_t i = 0; i < h.size();) {
        std::vector<Edge> trial = h;
        trial.erase(trial.begin() + static_cast<long>(i));
        if (!tripod_exists(delete_edges(d, trial))) {
          h = std::move(trial);
        } else {
          ++i;
        }
      }
      if (h.size() < vc.hitting_set.size()) ec.provenance.push_back("minimized");
    }
    ec.hitting_set = std::move(h);
  }
  if (auto v = verify_edge_certificate(d, k, ec); !v) {
    throw SoundnessError("corollary2 produced an invalid certificate: " + v.reason());
  }
  return ec;
}

}  // namespace tripods
