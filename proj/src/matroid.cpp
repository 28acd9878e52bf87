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

#include "tripods/matroid.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "tripods/errors.hpp"
#include "tripods/menger.hpp"

namespace tripods {

namespace {

std::vector<std::size_t> with(std::vector<std::size_t> set, std::size_t x) {
  set.insert(std::lower_bound(set.begin(), set.end(), x), x);
  return set;
}

std::vector<std::size_t> exchange(std::vector<std::size_t> set, std::size_t out,
                                  std::size_t in) {
  set.erase(std::lower_bound(set.begin(), set.end(), out));
  return with(std::move(set), in);
}

}  // namespace

GammoidOracle::GammoidOracle(MigrationDigraph host, VertexSet source_side)
    : host_(std::move(host)), source_side_(std::move(source_side)) {
  host_.validate();
  for (Vertex v : source_side_) {
    if (!host_.is_source(v)) {
      throw PreconditionError("gammoid source side contains non-source " +
                              std::to_string(v));
    }
  }
  ground_.assign(host_.sinks.begin(), host_.sinks.end());
}

VertexSet GammoidOracle::to_vertices(
    std::span<const std::size_t> elements) const {
  VertexSet out;
  for (std::size_t e : elements) {
    if (e >= ground_.size()) throw PreconditionError("element out of range");
    out.insert(ground_[e]);
  }
  return out;
}

bool GammoidOracle::is_independent(
    std::span<const std::size_t> elements) const {
  return is_linkable(host_, source_side_, to_vertices(elements));
}

std::size_t GammoidOracle::rank(std::span<const std::size_t> elements) const {
  VertexSet y = to_vertices(elements);
  if (y.empty() || source_side_.empty()) return 0;
  return max_linkage(host_.graph, source_side_, y).value;
}

std::size_t greedy_rank(const IndependenceOracle& m,
                        std::span<const std::size_t> elements) {
  std::vector<std::size_t> basis;
  for (std::size_t e : elements) {
    auto grown = with(basis, e);
    if (m.is_independent(grown)) basis = std::move(grown);
  }
  return basis.size();
}

IntersectionCertificate matroid_intersection(const IndependenceOracle& m1,
                                             const IndependenceOracle& m2) {
  if (m1.ground_size() != m2.ground_size()) {
    throw PreconditionError("matroids have different ground sets");
  }
  const std::size_t n = m1.ground_size();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> current;
  std::vector<char> in_current(n, 0);

  for (;;) {
    // Exchange graph: y -> x when I - y + x is independent in m1, x -> y
    // when it is independent in m2 (y in I, x outside I).
    std::vector<std::vector<std::size_t>> out(n);
    std::vector<char> first(n, 0), second(n, 0);
    for (std::size_t x = 0; x < n; ++x) {
      if (in_current[x]) continue;
      first[x] = m1.is_independent(with(current, x));
      second[x] = m2.is_independent(with(current, x));
      for (std::size_t y : current) {
        auto swapped = exchange(current, y, x);
        if (m1.is_independent(swapped)) out[y].push_back(x);
        if (m2.is_independent(swapped)) out[x].push_back(y);
      }
    }
    for (auto& list : out) std::sort(list.begin(), list.end());

    std::vector<std::size_t> parent(n, kNone);
    std::vector<char> seen(n, 0);
    std::deque<std::size_t> queue;
    for (std::size_t x = 0; x < n; ++x) {
      if (first[x]) {
        seen[x] = 1;
        queue.push_back(x);
      }
    }
    std::size_t target = kNone;
    while (!queue.empty()) {
      std::size_t v = queue.front();
      queue.pop_front();
      if (second[v]) {
        target = v;
        break;
      }
      for (std::size_t w : out[v]) {
        if (!seen[w]) {
          seen[w] = 1;
          parent[w] = v;
          queue.push_back(w);
        }
      }
    }

    if (target == kNone) {
      // Elements that can reach the second matroid's free set.
      std::vector<std::vector<std::size_t>> in(n);
      for (std::size_t v = 0; v < n; ++v) {
        for (std::size_t w : out[v]) in[w].push_back(v);
      }
      std::vector<char> reaches(n, 0);
      std::deque<std::size_t> back;
      for (std::size_t x = 0; x < n; ++x) {
        if (second[x]) {
          reaches[x] = 1;
          back.push_back(x);
        }
      }
      while (!back.empty()) {
        std::size_t v = back.front();
        back.pop_front();
        for (std::size_t w : in[v]) {
          if (!reaches[w]) {
            reaches[w] = 1;
            back.push_back(w);
          }
        }
      }
      IntersectionCertificate cert;
      cert.common = current;
      for (std::size_t x = 0; x < n; ++x) {
        (reaches[x] ? cert.first_side : cert.second_side).push_back(x);
      }
      cert.rank_first = greedy_rank(m1, cert.first_side);
      cert.rank_second = greedy_rank(m2, cert.second_side);
      if (!m1.is_independent(cert.common) || !m2.is_independent(cert.common)) {
        throw MatroidAxiomError("common set is not independent in both");
      }
      if (cert.rank_first + cert.rank_second != cert.common.size()) {
        throw MatroidAxiomError(
            "dual partition is not tight: " + std::to_string(cert.rank_first) +
            " + " + std::to_string(cert.rank_second) +
            " != " + std::to_string(cert.common.size()));
      }
      return cert;
    }

    for (std::size_t v = target; v != kNone; v = parent[v]) {
      in_current[v] = !in_current[v];
    }
    current.clear();
    for (std::size_t x = 0; x < n; ++x) {
      if (in_current[x]) current.push_back(x);
    }
    if (!m1.is_independent(current) || !m2.is_independent(current)) {
      throw MatroidAxiomError("augmentation left the common independent sets");
    }
  }
}

}  // namespace tripods
