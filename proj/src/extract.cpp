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

#include "tripods/extract.hpp"

#include <algorithm>
#include <string>

#include "tripods/bigint.hpp"
#include "tripods/bounds.hpp"
#include "tripods/errors.hpp"

namespace tripods {

namespace {

void check_square(const AdjacencyMatrix& g) {
  for (const auto& row : g) {
    if (row.size() != g.size()) {
      throw PreconditionError("adjacency matrix is not square");
    }
  }
}

RamseyResult ramsey_rec(const AdjacencyMatrix& g,
                        const std::vector<std::size_t>& y, std::size_t a,
                        std::size_t b) {
  if (a <= 1) return {true, {y.front()}};
  const std::size_t v = y.front();
  std::vector<std::size_t> near, far;
  for (std::size_t i = 1; i < y.size(); ++i) {
    (g[v][y[i]] ? near : far).push_back(y[i]);
  }
  if (BigInt(near.size()) >= ramsey_bound(a - 1, b)) {
    RamseyResult r = ramsey_rec(g, near, a - 1, b);
    if (r.clique) r.vertices.insert(r.vertices.begin(), v);
    return r;
  }
  if (b <= 1) return {false, {v}};
  RamseyResult r = ramsey_rec(g, far, a, b - 1);
  if (!r.clique) r.vertices.insert(r.vertices.begin(), v);
  return r;
}

std::vector<std::size_t> transitive_rec(const AdjacencyMatrix& t,
                                        const std::vector<std::size_t>& y,
                                        std::size_t c) {
  if (c == 0) return {};
  const std::size_t v = y.front();
  if (c == 1) return {v};
  std::vector<std::size_t> out, in;
  for (std::size_t i = 1; i < y.size(); ++i) {
    (t[v][y[i]] ? out : in).push_back(y[i]);
  }
  if (out.size() >= in.size()) {
    auto rest = transitive_rec(t, out, c - 1);
    rest.insert(rest.begin(), v);
    return rest;
  }
  auto rest = transitive_rec(t, in, c - 1);
  rest.push_back(v);
  return rest;
}

}  // namespace

RamseyResult ramsey_extract(const AdjacencyMatrix& g, std::size_t a,
                            std::size_t b) {
  check_square(g);
  if (a < 1 || b < 1) throw PreconditionError("Ramsey sizes must be >= 1");
  const BigInt needed = ramsey_bound(a, b);
  if (BigInt(g.size()) < needed) {
    throw PreconditionError("Ramsey extraction needs " + needed.str() +
                            " vertices, got " + std::to_string(g.size()));
  }
  for (std::size_t i = 0; i < g.size(); ++i) {
    if (g[i][i]) throw PreconditionError("adjacency matrix has a loop");
    for (std::size_t j = 0; j < i; ++j) {
      if (g[i][j] != g[j][i]) {
        throw PreconditionError("adjacency matrix is not symmetric");
      }
    }
  }
  std::vector<std::size_t> all(g.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  RamseyResult r = ramsey_rec(g, all, a, b);
  if (r.vertices.size() != (r.clique ? a : b)) {
    throw SoundnessError("Ramsey extraction returned the wrong size");
  }
  for (std::size_t i = 0; i < r.vertices.size(); ++i) {
    for (std::size_t j = i + 1; j < r.vertices.size(); ++j) {
      if (static_cast<bool>(g[r.vertices[i]][r.vertices[j]]) != r.clique) {
        throw SoundnessError("Ramsey extraction output is not homogeneous");
      }
    }
  }
  return r;
}

std::vector<std::size_t> transitive_extract(const AdjacencyMatrix& t,
                                            std::size_t c) {
  check_square(t);
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) {
      if (!t[i][j] && !t[j][i]) {
        throw PreconditionError("not semi-complete: vertices " +
                                std::to_string(i) + " and " +
                                std::to_string(j) + " are not adjacent");
      }
    }
  }
  if (c >= 1) {
    const BigInt needed = transitive_bound(c);
    if (BigInt(t.size()) < needed) {
      throw PreconditionError("transitive extraction needs " + needed.str() +
                              " vertices, got " + std::to_string(t.size()));
    }
  }
  std::vector<std::size_t> all(t.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  auto order = transitive_rec(t, all, c);
  if (order.size() != c) {
    throw SoundnessError("transitive extraction returned the wrong size");
  }
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      if (!t[order[i]][order[j]]) {
        throw SoundnessError("transitive extraction output has a back edge");
      }
    }
  }
  return order;
}

}  // namespace tripods
