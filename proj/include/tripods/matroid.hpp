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

// Independence oracles, gammoids, and matroid intersection with a tight
// dual certificate.

#ifndef TRIPODS_MATROID_HPP_
#define TRIPODS_MATROID_HPP_

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "tripods/digraph.hpp"

namespace tripods {

// Matroid on the ground set {0, ..., ground_size() - 1}.
class IndependenceOracle {
 public:
  virtual ~IndependenceOracle() = default;
  virtual std::size_t ground_size() const = 0;
  // `elements` is sorted and duplicate free.
  virtual bool is_independent(std::span<const std::size_t> elements) const = 0;
};

// Oracle backed by an arbitrary predicate, for partition matroids and tests.
class PredicateOracle : public IndependenceOracle {
 public:
  using Predicate = std::function<bool(std::span<const std::size_t>)>;

  PredicateOracle(std::size_t n, Predicate predicate)
      : n_(n), predicate_(std::move(predicate)) {}

  std::size_t ground_size() const override { return n_; }
  bool is_independent(std::span<const std::size_t> elements) const override {
    return predicate_(elements);
  }

 private:
  std::size_t n_;
  Predicate predicate_;
};

// Gammoid on the sinks of `host`: a sink set is independent when it is
// linkable from `source_side`. Element i is the i-th smallest sink.
class GammoidOracle : public IndependenceOracle {
 public:
  // Throws PreconditionError unless source_side is a set of sources.
  GammoidOracle(MigrationDigraph host, VertexSet source_side);

  std::size_t ground_size() const override { return ground_.size(); }
  bool is_independent(std::span<const std::size_t> elements) const override;

  // Size of a largest independent subset, from a single flow computation.
  std::size_t rank(std::span<const std::size_t> elements) const;

  const std::vector<Vertex>& ground() const { return ground_; }
  VertexSet to_vertices(std::span<const std::size_t> elements) const;
  const VertexSet& source_side() const { return source_side_; }

 private:
  MigrationDigraph host_;
  VertexSet source_side_;
  std::vector<Vertex> ground_;
};

// Largest independent subset size, built greedily.
std::size_t greedy_rank(const IndependenceOracle& m,
                        std::span<const std::size_t> elements);

struct IntersectionCertificate {
  std::vector<std::size_t> common;
  // Partition of the ground set with rank_first = rk1(first_side) and
  // rank_second = rk2(second_side) summing to |common|.
  std::vector<std::size_t> first_side;
  std::vector<std::size_t> second_side;
  std::size_t rank_first = 0;
  std::size_t rank_second = 0;
};

// Maximum common independent set by shortest augmenting paths in the
// exchange graph. Both the set and the dual partition are checked before
// return; an oracle contradicting the axioms raises MatroidAxiomError.
IntersectionCertificate matroid_intersection(const IndependenceOracle& m1,
                                             const IndependenceOracle& m2);

}  // namespace tripods

#endif  // TRIPODS_MATROID_HPP_
