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

// Exact bound arithmetic: Ramsey and transitive-tournament numbers, the
// configurable g5, and the derived g10, g9, g4 and f1.

#ifndef TRIPODS_BOUNDS_HPP_
#define TRIPODS_BOUNDS_HPP_

#include <memory>
#include <string>
#include <vector>

#include "tripods/bigint.hpp"

namespace tripods {

// C(a + b - 2, a - 1) for a, b >= 1.
BigInt ramsey_bound(const BigInt& a, const BigInt& b);
// 2^(c - 1) for c >= 1.
BigInt transitive_bound(const BigInt& c);
BigInt binomial(const BigInt& n, const BigInt& r);

// User-supplied g5, either an expression in t over integers with + - * ^
// and parentheses ("t", "3*t", "t^2+1"), or a comma-separated table of
// values for t = 1, 2, ... ("1,3,6"). Values must be positive.
class G5 {
 public:
  G5();  // g5(t) = t
  static G5 parse(const std::string& text);

  BigInt operator()(long t) const;
  const std::string& text() const { return text_; }

  friend bool operator==(const G5& a, const G5& b) {
    return a.text_ == b.text_;
  }

  // Expression tree node; public for the parser.
  struct Node;

 private:
  std::string text_;
  std::shared_ptr<const Node> expr_;
  std::vector<BigInt> table_;
};

enum class Route { kRamsey, kIterative };

std::string to_string(Route route);
Route parse_route(const std::string& text);

class BoundTable {
 public:
  BoundTable(G5 g5 = G5(), Route route = Route::kRamsey)
      : g5_(std::move(g5)), route_(route) {}

  const G5& g5_config() const { return g5_; }
  Route route() const { return route_; }

  BigInt g5(long k) const;
  // l (l + p + p l) with p = l^2.
  BigInt g10(const BigInt& l) const;
  // g10 applied `times` times to x.
  BigInt g10_iterate(BigInt x, long times) const;
  // g10 applied k times to g5(k).
  BigInt g9(long k) const;
  BigInt g4_ramsey(long k) const;
  BigInt g4_iter(long k) const;
  // g4 of the active route.
  BigInt g4(long k) const;
  // f1(1) = 0, f1(k) = 2 f1(k - 1) + 2 g4(k).
  BigInt f1(long k) const;

 private:
  G5 g5_;
  Route route_;
};

}  // namespace tripods

#endif  // TRIPODS_BOUNDS_HPP_
