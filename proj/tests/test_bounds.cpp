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

#include <cstdint>
#include <vector>

#include "doctest.h"
#include "tripods/bounds.hpp"
#include "tripods/errors.hpp"

namespace tripods {
namespace {

// Pascal recurrence R(a, b) = R(a - 1, b) + R(a, b - 1), R(1, b) = R(a, 1) = 1.
std::vector<std::vector<std::uint64_t>> pascal_ramsey(int n) {
  std::vector<std::vector<std::uint64_t>> r(n + 1, std::vector<std::uint64_t>(n + 1, 1));
  for (int a = 2; a <= n; ++a) {
    for (int b = 2; b <= n; ++b) r[a][b] = r[a - 1][b] + r[a][b - 1];
  }
  return r;
}

TEST_CASE("ramsey and transitive bounds") {
  auto r = pascal_ramsey(8);
  for (int a = 1; a <= 8; ++a) {
    for (int b = 1; b <= 8; ++b) {
      CHECK(ramsey_bound(a, b) == BigInt(r[a][b]));
      CHECK(ramsey_bound(a, b) == ramsey_bound(b, a));
    }
  }
  for (int c = 1; c <= 8; ++c) {
    CHECK(transitive_bound(c) == BigInt(std::uint64_t{1} << (c - 1)));
  }
  CHECK(ramsey_bound(3, 3) == 6);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(3, 5) == 0);
  CHECK_THROWS_AS(ramsey_bound(0, 2), PreconditionError);
  CHECK_THROWS_AS(transitive_bound(0), PreconditionError);
}

TEST_CASE("g5 parsing") {
  CHECK(G5()(4) == 4);
  CHECK(G5::parse("3*t")(5) == 15);
  CHECK(G5::parse("t^2+1")(3) == 10);
  CHECK(G5::parse("(t+1)*(t-1)+2")(4) == 17);
  CHECK(G5::parse("1,3,6")(3) == 6);
  CHECK_THROWS_AS(G5::parse("1,3,6")(4), PreconditionError);
  CHECK_THROWS_AS(G5::parse("t+"), PreconditionError);
  CHECK_THROWS_AS(G5::parse("x"), PreconditionError);
  CHECK_THROWS_AS(G5::parse("t-5")(1), PreconditionError);
  CHECK_THROWS_AS(G5()(0), PreconditionError);
  CHECK(parse_route(to_string(Route::kIterative)) == Route::kIterative);
  CHECK(parse_route(to_string(Route::kRamsey)) == Route::kRamsey);
  CHECK_THROWS_AS(parse_route("fast"), PreconditionError);
}

TEST_CASE("derived bounds") {
  BoundTable ramsey;
  BoundTable iter(G5(), Route::kIterative);
  CHECK(ramsey.g10(1) == 3);
  CHECK(ramsey.g10(2) == 28);
  CHECK(ramsey.g10_iterate(2, 0) == 2);
  CHECK(ramsey.g10_iterate(2, 1) == 28);
  CHECK(ramsey.g9(1) == 3);
  CHECK(ramsey.g9(2) == ramsey.g10(ramsey.g10(2)));
  CHECK(ramsey.g4_ramsey(1) == 1);
  CHECK(ramsey.g4_ramsey(2) == ramsey_bound(transitive_bound(4), 2));
  CHECK(ramsey.g4_ramsey(2) == 8);
  CHECK(ramsey.g4_ramsey(3) == 528);
  CHECK(iter.g4_iter(1) == 5);
  CHECK(iter.g4_iter(2) == 2 * (2 * iter.g9(2) - 1));
  for (const BoundTable* t : {&ramsey, &iter}) {
    CHECK(t->f1(1) == 0);
    for (long k = 2; k <= 5; ++k) {
      CHECK(t->f1(k) == 2 * t->f1(k - 1) + 2 * t->g4(k));
    }
  }
  CHECK(ramsey.f1(2) == 16);
  CHECK(iter.f1(2) == 2 * iter.g4_iter(2));
  CHECK_THROWS_AS(ramsey.f1(0), PreconditionError);
}

}  // namespace
}  // namespace tripods
