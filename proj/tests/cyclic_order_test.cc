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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "forge/cyclic_order.h"

#include <set>
#include <vector>

#include "doctest.h"
#include "forge/error.h"
#include "oracles.h"

namespace forge {
namespace {

// Items a, b, c, ... are 0, 1, 2, ...
std::set<Triple> RotationTriples(const std::vector<int>& circle) {
  std::set<Triple> out;
  const int n = static_cast<int>(circle.size());
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        if (i == j || j == k || i == k) continue;
        // Positions i, j, k in circular order.
        const bool ordered =
            (i < j && j < k) || (j < k && k < i) || (k < i && i < j);
        if (ordered) out.insert({circle[i], circle[j], circle[k]});
      }
    }
  }
  return out;
}

ErrorKind KindOf(auto&& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::kInvalidArgument;
}

TEST_CASE("validate: rotation class of a 3-cycle") {
  const std::vector<int> items{0, 1, 2};
  const CyclicOrder order = ValidateCyclic(items, RotationTriples(items));
  CHECK(order.items() == items);
}

TEST_CASE("validate: both senses asserted") {
  const std::vector<int> items{0, 1, 2};
  std::set<Triple> triples = RotationTriples(items);
  triples.insert({2, 1, 0});
  CHECK(KindOf([&] { ValidateCyclic(items, triples); }) ==
        ErrorKind::kAsymmetryViolation);
}

TEST_CASE("validate: 4-cycle from all rotation-closed triples") {
  const std::vector<int> items{1, 2, 3, 4};
  const std::set<Triple> triples = RotationTriples(items);
  CHECK(triples.size() == 12);  // half of the 24 ordered triples
  const CyclicOrder order = ValidateCyclic(items, triples);
  CHECK(order.items() == items);
  CHECK(order.Triples() == triples);
}

TEST_CASE("validate: missing and broken triples") {
  const std::vector<int> items{1, 2, 3, 4};
  std::set<Triple> triples = RotationTriples(items);
  triples.erase({1, 2, 3});
  const ErrorKind kind = KindOf([&] { ValidateCyclic(items, triples); });
  CHECK((kind == ErrorKind::kCyclicityViolation ||
         kind == ErrorKind::kTotalityViolation));
}

TEST_CASE("restrict: examples") {
  const CyclicOrder four = CyclicOrder::FromSequence({1, 2, 3, 4});
  const std::vector<int> odd{1, 3};
  CHECK(RestrictCyclic(four, odd).items() == odd);
  const std::vector<int> tail{2, 3, 4};
  CHECK(RestrictCyclic(four, tail).items() == tail);
  const CyclicOrder five = CyclicOrder::FromSequence({0, 1, 2, 3, 4});
  const std::vector<int> pick{0, 2, 3};
  const CyclicOrder sub = RestrictCyclic(five, pick);
  CHECK(sub.items() == pick);
  for (const Triple& t : sub.Triples()) CHECK(five.Holds(t[0], t[1], t[2]));
  const std::vector<int> stray{9};
  CHECK(KindOf([&] { RestrictCyclic(four, stray); }) == ErrorKind::kNotASubset);
}

TEST_CASE("clockwise next: examples") {
  const CyclicOrder abc = CyclicOrder::FromSequence({0, 1, 2});
  CHECK(ClockwiseNext(abc, 0) == 1);
  CHECK(ClockwiseNext(abc, 2) == 0);
  const CyclicOrder four = CyclicOrder::FromSequence({1, 2, 3, 4});
  CHECK(ClockwiseNext(four, 2) == 3);
  for (int f : {1, 4}) CHECK(four.Holds(2, 3, f));
  CHECK(KindOf([] { ClockwiseNext(CyclicOrder::FromSequence({5}), 5); }) ==
        ErrorKind::kSingletonOrder);
}

TEST_CASE("arc components: examples") {
  const CyclicOrder four = CyclicOrder::FromSequence({1, 2, 3, 4});
  const std::vector<int> odd{1, 3};
  CHECK(ArcComponents(four, odd) == std::vector<Arc>{{1, {2}}, {3, {4}}});
  const CyclicOrder abc = CyclicOrder::FromSequence({0, 1, 2});
  const std::vector<int> all{0, 1, 2};
  CHECK(ArcComponents(abc, all) == std::vector<Arc>{{0, {}}, {1, {}}, {2, {}}});
  const CyclicOrder six = CyclicOrder::FromSequence({1, 2, 3, 4, 5, 6});
  const std::vector<int> two{1, 4};
  CHECK(ArcComponents(six, two) == std::vector<Arc>{{1, {2, 3}}, {4, {5, 6}}});
  CHECK(KindOf([&] { ArcComponents(six, std::vector<int>{}); }) ==
        ErrorKind::kEmptySelection);
}

TEST_CASE("canonical rotation and reversal") {
  const CyclicOrder order = CyclicOrder::FromSequence({3, 1, 2});
  CHECK(order.items() == std::vector<int>{1, 2, 3});
  CHECK(order.Reversed().items() == std::vector<int>{1, 3, 2});
  CHECK(oracle::SameCircle(order.items(), order.Reversed().items()));
  CHECK(order.sense() != order.Reversed().sense());
}

TEST_CASE("linear order path: examples") {
  const PathModel one = LinearOrderPath(LinearOrder({0}));
  CHECK(one.segments.size() == 2);
  CHECK(one.edges.size() == 1);
  const PathModel two = LinearOrderPath(LinearOrder({0, 1}));
  CHECK(two.segments == std::vector<std::vector<int>>{{}, {0}, {0, 1}});
  const PathModel three = LinearOrderPath(LinearOrder({1, 2, 3}));
  CHECK(three.segments.size() == 4);
  CHECK(three.edges.size() == 3);
  for (int item : {1, 2, 3}) CHECK(three.Separates(item));
}

}  // namespace
}  // namespace forge
