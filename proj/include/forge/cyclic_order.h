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

#ifndef FORGE_CYCLIC_ORDER_H_
#define FORGE_CYCLIC_ORDER_H_

#include <array>
#include <set>
#include <span>
#include <vector>

namespace forge {

// An ordered triple [a, b, c] of a ternary relation.
using Triple = std::array<int, 3>;

// Finite linear order: items listed from least to greatest.
class LinearOrder {
 public:
  // Throws kInvalidArgument on repeated items.
  explicit LinearOrder(std::vector<int> items);
  const std::vector<int>& items() const { return items_; }
  int size() const { return static_cast<int>(items_.size()); }

 private:
  std::vector<int> items_;
};

// Which way a canonical sequence turns: kAscending when the successor of the
// least item is smaller than its predecessor would suggest otherwise.
enum class Sense { kAscending, kDescending };

// A cyclic order on a finite set, stored as the circular sequence rotated so
// the least item comes first. Orders on at most two items carry no triples.
class CyclicOrder {
 public:
  CyclicOrder() = default;
  // Throws kInvalidArgument on repeated items.
  static CyclicOrder FromSequence(std::vector<int> sequence);

  const std::vector<int>& items() const { return items_; }
  int size() const { return static_cast<int>(items_.size()); }
  bool Contains(int item) const;
  // Position of `item` in the canonical sequence, or -1.
  int PositionOf(int item) const;

  // [a, b, c]: a, b, c distinct members met in this order going around.
  bool Holds(int a, int b, int c) const;
  std::set<Triple> Triples() const;
  CyclicOrder Reversed() const;
  // kAscending when items()[1] < items().back(); orders on fewer than three
  // items are kAscending.
  Sense sense() const;

  friend bool operator==(const CyclicOrder&, const CyclicOrder&) = default;

 private:
  std::vector<int> items_;
};

// Checks asymmetry, cyclicity, transitivity and totality of `triples` over
// `items` (in that order) and returns the realizing circular sequence.
// Throws the matching k*Violation with a witness triple, or
// kInvalidArgument when a triple leaves `items`.
CyclicOrder ValidateCyclic(std::span<const int> items,
                           const std::set<Triple>& triples);

// Order inherited on `subset`. Throws kNotASubset.
CyclicOrder RestrictCyclic(const CyclicOrder& order,
                           std::span<const int> subset);

// The successor n(e). Throws kSingletonOrder or kNotASubset.
int ClockwiseNext(const CyclicOrder& order, int item);

// Component of the circle left after removing a nonempty selection: the
// items strictly between `anchor` and its successor within the selection.
struct Arc {
  int anchor = 0;
  std::vector<int> interval;
  friend bool operator==(const Arc&, const Arc&) = default;
};

// One arc per selected item, listed in circular order starting from the
// least selected item. Throws kEmptySelection or kNotASubset.
std::vector<Arc> ArcComponents(const CyclicOrder& order,
                               std::span<const int> selection);

// Finite model of the path built from initial segments of a linear order:
// vertex i is the segment of the first i items, and edge i joins vertex i
// to vertex i + 1 and carries items()[i].
struct PathModel {
  std::vector<std::vector<int>> segments;
  struct Edge {
    int item = 0;
    int from = 0;
    int to = 0;
  };
  std::vector<Edge> edges;

  // Whether deleting the edge carrying `item` separates the empty segment
  // from the full one.
  bool Separates(int item) const;
};

PathModel LinearOrderPath(const LinearOrder& order);

}  // namespace forge

#endif  // FORGE_CYCLIC_ORDER_H_
