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

#include "forge/cyclic_order.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "forge/error.h"

namespace forge {
namespace {

std::string Show(const Triple& t) {
  return "[" + std::to_string(t[0]) + "," + std::to_string(t[1]) + "," +
         std::to_string(t[2]) + "]";
}

void RequireDistinct(std::vector<int> items) {
  std::sort(items.begin(), items.end());
  if (std::adjacent_find(items.begin(), items.end()) != items.end()) {
    throw Error(ErrorKind::kInvalidArgument, "repeated item in order");
  }
}

}  // namespace

LinearOrder::LinearOrder(std::vector<int> items) : items_(std::move(items)) {
  RequireDistinct(items_);
}

CyclicOrder CyclicOrder::FromSequence(std::vector<int> sequence) {
  RequireDistinct(sequence);
  CyclicOrder order;
  if (!sequence.empty()) {
    auto least = std::min_element(sequence.begin(), sequence.end());
    std::rotate(sequence.begin(), least, sequence.end());
  }
  order.items_ = std::move(sequence);
  return order;
}

bool CyclicOrder::Contains(int item) const { return PositionOf(item) >= 0; }

int CyclicOrder::PositionOf(int item) const {
  auto it = std::find(items_.begin(), items_.end(), item);
  return it == items_.end() ? -1 : static_cast<int>(it - items_.begin());
}

bool CyclicOrder::Holds(int a, int b, int c) const {
  const int pa = PositionOf(a);
  const int pb = PositionOf(b);
  const int pc = PositionOf(c);
  if (pa < 0 || pb < 0 || pc < 0 || pa == pb || pb == pc || pa == pc) {
    return false;
  }
  const int n = size();
  // Distances measured clockwise from a.
  return (pb - pa + n) % n < (pc - pa + n) % n;
}

std::set<Triple> CyclicOrder::Triples() const {
  std::set<Triple> out;
  for (int a : items_) {
    for (int b : items_) {
      for (int c : items_) {
        if (Holds(a, b, c)) out.insert({a, b, c});
      }
    }
  }
  return out;
}

CyclicOrder CyclicOrder::Reversed() const {
  return FromSequence(std::vector<int>(items_.rbegin(), items_.rend()));
}

Sense CyclicOrder::sense() const {
  if (items_.size() < 3) return Sense::kAscending;
  return items_[1] < items_.back() ? Sense::kAscending : Sense::kDescending;
}

CyclicOrder ValidateCyclic(std::span<const int> items,
                           const std::set<Triple>& triples) {
  std::vector<int> ground(items.begin(), items.end());
  RequireDistinct(ground);
  auto known = [&](int x) {
    return std::find(ground.begin(), ground.end(), x) != ground.end();
  };
  for (const Triple& t : triples) {
    if (!known(t[0]) || !known(t[1]) || !known(t[2])) {
      throw Error(ErrorKind::kInvalidArgument,
                  Show(t) + " mentions an item outside the set");
    }
  }
  for (const Triple& t : triples) {
    const Triple reversed{t[2], t[1], t[0]};
    if (triples.contains(reversed)) {
      throw Error(ErrorKind::kAsymmetryViolation,
                  Show(t) + " and " + Show(reversed) + " both hold");
    }
  }
  for (const Triple& t : triples) {
    const Triple rotated{t[1], t[2], t[0]};
    if (!triples.contains(rotated)) {
      throw Error(ErrorKind::kCyclicityViolation,
                  Show(t) + " holds but " + Show(rotated) + " does not");
    }
  }
  for (const Triple& t : triples) {
    for (const Triple& u : triples) {
      if (u[0] != t[0] || u[1] != t[2]) continue;
      const Triple implied{t[0], t[1], u[2]};
      if (!triples.contains(implied)) {
        throw Error(ErrorKind::kTransitivityViolation,
                    Show(t) + " and " + Show(u) + " hold but " + Show(implied) +
                        " does not");
      }
    }
  }
  for (int a : ground) {
    for (int b : ground) {
      for (int c : ground) {
        if (a == b || b == c || a == c) continue;
        if (!triples.contains({a, b, c}) && !triples.contains({c, b, a})) {
          throw Error(ErrorKind::kTotalityViolation,
                      "neither " + Show({a, b, c}) + " nor " + Show({c, b, a}) +
                          " holds");
        }
      }
    }
  }

  if (ground.size() < 3) {
    std::sort(ground.begin(), ground.end());
    return CyclicOrder::FromSequence(ground);
  }
  // Walk successors from the least item: n(x) is the y with [x, y, z] for
  // every other z.
  const int start = *std::min_element(ground.begin(), ground.end());
  std::vector<int> sequence{start};
  int current = start;
  while (static_cast<int>(sequence.size()) < static_cast<int>(ground.size())) {
    int next = -1;
    for (int y : ground) {
      if (y == current) continue;
      bool all = true;
      for (int z : ground) {
        if (z == current || z == y) continue;
        if (!triples.contains({current, y, z})) {
          all = false;
          break;
        }
      }
      if (all) {
        next = y;
        break;
      }
    }
    sequence.push_back(next);
    current = next;
  }
  return CyclicOrder::FromSequence(sequence);
}

CyclicOrder RestrictCyclic(const CyclicOrder& order,
                           std::span<const int> subset) {
  for (int x : subset) {
    if (!order.Contains(x)) {
      throw Error(ErrorKind::kNotASubset,
                  "item " + std::to_string(x) + " is not in the order");
    }
  }
  std::vector<int> kept;
  for (int x : order.items()) {
    if (std::find(subset.begin(), subset.end(), x) != subset.end()) {
      kept.push_back(x);
    }
  }
  return CyclicOrder::FromSequence(kept);
}

int ClockwiseNext(const CyclicOrder& order, int item) {
  const int p = order.PositionOf(item);
  if (p < 0) {
    throw Error(ErrorKind::kNotASubset,
                "item " + std::to_string(item) + " is not in the order");
  }
  if (order.size() < 2) {
    throw Error(ErrorKind::kSingletonOrder, "no successor in a 1-item order");
  }
  return order.items()[(p + 1) % order.size()];
}

std::vector<Arc> ArcComponents(const CyclicOrder& order,
                               std::span<const int> selection) {
  if (selection.empty()) {
    throw Error(ErrorKind::kEmptySelection, "nothing removed from the circle");
  }
  const CyclicOrder selected = RestrictCyclic(order, selection);
  const int n = order.size();
  std::vector<Arc> arcs;
  for (int anchor : selected.items()) {
    Arc arc;
    arc.anchor = anchor;
    const int stop =
        selected.size() == 1 ? anchor : ClockwiseNext(selected, anchor);
    for (int p = (order.PositionOf(anchor) + 1) % n; order.items()[p] != stop;
         p = (p + 1) % n) {
      arc.interval.push_back(order.items()[p]);
    }
    arcs.push_back(std::move(arc));
  }
  return arcs;
}

bool PathModel::Separates(int item) const {
  const int vertices = static_cast<int>(segments.size());
  std::vector<int> parent(vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const Edge& e : edges) {
    if (e.item != item) parent[find(e.from)] = find(e.to);
  }
  return find(0) != find(vertices - 1);
}

PathModel LinearOrderPath(const LinearOrder& order) {
  PathModel path;
  std::vector<int> segment;
  path.segments.push_back(segment);
  for (int i = 0; i < order.size(); ++i) {
    segment.push_back(order.items()[i]);
    path.segments.push_back(segment);
    path.edges.push_back({order.items()[i], i, i + 1});
  }
  return path;
}

}  // namespace forge
