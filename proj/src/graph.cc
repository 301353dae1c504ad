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

#include "forge/graph.h"

#include <algorithm>
#include <deque>
#include <numeric>

#include "forge/error.h"

namespace forge {
namespace {

class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int Find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  bool Union(int a, int b) {
    a = Find(a);
    b = Find(b);
    if (a == b) return false;
    parent_[std::max(a, b)] = std::min(a, b);
    return true;
  }

 private:
  std::vector<int> parent_;
};

// Every subset of edges in increasing mask order, tested by `keep`.
template <typename Predicate>
std::vector<ElementSet> ScanEdgeSubsets(const Multigraph& g, Predicate keep) {
  std::vector<ElementSet> out;
  const std::uint64_t limit = std::uint64_t{1} << g.edge_count();
  for (std::uint64_t bits = 1; bits < limit; ++bits) {
    const ElementSet x(static_cast<std::uint32_t>(bits));
    if (keep(x)) out.push_back(x);
  }
  std::sort(out.begin(), out.end(), CanonicalLess);
  return out;
}

}  // namespace

Multigraph Multigraph::Build(
    std::vector<std::string> vertices,
    const std::vector<std::array<std::string, 3>>& edges) {
  if (static_cast<int>(edges.size()) > kMaxGroundSize) {
    throw Error(ErrorKind::kGroundCapExceeded,
                std::to_string(edges.size()) + " edges exceed the limit of " +
                    std::to_string(kMaxGroundSize));
  }
  Multigraph g;
  g.vertices_ = std::move(vertices);
  {
    std::vector<std::string> sorted = g.vertices_;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
      throw Error(ErrorKind::kDuplicateLabel, "vertex '" + *dup + "'");
    }
  }
  auto vertex = [&](const std::string& label) {
    if (auto id = g.FindVertex(label)) return *id;
    g.vertices_.push_back(label);
    return g.vertex_count() - 1;
  };
  for (const auto& [label, tail, head] : edges) {
    const int t = vertex(tail);
    const int h = vertex(head);
    g.edges_.push_back({label, t, h});
  }
  std::sort(
      g.edges_.begin(), g.edges_.end(),
      [](const GraphEdge& a, const GraphEdge& b) { return a.label < b.label; });
  for (int i = 1; i < g.edge_count(); ++i) {
    if (g.edges_[i].label == g.edges_[i - 1].label) {
      throw Error(ErrorKind::kDuplicateLabel,
                  "edge '" + g.edges_[i].label + "'");
    }
  }
  return g;
}

std::vector<std::string> Multigraph::EdgeLabels() const {
  std::vector<std::string> out;
  for (const GraphEdge& e : edges_) out.push_back(e.label);
  return out;
}

std::optional<int> Multigraph::FindVertex(const std::string& label) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), label);
  if (it == vertices_.end()) return std::nullopt;
  return static_cast<int>(it - vertices_.begin());
}

std::optional<int> Multigraph::FindEdge(const std::string& label) const {
  auto it = std::lower_bound(
      edges_.begin(), edges_.end(), label,
      [](const GraphEdge& e, const std::string& l) { return e.label < l; });
  if (it == edges_.end() || it->label != label) return std::nullopt;
  return static_cast<int>(it - edges_.begin());
}

std::vector<int> Multigraph::ComponentsOf(ElementSet edges) const {
  UnionFind uf(vertex_count());
  for (ElementId e : edges) uf.Union(edges_[e].tail, edges_[e].head);
  std::vector<int> root_index(vertex_count(), -1);
  std::vector<int> component(vertex_count());
  int next = 0;
  for (int v = 0; v < vertex_count(); ++v) {
    const int root = uf.Find(v);
    if (root_index[root] < 0) root_index[root] = next++;
    component[v] = root_index[root];
  }
  return component;
}

int Multigraph::ComponentCount(ElementSet edges) const {
  const std::vector<int> component = ComponentsOf(edges);
  return component.empty()
             ? 0
             : *std::max_element(component.begin(), component.end()) + 1;
}

std::vector<ElementSet> Cycles(const Multigraph& g) {
  std::vector<int> degree(g.vertex_count());
  return ScanEdgeSubsets(g, [&](ElementSet x) {
    std::fill(degree.begin(), degree.end(), 0);
    for (ElementId e : x) {
      ++degree[g.edge(e).tail];
      ++degree[g.edge(e).head];
    }
    int touched = 0;
    for (int d : degree) {
      if (d != 0 && d != 2) return false;
      if (d == 2) ++touched;
    }
    // Even degrees of 2 everywhere; one cycle iff the touched vertices end
    // up in a single class.
    UnionFind uf(g.vertex_count());
    int merges = 0;
    for (ElementId e : x) merges += uf.Union(g.edge(e).tail, g.edge(e).head);
    return merges == touched - 1;
  });
}

std::vector<ElementSet> Bonds(const Multigraph& g) {
  const int base_components = g.ComponentCount(g.AllEdges());
  return ScanEdgeSubsets(g, [&](ElementSet x) {
    const std::vector<int> component = g.ComponentsOf(g.AllEdges() - x);
    for (ElementId e : x) {
      if (component[g.edge(e).tail] == component[g.edge(e).head]) {
        return false;
      }
    }
    const int count = *std::max_element(component.begin(), component.end()) + 1;
    return count == base_components + 1;
  });
}

Matroid CycleMatroid(const Multigraph& g, const MatroidOptions& options) {
  if (g.edge_count() > options.ground_cap) {
    throw Error(ErrorKind::kGroundCapExceeded,
                std::to_string(g.edge_count()) + " edges exceed the cap of " +
                    std::to_string(options.ground_cap));
  }
  return Matroid::FromCircuits(g.EdgeLabels(), Cycles(g), Validation::kTrusted,
                               options);
}

CycleTraversal DefaultTraversal(const Multigraph& g, ElementSet cycle) {
  CycleTraversal walk;
  if (cycle.empty()) return walk;
  const int first = cycle.First();
  walk.start_vertex = g.edge(first).tail;
  walk.edges.push_back(first);
  ElementSet rest = cycle.Without(first);
  int at = g.edge(first).head;
  while (!rest.empty()) {
    int next = -1;
    for (ElementId e : rest) {
      if (g.edge(e).tail == at || g.edge(e).head == at) {
        next = e;
        break;
      }
    }
    if (next < 0) {
      throw Error(ErrorKind::kInconsistentTraversal, "edge set is not a cycle");
    }
    walk.edges.push_back(next);
    rest.Erase(next);
    at = g.edge(next).Other(at);
  }
  return walk;
}

std::vector<int> TraversalSigns(const Multigraph& g, ElementSet cycle,
                                const CycleTraversal& walk) {
  std::vector<int> signs(g.edge_count(), 0);
  ElementSet seen;
  if (walk.start_vertex < 0 || walk.start_vertex >= g.vertex_count()) {
    throw Error(ErrorKind::kInconsistentTraversal, "start vertex unknown");
  }
  int at = walk.start_vertex;
  for (int e : walk.edges) {
    if (e < 0 || e >= g.edge_count() || !cycle.Contains(e) ||
        seen.Contains(e)) {
      throw Error(ErrorKind::kInconsistentTraversal,
                  "walk leaves the cycle or repeats an edge");
    }
    const GraphEdge& edge = g.edge(e);
    if (edge.tail == at) {
      signs[e] = 1;
      at = edge.head;
    } else if (edge.head == at) {
      signs[e] = -1;
      at = edge.tail;
    } else {
      throw Error(ErrorKind::kInconsistentTraversal,
                  "edge '" + edge.label + "' does not continue the walk");
    }
    seen.Insert(e);
  }
  if (seen != cycle || at != walk.start_vertex) {
    throw Error(ErrorKind::kInconsistentTraversal,
                "walk is not closed or misses cycle edges");
  }
  return signs;
}

CyclicOrder TraversalOrder(const CycleTraversal& walk) {
  return CyclicOrder::FromSequence(walk.edges);
}

BondSides DefaultBondSides(const Multigraph& g, ElementSet bond) {
  BondSides sides;
  sides.side.assign(g.vertex_count(), 1);
  if (bond.empty()) return sides;
  const std::vector<int> component = g.ComponentsOf(g.AllEdges() - bond);
  const int u = component[g.edge(bond.First()).tail];
  for (int v = 0; v < g.vertex_count(); ++v) {
    if (component[v] == u) sides.side[v] = -1;
  }
  return sides;
}

void CheckBondSides(const Multigraph& g, ElementSet bond,
                    const BondSides& sides) {
  if (static_cast<int>(sides.side.size()) != g.vertex_count()) {
    throw Error(ErrorKind::kInconsistentBondSides,
                "side labeling does not cover every vertex");
  }
  for (int e = 0; e < g.edge_count(); ++e) {
    const GraphEdge& edge = g.edge(e);
    const bool crosses = sides.side[edge.tail] != sides.side[edge.head];
    if (crosses != bond.Contains(e)) {
      throw Error(ErrorKind::kInconsistentBondSides,
                  "edge '" + edge.label + "' " +
                      (crosses ? "crosses but is not in the bond"
                               : "is in the bond but does not cross"));
    }
  }
}

std::optional<std::vector<int>> TreePath(const Multigraph& g, ElementSet forest,
                                         int u, int v) {
  std::vector<int> via(g.vertex_count(), -2);
  via[u] = -1;
  std::deque<int> queue{u};
  while (!queue.empty()) {
    const int at = queue.front();
    queue.pop_front();
    for (ElementId e : forest) {
      const GraphEdge& edge = g.edge(e);
      if (edge.tail != at && edge.head != at) continue;
      const int next = edge.Other(at);
      if (via[next] != -2) continue;
      via[next] = e;
      queue.push_back(next);
    }
  }
  if (via[v] == -2) return std::nullopt;
  std::vector<int> path;
  for (int at = v; at != u; at = g.edge(via[at]).Other(at)) {
    path.push_back(via[at]);
  }
  std::reverse(path.begin(), path.end());
  return path;
}

}  // namespace forge
