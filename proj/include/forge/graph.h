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

// Finite multigraphs with labeled, oriented edges. Edges are stored sorted
// by label, so edge index i is element i of the cycle matroid.

#ifndef FORGE_GRAPH_H_
#define FORGE_GRAPH_H_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "forge/cyclic_order.h"
#include "forge/element_set.h"
#include "forge/matroid.h"

namespace forge {

struct GraphEdge {
  std::string label;
  int tail = 0;
  int head = 0;

  bool is_loop() const { return tail == head; }
  int Other(int v) const { return v == tail ? head : tail; }
};

class Multigraph {
 public:
  Multigraph() = default;

  // `edges` holds (label, tail, head) triples naming vertices by label.
  // Vertices keep the order of `vertices`; endpoints not listed there are
  // appended in order of first mention. Throws kDuplicateLabel or
  // kGroundCapExceeded (more edges than an ElementSet holds).
  static Multigraph Build(std::vector<std::string> vertices,
                          const std::vector<std::array<std::string, 3>>& edges);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<GraphEdge>& edges() const { return edges_; }
  const GraphEdge& edge(int id) const { return edges_[id]; }
  ElementSet AllEdges() const { return ElementSet::Range(edge_count()); }
  std::vector<std::string> EdgeLabels() const;

  std::optional<int> FindVertex(const std::string& label) const;
  std::optional<int> FindEdge(const std::string& label) const;

  // Component index of every vertex in the spanning subgraph on `edges`,
  // numbered by least vertex.
  std::vector<int> ComponentsOf(ElementSet edges) const;
  int ComponentCount(ElementSet edges) const;

  friend bool operator==(const Multigraph&, const Multigraph&) = default;

 private:
  std::vector<std::string> vertices_;
  std::vector<GraphEdge> edges_;
};

// Edge sets of the cycles (loops and parallel pairs included), in canonical
// order.
std::vector<ElementSet> Cycles(const Multigraph& g);

// Minimal nonempty edge cuts, in canonical order.
std::vector<ElementSet> Bonds(const Multigraph& g);

Matroid CycleMatroid(const Multigraph& g, const MatroidOptions& options = {});

// A closed walk around a cycle: starts at `start_vertex` and crosses
// `edges` in order.
struct CycleTraversal {
  int start_vertex = 0;
  std::vector<int> edges;
};

// Starts at the tail of the least edge of `cycle` and crosses it first.
CycleTraversal DefaultTraversal(const Multigraph& g, ElementSet cycle);

// Sign of each edge along the walk: +1 where the walk goes tail to head.
// Indexed by edge id, 0 off the cycle. Throws kInconsistentTraversal when
// the walk is not a closed walk crossing each edge of `cycle` once.
std::vector<int> TraversalSigns(const Multigraph& g, ElementSet cycle,
                                const CycleTraversal& walk);

// The cyclic order of the edges met along the walk.
CyclicOrder TraversalOrder(const CycleTraversal& walk);

// Two-sided vertex labeling for a bond: side[v] is -1 on the U shore and +1
// on the V shore.
struct BondSides {
  std::vector<int> side;
};

// U is the component of G - bond holding the tail of the least bond edge;
// every other vertex is on the V shore.
BondSides DefaultBondSides(const Multigraph& g, ElementSet bond);

// Throws kInconsistentBondSides unless exactly the edges of `bond` join
// the two shores.
void CheckBondSides(const Multigraph& g, ElementSet bond,
                    const BondSides& sides);

// Edges of the unique path from u to v in the forest `forest`, in walking
// order, or nullopt when u and v lie in different trees.
std::optional<std::vector<int>> TreePath(const Multigraph& g, ElementSet forest,
                                         int u, int v);

}  // namespace forge

#endif  // FORGE_GRAPH_H_
