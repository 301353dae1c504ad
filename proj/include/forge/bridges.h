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

// Bridges of a circuit o: contract a base s of M/o so that o becomes a
// spanning circuit, realize the result, and study how the remaining
// non-loop elements attach to the cycle of o.

#ifndef FORGE_BRIDGES_H_
#define FORGE_BRIDGES_H_

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "forge/cyclic_order.h"
#include "forge/framework.h"
#include "forge/matroid.h"
#include "forge/realizer.h"

namespace forge {

// Items of the combined circle: elements keep their ids and circle vertex
// i becomes kCircleVertexBase + i.
inline constexpr int kCircleVertexBase = 64;

struct BridgeAttachment {
  ElementId bridge = -1;
  // Circle vertex indices, ascending.
  std::array<int, 2> ends{};
};

// Element ids are those of the original matroid throughout.
struct BridgeDecomposition {
  Matroid original;
  ElementSet circuit;
  ElementSet base_s;       // lexicographically least base of M/o
  Matroid contracted;      // M' = M/s
  RealizedGraph realized;  // realization of M'
  // The cycle of o in the realization: circle vertex i sits between
  // circle_edges[i] and circle_edges[i + 1] (indices mod |o|).
  std::vector<ElementId> circle_edges;
  std::vector<std::string> circle_vertex_names;  // realized vertex labels
  CyclicOrder circle_order;                      // on o
  CyclicOrder circle;  // edges and circle vertices together
  ElementSet bridges;
  ElementSet loops_of_mprime;
  std::vector<BridgeAttachment> attachments;  // ascending bridge id

  const BridgeAttachment& AttachmentOf(ElementId bridge) const;
  // Whether the two ends of `bridge` lie on different arcs between e and f.
  bool Separates(ElementId bridge, ElementId e, ElementId f) const;
};

// Uses `framework` (restricted to M') when given, otherwise searches M'.
// Throws kNotACircuit, kDisconnected, kNotGraphic (no framework for M') or
// kCertificateFailure (attachments disagree with fundamental circuits).
BridgeDecomposition DecomposeBridges(const Matroid& m, ElementSet o,
                                     const GraphFramework* framework = nullptr);

struct SeparatingBridge {
  ElementId bridge = -1;
  // True when the element picked from the fundamental cocircuit of f with
  // respect to s + o - e worked; false when a scan was needed.
  bool from_fundamental_cocircuit = false;
};

// A bridge whose ends separate e from f on the circle. Throws
// kInvalidArgument when e, f are not distinct members of o, and kNoBridge.
SeparatingBridge FindSeparatingBridge(const BridgeDecomposition& d, ElementId e,
                                      ElementId f);

struct PartitionNode {
  int level = 0;
  // Circle vertex indices bounding the arc, in clockwise order.
  int start = 0;
  int end = 0;
  std::vector<ElementId> edges;  // clockwise
  std::vector<int> interior;     // circle vertex indices, clockwise
  int parent = -1;
  std::vector<int> children;
  bool good = true;
  // Levels 0 and 1 carry no goodness condition.
  bool good_by_convention = false;
};

struct PartitionLevel {
  ElementSet bridges;            // I_n
  std::vector<int> attachments;  // J_n, ascending circle vertex indices
  std::vector<int> nodes;        // K_n, indices into PartitionTree::nodes
  // Copies of the final level, kept so every ray reaches nodes whose
  // grandparent is themselves.
  bool repeated = false;
};

struct PartitionTree {
  BridgeDecomposition decomposition;
  ElementId e0 = -1;
  std::vector<PartitionLevel> levels;
  std::vector<PartitionNode> nodes;
  // First level n with I_{n+1} = I_n.
  int stable_level = 0;
};

struct PartitionTreeOptions {
  bool require_three_connected = true;
};

// Builds levels until I_{n+1} = I_n, then two repeated levels. e0 defaults
// to the least bridge. Throws kNotThreeConnected, kNotABridge, kNoBridge
// (no bridges at all) or kCertificateFailure (bridges left uncovered).
PartitionTree BuildPartitionTree(const Matroid& m, ElementSet o,
                                 std::optional<ElementId> e0 = {},
                                 const GraphFramework* framework = nullptr,
                                 const PartitionTreeOptions& options = {});

struct CountabilityCertificate {
  // Node of the partition tree assigned to each element of o, aligned with
  // decomposition.circle_edges.
  std::vector<int> edge_to_node;
  int max_good_children = 0;
};

// Checks that every node has at most one good child, that each node has
// one more child than attachment vertices inside it, and that the map from
// edges of o to the first node of their ray after which every node is good
// is injective. Throws kCertificateFailure naming the offending node.
CountabilityCertificate CertifyCountability(const PartitionTree& tree);

}  // namespace forge

#endif  // FORGE_BRIDGES_H_
