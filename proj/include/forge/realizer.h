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

// Builds a graph from a framework: vertices are sign vectors indexed by the
// cocircuits, and each element becomes an edge between two such vectors.

#ifndef FORGE_REALIZER_H_
#define FORGE_REALIZER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "forge/framework.h"
#include "forge/graph.h"
#include "forge/matroid.h"

namespace forge {

// One sign per cocircuit, aligned with m.cocircuits().
using VertexCode = std::vector<std::int8_t>;

// "1" for +1 and "0" for -1, one character per cocircuit.
std::string CodeString(const VertexCode& code);

// The two ends of e: coordinate b is sigma_b(e) when e is outside b, and
// -d_b(e) at the first end and d_b(e) at the second when e is in b.
std::pair<VertexCode, VertexCode> EdgeEndpointCodes(const Matroid& m,
                                                    const GraphFramework& f,
                                                    ElementId e);

// Vertices are the distinct endpoint codes, named "v0", "v1", ... in order
// of first occurrence (element order, first end before second end); each
// element becomes an edge from its first end to its second.
struct RealizedGraph {
  Multigraph graph;
  std::vector<VertexCode> codes;  // aligned with graph.vertices()
};

RealizedGraph Realize(const Matroid& m, const GraphFramework& f);

struct InducesReport {
  bool induces = true;
  // In m's element ids.
  std::vector<ElementSet> missing_circuits;    // circuits of m, not cycles
  std::vector<ElementSet> extra_circuits;      // cycles, not circuits of m
  std::vector<ElementSet> missing_cocircuits;  // cocircuits of m, not bonds
  std::vector<ElementSet> extra_cocircuits;    // bonds, not cocircuits of m
};

// Compares circuits with cycles and cocircuits with bonds. Throws
// kLabelMismatch unless g's edge labels are m's labels.
InducesReport VerifyInduces(const Matroid& m, const Multigraph& g);

// The base elements whose fundamental cocircuit separates v from w, in the
// order met walking from v: e comes before e' when e lies on v's side of
// the fundamental cocircuit of e'. Cross-checked against a tree search in
// the realized graph. Throws kNotABase, kNotAVertex, kNotConnected (v and
// w in different components of the realized graph) or kCertificateFailure.
std::vector<ElementId> BasePath(const Matroid& m, const GraphFramework& f,
                                ElementSet base, const VertexCode& v,
                                const VertexCode& w);

struct SubspaceReport {
  // The subgraph formed by x and the vertices it touches.
  bool connected = true;
  // x meets every cocircuit whose two sides both hold vertices touched by x.
  bool meets_every_separating_bond = true;
  bool spanning_in_matroid = false;
  // x connects every component of the realized graph.
  bool spanning_in_graph = false;
  std::optional<std::vector<ElementSet>> cut_decomposition;
};

// Throws kNotACut when `cut` is supplied but is not the set of edges
// between the two sides of some vertex bipartition of the realized graph.
SubspaceReport SubspaceConnectivity(const Matroid& m, const GraphFramework& f,
                                    ElementSet x,
                                    std::optional<ElementSet> cut = {});

}  // namespace forge

#endif  // FORGE_REALIZER_H_
