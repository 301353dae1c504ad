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

// Named instances used by the tests and the command line.

#ifndef FORGE_CORPUS_H_
#define FORGE_CORPUS_H_

#include <optional>
#include <string>
#include <vector>

#include "forge/graph.h"
#include "forge/matroid.h"

namespace forge {

struct NamedGraph {
  std::string name;
  Multigraph graph;
  bool three_connected = false;
};

struct NamedMatroid {
  std::string name;
  Matroid matroid;
};

// Complete graph on vertices 1..n with edge "uv" for u < v oriented u -> v.
Multigraph CompleteGraph(int n);
// Wheel with hub 0 and rim 1..n; rim edges "12", ..., "n1", spokes "0i".
Multigraph Wheel(int n);
Multigraph CompleteBipartite33();
Multigraph Prism();
Multigraph Petersen();

// Every connected simple graph on vertices 1..n (n <= 4), one per edge
// set, edges "uv" for u < v.
std::vector<Multigraph> ConnectedLabeledGraphs(int n);

// K4, K5, K3,3, W4, W5, the prism, one representative of each connected
// simple graph on at most four vertices, and a few multigraphs.
std::vector<NamedGraph> GraphCorpus();

// U24, F7, F7*, M*(K5) and M*(K3,3): none of them is graphic.
std::vector<NamedMatroid> NonGraphicCorpus();

Matroid Uniform(int r, int n);
Matroid Fano();

// Looks up a graph corpus entry, then the matroid corpus (graphs are
// returned through `graph` and also converted to their cycle matroid).
struct CorpusEntry {
  std::string name;
  Matroid matroid;
  std::optional<Multigraph> graph;
};
std::optional<CorpusEntry> FindCorpusEntry(const std::string& name);
std::vector<std::string> CorpusNames();

}  // namespace forge

#endif  // FORGE_CORPUS_H_
