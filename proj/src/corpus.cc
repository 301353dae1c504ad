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

#include "forge/corpus.h"

#include <array>
#include <string>
#include <utility>

namespace forge {
namespace {

using EdgeSpec = std::array<std::string, 3>;

std::string Num(int v) { return std::to_string(v); }

EdgeSpec Edge(int u, int v) { return {Num(u) + Num(v), Num(u), Num(v)}; }

std::vector<std::string> VertexRange(int first, int last) {
  std::vector<std::string> out;
  for (int v = first; v <= last; ++v) out.push_back(Num(v));
  return out;
}

}  // namespace

Multigraph CompleteGraph(int n) {
  std::vector<EdgeSpec> edges;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) edges.push_back(Edge(u, v));
  }
  return Multigraph::Build(VertexRange(1, n), edges);
}

Multigraph Wheel(int n) {
  std::vector<EdgeSpec> edges;
  for (int i = 1; i <= n; ++i) {
    edges.push_back(Edge(i, i % n + 1));
    edges.push_back(Edge(0, i));
  }
  return Multigraph::Build(VertexRange(0, n), edges);
}

Multigraph CompleteBipartite33() {
  std::vector<EdgeSpec> edges;
  for (int u = 1; u <= 3; ++u) {
    for (int v = 4; v <= 6; ++v) edges.push_back(Edge(u, v));
  }
  return Multigraph::Build(VertexRange(1, 6), edges);
}

Multigraph Prism() {
  return Multigraph::Build(
      VertexRange(1, 6),
      {Edge(1, 2), Edge(2, 3), Edge(1, 3), Edge(4, 5), Edge(5, 6), Edge(4, 6),
       Edge(1, 4), Edge(2, 5), Edge(3, 6)});
}

Multigraph Petersen() {
  std::vector<EdgeSpec> edges;
  for (int i = 0; i < 5; ++i) {
    edges.push_back({"a" + Num(i), "o" + Num(i), "o" + Num((i + 1) % 5)});
    edges.push_back({"b" + Num(i), "i" + Num(i), "i" + Num((i + 2) % 5)});
    edges.push_back({"s" + Num(i), "o" + Num(i), "i" + Num(i)});
  }
  return Multigraph::Build({}, edges);
}

std::vector<Multigraph> ConnectedLabeledGraphs(int n) {
  std::vector<std::pair<int, int>> slots;
  for (int u = 1; u <= n; ++u) {
    for (int v = u + 1; v <= n; ++v) slots.emplace_back(u, v);
  }
  std::vector<Multigraph> out;
  for (std::uint32_t bits = 0; bits < (1u << slots.size()); ++bits) {
    std::vector<EdgeSpec> edges;
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if ((bits >> i) & 1u)
        edges.push_back(Edge(slots[i].first, slots[i].second));
    }
    Multigraph g = Multigraph::Build(VertexRange(1, n), edges);
    if (g.ComponentCount(g.AllEdges()) == 1) out.push_back(std::move(g));
  }
  return out;
}

std::vector<NamedGraph> GraphCorpus() {
  auto graph = [](std::vector<EdgeSpec> edges) {
    return Multigraph::Build({}, edges);
  };
  std::vector<NamedGraph> corpus = {
      {"K4", CompleteGraph(4), true},
      {"K5", CompleteGraph(5), true},
      {"K33", CompleteBipartite33(), true},
      {"W4", Wheel(4), true},
      {"W5", Wheel(5), true},
      {"prism", Prism(), true},
      {"K1", Multigraph::Build({"1"}, {}), false},
      {"K2", graph({Edge(1, 2)}), false},
      {"P3", graph({Edge(1, 2), Edge(2, 3)}), false},
      {"K3", graph({Edge(1, 2), Edge(2, 3), Edge(1, 3)}), false},
      {"P4", graph({Edge(1, 2), Edge(2, 3), Edge(3, 4)}), false},
      {"star3", graph({Edge(1, 2), Edge(1, 3), Edge(1, 4)}), false},
      {"C4", graph({Edge(1, 2), Edge(2, 3), Edge(3, 4), Edge(1, 4)}), false},
      {"paw", graph({Edge(1, 2), Edge(2, 3), Edge(1, 3), Edge(3, 4)}), false},
      {"diamond",
       graph({Edge(1, 2), Edge(2, 3), Edge(1, 3), Edge(2, 4), Edge(3, 4)}),
       false},
      {"parallel2", graph({{"a", "1", "2"}, {"b", "1", "2"}}), false},
      {"parallel3", graph({{"a", "1", "2"}, {"b", "1", "2"}, {"c", "2", "1"}}),
       false},
      {"loop", graph({{"a", "1", "1"}}), false},
      {"theta",
       graph({{"a", "1", "2"},
              {"b", "2", "3"},
              {"c", "3", "1"},
              {"d", "1", "2"}}),
       false},
  };
  return corpus;
}

Matroid Uniform(int r, int n) {
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) labels.push_back(std::string(1, 'a' + i));
  std::vector<ElementSet> circuits;
  for (std::uint32_t bits = 0; bits < (1u << n); ++bits) {
    if (std::popcount(bits) == r + 1) circuits.push_back(ElementSet(bits));
  }
  return Matroid::FromCircuits(labels, circuits, Validation::kFull);
}

Matroid Fano() {
  // Points are the nonzero vectors of GF(2)^3, labeled by their value;
  // circuits are the minimal sets summing to zero.
  std::vector<std::string> labels;
  for (int p = 1; p <= 7; ++p) labels.push_back(Num(p));
  std::vector<ElementSet> dependent;
  for (std::uint32_t bits = 1; bits < (1u << 7); ++bits) {
    int sum = 0;
    for (int i = 0; i < 7; ++i) {
      if ((bits >> i) & 1u) sum ^= i + 1;
    }
    if (sum == 0) dependent.push_back(ElementSet(bits));
  }
  std::vector<ElementSet> circuits;
  for (ElementSet x : dependent) {
    bool minimal = true;
    for (ElementSet y : dependent) {
      if (y != x && y.IsSubsetOf(x)) minimal = false;
    }
    if (minimal) circuits.push_back(x);
  }
  return Matroid::FromCircuits(labels, circuits, Validation::kFull);
}

std::vector<NamedMatroid> NonGraphicCorpus() {
  return {
      {"U24", Uniform(2, 4)},
      {"F7", Fano()},
      {"F7*", Dual(Fano())},
      {"K5*", Dual(CycleMatroid(CompleteGraph(5)))},
      {"K33*", Dual(CycleMatroid(CompleteBipartite33()))},
  };
}

std::optional<CorpusEntry> FindCorpusEntry(const std::string& name) {
  for (NamedGraph& g : GraphCorpus()) {
    if (g.name == name) {
      return CorpusEntry{name, CycleMatroid(g.graph), std::move(g.graph)};
    }
  }
  if (name == "petersen") {
    Multigraph g = Petersen();
    return CorpusEntry{name, CycleMatroid(g), std::move(g)};
  }
  for (NamedMatroid& m : NonGraphicCorpus()) {
    if (m.name == name) return CorpusEntry{name, m.matroid, std::nullopt};
  }
  return std::nullopt;
}

std::vector<std::string> CorpusNames() {
  std::vector<std::string> names;
  for (const NamedGraph& g : GraphCorpus()) names.push_back(g.name);
  names.push_back("petersen");
  for (const NamedMatroid& m : NonGraphicCorpus()) names.push_back(m.name);
  return names;
}

}  // namespace forge
