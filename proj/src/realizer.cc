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

#include "forge/realizer.h"

#include <algorithm>
#include <array>
#include <deque>

#include "forge/error.h"

namespace forge {
namespace {

int VertexOf(const RealizedGraph& r, const VertexCode& code) {
  auto it = std::find(r.codes.begin(), r.codes.end(), code);
  if (it == r.codes.end()) {
    throw Error(ErrorKind::kNotAVertex,
                "code " + CodeString(code) + " is not a realized vertex");
  }
  return static_cast<int>(it - r.codes.begin());
}

std::vector<ElementSet> Difference(const std::vector<ElementSet>& a,
                                   const std::vector<ElementSet>& b) {
  std::vector<ElementSet> out;
  for (ElementSet x : a) {
    if (std::find(b.begin(), b.end(), x) == b.end()) out.push_back(x);
  }
  return out;
}

}  // namespace

std::string CodeString(const VertexCode& code) {
  std::string out;
  for (std::int8_t bit : code) out.push_back(bit > 0 ? '1' : '0');
  return out;
}

std::pair<VertexCode, VertexCode> EdgeEndpointCodes(const Matroid& m,
                                                    const GraphFramework& f,
                                                    ElementId e) {
  const int count = static_cast<int>(m.cocircuits().size());
  VertexCode first(count);
  VertexCode second(count);
  for (int b = 0; b < count; ++b) {
    if (m.cocircuits()[b].Contains(e)) {
      first[b] = static_cast<std::int8_t>(-f.signing.d[b][e]);
      second[b] = f.signing.d[b][e];
    } else {
      first[b] = f.sigma[b][e];
      second[b] = f.sigma[b][e];
    }
  }
  return {std::move(first), std::move(second)};
}

RealizedGraph Realize(const Matroid& m, const GraphFramework& f) {
  CheckFrameworkDomain(m, f);
  RealizedGraph out;
  std::vector<std::string> names;
  auto name_of = [&](const VertexCode& code) {
    auto it = std::find(out.codes.begin(), out.codes.end(), code);
    if (it != out.codes.end()) return names[it - out.codes.begin()];
    out.codes.push_back(code);
    names.push_back("v" + std::to_string(names.size()));
    return names.back();
  };
  std::vector<std::array<std::string, 3>> edges;
  for (ElementId e = 0; e < m.size(); ++e) {
    auto [first, second] = EdgeEndpointCodes(m, f, e);
    const std::string tail = name_of(first);
    const std::string head = name_of(second);
    edges.push_back({m.label(e), tail, head});
  }
  out.graph = Multigraph::Build(names, edges);
  return out;
}

InducesReport VerifyInduces(const Matroid& m, const Multigraph& g) {
  if (m.labels() != g.EdgeLabels()) {
    throw Error(ErrorKind::kLabelMismatch,
                "graph edges and matroid elements differ");
  }
  InducesReport report;
  const std::vector<ElementSet> cycles = Cycles(g);
  const std::vector<ElementSet> bonds = Bonds(g);
  report.missing_circuits = Difference(m.circuits(), cycles);
  report.extra_circuits = Difference(cycles, m.circuits());
  report.missing_cocircuits = Difference(m.cocircuits(), bonds);
  report.extra_cocircuits = Difference(bonds, m.cocircuits());
  report.induces =
      report.missing_circuits.empty() && report.extra_circuits.empty() &&
      report.missing_cocircuits.empty() && report.extra_cocircuits.empty();
  return report;
}

std::vector<ElementId> BasePath(const Matroid& m, const GraphFramework& f,
                                ElementSet base, const VertexCode& v,
                                const VertexCode& w) {
  if (!base.IsSubsetOf(m.ground()) || !m.IsBase(base)) {
    throw Error(ErrorKind::kNotABase, m.Describe(base) + " is not a base");
  }
  const RealizedGraph realized = Realize(m, f);
  const int from = VertexOf(realized, v);
  const int to = VertexOf(realized, w);
  const std::optional<std::vector<int>> expected =
      TreePath(realized.graph, base, from, to);
  if (!expected) {
    throw Error(ErrorKind::kNotConnected, "v" + std::to_string(from) +
                                              " and v" + std::to_string(to) +
                                              " lie in different components");
  }

  std::vector<ElementId> members;
  std::vector<int> cocircuit_of(m.size(), -1);
  for (ElementId e : base) {
    const int b = *m.CocircuitIndex(FundamentalSet(m, base, e));
    cocircuit_of[e] = b;
    if (v[b] != w[b]) members.push_back(e);
  }
  // Position of e: the number of e' that come before it.
  const int k = static_cast<int>(members.size());
  std::vector<ElementId> path(k, -1);
  for (ElementId e : members) {
    int before = 0;
    for (ElementId other : members) {
      if (other == e) continue;
      const int b = cocircuit_of[e];
      if (f.sigma[b][other] == v[b]) ++before;
    }
    if (path[before] >= 0) {
      throw Error(ErrorKind::kCertificateFailure,
                  "side relation does not order the path linearly");
    }
    path[before] = e;
  }
  if (path != *expected) {
    throw Error(ErrorKind::kCertificateFailure,
                "fundamental cocircuit path disagrees with the tree path");
  }
  return path;
}

SubspaceReport SubspaceConnectivity(const Matroid& m, const GraphFramework& f,
                                    ElementSet x,
                                    std::optional<ElementSet> cut) {
  const RealizedGraph realized = Realize(m, f);
  const Multigraph& g = realized.graph;
  SubspaceReport report;

  std::vector<bool> touched(g.vertex_count(), false);
  for (ElementId e : x) {
    touched[g.edge(e).tail] = true;
    touched[g.edge(e).head] = true;
  }
  const std::vector<int> component = g.ComponentsOf(x);
  int first = -1;
  for (int u = 0; u < g.vertex_count(); ++u) {
    if (!touched[u]) continue;
    if (first < 0) first = component[u];
    if (component[u] != first) report.connected = false;
  }
  for (int b = 0; b < static_cast<int>(m.cocircuits().size()); ++b) {
    bool minus = false;
    bool plus = false;
    for (int u = 0; u < g.vertex_count(); ++u) {
      if (!touched[u]) continue;
      (realized.codes[u][b] < 0 ? minus : plus) = true;
    }
    if (minus && plus && !x.Intersects(m.cocircuits()[b])) {
      report.meets_every_separating_bond = false;
    }
  }
  report.spanning_in_matroid = m.IsSpanning(x);
  report.spanning_in_graph =
      g.ComponentCount(x) == g.ComponentCount(g.AllEdges());

  if (cut) {
    // A cut: the components of G - cut can be 2-colored so that exactly
    // the cut edges join different colors.
    const std::vector<int> part = g.ComponentsOf(g.AllEdges() - *cut);
    const int parts = g.ComponentCount(g.AllEdges() - *cut);
    std::vector<int> color(parts, 0);
    for (int start = 0; start < parts; ++start) {
      if (color[start] != 0) continue;
      color[start] = 1;
      std::deque<int> queue{start};
      while (!queue.empty()) {
        const int at = queue.front();
        queue.pop_front();
        for (ElementId e : *cut) {
          const int a = part[g.edge(e).tail];
          const int b = part[g.edge(e).head];
          if (a != at && b != at) continue;
          const int next = a == at ? b : a;
          if (color[next] == 0) {
            color[next] = -color[at];
            queue.push_back(next);
          } else if (color[next] == color[at]) {
            throw Error(ErrorKind::kNotACut,
                        m.Describe(*cut) + " is not an edge cut");
          }
        }
      }
    }
    report.cut_decomposition = DisjointCocircuitDecomposition(m, *cut);
  }
  return report;
}

}  // namespace forge
