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

#include "forge/bridges.h"

#include <algorithm>
#include <set>

#include "forge/error.h"

namespace forge {
namespace {

// Edges met walking clockwise from circle vertex `from` to circle vertex
// `to`: circle_edges[from + 1], ..., circle_edges[to].
ElementSet EdgesBetween(const BridgeDecomposition& d, int from, int to) {
  const int k = static_cast<int>(d.circle_edges.size());
  ElementSet out;
  for (int i = from; i != to;) {
    i = (i + 1) % k;
    out.Insert(d.circle_edges[i]);
  }
  return out;
}

// Circle vertices met walking clockwise from `from` to `to`, both included.
std::vector<int> VerticesBetween(int k, int from, int to) {
  std::vector<int> out{from};
  for (int i = from; i != to;) {
    i = (i + 1) % k;
    out.push_back(i);
  }
  return out;
}

std::string DescribeArc(const BridgeDecomposition& d, int start, int end) {
  return d.circle_vertex_names[start] + ".." + d.circle_vertex_names[end];
}

std::string DescribeNode(const PartitionTree& t, int id) {
  const PartitionNode& node = t.nodes[id];
  return "node " + std::to_string(id) + " (level " +
         std::to_string(node.level) + ", arc " +
         DescribeArc(t.decomposition, node.start, node.end) + ")";
}

// The attachment of f read off its fundamental circuit with respect to
// o - circle_edges[0] in M': the circuit meets o in a path whose two ends
// are where f attaches.
std::array<int, 2> AttachmentFromCircuit(const BridgeDecomposition& d,
                                         const Matroid& m, ElementId f) {
  const Matroid& mp = d.contracted;
  const int k = static_cast<int>(d.circle_edges.size());
  const ElementSet base =
      TranslateSet(m, d.circuit.Without(d.circle_edges[0]), mp);
  const ElementSet arc =
      TranslateSet(mp, FundamentalSet(mp, base, mp.IndexOf(m.label(f))), m) &
      d.circuit;
  int first = -1;
  int last = -1;
  for (int i = 1; i < k; ++i) {
    if (!arc.Contains(d.circle_edges[i])) continue;
    if (first < 0) first = i;
    last = i;
  }
  if (first < 0 || arc != EdgesBetween(d, first - 1, last)) {
    throw Error(
        ErrorKind::kCertificateFailure,
        "fundamental circuit of " + m.label(f) + " does not meet o in a path");
  }
  return {first - 1, last};
}

}  // namespace

const BridgeAttachment& BridgeDecomposition::AttachmentOf(
    ElementId bridge) const {
  for (const BridgeAttachment& a : attachments) {
    if (a.bridge == bridge) return a;
  }
  throw Error(ErrorKind::kNotABridge,
              "element " + std::to_string(bridge) + " is not a bridge");
}

bool BridgeDecomposition::Separates(ElementId bridge, ElementId e,
                                    ElementId f) const {
  const BridgeAttachment& a = AttachmentOf(bridge);
  const ElementSet side = EdgesBetween(*this, a.ends[0], a.ends[1]);
  return side.Contains(e) != side.Contains(f);
}

BridgeDecomposition DecomposeBridges(const Matroid& m, ElementSet o,
                                     const GraphFramework* framework) {
  if (!o.IsSubsetOf(m.ground()) || !m.IsCircuit(o)) {
    throw Error(ErrorKind::kNotACircuit, m.Describe(o) + " is not a circuit");
  }
  if (!IsConnected(m)) {
    throw Error(ErrorKind::kDisconnected, "the matroid is not connected");
  }
  BridgeDecomposition d;
  d.original = m;
  d.circuit = o;
  const Matroid mo = Minor(m, o, ElementSet());
  d.base_s = TranslateSet(mo, mo.LexLeastBaseOf(mo.ground()), m);

  GraphFramework fp;
  if (framework != nullptr) {
    RestrictedFramework r = RestrictFramework(m, *framework, d.base_s, {});
    d.contracted = std::move(r.minor);
    fp = std::move(r.framework);
  } else {
    d.contracted = Minor(m, d.base_s, ElementSet());
    std::optional<GraphFramework> found = FindFramework(d.contracted);
    if (!found) {
      throw Error(
          ErrorKind::kNotGraphic,
          "no graph framework for the contraction by " + m.Describe(d.base_s));
    }
    fp = std::move(*found);
  }
  const Matroid& mp = d.contracted;
  d.realized = Realize(mp, fp);
  const Multigraph& g = d.realized.graph;

  const ElementSet o_prime = TranslateSet(m, o, mp);
  const CycleTraversal walk = DefaultTraversal(g, o_prime);
  std::vector<int> circle_index(g.vertex_count(), -1);
  std::vector<int> items;
  int at = walk.start_vertex;
  for (int edge : walk.edges) {
    at = g.edge(edge).Other(at);
    const int index = static_cast<int>(d.circle_edges.size());
    circle_index[at] = index;
    d.circle_edges.push_back(m.IndexOf(mp.label(edge)));
    d.circle_vertex_names.push_back(g.vertices()[at]);
    items.push_back(d.circle_edges.back());
    items.push_back(kCircleVertexBase + index);
  }
  d.circle_order =
      CyclicOrder::FromSequence({d.circle_edges.begin(), d.circle_edges.end()});
  d.circle = CyclicOrder::FromSequence(items);

  const ElementSet loops = TranslateSet(mp, mp.Loops(), m);
  d.loops_of_mprime = loops;
  d.bridges = m.ground() - d.base_s - o - loops;
  for (ElementId f : d.bridges) {
    const std::array<int, 2> ends = AttachmentFromCircuit(d, m, f);
    // Every fundamental circuit with respect to o - g must be the arc
    // between the ends that avoids g.
    for (ElementId g_edge : o) {
      const ElementSet base = TranslateSet(m, o.Without(g_edge), mp);
      const ElementSet arc =
          TranslateSet(mp, FundamentalSet(mp, base, mp.IndexOf(m.label(f))),
                       m) &
          o;
      ElementSet expected = EdgesBetween(d, ends[0], ends[1]);
      if (expected.Contains(g_edge)) expected = o - expected;
      if (arc != expected) {
        throw Error(ErrorKind::kCertificateFailure,
                    "fundamental circuit of " + m.label(f) + " avoiding " +
                        m.label(g_edge) + " is not an arc");
      }
    }
    const GraphEdge& edge = g.edge(mp.IndexOf(m.label(f)));
    std::array<int, 2> realized = {circle_index[edge.tail],
                                   circle_index[edge.head]};
    std::sort(realized.begin(), realized.end());
    if (realized != ends) {
      throw Error(ErrorKind::kCertificateFailure,
                  "realized ends of " + m.label(f) +
                      " disagree with its fundamental circuits");
    }
    d.attachments.push_back({f, ends});
  }
  return d;
}

SeparatingBridge FindSeparatingBridge(const BridgeDecomposition& d, ElementId e,
                                      ElementId f) {
  if (e == f || !d.circuit.Contains(e) || !d.circuit.Contains(f)) {
    throw Error(ErrorKind::kInvalidArgument,
                "need two distinct elements of the circuit");
  }
  // The fundamental cocircuit of f with respect to s + o - e meets both
  // sides of the cut separating e from f.
  const Matroid& m = d.original;
  const ElementSet base = (d.base_s | d.circuit).Without(e);
  const ElementSet candidates =
      (FundamentalSet(m, base, f) & d.bridges).Without(e).Without(f);
  for (ElementId g : candidates) {
    if (d.Separates(g, e, f)) return {g, true};
  }
  for (const BridgeAttachment& a : d.attachments) {
    if (d.Separates(a.bridge, e, f)) return {a.bridge, false};
  }
  throw Error(ErrorKind::kNoBridge, "no bridge separates the two elements");
}

PartitionTree BuildPartitionTree(const Matroid& m, ElementSet o,
                                 std::optional<ElementId> e0,
                                 const GraphFramework* framework,
                                 const PartitionTreeOptions& options) {
  if (options.require_three_connected && !Connectivity(m, 3).k_connected) {
    throw Error(ErrorKind::kNotThreeConnected,
                "the matroid is not 3-connected");
  }
  PartitionTree t;
  t.decomposition = DecomposeBridges(m, o, framework);
  const BridgeDecomposition& d = t.decomposition;
  if (d.bridges.empty()) {
    throw Error(ErrorKind::kNoBridge, m.Describe(o) + " has no bridges");
  }
  t.e0 = e0.value_or(d.bridges.First());
  if (t.e0 < 0 || t.e0 >= m.size() || !d.bridges.Contains(t.e0)) {
    throw Error(ErrorKind::kNotABridge,
                "element " + std::to_string(t.e0) + " is not a bridge");
  }
  const int k = static_cast<int>(d.circle_edges.size());

  auto add_level = [&](ElementSet bridges, bool repeated) {
    PartitionLevel level;
    level.bridges = bridges;
    level.repeated = repeated;
    std::set<int> ends;
    for (ElementId b : bridges) {
      ends.insert(d.AttachmentOf(b).ends[0]);
      ends.insert(d.AttachmentOf(b).ends[1]);
    }
    level.attachments.assign(ends.begin(), ends.end());
    std::vector<int> selection;
    for (int v : level.attachments) selection.push_back(kCircleVertexBase + v);
    const int depth = static_cast<int>(t.levels.size());
    for (const Arc& arc : ArcComponents(d.circle, selection)) {
      PartitionNode node;
      node.level = depth;
      node.start = arc.anchor - kCircleVertexBase;
      auto next = ends.upper_bound(node.start);
      node.end = next == ends.end() ? *ends.begin() : *next;
      for (int item : arc.interval) {
        if (item >= kCircleVertexBase) {
          node.interior.push_back(item - kCircleVertexBase);
        } else {
          node.edges.push_back(item);
        }
      }
      node.good_by_convention = depth < 2;
      const int id = static_cast<int>(t.nodes.size());
      if (depth > 0) {
        for (int p : t.levels.back().nodes) {
          const std::vector<ElementId>& pe = t.nodes[p].edges;
          if (std::find(pe.begin(), pe.end(), node.edges[0]) != pe.end()) {
            node.parent = p;
          }
        }
        t.nodes[node.parent].children.push_back(id);
      }
      level.nodes.push_back(id);
      t.nodes.push_back(std::move(node));
    }
    t.levels.push_back(std::move(level));
  };

  // Bridges reached from the current level: an end at an attachment vertex,
  // or ends inside two different arcs.
  auto grow = [&](const PartitionLevel& level) {
    std::vector<int> arc_of(k, -1);
    for (int id : level.nodes) {
      for (int v : t.nodes[id].interior) arc_of[v] = id;
    }
    ElementSet out;
    for (const BridgeAttachment& a : d.attachments) {
      const int x = arc_of[a.ends[0]];
      const int y = arc_of[a.ends[1]];
      if (x < 0 || y < 0 || x != y) out.Insert(a.bridge);
    }
    return out;
  };

  ElementSet current = ElementSet::Singleton(t.e0);
  const int limit = d.bridges.size() + 1;
  for (int n = 0;; ++n) {
    if (n > limit) {
      throw Error(ErrorKind::kCertificateFailure,
                  "levels did not stabilize within the bridge count");
    }
    add_level(current, false);
    const ElementSet next = grow(t.levels.back());
    if (next == current) {
      t.stable_level = n;
      break;
    }
    current = next;
  }
  if (current != d.bridges) {
    throw Error(
        ErrorKind::kCertificateFailure,
        "bridges " + m.Describe(d.bridges - current) + " never enter a level");
  }
  const int last = std::max(t.stable_level + 2, 2);
  while (static_cast<int>(t.levels.size()) <= last) add_level(current, true);

  // k is good when no bridge of its level joins the two pieces of its
  // grandparent left after removing k.
  for (PartitionNode& node : t.nodes) {
    if (node.level < 2) continue;
    const PartitionNode& up = t.nodes[t.nodes[node.parent].parent];
    if (node.start == up.start || node.end == up.end) continue;
    std::vector<int> side(k, 0);
    for (int v : VerticesBetween(k, up.start, node.start)) side[v] = 1;
    for (int v : VerticesBetween(k, node.end, up.end)) side[v] = 2;
    for (ElementId b : t.levels[node.level].bridges) {
      const BridgeAttachment& a = d.AttachmentOf(b);
      const int x = side[a.ends[0]];
      const int y = side[a.ends[1]];
      if (x != 0 && y != 0 && x != y) node.good = false;
    }
  }
  return t;
}

CountabilityCertificate CertifyCountability(const PartitionTree& t) {
  const BridgeDecomposition& d = t.decomposition;
  CountabilityCertificate cert;
  const int depth = static_cast<int>(t.levels.size());
  auto fail = [&](int id, const std::string& what) {
    throw Error(ErrorKind::kCertificateFailure, DescribeNode(t, id) + what);
  };

  for (int id = 0; id < static_cast<int>(t.nodes.size()); ++id) {
    const PartitionNode& node = t.nodes[id];
    if (node.level + 1 >= depth) continue;
    const std::vector<int>& below = t.levels[node.level + 1].attachments;
    int inside = 0;
    for (int v : node.interior) {
      inside += std::binary_search(below.begin(), below.end(), v) ? 1 : 0;
    }
    if (static_cast<int>(node.children.size()) != inside + 1) {
      fail(id, " has " + std::to_string(node.children.size()) +
                   " children but " + std::to_string(inside) +
                   " attachment vertices inside");
    }
    if (node.level < 1) continue;
    int good = 0;
    for (int child : node.children) good += t.nodes[child].good ? 1 : 0;
    cert.max_good_children = std::max(cert.max_good_children, good);
    if (good > 1) fail(id, " has " + std::to_string(good) + " good children");
  }

  std::vector<bool> used(t.nodes.size(), false);
  for (ElementId e : d.circle_edges) {
    std::vector<int> ray;
    for (const PartitionLevel& level : t.levels) {
      for (int id : level.nodes) {
        const std::vector<ElementId>& edges = t.nodes[id].edges;
        if (std::find(edges.begin(), edges.end(), e) != edges.end()) {
          ray.push_back(id);
        }
      }
    }
    if (static_cast<int>(ray.size()) != depth) {
      throw Error(ErrorKind::kCertificateFailure,
                  "edge " + std::to_string(e) + " misses a level");
    }
    int first = depth;
    while (first > 2 && t.nodes[ray[first - 1]].good) --first;
    if (first == depth) fail(ray.back(), " is the last node and not good");
    const int node = ray[first];
    if (used[node]) fail(node, " is the image of two edges");
    used[node] = true;
    cert.edge_to_node.push_back(node);
  }
  return cert;
}

}  // namespace forge
