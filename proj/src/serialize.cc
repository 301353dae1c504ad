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

#include "forge/serialize.h"

#include <algorithm>
#include <sstream>

#include "forge/error.h"

namespace forge {
namespace {

[[noreturn]] void ShapeError(const std::string& what) {
  throw Error(ErrorKind::kParseError, what);
}

const Json& Member(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    ShapeError(std::string("missing member \"") + name + "\"");
  }
  return j.at(name);
}

std::vector<std::string> Strings(const Json& j, const std::string& where) {
  if (!j.is_array()) ShapeError(where + " is not an array");
  std::vector<std::string> out;
  for (const Json& item : j) {
    if (!item.is_string()) ShapeError(where + " holds a non-string");
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::string Quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

// Family of label lists sorted lexicographically.
Json SortedFamily(const Matroid& m, const std::vector<ElementSet>& family) {
  std::vector<std::vector<std::string>> sets;
  for (ElementSet s : family) sets.push_back(m.LabelsOf(s));
  std::sort(sets.begin(), sets.end());
  return sets;
}

Json RowsToJson(const Matroid& m, const std::vector<ElementSet>& rows,
                const std::vector<SignRow>& values) {
  Json out = Json::object();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    Json row = Json::object();
    for (ElementId e = 0; e < m.size(); ++e) {
      if (values[i][e] != 0) row[m.label(e)] = values[i][e];
    }
    out[SetKey(m, rows[i])] = std::move(row);
  }
  return out;
}

// Inverse of RowsToJson. `support` decides which elements need a value.
template <typename Support>
std::vector<SignRow> RowsFromJson(const Matroid& m, const Json& j,
                                  const std::vector<ElementSet>& rows,
                                  const std::string& what, Support support) {
  if (!j.is_object()) ShapeError(what + " is not an object");
  if (j.size() != rows.size()) {
    ShapeError(what + " has " + std::to_string(j.size()) + " rows, expected " +
               std::to_string(rows.size()));
  }
  std::vector<SignRow> out;
  for (ElementSet row : rows) {
    const std::string key = SetKey(m, row);
    if (!j.contains(key)) ShapeError(what + " lacks row {" + key + "}");
    const Json& values = j.at(key);
    if (!values.is_object()) ShapeError(what + " row {" + key + "}");
    SignRow signs(m.size(), 0);
    const ElementSet want = support(row);
    for (auto it = values.begin(); it != values.end(); ++it) {
      const std::optional<ElementId> e = m.Find(it.key());
      if (!e || !want.Contains(*e)) {
        ShapeError(what + " row {" + key + "} has stray entry " + it.key());
      }
      if (!it->is_number_integer() ||
          (it->get<int>() != 1 && it->get<int>() != -1)) {
        ShapeError(what + " row {" + key + "} entry " + it.key() +
                   " is not 1 or -1");
      }
      signs[*e] = static_cast<std::int8_t>(it->get<int>());
    }
    for (ElementId e : want) {
      if (signs[e] == 0) {
        ShapeError(what + " row {" + key + "} lacks " + m.label(e));
      }
    }
    out.push_back(std::move(signs));
  }
  return out;
}

std::string VertexName(const BridgeDecomposition& d, int v) {
  return d.circle_vertex_names[v];
}

}  // namespace

std::string SetKey(const Matroid& m, ElementSet set) {
  std::string out;
  for (ElementId e : set) {
    if (!out.empty()) out.push_back(',');
    out += m.label(e);
  }
  return out;
}

Json MatroidToJson(const Matroid& m) {
  Json j;
  j["elements"] = m.labels();
  j["circuits"] = SortedFamily(m, m.circuits());
  return j;
}

Matroid MatroidFromJson(const Json& j, const MatroidOptions& options) {
  const std::vector<std::string> ground =
      Strings(Member(j, "elements"), "\"elements\"");
  const Json& circuits = Member(j, "circuits");
  if (!circuits.is_array()) ShapeError("\"circuits\" is not an array");
  std::vector<std::vector<std::string>> sets;
  for (const Json& c : circuits) sets.push_back(Strings(c, "a circuit"));
  return Matroid::Build(ground, sets, options);
}

Json SigningToJson(const Matroid& m, const Signing& s) {
  CheckSigningDomain(m, s);
  Json j;
  j["c"] = RowsToJson(m, m.circuits(), s.c);
  j["d"] = RowsToJson(m, m.cocircuits(), s.d);
  return j;
}

Signing SigningFromJson(const Matroid& m, const Json& j) {
  auto same = [](ElementSet row) { return row; };
  Signing s;
  s.c = RowsFromJson(m, Member(j, "c"), m.circuits(), "\"c\"", same);
  s.d = RowsFromJson(m, Member(j, "d"), m.cocircuits(), "\"d\"", same);
  return s;
}

Json FrameworkToJson(const Matroid& m, const GraphFramework& f) {
  CheckFrameworkDomain(m, f);
  Json j = SigningToJson(m, f.signing);
  j["sigma"] = RowsToJson(m, m.cocircuits(), f.sigma);
  Json orders = Json::object();
  const std::vector<CyclicOrder> derived = DeriveCircuitOrders(m, f);
  for (std::size_t i = 0; i < derived.size(); ++i) {
    std::vector<std::string> labels;
    for (int e : derived[i].items()) labels.push_back(m.label(e));
    orders[SetKey(m, m.circuits()[i])] = labels;
  }
  j["orders"] = std::move(orders);
  return j;
}

GraphFramework FrameworkFromJson(const Matroid& m, const Json& j) {
  GraphFramework f;
  f.signing = SigningFromJson(m, j);
  const ElementSet ground = m.ground();
  f.sigma = RowsFromJson(m, Member(j, "sigma"), m.cocircuits(), "\"sigma\"",
                         [ground](ElementSet row) { return ground - row; });
  return f;
}

Json GraphToJson(const Multigraph& g) {
  Json j;
  j["vertices"] = g.vertices();
  Json edges = Json::array();
  for (const GraphEdge& e : g.edges()) {
    edges.push_back({e.label, g.vertices()[e.tail], g.vertices()[e.head]});
  }
  j["edges"] = std::move(edges);
  return j;
}

Multigraph GraphFromJson(const Json& j) {
  std::vector<std::string> vertices =
      Strings(Member(j, "vertices"), "\"vertices\"");
  const Json& edges = Member(j, "edges");
  if (!edges.is_array()) ShapeError("\"edges\" is not an array");
  std::vector<std::array<std::string, 3>> list;
  for (const Json& e : edges) {
    const std::vector<std::string> parts = Strings(e, "an edge");
    if (parts.size() != 3) ShapeError("an edge needs [label, tail, head]");
    list.push_back({parts[0], parts[1], parts[2]});
  }
  return Multigraph::Build(std::move(vertices), list);
}

std::string GraphToDot(const Multigraph& g,
                       const std::vector<VertexCode>* codes) {
  std::ostringstream out;
  out << "graph G {\n";
  for (int v = 0; v < g.vertex_count(); ++v) {
    out << "  " << Quote(g.vertices()[v]);
    if (codes != nullptr) {
      out << " [label=" << Quote(CodeString((*codes)[v])) << "]";
    }
    out << ";\n";
  }
  for (const GraphEdge& e : g.edges()) {
    out << "  " << Quote(g.vertices()[e.tail]) << " -- "
        << Quote(g.vertices()[e.head]) << " [label=" << Quote(e.label)
        << "];\n";
  }
  out << "}\n";
  return out.str();
}

Multigraph ParseEdgeList(std::string_view text) {
  std::vector<std::string> vertices;
  std::vector<std::array<std::string, 3>> edges;
  auto vertex = [&](const std::string& name) {
    if (std::find(vertices.begin(), vertices.end(), name) == vertices.end()) {
      vertices.push_back(name);
    }
  };
  std::istringstream in{std::string(text)};
  std::string line;
  for (int number = 1; std::getline(in, line); ++number) {
    line = line.substr(0, line.find('#'));
    std::istringstream fields(line);
    std::vector<std::string> parts;
    for (std::string word; fields >> word;) parts.push_back(word);
    if (parts.empty()) continue;
    if (parts.size() != 3) {
      throw Error(ErrorKind::kParseError,
                  "line " + std::to_string(number) +
                      ": expected \"u v label\"" + ", found " +
                      std::to_string(parts.size()) + " fields");
    }
    vertex(parts[0]);
    vertex(parts[1]);
    edges.push_back({parts[2], parts[0], parts[1]});
  }
  return Multigraph::Build(std::move(vertices), edges);
}

Json ParseJson(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    const std::size_t byte = std::min(e.byte, text.size());
    const int line = 1 + static_cast<int>(std::count(
                             text.begin(), text.begin() + byte, '\n'));
    throw Error(ErrorKind::kParseError, "line " + std::to_string(line) +
                                            ", byte " + std::to_string(e.byte) +
                                            ": invalid JSON");
  }
}

ParsedInput ParseInput(std::string_view text, InputFormat format,
                       const MatroidOptions& options) {
  if (format == InputFormat::kAuto) {
    const std::size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string_view::npos && text[first] == '{') {
      const Json j = ParseJson(text);
      format = j.is_object() && j.contains("vertices")
                   ? InputFormat::kGraphJson
                   : InputFormat::kMatroidJson;
    } else {
      format = InputFormat::kEdgeList;
    }
  }
  ParsedInput out;
  switch (format) {
    case InputFormat::kMatroidJson:
      out.matroid = MatroidFromJson(ParseJson(text), options);
      return out;
    case InputFormat::kGraphJson:
      out.graph = GraphFromJson(ParseJson(text));
      break;
    case InputFormat::kEdgeList:
    case InputFormat::kAuto:
      out.graph = ParseEdgeList(text);
      break;
  }
  out.matroid = CycleMatroid(*out.graph, options);
  return out;
}

Json PartitionTreeToJson(const PartitionTree& t,
                         const std::optional<CountabilityCertificate>& cert,
                         const std::string& failure) {
  const BridgeDecomposition& d = t.decomposition;
  const Matroid& m = d.original;
  auto labels = [&](const std::vector<ElementId>& ids) {
    std::vector<std::string> out;
    for (ElementId e : ids) out.push_back(m.label(e));
    return out;
  };
  auto names = [&](const std::vector<int>& vs) {
    std::vector<std::string> out;
    for (int v : vs) out.push_back(VertexName(d, v));
    return out;
  };
  Json j;
  j["circuit"] = labels(d.circle_edges);
  j["circle_vertices"] = d.circle_vertex_names;
  j["contracted"] = m.LabelsOf(d.base_s);
  j["loops"] = m.LabelsOf(d.loops_of_mprime);
  Json bridges = Json::array();
  for (const BridgeAttachment& a : d.attachments) {
    bridges.push_back({{"element", m.label(a.bridge)},
                       {"ends", names({a.ends[0], a.ends[1]})}});
  }
  j["bridges"] = std::move(bridges);
  j["e0"] = m.label(t.e0);
  j["stable_level"] = t.stable_level;
  Json levels = Json::array();
  for (std::size_t n = 0; n < t.levels.size(); ++n) {
    const PartitionLevel& level = t.levels[n];
    levels.push_back({{"level", n},
                      {"I", m.LabelsOf(level.bridges)},
                      {"J", names(level.attachments)},
                      {"K", level.nodes},
                      {"repeated", level.repeated}});
  }
  j["levels"] = std::move(levels);
  Json nodes = Json::array();
  for (std::size_t id = 0; id < t.nodes.size(); ++id) {
    const PartitionNode& node = t.nodes[id];
    Json n = {{"id", id},
              {"level", node.level},
              {"start", VertexName(d, node.start)},
              {"end", VertexName(d, node.end)},
              {"edges", labels(node.edges)},
              {"interior", names(node.interior)},
              {"children", node.children},
              {"good", node.good},
              {"good_by_convention", node.good_by_convention}};
    n["parent"] = node.parent < 0 ? Json(nullptr) : Json(node.parent);
    nodes.push_back(std::move(n));
  }
  j["nodes"] = std::move(nodes);
  Json c;
  c["pass"] = cert.has_value();
  if (cert) {
    Json map = Json::object();
    for (std::size_t i = 0; i < d.circle_edges.size(); ++i) {
      map[m.label(d.circle_edges[i])] = cert->edge_to_node[i];
    }
    c["edge_to_node"] = std::move(map);
    c["max_good_children"] = cert->max_good_children;
  } else {
    c["failure"] = failure;
  }
  j["certificate"] = std::move(c);
  return j;
}

std::string PartitionTreeToDot(const PartitionTree& t) {
  const BridgeDecomposition& d = t.decomposition;
  const Matroid& m = d.original;
  std::ostringstream out;
  out << "digraph partition_tree {\n  node [shape=box];\n";
  for (std::size_t id = 0; id < t.nodes.size(); ++id) {
    const PartitionNode& node = t.nodes[id];
    std::string edges;
    for (ElementId e : node.edges) {
      if (!edges.empty()) edges += ",";
      edges += m.label(e);
    }
    const std::string label = "L" + std::to_string(node.level) + " " +
                              VertexName(d, node.start) + ".." +
                              VertexName(d, node.end) + "\\n{" + edges + "}";
    out << "  n" << id << " [label=\"" << label << "\"";
    if (!node.good_by_convention) {
      out << (node.good ? ", style=bold" : ", style=dashed");
    }
    out << "];\n";
  }
  for (std::size_t id = 0; id < t.nodes.size(); ++id) {
    for (int child : t.nodes[id].children) {
      out << "  n" << id << " -> n" << child << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace forge
