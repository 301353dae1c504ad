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

// JSON and DOT encodings of matroids, signings, frameworks, graphs and
// partition trees, and the parsers for the three input formats.

#ifndef FORGE_SERIALIZE_H_
#define FORGE_SERIALIZE_H_

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "forge/bridges.h"
#include "forge/framework.h"
#include "forge/graph.h"
#include "forge/matroid.h"
#include "forge/realizer.h"
#include "forge/signing.h"
#include "json.hpp"

namespace forge {

using Json = nlohmann::json;

// Labels of `set` in ascending order joined by commas.
std::string SetKey(const Matroid& m, ElementSet set);

// {"elements": [...], "circuits": [[...], ...]}, everything sorted.
Json MatroidToJson(const Matroid& m);
// Runs full validation. Throws kParseError on shape errors and forwards
// the matroid's own diagnostics.
Matroid MatroidFromJson(const Json& j, const MatroidOptions& options = {});

// {"c": {key: {label: +-1}}, "d": {...}}.
Json SigningToJson(const Matroid& m, const Signing& s);
Signing SigningFromJson(const Matroid& m, const Json& j);

// The signing plus "sigma" (values off each cocircuit) and "orders" (each
// R_o as labels in canonical rotation).
Json FrameworkToJson(const Matroid& m, const GraphFramework& f);
// Reads "c", "d" and "sigma"; "orders" is derived data and is ignored.
GraphFramework FrameworkFromJson(const Matroid& m, const Json& j);

// {"vertices": [...], "edges": [[label, tail, head], ...]}.
Json GraphToJson(const Multigraph& g);
Multigraph GraphFromJson(const Json& j);

// Undirected DOT. With `codes`, each vertex is labeled by its bit string.
std::string GraphToDot(const Multigraph& g,
                       const std::vector<VertexCode>* codes = nullptr);

// "u v label" per line; '#' starts a comment. Vertices are numbered in
// order of first appearance. Throws kParseError naming the line.
Multigraph ParseEdgeList(std::string_view text);

enum class InputFormat { kAuto, kMatroidJson, kGraphJson, kEdgeList };

// kAuto picks JSON when the text starts with '{' (a graph when it has a
// "vertices" member) and the edge list otherwise.
struct ParsedInput {
  Matroid matroid;
  std::optional<Multigraph> graph;
};
ParsedInput ParseInput(std::string_view text, InputFormat format,
                       const MatroidOptions& options = {});

// Throws kParseError with line and byte of the failure.
Json ParseJson(std::string_view text);

Json PartitionTreeToJson(const PartitionTree& tree,
                         const std::optional<CountabilityCertificate>& cert,
                         const std::string& failure = "");
std::string PartitionTreeToDot(const PartitionTree& tree);

}  // namespace forge

#endif  // FORGE_SERIALIZE_H_
