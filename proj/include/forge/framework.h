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

// Graph frameworks: a signing together with side functions sigma_b that
// place every element outside a cocircuit b on one of its two sides.

#ifndef FORGE_FRAMEWORK_H_
#define FORGE_FRAMEWORK_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "forge/cyclic_order.h"
#include "forge/graph.h"
#include "forge/matroid.h"
#include "forge/signing.h"

namespace forge {

struct GraphFramework {
  Signing signing;
  // Aligned with m.cocircuits(): +1 or -1 on E \ b and 0 on b.
  std::vector<SignRow> sigma;
  friend bool operator==(const GraphFramework&,
                         const GraphFramework&) = default;
};

enum class FrameworkCheck {
  kSigning,
  kWellDefined,
  kCyclicOrder,
  kCondition1,
  kCondition2,
  kCondition3,
  kCondition4,
};

std::string_view FrameworkCheckName(FrameworkCheck check);

// Everything needed to re-check a failure by hand. Unused fields are -1.
struct FrameworkViolation {
  FrameworkCheck check = FrameworkCheck::kSigning;
  int circuit = -1;
  int cocircuit = -1;
  int other_cocircuit = -1;
  // For conditions: the set s, then p and q.
  ElementSet s;
  ElementId p = -1;
  ElementId q = -1;
  // For well-definedness: the pair {e, f} and the element g.
  ElementId e = -1;
  ElementId f = -1;
  ElementId g = -1;
  std::string detail;
};

struct FrameworkReport {
  bool valid = true;
  std::optional<FrameworkViolation> violation;
};

// Throws kDomainMismatch when row shapes do not match m.
void CheckFrameworkDomain(const Matroid& m, const GraphFramework& f);

// Checks, in order: the signing, well-definedness of every R_o, the cyclic
// order axioms, then conditions (1) to (4) for every circuit o, cocircuit b
// and s = (b & o) plus at most two further elements of o.
FrameworkReport VerifyFramework(const Matroid& m, const GraphFramework& f);

// Index of the first cocircuit b with o & b == {e, f}, or -1.
int WitnessCocircuit(const Matroid& m, ElementSet o, ElementId e, ElementId f);

// R_o for every circuit, aligned with m.circuits(). Each pair uses its
// first witness cocircuit. Throws kNoWitnessCocircuit or kNotACyclicOrder.
std::vector<CyclicOrder> DeriveCircuitOrders(const Matroid& m,
                                             const GraphFramework& f);

// Signing from the walks and shores; sigma_b(e) is -1 when both ends of e
// lie on the U shore and +1 when both lie on the V shore.
GraphFramework FrameworkFromGraph(const Multigraph& g, const Matroid& m,
                                  const std::vector<CycleTraversal>& walks,
                                  const std::vector<BondSides>& sides);
GraphFramework FrameworkFromGraph(const Multigraph& g, const Matroid& m);

struct RestrictedFramework {
  Matroid minor;
  GraphFramework framework;
};

// Framework on m / contract \ remove inherited from the lexicographically
// least parent circuit and cocircuit of every minor row. Throws
// kOverlappingSets.
RestrictedFramework RestrictFramework(const Matroid& m, const GraphFramework& f,
                                      ElementSet contract, ElementSet remove);

struct FrameworkSearchStats {
  std::int64_t signings = 0;
  std::int64_t signing_nodes = 0;
  std::int64_t sigma_nodes = 0;
  // Complete candidates rejected by VerifyFramework; nonzero values would
  // point at a propagation bug, since the search only proposes candidates
  // that satisfy every constraint it knows.
  std::int64_t rejected = 0;
  bool exhausted = false;
};

// Searches every gauge class of signings of every connected component and,
// for each, the sides sigma. Side values across components are +1. Returns
// nullopt only after exhausting the search.
std::optional<GraphFramework> FindFramework(
    const Matroid& m, FrameworkSearchStats* stats = nullptr);

}  // namespace forge

#endif  // FORGE_FRAMEWORK_H_
