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

#ifndef FORGE_SIGNING_H_
#define FORGE_SIGNING_H_

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "forge/graph.h"
#include "forge/matroid.h"

namespace forge {

// Signs of one circuit or cocircuit, indexed by element id: +1 or -1 on the
// members of the set and 0 elsewhere.
using SignRow = std::vector<std::int8_t>;

// c is aligned with m.circuits() and d with m.cocircuits().
struct Signing {
  std::vector<SignRow> c;
  std::vector<SignRow> d;
  friend bool operator==(const Signing&, const Signing&) = default;
};

struct SigningReport {
  bool valid = true;
  // First pair, in (circuit, cocircuit) order, whose sum is nonzero.
  std::optional<CircuitCocircuitPair> violation;
  int sum = 0;
};

// Throws kDomainMismatch unless every row is nonzero exactly on its set.
void CheckSigningDomain(const Matroid& m, const Signing& s);

SigningReport VerifySigning(const Matroid& m, const Signing& s);

// m must be the cycle matroid of g (same edge labels; kLabelMismatch
// otherwise). c_o(e) = +1 where the walk of o goes along e's orientation;
// d_b(e) = +1 where e leaves the U shore of b. Walks and sides are aligned
// with m.circuits() and m.cocircuits(). Throws kInconsistentTraversal or
// kInconsistentBondSides.
Signing SigningFromOrientedGraph(const Multigraph& g, const Matroid& m,
                                 const std::vector<CycleTraversal>& walks,
                                 const std::vector<BondSides>& sides);

// Same, with DefaultTraversal and DefaultBondSides.
Signing SigningFromOrientedGraph(const Multigraph& g, const Matroid& m);

struct SearchStats {
  std::int64_t nodes = 0;
  std::int64_t solutions = 0;
  bool exhausted = false;
};

// Calls `visit` on every signing whose rows restricted to `component` are
// gauge fixed, one per gauge class; only rows inside `component` are
// filled, all others are left zero. Stops early when `visit` returns false.
// Returns false when stopped early.
bool EnumerateSignings(const Matroid& m, ElementSet component,
                       const std::function<bool(const Signing&)>& visit,
                       SearchStats* stats = nullptr);

// First gauge-fixed signing found component by component, or nullopt once
// the search space is exhausted.
std::optional<Signing> FindSigning(const Matroid& m,
                                   SearchStats* stats = nullptr);

// Multiplies circuit row `row` (or cocircuit row) by -1.
void FlipCircuitRow(Signing& s, int row);
void FlipCocircuitRow(Signing& s, int row);
// Multiplies every sign of element e by -1.
void ReorientElement(Signing& s, ElementId e);

}  // namespace forge

#endif  // FORGE_SIGNING_H_
