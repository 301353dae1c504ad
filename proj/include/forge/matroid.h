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

// Finite matroids given by their circuits. Every derived family (bases,
// cocircuits, the rank function) is computed once at construction by
// enumerating subsets of the ground set, so the ground set is capped.

#ifndef FORGE_MATROID_H_
#define FORGE_MATROID_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "forge/element_set.h"

namespace forge {

inline constexpr int kDefaultGroundCap = 16;
// Rank tables hold 2^n entries; this bounds any configured cap.
inline constexpr int kHardGroundLimit = 24;

struct MatroidOptions {
  int ground_cap = kDefaultGroundCap;
};

// Whether FromCircuits re-checks the circuit axioms.
enum class Validation { kFull, kTrusted };

// An immutable finite matroid. Elements are identified by dense ids that
// follow the lexicographic order of their labels, so "lexicographically
// least" anywhere in the library means least in id order. Circuits and
// cocircuits are kept in canonical order (size, then lexicographic).
// Copies share state and are cheap.
class Matroid {
 public:
  // The empty matroid.
  Matroid();

  // Validates (C1), (C2) and pairwise strong circuit elimination.
  // Throws Error with kEmptyCircuit, kNonAntichain, kEliminationFailure,
  // kGroundCapExceeded, kDuplicateLabel or kUnknownElement.
  static Matroid Build(const std::vector<std::string>& ground,
                       const std::vector<std::vector<std::string>>& circuits,
                       const MatroidOptions& options = {});

  // Circuits given as masks over `labels` (in the order given). Labels are
  // sorted and the masks remapped. With kTrusted only the cap and label
  // checks run.
  static Matroid FromCircuits(const std::vector<std::string>& labels,
                              const std::vector<ElementSet>& circuits,
                              Validation validation,
                              const MatroidOptions& options = {});

  int size() const { return static_cast<int>(data_->labels.size()); }
  ElementSet ground() const { return ElementSet::Range(size()); }
  const std::vector<std::string>& labels() const { return data_->labels; }
  const std::string& label(ElementId id) const { return data_->labels[id]; }
  std::optional<ElementId> Find(const std::string& label) const;
  // Throws kUnknownElement.
  ElementId IndexOf(const std::string& label) const;
  ElementSet SetOf(const std::vector<std::string>& labels) const;
  std::vector<std::string> LabelsOf(ElementSet set) const;
  // "{a,b,c}" for diagnostics.
  std::string Describe(ElementSet set) const;

  const std::vector<ElementSet>& circuits() const { return data_->circuits; }
  const std::vector<ElementSet>& cocircuits() const {
    return data_->cocircuits;
  }
  // Bases in lexicographic order.
  const std::vector<ElementSet>& bases() const { return data_->bases; }
  int rank() const { return data_->rank; }
  int Rank(ElementSet set) const { return data_->rank_table[set.bits()]; }

  bool IsIndependent(ElementSet set) const { return Rank(set) == set.size(); }
  bool IsBase(ElementSet set) const {
    return set.size() == rank() && IsIndependent(set);
  }
  bool IsSpanning(ElementSet set) const { return Rank(set) == rank(); }
  std::optional<int> CircuitIndex(ElementSet set) const;
  std::optional<int> CocircuitIndex(ElementSet set) const;
  bool IsCircuit(ElementSet set) const { return CircuitIndex(set).has_value(); }
  bool IsCocircuit(ElementSet set) const {
    return CocircuitIndex(set).has_value();
  }
  ElementSet Loops() const;
  ElementSet Coloops() const;

  // Greedy maximal independent subset of `within`, scanning ids upwards;
  // this is the lexicographically least base of the restriction.
  ElementSet LexLeastBaseOf(ElementSet within) const;

  friend bool operator==(const Matroid& a, const Matroid& b);

 private:
  struct Data {
    std::vector<std::string> labels;
    std::vector<ElementSet> circuits;
    std::vector<ElementSet> cocircuits;
    std::vector<ElementSet> bases;
    std::vector<std::uint8_t> rank_table;
    int rank = 0;
  };

  explicit Matroid(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

// The dual matroid: circuits are the cocircuits of `m`.
Matroid Dual(const Matroid& m);

// m / contract \ remove. Throws kOverlappingSets.
Matroid Minor(const Matroid& m, ElementSet contract, ElementSet remove);

// Maps a set of `from` elements to the elements of `to` with equal labels.
// Throws kUnknownElement when a label is missing in `to`.
ElementSet TranslateSet(const Matroid& from, ElementSet set, const Matroid& to);

// Fundamental circuit of x (x outside base) or fundamental cocircuit of x
// (x in base). Throws kNotABase.
ElementSet FundamentalSet(const Matroid& m, ElementSet base, ElementId x);

// Connected components (classes of the "lie on a common circuit" relation).
std::vector<ElementSet> ConnectedComponents(const Matroid& m);
bool IsConnected(const Matroid& m);

struct SeparationWitness {
  ElementSet side_a;
  ElementSet side_b;
  int k = 0;
  ElementSet base_a;  // s_A, a base of the restriction to side_a
  ElementSet base_b;  // s_B
  ElementSet base;    // s, a base of M inside s_A ∪ s_B
};

struct ConnectivityReport {
  int k = 0;
  bool k_connected = false;
  // Smallest-order separation found, side_a lexicographically least.
  std::optional<SeparationWitness> witness;
  // For k == 2: the verdict of the common-circuit characterization.
  std::optional<bool> common_circuit_connected;
};

// Order r(A) + r(B) - r(M) of the bipartition (A, E \ A).
int SeparationOrder(const Matroid& m, ElementSet side_a);

ConnectivityReport Connectivity(const Matroid& m, int k);

// Shortest switching sequence from e to f for `base`. Throws kNotABase or
// kDisconnected.
std::vector<ElementId> SwitchingSequence(const Matroid& m, ElementSet base,
                                         ElementId e, ElementId f);

struct CircuitCocircuitPair {
  int circuit = -1;
  int cocircuit = -1;
};

struct BinaryReport {
  bool binary = true;
  bool orthogonal = true;
  // First pair with an odd intersection (when not binary).
  std::optional<CircuitCocircuitPair> odd_pair;
  // First pair meeting in exactly one element (when not orthogonal).
  std::optional<CircuitCocircuitPair> singleton_pair;
  // Present when a set to decompose was supplied and peeling completed.
  std::optional<std::vector<ElementSet>> decomposition;
  // Present when a union-of-circuits query was supplied.
  std::optional<bool> union_of_circuits;
  std::optional<bool> never_meets_cocircuit_once;
};

// Greedily peels canonical-order cocircuits contained in x. Throws
// kDecompositionRequestedOnOddSet unless x meets every circuit evenly.
// Returns nullopt if peeling stalls, which cannot happen for binary m.
std::optional<std::vector<ElementSet>> DisjointCocircuitDecomposition(
    const Matroid& m, ElementSet x);

BinaryReport BinaryTameReport(const Matroid& m,
                              std::optional<ElementSet> decompose = {},
                              std::optional<ElementSet> union_query = {});

}  // namespace forge

#endif  // FORGE_MATROID_H_
