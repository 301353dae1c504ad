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

#include "forge/matroid.h"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "forge/error.h"

namespace forge {
namespace {

void CheckCap(int n, const MatroidOptions& options) {
  const int cap = std::min(options.ground_cap, kHardGroundLimit);
  if (n > cap) {
    throw Error(ErrorKind::kGroundCapExceeded,
                "ground set has " + std::to_string(n) + " elements, cap is " +
                    std::to_string(cap));
  }
}

// Keeps the inclusion-minimal nonempty members, in canonical order.
std::vector<ElementSet> MinimalMembers(std::vector<ElementSet> family) {
  std::sort(family.begin(), family.end(), CanonicalLess);
  family.erase(std::unique(family.begin(), family.end()), family.end());
  std::vector<ElementSet> kept;
  for (ElementSet s : family) {
    if (s.empty()) continue;
    bool minimal = true;
    for (ElementSet k : kept) {
      if (k.IsSubsetOf(s)) {
        minimal = false;
        break;
      }
    }
    if (minimal) kept.push_back(s);
  }
  return kept;
}

// cover[X] = union of all circuits contained in X.
std::vector<std::uint32_t> CircuitCover(int n,
                                        const std::vector<ElementSet>& cs) {
  const std::uint32_t full = std::uint32_t{1} << n;
  std::vector<std::uint32_t> cover(full, 0);
  for (ElementSet c : cs) cover[c.bits()] = c.bits();
  for (int i = 0; i < n; ++i) {
    const std::uint32_t bit = std::uint32_t{1} << i;
    for (std::uint32_t x = 0; x < full; ++x) {
      if (x & bit) cover[x] |= cover[x ^ bit];
    }
  }
  return cover;
}

std::string DescribeLabels(const std::vector<std::string>& labels,
                           ElementSet set) {
  std::string out = "{";
  bool first = true;
  for (ElementId id : set) {
    if (!first) out += ",";
    out += labels[id];
    first = false;
  }
  return out + "}";
}

}  // namespace

Matroid::Matroid() : Matroid(FromCircuits({}, {}, Validation::kTrusted)) {}

Matroid Matroid::Build(const std::vector<std::string>& ground,
                       const std::vector<std::vector<std::string>>& circuits,
                       const MatroidOptions& options) {
  CheckCap(static_cast<int>(ground.size()), options);
  std::map<std::string, ElementId> index;
  for (std::size_t i = 0; i < ground.size(); ++i) {
    if (!index.emplace(ground[i], static_cast<ElementId>(i)).second) {
      throw Error(ErrorKind::kDuplicateLabel, "label '" + ground[i] + "'");
    }
  }
  std::vector<ElementSet> masks;
  for (const auto& circuit : circuits) {
    ElementSet mask;
    for (const auto& label : circuit) {
      auto it = index.find(label);
      if (it == index.end()) {
        throw Error(ErrorKind::kUnknownElement,
                    "circuit mentions '" + label + "'");
      }
      mask.Insert(it->second);
    }
    masks.push_back(mask);
  }
  return FromCircuits(ground, masks, Validation::kFull, options);
}

Matroid Matroid::FromCircuits(const std::vector<std::string>& labels,
                              const std::vector<ElementSet>& circuits,
                              Validation validation,
                              const MatroidOptions& options) {
  const int n = static_cast<int>(labels.size());
  CheckCap(n, options);

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return labels[a] < labels[b]; });
  std::vector<int> new_id(n);
  auto data = std::make_shared<Data>();
  for (int i = 0; i < n; ++i) {
    new_id[order[i]] = i;
    data->labels.push_back(labels[order[i]]);
    if (i > 0 && data->labels[i] == data->labels[i - 1]) {
      throw Error(ErrorKind::kDuplicateLabel,
                  "label '" + data->labels[i] + "'");
    }
  }

  std::vector<ElementSet> remapped;
  remapped.reserve(circuits.size());
  for (ElementSet c : circuits) {
    ElementSet r;
    for (ElementId id : c) {
      if (id >= n) {
        throw Error(ErrorKind::kUnknownElement,
                    "circuit mentions element " + std::to_string(id));
      }
      r.Insert(new_id[id]);
    }
    remapped.push_back(r);
  }
  std::sort(remapped.begin(), remapped.end(), CanonicalLess);
  remapped.erase(std::unique(remapped.begin(), remapped.end()), remapped.end());

  if (validation == Validation::kFull) {
    for (ElementSet c : remapped) {
      if (c.empty()) {
        throw Error(ErrorKind::kEmptyCircuit, "the empty set is listed");
      }
    }
    for (std::size_t i = 0; i < remapped.size(); ++i) {
      for (std::size_t j = i + 1; j < remapped.size(); ++j) {
        // Canonical order puts a smaller set first.
        if (remapped[i].IsSubsetOf(remapped[j])) {
          throw Error(ErrorKind::kNonAntichain,
                      DescribeLabels(data->labels, remapped[i]) +
                          " is contained in " +
                          DescribeLabels(data->labels, remapped[j]));
        }
      }
    }
  }

  const std::vector<std::uint32_t> cover = CircuitCover(n, remapped);

  if (validation == Validation::kFull) {
    for (std::size_t i = 0; i < remapped.size(); ++i) {
      for (std::size_t j = i + 1; j < remapped.size(); ++j) {
        const ElementSet a = remapped[i];
        const ElementSet b = remapped[j];
        const ElementSet shared = a & b;
        if (shared.empty()) continue;
        const ElementSet both = a | b;
        const ElementSet outside = a ^ b;
        for (ElementId e : shared) {
          const ElementSet reachable(cover[both.Without(e).bits()]);
          const ElementSet missing = outside - reachable;
          if (!missing.empty()) {
            throw Error(ErrorKind::kEliminationFailure,
                        "circuits " + DescribeLabels(data->labels, a) +
                            " and " + DescribeLabels(data->labels, b) +
                            " share " + data->labels[e] +
                            " but no circuit inside their union"
                            " minus it contains " +
                            data->labels[missing.First()]);
          }
        }
      }
    }
  }

  const std::uint32_t full = std::uint32_t{1} << n;
  data->rank_table.assign(full, 0);
  for (std::uint32_t x = 1; x < full; ++x) {
    if (cover[x] == 0) {
      data->rank_table[x] = static_cast<std::uint8_t>(std::popcount(x));
      continue;
    }
    std::uint8_t best = 0;
    for (std::uint32_t rest = x; rest != 0; rest &= rest - 1) {
      const std::uint32_t bit = rest & (~rest + 1);
      best = std::max(best, data->rank_table[x ^ bit]);
    }
    data->rank_table[x] = best;
  }
  data->rank = data->rank_table[full - 1];

  for (std::uint32_t x = 0; x < full; ++x) {
    if (cover[x] == 0 && std::popcount(x) == data->rank) {
      data->bases.push_back(ElementSet(x));
    }
  }
  std::sort(data->bases.begin(), data->bases.end(), LexLess);

  // Cocircuits: minimal sets whose complement is not spanning.
  const std::uint32_t all = full - 1;
  for (std::uint32_t x = 1; x < full; ++x) {
    if (data->rank_table[all ^ x] == data->rank) continue;
    bool minimal = true;
    for (std::uint32_t rest = x; rest != 0; rest &= rest - 1) {
      const std::uint32_t bit = rest & (~rest + 1);
      if (data->rank_table[all ^ (x ^ bit)] < data->rank) {
        minimal = false;
        break;
      }
    }
    if (minimal) data->cocircuits.push_back(ElementSet(x));
  }
  std::sort(data->cocircuits.begin(), data->cocircuits.end(), CanonicalLess);

  data->circuits = std::move(remapped);
  return Matroid(std::move(data));
}

std::optional<ElementId> Matroid::Find(const std::string& label) const {
  const auto& ls = data_->labels;
  auto it = std::lower_bound(ls.begin(), ls.end(), label);
  if (it == ls.end() || *it != label) return std::nullopt;
  return static_cast<ElementId>(it - ls.begin());
}

ElementId Matroid::IndexOf(const std::string& label) const {
  auto id = Find(label);
  if (!id)
    throw Error(ErrorKind::kUnknownElement, "no element '" + label + "'");
  return *id;
}

ElementSet Matroid::SetOf(const std::vector<std::string>& labels) const {
  ElementSet set;
  for (const auto& l : labels) set.Insert(IndexOf(l));
  return set;
}

std::vector<std::string> Matroid::LabelsOf(ElementSet set) const {
  std::vector<std::string> out;
  for (ElementId id : set) out.push_back(label(id));
  return out;
}

std::string Matroid::Describe(ElementSet set) const {
  return DescribeLabels(data_->labels, set);
}

std::optional<int> Matroid::CircuitIndex(ElementSet set) const {
  const auto& cs = data_->circuits;
  auto it = std::lower_bound(cs.begin(), cs.end(), set, CanonicalLess);
  if (it == cs.end() || *it != set) return std::nullopt;
  return static_cast<int>(it - cs.begin());
}

std::optional<int> Matroid::CocircuitIndex(ElementSet set) const {
  const auto& cs = data_->cocircuits;
  auto it = std::lower_bound(cs.begin(), cs.end(), set, CanonicalLess);
  if (it == cs.end() || *it != set) return std::nullopt;
  return static_cast<int>(it - cs.begin());
}

ElementSet Matroid::Loops() const {
  ElementSet loops;
  for (ElementSet c : data_->circuits) {
    if (c.size() == 1) loops |= c;
  }
  return loops;
}

ElementSet Matroid::Coloops() const {
  ElementSet coloops;
  for (ElementSet b : data_->cocircuits) {
    if (b.size() == 1) coloops |= b;
  }
  return coloops;
}

ElementSet Matroid::LexLeastBaseOf(ElementSet within) const {
  ElementSet base;
  for (ElementId id : within) {
    if (IsIndependent(base.With(id))) base.Insert(id);
  }
  return base;
}

bool operator==(const Matroid& a, const Matroid& b) {
  return a.labels() == b.labels() && a.circuits() == b.circuits();
}

Matroid Dual(const Matroid& m) {
  return Matroid::FromCircuits(m.labels(), m.cocircuits(), Validation::kTrusted,
                               {.ground_cap = kHardGroundLimit});
}

Matroid Minor(const Matroid& m, ElementSet contract, ElementSet remove) {
  if (contract.Intersects(remove)) {
    throw Error(ErrorKind::kOverlappingSets,
                "contract " + m.Describe(contract) + " and delete " +
                    m.Describe(remove) + " overlap");
  }
  const ElementSet kept = m.ground() - contract - remove;
  std::vector<int> new_id(m.size(), -1);
  std::vector<std::string> labels;
  for (ElementId id : kept) {
    new_id[id] = static_cast<int>(labels.size());
    labels.push_back(m.label(id));
  }
  std::vector<ElementSet> candidates;
  for (ElementSet o : m.circuits()) {
    if (o.Intersects(remove)) continue;
    const ElementSet rest = o - contract;
    if (!rest.empty()) candidates.push_back(rest);
  }
  std::vector<ElementSet> circuits;
  for (ElementSet c : MinimalMembers(std::move(candidates))) {
    ElementSet r;
    for (ElementId id : c) r.Insert(new_id[id]);
    circuits.push_back(r);
  }
  return Matroid::FromCircuits(labels, circuits, Validation::kTrusted,
                               {.ground_cap = kHardGroundLimit});
}

ElementSet TranslateSet(const Matroid& from, ElementSet set,
                        const Matroid& to) {
  ElementSet out;
  for (ElementId id : set) out.Insert(to.IndexOf(from.label(id)));
  return out;
}

ElementSet FundamentalSet(const Matroid& m, ElementSet base, ElementId x) {
  if (!base.IsSubsetOf(m.ground()) || !m.IsBase(base)) {
    throw Error(ErrorKind::kNotABase, m.Describe(base) + " is not a base");
  }
  if (!base.Contains(x)) {
    const ElementSet allowed = base.With(x);
    for (ElementSet o : m.circuits()) {
      if (o.Contains(x) && o.IsSubsetOf(allowed)) return o;
    }
  } else {
    const ElementSet allowed = (m.ground() - base).With(x);
    for (ElementSet b : m.cocircuits()) {
      if (b.Contains(x) && b.IsSubsetOf(allowed)) return b;
    }
  }
  // Unreachable for a genuine matroid.
  throw Error(ErrorKind::kNotABase, "no fundamental set for " + m.label(x) +
                                        " in " + m.Describe(base));
}

std::vector<ElementSet> ConnectedComponents(const Matroid& m) {
  const int n = m.size();
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (ElementSet o : m.circuits()) {
    const int root = find(o.First());
    for (ElementId id : o) parent[find(id)] = root;
  }
  std::vector<ElementSet> by_root(n);
  for (int i = 0; i < n; ++i) by_root[find(i)].Insert(i);
  std::vector<ElementSet> components;
  for (ElementSet c : by_root) {
    if (!c.empty()) components.push_back(c);
  }
  std::sort(components.begin(), components.end(), LexLess);
  return components;
}

bool IsConnected(const Matroid& m) {
  return ConnectedComponents(m).size() <= 1;
}

int SeparationOrder(const Matroid& m, ElementSet side_a) {
  const ElementSet side_b = m.ground() - side_a;
  return m.Rank(side_a) + m.Rank(side_b) - m.rank();
}

ConnectivityReport Connectivity(const Matroid& m, int k) {
  if (k < 1) throw Error(ErrorKind::kInvalidArgument, "k must be positive");
  ConnectivityReport report;
  report.k = k;
  const int n = m.size();
  const std::uint32_t full = std::uint32_t{1} << n;
  for (int l = 1; l < k && !report.witness; ++l) {
    if (n < 2 * l) break;
    std::optional<ElementSet> best;
    for (std::uint32_t bits = 1; bits + 1 < full; ++bits) {
      const ElementSet a(bits);
      if (a.size() < l || n - a.size() < l) continue;
      if (SeparationOrder(m, a) >= l) continue;
      if (!best || LexLess(a, *best)) best = a;
    }
    if (best) {
      SeparationWitness w;
      w.k = l;
      w.side_a = *best;
      w.side_b = m.ground() - *best;
      w.base_a = m.LexLeastBaseOf(w.side_a);
      w.base_b = m.LexLeastBaseOf(w.side_b);
      w.base = m.LexLeastBaseOf(w.base_a | w.base_b);
      report.witness = w;
    }
  }
  report.k_connected = !report.witness.has_value();

  if (k == 2) {
    std::vector<ElementSet> together(n);
    for (ElementSet o : m.circuits()) {
      for (ElementId id : o) together[id] |= o;
    }
    bool all_pairs = true;
    for (int i = 0; i < n; ++i) {
      if (!(m.ground().Without(i)).IsSubsetOf(together[i])) all_pairs = false;
    }
    report.common_circuit_connected = all_pairs;
  }
  return report;
}

std::vector<ElementId> SwitchingSequence(const Matroid& m, ElementSet base,
                                         ElementId e, ElementId f) {
  if (!m.IsBase(base)) {
    throw Error(ErrorKind::kNotABase, m.Describe(base) + " is not a base");
  }
  const int n = m.size();
  std::vector<ElementSet> step(n);
  for (int x = 0; x < n; ++x) step[x] = FundamentalSet(m, base, x).Without(x);

  std::vector<int> previous(n, -2);
  std::deque<int> queue{e};
  previous[e] = -1;
  while (!queue.empty()) {
    const int x = queue.front();
    queue.pop_front();
    if (x == f) break;
    for (ElementId y : step[x]) {
      if (previous[y] != -2) continue;
      previous[y] = x;
      queue.push_back(y);
    }
  }
  if (previous[f] == -2) {
    throw Error(ErrorKind::kDisconnected, "no switching sequence from " +
                                              m.label(e) + " to " + m.label(f));
  }
  std::vector<ElementId> sequence;
  for (int x = f; x != -1; x = previous[x]) sequence.push_back(x);
  std::reverse(sequence.begin(), sequence.end());
  return sequence;
}

std::optional<std::vector<ElementSet>> DisjointCocircuitDecomposition(
    const Matroid& m, ElementSet x) {
  for (ElementSet o : m.circuits()) {
    if ((o & x).size() % 2 != 0) {
      throw Error(ErrorKind::kDecompositionRequestedOnOddSet,
                  m.Describe(x) + " meets circuit " + m.Describe(o) + " oddly");
    }
  }
  std::vector<ElementSet> parts;
  ElementSet rest = x;
  while (!rest.empty()) {
    bool peeled = false;
    for (ElementSet b : m.cocircuits()) {
      if (b.IsSubsetOf(rest)) {
        parts.push_back(b);
        rest -= b;
        peeled = true;
        break;
      }
    }
    if (!peeled) return std::nullopt;
  }
  return parts;
}

BinaryReport BinaryTameReport(const Matroid& m,
                              std::optional<ElementSet> decompose,
                              std::optional<ElementSet> union_query) {
  BinaryReport report;
  const auto& cs = m.circuits();
  const auto& ds = m.cocircuits();
  for (int i = 0; i < static_cast<int>(cs.size()); ++i) {
    for (int j = 0; j < static_cast<int>(ds.size()); ++j) {
      const int meet = (cs[i] & ds[j]).size();
      if (meet % 2 != 0 && !report.odd_pair) {
        report.binary = false;
        report.odd_pair = CircuitCocircuitPair{i, j};
      }
      if (meet == 1 && !report.singleton_pair) {
        report.orthogonal = false;
        report.singleton_pair = CircuitCocircuitPair{i, j};
      }
    }
  }
  if (decompose) {
    report.decomposition = DisjointCocircuitDecomposition(m, *decompose);
  }
  if (union_query) {
    const ElementSet w = *union_query;
    bool never_once = true;
    for (ElementSet b : ds) {
      if ((b & w).size() == 1) never_once = false;
    }
    ElementSet covered;
    for (ElementSet o : cs) {
      if (o.IsSubsetOf(w)) covered |= o;
    }
    report.never_meets_cocircuit_once = never_once;
    report.union_of_circuits = covered == w;
  }
  return report;
}

}  // namespace forge
