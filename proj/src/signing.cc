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

#include "forge/signing.h"

#include <cstdlib>
#include <numeric>

#include "forge/error.h"

namespace forge {
namespace {

void CheckRows(const Matroid& m, const std::vector<SignRow>& rows,
               const std::vector<ElementSet>& sets, const char* what) {
  if (rows.size() != sets.size()) {
    throw Error(ErrorKind::kDomainMismatch, std::string(what) + ": expected " +
                                                std::to_string(sets.size()) +
                                                " rows, got " +
                                                std::to_string(rows.size()));
  }
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != m.size()) {
      throw Error(ErrorKind::kDomainMismatch, std::string(what) + " row " +
                                                  m.Describe(sets[i]) +
                                                  " has the wrong length");
    }
    for (ElementId e = 0; e < m.size(); ++e) {
      const int v = rows[i][e];
      const bool ok = sets[i].Contains(e) ? (v == 1 || v == -1) : v == 0;
      if (!ok) {
        throw Error(ErrorKind::kDomainMismatch,
                    std::string(what) + " row " + m.Describe(sets[i]) +
                        " has a bad value at '" + m.label(e) + "'");
      }
    }
  }
}

// Backtracking over the signs of one connected component. Variables are
// (row, element) incidences; each circuit-cocircuit pair contributes the
// constraint that its signed products sum to zero.
class SignSearch {
 public:
  SignSearch(const Matroid& m, ElementSet component) : m_(m) {
    for (int i = 0; i < static_cast<int>(m.circuits().size()); ++i) {
      if (m.circuits()[i].IsSubsetOf(component)) AddRow(false, i);
    }
    for (int j = 0; j < static_cast<int>(m.cocircuits().size()); ++j) {
      if (m.cocircuits()[j].IsSubsetOf(component)) AddRow(true, j);
    }
    value_.assign(vars_.size(), 0);
    occurrences_.resize(vars_.size());
    for (const Row& o : rows_) {
      if (o.cocircuit) continue;
      for (const Row& b : rows_) {
        if (!b.cocircuit) continue;
        const ElementSet meet = m.circuits()[o.index] & m.cocircuits()[b.index];
        if (meet.empty()) continue;
        if (meet.size() % 2 != 0) infeasible_ = true;
        Constraint c;
        c.unknown = meet.size();
        const int id = static_cast<int>(constraints_.size());
        for (ElementId e : meet) {
          const int a = o.first_var + Rank(o, e);
          const int d = b.first_var + Rank(b, e);
          c.terms.push_back({a, d});
          occurrences_[a].push_back({id, d});
          occurrences_[d].push_back({id, a});
        }
        constraints_.push_back(std::move(c));
      }
    }
  }

  bool Run(const std::function<bool(const Signing&)>& visit,
           SearchStats* stats) {
    visit_ = &visit;
    stats_ = stats;
    if (infeasible_) return true;
    // A variable set can be pinned to +1 without loss of generality when it
    // is a forest in the row/element incidence graph: row flips and element
    // reorientations act on it independently.
    std::vector<int> parent(rows_.size() + m_.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (int v = 0; v < static_cast<int>(vars_.size()); ++v) {
      const int a = find(vars_[v].row);
      const int b = find(static_cast<int>(rows_.size()) + vars_[v].element);
      if (a == b) continue;
      parent[a] = b;
      if (!Set(v, 1)) return true;
    }
    if (!Propagate()) return true;
    return Search();
  }

 private:
  struct Row {
    bool cocircuit = false;
    int index = 0;
    int first_var = 0;
  };
  struct Var {
    int row = 0;
    ElementId element = 0;
  };
  struct Term {
    int a = 0;
    int b = 0;
  };
  struct Constraint {
    std::vector<Term> terms;
    int sum = 0;
    int unknown = 0;
  };
  struct Occurrence {
    int constraint = 0;
    int partner = 0;
  };

  ElementSet SetOf(const Row& r) const {
    return r.cocircuit ? m_.cocircuits()[r.index] : m_.circuits()[r.index];
  }

  int Rank(const Row& r, ElementId e) const {
    return (SetOf(r) & ElementSet::Range(e)).size();
  }

  void AddRow(bool cocircuit, int index) {
    Row r{cocircuit, index, static_cast<int>(vars_.size())};
    for (ElementId e : SetOf(r)) {
      vars_.push_back({static_cast<int>(rows_.size()), e});
    }
    rows_.push_back(r);
  }

  static bool Tight(const Constraint& c) {
    return c.unknown > 0 && std::abs(c.sum) == c.unknown;
  }

  bool Set(int v, int val) {
    if (value_[v] != 0) return value_[v] == val;
    value_[v] = static_cast<std::int8_t>(val);
    trail_.push_back(v);
    bool ok = true;
    for (const Occurrence& occ : occurrences_[v]) {
      Constraint& c = constraints_[occ.constraint];
      if (value_[occ.partner] != 0) {
        c.sum += val * value_[occ.partner];
        --c.unknown;
        if (std::abs(c.sum) > c.unknown) ok = false;
      }
      if (Tight(c)) pending_.push_back(occ.constraint);
    }
    return ok;
  }

  bool Propagate() {
    while (!pending_.empty()) {
      const int id = pending_.back();
      pending_.pop_back();
      const Constraint& c = constraints_[id];
      if (!Tight(c)) continue;
      const int need = c.sum > 0 ? -1 : 1;
      for (const Term& t : c.terms) {
        const int va = value_[t.a];
        const int vb = value_[t.b];
        bool ok = true;
        if (va != 0 && vb == 0) {
          ok = Set(t.b, need * va);
        } else if (va == 0 && vb != 0) {
          ok = Set(t.a, need * vb);
        }
        if (!ok) {
          pending_.clear();
          return false;
        }
      }
    }
    return true;
  }

  void Undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const int v = trail_.back();
      trail_.pop_back();
      for (const Occurrence& occ : occurrences_[v]) {
        if (value_[occ.partner] == 0) continue;
        Constraint& c = constraints_[occ.constraint];
        c.sum -= value_[v] * value_[occ.partner];
        ++c.unknown;
      }
      value_[v] = 0;
    }
    pending_.clear();
  }

  // Unassigned variable with the most assigned partners; ties to the least.
  int Pick() const {
    int best = -1;
    int best_score = -1;
    for (int v = 0; v < static_cast<int>(vars_.size()); ++v) {
      if (value_[v] != 0) continue;
      int score = 0;
      for (const Occurrence& occ : occurrences_[v]) {
        if (value_[occ.partner] != 0) ++score;
      }
      if (score > best_score) {
        best = v;
        best_score = score;
      }
    }
    return best;
  }

  bool Search() {
    if (stats_ != nullptr) ++stats_->nodes;
    const int v = Pick();
    if (v < 0) {
      if (stats_ != nullptr) ++stats_->solutions;
      return (*visit_)(Build());
    }
    for (int val : {1, -1}) {
      const std::size_t mark = trail_.size();
      if (Set(v, val) && Propagate()) {
        if (!Search()) {
          Undo(mark);
          return false;
        }
      }
      Undo(mark);
    }
    return true;
  }

  Signing Build() const {
    Signing s;
    s.c.assign(m_.circuits().size(), SignRow(m_.size(), 0));
    s.d.assign(m_.cocircuits().size(), SignRow(m_.size(), 0));
    for (int v = 0; v < static_cast<int>(vars_.size()); ++v) {
      const Row& r = rows_[vars_[v].row];
      auto& rows = r.cocircuit ? s.d : s.c;
      rows[r.index][vars_[v].element] = value_[v];
    }
    return s;
  }

  const Matroid& m_;
  std::vector<Row> rows_;
  std::vector<Var> vars_;
  std::vector<Constraint> constraints_;
  std::vector<std::vector<Occurrence>> occurrences_;
  std::vector<std::int8_t> value_;
  std::vector<int> trail_;
  std::vector<int> pending_;
  bool infeasible_ = false;
  const std::function<bool(const Signing&)>* visit_ = nullptr;
  SearchStats* stats_ = nullptr;
};

void MergeRows(std::vector<SignRow>& into, const std::vector<SignRow>& from) {
  for (std::size_t i = 0; i < into.size(); ++i) {
    for (std::size_t e = 0; e < into[i].size(); ++e) {
      if (from[i][e] != 0) into[i][e] = from[i][e];
    }
  }
}

}  // namespace

void CheckSigningDomain(const Matroid& m, const Signing& s) {
  CheckRows(m, s.c, m.circuits(), "circuit");
  CheckRows(m, s.d, m.cocircuits(), "cocircuit");
}

SigningReport VerifySigning(const Matroid& m, const Signing& s) {
  CheckSigningDomain(m, s);
  SigningReport report;
  for (int i = 0; i < static_cast<int>(m.circuits().size()); ++i) {
    for (int j = 0; j < static_cast<int>(m.cocircuits().size()); ++j) {
      int sum = 0;
      for (ElementId e : m.circuits()[i] & m.cocircuits()[j]) {
        sum += s.c[i][e] * s.d[j][e];
      }
      if (sum != 0) {
        report.valid = false;
        report.violation = CircuitCocircuitPair{i, j};
        report.sum = sum;
        return report;
      }
    }
  }
  return report;
}

Signing SigningFromOrientedGraph(const Multigraph& g, const Matroid& m,
                                 const std::vector<CycleTraversal>& walks,
                                 const std::vector<BondSides>& sides) {
  if (m.labels() != g.EdgeLabels()) {
    throw Error(ErrorKind::kLabelMismatch,
                "graph edges and matroid elements differ");
  }
  if (walks.size() != m.circuits().size() ||
      sides.size() != m.cocircuits().size()) {
    throw Error(ErrorKind::kDomainMismatch,
                "one walk per circuit and one side labeling per cocircuit");
  }
  Signing s;
  for (std::size_t i = 0; i < walks.size(); ++i) {
    const std::vector<int> signs = TraversalSigns(g, m.circuits()[i], walks[i]);
    s.c.emplace_back(signs.begin(), signs.end());
  }
  for (std::size_t j = 0; j < sides.size(); ++j) {
    const ElementSet b = m.cocircuits()[j];
    CheckBondSides(g, b, sides[j]);
    SignRow row(m.size(), 0);
    for (ElementId e : b) row[e] = sides[j].side[g.edge(e).tail] < 0 ? 1 : -1;
    s.d.push_back(std::move(row));
  }
  return s;
}

Signing SigningFromOrientedGraph(const Multigraph& g, const Matroid& m) {
  std::vector<CycleTraversal> walks;
  for (ElementSet o : m.circuits()) walks.push_back(DefaultTraversal(g, o));
  std::vector<BondSides> sides;
  for (ElementSet b : m.cocircuits()) sides.push_back(DefaultBondSides(g, b));
  return SigningFromOrientedGraph(g, m, walks, sides);
}

bool EnumerateSignings(const Matroid& m, ElementSet component,
                       const std::function<bool(const Signing&)>& visit,
                       SearchStats* stats) {
  SignSearch search(m, component);
  const bool finished = search.Run(visit, stats);
  if (stats != nullptr) stats->exhausted = finished;
  return finished;
}

std::optional<Signing> FindSigning(const Matroid& m, SearchStats* stats) {
  Signing result;
  result.c.assign(m.circuits().size(), SignRow(m.size(), 0));
  result.d.assign(m.cocircuits().size(), SignRow(m.size(), 0));
  SearchStats total;
  for (ElementSet component : ConnectedComponents(m)) {
    std::optional<Signing> found;
    SearchStats local;
    EnumerateSignings(
        m, component,
        [&](const Signing& s) {
          found = s;
          return false;
        },
        &local);
    total.nodes += local.nodes;
    total.solutions += local.solutions;
    if (!found) {
      total.exhausted = true;
      if (stats != nullptr) *stats = total;
      return std::nullopt;
    }
    MergeRows(result.c, found->c);
    MergeRows(result.d, found->d);
  }
  if (stats != nullptr) *stats = total;
  return result;
}

void FlipCircuitRow(Signing& s, int row) {
  for (auto& v : s.c[row]) v = static_cast<std::int8_t>(-v);
}

void FlipCocircuitRow(Signing& s, int row) {
  for (auto& v : s.d[row]) v = static_cast<std::int8_t>(-v);
}

void ReorientElement(Signing& s, ElementId e) {
  for (auto& row : s.c) row[e] = static_cast<std::int8_t>(-row[e]);
  for (auto& row : s.d) row[e] = static_cast<std::int8_t>(-row[e]);
}

}  // namespace forge
