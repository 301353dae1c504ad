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

#include "forge/framework.h"

#include <algorithm>
#include <map>
#include <utility>

#include "forge/error.h"

namespace forge {
namespace {

// [e, f, g] in R_o, read off the witness cocircuit b of the pair {e, f}.
bool InOrder(const GraphFramework& fw, int circuit, int b, ElementId f,
             ElementId g) {
  return fw.sigma[b][g] == fw.signing.c[circuit][f] * fw.signing.d[b][f];
}

// Witness cocircuit of every pair of elements of `o`, keyed by (e, f) with
// e < f.
std::map<std::pair<int, int>, int> Witnesses(const Matroid& m, ElementSet o) {
  std::map<std::pair<int, int>, int> out;
  for (int j = 0; j < static_cast<int>(m.cocircuits().size()); ++j) {
    const ElementSet meet = o & m.cocircuits()[j];
    if (meet.size() != 2) continue;
    const std::vector<ElementId> ef = meet.ToVector();
    out.emplace(std::make_pair(ef[0], ef[1]), j);
  }
  return out;
}

std::set<Triple> DerivedTriples(
    const Matroid& m, const GraphFramework& fw, int circuit,
    const std::map<std::pair<int, int>, int>& witnesses,
    std::optional<std::pair<int, int>>* missing) {
  const ElementSet o = m.circuits()[circuit];
  std::set<Triple> triples;
  for (ElementId e : o) {
    for (ElementId f : o) {
      if (f <= e) continue;
      auto it = witnesses.find({e, f});
      if (it == witnesses.end()) {
        if (missing != nullptr && !missing->has_value()) *missing = {e, f};
        continue;
      }
      for (ElementId g : o - ElementSet{e, f}) {
        if (InOrder(fw, circuit, it->second, f, g)) triples.insert({e, f, g});
        if (InOrder(fw, circuit, it->second, e, g)) triples.insert({f, e, g});
      }
    }
  }
  return triples;
}

std::string CheckNameWithDetail(FrameworkCheck check, const std::string& d) {
  return std::string(FrameworkCheckName(check)) + ": " + d;
}

}  // namespace

std::string_view FrameworkCheckName(FrameworkCheck check) {
  switch (check) {
    case FrameworkCheck::kSigning:
      return "signing";
    case FrameworkCheck::kWellDefined:
      return "well-definedness";
    case FrameworkCheck::kCyclicOrder:
      return "cyclic order";
    case FrameworkCheck::kCondition1:
      return "condition 1";
    case FrameworkCheck::kCondition2:
      return "condition 2";
    case FrameworkCheck::kCondition3:
      return "condition 3";
    case FrameworkCheck::kCondition4:
      return "condition 4";
  }
  return "unknown";
}

void CheckFrameworkDomain(const Matroid& m, const GraphFramework& f) {
  CheckSigningDomain(m, f.signing);
  if (f.sigma.size() != m.cocircuits().size()) {
    throw Error(ErrorKind::kDomainMismatch,
                "sigma: expected " + std::to_string(m.cocircuits().size()) +
                    " rows, got " + std::to_string(f.sigma.size()));
  }
  for (std::size_t j = 0; j < f.sigma.size(); ++j) {
    const ElementSet b = m.cocircuits()[j];
    if (static_cast<int>(f.sigma[j].size()) != m.size()) {
      throw Error(ErrorKind::kDomainMismatch,
                  "sigma row " + m.Describe(b) + " has the wrong length");
    }
    for (ElementId e = 0; e < m.size(); ++e) {
      const int v = f.sigma[j][e];
      const bool ok = b.Contains(e) ? v == 0 : (v == 1 || v == -1);
      if (!ok) {
        throw Error(ErrorKind::kDomainMismatch, "sigma row " + m.Describe(b) +
                                                    " has a bad value at '" +
                                                    m.label(e) + "'");
      }
    }
  }
}

FrameworkReport VerifyFramework(const Matroid& m, const GraphFramework& f) {
  CheckFrameworkDomain(m, f);
  FrameworkReport report;
  auto fail = [&](FrameworkViolation v) {
    report.valid = false;
    report.violation = std::move(v);
    return report;
  };

  const SigningReport signing = VerifySigning(m, f.signing);
  if (!signing.valid) {
    FrameworkViolation v;
    v.check = FrameworkCheck::kSigning;
    v.circuit = signing.violation->circuit;
    v.cocircuit = signing.violation->cocircuit;
    v.detail = "signed intersection sums to " + std::to_string(signing.sum);
    return fail(v);
  }

  const int circuits = static_cast<int>(m.circuits().size());
  for (int i = 0; i < circuits; ++i) {
    const ElementSet o = m.circuits()[i];
    std::map<std::pair<int, int>, int> first;
    for (int j = 0; j < static_cast<int>(m.cocircuits().size()); ++j) {
      const ElementSet meet = o & m.cocircuits()[j];
      if (meet.size() != 2) continue;
      const std::vector<ElementId> ef = meet.ToVector();
      auto [it, inserted] = first.emplace(std::make_pair(ef[0], ef[1]), j);
      if (inserted) continue;
      const int j0 = it->second;
      for (ElementId g : o - meet) {
        if (InOrder(f, i, j0, ef[1], g) != InOrder(f, i, j, ef[1], g)) {
          FrameworkViolation v;
          v.check = FrameworkCheck::kWellDefined;
          v.circuit = i;
          v.cocircuit = j0;
          v.other_cocircuit = j;
          v.e = ef[0];
          v.f = ef[1];
          v.g = g;
          v.detail = "witnesses " + m.Describe(m.cocircuits()[j0]) + " and " +
                     m.Describe(m.cocircuits()[j]) + " disagree on '" +
                     m.label(g) + "'";
          return fail(v);
        }
      }
    }
  }

  std::vector<CyclicOrder> orders;
  for (int i = 0; i < circuits; ++i) {
    const ElementSet o = m.circuits()[i];
    const std::vector<int> items = o.ToVector();
    if (o.size() <= 2) {
      orders.push_back(CyclicOrder::FromSequence(items));
      continue;
    }
    std::optional<std::pair<int, int>> missing;
    const std::set<Triple> triples =
        DerivedTriples(m, f, i, Witnesses(m, o), &missing);
    try {
      orders.push_back(ValidateCyclic(items, triples));
    } catch (const Error& error) {
      FrameworkViolation v;
      v.check = FrameworkCheck::kCyclicOrder;
      v.circuit = i;
      v.detail = error.what();
      if (missing) {
        v.e = missing->first;
        v.f = missing->second;
        v.detail += "; no witness cocircuit for {" + m.label(v.e) + "," +
                    m.label(v.f) + "}";
      }
      return fail(v);
    }
  }

  for (int i = 0; i < circuits; ++i) {
    const ElementSet o = m.circuits()[i];
    const std::vector<int>& cycle = orders[i].items();
    for (int j = 0; j < static_cast<int>(m.cocircuits().size()); ++j) {
      const ElementSet b = m.cocircuits()[j];
      const ElementSet meet = o & b;
      const std::vector<ElementId> rest = (o - b).ToVector();
      const int r = static_cast<int>(rest.size());
      auto cd = [&](ElementId x) {
        return f.signing.c[i][x] * f.signing.d[j][x];
      };
      // T ranges over the subsets of o \ b with at most two elements.
      std::vector<ElementSet> extras{ElementSet{}};
      for (int a = 0; a < r; ++a) {
        extras.push_back(ElementSet{rest[a]});
        for (int c = a + 1; c < r; ++c) {
          extras.push_back(ElementSet{rest[a], rest[c]});
        }
      }
      for (ElementSet extra : extras) {
        const ElementSet s = meet | extra;
        std::vector<ElementId> seq;
        for (int x : cycle) {
          if (s.Contains(x)) seq.push_back(x);
        }
        const int k = static_cast<int>(seq.size());
        if (k < 2) continue;
        for (int a = 0; a < k; ++a) {
          const ElementId p = seq[a];
          const ElementId q = seq[(a + 1) % k];
          const bool pb = b.Contains(p);
          const bool qb = b.Contains(q);
          FrameworkCheck check;
          bool ok;
          if (pb && qb) {
            check = FrameworkCheck::kCondition1;
            ok = cd(p) == -cd(q);
          } else if (!pb && !qb) {
            check = FrameworkCheck::kCondition2;
            ok = f.sigma[j][p] == f.sigma[j][q];
          } else if (pb) {
            check = FrameworkCheck::kCondition3;
            ok = cd(p) == f.sigma[j][q];
          } else {
            check = FrameworkCheck::kCondition4;
            ok = cd(q) == -f.sigma[j][p];
          }
          if (!ok) {
            FrameworkViolation v;
            v.check = check;
            v.circuit = i;
            v.cocircuit = j;
            v.s = s;
            v.p = p;
            v.q = q;
            v.detail = "circuit " + m.Describe(o) + ", cocircuit " +
                       m.Describe(b) + ", s = " + m.Describe(s) +
                       ", adjacent '" + m.label(p) + "' then '" + m.label(q) +
                       "'";
            return fail(v);
          }
        }
      }
    }
  }
  return report;
}

int WitnessCocircuit(const Matroid& m, ElementSet o, ElementId e, ElementId f) {
  const ElementSet pair{e, f};
  for (int j = 0; j < static_cast<int>(m.cocircuits().size()); ++j) {
    if ((o & m.cocircuits()[j]) == pair) return j;
  }
  return -1;
}

std::vector<CyclicOrder> DeriveCircuitOrders(const Matroid& m,
                                             const GraphFramework& f) {
  CheckFrameworkDomain(m, f);
  std::vector<CyclicOrder> orders;
  for (int i = 0; i < static_cast<int>(m.circuits().size()); ++i) {
    const ElementSet o = m.circuits()[i];
    const std::vector<int> items = o.ToVector();
    if (o.size() <= 2) {
      orders.push_back(CyclicOrder::FromSequence(items));
      continue;
    }
    std::optional<std::pair<int, int>> missing;
    const std::set<Triple> triples =
        DerivedTriples(m, f, i, Witnesses(m, o), &missing);
    if (missing) {
      throw Error(ErrorKind::kNoWitnessCocircuit,
                  "no cocircuit meets " + m.Describe(o) + " in exactly {" +
                      m.label(missing->first) + "," + m.label(missing->second) +
                      "}");
    }
    try {
      orders.push_back(ValidateCyclic(items, triples));
    } catch (const Error& error) {
      throw Error(
          ErrorKind::kNotACyclicOrder,
          "circuit " + m.Describe(o) + ": " +
              CheckNameWithDetail(FrameworkCheck::kCyclicOrder, error.what()));
    }
  }
  return orders;
}

GraphFramework FrameworkFromGraph(const Multigraph& g, const Matroid& m,
                                  const std::vector<CycleTraversal>& walks,
                                  const std::vector<BondSides>& sides) {
  GraphFramework fw;
  fw.signing = SigningFromOrientedGraph(g, m, walks, sides);
  for (std::size_t j = 0; j < sides.size(); ++j) {
    const ElementSet b = m.cocircuits()[j];
    SignRow row(m.size(), 0);
    for (ElementId e = 0; e < m.size(); ++e) {
      if (!b.Contains(e)) row[e] = sides[j].side[g.edge(e).tail] < 0 ? -1 : 1;
    }
    fw.sigma.push_back(std::move(row));
  }
  return fw;
}

GraphFramework FrameworkFromGraph(const Multigraph& g, const Matroid& m) {
  std::vector<CycleTraversal> walks;
  for (ElementSet o : m.circuits()) walks.push_back(DefaultTraversal(g, o));
  std::vector<BondSides> sides;
  for (ElementSet b : m.cocircuits()) sides.push_back(DefaultBondSides(g, b));
  return FrameworkFromGraph(g, m, walks, sides);
}

RestrictedFramework RestrictFramework(const Matroid& m, const GraphFramework& f,
                                      ElementSet contract, ElementSet remove) {
  RestrictedFramework out{Minor(m, contract, remove), {}};
  const Matroid& n = out.minor;
  std::vector<ElementId> parent_id(n.size());
  for (ElementId e = 0; e < n.size(); ++e) parent_id[e] = m.IndexOf(n.label(e));

  auto least_parent = [](const std::vector<ElementSet>& family, ElementSet low,
                         ElementSet high) {
    int best = -1;
    for (int i = 0; i < static_cast<int>(family.size()); ++i) {
      if (!low.IsSubsetOf(family[i]) || !family[i].IsSubsetOf(high)) continue;
      if (best < 0 || LexLess(family[i], family[best])) best = i;
    }
    if (best < 0) {
      throw Error(ErrorKind::kInvalidArgument,
                  "minor row without a parent row");
    }
    return best;
  };

  for (ElementSet o : n.circuits()) {
    const ElementSet lifted = TranslateSet(n, o, m);
    const int i = least_parent(m.circuits(), lifted, lifted | contract);
    SignRow row(n.size(), 0);
    for (ElementId e : o) row[e] = f.signing.c[i][parent_id[e]];
    out.framework.signing.c.push_back(std::move(row));
  }
  for (ElementSet b : n.cocircuits()) {
    const ElementSet lifted = TranslateSet(n, b, m);
    const int j = least_parent(m.cocircuits(), lifted, lifted | remove);
    SignRow d(n.size(), 0);
    SignRow sigma(n.size(), 0);
    for (ElementId e = 0; e < n.size(); ++e) {
      if (b.Contains(e)) {
        d[e] = f.signing.d[j][parent_id[e]];
      } else {
        sigma[e] = f.sigma[j][parent_id[e]];
      }
    }
    out.framework.signing.d.push_back(std::move(d));
    out.framework.sigma.push_back(std::move(sigma));
  }
  return out;
}

namespace {

// Search for the side functions of a connected matroid with a fixed
// signing. Variables sigma_b(g) are grouped into classes by the parity
// equalities that any framework must satisfy (well-definedness across
// witnesses, cyclicity of R_o, constancy of sigma_b on circuits missing b).
// Branching assigns classes; once every triple of a circuit is known its
// order is built, checked for transitivity, and used to force the sides of
// cocircuits meeting the circuit in four or more elements.
class SigmaSearch {
 public:
  SigmaSearch(const Matroid& m, const Signing& s, FrameworkSearchStats* stats)
      : m_(m), s_(s), stats_(stats) {
    n_ = m.size();
    const int vars = static_cast<int>(m.cocircuits().size()) * n_;
    parent_.resize(vars);
    for (int v = 0; v < vars; ++v) parent_[v] = v;
    flip_.assign(vars, 1);
    feasible_ = Setup();
  }

  std::optional<GraphFramework> Run() {
    if (!feasible_) return std::nullopt;
    for (int o = 0; o < static_cast<int>(circuits_.size()); ++o) {
      if (remaining_[o] == 0) queue_.push_back(o);
    }
    if (!Drain()) return std::nullopt;
    return Search();
  }

 private:
  struct Circuit {
    std::vector<int> classes;
    // Witness cocircuit per pair (e, f), e < f.
    std::map<std::pair<int, int>, int> witness;
    std::vector<int> heavy;  // cocircuits meeting o in >= 4 elements
  };

  int Var(int b, ElementId g) const { return b * n_ + g; }

  // Root of v and the sign of v relative to it.
  std::pair<int, int> Find(int v) const {
    int sign = 1;
    while (parent_[v] != v) {
      sign *= flip_[v];
      v = parent_[v];
    }
    return {v, sign};
  }

  // Records sigma(x) = sign * sigma(y). False on contradiction.
  bool Equate(int x, int y, int sign) {
    auto [rx, sx] = Find(x);
    auto [ry, sy] = Find(y);
    if (rx == ry) return sx * sy == sign;
    parent_[rx] = ry;
    flip_[rx] = static_cast<std::int8_t>(sx * sy * sign);
    return true;
  }

  int C(int o, ElementId e) const { return s_.c[o][e]; }
  int D(int b, ElementId e) const { return s_.d[b][e]; }

  bool Setup() {
    const auto& circuits = m_.circuits();
    const auto& cocircuits = m_.cocircuits();
    circuits_.resize(circuits.size());
    for (int o = 0; o < static_cast<int>(circuits.size()); ++o) {
      const ElementSet oset = circuits[o];
      Circuit& info = circuits_[o];
      for (int b = 0; b < static_cast<int>(cocircuits.size()); ++b) {
        const ElementSet meet = oset & cocircuits[b];
        if (meet.empty()) {
          // sigma_b is constant along o.
          const ElementId first = oset.First();
          for (ElementId g : oset.Without(first)) {
            if (!Equate(Var(b, g), Var(b, first), 1)) return false;
          }
        } else if (meet.size() == 2) {
          const std::vector<ElementId> ef = meet.ToVector();
          const ElementId e = ef[0];
          const ElementId f = ef[1];
          auto [it, inserted] = info.witness.emplace(std::make_pair(e, f), b);
          if (inserted) continue;
          // Every witness classifies g the same way.
          const int b0 = it->second;
          for (ElementId g : oset - meet) {
            if (!Equate(Var(b, g), Var(b0, g), D(b, f) * D(b0, f))) {
              return false;
            }
          }
        } else if (meet.size() >= 4) {
          info.heavy.push_back(b);
        }
      }
      if (oset.size() < 3) continue;
      const std::vector<ElementId> items = oset.ToVector();
      for (ElementId e : items) {
        for (ElementId f : items) {
          if (f <= e) continue;
          if (!info.witness.contains({e, f})) return false;
        }
      }
      // Cyclicity: the triples [e,f,g], [f,g,e], [g,e,f] agree.
      for (std::size_t a = 0; a < items.size(); ++a) {
        for (std::size_t b = a + 1; b < items.size(); ++b) {
          for (std::size_t c = b + 1; c < items.size(); ++c) {
            const ElementId e = items[a];
            const ElementId f = items[b];
            const ElementId g = items[c];
            const auto [v1, k1] = TripleVar(o, e, f, g);
            const auto [v2, k2] = TripleVar(o, f, g, e);
            const auto [v3, k3] = TripleVar(o, g, e, f);
            if (!Equate(v1, v2, k1 * k2)) return false;
            if (!Equate(v2, v3, k2 * k3)) return false;
          }
        }
      }
    }

    // Compress to classes.
    const int vars = static_cast<int>(parent_.size());
    class_of_.assign(vars, -1);
    sign_of_.assign(vars, 1);
    std::vector<int> root_class(vars, -1);
    for (int v = 0; v < vars; ++v) {
      auto [root, sign] = Find(v);
      if (root_class[root] < 0) root_class[root] = classes_++;
      class_of_[v] = root_class[root];
      sign_of_[v] = static_cast<std::int8_t>(sign);
    }
    value_.assign(classes_, 0);
    circuits_of_class_.resize(classes_);
    remaining_.assign(circuits.size(), 0);
    for (int o = 0; o < static_cast<int>(circuits.size()); ++o) {
      std::vector<int>& list = circuits_[o].classes;
      for (const auto& [pair, b] : circuits_[o].witness) {
        for (ElementId g : circuits[o] - ElementSet{pair.first, pair.second}) {
          list.push_back(class_of_[Var(b, g)]);
        }
      }
      std::sort(list.begin(), list.end());
      list.erase(std::unique(list.begin(), list.end()), list.end());
      remaining_[o] = static_cast<int>(list.size());
      for (int k : list) circuits_of_class_[k].push_back(o);
    }
    return true;
  }

  // The variable deciding [e, f, g] and the sign k with
  // [e, f, g] iff sigma(var) == k.
  std::pair<int, int> TripleVar(int o, ElementId e, ElementId f,
                                ElementId g) const {
    const auto key = std::minmax(e, f);
    const int b = circuits_[o].witness.at({key.first, key.second});
    return {Var(b, g), C(o, f) * D(b, f)};
  }

  int Value(int v) const { return value_[class_of_[v]] * sign_of_[v]; }

  bool Assign(int k, int val) {
    if (value_[k] != 0) return value_[k] == val;
    value_[k] = static_cast<std::int8_t>(val);
    trail_.push_back(k);
    for (int o : circuits_of_class_[k]) {
      if (--remaining_[o] == 0) queue_.push_back(o);
    }
    return true;
  }

  bool AssignVar(int v, int val) {
    return Assign(class_of_[v], val * sign_of_[v]);
  }

  void Undo(std::size_t mark) {
    while (trail_.size() > mark) {
      const int k = trail_.back();
      trail_.pop_back();
      for (int o : circuits_of_class_[k]) ++remaining_[o];
      value_[k] = 0;
    }
    queue_.clear();
  }

  bool Drain() {
    while (!queue_.empty()) {
      const int o = queue_.back();
      queue_.pop_back();
      if (!Complete(o)) {
        queue_.clear();
        return false;
      }
    }
    return true;
  }

  // All triples of circuit o are known: build R_o and force the sides of
  // the cocircuits meeting o in at least four elements.
  bool Complete(int o) {
    const ElementSet oset = m_.circuits()[o];
    if (oset.size() < 3) return true;
    const std::vector<ElementId> items = oset.ToVector();
    const int k = static_cast<int>(items.size());
    auto holds = [&](ElementId e, ElementId f, ElementId g) {
      const auto [v, sign] = TripleVar(o, e, f, g);
      return Value(v) == sign;
    };
    // Position of x after items[0]: how many y come before it.
    const ElementId a = items[0];
    std::vector<ElementId> sequence(k, -1);
    sequence[0] = a;
    for (int i = 1; i < k; ++i) {
      int before = 0;
      for (int j = 1; j < k; ++j) {
        if (j != i && holds(a, items[j], items[i])) ++before;
      }
      if (sequence[before + 1] >= 0) return false;
      sequence[before + 1] = items[i];
    }
    std::vector<int> position(n_, -1);
    for (int i = 0; i < k; ++i) position[sequence[i]] = i;
    for (ElementId e : items) {
      for (ElementId f : items) {
        if (f == e) continue;
        for (ElementId g : items) {
          if (g == e || g == f) continue;
          const int pf = (position[f] - position[e] + k) % k;
          const int pg = (position[g] - position[e] + k) % k;
          if (holds(e, f, g) != (pf < pg)) return false;
        }
      }
    }
    for (int b : circuits_[o].heavy) {
      const ElementSet bset = m_.cocircuits()[b];
      int last = 0;
      // Start from a member of b so every outsider has a predecessor.
      int start = 0;
      while (!bset.Contains(sequence[start])) ++start;
      int first_cd = 0;
      for (int step = 0; step < k; ++step) {
        const ElementId x = sequence[(start + step) % k];
        if (bset.Contains(x)) {
          const int cd = C(o, x) * D(b, x);
          if (step == 0) {
            first_cd = cd;
          } else if (cd != -last) {
            return false;
          }
          last = cd;
        } else if (!AssignVar(Var(b, x), last)) {
          return false;
        }
      }
      if (last != -first_cd) return false;
    }
    return true;
  }

  std::optional<GraphFramework> Search() {
    if (stats_ != nullptr) ++stats_->sigma_nodes;
    int best = -1;
    for (int o = 0; o < static_cast<int>(circuits_.size()); ++o) {
      if (remaining_[o] == 0) continue;
      if (best < 0 || remaining_[o] < remaining_[best]) best = o;
    }
    if (best < 0) return Finish();
    int k = -1;
    for (int c : circuits_[best].classes) {
      if (value_[c] == 0) {
        k = c;
        break;
      }
    }
    for (int val : {1, -1}) {
      const std::size_t mark = trail_.size();
      if (Assign(k, val) && Drain()) {
        if (auto found = Search()) return found;
      }
      Undo(mark);
    }
    return std::nullopt;
  }

  std::optional<GraphFramework> Finish() {
    GraphFramework fw;
    fw.signing = s_;
    for (int b = 0; b < static_cast<int>(m_.cocircuits().size()); ++b) {
      SignRow row(n_, 0);
      for (ElementId g = 0; g < n_; ++g) {
        if (m_.cocircuits()[b].Contains(g)) continue;
        const int v = Var(b, g);
        const int k = value_[class_of_[v]];
        row[g] = static_cast<std::int8_t>((k == 0 ? 1 : k) * sign_of_[v]);
      }
      fw.sigma.push_back(std::move(row));
    }
    if (VerifyFramework(m_, fw).valid) return fw;
    if (stats_ != nullptr) ++stats_->rejected;
    return std::nullopt;
  }

  const Matroid& m_;
  const Signing& s_;
  FrameworkSearchStats* stats_;
  int n_ = 0;
  bool feasible_ = true;
  std::vector<int> parent_;
  std::vector<std::int8_t> flip_;
  std::vector<int> class_of_;
  std::vector<std::int8_t> sign_of_;
  int classes_ = 0;
  std::vector<std::int8_t> value_;
  std::vector<Circuit> circuits_;
  std::vector<std::vector<int>> circuits_of_class_;
  std::vector<int> remaining_;
  std::vector<int> trail_;
  std::vector<int> queue_;
};

std::optional<GraphFramework> FindConnectedFramework(
    const Matroid& m, FrameworkSearchStats* stats) {
  std::optional<GraphFramework> found;
  SearchStats signing_stats;
  EnumerateSignings(
      m, m.ground(),
      [&](const Signing& s) {
        if (stats != nullptr) ++stats->signings;
        SigmaSearch search(m, s, stats);
        found = search.Run();
        return !found.has_value();
      },
      &signing_stats);
  if (stats != nullptr) stats->signing_nodes += signing_stats.nodes;
  return found;
}

}  // namespace

std::optional<GraphFramework> FindFramework(const Matroid& m,
                                            FrameworkSearchStats* stats) {
  GraphFramework result;
  result.signing.c.assign(m.circuits().size(), SignRow(m.size(), 0));
  result.signing.d.assign(m.cocircuits().size(), SignRow(m.size(), 0));
  result.sigma.assign(m.cocircuits().size(), SignRow(m.size(), 0));
  for (std::size_t j = 0; j < m.cocircuits().size(); ++j) {
    for (ElementId g : m.ground() - m.cocircuits()[j]) result.sigma[j][g] = 1;
  }
  for (ElementSet component : ConnectedComponents(m)) {
    const Matroid part = Minor(m, {}, m.ground() - component);
    std::optional<GraphFramework> found = FindConnectedFramework(part, stats);
    if (!found) {
      if (stats != nullptr) stats->exhausted = true;
      return std::nullopt;
    }
    std::vector<ElementId> to_m(part.size());
    for (ElementId e = 0; e < part.size(); ++e)
      to_m[e] = m.IndexOf(part.label(e));
    for (int i = 0; i < static_cast<int>(part.circuits().size()); ++i) {
      const int row =
          *m.CircuitIndex(TranslateSet(part, part.circuits()[i], m));
      for (ElementId e : part.circuits()[i]) {
        result.signing.c[row][to_m[e]] = found->signing.c[i][e];
      }
    }
    for (int j = 0; j < static_cast<int>(part.cocircuits().size()); ++j) {
      const ElementSet b = part.cocircuits()[j];
      const int row = *m.CocircuitIndex(TranslateSet(part, b, m));
      for (ElementId e = 0; e < part.size(); ++e) {
        if (b.Contains(e)) {
          result.signing.d[row][to_m[e]] = found->signing.d[j][e];
        } else {
          result.sigma[row][to_m[e]] = found->sigma[j][e];
        }
      }
    }
  }
  return result;
}

}  // namespace forge
