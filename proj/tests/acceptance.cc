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

// Acceptance run: one line per criterion, nonzero exit on any failure.
// Expected values come from the brute-force oracles in oracles.h.

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "forge/bridges.h"
#include "forge/cli.h"
#include "forge/corpus.h"
#include "forge/error.h"
#include "forge/framework.h"
#include "forge/realizer.h"
#include "forge/serialize.h"
#include "forge/signing.h"
#include "oracles.h"

namespace forge {
namespace {

// Collects failures; keeps the first few messages.
class Checker {
 public:
  void Expect(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (messages_.size() < 5) messages_.push_back(what);
  }
  void Fail(const std::string& what) { Expect(false, what); }

  int checks() const { return checks_; }
  int failures() const { return failures_; }
  std::string Summary() const {
    std::string out;
    for (const std::string& m : messages_) out += "\n    " + m;
    return out;
  }

 private:
  int checks_ = 0;
  int failures_ = 0;
  std::vector<std::string> messages_;
};

struct Named {
  std::string name;
  Multigraph graph;
};

// The named graphs plus every connected graph on at most four vertices.
std::vector<Named> RoundTripGraphs() {
  std::vector<Named> out;
  for (const NamedGraph& g : GraphCorpus()) out.push_back({g.name, g.graph});
  for (int n = 1; n <= 4; ++n) {
    int i = 0;
    for (const Multigraph& g : ConnectedLabeledGraphs(n)) {
      out.push_back(
          {"connected" + std::to_string(n) + "#" + std::to_string(i++), g});
    }
  }
  return out;
}

std::vector<NamedGraph> ThreeConnectedGraphs() {
  std::vector<NamedGraph> out;
  for (const NamedGraph& g : GraphCorpus()) {
    if (g.three_connected) out.push_back(g);
  }
  return out;
}

std::vector<oracle::Matroid> ExcludedMinors() {
  std::vector<oracle::Matroid> out;
  for (const NamedMatroid& m : NonGraphicCorpus()) {
    out.push_back(oracle::FromLibrary(m.matroid));
  }
  return out;
}

// Oracle view of a graph: its cycles must be m's circuits and its bonds
// m's cocircuits, matched by label.
bool GraphMatchesMatroid(const Matroid& m, const Multigraph& g) {
  if (g.edge_count() != m.size()) return false;
  std::vector<int> id(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    const std::optional<ElementId> found = m.Find(g.edge(e).label);
    if (!found) return false;
    id[e] = *found;
  }
  auto translate = [&](oracle::Family f) {
    for (oracle::Mask& mask : f) {
      oracle::Mask out = 0;
      for (int e = 0; e < g.edge_count(); ++e) {
        if (oracle::Has(mask, e)) out |= 1u << id[e];
      }
      mask = out;
    }
    return oracle::Sorted(f);
  };
  const oracle::Graph og = oracle::FromMultigraph(g);
  const oracle::Matroid om = oracle::FromLibrary(m);
  return translate(oracle::Cycles(og)) == om.circuits &&
         translate(oracle::Bonds(og)) == oracle::Cocircuits(om);
}

// 1. Graph to framework to graph.
void RoundTrip(Checker& c) {
  for (const Named& g : RoundTripGraphs()) {
    const Matroid m = CycleMatroid(g.graph);
    const GraphFramework f = FrameworkFromGraph(g.graph, m);
    c.Expect(VerifyFramework(m, f).valid, g.name + ": framework invalid");
    const RealizedGraph r = Realize(m, f);
    c.Expect(VerifyInduces(m, r.graph).induces,
             g.name + ": realization does not induce");
    c.Expect(GraphMatchesMatroid(m, r.graph),
             g.name + ": realization disagrees with the oracle");
  }
}

// 2. The check-graphic verb on graphic and non-graphic inputs.
void Graphicness(Checker& c) {
  const std::vector<oracle::Matroid> excluded = ExcludedMinors();
  std::vector<std::string> graphic;
  for (const NamedGraph& g : GraphCorpus()) graphic.push_back(g.name);
  graphic.push_back("petersen");
  for (const std::string& name : graphic) {
    const CommandResult r = RunCli({"check-graphic", "--corpus", name}, {});
    c.Expect(r.exit_code == kExitOk,
             name + ": check-graphic exit " + std::to_string(r.exit_code));
    const Matroid m = FindCorpusEntry(name)->matroid;
    if (m.size() <= 10) {
      c.Expect(!oracle::HasMinorIn(oracle::FromLibrary(m), excluded),
               name + ": oracle finds an excluded minor");
    }
    // Re-check the printed certificate independently.
    if (r.exit_code != kExitOk) continue;
    try {
      const Json j = ParseJson(r.out);
      const GraphFramework f = FrameworkFromJson(m, j["framework"]);
      c.Expect(VerifyFramework(m, f).valid, name + ": printed framework");
      const Multigraph g = GraphFromJson(j["graph"]);
      c.Expect(GraphMatchesMatroid(m, g), name + ": printed graph");
    } catch (const std::exception& e) {
      c.Fail(name + ": certificate unreadable: " + e.what());
    }
  }
  for (const NamedMatroid& m : NonGraphicCorpus()) {
    const CommandResult r = RunCli({"check-graphic", "--corpus", m.name}, {});
    c.Expect(r.exit_code == kExitRefuted,
             m.name + ": check-graphic exit " + std::to_string(r.exit_code));
    c.Expect(r.out.find("no framework exists") != std::string::npos,
             m.name + ": missing refutation message");
    c.Expect(oracle::HasMinorIn(oracle::FromLibrary(m.matroid), excluded),
             m.name + ": oracle finds no excluded minor");
  }
}

// 3. Single-element minors keep a framework that realizes the minor.
void Minors(Checker& c) {
  for (const Named& g : RoundTripGraphs()) {
    const Matroid m = CycleMatroid(g.graph);
    const GraphFramework f = FrameworkFromGraph(g.graph, m);
    const oracle::Matroid om = oracle::FromLibrary(m);
    for (ElementId e = 0; e < m.size(); ++e) {
      for (bool contract : {true, false}) {
        const std::string what =
            g.name + (contract ? " / " : " \\ ") + m.label(e);
        const ElementSet one{e};
        const RestrictedFramework r = contract
                                          ? RestrictFramework(m, f, one, {})
                                          : RestrictFramework(m, f, {}, one);
        c.Expect(VerifyFramework(r.minor, r.framework).valid,
                 what + ": framework invalid");
        const RealizedGraph real = Realize(r.minor, r.framework);
        c.Expect(VerifyInduces(r.minor, real.graph).induces,
                 what + ": realization does not induce");
        // The minor itself, against the oracle.
        oracle::Family expected = oracle::MinorCircuits(
            om, contract ? 1u << e : 0, contract ? 0 : 1u << e);
        for (oracle::Mask& mask : expected) {
          mask = TranslateSet(m, ElementSet(mask), r.minor).bits();
        }
        c.Expect(oracle::Sorted(expected) == oracle::Masks(r.minor.circuits()),
                 what + ": minor circuits");
      }
    }
  }
}

// 4. Signings.
void Signings(Checker& c) {
  for (const Named& g : RoundTripGraphs()) {
    const Matroid m = CycleMatroid(g.graph);
    const Signing s = SigningFromOrientedGraph(g.graph, m);
    c.Expect(VerifySigning(m, s).valid, g.name + ": signing invalid");
    bool sums = true;
    for (std::size_t o = 0; o < m.circuits().size(); ++o) {
      for (std::size_t b = 0; b < m.cocircuits().size(); ++b) {
        int sum = 0;
        for (ElementId e = 0; e < m.size(); ++e) sum += s.c[o][e] * s.d[b][e];
        sums = sums && sum == 0;
      }
    }
    c.Expect(sums, g.name + ": a circuit-cocircuit sum is nonzero");
  }
  for (const Matroid& m : {Uniform(2, 4), Fano()}) {
    SearchStats stats;
    c.Expect(!FindSigning(m, &stats).has_value(), "a signing was found");
    c.Expect(stats.exhausted, "search not exhausted");
  }
}

// 5. Derived circuit orders follow the graph.
void Orders(Checker& c) {
  for (const Named& g : RoundTripGraphs()) {
    const Matroid m = CycleMatroid(g.graph);
    const std::vector<CyclicOrder> orders =
        DeriveCircuitOrders(m, FrameworkFromGraph(g.graph, m));
    const oracle::Graph og = oracle::FromMultigraph(g.graph);
    for (std::size_t i = 0; i < orders.size(); ++i) {
      c.Expect(
          oracle::SameCircle(orders[i].items(),
                             oracle::CycleWalk(og, m.circuits()[i].bits())),
          g.name + ": order of " + m.Describe(m.circuits()[i]));
    }
  }
}

// 6. Partition trees and their countability certificates.
void PartitionTrees(Checker& c) {
  for (const NamedGraph& g : ThreeConnectedGraphs()) {
    const Matroid m = CycleMatroid(g.graph);
    const oracle::Matroid om = oracle::FromLibrary(m);
    c.Expect(oracle::ThreeConnected(om), g.name + ": not 3-connected");
    const GraphFramework f = FrameworkFromGraph(g.graph, m);
    for (ElementSet o : m.circuits()) {
      const std::string what = g.name + " " + m.Describe(o);
      const oracle::Mask bridges = oracle::Bridges(om, o.bits());
      if (bridges == 0) continue;
      try {
        const PartitionTree t = BuildPartitionTree(m, o, {}, &f);
        ElementSet covered;
        for (const PartitionLevel& level : t.levels) covered |= level.bridges;
        c.Expect(covered.bits() == bridges, what + ": bridges not covered");
        for (const PartitionNode& node : t.nodes) {
          int good = 0;
          for (int child : node.children) {
            const PartitionNode& k = t.nodes[child];
            good += k.good && !k.good_by_convention ? 1 : 0;
          }
          c.Expect(good <= 1, what + ": two good children");
        }
        const CountabilityCertificate cert = CertifyCountability(t);
        const std::set<int> image(cert.edge_to_node.begin(),
                                  cert.edge_to_node.end());
        c.Expect(static_cast<int>(cert.edge_to_node.size()) == o.size() &&
                     static_cast<int>(image.size()) == o.size(),
                 what + ": edge map not injective");
      } catch (const Error& e) {
        c.Fail(what + ": " + e.what());
      }
    }
  }
}

// 7. Separating bridges.
void Separation(Checker& c) {
  for (const NamedGraph& g : ThreeConnectedGraphs()) {
    const Matroid m = CycleMatroid(g.graph);
    for (ElementSet o : m.circuits()) {
      if (o.size() == m.size()) continue;
      const BridgeDecomposition d = DecomposeBridges(m, o);
      const Matroid& mp = d.contracted;
      const oracle::Graph og = oracle::FromMultigraph(d.realized.graph);
      const oracle::Mask cycle = TranslateSet(m, o, mp).bits();
      auto id = [&](ElementId x) { return mp.IndexOf(m.label(x)); };
      for (ElementId e : o) {
        for (ElementId f : o) {
          if (e == f) continue;
          const std::string what = g.name + " " + m.Describe(o) + " " +
                                   m.label(e) + "|" + m.label(f);
          try {
            const ElementId x = FindSeparatingBridge(d, e, f).bridge;
            c.Expect(d.bridges.Contains(x) &&
                         oracle::CycleSplits(og, cycle, id(e), id(f), id(x)),
                     what + ": bridge does not separate");
          } catch (const Error& err) {
            c.Fail(what + ": " + err.what());
          }
        }
      }
    }
  }
}

// Matroids on at most eight elements from the corpus.
std::vector<NamedMatroid> SmallMatroids() {
  std::vector<NamedMatroid> out;
  for (const Named& g : RoundTripGraphs()) {
    if (g.graph.edge_count() <= 8) {
      out.push_back({g.name, CycleMatroid(g.graph)});
    }
  }
  for (const NamedMatroid& m : NonGraphicCorpus()) {
    if (m.matroid.size() <= 8) out.push_back(m);
  }
  return out;
}

// 8. Duality, orthogonality, binary parity and fundamental sets.
void Duality(Checker& c) {
  const std::vector<oracle::Matroid> u24{oracle::FromLibrary(Uniform(2, 4))};
  for (const NamedMatroid& named : SmallMatroids()) {
    const Matroid& m = named.matroid;
    const oracle::Matroid om = oracle::FromLibrary(m);
    const Matroid dual = Dual(m);
    c.Expect(Dual(dual) == m, named.name + ": dual is not an involution");
    c.Expect(oracle::Masks(dual.circuits()) == oracle::Cocircuits(om),
             named.name + ": dual circuits");
    bool never_one = true;
    bool all_even = true;
    for (ElementSet o : m.circuits()) {
      for (ElementSet b : m.cocircuits()) {
        const int meet = (o & b).size();
        never_one = never_one && meet != 1;
        all_even = all_even && meet % 2 == 0;
      }
    }
    c.Expect(never_one, named.name + ": a circuit meets a cocircuit once");
    const bool binary = !oracle::HasMinorIn(om, u24);
    c.Expect(all_even == binary, named.name + ": parity disagrees");
    for (oracle::Mask base : oracle::Bases(om)) {
      const ElementSet b(base);
      for (ElementId e : b) {
        const ElementSet cocircuit = FundamentalSet(m, b, e);
        c.Expect(cocircuit.bits() == oracle::FundamentalCocircuit(om, base, e),
                 named.name + ": fundamental cocircuit");
        for (ElementId f = 0; f < m.size(); ++f) {
          if (b.Contains(f)) continue;
          const ElementSet circuit = FundamentalSet(m, b, f);
          c.Expect(circuit.bits() == oracle::FundamentalCircuit(om, base, f),
                   named.name + ": fundamental circuit");
          c.Expect(circuit.Contains(e) == cocircuit.Contains(f),
                   named.name + ": fundamental sets disagree");
        }
      }
    }
  }
}

// 9. Base paths against tree paths.
void BasePaths(Checker& c) {
  for (const Named& g : RoundTripGraphs()) {
    if (g.graph.edge_count() > 8) continue;
    const Matroid m = CycleMatroid(g.graph);
    const GraphFramework f = FrameworkFromGraph(g.graph, m);
    const RealizedGraph r = Realize(m, f);
    const oracle::Graph og = oracle::FromMultigraph(r.graph);
    const int n = r.graph.vertex_count();
    for (oracle::Mask base : oracle::Bases(oracle::FromLibrary(m))) {
      for (int v = 0; v < n; ++v) {
        for (int w = 0; w < n; ++w) {
          const std::optional<std::vector<int>> expected =
              oracle::TreePath(og, base, v, w);
          if (!expected) {
            c.Fail(g.name + ": oracle found no tree path");
            continue;
          }
          c.Expect(BasePath(m, f, ElementSet(base), r.codes[v], r.codes[w]) ==
                       *expected,
                   g.name + ": base path");
        }
      }
    }
  }
}

struct Criterion {
  int number;
  const char* title;
  double budget_seconds;
  std::function<void(Checker&)> run;
};

}  // namespace
}  // namespace forge

int main() {
  using forge::Checker;
  const std::vector<forge::Criterion> criteria = {
      {1, "framework round trip on corpus graphs", 30, forge::RoundTrip},
      {2, "check-graphic decides the corpus", 120, forge::Graphicness},
      {3, "single-element minors restrict and realize", 60, forge::Minors},
      {4, "oriented-graph signings verify; U24 and F7 unsignable", 30,
       forge::Signings},
      {5, "derived circuit orders follow traversals", 30, forge::Orders},
      {6, "partition trees certify on 3-connected corpus", 30,
       forge::PartitionTrees},
      {7, "separating bridges for every pair of circuit edges", 30,
       forge::Separation},
      {8, "duality, orthogonality, parity and fundamental sets", 60,
       forge::Duality},
      {9, "base paths equal tree paths", 30, forge::BasePaths},
  };
  int failed = 0;
  for (const forge::Criterion& criterion : criteria) {
    Checker checker;
    const auto start = std::chrono::steady_clock::now();
    try {
      criterion.run(checker);
    } catch (const std::exception& e) {
      checker.Fail(std::string("uncaught: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    if (seconds > criterion.budget_seconds) {
      checker.Fail("over the time budget");
    }
    const bool pass = checker.failures() == 0;
    failed += pass ? 0 : 1;
    std::printf("[%s] criterion %d: %s (%d checks, %.2fs)%s\n",
                pass ? "PASS" : "FAIL", criterion.number, criterion.title,
                checker.checks(), seconds, checker.Summary().c_str());
  }
  return failed == 0 ? 0 : 1;
}
