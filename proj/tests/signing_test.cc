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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "forge/signing.h"

#include "doctest.h"
#include "forge/corpus.h"
#include "forge/error.h"

namespace forge {
namespace {

// Every circuit-cocircuit sum, computed directly.
bool AllSumsVanish(const Matroid& m, const Signing& s) {
  for (std::size_t o = 0; o < m.circuits().size(); ++o) {
    for (std::size_t b = 0; b < m.cocircuits().size(); ++b) {
      int sum = 0;
      for (ElementId e = 0; e < m.size(); ++e) sum += s.c[o][e] * s.d[b][e];
      if (sum != 0) return false;
    }
  }
  return true;
}

Multigraph TriangleGraph() {
  return Multigraph::Build(
      {}, {{{"a", "1", "2"}, {"b", "2", "3"}, {"c", "3", "1"}}});
}

TEST_CASE("verify: triangle examples") {
  const Matroid m = CycleMatroid(TriangleGraph());
  // Cocircuits in canonical order: {a,b}, {a,c}, {b,c}.
  Signing s;
  s.c = {{1, 1, 1}};
  s.d = {{1, -1, 0}, {1, 0, -1}, {0, 1, -1}};
  CHECK(VerifySigning(m, s).valid);
  Signing ones;
  ones.c = {{1, 1, 1}};
  ones.d = {{1, 1, 0}, {1, 0, 1}, {0, 1, 1}};
  const SigningReport bad = VerifySigning(m, ones);
  CHECK_FALSE(bad.valid);
  REQUIRE(bad.violation.has_value());
  CHECK(bad.violation->circuit == 0);
  CHECK(bad.violation->cocircuit == 0);
  CHECK(bad.sum == 2);
  const Matroid empty = Matroid::Build({}, {});
  CHECK(VerifySigning(empty, Signing{}).valid);
  Signing short_rows;
  short_rows.c = {{1, 1}};
  short_rows.d = s.d;
  CHECK_THROWS_AS(CheckSigningDomain(m, short_rows), Error);
}

TEST_CASE("oriented graph: traversal sense sets the circuit sign") {
  const Multigraph g = TriangleGraph();
  const Matroid m = CycleMatroid(g);
  const Signing forward = SigningFromOrientedGraph(g, m);
  CHECK(forward.c[0] == SignRow{1, 1, 1});
  const Signing backward =
      SigningFromOrientedGraph(g, m, {CycleTraversal{0, {2, 1, 0}}},
                               {DefaultBondSides(g, m.cocircuits()[0]),
                                DefaultBondSides(g, m.cocircuits()[1]),
                                DefaultBondSides(g, m.cocircuits()[2])});
  CHECK(backward.c[0] == SignRow{-1, -1, -1});
  CHECK(VerifySigning(m, backward).valid);
}

TEST_CASE("oriented graph: every corpus graph gives a valid signing") {
  for (const NamedGraph& g : GraphCorpus()) {
    CAPTURE(g.name);
    const Matroid m = CycleMatroid(g.graph);
    const Signing s = SigningFromOrientedGraph(g.graph, m);
    CHECK(VerifySigning(m, s).valid);
    CHECK(AllSumsVanish(m, s));
  }
  const Matroid k4 = CycleMatroid(CompleteGraph(4));
  CHECK(k4.circuits().size() * k4.cocircuits().size() == 49);
}

TEST_CASE("find: graphic matroids are signable") {
  for (const NamedGraph& g : GraphCorpus()) {
    CAPTURE(g.name);
    const Matroid m = CycleMatroid(g.graph);
    SearchStats stats;
    const std::optional<Signing> s = FindSigning(m, &stats);
    REQUIRE(s.has_value());
    CHECK(AllSumsVanish(m, *s));
  }
}

TEST_CASE("find: U24 and F7 have no signing") {
  for (const Matroid& m : {Uniform(2, 4), Fano()}) {
    SearchStats stats;
    CHECK_FALSE(FindSigning(m, &stats).has_value());
    CHECK(stats.exhausted);
  }
}

TEST_CASE("gauge moves preserve validity") {
  const Multigraph k4 = CompleteGraph(4);
  const Matroid m = CycleMatroid(k4);
  Signing s = SigningFromOrientedGraph(k4, m);
  FlipCircuitRow(s, 3);
  FlipCocircuitRow(s, 5);
  ReorientElement(s, 2);
  CHECK(VerifySigning(m, s).valid);
}

TEST_CASE("enumeration: K4 has exactly one gauge class") {
  const Matroid m = CycleMatroid(CompleteGraph(4));
  SearchStats stats;
  int count = 0;
  EnumerateSignings(
      m, m.ground(),
      [&](const Signing& s) {
        CHECK(AllSumsVanish(m, s));
        ++count;
        return true;
      },
      &stats);
  CHECK(stats.exhausted);
  CHECK(count == 1);
}

}  // namespace
}  // namespace forge
