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
#include "forge/matroid.h"

#include "doctest.h"
#include "forge/corpus.h"
#include "forge/error.h"
#include "oracles.h"

namespace forge {
namespace {

Matroid Triangle() {
  return Matroid::Build({"a", "b", "c"}, {{"a", "b", "c"}});
}

ErrorKind KindOf(auto&& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error raised");
  return ErrorKind::kInvalidArgument;
}

TEST_CASE("build: triangle has one circuit and three bases") {
  const Matroid m = Triangle();
  CHECK(m.size() == 3);
  CHECK(m.rank() == 2);
  CHECK(m.circuits() == std::vector<ElementSet>{m.ground()});
  CHECK(m.bases().size() == 3);
}

TEST_CASE("build: all 3-subsets of four elements give U24") {
  const Matroid m = Matroid::Build(
      {"1", "2", "3", "4"},
      {{"1", "2", "3"}, {"1", "2", "4"}, {"1", "3", "4"}, {"2", "3", "4"}});
  CHECK(m.rank() == 2);
  CHECK(oracle::Isomorphic(oracle::FromLibrary(m),
                           oracle::FromLibrary(Uniform(2, 4))));
  // Elimination holds for every pair, checked by brute force.
  for (ElementSet x : m.circuits()) {
    for (ElementSet y : m.circuits()) {
      if (x == y) continue;
      for (ElementId z : x& y) {
        const ElementSet u = (x | y).Without(z);
        bool found = false;
        for (ElementSet c : m.circuits()) found = found || c.IsSubsetOf(u);
        CHECK(found);
      }
    }
  }
}

TEST_CASE("build: rejects bad families") {
  CHECK(KindOf([] { Matroid::Build({"a", "b"}, {{"a"}, {"a", "b"}}); }) ==
        ErrorKind::kNonAntichain);
  CHECK(KindOf([] { Matroid::Build({"a"}, {{}}); }) ==
        ErrorKind::kEmptyCircuit);
  CHECK(KindOf([] {
          Matroid::Build({"a", "b", "c", "d"}, {{"a", "b"}, {"b", "c", "d"}});
        }) == ErrorKind::kEliminationFailure);
  CHECK(KindOf([] { Matroid::Build({"a", "a"}, {}); }) ==
        ErrorKind::kDuplicateLabel);
  CHECK(KindOf([] { Matroid::Build({"a"}, {{"z"}}); }) ==
        ErrorKind::kUnknownElement);
  std::vector<std::string> many;
  for (int i = 0; i < 17; ++i) many.push_back("e" + std::to_string(i));
  CHECK(KindOf([&] { Matroid::Build(many, {}); }) ==
        ErrorKind::kGroundCapExceeded);
  CHECK_NOTHROW(Matroid::Build(many, {}, {.ground_cap = 17}));
}

TEST_CASE("cocircuits agree with minimal base transversals") {
  for (const NamedGraph& g : GraphCorpus()) {
    const Matroid m = CycleMatroid(g.graph);
    CAPTURE(g.name);
    CHECK(oracle::Masks(m.cocircuits()) ==
          oracle::Cocircuits(oracle::FromLibrary(m)));
    CHECK(oracle::Masks(m.bases()) == oracle::Bases(oracle::FromLibrary(m)));
  }
}

TEST_CASE("dual: examples") {
  const Matroid m = Triangle();
  const Matroid d = Dual(m);
  CHECK(oracle::Masks(d.circuits()) == oracle::Family{0b011, 0b101, 0b110});
  const Matroid loop = Matroid::Build({"e"}, {{"e"}});
  CHECK(Dual(loop).circuits().empty());
  CHECK(Dual(loop).Coloops() == ElementSet{0});
  const Matroid u24 = Uniform(2, 4);
  CHECK(Dual(u24) == u24);
}

TEST_CASE("minor: examples") {
  const Matroid k4 = CycleMatroid(CompleteGraph(4));
  for (ElementId e = 0; e < k4.size(); ++e) {
    const Matroid c = Minor(k4, ElementSet::Singleton(e), ElementSet());
    bool pair = false;
    for (ElementSet o : c.circuits()) pair = pair || o.size() == 2;
    CHECK(pair);
    CHECK(oracle::Masks(Minor(k4, ElementSet::Singleton(e), {}).circuits())
              .size() ==
          oracle::MinorCircuits(oracle::FromLibrary(k4), 1u << e, 0).size());
  }
  CHECK(Minor(k4, {}, {}) == k4);
  const Matroid c = Minor(Triangle(), ElementSet{0}, ElementSet());
  CHECK(c.labels() == std::vector<std::string>{"b", "c"});
  CHECK(c.circuits() == std::vector<ElementSet>{ElementSet{0, 1}});
  CHECK(KindOf([&] { Minor(k4, ElementSet{0}, ElementSet{0}); }) ==
        ErrorKind::kOverlappingSets);
}

TEST_CASE("fundamental sets: examples") {
  const Matroid m = Triangle();
  const ElementSet base{0, 1};
  CHECK(FundamentalSet(m, base, 2) == ElementSet{0, 1, 2});
  CHECK(FundamentalSet(m, base, 0) == ElementSet{0, 2});
  const Matroid coloop = Matroid::Build({"e"}, {});
  CHECK(FundamentalSet(coloop, ElementSet{0}, 0) == ElementSet{0});
  CHECK(KindOf([&] { FundamentalSet(m, ElementSet{0}, 1); }) ==
        ErrorKind::kNotABase);
}

TEST_CASE("connectivity: examples") {
  CHECK(Connectivity(CycleMatroid(CompleteGraph(4)), 3).k_connected);
  CHECK(Connectivity(Uniform(2, 4), 3).k_connected);
  const Matroid two = Matroid::Build({"a", "b", "c", "x", "y", "z"},
                                     {{"a", "b", "c"}, {"x", "y", "z"}});
  const ConnectivityReport r = Connectivity(two, 2);
  CHECK_FALSE(r.k_connected);
  REQUIRE(r.witness.has_value());
  CHECK(r.witness->k == 1);
  CHECK(SeparationOrder(two, r.witness->side_a) == 0);
  CHECK(r.common_circuit_connected == false);
}

TEST_CASE("switching sequences: examples") {
  const Matroid m = Triangle();
  CHECK(SwitchingSequence(m, ElementSet{0, 1}, 2, 2) ==
        std::vector<ElementId>{2});
  CHECK(SwitchingSequence(m, ElementSet{0, 1}, 2, 0) ==
        std::vector<ElementId>{2, 0});
  const Matroid k4 = CycleMatroid(CompleteGraph(4));
  for (ElementSet base : k4.bases()) {
    for (ElementId e = 0; e < k4.size(); ++e) {
      for (ElementId f = 0; f < k4.size(); ++f) {
        CHECK(SwitchingSequence(k4, base, e, f).size() <= 4);
      }
    }
  }
}

TEST_CASE("binary report: examples") {
  const BinaryReport u24 = BinaryTameReport(Uniform(2, 4));
  CHECK_FALSE(u24.binary);
  REQUIRE(u24.odd_pair.has_value());
  const Matroid k4 = CycleMatroid(CompleteGraph(4));
  const BinaryReport r = BinaryTameReport(k4);
  CHECK(r.binary);
  CHECK(r.orthogonal);
  for (ElementSet o : k4.circuits()) {
    for (ElementSet b : k4.cocircuits()) CHECK((o & b).size() % 2 == 0);
  }
  // The star of vertex 1 is itself a bond.
  const ElementSet star = k4.SetOf({"12", "13", "14"});
  CHECK(DisjointCocircuitDecomposition(k4, star) ==
        std::vector<ElementSet>{star});
}

}  // namespace
}  // namespace forge
