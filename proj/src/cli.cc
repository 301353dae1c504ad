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

#include "forge/cli.h"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "forge/bridges.h"
#include "forge/corpus.h"
#include "forge/error.h"
#include "forge/framework.h"
#include "forge/realizer.h"
#include "forge/signing.h"

namespace forge {
namespace {

struct Input {
  Matroid matroid;
  std::optional<Multigraph> graph;
};

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

std::string ReadAll(std::istream& in) {
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

Input LoadInput(const Command& c, std::istream* in) {
  MatroidOptions options;
  options.ground_cap = c.cap;
  if (c.corpus) {
    std::optional<CorpusEntry> entry = FindCorpusEntry(*c.corpus);
    if (!entry) {
      throw Error(ErrorKind::kInvalidArgument,
                  "unknown corpus entry \"" + *c.corpus + "\"");
    }
    if (entry->matroid.size() > c.cap) {
      throw Error(ErrorKind::kGroundCapExceeded,
                  *c.corpus + " has " + std::to_string(entry->matroid.size()) +
                      " elements, above the cap " + std::to_string(c.cap));
    }
    return {entry->matroid, entry->graph};
  }
  if (c.input_path.empty()) {
    throw Error(ErrorKind::kInvalidArgument, "no input given");
  }
  std::string text;
  if (c.input_path == "-") {
    if (in == nullptr) {
      throw Error(ErrorKind::kInvalidArgument, "standard input unavailable");
    }
    text = ReadAll(*in);
  } else {
    std::ifstream file(c.input_path);
    if (!file) {
      throw Error(ErrorKind::kInvalidArgument, "cannot read " + c.input_path);
    }
    text = ReadAll(file);
  }
  ParsedInput parsed = ParseInput(text, c.input_format, options);
  return {parsed.matroid, parsed.graph};
}

ElementSet ParseLabels(const Matroid& m, const std::string& list) {
  ElementSet out;
  std::istringstream in(list);
  for (std::string label; std::getline(in, label, ',');) {
    if (label.empty()) continue;
    out.Insert(m.IndexOf(label));
  }
  return out;
}

Json Labels(const Matroid& m, ElementSet set) { return m.LabelsOf(set); }

std::string Summary(const Matroid& m) {
  return std::to_string(m.size()) + " elements, rank " +
         std::to_string(m.rank()) + ", " + std::to_string(m.circuits().size()) +
         " circuits, " + std::to_string(m.cocircuits().size()) +
         " cocircuits\n";
}

std::string MatroidText(const Matroid& m) {
  std::string out = Summary(m);
  for (ElementSet c : m.circuits()) out += "  " + m.Describe(c) + "\n";
  return out;
}

void RequireFormat(const Command& c, std::initializer_list<OutputFormat> ok) {
  if (std::find(ok.begin(), ok.end(), c.format) == ok.end()) {
    throw Error(ErrorKind::kInvalidArgument,
                "output format not available for " + c.verb);
  }
}

CommandResult Refuted(std::string out) {
  return {kExitRefuted, std::move(out), ""};
}

CommandResult MatroidResult(const Command& c, const Matroid& m) {
  RequireFormat(c, {OutputFormat::kJson, OutputFormat::kText});
  if (c.format == OutputFormat::kText) return {kExitOk, MatroidText(m), ""};
  return {kExitOk, Dump(MatroidToJson(m)), ""};
}

// Framework of the input: the graph's own when there is one, a search
// otherwise. Verified either way.
std::optional<GraphFramework> InputFramework(const Input& input,
                                             FrameworkSearchStats* stats) {
  std::optional<GraphFramework> f;
  if (input.graph) {
    f = FrameworkFromGraph(*input.graph, input.matroid);
  } else {
    f = FindFramework(input.matroid, stats);
  }
  if (f) {
    const FrameworkReport report = VerifyFramework(input.matroid, *f);
    if (!report.valid) {
      throw Error(ErrorKind::kCertificateFailure,
                  "framework fails " +
                      std::string(FrameworkCheckName(report.violation->check)) +
                      ": " + report.violation->detail);
    }
  }
  return f;
}

std::string StatsText(const FrameworkSearchStats& s) {
  return "search exhausted: " + std::to_string(s.signings) +
         " signing classes, " + std::to_string(s.signing_nodes) +
         " signing nodes, " + std::to_string(s.sigma_nodes) + " side nodes\n";
}

Json StatsJson(const FrameworkSearchStats& s) {
  return {{"exhausted", s.exhausted},
          {"signings", s.signings},
          {"signing_nodes", s.signing_nodes},
          {"sigma_nodes", s.sigma_nodes}};
}

CommandResult Validate(const Command& c, const Input& input) {
  RequireFormat(c, {OutputFormat::kJson, OutputFormat::kText});
  const Matroid& m = input.matroid;
  if (c.format == OutputFormat::kText)
    return {kExitOk, "valid: " + Summary(m), ""};
  return {kExitOk, Dump(MatroidToJson(m)), ""};
}

CommandResult Connect(const Command& c, const Input& input) {
  RequireFormat(c, {OutputFormat::kJson, OutputFormat::kText});
  const Matroid& m = input.matroid;
  const ConnectivityReport report = Connectivity(m, c.k);
  Json j = {{"k", c.k}, {"connected", report.k_connected}};
  std::string text = std::to_string(c.k) +
                     (report.k_connected ? "-connected\n" : "-separated\n");
  if (report.witness) {
    const SeparationWitness& w = *report.witness;
    j["separation"] = {{"side_a", Labels(m, w.side_a)},
                       {"side_b", Labels(m, w.side_b)},
                       {"order", w.k}};
    text += "separation of order " + std::to_string(w.k) + ": " +
            m.Describe(w.side_a) + " | " + m.Describe(w.side_b) + "\n";
  }
  std::string out = c.format == OutputFormat::kText ? text : Dump(j);
  return {report.k_connected ? kExitOk : kExitRefuted, std::move(out), ""};
}

CommandResult Sign(const Command& c, const Input& input) {
  RequireFormat(c, {OutputFormat::kJson, OutputFormat::kText});
  const Matroid& m = input.matroid;
  SearchStats stats;
  const std::optional<Signing> s = FindSigning(m, &stats);
  if (!s) {
    if (c.format == OutputFormat::kText) {
      return Refuted("no signing exists: search exhausted after " +
                     std::to_string(stats.nodes) + " nodes\n");
    }
    return Refuted(Dump({{"signing", nullptr},
                         {"exhausted", stats.exhausted},
                         {"nodes", stats.nodes}}));
  }
  const SigningReport report = VerifySigning(m, *s);
  if (!report.valid) {
    throw Error(ErrorKind::kCertificateFailure, "found signing fails checks");
  }
  if (c.format == OutputFormat::kText) {
    return {kExitOk, "signing verified on " + Summary(m), ""};
  }
  return {kExitOk, Dump(SigningToJson(m, *s)), ""};
}

CommandResult Framework(const Command& c, const Input& input) {
  RequireFormat(c, {OutputFormat::kJson, OutputFormat::kText});
  FrameworkSearchStats stats;
  const std::optional<GraphFramework> f = InputFramework(input, &stats);
  if (!f) {
    if (c.format == OutputFormat::kText) {
      return Refuted("no framework exists\n" + StatsText(stats));
    }
    return Refuted(Dump({{"framework", nullptr}, {"stats", StatsJson(stats)}}));
  }
  if (c.format == OutputFormat::kText) {
    return {kExitOk, "framework verified on " + Summary(input.matroid), ""};
  }
  return {kExitOk, Dump(FrameworkToJson(input.matroid, *f)), ""};
}

Json RealizedJson(const RealizedGraph& r) {
  Json j = GraphToJson(r.graph);
  Json codes = Json::object();
  for (int v = 0; v < r.graph.vertex_count(); ++v) {
    codes[r.graph.vertices()[v]] = CodeString(r.codes[v]);
  }
  j["codes"] = std::move(codes);
  return j;
}

CommandResult Realization(const Command& c, const Input& input) {
  FrameworkSearchStats stats;
  const std::optional<GraphFramework> f = InputFramework(input, &stats);
  if (!f) return Refuted("no framework exists\n" + StatsText(stats));
  const RealizedGraph r = Realize(input.matroid, *f);
  const bool induces = VerifyInduces(input.matroid, r.graph).induces;
  const int code = induces ? kExitOk : kExitRefuted;
  switch (c.format) {
    case OutputFormat::kDot:
      return {code, GraphToDot(r.graph, &r.codes), ""};
    case OutputFormat::kText:
      return {code,
              std::to_string(r.graph.vertex_count()) + " vertices, " +
                  std::to_string(r.graph.edges().size()) + " edges, " +
                  (induces ? "induces the matroid\n"
                           : "does not induce the matroid\n"),
              ""};
    case OutputFormat::kJson:
      break;
  }
  Json j = {{"graph", RealizedJson(r)}, {"induces", induces}};
  return {code, Dump(j), ""};
}

CommandResult Bridges(const Command& c, const Input& input) {
  const Matroid& m = input.matroid;
  const ElementSet o =
      c.circuit ? ParseLabels(m, *c.circuit) : m.circuits().front();
  std::optional<ElementId> e0;
  if (c.seed_element) e0 = m.IndexOf(*c.seed_element);
  std::optional<GraphFramework> graph_framework;
  if (input.graph) graph_framework = FrameworkFromGraph(*input.graph, m);
  const PartitionTree tree = BuildPartitionTree(
      m, o, e0, graph_framework ? &*graph_framework : nullptr);
  std::optional<CountabilityCertificate> cert;
  std::string failure;
  try {
    cert = CertifyCountability(tree);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::kCertificateFailure) throw;
    failure = e.what();
  }
  const int code = cert ? kExitOk : kExitRefuted;
  switch (c.format) {
    case OutputFormat::kDot:
      return {code, PartitionTreeToDot(tree), failure};
    case OutputFormat::kText: {
      std::string out = "circuit " + m.Describe(o) + ", " +
                        std::to_string(tree.decomposition.bridges.size()) +
                        " bridges, " + std::to_string(tree.levels.size()) +
                        " levels, " + std::to_string(tree.nodes.size()) +
                        " nodes\n";
      out +=
          cert ? "certificate: pass\n" : "certificate: fail: " + failure + "\n";
      return {code, out, ""};
    }
    case OutputFormat::kJson:
      break;
  }
  return {code, Dump(PartitionTreeToJson(tree, cert, failure)), ""};
}

CommandResult CheckGraphic(const Command& c, const Input& input) {
  const Matroid& m = input.matroid;
  FrameworkSearchStats stats;
  const std::optional<GraphFramework> f = FindFramework(m, &stats);
  if (!f) {
    if (c.format == OutputFormat::kJson) {
      return Refuted(Dump({{"graphic", false},
                           {"reason", "not graphic: no framework exists"},
                           {"stats", StatsJson(stats)}}));
    }
    return Refuted("not graphic: no framework exists\n" + StatsText(stats));
  }
  const FrameworkReport report = VerifyFramework(m, *f);
  const RealizedGraph r = Realize(m, *f);
  const InducesReport induces = VerifyInduces(m, r.graph);
  if (!report.valid || !induces.induces) {
    throw Error(ErrorKind::kCertificateFailure,
                "found framework does not certify graphicness");
  }
  const std::string dot = GraphToDot(r.graph, &r.codes);
  switch (c.format) {
    case OutputFormat::kDot:
      return {kExitOk, dot, ""};
    case OutputFormat::kText:
      return {kExitOk,
              "graphic: framework verified, realization induces the "
              "matroid\n" +
                  dot,
              ""};
    case OutputFormat::kJson:
      break;
  }
  Json j = {{"graphic", true},
            {"framework", FrameworkToJson(m, *f)},
            {"graph", RealizedJson(r)},
            {"dot", dot}};
  return {kExitOk, Dump(j), ""};
}

// Independent consistency checks on the input.
CommandResult Oracle(const Command& c, const Input& input) {
  RequireFormat(c, {OutputFormat::kJson, OutputFormat::kText});
  const Matroid& m = input.matroid;
  struct Check {
    std::string name;
    bool pass;
    std::string detail;
  };
  std::vector<Check> checks;
  auto run = [&](const std::string& name, auto body) {
    try {
      std::string detail;
      const bool pass = body(detail);
      checks.push_back({name, pass, detail});
    } catch (const Error& e) {
      checks.push_back({name, false, e.what()});
    }
  };

  run("dual involution", [&](std::string&) { return Dual(Dual(m)) == m; });
  run("circuits meet cocircuits in 0 or at least 2", [&](std::string& d) {
    const BinaryReport r = BinaryTameReport(m);
    if (r.singleton_pair) {
      d = m.Describe(m.circuits()[r.singleton_pair->circuit]) + " and " +
          m.Describe(m.cocircuits()[r.singleton_pair->cocircuit]);
    }
    return r.orthogonal;
  });
  run("fundamental circuits and cocircuits agree", [&](std::string& d) {
    for (ElementSet base : m.bases()) {
      for (ElementId x : m.ground() - base) {
        const ElementSet circuit = FundamentalSet(m, base, x);
        for (ElementId y : base) {
          const bool in_circuit = circuit.Contains(y);
          if (FundamentalSet(m, base, y).Contains(x) != in_circuit) {
            d = "base " + m.Describe(base);
            return false;
          }
        }
      }
    }
    return true;
  });
  run("single-element minors revalidate", [&](std::string&) {
    for (ElementId e = 0; e < m.size(); ++e) {
      const ElementSet one = ElementSet::Singleton(e);
      for (const Matroid& minor :
           {Minor(m, one, ElementSet()), Minor(m, ElementSet(), one)}) {
        Matroid::FromCircuits(minor.labels(), minor.circuits(),
                              Validation::kFull);
      }
    }
    return true;
  });
  if (input.graph) {
    const Multigraph& g = *input.graph;
    run("graph framework verifies", [&](std::string& d) {
      const FrameworkReport r = VerifyFramework(m, FrameworkFromGraph(g, m));
      if (!r.valid) d = r.violation->detail;
      return r.valid;
    });
    run("derived orders follow the cycles", [&](std::string& d) {
      const std::vector<CyclicOrder> orders =
          DeriveCircuitOrders(m, FrameworkFromGraph(g, m));
      for (std::size_t i = 0; i < orders.size(); ++i) {
        const CyclicOrder walk =
            TraversalOrder(DefaultTraversal(g, m.circuits()[i]));
        if (orders[i] != walk && orders[i] != walk.Reversed()) {
          d = m.Describe(m.circuits()[i]);
          return false;
        }
      }
      return true;
    });
    run("binary", [&](std::string&) { return BinaryTameReport(m).binary; });
    run("base paths match tree paths", [&](std::string&) {
      const GraphFramework f = FrameworkFromGraph(g, m);
      const RealizedGraph r = Realize(m, f);
      for (ElementSet base : m.bases()) {
        for (const VertexCode& v : r.codes) {
          for (const VertexCode& w : r.codes) BasePath(m, f, base, v, w);
        }
      }
      return true;
    });
  }
  run("framework search agrees with realization", [&](std::string& d) {
    const std::optional<GraphFramework> f = FindFramework(m);
    if (!f) {
      d = "no framework";
      return !input.graph.has_value();
    }
    return VerifyFramework(m, *f).valid &&
           VerifyInduces(m, Realize(m, *f).graph).induces;
  });

  bool all = true;
  for (const Check& check : checks) all = all && check.pass;
  std::string out;
  if (c.format == OutputFormat::kText) {
    for (const Check& check : checks) {
      out += (check.pass ? "[PASS] " : "[FAIL] ") + check.name;
      if (!check.detail.empty()) out += ": " + check.detail;
      out += "\n";
    }
  } else {
    Json list = Json::array();
    for (const Check& check : checks) {
      list.push_back({{"name", check.name},
                      {"pass", check.pass},
                      {"detail", check.detail}});
    }
    out = Dump({{"pass", all}, {"checks", list}});
  }
  return {all ? kExitOk : kExitRefuted, out, ""};
}

bool RefutesInput(ErrorKind kind) {
  return kind == ErrorKind::kEmptyCircuit || kind == ErrorKind::kNonAntichain ||
         kind == ErrorKind::kEliminationFailure;
}

}  // namespace

std::vector<std::string> Verbs() {
  return {"validate",  "dual",    "minor",   "connect",       "sign",
          "framework", "realize", "bridges", "check-graphic", "oracle"};
}

CommandResult RunCommand(const Command& c, std::istream* in) {
  try {
    if (c.cap < 1 || c.cap > kHardGroundLimit) {
      throw Error(ErrorKind::kInvalidArgument,
                  "cap must lie in 1.." + std::to_string(kHardGroundLimit));
    }
    Input input;
    try {
      input = LoadInput(c, in);
    } catch (const Error& e) {
      // A validate run refutes a circuit family with the failing witness.
      if (c.verb == "validate" && RefutesInput(e.kind())) {
        return {kExitRefuted, "invalid: " + std::string(e.what()) + "\n", ""};
      }
      throw;
    }
    const Matroid& m = input.matroid;
    if (c.verb == "validate") return Validate(c, input);
    if (c.verb == "dual") return MatroidResult(c, Dual(m));
    if (c.verb == "minor") {
      const ElementSet contract =
          c.contract ? ParseLabels(m, *c.contract) : ElementSet();
      const ElementSet remove =
          c.remove ? ParseLabels(m, *c.remove) : ElementSet();
      return MatroidResult(c, Minor(m, contract, remove));
    }
    if (c.verb == "connect") return Connect(c, input);
    if (c.verb == "sign") return Sign(c, input);
    if (c.verb == "framework") return Framework(c, input);
    if (c.verb == "realize") return Realization(c, input);
    if (c.verb == "bridges") return Bridges(c, input);
    if (c.verb == "check-graphic") return CheckGraphic(c, input);
    if (c.verb == "oracle") return Oracle(c, input);
    throw Error(ErrorKind::kInvalidArgument, "unknown verb " + c.verb);
  } catch (const Error& e) {
    const bool refuted = e.kind() == ErrorKind::kCertificateFailure ||
                         e.kind() == ErrorKind::kNotGraphic;
    return {refuted ? kExitRefuted : kExitInputError, "",
            std::string(e.what()) + "\n"};
  } catch (const std::exception& e) {
    return {kExitInputError, "", std::string(e.what()) + "\n"};
  }
}

CommandResult RunCli(const std::vector<std::string>& args,
                     const std::optional<std::string>& env_cap,
                     std::istream* in) {
  CLI::App app{"Graph frameworks for finite matroids", "framework-forge"};
  Command c;
  bool list_corpus = false;
  std::optional<int> cap;
  std::string format = "json";
  std::string input_format = "auto";
  app.add_option("verb", c.verb,
                 "One of: validate, dual, minor, connect, "
                 "sign, framework, realize, bridges, "
                 "check-graphic, oracle")
      ->check(CLI::IsMember(Verbs()));
  app.add_option("input", c.input_path,
                 "Matroid JSON, graph JSON or edge list; - for stdin");
  app.add_option("--corpus", c.corpus, "Use a built-in instance");
  app.add_flag("--list-corpus", list_corpus, "List built-in instances");
  app.add_option("--input-format", input_format, "auto, matroid, graph, edges")
      ->check(CLI::IsMember({"auto", "matroid", "graph", "edges"}));
  app.add_option("--format", format, "json, dot or text")
      ->check(CLI::IsMember({"json", "dot", "text"}));
  app.add_option("--cap", cap, "Ground set limit (FRAMEWORK_FORGE_CAP)");
  app.add_option("--seed-element", c.seed_element, "Root bridge e0");
  app.add_option("--circuit", c.circuit, "Comma-separated circuit labels");
  app.add_option("--contract", c.contract, "Elements to contract");
  app.add_option("--delete", c.remove, "Elements to delete");
  app.add_option("-k", c.k, "Connectivity order for connect")
      ->check(CLI::PositiveNumber);

  std::ostringstream out;
  std::ostringstream err;
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return {kExitOk, out.str(), err.str()};
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return {kExitInputError, out.str(), err.str()};
  }
  if (list_corpus) {
    std::string names;
    for (const std::string& name : CorpusNames()) names += name + "\n";
    return {kExitOk, names, ""};
  }
  if (c.verb.empty()) {
    return {kExitInputError, "", "a verb is required\n" + app.help()};
  }
  if (cap) {
    c.cap = *cap;
  } else if (env_cap) {
    try {
      std::size_t used = 0;
      c.cap = std::stoi(*env_cap, &used);
      if (used != env_cap->size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      return {kExitInputError, "",
              "FRAMEWORK_FORGE_CAP is not an integer: " + *env_cap + "\n"};
    }
  }
  static const std::map<std::string, OutputFormat> kFormats = {
      {"json", OutputFormat::kJson},
      {"dot", OutputFormat::kDot},
      {"text", OutputFormat::kText}};
  static const std::map<std::string, InputFormat> kInputFormats = {
      {"auto", InputFormat::kAuto},
      {"matroid", InputFormat::kMatroidJson},
      {"graph", InputFormat::kGraphJson},
      {"edges", InputFormat::kEdgeList}};
  c.format = kFormats.at(format);
  c.input_format = kInputFormats.at(input_format);
  return RunCommand(c, in);
}

}  // namespace forge
