// Copyright 2026 The hypernim Authors.
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

#include "cli.h"

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "hypernim/engine.h"
#include "hypernim/errors.h"
#include "hypernim/families.h"
#include "hypernim/graph.h"
#include "hypernim/hypergraph.h"
#include "hypernim/jm.h"
#include "hypernim/position.h"
#include "hypernim/structure.h"
#include "hypernim/verify.h"

namespace hypernim::cli {
namespace {

struct Source {
  std::string file;
  std::string family;
  std::string params;
};

struct Config {
  Source source;
  std::string position;
  int bound = 3;
  int workers = 1;
  int max_pile = 64;
  std::int64_t max_memo = 100'000'000;
  bool machine = false;
  bool certificate = false;
  std::string check = "sg";
  std::string conditions = "A,B1,B2,B3,C2,C3";
  int p = 1;
  int d2_bound = 3;
  bool list = false;
  bool jm_graphs = false;
  int connected = 0;
  bool human_first = false;
};

void AddSource(CLI::App* sub, Source& s) {
  auto* file = sub->add_option("--hypergraph", s.file, "Hypergraph file");
  auto* family = sub->add_option("--family", s.family, "Built-in family name");
  file->excludes(family);
  sub->add_option("--param", s.params, "Family parameters, k=v,...");
}

FamilyInstance Load(const Source& s) {
  if (s.file.empty() == s.family.empty()) {
    throw InvalidArgument("give exactly one of --hypergraph and --family");
  }
  if (!s.file.empty()) {
    if (!s.params.empty()) {
      throw InvalidArgument("--param applies to --family only");
    }
    return FamilyInstance{s.file, ReadHypergraphFile(s.file), std::nullopt,
                          false, false, false};
  }
  return GenerateFamily(FamilySpec{s.family, ParseFamilyParams(s.params)});
}

EngineLimits Limits(const Config& c) {
  if (c.max_pile < 1 || c.max_pile > 255 || c.max_memo < 1) {
    throw InvalidArgument("--max-pile must be in [1, 255] and --max-memo >= 1");
  }
  EngineLimits limits;
  limits.max_pile = c.max_pile;
  limits.max_memo_entries = c.max_memo;
  return limits;
}

const char* Bool(bool b) { return b ? "true" : "false"; }

std::string Tri(const std::optional<bool>& b) {
  return b ? Bool(*b) : "unknown";
}

int CmdHeight(const Config& c, std::ostream& out) {
  const FamilyInstance inst = Load(c.source);
  Engine engine(inst.hypergraph, Limits(c));
  const Position x = ParsePosition(c.position);
  const int h = engine.Height(x);
  out << (c.machine ? "height=" : "") << h << "\n";
  if (c.certificate) {
    const HeightCertificate cert = engine.Certificate(x);
    for (int e = 0; e < inst.hypergraph.num_edges(); ++e) {
      if (cert.multiplicity[e] == 0) continue;
      out << (c.machine ? "mu " : "  mu") << inst.hypergraph.edge(e).ToString()
          << (c.machine ? " " : " = ") << cert.multiplicity[e] << "\n";
    }
  }
  return kExitOk;
}

int CmdSg(const Config& c, std::ostream& out) {
  const FamilyInstance inst = Load(c.source);
  Engine engine(inst.hypergraph, Limits(c));
  const int g = engine.Grundy(ParsePosition(c.position));
  out << (c.machine ? "sg=" : "") << g << "\n";
  return kExitOk;
}

int CmdJm(const Config& c, std::ostream& out) {
  const FamilyInstance inst = Load(c.source);
  Engine engine(inst.hypergraph, Limits(c));
  const JmProfile p = ComputeJmProfile(engine, ParsePosition(c.position));
  if (!c.machine) {
    out << FormatJmProfile(p) << "\n";
    return kExitOk;
  }
  out << "m=" << p.m << "\ny=" << p.y << "\nv=" << p.v
      << "\nclass=" << ToString(p.position_class) << "\nU=" << p.u << "\n";
  if (p.height) out << "height=" << *p.height << "\n";
  return kExitOk;
}

int CmdGen(const Config& c, std::ostream& out) {
  if (c.list) {
    for (const FamilyInfo& f : FamilyCatalog()) {
      out << f.name;
      for (const std::string& p : f.params) out << " " << p << "=<int>";
      out << "  # " << f.summary << "\n";
    }
    return kExitOk;
  }
  out << FormatHypergraph(Load(c.source).hypergraph);
  return kExitOk;
}

int CmdClassify(const Config& c, std::ostream& out) {
  const FamilyInstance inst = Load(c.source);
  const Hypergraph& h = inst.hypergraph;
  const auto uniform = Uniformity(h);
  std::optional<bool> matroid;
  if (uniform) matroid = ExchangeAxiomHolds(h);
  const JmVerdict verdict = JmSufficiency(h, c.d2_bound);
  std::optional<bool> d3 = verdict.d3;
  if (!d3) {
    try {
      d3 = SatisfiesD3(h);
    } catch (const ResourceLimitError&) {
    }
  }
  const bool d1 = verdict.chain_property ? *verdict.chain_property
                                         : HasChainProperty(h);
  const std::vector<std::pair<std::string, std::string>> rows = {
      {"connected", Bool(verdict.connected)},
      {"transversal-free", Bool(IsTransversalFree(h))},
      {"A1", Bool(verdict.minimal_transversal_free)},
      {"uniform", uniform ? std::to_string(*uniform) : "none"},
      {"matroid", matroid ? Bool(*matroid) : "n/a"},
      {"self-dual", Bool(IsSelfDual(h))},
      {"D1", Bool(d1)},
      {"D3", Tri(d3)},
      {"verdict", ToString(verdict.tag)},
  };
  for (const auto& [key, value] : rows) {
    out << key << (c.machine ? "=" : ": ") << value << "\n";
  }
  std::string witness;
  for (VertexSet s : verdict.witness_sets) {
    witness += (witness.empty() ? "" : " ") + s.ToString();
  }
  if (c.machine) {
    out << "reason=" << verdict.reason << "\n";
    if (!witness.empty()) out << "witness=" << witness << "\n";
  } else {
    out << "reason: " << verdict.reason << "\n";
    if (!witness.empty()) out << "witness: " << witness << "\n";
  }
  if (verdict.tag == JmVerdictTag::kUnknown) {
    if (verdict.d2_sampling_skipped) {
      out << (c.machine ? "d2_sample=skipped\n"
                        : "D2 sample: skipped (box too large)\n");
    } else {
      const std::string summary =
          std::to_string(verdict.d2_failures) + "/" +
          std::to_string(verdict.d2_positions_sampled) + " failures on [1.." +
          std::to_string(c.d2_bound) + "]^" + std::to_string(h.num_vertices());
      out << (c.machine ? "d2_sample=" : "D2 sample (advisory, not a proof): ")
          << summary << "\n";
    }
  }
  return kExitOk;
}

std::vector<std::string> SplitCommas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

int CmdVerify(const Config& c, std::ostream& out) {
  VerifyOptions options;
  options.workers = c.workers;
  options.limits = Limits(c);
  if (c.check == "cube-counterexample") {
    const CubeCheckResult r = CubeCounterexampleCheck(c.p);
    const JmProfile& p = r.profile;
    if (c.machine) {
      out << "x=" << FormatPosition(r.x) << "\nm=" << p.m << "\ny=" << p.y
          << "\nheight=" << p.height.value_or(-1)
          << "\nclass=" << ToString(p.position_class)
          << "\nsuccessors=" << r.successors_examined << "\n";
      out << "CONDITION B1 " << (r.refuted() ? "FAILS" : "HOLDS") << " "
          << (r.long_successor ? FormatPosition(*r.long_successor)
                               : "z=" + std::to_string(p.height.value_or(0) - 1))
          << "\n";
    } else {
      out << "position " << FormatPosition(r.x) << ": " << FormatJmProfile(p)
          << " height=" << p.height.value_or(-1) << "\n";
      out << "successors examined: " << r.successors_examined << "\n";
      if (r.refuted()) {
        out << "B1 violated at z=" << *p.height - 1
            << ": no long successor has height " << *p.height - 1
            << "; the cube facets are not JM\n";
      } else if (r.long_successor) {
        out << "long successor of height " << *p.height - 1 << ": "
            << FormatPosition(*r.long_successor) << "\n";
      } else {
        out << "position profile differs from the expected one\n";
      }
    }
    return r.refuted() ? kExitOk : kExitCounterexample;
  }

  const FamilyInstance inst = Load(c.source);
  options.family_id = inst.id;
  if (c.check == "bounds") {
    const BoundsReport r = BoundsAudit(inst.hypergraph, inst.graph_origin);
    out << (c.machine ? "k=" : "uniformity: ")
        << (r.uniform ? std::to_string(r.k) : "none") << "\n";
    out << (c.machine ? "minimal_tf=" : "minimal transversal-free: ")
        << Tri(r.minimal_transversal_free) << "\n";
    for (const BoundCheck& b : r.checks) {
      if (c.machine) {
        out << "CONDITION " << b.name << (b.holds ? " HOLDS " : " FAILS ")
            << b.value << "/" << b.limit << (b.equality ? ";equality" : "")
            << "\n";
      } else {
        out << b.name << ": " << b.value << " vs " << b.limit << " ("
            << b.note << ") " << (b.holds ? "holds" : "FAILS")
            << (b.equality ? ", equality" : "") << "\n";
      }
    }
    return r.AllHold() ? kExitOk : kExitCounterexample;
  }

  ConformanceReport report;
  if (c.check == "sg") {
    report = VerifySgEqualsJm(inst.hypergraph, c.bound, options);
  } else if (c.check == "conditions") {
    report = CheckConditions(inst.hypergraph, c.bound,
                             SplitCommas(c.conditions), options);
  } else if (c.check == "heights") {
    report = HeightLawSuite(inst.hypergraph, c.bound, std::nullopt, options);
  } else {
    throw InvalidArgument("unknown check '" + c.check + "'");
  }
  out << (c.machine ? RenderMachine(report) : RenderReport(report));
  return report.AllHold() ? kExitOk : kExitCounterexample;
}

std::string EdgeList(const SimpleGraph& g) {
  std::string out;
  for (const auto& [u, v] : g.edges()) {
    if (!out.empty()) out += ',';
    out += std::to_string(u) + "-" + std::to_string(v);
  }
  return out;
}

int CmdGraphs(const Config& c, std::ostream& out) {
  std::vector<SimpleGraph> graphs;
  if (c.jm_graphs) {
    graphs = JmGraphEnumeration();
  } else if (c.connected > 0) {
    graphs = EnumerateConnectedGraphsUpToIso(c.connected);
  } else {
    throw InvalidArgument("graphs needs --jm or --connected <n>");
  }
  out << (c.machine ? "count=" : "count: ") << graphs.size() << "\n";
  for (const SimpleGraph& g : graphs) {
    out << (c.machine ? "graph n=" : "n=") << g.num_vertices()
        << " edges=" << EdgeList(g) << "\n";
  }
  return kExitOk;
}

// "<edge-index> <target csv>".
std::optional<Move> ParseHumanMove(const Hypergraph& h, const Position& x,
                                   const std::string& line,
                                   std::string& reason) {
  std::istringstream in(line);
  int e = -1;
  std::string target_text;
  if (!(in >> e >> target_text)) {
    reason = "expected '<edge-index> <target piles>'";
    return std::nullopt;
  }
  if (e < 0 || e >= h.num_edges()) {
    reason = "no edge with index " + std::to_string(e);
    return std::nullopt;
  }
  Position target;
  try {
    target = ParsePosition(target_text);
  } catch (const Error& ex) {
    reason = ex.what();
    return std::nullopt;
  }
  if (target.size() != x.size()) {
    reason = "target needs " + std::to_string(x.size()) + " piles";
    return std::nullopt;
  }
  const VertexSet edge = h.edge(e);
  for (int i = 0; i < x.size(); ++i) {
    if (edge.contains(i) && target[i] >= x[i]) {
      reason = "pile " + std::to_string(i) + " is on edge " + edge.ToString() +
               " and must strictly decrease";
      return std::nullopt;
    }
    if (!edge.contains(i) && target[i] != x[i]) {
      reason = "pile " + std::to_string(i) + " is off edge " +
               edge.ToString() + " and must not change";
      return std::nullopt;
    }
  }
  return Move{e, target};
}

int CmdPlay(const Config& c, std::istream& in, std::ostream& out) {
  const FamilyInstance inst = Load(c.source);
  const Hypergraph& h = inst.hypergraph;
  Engine engine(h, Limits(c));
  Position x = ParsePosition(c.position);
  engine.Grundy(x);  // rejects oversized piles up front
  out << "edges:";
  for (int e = 0; e < h.num_edges(); ++e) {
    out << " " << e << "=" << h.edge(e).ToString();
  }
  out << "\n";
  bool engine_turn = !c.human_first;
  while (true) {
    const int g = engine.Grundy(x);
    out << "position " << FormatPosition(x) << " sg=" << g << "\n";
    if (PlayableEdges(h, x).empty()) {
      out << (engine_turn ? "no moves left: engine loses\n"
                          : "no moves left: you lose\n");
      return kExitOk;
    }
    if (engine_turn) {
      Move move;
      if (auto best = engine.OptimalMove(x)) {
        move = *best;
        out << "engine plays edge " << move.edge_index << " "
            << h.edge(move.edge_index).ToString() << " -> "
            << FormatPosition(move.target) << " (P position)\n";
      } else {
        out << "sg is 0: the mover loses under optimal play\n";
        move = EnumerateMoves(h, x).front();
        out << "engine plays edge " << move.edge_index << " "
            << h.edge(move.edge_index).ToString() << " -> "
            << FormatPosition(move.target) << " (losing)\n";
      }
      x = move.target;
    } else {
      std::optional<Move> move;
      while (!move) {
        out << "your move (<edge-index> <target piles>): " << std::flush;
        std::string line;
        if (!std::getline(in, line)) {
          out << "\ninput closed\n";
          return kExitOk;
        }
        if (line == "q" || line == "quit") return kExitOk;
        std::string reason;
        move = ParseHumanMove(h, x, line, reason);
        if (!move) out << "illegal move: " << reason << "\n";
      }
      x = move->target;
    }
    engine_turn = !engine_turn;
  }
}

}  // namespace

int Run(int argc, const char* const* argv, std::istream& in,
        std::ostream& out, std::ostream& err) {
  CLI::App app{"Sprague-Grundy values, heights and JM formula for hypergraph NIM",
               "hypernim"};
  app.require_subcommand(1);
  Config c;

  auto add_engine = [&](CLI::App* sub) {
    sub->add_option("--max-pile", c.max_pile, "Largest pile for SG search");
    sub->add_option("--max-memo", c.max_memo, "Memo entry cap");
    sub->add_flag("--machine", c.machine, "key=value output");
  };

  auto* height = app.add_subcommand("height", "Height of a position");
  AddSource(height, c.source);
  height->add_option("--position", c.position, "Comma-separated piles")
      ->required();
  height->add_flag("--certificate", c.certificate, "Print an edge packing");
  add_engine(height);

  auto* sg = app.add_subcommand("sg", "Sprague-Grundy value of a position");
  AddSource(sg, c.source);
  sg->add_option("--position", c.position, "Comma-separated piles")->required();
  add_engine(sg);

  auto* jm = app.add_subcommand("jm", "JM formula profile of a position");
  AddSource(jm, c.source);
  jm->add_option("--position", c.position, "Comma-separated piles")->required();
  add_engine(jm);

  auto* gen = app.add_subcommand("gen", "Write a built-in family");
  AddSource(gen, c.source);
  gen->add_flag("--list", c.list, "List the families");

  auto* classify = app.add_subcommand("classify", "Structural properties");
  AddSource(classify, c.source);
  classify->add_option("--d2-bound", c.d2_bound,
                       "Box for advisory D2 sampling");
  classify->add_flag("--machine", c.machine, "key=value output");

  auto* verify = app.add_subcommand("verify", "Bounded conformance checks");
  AddSource(verify, c.source);
  verify->add_option("--bound", c.bound, "Box [0..bound]^n");
  verify->add_option("--workers", c.workers, "Parallel box partitions");
  verify
      ->add_option("--check", c.check,
                   "sg, conditions, heights, bounds or cube-counterexample")
      ->check(CLI::IsMember(
          {"sg", "conditions", "heights", "bounds", "cube-counterexample"}));
  verify->add_option("--conditions", c.conditions, "Subset of A,B1,B2,B3,C2,C3");
  verify->add_option("--p", c.p, "Cube counterexample parameter");
  add_engine(verify);

  auto* graphs = app.add_subcommand("graphs", "Small graph enumeration");
  graphs->add_flag("--jm", c.jm_graphs, "The JM graphs");
  graphs->add_option("--connected", c.connected,
                     "Connected graphs on n vertices");
  graphs->add_flag("--machine", c.machine, "key=value output");

  auto* play = app.add_subcommand("play", "Play against the engine");
  AddSource(play, c.source);
  play->add_option("--position", c.position, "Start position")->required();
  play->add_flag("--human-first", c.human_first, "Human moves first");
  add_engine(play);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (height->parsed()) return CmdHeight(c, out);
    if (sg->parsed()) return CmdSg(c, out);
    if (jm->parsed()) return CmdJm(c, out);
    if (gen->parsed()) return CmdGen(c, out);
    if (classify->parsed()) return CmdClassify(c, out);
    if (verify->parsed()) return CmdVerify(c, out);
    if (graphs->parsed()) return CmdGraphs(c, out);
    if (play->parsed()) return CmdPlay(c, in, out);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ResourceLimitError& e) {
    err << "resource limit: " << e.what() << "\n";
    return kExitResource;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace hypernim::cli
