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


// resmat: metric dimension, resolving-set independence systems and greedy
// minimum-weight bases from the command line.
//
//   resmat dim     [GRAPH | --gen KIND P...] [--all]
//   resmat matroid [GRAPH | --gen KIND P... | --system FILE] [--structure]
//   resmat greedy  [GRAPH | --gen KIND P... | --system FILE] [--weights FILE]
//                  [--force] [--certify]
//   resmat verify
//
// Global: --json, --max-n, --max-flats-n, --seed (also RESMAT_MAX_N,
// RESMAT_MAX_FLATS_N, RESMAT_SEED; flags win over the environment).
// Exit codes: 0 ok, 2 bad input, 3 limit refusal, 4 not a matroid / failed
// claim.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "resmat/claims.hpp"
#include "resmat/error.hpp"
#include "resmat/graph.hpp"
#include "resmat/greedy.hpp"
#include "resmat/matroid.hpp"
#include "resmat/report.hpp"
#include "resmat/resolving.hpp"
#include "resmat/tree.hpp"

namespace {

using namespace resmat;

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitLimit = 3;
constexpr int kExitVerdict = 4;

int ExitCodeFor(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kLimit: return kExitLimit;
    case ErrorKind::kNotMatroid: return kExitVerdict;
    default: return kExitInput;
  }
}

struct Options {
  bool json = false;
  int max_n = EnumerationLimits{}.max_n;
  int max_flats_n = EnumerationLimits{}.max_flats_n;
  std::uint64_t seed = ClaimsConfig{}.seed;

  std::string graph_file;
  std::vector<std::string> gen;
  std::string system_file;
  std::string weights_file;
  bool all = false;
  bool structure = false;
  bool force = false;
  bool certify = false;

  EnumerationLimits limits() const {
    EnumerationLimits l;
    l.max_n = max_n;
    l.max_flats_n = max_flats_n;
    return l;
  }
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) Fail(ErrorKind::kParse, "cannot read '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Input {
  std::optional<Graph> graph;
  std::optional<Family> family;
  std::vector<int> params;
};

Input LoadGraph(const Options& o) {
  Input in;
  if (!o.gen.empty() && !o.graph_file.empty()) {
    Fail(ErrorKind::kInvalidArgument, "give either a graph file or --gen, not both");
  }
  if (!o.gen.empty()) {
    in.family = ParseFamily(o.gen[0]);
    for (std::size_t i = 1; i < o.gen.size(); ++i) {
      try {
        in.params.push_back(std::stoi(o.gen[i]));
      } catch (const std::exception&) {
        Fail(ErrorKind::kParse, "--gen: expected an integer, got '" + o.gen[i] + "'");
      }
    }
    in.graph = GenerateFamily(*in.family, in.params);
  } else if (!o.graph_file.empty()) {
    const std::string text = ReadFile(o.graph_file);
    try {
      in.graph = ParseGraph(text);
    } catch (const Error& e) {
      Fail(e.kind(), o.graph_file + ": " + e.what());
    }
  }
  return in;
}

// The system a matroid/greedy command works on, plus the graph it came from.
struct SystemInput {
  Input input;
  std::optional<IndependenceSystem> system;
};

SystemInput LoadSystem(const Options& o) {
  SystemInput out;
  if (!o.system_file.empty()) {
    if (!o.gen.empty() || !o.graph_file.empty()) {
      Fail(ErrorKind::kInvalidArgument, "--system excludes a graph input");
    }
    const std::string text = ReadFile(o.system_file);
    try {
      out.system = ParseExplicitSystem(text);
    } catch (const Error& e) {
      Fail(e.kind(), o.system_file + ": " + e.what());
    }
    return out;
  }
  out.input = LoadGraph(o);
  if (!out.input.graph) {
    Fail(ErrorKind::kInvalidArgument, "no input: give a graph file, --gen or --system");
  }
  return out;
}

bool IsTreeNotPath(const Graph& g) {
  const auto cls = Classify(g);
  return cls.tree && !cls.path && g.n() >= 4;
}

Json SystemJson(const IndependenceSystem& sys) {
  return Json{{"ground_size", sys.ground_size()},
              {"labels", sys.labels()},
              {"provenance", ProvenanceName(sys.provenance())}};
}

// Every subset of size rank is a base.
bool IsUniform(const IndependenceSystem& sys, const MatroidVerdict& v) {
  bool uniform = true;
  ForEachSubsetOfSize(sys.ground_size(), v.rank, [&](VertexSet s) {
    uniform = sys.IsIndependent(s);
    return !uniform;
  });
  return uniform;
}

Json CmdDim(const Options& o) {
  const Input in = LoadGraph(o);
  if (!in.graph) Fail(ErrorKind::kInvalidArgument, "no input: give a graph file or --gen");
  const Graph& g = *in.graph;
  const auto limits = o.limits();
  const VertexSet basis = MetricBasis(g, limits);
  Json out{{"graph", GraphJson(g)},
           {"dimension", basis.size()},
           {"basis", SetJson(g.labels(), basis)}};
  if (in.family && *in.family != Family::kStar) {
    out["closed_form_dimension"] = ClosedFormDimension(*in.family, in.params);
  }
  if (o.all) {
    out["minimal_resolving_sets"] = FamilyJson(g.labels(), MinimalResolvingSets(g, limits));
  }
  return out;
}

Json CmdMatroid(const Options& o) {
  const SystemInput in = LoadSystem(o);
  const auto limits = o.limits();
  Json out;
  std::optional<TreeDecomposition> td;
  if (in.input.graph) {
    out["graph"] = GraphJson(*in.input.graph);
    if (IsTreeNotPath(*in.input.graph)) td = DecomposeTree(*in.input.graph);
  }

  // Trees beyond the enumeration limit get the leg-criterion verdict alone.
  if (td && in.input.graph->n() > limits.max_n) {
    out["system"] = SystemJson(TreeOracleSystem(*td));
    out["brute_force"] = "skipped: " + std::to_string(in.input.graph->n()) +
                         " vertices exceeds max-n " + std::to_string(limits.max_n);
    out["verdict"] = Json{{"is_matroid", true}, {"rank", TreeRank(*td)}};
    out["tree"] = TreeJson(*td);
    return out;
  }

  const IndependenceSystem sys =
      in.system ? *in.system : FromGraph(*in.input.graph, limits);
  out["system"] = SystemJson(sys);
  const MatroidVerdict v = CheckAugmentation(sys, limits);
  out["verdict"] = VerdictJson(sys, v);
  out["loops"] = SetJson(sys.labels(), Loops(sys, limits));
  out["isthmuses"] = SetJson(sys.labels(), Isthmuses(sys, limits));
  if (v.is_matroid) {
    const bool uniform = IsUniform(sys, v);
    out["uniform"] = uniform;
    if (uniform) {
      out["isomorphic_to"] = "U(" + std::to_string(sys.ground_size()) + "," +
                             std::to_string(v.rank) + ")";
    }
    if (o.structure) {
      const auto dual = Dual(sys, limits);
      out["flats"] = FamilyJson(sys.labels(), Flats(sys, limits));
      out["hyperplanes"] = FamilyJson(sys.labels(), Hyperplanes(sys, limits));
      out["dual_circuits"] = FamilyJson(sys.labels(), Circuits(dual, limits));
    }
  } else if (o.structure) {
    out["structure"] = "skipped: flats, hyperplanes and dual need a matroid";
  }
  if (td) {
    const auto fast = TreeOracleSystem(*td);
    bool agrees = true;
    ForEachSubset(sys.ground_size(), [&](VertexSet s) {
      agrees = agrees && fast.IsIndependent(s) == sys.IsIndependent(s);
    });
    Json tree = TreeJson(*td);
    tree["fast_path_agrees"] = agrees;
    out["tree"] = tree;
  }
  return out;
}

Json CmdGreedy(const Options& o) {
  const SystemInput in = LoadSystem(o);
  const auto limits = o.limits();
  const IndependenceSystem sys =
      in.system ? *in.system
      : IsTreeNotPath(*in.input.graph) && in.input.graph->n() > limits.max_n
          ? TreeOracleSystem(DecomposeTree(*in.input.graph))
          : FromGraph(*in.input.graph, limits);

  std::vector<std::string> warnings;
  WeightAssignment weights = WeightAssignment::Uniform(sys.ground_size(), Weight(1));
  if (!o.weights_file.empty()) {
    const std::string text = ReadFile(o.weights_file);
    try {
      auto parsed = ParseWeights(text, sys.labels());
      weights = std::move(parsed.weights);
      warnings = std::move(parsed.warnings);
    } catch (const Error& e) {
      Fail(e.kind(), o.weights_file + ": " + e.what());
    }
  }
  for (const auto& w : warnings) std::cerr << "warning: " << w << '\n';

  const GreedyResult r = GreedyMinWeightBase(sys, weights, {.force = o.force}, limits);
  Json out;
  if (in.input.graph) out["graph"] = GraphJson(*in.input.graph);
  out["system"] = SystemJson(sys);
  out["warnings"] = warnings;
  out["greedy"] = GreedyJson(sys, weights, r);
  if (o.certify) {
    const GreedyResult best = ExhaustiveMinWeightBase(sys, weights, limits);
    out["exhaustive"] = Json{{"selected", SetJson(sys.labels(), best.selected)},
                             {"total_weight", FormatWeight(best.total)},
                             {"greedy_optimal", best.total == r.total}};
  }
  return out;
}

Json CmdVerify(const Options& o, bool* all_passed) {
  ClaimsConfig config;
  config.seed = o.seed;
  config.limits = o.limits();
  ClaimRunner runner(config);
  const auto checks = runner.RunAll();
  Json matrix = Json::object();
  for (const auto& c : checks) {
    const std::string key = std::to_string(c.criterion) + ":" + c.claim;
    const bool ok = c.passed && (!matrix.contains(key) || matrix[key] == "PASS");
    matrix[key] = ok ? "PASS" : "FAIL";
  }
  *all_passed = true;
  for (const auto& c : checks) {
    if (!c.passed) {
      *all_passed = false;
      std::cerr << "failed: [" << c.criterion << "] " << c.claim << ": " << c.name << ": "
                << c.detail << '\n';
    }
  }
  Json out{{"matrix", matrix}};
  const Json claims = ClaimsJson(checks, config);
  for (const auto& [key, value] : claims.items())
    if (key != "seed") out[key] = value;
  return out;
}

void AddGraphInput(CLI::App* cmd, Options& o) {
  cmd->add_option("graph", o.graph_file, "Graph file ('n m', optional labels: line, edges)");
  cmd->add_option("--gen", o.gen,
                  "Generate a graph: path N | cycle N | complete N | wheel N | star K | "
                  "complete_bipartite M N")
      ->expected(2, 3);
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Metric dimension and resolving-set matroids"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", o.json, "Emit the report as one JSON document");
  app.add_option("--max-n", o.max_n, "Largest ground set for 2^n scans")
      ->envname("RESMAT_MAX_N")
      ->check(CLI::Range(1, kMaxGroundSize));
  app.add_option("--max-flats-n", o.max_flats_n, "Largest ground set for flat enumeration")
      ->envname("RESMAT_MAX_FLATS_N")
      ->check(CLI::Range(1, kMaxGroundSize));
  app.add_option("--seed", o.seed, "Seed for randomized checks")->envname("RESMAT_SEED");

  auto* dim = app.add_subcommand("dim", "Metric dimension, a metric basis, minimal resolving sets");
  AddGraphInput(dim, o);
  dim->add_flag("--all", o.all, "List all minimal resolving sets");

  auto* mat = app.add_subcommand("matroid", "Matroid verdict for the resolving-set system");
  AddGraphInput(mat, o);
  mat->add_option("--system", o.system_file, "Explicit independence system file");
  mat->add_flag("--structure", o.structure, "Flats, hyperplanes and dual circuits");

  auto* greedy = app.add_subcommand("greedy", "Greedy minimum-weight base");
  AddGraphInput(greedy, o);
  greedy->add_option("--system", o.system_file, "Explicit independence system file");
  greedy->add_option("--weights", o.weights_file, "Weight file ('label weight' lines)");
  greedy->add_flag("--force", o.force, "Run on an unverified system; result is uncertified");
  greedy->add_flag("--certify", o.certify, "Cross-check against the exhaustive minimum");

  auto* verify = app.add_subcommand("verify", "Run the reproduction suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  std::string command;
  for (int i = 1; i < argc; ++i) command += (i > 1 ? " " : "") + std::string(argv[i]);

  const auto start = std::chrono::steady_clock::now();
  int exit_code = kExitOk;
  Json body;
  try {
    if (*dim) {
      body = CmdDim(o);
    } else if (*mat) {
      body = CmdMatroid(o);
    } else if (*greedy) {
      body = CmdGreedy(o);
    } else if (*verify) {
      bool passed = false;
      body = CmdVerify(o, &passed);
      if (!passed) exit_code = kExitVerdict;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return ExitCodeFor(e.kind());
  }
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();

  const auto limits = o.limits();
  Json report{{"command", command},
              {"config",
               {{"max_n", limits.max_n},
                {"max_flats_n", limits.max_flats_n},
                {"max_iso_n", limits.max_iso_n},
                {"seed", o.seed}}}};
  for (const auto& [key, value] : body.items()) report[key] = value;
  report["timing"] = Json{{"seconds", seconds}};

  std::cout << (o.json ? report.dump(2) + "\n" : RenderText(report));
  return exit_code;
}
