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

// quickprune: command-line driver.
//
//   quickprune gen    --kind ba --n 4000 --attach 20 --seed 1 --out g.txt
//   quickprune prune  --graph g.txt --objective coverage --kappa-min 10 ...
//   quickprune solve  --graph g.txt --ground run.ids --budget 50
//   quickprune eval   --graph g.txt --pruned run.ids --budgets 10:100:10
//   quickprune sweep  --graph g.txt --pruners quickprune,topk --k 200 ...
//   quickprune bounds --n 1000 --kappa 100
//
// Every subcommand also reads its options from --config FILE (TOML or INI,
// one [section] per subcommand). Relative input paths that do not exist are
// looked up under $QUICKPRUNE_DATA_DIR.
//
// Exit status: 0 ok, 2 bad configuration, 3 I/O or parse error, 4 internal
// invariant violation.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "quickprune/quickprune.hpp"

namespace {

using namespace qprune;

constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;
constexpr int kExitInvariant = 4;

struct ObjectiveOptions {
  std::string graph;
  bool directed = false;
  std::string objective = "coverage";
  std::string costs = "unit";
  double cost_alpha = 1.0 / 20;
  double p = 0.01;
  std::size_t samples = 100;
  std::optional<std::uint64_t> seed;
  std::string kernel;
  std::string queries;
  double lambda = 10.0;
};

struct PruneOptions {
  std::string pruner = "quickprune";
  std::vector<std::string> pruners;
  std::optional<double> kappa;
  std::optional<double> kappa_min;
  std::optional<double> kappa_max;
  double eta = 0.5;
  double delta = 0.1;
  double epsilon = 0.1;
  unsigned threads = 1;
  double r = 8.0;
  double c = 8.0;
  std::size_t k = 0;
  std::optional<std::uint64_t> prune_seed;
};

struct SolveOptions {
  std::string solver;
  std::optional<double> budget;
  std::string budgets;
  std::string ground;
  std::string pruned;
  std::string name = "pruned";
  std::optional<double> kappa_min;
  std::optional<double> kappa_max;
};

std::string resolve_input(const std::string& path) {
  namespace fs = std::filesystem;
  if (path.empty() || fs::exists(path)) return path;
  if (fs::path(path).is_relative())
    if (const char* dir = std::getenv("QUICKPRUNE_DATA_DIR")) {
      const fs::path candidate = fs::path(dir) / path;
      if (fs::exists(candidate)) return candidate.string();
    }
  return path;
}

using AnyOracle =
    std::variant<CoverageOracle, CutOracle, InfluenceOracle, SimGraphCutOracle>;

struct Instance {
  std::shared_ptr<const Graph> graph;  // null for simgraphcut
  std::vector<double> costs;
  std::optional<AnyOracle> oracle;
  std::size_t n = 0;
};

Instance load_instance(const ObjectiveOptions& opt) {
  Instance inst;
  if (opt.objective == "simgraphcut") {
    if (opt.kernel.empty() || opt.queries.empty())
      throw InputError("simgraphcut needs --kernel and --queries");
    if (opt.costs != "unit")
      throw InputError("simgraphcut supports unit costs only");
    auto kernel = load_similarity_kernel(resolve_input(opt.kernel),
                                         resolve_input(opt.queries), opt.lambda);
    inst.oracle.emplace(make_simgraphcut_oracle(std::move(kernel)));
    inst.n = std::get<SimGraphCutOracle>(*inst.oracle).ground_size();
    inst.costs.assign(inst.n, 1.0);
    return inst;
  }
  if (opt.graph.empty()) throw InputError("--graph is required");
  Graph g = read_edge_list_file(resolve_input(opt.graph), opt.directed);
  if (opt.costs == "knapsack")
    g = assign_knapsack_costs(g, opt.cost_alpha, CostMode::degree);
  else if (opt.costs != "unit")
    throw InputError("--costs must be unit or knapsack");
  inst.graph = std::make_shared<const Graph>(std::move(g));
  inst.n = inst.graph->num_nodes();
  inst.costs.assign(inst.graph->costs().begin(), inst.graph->costs().end());

  if (opt.objective == "coverage") {
    inst.oracle.emplace(make_coverage_oracle(inst.graph));
  } else if (opt.objective == "cut") {
    inst.oracle.emplace(make_cut_oracle(inst.graph));
  } else if (opt.objective == "influence") {
    if (!opt.seed) throw InputError("influence needs --seed");
    inst.oracle.emplace(
        make_influence_oracle(*inst.graph, opt.p, opt.samples, *opt.seed));
  } else {
    throw InputError("unknown objective '" + opt.objective + "'");
  }
  return inst;
}

Json objective_json(const ObjectiveOptions& opt, const Instance& inst) {
  Json j = {{"objective", opt.objective}, {"n", inst.n}, {"costs", opt.costs}};
  if (inst.graph) j["graph"] = graph_metadata(*inst.graph, opt.graph);
  if (opt.objective == "influence")
    j["influence"] = {{"p", opt.p}, {"samples", opt.samples}, {"seed", *opt.seed}};
  if (opt.objective == "simgraphcut")
    j["simgraphcut"] = {{"kernel", opt.kernel},
                        {"queries", opt.queries},
                        {"lambda", opt.lambda}};
  return j;
}

ElementSet all_ids(std::size_t n) {
  ElementSet ids(n);
  for (std::size_t i = 0; i < n; ++i) ids[i] = static_cast<ElementId>(i);
  return ids;
}

ElementSet ground_or_all(const std::string& path, std::size_t n) {
  if (path.empty()) return all_ids(n);
  return read_id_file(resolve_input(path));
}

SolverKind solver_for(const SolveOptions& s, const ObjectiveOptions& o) {
  const std::string name =
      s.solver.empty() ? (o.costs == "knapsack" ? "knapsack-greedy" : "greedy")
                       : s.solver;
  if (name == "greedy") return SolverKind::greedy;
  if (name == "knapsack-greedy") return SolverKind::knapsack_greedy;
  throw InputError("--solver must be greedy or knapsack-greedy");
}

std::vector<double> budgets_for(const SolveOptions& s) {
  if (!s.budgets.empty()) {
    double lo = 0;
    double hi = 0;
    double step = 0;
    char c1 = 0;
    char c2 = 0;
    std::istringstream in(s.budgets);
    if (!(in >> lo >> c1 >> hi >> c2 >> step) || c1 != ':' || c2 != ':' ||
        !(in >> std::ws).eof())
      throw InputError("--budgets must be LO:HI:STEP");
    return budget_range(lo, hi, step);
  }
  if (!s.budget) throw InputError("--budget or --budgets is required");
  return {*s.budget};
}

struct PruneOutcome {
  PrunerOutput output;
  Json report;
};

template <objective O>
PruneOutcome run_pruner(const std::string& pruner, const PruneOptions& opt,
                        const Oracle<O>& oracle, const Instance& inst) {
  const ElementSet stream = all_ids(inst.n);
  PruneOutcome out;
  out.output.name = pruner;
  if (pruner == "quickprune") {
    if (!opt.kappa_min || !opt.kappa_max)
      throw InputError("quickprune needs --kappa-min and --kappa-max");
    const LadderParams params{*opt.kappa_min, *opt.kappa_max, opt.eta,
                              opt.delta, opt.epsilon};
    const auto report = quickprune(stream, oracle, inst.costs, params, opt.threads);
    out.output.pruned = report.pruned;
    out.output.oracle_calls = report.oracle_calls;
    out.output.kappa_min = params.kappa_min;
    out.output.kappa_max = params.kappa_max;
    out.report = to_json(report);
  } else if (pruner == "quickprune-single") {
    const auto kappa = opt.kappa ? opt.kappa : opt.kappa_max;
    if (!kappa) throw InputError("quickprune-single needs --kappa");
    const auto report = quickprune_single(
        stream, oracle, inst.costs, PruneParams{*kappa, opt.delta, opt.epsilon});
    out.output.pruned = report.pruned;
    out.output.oracle_calls = report.oracle_calls;
    out.output.kappa_min = out.output.kappa_max = *kappa;
    out.report = to_json(report);
  } else if (pruner == "ss") {
    if (!opt.prune_seed) throw InputError("ss needs --prune-seed");
    BaselineConfig cfg;
    cfg.kind = BaselineKind::ss;
    cfg.r = opt.r;
    cfg.c = opt.c;
    cfg.seed = *opt.prune_seed;
    const auto res = ss_prune(oracle, stream, cfg);
    out.output.pruned = res.kept;
    out.output.oracle_calls = res.oracle_calls;
    out.report = {{"algorithm", "ss"},
                  {"params", {{"r", cfg.r}, {"c", cfg.c}, {"seed", cfg.seed}}},
                  {"n", inst.n},
                  {"pruned_size", res.kept.size()},
                  {"oracle_calls", res.oracle_calls},
                  {"rounds", res.rounds},
                  {"probes", res.probes}};
  } else if (pruner == "topk" || pruner == "random") {
    if (opt.k == 0) throw InputError(pruner + " needs --k");
    Json params = {{"k", opt.k}};
    if (pruner == "topk") {
      if (!inst.graph) throw InputError("topk needs a graph objective");
      out.output.pruned = top_k_prune(*inst.graph, inst.costs, opt.k);
    } else {
      if (!opt.prune_seed) throw InputError("random needs --prune-seed");
      out.output.pruned = random_prune(inst.n, opt.k, *opt.prune_seed);
      params["seed"] = *opt.prune_seed;
    }
    out.report = {{"algorithm", pruner},
                  {"params", params},
                  {"n", inst.n},
                  {"pruned_size", out.output.pruned.size()},
                  {"oracle_calls", 0}};
  } else {
    throw InputError("unknown pruner '" + pruner + "'");
  }
  return out;
}

void write_prune_files(const std::string& prefix, const PruneOutcome& out,
                       const Json& objective) {
  if (prefix.empty()) throw InputError("--out is required");
  Json report = out.report;
  report["instance"] = objective;
  write_id_file(prefix + ".ids", out.output.pruned);
  write_text_file(prefix + ".json", report.dump(2) + "\n");
}

void add_objective_options(CLI::App* cmd, ObjectiveOptions& o) {
  cmd->add_option("--graph", o.graph, "Edge list (.txt or .gz)");
  cmd->add_flag("--directed", o.directed, "Treat the edge list as arcs");
  cmd->add_option("--objective", o.objective, "Objective function")
      ->check(CLI::IsMember({"coverage", "cut", "influence", "simgraphcut"}))
      ->capture_default_str();
  cmd->add_option("--costs", o.costs, "Element costs")
      ->check(CLI::IsMember({"unit", "knapsack"}))
      ->capture_default_str();
  cmd->add_option("--cost-alpha", o.cost_alpha, "Degree offset of knapsack costs")
      ->capture_default_str();
  cmd->add_option("--p", o.p, "Influence edge probability")->capture_default_str();
  cmd->add_option("--samples", o.samples, "Influence live-edge samples")
      ->capture_default_str();
  cmd->add_option("--seed", o.seed, "Influence sample seed");
  cmd->add_option("--kernel", o.kernel, "Similarity matrix CSV");
  cmd->add_option("--queries", o.queries, "Query row ids, one per line");
  cmd->add_option("--lambda", o.lambda, "Relevance weight")->capture_default_str();
}

void add_prune_options(CLI::App* cmd, PruneOptions& p) {
  cmd->add_option("--kappa", p.kappa, "Budget of quickprune-single");
  cmd->add_option("--kappa-min", p.kappa_min, "Smallest budget");
  cmd->add_option("--kappa-max", p.kappa_max, "Largest budget");
  cmd->add_option("--eta", p.eta, "Ladder ratio")->capture_default_str();
  cmd->add_option("--delta", p.delta, "Admission threshold")->capture_default_str();
  cmd->add_option("--epsilon", p.epsilon, "Deletion threshold")
      ->capture_default_str();
  cmd->add_option("--threads", p.threads, "Worker threads")->capture_default_str();
  cmd->add_option("--r", p.r, "ss: probes per round = r ln n")->capture_default_str();
  cmd->add_option("--c", p.c, "ss: pool shrink factor")->capture_default_str();
  cmd->add_option("--k", p.k, "topk / random: target size");
  cmd->add_option("--prune-seed", p.prune_seed, "Seed of ss / random");
}

template <class F>
void with_oracle(Instance& inst, F&& f) {
  std::visit(std::forward<F>(f), *inst.oracle);
}

int run(int argc, char** argv) {
  CLI::App app{"Single-pass pruning for budgeted submodular maximization"};
  app.set_config("--config", "", "TOML or INI configuration file");
  app.require_subcommand(1);

  ObjectiveOptions obj;
  PruneOptions prune_opt;
  SolveOptions solve_opt;
  std::string out_path;

  auto* prune = app.add_subcommand("prune", "Prune the ground set");
  add_objective_options(prune, obj);
  add_prune_options(prune, prune_opt);
  prune->add_option("--pruner", prune_opt.pruner, "Pruning method")
      ->check(CLI::IsMember({"quickprune", "quickprune-single", "ss", "topk", "random"}))
      ->capture_default_str();
  prune->add_option("--out", out_path, "Output prefix (.ids and .json)");

  auto* solve_cmd = app.add_subcommand("solve", "Run a heuristic on a ground set");
  add_objective_options(solve_cmd, obj);
  solve_cmd->add_option("--solver", solve_opt.solver, "greedy or knapsack-greedy");
  solve_cmd->add_option("--budget", solve_opt.budget, "Cardinality or knapsack budget");
  solve_cmd->add_option("--ground", solve_opt.ground, "Id file; default all elements");
  solve_cmd->add_option("--out", out_path, "JSON output; default stdout");

  auto* eval = app.add_subcommand("eval", "Score one pruned set");
  add_objective_options(eval, obj);
  eval->add_option("--pruned", solve_opt.pruned, "Pruned id file")->required();
  eval->add_option("--name", solve_opt.name, "Pruner label")->capture_default_str();
  eval->add_option("--solver", solve_opt.solver, "greedy or knapsack-greedy");
  eval->add_option("--budget", solve_opt.budget, "Single budget");
  eval->add_option("--budgets", solve_opt.budgets, "LO:HI:STEP");
  eval->add_option("--kappa-min", solve_opt.kappa_min, "Lower end of the pruner range");
  eval->add_option("--kappa-max", solve_opt.kappa_max, "Upper end of the pruner range");
  eval->add_option("--out", out_path, "CSV output; default stdout");

  std::string jsonl_path;
  auto* sweep = app.add_subcommand("sweep", "Prune with several methods and score each");
  add_objective_options(sweep, obj);
  add_prune_options(sweep, prune_opt);
  sweep->add_option("--pruners", prune_opt.pruners, "Comma-separated methods")
      ->delimiter(',')
      ->required();
  sweep->add_option("--solver", solve_opt.solver, "greedy or knapsack-greedy");
  sweep->add_option("--budgets", solve_opt.budgets, "LO:HI:STEP")->required();
  sweep->add_option("--out", out_path, "CSV output; default stdout");
  sweep->add_option("--jsonl", jsonl_path, "Also write JSON lines here");

  std::string kind = "ba";
  std::size_t gen_n = 0;
  GeneratorParams gen_params;
  std::optional<std::uint64_t> gen_seed;
  auto* gen = app.add_subcommand("gen", "Write a synthetic graph");
  gen->add_option("--kind", kind, "er, ba, star or path")
      ->check(CLI::IsMember({"er", "ba", "star", "path"}))
      ->capture_default_str();
  gen->add_option("--n", gen_n, "Number of nodes")->required();
  gen->add_option("--p", gen_params.edge_probability, "er: edge probability");
  gen->add_option("--attach", gen_params.attach, "ba: edges per new node")
      ->capture_default_str();
  gen->add_option("--seed", gen_seed, "Generator seed");
  gen->add_option("--out", out_path, "Edge list output")->required();

  double b_n = 0;
  double b_kappa = 0;
  double b_gamma = 1.0;
  double b_c_min = 1.0;
  double b_delta = 0.1;
  double b_epsilon = 0.1;
  auto* bounds = app.add_subcommand("bounds", "Print guarantee and size bound");
  bounds->add_option("--n", b_n, "Ground-set size")->required();
  bounds->add_option("--kappa", b_kappa, "Budget")->required();
  bounds->add_option("--delta", b_delta, "Admission threshold")->capture_default_str();
  bounds->add_option("--epsilon", b_epsilon, "Deletion threshold")
      ->capture_default_str();
  bounds->add_option("--gamma", b_gamma, "Submodularity ratio")->capture_default_str();
  bounds->add_option("--c-min", b_c_min, "Smallest cost")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    // A --config file that cannot be read is an I/O problem, not a bad flag.
    return dynamic_cast<const CLI::FileError*>(&e) ? kExitIo : kExitConfig;
  }

  if (*bounds) {
    const double a1 = alpha_single(b_delta, b_epsilon, b_gamma);
    const double am = alpha_multi(b_delta, b_epsilon, b_gamma);
    // The size bound grows like ln(n / eps); it is unbounded at eps = 0.
    const double sb =
        b_epsilon == 0.0 && b_n > 0.0 && b_kappa > 0.0 && b_delta > 0.0 && b_c_min > 0.0
            ? std::numeric_limits<double>::infinity()
            : size_bound(b_n, b_kappa, b_delta, b_c_min, b_epsilon);
    std::printf("%-14s %.10g\n", "alpha_single", a1);
    std::printf("%-14s %.10g\n", "alpha_multi", am);
    std::printf("%-14s %.10g\n", "size_bound", sb);
    return 0;
  }

  if (*gen) {
    static const std::map<std::string, GraphKind> kinds{
        {"er", GraphKind::erdos_renyi},
        {"ba", GraphKind::barabasi_albert},
        {"star", GraphKind::star},
        {"path", GraphKind::path}};
    const GraphKind k = kinds.at(kind);
    const bool random = k == GraphKind::erdos_renyi || k == GraphKind::barabasi_albert;
    if (random && !gen_seed) throw InputError("gen --kind " + kind + " needs --seed");
    const Graph g = generate(k, gen_n, gen_params, gen_seed.value_or(0));
    std::ofstream out(out_path);
    if (!out) throw IoError("cannot write " + out_path);
    write_edge_list(out, g);
    if (!out) throw IoError("write failed: " + out_path);
    write_text_file(out_path + ".json", graph_metadata(g, out_path).dump(2) + "\n");
    return 0;
  }

  Instance inst = load_instance(obj);
  const Json objective = objective_json(obj, inst);

  if (*prune) {
    with_oracle(inst, [&](const auto& oracle) {
      write_prune_files(out_path, run_pruner(prune_opt.pruner, prune_opt, oracle, inst),
                        objective);
    });
    return 0;
  }

  if (*solve_cmd) {
    if (!solve_opt.budget) throw InputError("--budget is required");
    const ElementSet ground = ground_or_all(solve_opt.ground, inst.n);
    const SolverKind kind_s = solver_for(solve_opt, obj);
    Json j;
    with_oracle(inst, [&](const auto& oracle) {
      j = to_json(solve(kind_s, oracle, inst.costs, ground, *solve_opt.budget));
    });
    j["solver"] = to_string(kind_s);
    j["budget"] = *solve_opt.budget;
    if (out_path.empty())
      std::cout << j.dump(2) << "\n";
    else
      write_text_file(out_path, j.dump(2) + "\n");
    return 0;
  }

  std::vector<EvalRecord> records;
  const SolverKind kind_s = solver_for(solve_opt, obj);
  const std::vector<double> budgets = budgets_for(solve_opt);
  const ElementSet ground = all_ids(inst.n);
  if (*eval) {
    PrunerOutput out;
    out.name = solve_opt.name;
    out.pruned = read_id_file(resolve_input(solve_opt.pruned));
    if (solve_opt.kappa_min) out.kappa_min = *solve_opt.kappa_min;
    if (solve_opt.kappa_max) out.kappa_max = *solve_opt.kappa_max;
    with_oracle(inst, [&](const auto& oracle) {
      records = sweep_budgets(oracle, inst.costs, ground,
                              std::span<const PrunerOutput>(&out, 1), budgets, kind_s);
    });
  } else {
    with_oracle(inst, [&](const auto& oracle) {
      std::vector<PrunerOutput> outputs;
      for (const auto& name : prune_opt.pruners)
        outputs.push_back(run_pruner(name, prune_opt, oracle, inst).output);
      records = sweep_budgets(oracle, inst.costs, ground,
                              std::span<const PrunerOutput>(outputs), budgets,
                              kind_s);
    });
    if (!jsonl_path.empty()) {
      std::ofstream jl(jsonl_path);
      if (!jl) throw IoError("cannot write " + jsonl_path);
      write_eval_jsonl(jl, records);
    }
  }
  if (out_path.empty()) {
    write_eval_csv(std::cout, records);
  } else {
    std::ofstream csv(out_path);
    if (!csv) throw IoError("cannot write " + out_path);
    write_eval_csv(csv, records);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const qprune::InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const qprune::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitIo;
  } catch (const qprune::IoError& e) {
    std::cerr << "io error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInvariant;
  }
}
