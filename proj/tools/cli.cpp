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

#include "cli.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "bcd/corpus.hpp"
#include "bcd/downsizing.hpp"
#include "bcd/errors.hpp"
#include "bcd/frugality.hpp"
#include "bcd/io.hpp"
#include "bcd/model.hpp"
#include "bcd/objective.hpp"
#include "bcd/reductions.hpp"
#include "bcd/solvers.hpp"
#include "bcd/version.hpp"
#include "manifest.hpp"

namespace bcd::cli {
namespace {

using nlohmann::json;

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class VerifyError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string instance;
  std::string out;
  std::uint64_t seed = 1;
  bool seed_given = false;
  int threads = 1;
  bool verify = false;
};

// Output of one command: the data file body plus hashes of what it read.
struct Artifact {
  std::string body;
  std::map<std::string, std::string> inputs;
};

std::string ReadFile(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  if (in.bad()) throw IoError("read failed for " + path);
  return ss.str();
}

void WriteFile(const std::string& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path);
  out << body;
  out.flush();
  if (!out) throw IoError("write failed for " + path);
}

struct LoadedInstance {
  Instance instance;
  std::string path;
  std::string hash;
};

LoadedInstance LoadInstance(const Globals& g) {
  if (g.instance.empty()) throw InputError("--instance is required");
  const std::string text = ReadFile(g.instance);
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError("instance is not valid JSON: " + std::string(e.what()));
  }
  return {InstanceFromJson(j), g.instance, HashTag(text)};
}

std::string Dump(const json& j) { return j.dump(2) + "\n"; }

std::string CsvReal(double x) {
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  return FormatReal(x);
}

// "lo:hi:step" or a single value, after an optional "b=" prefix.
std::vector<double> ParseGrid(std::string text) {
  if (text.rfind("b=", 0) == 0) text = text.substr(2);
  std::vector<std::string> parts;
  std::stringstream ss(text);
  for (std::string p; std::getline(ss, p, ':');) parts.push_back(p);
  if (parts.size() == 1) return {ParseReal(parts[0])};
  if (parts.size() != 3) throw InputError("grid must be b=lo:hi:step");
  const double lo = ParseReal(parts[0]);
  const double hi = ParseReal(parts[1]);
  const double step = ParseReal(parts[2]);
  if (!(step > 0.0) || hi < lo) throw InputError("grid needs lo <= hi, step > 0");
  const auto count = static_cast<long long>(std::floor((hi - lo) / step + 1e-9));
  if (count > 100000) throw InputError("grid has too many points");
  std::vector<double> out;
  for (long long k = 0; k <= count; ++k) {
    // Snap to 12 decimals so 0.1 + 2 * 0.1 reads as 0.3.
    out.push_back(std::round((lo + static_cast<double>(k) * step) * 1e12) / 1e12);
  }
  return out;
}

json ContractJson(const Instance& inst, Subset s) {
  if (Payment(inst, s).is_infinite()) return nullptr;
  return OptimalContractFor(inst, s).alpha;
}

// --- commands -------------------------------------------------------------

struct SolveArgs {
  std::string method = "brute";
  std::string objective = "reward";
  double budget = 1.0;
  double epsilon = 0.1;
  bool light_only = false;
};

Artifact RunSolve(const Globals& g, const SolveArgs& a) {
  const LoadedInstance li = LoadInstance(g);
  const Instance& inst = li.instance;
  const Objective obj = ParseObjective(a.objective);
  SolveResult r;
  if (a.method == "brute") {
    r = BruteForceMax(obj, inst, a.budget, a.light_only);
  } else if (a.method == "fptas") {
    if (obj.kind() != Objective::Kind::kProfit) {
      throw PreconditionError("fptas solves the profit objective only");
    }
    r = FptasAdditiveProfit(inst, a.budget, a.epsilon);
  } else if (a.method == "knapsack") {
    r = KnapsackFptas(inst, a.budget, a.epsilon, obj);
  } else {
    throw InputError("unknown method \"" + a.method + "\"");
  }
  json j = {{"command", "solve"},
            {"method", a.method},
            {"objective", obj.name()},
            {"budget", a.budget},
            {"result", ToJson(r)},
            {"contract", ContractJson(inst, r.optimum)}};
  if (a.method != "brute") j["epsilon"] = a.epsilon;
  return {Dump(j), {{li.path, li.hash}}};
}

struct DownsizeArgs {
  std::string set;
  std::string algorithm = "auto";
  std::string psi = "reward";
  int m = 3;
};

Artifact RunDownsize(const Globals& g, const DownsizeArgs& a) {
  const LoadedInstance li = LoadInstance(g);
  const Instance& inst = li.instance;
  const Subset s = ParseSubset(a.set, inst.num_agents());
  std::string algo = a.algorithm;
  if (algo == "auto") {
    algo = inst.reward().xos() != nullptr ? "xos" : "submodular";
  }
  DownsizeResult r;
  if (algo == "submodular") {
    DownsizeParams params;
    params.m = a.m;
    params.psi = ParseObjective(a.psi);
    params.verify_submodular = inst.num_agents() <= kClassifyCap;
    r = DownsizeSubmodular(inst, s, params);
  } else if (algo == "xos") {
    r = DownsizeXos(inst, s, a.m);
  } else {
    throw InputError("unknown algorithm \"" + algo + "\"");
  }
  json j = {{"command", "downsize"},
            {"algorithm", algo},
            {"m", a.m},
            {"input", SubsetToJson(s)},
            {"result", ToJson(r)}};
  return {Dump(j), {{li.path, li.hash}}};
}

struct ReduceArgs {
  std::string direction = "pipeline";
  std::string path = "xos";
  std::string objective = "reward";
  std::string objective_to = "reward";
  double budget = 1.0;
  double budget_to = 1.0;
  double gamma = 1.0;
  std::string set;
};

Artifact RunReduce(const Globals& g, const ReduceArgs& a) {
  const LoadedInstance li = LoadInstance(g);
  const Instance& inst = li.instance;
  ReductionPath path;
  if (a.path == "xos") {
    path = ReductionPath::kXos;
  } else if (a.path == "submodular") {
    path = ReductionPath::kSubmodular;
  } else {
    throw InputError("unknown path \"" + a.path + "\"");
  }
  const Objective obj = ParseObjective(a.objective);
  json j = {{"command", "reduce"},
            {"direction", a.direction},
            {"budget", a.budget}};
  ReductionOutcome r;
  if (a.direction == "to-light") {
    Subset team = kEmptySet;
    if (!a.set.empty()) {
      team = ParseSubset(a.set, inst.num_agents());
    } else {
      team = BruteForceMax(Objective::Reward(), inst, a.budget, true).optimum;
    }
    j["light_team"] = SubsetToJson(team);
    j["objective"] = obj.name();
    r = ReduceToLight(inst, a.budget, obj, team, a.gamma, path);
  } else if (a.direction == "from-light") {
    j["objective"] = obj.name();
    j["budget_to"] = a.budget_to;
    r = ReduceFromLight(inst, a.budget, a.budget_to, obj, BruteForceSolver(),
                        a.gamma, path);
  } else if (a.direction == "pipeline") {
    const Objective to = ParseObjective(a.objective_to);
    j["objective"] = obj.name();
    j["objective_to"] = to.name();
    j["budget_to"] = a.budget_to;
    r = EquivalencePipeline(inst, obj, a.budget, to, a.budget_to,
                            BruteForceSolver(), a.gamma, path);
  } else {
    throw InputError("unknown direction \"" + a.direction + "\"");
  }
  j["result"] = ToJson(r);
  if (inst.num_agents() <= kEnumerationCap) {
    // Exact optimum of the quantity the guarantee is stated against.
    const bool light = a.direction == "from-light";
    const Objective& target = light ? Objective::Reward() : obj;
    const double best = BruteForceMax(target, inst, a.budget, light).value;
    j["brute_optimum"] = best;
    j["within_guarantee"] =
        r.guarantee_factor * r.candidate_value >= best - 1e-9;
  }
  return {Dump(j), {{li.path, li.hash}}};
}

struct PofArgs {
  std::string family;
  std::string grid;
  double big_b = 1.0;
  int n = 8;
  std::string objective = "reward";
  std::optional<int> k;
  std::optional<double> eps;
  std::string emit_curve;
  std::optional<double> b;  // single-instance mode
};

struct PofRow {
  std::string csv;
  std::string curve;
};

PofRow ComputePofRow(Family family, const PofArgs& a, const Objective& obj,
                     double b, bool with_curve) {
  FamilyParams params;
  params.n = a.n;
  params.b = b;
  params.big_b = a.big_b;
  params.k = a.k;
  params.eps = a.eps;
  const Instance inst = GenerateFamily(family, params);
  PofQuery q;
  q.b = b;
  q.big_b = a.big_b;
  q.objective = obj;
  const PofReport rep = ComputePof(inst, q);
  const double bound = FamilyTarget(family, params, obj.kind());
  const int n = family == Family::kAdditiveLb || family == Family::kSubadditiveLb
                    ? a.n
                    : inst.num_agents();
  const bool tight =
      rep.ratio && std::abs(*rep.ratio - bound) <= 1e-9 * std::max(1.0, bound);
  std::ostringstream row;
  row << FamilyName(family) << ',' << n << ',' << CsvReal(b) << ','
      << CsvReal(a.big_b) << ',' << obj.name() << ',' << CsvReal(rep.max_at_b)
      << ',' << CsvReal(rep.max_at_big_b) << ','
      << (rep.ratio ? CsvReal(*rep.ratio) : std::string("undefined")) << ','
      << CsvReal(bound) << ',' << (tight ? "true" : "false") << '\n';
  PofRow out{row.str(), {}};
  if (with_curve) {
    std::ostringstream c;
    for (const CurvePoint& p : BudgetCurve(inst)) {
      c << FamilyName(family) << ',' << CsvReal(b) << ',' << CsvReal(p.payment)
        << ',' << CsvReal(p.max_reward) << ',' << CsvReal(p.max_welfare) << ','
        << CsvReal(p.max_profit) << ',' << CsvReal(p.discounted_reward) << '\n';
    }
    out.curve = c.str();
  }
  return out;
}

// Cells are pure; results land at their grid index so order is canonical.
std::vector<PofRow> ComputePofRows(Family family, const PofArgs& a,
                                   const Objective& obj,
                                   const std::vector<double>& grid,
                                   bool with_curve, int threads) {
  std::vector<PofRow> rows(grid.size());
  std::vector<std::exception_ptr> errors(grid.size());
  auto work = [&](std::size_t start, std::size_t stride) {
    for (std::size_t k = start; k < grid.size(); k += stride) {
      try {
        rows[k] = ComputePofRow(family, a, obj, grid[k], with_curve);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };
  const auto workers = static_cast<std::size_t>(std::max(1, threads));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < workers; ++t) pool.emplace_back(work, t, workers);
    for (std::thread& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return rows;
}

struct PofOutput {
  Artifact table;
  std::optional<Artifact> curve;
};

PofOutput RunPof(const Globals& g, const PofArgs& a) {
  const Objective obj = ParseObjective(a.objective);
  if (a.family.empty()) {
    // Single instance: --instance and --b.
    if (!a.b) throw InputError("pof needs --family or --instance with --b");
    const LoadedInstance li = LoadInstance(g);
    PofQuery q;
    q.b = *a.b;
    q.big_b = a.big_b;
    q.objective = obj;
    const PofReport rep = ComputePof(li.instance, q);
    json j = {{"command", "pof"}, {"b", *a.b}, {"B", a.big_b},
              {"objective", obj.name()}, {"report", ToJson(rep)}};
    return {{Dump(j), {{li.path, li.hash}}}, std::nullopt};
  }
  const std::optional<Family> family = ParseFamily(a.family);
  if (!family) throw InputError("unknown family \"" + a.family + "\"");
  if (a.grid.empty()) throw InputError("--grid is required with --family");
  const std::vector<double> grid = ParseGrid(a.grid);
  const bool with_curve = !a.emit_curve.empty();
  const std::vector<PofRow> rows =
      ComputePofRows(*family, a, obj, grid, with_curve, g.threads);
  PofOutput out;
  out.table.body = "family,n,b,B,objective,max_b,max_B,ratio,bound,tight\n";
  for (const PofRow& r : rows) out.table.body += r.csv;
  if (with_curve) {
    Artifact c;
    c.body = "family,b,payment,max_reward,max_welfare,max_profit,"
             "discounted_reward\n";
    for (const PofRow& r : rows) c.body += r.curve;
    out.curve = std::move(c);
  }
  return out;
}

struct GenArgs {
  std::string family;
  std::string random;
  int n = 4;
  double b = 0.5;
  double big_b = 1.0;
  std::optional<int> k;
  std::optional<double> eps;
  int clauses = 3;
};

Artifact RunGen(const Globals& g, const GenArgs& a) {
  json j;
  if (!a.family.empty()) {
    const std::optional<Family> family = ParseFamily(a.family);
    if (!family) throw InputError("unknown family \"" + a.family + "\"");
    FamilyParams params;
    params.n = a.n;
    params.b = a.b;
    params.big_b = a.big_b;
    params.k = a.k;
    params.eps = a.eps;
    j = InstanceToJson(GenerateFamily(*family, params));
  } else if (!a.random.empty()) {
    CorpusRng rng(g.seed);
    if (a.random == "submodular") {
      j = InstanceToJson(RandomSubmodularInstance(rng, a.n));
    } else if (a.random == "xos") {
      j = InstanceToJson(RandomXosInstance(rng, a.n, a.clauses));
    } else if (a.random == "additive") {
      j = InstanceToJson(RandomAdditiveInstance(rng, a.n));
    } else {
      throw InputError("unknown random kind \"" + a.random + "\"");
    }
  } else {
    throw InputError("gen needs --family or --random");
  }
  return {Dump(j), {}};
}

Artifact RunCheck(const Globals& g) {
  const LoadedInstance li = LoadInstance(g);
  const Instance& inst = li.instance;
  json j = {{"command", "check"},
            {"n", inst.num_agents()},
            {"encoding", std::string(inst.reward().kind_name())},
            {"light_agents", SubsetToJson(LightAgents(inst))}};
  if (inst.num_agents() <= kClassifyCap) {
    j["classes"] = ToJson(Classify(inst.reward()));
  } else {
    j["classes"] = "skipped: n exceeds classify cap";
  }
  if (inst.num_agents() <= kEnumerationCap) {
    json best = json::object();
    for (const Objective& o :
         {Objective::Reward(), Objective::Profit(), Objective::Welfare()}) {
      best[o.name()] = CheckBestConditions(o, inst);
    }
    j["best_conditions"] = best;
  } else {
    j["best_conditions"] = "skipped: n exceeds enumeration cap";
  }
  return {Dump(j), {{li.path, li.hash}}};
}

// --- plumbing -------------------------------------------------------------

// "welfare@0.5" -> objective text and budget.
void ApplyTarget(const std::string& target, std::string& objective,
                 double& budget) {
  if (target.empty()) return;
  const std::size_t at = target.rfind('@');
  if (at == std::string::npos) {
    objective = target;
    return;
  }
  objective = target.substr(0, at);
  budget = ParseReal(target.substr(at + 1));
}

void Emit(const Globals& g, const std::vector<std::string>& args,
          const Artifact& art, const std::string& path, double seconds,
          std::ostream& out) {
  if (path.empty()) {
    out << art.body;
    return;
  }
  WriteFile(path, art.body);
  RunManifest m;
  m.command_line = args;
  m.command_line.insert(m.command_line.begin(), "bcd");
  m.instance_hashes = art.inputs;
  if (g.seed_given) m.seed = g.seed;
  m.output_path = path;
  m.output_hash = HashTag(art.body);
  m.wall_time_seconds = seconds;
  WriteFile(ManifestPath(path), m.ToJson().dump(2) + "\n");
}

void CheckSame(const std::string& a, const std::string& b, const char* what) {
  if (a != b) throw VerifyError(std::string("recomputed ") + what + " differs");
}

std::string OneLine(std::string s) {
  for (char& c : s) {
    if (c == '\n' || c == '\r') c = ' ';
    if (c == '"') c = '\'';
  }
  return s;
}

int Fail(std::ostream& err, const char* kind, const std::string& msg,
         int code) {
  err << "bcd: error kind=" << kind << " msg=\"" << OneLine(msg) << "\"\n";
  return code;
}

}  // namespace

int Run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Budgeted multi-agent contract design toolkit", "bcd"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  app.fallthrough();

  Globals g;
  app.add_option("--instance", g.instance, "Instance JSON file");
  app.add_option("--out", g.out, "Output file (stdout when omitted)");
  app.add_option("--seed", g.seed, "Seed for random corpora");
  app.add_option("--threads", g.threads, "Worker threads for grid sweeps")
      ->check(CLI::Range(1, 256));
  app.add_flag("--verify", g.verify, "Recompute outputs and diff");

  SolveArgs sa;
  CLI::App* solve = app.add_subcommand("solve", "Maximize an objective under a budget");
  solve->add_option("--method", sa.method, "brute | fptas | knapsack");
  solve->add_option("--objective", sa.objective, "reward | profit | welfare | convex(...)");
  solve->add_option("--budget,--B", sa.budget, "Budget B in (0, 1]");
  solve->add_option("--epsilon", sa.epsilon, "Approximation parameter");
  solve->add_flag("--light-only", sa.light_only, "Restrict to light agents");

  DownsizeArgs da;
  CLI::App* downsize = app.add_subcommand("downsize", "Shrink a team to cut its payment");
  downsize->add_option("--set", da.set, "Team as comma-separated indices")->required();
  downsize->add_option("--algorithm,--mode", da.algorithm,
                       "auto | submodular | xos");
  downsize->add_option("--m", da.m, "Payment target 2/m, m >= 3");
  downsize->add_option("--psi", da.psi, "Quantity to preserve (submodular)");

  ReduceArgs ra;
  CLI::App* reduce = app.add_subcommand("reduce", "Run an objective/budget reduction");
  reduce->add_option("--direction", ra.direction, "to-light | from-light | pipeline");
  reduce->add_option("--path", ra.path, "xos | submodular");
  reduce->add_option("--objective", ra.objective, "Objective at --budget");
  reduce->add_option("--objective-to", ra.objective_to, "Pipeline inner objective");
  reduce->add_option("--budget,--B", ra.budget, "Budget B");
  reduce->add_option("--budget-to", ra.budget_to, "Inner budget B'");
  reduce->add_option("--gamma", ra.gamma, "Inner solver approximation factor");
  reduce->add_option("--set", ra.set, "Light team for to-light");
  std::string from_target, to_target, solver_name = "brute";
  reduce->add_option("--from", from_target, "Pipeline outer target, objective@budget");
  reduce->add_option("--to", to_target, "Pipeline inner target, objective@budget");
  reduce->add_option("--solver", solver_name, "Inner solver (brute)");

  PofArgs pa;
  std::optional<double> pof_b;
  CLI::App* pof = app.add_subcommand("pof", "Price of frugality sweeps");
  pof->add_option("--family", pa.family,
                  "additive-lb | xos-sep | subadd-lb | profit-2 | profit-k");
  pof->add_option("--grid", pa.grid, "b=lo:hi:step");
  pof->add_option("--B", pa.big_b, "Large budget");
  pof->add_option("--b", pof_b, "Small budget (instance mode)");
  pof->add_option("--n", pa.n, "Agents");
  pof->add_option("--objective", pa.objective, "reward | profit | welfare");
  pof->add_option("--k", pa.k, "profit-k team size");
  pof->add_option("--eps", pa.eps, "profit family epsilon");
  pof->add_option("--emit-curve", pa.emit_curve, "Write budget curve CSV here");

  GenArgs ga;
  CLI::App* gen = app.add_subcommand("gen", "Write a generated instance");
  gen->add_option("--family", ga.family, "Lower-bound family");
  gen->add_option("--random", ga.random, "submodular | xos | additive");
  gen->add_option("--n", ga.n, "Agents");
  gen->add_option("--b", ga.b, "Small budget");
  gen->add_option("--B", ga.big_b, "Large budget");
  gen->add_option("--k", ga.k, "profit-k team size");
  gen->add_option("--eps", ga.eps, "profit family epsilon");
  gen->add_option("--clauses", ga.clauses, "XOS clause count");

  CLI::App* check = app.add_subcommand("check", "Classify an instance");

  std::vector<std::string> argv_store = args;
  std::vector<char*> argv;
  static char prog[] = "bcd";
  argv.push_back(prog);
  for (std::string& s : argv_store) argv.push_back(s.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << "\n";
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return Fail(err, "usage", e.what(), kExitPrecondition);
  }
  g.seed_given = app.count("--seed") > 0;
  try {
    ApplyTarget(from_target, ra.objective, ra.budget);
    ApplyTarget(to_target, ra.objective_to, ra.budget_to);
    if (solver_name != "brute") {
      throw InputError("only the brute solver is available");
    }
  } catch (const InputError& e) {
    return Fail(err, "input", e.what(), kExitPrecondition);
  }
  pa.b = pof_b;

  try {
    const auto start = std::chrono::steady_clock::now();
    auto elapsed = [&] {
      return std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                           start)
          .count();
    };
    if (*pof) {
      const PofOutput res = RunPof(g, pa);
      if (g.verify) {
        PofArgs serial = pa;
        Globals one = g;
        one.threads = 1;
        const PofOutput again = RunPof(one, serial);
        CheckSame(res.table.body, again.table.body, "pof table");
        if (res.curve) CheckSame(res.curve->body, again.curve->body, "curve");
      }
      Emit(g, args, res.table, g.out, elapsed(), out);
      if (res.curve) Emit(g, args, *res.curve, pa.emit_curve, elapsed(), out);
      return kExitOk;
    }
    std::function<Artifact()> run;
    if (*solve) run = [&] { return RunSolve(g, sa); };
    if (*downsize) run = [&] { return RunDownsize(g, da); };
    if (*reduce) run = [&] { return RunReduce(g, ra); };
    if (*gen) run = [&] { return RunGen(g, ga); };
    if (*check) run = [&] { return RunCheck(g); };
    const Artifact art = run();
    if (g.verify) CheckSame(art.body, run().body, "output");
    Emit(g, args, art, g.out, elapsed(), out);
    return kExitOk;
  } catch (const IoError& e) {
    return Fail(err, "io", e.what(), kExitIo);
  } catch (const VerifyError& e) {
    return Fail(err, "verify", e.what(), kExitIo);
  } catch (const SizeError& e) {
    return Fail(err, "size", e.what(), kExitPrecondition);
  } catch (const PreconditionError& e) {
    return Fail(err, "precondition", e.what(), kExitPrecondition);
  } catch (const InputError& e) {
    return Fail(err, "input", e.what(), kExitPrecondition);
  } catch (const ContractViolationError& e) {
    return Fail(err, "contract", e.what(), kExitPrecondition);
  } catch (const std::exception& e) {
    return Fail(err, "internal", e.what(), kExitIo);
  }
}

}  // namespace bcd::cli
