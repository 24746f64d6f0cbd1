// Copyright 2026 The conncover Authors.
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

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <exception>
#include <regex>
#include <sstream>
#include <thread>

#include "CLI11.hpp"
#include "conncover/budgeted_csc.hpp"
#include "conncover/comm_graph.hpp"
#include "conncover/instance.hpp"
#include "conncover/min_csc.hpp"
#include "conncover/oracle.hpp"
#include "conncover/report_json.hpp"
#include "conncover/verify.hpp"

namespace conncover {

namespace {

struct Flags {
  std::string input;
  std::string output;
  std::string report;
  std::string solution;
  std::string dot;
  std::size_t budget = 0;
  bool all_roots = false;
  std::string qst = "auto";
  std::string hs = "greedy";
  std::uint64_t seed = 1;
  std::string seeds;
  std::size_t n = 10;
  std::size_t m = 15;
  double rc = 1.0;
  double rs = 1.0;
  double extent = 5.0;
  std::size_t jobs = 1;
};

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text << '\n';
    return;
  }
  std::ofstream file(path);
  if (!file) throw UsageError("cannot write " + path);
  file << text << '\n';
}

Instance read_instance(const std::string& path) {
  if (path.empty()) throw UsageError("--input is required");
  try {
    return load_instance(path);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

std::string format_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

int cmd_gen(const Flags& f, std::ostream& out) {
  const Instance inst = generate(f.n, f.m, f.rc, f.rs, f.extent, f.seed);
  emit(f.output, to_json(inst), out);
  if (!f.dot.empty()) emit(f.dot, to_dot(inst, build_comm_graph(normalize(inst))), out);
  return kExitOk;
}

int cmd_solve_min(const Flags& f, std::ostream& out, std::ostream& err) {
  const Instance inst = normalize(read_instance(f.input));
  MinCscOptions options;
  options.roots = f.all_roots ? RootStrategy::kAll : RootStrategy::kHeuristic;
  const MinCscResult result = solve_min_csc(inst, options);
  if (!f.report.empty()) emit(f.report, min_csc_report(result, options), out);
  if (!f.dot.empty()) emit(f.dot, to_dot(inst, build_comm_graph(inst)), out);
  if (!result.feasible) {
    err << "infeasible: no connected component covers every target\n";
    return kExitInfeasible;
  }
  SolutionFile sol;
  sol.instance_path = f.input;
  sol.problem = "min-csc";
  sol.sensors = result.solution;
  emit(f.output, solution_to_json(sol), out);
  return kExitOk;
}

int cmd_solve_budget(const Flags& f, std::ostream& out) {
  const Instance inst = normalize(read_instance(f.input));
  const QstMode mode = *parse_qst_mode(f.qst);
  BudgetedOptions options;
  options.qst = mode;
  const BudgetedResult result = solve_budgeted(inst, f.budget, options);
  if (!f.report.empty()) emit(f.report, budgeted_report(result, mode), out);
  if (!f.dot.empty()) emit(f.dot, to_dot(inst, build_comm_graph(inst)), out);
  SolutionFile sol;
  sol.instance_path = f.input;
  sol.problem = "budgeted";
  sol.budget = f.budget;
  sol.sensors = result.sensors;
  sol.tree_edges = result.tree_edges;
  emit(f.output, solution_to_json(sol), out);
  return kExitOk;
}

int cmd_verify(const Flags& f, bool budget_given, std::ostream& out) {
  if (f.solution.empty()) throw UsageError("--solution is required");
  SolutionFile sol;
  try {
    sol = load_solution(f.solution);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  Instance inst;
  if (!f.input.empty()) {
    inst = read_instance(f.input);
  } else if (sol.inline_instance) {
    inst = *sol.inline_instance;
  } else {
    inst = read_instance(sol.instance_path);
  }
  Verdict v;
  if (sol.problem == "budgeted") {
    const std::optional<std::size_t> budget = budget_given ? std::optional<std::size_t>(f.budget) : sol.budget;
    if (!budget) throw UsageError("budgeted solution without a budget; pass --budget");
    v = verify_budgeted(inst, sol.sensors, *budget, sol.tree_edges);
  } else {
    v = verify_min_csc(inst, sol.sensors);
  }
  if (v.feasible) {
    out << "feasible: " << sol.sensors.size() << " sensors, " << v.covered << " targets covered\n";
    return kExitOk;
  }
  out << "infeasible: " << v.reason << '\n';
  return kExitInfeasible;
}

int cmd_oracle(const Flags& f, bool budget_given, std::ostream& out, std::ostream& err) {
  const Instance inst = read_instance(f.input);
  oracle::Result r;
  SolutionFile sol;
  sol.instance_path = f.input;
  try {
    if (budget_given) {
      r = oracle::exact_budgeted(inst, f.budget);
      sol.problem = "budgeted";
      sol.budget = f.budget;
    } else {
      r = oracle::exact_min_csc(inst);
    }
  } catch (const oracle::GuardExceeded& e) {
    err << e.what() << '\n';
    return kExitUsage;
  }
  const std::string problem = budget_given ? "budgeted" : "min-csc";
  if (!f.report.empty()) emit(f.report, oracle_report(problem, r), out);
  if (!r.feasible) {
    err << "infeasible: no connected covering set exists\n";
    return kExitInfeasible;
  }
  sol.sensors = SensorSet(std::vector<SensorId>(r.witness.begin(), r.witness.end()));
  for (const auto& [u, v] : r.edges) sol.tree_edges.emplace_back(u, v);
  emit(f.output, solution_to_json(sol), out);
  return kExitOk;
}

std::pair<std::uint64_t, std::uint64_t> parse_seed_range(const std::string& text) {
  static const std::regex pattern(R"((\d+)\.\.(\d+))");
  std::smatch match;
  if (!std::regex_match(text, match, pattern)) throw UsageError("--seeds expects A..B, got '" + text + "'");
  const std::uint64_t lo = std::stoull(match[1].str());
  const std::uint64_t hi = std::stoull(match[2].str());
  if (lo > hi) throw UsageError("--seeds range is empty");
  return {lo, hi};
}

std::string bench_row(const Flags& f, bool budget_given, std::uint64_t seed) {
  const Instance inst = normalize(generate(f.n, f.m, f.rc, f.rs, f.extent, seed));
  const auto start = std::chrono::steady_clock::now();
  std::optional<std::size_t> alg;
  if (budget_given) {
    BudgetedOptions options;
    options.qst = *parse_qst_mode(f.qst);
    alg = solve_budgeted(inst, f.budget, options).profit;
  } else {
    MinCscOptions options;
    options.roots = f.all_roots ? RootStrategy::kAll : RootStrategy::kHeuristic;
    const MinCscResult r = solve_min_csc(inst, options);
    if (r.feasible) alg = r.solution.size();
  }
  const double millis = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  std::string opt_text = "no_oracle";
  std::optional<std::int64_t> opt;
  try {
    const oracle::Result o = budget_given ? oracle::exact_budgeted(inst, f.budget) : oracle::exact_min_csc(inst);
    if (o.feasible) {
      opt = o.value;
      opt_text = std::to_string(o.value);
    } else {
      opt_text = "infeasible";
    }
  } catch (const oracle::GuardExceeded&) {
  }
  std::string ratio;
  if (opt && alg) {
    // Both columns are oriented so that 1 is optimal and larger is worse.
    const double a = static_cast<double>(*alg);
    const double o = static_cast<double>(*opt);
    if (budget_given) {
      ratio = a > 0.0 ? format_number(o / a) : (o == 0.0 ? "1" : "");
    } else {
      ratio = o > 0.0 ? format_number(a / o) : "1";
    }
  }
  std::ostringstream row;
  row << seed << ',' << opt_text << ',' << (alg ? std::to_string(*alg) : std::string("infeasible")) << ',' << ratio
      << ',' << format_number(millis);
  return row.str();
}

int cmd_bench(const Flags& f, bool budget_given, std::ostream& out) {
  const auto [lo, hi] = parse_seed_range(f.seeds);
  if (f.jobs == 0) throw UsageError("--jobs must be at least 1");
  const std::size_t count = hi - lo + 1;
  std::vector<std::string> rows(count);
  std::vector<std::exception_ptr> failures(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < count; i = next++) {
      try {
        rows[i] = bench_row(f, budget_given, lo + i);
      } catch (...) {
        failures[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (std::size_t j = 1; j < std::min(f.jobs, count); ++j) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : failures) {
    if (e) std::rethrow_exception(e);
  }
  std::string text = "seed,opt,alg,ratio,millis";
  for (const std::string& row : rows) text += "\n" + row;
  emit(f.output, text, out);
  return kExitOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Connected sensor cover solvers", "conncover"};
  app.require_subcommand(1);
  Flags f;

  auto* gen = app.add_subcommand("gen", "Generate a random instance");
  gen->add_option("--n", f.n, "Number of sensors")->required();
  gen->add_option("--m", f.m, "Number of targets")->required();
  gen->add_option("--rc", f.rc, "Communication radius")->check(CLI::PositiveNumber);
  gen->add_option("--rs", f.rs, "Sensing radius")->check(CLI::PositiveNumber);
  gen->add_option("--extent", f.extent, "Side of the square field")->check(CLI::NonNegativeNumber);
  gen->add_option("--seed", f.seed, "Random seed");
  gen->add_option("--output", f.output, "Instance path (stdout when omitted)");
  gen->add_option("--dot", f.dot, "Write the communication graph as DOT");

  auto* solve_min = app.add_subcommand("solve-min", "Approximate a minimum connected sensor cover");
  solve_min->add_option("--input", f.input, "Instance JSON")->required();
  solve_min->add_option("--output", f.output, "Solution path (stdout when omitted)");
  solve_min->add_option("--report", f.report, "Report JSON path");
  solve_min->add_flag("--all-roots", f.all_roots, "Try every sensor of each component as root");
  solve_min->add_option("--hs", f.hs, "Hitting-set rounding")->check(CLI::IsMember({"greedy"}));
  solve_min->add_option("--dot", f.dot, "Write the communication graph as DOT");

  auto* solve_budget = app.add_subcommand("solve-budget", "Approximate a budgeted connected sensor cover");
  solve_budget->add_option("--input", f.input, "Instance JSON")->required();
  solve_budget->add_option("--budget", f.budget, "Maximum number of sensors")->required();
  solve_budget->add_option("--qst", f.qst, "Quota tree engine")->check(CLI::IsMember({"exact", "heuristic", "auto"}));
  solve_budget->add_option("--output", f.output, "Solution path (stdout when omitted)");
  solve_budget->add_option("--report", f.report, "Report JSON path");
  solve_budget->add_option("--dot", f.dot, "Write the communication graph as DOT");

  auto* verify = app.add_subcommand("verify", "Check a solution file against an instance");
  verify->add_option("--solution", f.solution, "Solution JSON")->required();
  verify->add_option("--input", f.input, "Instance JSON (defaults to the one named in the solution)");
  auto* verify_budget = verify->add_option("--budget", f.budget, "Override the budget in the solution");

  auto* oracle_cmd = app.add_subcommand("oracle", "Exact solution by exhaustive search (small instances)");
  oracle_cmd->add_option("--input", f.input, "Instance JSON")->required();
  auto* oracle_budget = oracle_cmd->add_option("--budget", f.budget, "Solve the budgeted problem instead");
  oracle_cmd->add_option("--output", f.output, "Witness solution path (stdout when omitted)");
  oracle_cmd->add_option("--report", f.report, "Oracle report JSON path");

  auto* bench = app.add_subcommand("bench", "CSV of solution quality and runtime over a seed sweep");
  bench->add_option("--seeds", f.seeds, "Seed range A..B")->required();
  bench->add_option("--n", f.n, "Number of sensors");
  bench->add_option("--m", f.m, "Number of targets");
  bench->add_option("--rc", f.rc, "Communication radius")->check(CLI::PositiveNumber);
  bench->add_option("--rs", f.rs, "Sensing radius")->check(CLI::PositiveNumber);
  bench->add_option("--extent", f.extent, "Side of the square field")->check(CLI::NonNegativeNumber);
  auto* bench_budget = bench->add_option("--budget", f.budget, "Benchmark the budgeted problem");
  bench->add_option("--qst", f.qst, "Quota tree engine")->check(CLI::IsMember({"exact", "heuristic", "auto"}));
  bench->add_flag("--all-roots", f.all_roots, "Try every sensor of each component as root");
  bench->add_option("--jobs", f.jobs, "Worker threads; rows keep seed order");
  bench->add_option("--output", f.output, "CSV path (stdout when omitted)");

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return kExitOk;
    }
    err << e.what() << '\n' << "run with --help for usage\n";
    return kExitUsage;
  }

  try {
    if (gen->parsed()) return cmd_gen(f, out);
    if (solve_min->parsed()) return cmd_solve_min(f, out, err);
    if (solve_budget->parsed()) return cmd_solve_budget(f, out);
    if (verify->parsed()) return cmd_verify(f, verify_budget->count() > 0, out);
    if (oracle_cmd->parsed()) return cmd_oracle(f, oracle_budget->count() > 0, out, err);
    if (bench->parsed()) return cmd_bench(f, bench_budget->count() > 0, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace conncover
