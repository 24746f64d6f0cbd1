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

// Acceptance runner: one pass/fail line per criterion, exit status 1 when any
// criterion fails. Every expected value comes from an exhaustive oracle or a
// direct recomputation; nothing is hard-coded.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "cli.hpp"
#include "conncover/budgeted_csc.hpp"
#include "conncover/comm_graph.hpp"
#include "conncover/min_csc.hpp"
#include "conncover/oracle.hpp"
#include "conncover/report_json.hpp"
#include "conncover/steiner.hpp"
#include "conncover/tree_tools.hpp"
#include "conncover/verify.hpp"
#include "json.hpp"
#include "support.hpp"

namespace conncover {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

const double kGreedyFactor = 1.0 - 1.0 / std::exp(1.0);

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string fmt(const char* format, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, v);
  return buf;
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Feasibility suite --------------------------------------------------------

struct SuiteCase {
  std::uint64_t seed = 0;
  std::size_t n = 0;
  std::size_t m = 0;
  double ratio = 1.0;
  double extent = 1.0;
  std::size_t budget = 1;
  std::string stem;
};

// 200 cases cycling C over {0.5, 1, 2}, n over [5, 40] and m over [5, 60].
// The field side keeps the mean degree near 8 and, for small C, enough sensing
// coverage that most instances admit a cover; a stretch factor adds sparser
// and denser variants.
std::vector<SuiteCase> suite_cases() {
  const double ratios[] = {0.5, 1.0, 2.0};
  const double stretch[] = {0.85, 1.0, 1.2};
  std::vector<SuiteCase> out;
  for (std::size_t i = 0; i < 200; ++i) {
    SuiteCase c;
    c.seed = 1000 + i;
    c.n = 5 + (i * 7) % 36;
    c.m = 5 + (i * 11) % 56;
    c.ratio = ratios[i % 3];
    const double pi = std::acos(-1.0);
    const double side = std::min(std::sqrt(c.n * pi / 8.0), c.ratio * std::sqrt(c.n * pi / 5.0));
    c.extent = std::max(1.0, side * stretch[(i / 3) % 3]);
    c.budget = 1 + i % 6;
    char stem[32];
    std::snprintf(stem, sizeof stem, "case%03zu", i);
    c.stem = stem;
    out.push_back(c);
  }
  return out;
}

struct SuiteRun {
  int min_exit = -1;
  int budget_exit = -1;
  std::string instance_path;
};

struct SuiteData {
  std::vector<SuiteCase> cases;
  std::vector<SuiteRun> runs;
  double seconds = 0.0;
  fs::path dir;
};

int cli(const std::vector<std::string>& args) {
  std::ostringstream out;
  std::ostringstream err;
  return run_cli(args, out, err);
}

std::vector<std::string> min_args(const SuiteData& d, std::size_t i, const std::string& tag) {
  const std::string base = (d.dir / d.cases[i].stem).string();
  return {"solve-min", "--input", d.runs[i].instance_path, "--output", base + "_min" + tag + ".json",
          "--report", base + "_min_report" + tag + ".json"};
}

std::vector<std::string> budget_args(const SuiteData& d, std::size_t i, const std::string& tag) {
  const std::string base = (d.dir / d.cases[i].stem).string();
  return {"solve-budget", "--input", d.runs[i].instance_path, "--budget", std::to_string(d.cases[i].budget),
          "--output", base + "_budget" + tag + ".json", "--report", base + "_budget_report" + tag + ".json"};
}

SuiteData run_suite(const fs::path& dir) {
  SuiteData d;
  d.dir = dir;
  d.cases = suite_cases();
  d.runs.resize(d.cases.size());
  for (std::size_t i = 0; i < d.cases.size(); ++i) {
    const SuiteCase& c = d.cases[i];
    d.runs[i].instance_path = (dir / (c.stem + ".json")).string();
    save_instance(generate(c.n, c.m, 1.0, c.ratio, c.extent, c.seed), d.runs[i].instance_path);
  }
  const auto start = std::chrono::steady_clock::now();
  for (std::size_t i = 0; i < d.cases.size(); ++i) {
    d.runs[i].min_exit = cli(min_args(d, i, ""));
    d.runs[i].budget_exit = cli(budget_args(d, i, ""));
  }
  d.seconds = seconds_since(start);
  return d;
}

// No component covers every target, recomputed from the distance scan.
bool truly_infeasible(const Instance& inst) {
  const auto reach = testing::reachability(testing::adjacency_matrix(inst));
  const auto cov = testing::cover_matrix(inst);
  for (std::size_t s = 0; s < inst.num_sensors(); ++s) {
    bool all = true;
    for (std::size_t t = 0; t < inst.num_targets() && all; ++t) {
      bool hit = false;
      for (std::size_t u = 0; u < inst.num_sensors() && !hit; ++u) hit = reach[s][u] && cov[u][t];
      all = hit;
    }
    if (all) return false;
  }
  return inst.num_targets() > 0;
}

Outcome check_feasibility(const SuiteData& d) {
  Outcome o;
  int solved = 0;
  int infeasible = 0;
  int failures = 0;
  for (std::size_t i = 0; i < d.cases.size(); ++i) {
    const Instance inst = load_instance(d.runs[i].instance_path);
    const std::string base = (d.dir / d.cases[i].stem).string();
    if (d.runs[i].min_exit == kExitOk) {
      const SolutionFile sol = load_solution(base + "_min.json");
      if (verify_min_csc(inst, sol.sensors).feasible) {
        ++solved;
      } else {
        ++failures;
        std::cerr << d.cases[i].stem << ": min-csc solution rejected\n";
      }
    } else if (d.runs[i].min_exit == kExitInfeasible && truly_infeasible(inst)) {
      ++infeasible;
    } else {
      ++failures;
      std::cerr << d.cases[i].stem << ": solve-min exit " << d.runs[i].min_exit << '\n';
    }
    if (d.runs[i].budget_exit != kExitOk) {
      ++failures;
      std::cerr << d.cases[i].stem << ": solve-budget exit " << d.runs[i].budget_exit << '\n';
      continue;
    }
    const SolutionFile b = load_solution(base + "_budget.json");
    if (!verify_budgeted(inst, b.sensors, d.cases[i].budget, b.tree_edges).feasible) {
      ++failures;
      std::cerr << d.cases[i].stem << ": budgeted solution rejected\n";
    }
  }
  o.pass = failures == 0 && d.seconds < 300.0;
  o.detail = std::to_string(d.cases.size()) + " instances, " + std::to_string(solved) + " covered, " +
             std::to_string(infeasible) + " confirmed infeasible, " + std::to_string(failures) + " failures, " +
             fmt("%.1f", d.seconds) + " s (limit 300 s)";
  return o;
}

Outcome check_steiner_fractional(const SuiteData& d) {
  Outcome o;
  int runs = 0;
  int violations = 0;
  double worst = 0.0;
  std::string worst_case;
  for (std::size_t i = 0; i < d.cases.size(); ++i) {
    if (d.runs[i].min_exit != kExitOk) continue;
    const json report = json::parse(testing::read_file((d.dir / (d.cases[i].stem + "_min_report.json")).string()));
    for (const json& r : report["runs"]) {
      ++runs;
      const double excess = r["steiner_fractional"].get<double>() - r["sigma"].get<double>() * r["lp_flow"].get<double>();
      if (excess > 1e-6) {
        ++violations;
        if (excess > worst) {
          worst = excess;
          worst_case = d.cases[i].stem + " root " + std::to_string(r["root"].get<int>());
        }
      }
    }
  }
  o.pass = violations == 0;
  o.detail = std::to_string(runs) + " pipeline runs, " + std::to_string(violations) + " with sum x_check > sigma*Opt + 1e-6";
  if (violations > 0) o.detail += "; worst excess " + fmt("%.4g", worst) + " (" + worst_case + ")";
  return o;
}

Outcome check_subtree_eighth(const SuiteData& d, const Outcome& tree_checks) {
  Outcome o;
  int iterations = 0;
  int violations = 0;
  for (std::size_t i = 0; i < d.cases.size(); ++i) {
    if (d.runs[i].budget_exit != kExitOk) continue;
    const json report = json::parse(testing::read_file((d.dir / (d.cases[i].stem + "_budget_report.json")).string()));
    for (const json& it : report["iterations"]) {
      ++iterations;
      if (8 * it["subtree_profit_hat"].get<std::int64_t>() < it["tree_profit_hat"].get<std::int64_t>()) ++violations;
      if (it["tree_size"].get<std::size_t>() > 4 * d.cases[i].budget) ++violations;
    }
  }
  o.pass = tree_checks.pass && violations == 0;
  o.detail = tree_checks.detail + "; " + std::to_string(iterations) + " solver iterations, " + std::to_string(violations) +
             " with 8*p(subtree) < p(tree)";
  return o;
}

Outcome check_determinism(const SuiteData& d) {
  Outcome o;
  int files = 0;
  int diffs = 0;
  for (std::size_t i = 0; i < d.cases.size(); ++i) {
    if (cli(min_args(d, i, "_again")) != d.runs[i].min_exit) ++diffs;
    if (cli(budget_args(d, i, "_again")) != d.runs[i].budget_exit) ++diffs;
    const std::string base = (d.dir / d.cases[i].stem).string();
    std::vector<std::string> names{"_min_report", "_budget", "_budget_report"};
    if (d.runs[i].min_exit == kExitOk) names.push_back("_min");
    for (const std::string& name : names) {
      ++files;
      const std::string first = testing::read_file(base + name + ".json");
      if (first.empty() || first != testing::read_file(base + name + "_again.json")) {
        ++diffs;
        std::cerr << d.cases[i].stem << name << " differs on rerun\n";
      }
    }
  }
  o.pass = diffs == 0;
  o.detail = std::to_string(files) + " solution/report files regenerated, " + std::to_string(diffs) + " differ";
  return o;
}

// Oracle-backed checks -----------------------------------------------------

// Feasible instances with n <= 12, cycling C over {0.5, 1, 2}.
std::vector<Instance> small_feasible(std::size_t count, std::uint64_t first_seed) {
  const double ratios[] = {0.5, 1.0, 2.0};
  std::vector<Instance> out;
  for (std::uint64_t seed = first_seed; out.size() < count; ++seed) {
    const double c = ratios[out.size() % 3];
    const std::size_t n = 6 + seed % 7;
    const double extent = std::max(1.0, std::min(std::sqrt(n * 3.14159 / 8.0), c * 1.4));
    const Instance inst = generate(n, 4 + seed % 9, 1.0, c, extent, seed);
    if (oracle::exact_min_csc(inst).feasible) out.push_back(inst);
  }
  return out;
}

Outcome check_min_csc_gap(const std::vector<Instance>& instances) {
  Outcome o;
  double worst_small = 0.0;
  double worst_all = 0.0;
  double sum = 0.0;
  int violations = 0;
  for (const Instance& inst : instances) {
    const oracle::Result exact = oracle::exact_min_csc(inst);
    const MinCscResult r = solve_min_csc(inst);
    if (!r.feasible || !verify_min_csc(inst, r.solution).feasible) {
      ++violations;
      continue;
    }
    const double ratio = static_cast<double>(r.solution.size()) / static_cast<double>(exact.value);
    sum += ratio;
    worst_all = std::max(worst_all, ratio);
    if (inst.ratio() <= 1.0) {
      worst_small = std::max(worst_small, ratio);
      if (ratio > 10.0) ++violations;
    }
  }
  o.pass = violations == 0;
  o.detail = std::to_string(instances.size()) + " instances, mean |Sol|/OPT " + fmt("%.3f", sum / static_cast<double>(instances.size())) +
             ", max " + fmt("%.3f", worst_small) + " for C <= 1 (cap 10), max " + fmt("%.3f", worst_all) + " overall";
  return o;
}

Outcome check_lp_sandwich(const std::vector<Instance>& instances) {
  Outcome o;
  int runs = 0;
  int violations = 0;
  double worst_gap = -1e300;
  for (const Instance& inst : instances) {
    const MinCscResult r = solve_min_csc(inst, {RootStrategy::kAll, FlowLpMethod::kCutGeneration});
    for (const MinCscRun& run : r.runs) {
      ++runs;
      oracle::MinCscQuery query;
      query.within = r.components[static_cast<std::size_t>(run.component)];
      query.must_contain = run.root;
      const oracle::Result best = oracle::exact_min_csc(inst, query);
      const double tree_edges = static_cast<double>(best.value - 1);
      worst_gap = std::max(worst_gap, run.lp_flow - tree_edges);
      bool ok = best.feasible && run.lp_flow <= tree_edges + 1e-6;
      ok = ok && run.hs_min_slack >= -1e-6 && run.hs_fractional >= run.lp_hs - 1e-6;
      if (!ok) ++violations;
    }
  }
  o.pass = violations == 0 && runs > 0;
  o.detail = std::to_string(runs) + " (component, root) runs, " + std::to_string(violations) +
             " violations; max Opt(flow LP) - oracle tree edges " + fmt("%.3g", worst_gap);
  return o;
}

Outcome check_max_cov() {
  Outcome o;
  std::mt19937_64 rng(515);
  int violations = 0;
  double worst = 1e300;
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t count = 3 + rng() % 10;
    const int universe = 8 + static_cast<int>(rng() % 20);
    std::vector<std::vector<int>> sets(count);
    for (auto& s : sets) {
      for (int e = 0; e < universe; ++e) {
        if (rng() % 5 == 0) s.push_back(e);
      }
    }
    const std::size_t budget = 1 + rng() % 4;
    const double opt = static_cast<double>(oracle::exact_max_cov(sets, budget).value);
    const double greedy = static_cast<double>(greedy_max_cov(sets, budget).covered);
    if (greedy < kGreedyFactor * opt - 1e-9) ++violations;
    if (opt > 0) worst = std::min(worst, greedy / opt);
  }
  o.pass = violations == 0;
  o.detail = "100 instances, " + std::to_string(violations) + " below (1-1/e)*OPT; min greedy/OPT " + fmt("%.3f", worst);
  return o;
}

Outcome check_profit_prefixes() {
  Outcome o;
  int cells = 0;
  int prefixes = 0;
  int violations = 0;
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    const double c = seed % 3 == 0 ? 0.5 : seed % 3 == 1 ? 1.0 : 2.0;
    const Instance inst = generate(40, 60, 1.0, c, 3.0, 7000 + seed);
    const int k = group_modulus(c);
    for (const Component& comp : components(build_comm_graph(inst))) {
      for (int a = 0; a < k; ++a) {
        for (int b = 0; b < k; ++b) {
          const ProfitAssignment pa = assign_modified_profit(inst, comp, a, b, k);
          for (const auto& [cell, order] : pa.order) {
            if (order.size() > 12) continue;
            ++cells;
            std::vector<std::size_t> best(order.size() + 1, 0);
            for (std::uint32_t mask = 0; mask < (1U << order.size()); ++mask) {
              std::vector<SensorId> pick;
              for (std::size_t i = 0; i < order.size(); ++i) {
                if (mask >> i & 1U) pick.push_back(order[i]);
              }
              const std::size_t covered = coverage_count(inst, pick);
              for (std::size_t i = pick.size(); i <= order.size(); ++i) best[i] = std::max(best[i], covered);
            }
            std::int64_t running = 0;
            for (std::size_t i = 1; i <= order.size(); ++i) {
              ++prefixes;
              running += pa.profit[static_cast<std::size_t>(order[i - 1])];
              if (static_cast<double>(running) < kGreedyFactor * static_cast<double>(best[i])) ++violations;
            }
          }
        }
      }
    }
  }
  o.pass = violations == 0 && cells > 0;
  o.detail = std::to_string(cells) + " cells over 50 fixtures, " + std::to_string(prefixes) + " prefixes, " +
             std::to_string(violations) + " violations";
  return o;
}

Outcome check_primal_dual() {
  Outcome o;
  std::mt19937_64 rng(77);
  int instances = 0;
  int violations = 0;
  double worst = 0.0;
  for (std::uint64_t seed = 1; instances < 50; ++seed) {
    const Instance inst = generate(25, 0, 1.0, 1.0, 3.5, 9000 + seed);
    const CommGraph g = build_comm_graph(inst);
    const auto comps = components(g);
    const Component& big = *std::max_element(comps.begin(), comps.end(),
                                             [](const Component& x, const Component& y) { return x.size() < y.size(); });
    if (big.size() < 8) continue;
    const LocalGraph lg = induced_subgraph(g, big);
    std::vector<int> terminals;
    for (int v = 0; v < static_cast<int>(lg.size()); ++v) {
      if (rng() % 3 == 0 && terminals.size() < 10) terminals.push_back(v);
    }
    if (terminals.size() < 2) continue;
    ++instances;
    const SteinerTree t = primal_dual_steiner(lg, terminals);
    const oracle::Result exact = oracle::exact_steiner(lg.adjacency, terminals);
    if (!t.feasible || static_cast<double>(t.cost()) > 2.0 * static_cast<double>(exact.value)) ++violations;
    if (exact.value > 0) worst = std::max(worst, static_cast<double>(t.cost()) / static_cast<double>(exact.value));
  }
  o.pass = violations == 0;
  o.detail = "50 instances, " + std::to_string(violations) + " above 2*OPT; max cost/OPT " + fmt("%.3f", worst);
  return o;
}

Outcome check_tree_machinery() {
  Outcome o;
  std::mt19937_64 rng(88);
  int decompose_violations = 0;
  std::size_t max_pieces = 0;
  for (int trial = 0; trial < 500; ++trial) {
    const std::size_t b = 3 + static_cast<std::size_t>(trial % 6);
    const int n = static_cast<int>(4 * b);
    Tree t;
    for (int v = 0; v < n; ++v) t.vertices.push_back(v);
    t.edges = testing::random_tree_edges(n, rng);
    std::sort(t.edges.begin(), t.edges.end());
    const auto pieces = decompose_tree(t, b);
    max_pieces = std::max(max_pieces, pieces.size());
    std::set<int> seen;
    bool ok = pieces.size() <= 8;
    for (const Tree& p : pieces) {
      ok = ok && p.size() <= b && p.is_tree();
      seen.insert(p.vertices.begin(), p.vertices.end());
    }
    if (!ok || seen.size() != static_cast<std::size_t>(n)) ++decompose_violations;
  }
  int subtree_mismatches = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 14);
    Tree t;
    for (int v = 0; v < n; ++v) t.vertices.push_back(v);
    t.edges = testing::random_tree_edges(n, rng);
    std::sort(t.edges.begin(), t.edges.end());
    std::vector<std::int64_t> profit(static_cast<std::size_t>(n));
    for (auto& p : profit) p = static_cast<std::int64_t>(rng() % 7);
    const std::size_t limit = 1 + rng() % static_cast<std::uint64_t>(n);
    const Tree best = best_subtree(t, profit, limit);
    // Exhaustive search over connected vertex subsets of size <= limit.
    std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n)));
    for (auto [u, v] : t.edges) {
      adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
      adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
    }
    std::int64_t exhaustive = 0;
    for (std::uint32_t mask = 1; mask < (1U << n); ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) > limit) continue;
      std::vector<bool> members(static_cast<std::size_t>(n));
      std::int64_t p = 0;
      for (int v = 0; v < n; ++v) {
        members[static_cast<std::size_t>(v)] = (mask >> v & 1U) != 0;
        if (members[static_cast<std::size_t>(v)]) p += profit[static_cast<std::size_t>(v)];
      }
      if (p > exhaustive && testing::connected_within(adj, members)) exhaustive = p;
    }
    if (!best.is_tree() || best.size() > limit || tree_profit(best, profit) != exhaustive) ++subtree_mismatches;
  }
  o.pass = decompose_violations == 0 && subtree_mismatches == 0;
  o.detail = "500 trees with |T| = 4B: " + std::to_string(decompose_violations) + " bad decompositions (max " +
             std::to_string(max_pieces) + " pieces); 400 trees <= 14 vertices: " + std::to_string(subtree_mismatches) +
             " best-subtree mismatches";
  return o;
}

Outcome check_budgeted_chain() {
  Outcome o;
  const double ratios[] = {0.5, 1.0, 2.0};
  int instances = 0;
  int violations = 0;
  double worst = 1e300;
  for (std::uint64_t seed = 1; instances < 20; ++seed) {
    const double c = ratios[seed % 3];
    const std::size_t n = 6 + seed % 7;
    const Instance inst = generate(n, 6 + seed % 10, 1.0, c, std::max(1.0, c * 1.6), 5000 + seed);
    const std::size_t budget = 1 + seed % 4;
    const oracle::Result exact = oracle::exact_budgeted(inst, budget);
    if (exact.value == 0) continue;
    ++instances;
    const BudgetedResult r = solve_budgeted(inst, budget, {QstMode::kExact});
    const double k = group_modulus(c);
    const double bound = kGreedyFactor / (8.0 * k * k) * static_cast<double>(exact.value);
    const bool ok = verify_budgeted(inst, r.sensors, budget, r.tree_edges).feasible &&
                    static_cast<double>(r.profit) >= bound - 1e-9;
    if (!ok) ++violations;
    worst = std::min(worst, static_cast<double>(r.profit) / static_cast<double>(exact.value));
  }
  o.pass = violations == 0;
  o.detail = "20 instances (n <= 12, B <= 4), " + std::to_string(violations) + " below (1-1/e)/(8k^2)*OPT; min p/OPT " +
             fmt("%.3f", worst);
  return o;
}

}  // namespace
}  // namespace conncover

int main(int argc, char** argv) {
  using namespace conncover;
  CLI::App app{"Acceptance checks"};
  std::string workdir = (std::filesystem::temp_directory_path() / "conncover_acceptance").string();
  app.add_option("--workdir", workdir, "Directory for generated instances, solutions and reports");
  CLI11_PARSE(app, argc, argv);
  std::filesystem::remove_all(workdir);
  std::filesystem::create_directories(workdir);

  std::vector<std::pair<std::string, Outcome>> results;
  auto record = [&](const std::string& name, const Outcome& o) {
    results.emplace_back(name, o);
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << name << ": " << o.detail << std::endl;
  };

  const SuiteData suite = run_suite(workdir);
  record("feasibility-suite", check_feasibility(suite));
  const std::vector<Instance> small = small_feasible(30, 1);
  record("min-csc-optimality-gap", check_min_csc_gap(small));
  record("lp-sandwich", check_lp_sandwich(small));
  record("greedy-max-coverage", check_max_cov());
  record("modified-profit-prefixes", check_profit_prefixes());
  record("steiner-fractional-bound", check_steiner_fractional(suite));
  record("primal-dual-steiner", check_primal_dual());
  record("tree-decomposition", check_subtree_eighth(suite, check_tree_machinery()));
  record("budgeted-bound-chain", check_budgeted_chain());
  record("determinism", check_determinism(suite));

  int failed = 0;
  for (const auto& [name, o] : results) failed += o.pass ? 0 : 1;
  std::cout << results.size() - static_cast<std::size_t>(failed) << "/" << results.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
