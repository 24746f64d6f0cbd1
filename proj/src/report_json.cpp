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

#include "conncover/report_json.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace conncover {

namespace {

using nlohmann::json;

json number(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

json edge_list(const std::vector<std::pair<SensorId, SensorId>>& edges) {
  json arr = json::array();
  for (const auto& [u, v] : edges) arr.push_back({u, v});
  return arr;
}

}  // namespace

std::string solution_to_json(const SolutionFile& sol) {
  json j;
  if (sol.inline_instance) {
    j["instance"] = json::parse(to_json(*sol.inline_instance));
  } else {
    j["instance"] = sol.instance_path;
  }
  j["problem"] = sol.problem;
  if (sol.budget) j["budget"] = *sol.budget;
  j["sensors"] = sol.sensors.ids();
  if (!sol.tree_edges.empty()) j["tree_edges"] = edge_list(sol.tree_edges);
  return j.dump(2);
}

SolutionFile solution_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("malformed solution JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("sensors") || !j["sensors"].is_array()) {
    throw std::invalid_argument("solution JSON needs a 'sensors' array");
  }
  SolutionFile sol;
  if (j.contains("instance")) {
    if (j["instance"].is_string()) {
      sol.instance_path = j["instance"].get<std::string>();
    } else if (j["instance"].is_object()) {
      sol.inline_instance = instance_from_json(j["instance"].dump());
    } else {
      throw std::invalid_argument("'instance' must be a path or an inline instance");
    }
  }
  if (j.contains("problem")) {
    if (!j["problem"].is_string()) throw std::invalid_argument("'problem' must be a string");
    sol.problem = j["problem"].get<std::string>();
    if (sol.problem != "min-csc" && sol.problem != "budgeted") {
      throw std::invalid_argument("'problem' must be \"min-csc\" or \"budgeted\"");
    }
  }
  if (j.contains("budget")) {
    if (!j["budget"].is_number_unsigned()) throw std::invalid_argument("'budget' must be a non-negative integer");
    sol.budget = j["budget"].get<std::size_t>();
  }
  std::vector<SensorId> ids;
  for (const auto& v : j["sensors"]) {
    if (!v.is_number_integer()) throw std::invalid_argument("sensor ids must be integers");
    ids.push_back(v.get<SensorId>());
  }
  sol.sensors = SensorSet(std::move(ids));
  if (j.contains("tree_edges")) {
    if (!j["tree_edges"].is_array()) throw std::invalid_argument("'tree_edges' must be an array");
    for (const auto& e : j["tree_edges"]) {
      if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
        throw std::invalid_argument("tree edges must be [u, v] integer pairs");
      }
      sol.tree_edges.emplace_back(e[0].get<SensorId>(), e[1].get<SensorId>());
    }
  }
  return sol;
}

SolutionFile load_solution(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open solution file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return solution_from_json(buf.str());
}

std::string min_csc_report(const MinCscResult& result, const MinCscOptions& options) {
  json j;
  j["problem"] = "min-csc";
  j["feasible"] = result.feasible;
  j["roots"] = options.roots == RootStrategy::kAll ? "all" : "heuristic";
  j["lp_method"] = options.lp_method == FlowLpMethod::kDirect ? "direct" : "cut-generation";
  j["solution_size"] = result.solution.size();
  j["sensors"] = result.solution.ids();
  j["components"] = result.components.size();
  j["feasible_components"] = result.feasible_components;
  j["single_sensor"] = result.feasible && !result.solution.empty() && !result.best_run.has_value();
  if (result.best_run) {
    j["best_run"] = *result.best_run;
  } else {
    j["best_run"] = nullptr;
  }
  json runs = json::array();
  for (const MinCscRun& r : result.runs) {
    runs.push_back({
        {"component", r.component},
        {"root", r.root},
        {"commodities", r.commodities},
        {"root_served", r.root_served},
        {"lp_flow", number(r.lp_flow)},
        {"flow_violation", number(r.flow_violation)},
        {"master_rounds", r.master_rounds},
        {"cuts", r.cuts},
        {"sigma", number(r.sigma)},
        {"lp_hs", number(r.lp_hs)},
        {"hs_fractional", number(r.hs_fractional)},
        {"hs_inflow_bound", number(r.hs_inflow_bound)},
        {"hs_min_slack", number(r.hs_min_slack)},
        {"hitting_set_size", r.hitting_set_size},
        {"terminals", r.terminals},
        {"steiner_fractional", number(r.steiner_fractional)},
        {"steiner_min_cut", number(r.steiner_min_cut)},
        {"rerouted_min_terminal_inflow", number(r.rerouted_min_terminal_inflow)},
        {"steiner_dual_bound", number(r.steiner_dual_bound)},
        {"tree_vertices", r.tree_vertices},
        {"solution_size", r.solution_size},
        {"sensors", r.solution.ids()},
    });
  }
  j["runs"] = runs;
  return j.dump(2);
}

std::string budgeted_report(const BudgetedResult& result, QstMode requested) {
  json j;
  j["problem"] = "budgeted";
  j["budget"] = result.budget;
  j["k"] = result.k;
  j["qst_mode"] = to_string(requested);
  j["profit"] = result.profit;
  j["sensors"] = result.sensors.ids();
  j["tree_edges"] = edge_list(result.tree_edges);
  if (result.best_iteration) {
    j["best_iteration"] = *result.best_iteration;
  } else {
    j["best_iteration"] = nullptr;
  }
  json iters = json::array();
  for (const BudgetedIteration& it : result.iterations) {
    iters.push_back({
        {"k", it.k},
        {"a", it.a},
        {"b", it.b},
        {"component", it.component},
        {"qst_mode", it.qst_mode},
        {"quota_reached", it.quota_reached},
        {"tree_size", it.tree_size},
        {"tree_profit_hat", it.tree_profit_hat},
        {"subtree_size", it.subtree_size},
        {"subtree_profit_hat", it.subtree_profit_hat},
        {"subtree_profit", it.subtree_profit},
        {"sensors", it.sensors.ids()},
    });
  }
  j["iterations"] = iters;
  return j.dump(2);
}

std::string oracle_report(const std::string& problem, const oracle::Result& result) {
  json j;
  j["problem"] = problem;
  j["feasible"] = result.feasible;
  j["value"] = result.value;
  j["witness"] = result.witness;
  json edges = json::array();
  for (const auto& [u, v] : result.edges) edges.push_back({u, v});
  j["edges"] = edges;
  j["explored"] = result.explored;
  return j.dump(2);
}

}  // namespace conncover
