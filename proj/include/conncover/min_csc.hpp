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

#ifndef CONNCOVER_MIN_CSC_HPP_
#define CONNCOVER_MIN_CSC_HPP_

#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "conncover/comm_graph.hpp"
#include "conncover/grid.hpp"
#include "conncover/instance.hpp"
#include "conncover/lp.hpp"
#include "conncover/steiner.hpp"

namespace conncover {

// gp(p) restricted to one component, for every target of the instance.
struct TargetGroups {
  std::vector<std::vector<SensorId>> members;  // indexed by TargetId, ascending
  std::vector<TargetId> uncovered;             // targets with an empty group
  bool feasible() const { return uncovered.empty(); }
};

TargetGroups groups(const Instance& inst, const Component& component);

struct Arc {
  int from = 0;  // local vertex ids of the component graph
  int to = 0;
};

// Variable layout of the multicommodity flow LP for one (component, root).
// Targets whose group contains the root need no flow; they are listed in
// `root_served` and carry no commodity.
struct FlowLpIndex {
  int root = 0;                          // local id
  std::vector<Arc> arcs;                 // two per undirected edge
  std::vector<TargetId> commodities;     // routed targets, ascending
  std::vector<TargetId> root_served;
  std::vector<std::vector<int>> sinks;   // per commodity: local ids of gp(p)
  std::map<std::pair<int, int>, int> arc_of;

  int num_vertices = 0;
  int x_var(int arc) const { return arc; }
  int flow_var(int k, int arc) const;
  int net_var(int k, int v) const;
  std::size_t num_arcs() const { return arcs.size(); }
};

struct FlowLp {
  LinearProgram lp;
  FlowLpIndex index;
};

// Builds the flow LP: minimize the total arc capacity subject to net inflow
// definitions, y_r = -1, group sums >= 1, y = 0 off-group, x^p <= x, and
// [0, 1] bounds (the root's net inflow ranges over [-1, 1]).
FlowLp build_flow_lp(const LocalGraph& graph, const TargetGroups& groups, SensorId root);

enum class FlowLpMethod { kCutGeneration, kDirect };

struct FlowSolution {
  double objective = 0.0;
  std::vector<double> capacity;              // x_uv per arc
  std::vector<std::vector<double>> flow;     // x^p_uv per commodity and arc
  std::vector<std::vector<double>> net;      // y^p_v per commodity and local vertex
  int master_rounds = 0;
  int cuts = 0;

  std::vector<double> lp_values(const FlowLpIndex& index) const;
};

// kCutGeneration solves the arc-capacity master over directed root/group cuts
// (the projection of the flow LP onto x) and recovers per-commodity flows by
// max-flow; kDirect runs the dense simplex on the full LP.
FlowSolution solve_flow_lp(const FlowLp& flow_lp, FlowLpMethod method);

// Largest violation of any flow LP row or bound.
double flow_violation(const FlowLp& flow_lp, const FlowSolution& sol);

struct CellChoice {
  TargetId target = 0;
  CellId cell;
  double mass = 0.0;          // sum of y^p_v over gp(p) in the cell
  int candidate_cells = 0;    // distinct cells meeting gp(p)
};

struct CellSelection {
  std::vector<CellChoice> choices;             // aligned with index.commodities
  std::vector<SensorId> universe;              // U, ascending
  std::map<CellId, SensorId> representative;   // one per cell in delta
  std::vector<CellId> delta;                   // chosen cells minus the root cell
  CellId root_cell;
  double sigma = 1.0;                          // max_p 1 / mass
};

CellSelection select_cells(const Instance& inst, const LocalGraph& graph, const FlowLp& flow_lp,
                           const FlowSolution& flow);

struct HittingSetInstance {
  std::vector<SensorId> universe;                 // ascending
  std::vector<std::vector<SensorId>> family;      // gp(p) within U
  std::vector<TargetId> family_targets;
};

HittingSetInstance make_hitting_set(const TargetGroups& groups, const FlowLpIndex& index,
                                    const CellSelection& selection);

struct FractionalHittingSet {
  std::vector<double> z;   // aligned with universe
  double total = 0.0;
  double sigma = 1.0;
  double inflow_bound = 0.0;  // sigma * sum over U of capacity entering u
};

FractionalHittingSet fractional_hitting_set(const LocalGraph& graph, const FlowLp& flow_lp,
                                            const FlowSolution& flow, const CellSelection& selection,
                                            const HittingSetInstance& hs);

LinearProgram hitting_set_lp(const HittingSetInstance& hs);
// Smallest row slack of the covering constraints at z (negative = violated).
double hitting_set_slack(const HittingSetInstance& hs, const std::vector<double>& z);

// Greedy rounding: repeatedly take the element hitting most unhit sets
// (ties to the smallest id).
SensorSet round_hitting_set(const HittingSetInstance& hs);

struct ReroutedFlow {
  std::vector<std::vector<double>> rerouted;      // x~ per commodity and arc
  std::vector<std::vector<double>> rerouted_net;  // y~ per commodity and vertex
  std::vector<std::vector<double>> scaled;        // x^ = min(sigma x~, 1)
  std::vector<std::vector<double>> scaled_net;    // y^ = min(sigma y~, 1)
  std::vector<int> terminal;                      // local rep id per commodity, -1 for the root cell
  double sigma = 1.0;
};

ReroutedFlow reroute_and_scale(const Instance& inst, const LocalGraph& graph, const FlowLp& flow_lp,
                               const FlowSolution& flow, const CellSelection& selection);

// Net-inflow violation of the rerouted (unscaled) flow against y~.
double rerouted_conservation_error(const FlowLp& flow_lp, const ReroutedFlow& rerouted);

struct SteinerFractional {
  std::vector<std::pair<int, int>> edges;  // local ids, u < v
  std::vector<double> value;               // max_p x^_uv + max_p x^_vu
  double total = 0.0;
};

SteinerFractional steiner_fractional(const FlowLp& flow_lp, const ReroutedFlow& rerouted);

// Minimum over terminals of the root-to-terminal max flow with undirected
// edge capacities `values`; >= 1 certifies feasibility for the cut LP.
double steiner_min_cut(const LocalGraph& graph, const SteinerFractional& frac, int root,
                       const std::vector<int>& terminals);

// Sol = H u V(J); V(J) always contains the root.
SensorSet assemble(const SensorSet& hitting_set, const SteinerTree& tree, const LocalGraph& graph,
                   int root);

enum class RootStrategy { kHeuristic, kAll };

struct MinCscOptions {
  RootStrategy roots = RootStrategy::kHeuristic;
  FlowLpMethod lp_method = FlowLpMethod::kCutGeneration;
};

struct MinCscRun {
  int component = 0;
  SensorId root = 0;
  double lp_flow = 0.0;
  double lp_hs = 0.0;            // fractional optimum of the hitting-set LP
  double hs_fractional = 0.0;    // sum of the constructed z
  double hs_inflow_bound = 0.0;
  double hs_min_slack = 0.0;     // covering slack of z (>= -1e-6 when feasible)
  double sigma = 1.0;
  double steiner_fractional = 0.0;
  double steiner_min_cut = 0.0;
  double rerouted_min_terminal_inflow = 0.0;
  double flow_violation = 0.0;
  double steiner_dual_bound = 0.0;
  int commodities = 0;
  int root_served = 0;
  int terminals = 0;
  int master_rounds = 0;
  int cuts = 0;
  std::size_t hitting_set_size = 0;
  std::size_t tree_vertices = 0;
  std::size_t solution_size = 0;
  SensorSet solution;
};

struct MinCscResult {
  bool feasible = false;
  SensorSet solution;
  std::vector<MinCscRun> runs;
  std::optional<std::size_t> best_run;   // unset for the single-sensor shortcut
  std::vector<Component> components;
  std::vector<int> feasible_components;
};

// Candidate roots for one component: the sensor covering most targets plus
// its four nearest neighbours lying in distinct cells (kHeuristic), or every
// vertex (kAll).
std::vector<SensorId> candidate_roots(const Instance& inst, const Component& component,
                                      const TargetGroups& groups, RootStrategy strategy);

MinCscRun run_min_csc_pipeline(const Instance& inst, const LocalGraph& graph, const TargetGroups& groups,
                               SensorId root, FlowLpMethod method);

// Requires a normalized instance (throws std::invalid_argument otherwise).
MinCscResult solve_min_csc(const Instance& inst, const MinCscOptions& options = {});

}  // namespace conncover

#endif  // CONNCOVER_MIN_CSC_HPP_
