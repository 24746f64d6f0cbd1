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

#include "conncover/min_csc.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>
#include <stdexcept>

#include "conncover/max_flow.hpp"
#include "conncover/verify.hpp"

namespace conncover {

namespace {

constexpr double kCutViolationTol = 1e-9;
constexpr int kMaxMasterRounds = 1000;
// Dense direct solves beyond this many tableau entries are refused.
constexpr double kMaxDirectTableau = 4.0e7;

std::vector<std::vector<int>> incoming_arcs(const FlowLpIndex& index) {
  std::vector<std::vector<int>> in(static_cast<std::size_t>(index.num_vertices));
  for (std::size_t a = 0; a < index.arcs.size(); ++a) {
    in[static_cast<std::size_t>(index.arcs[a].to)].push_back(static_cast<int>(a));
  }
  return in;
}

std::vector<std::vector<int>> outgoing_arcs(const FlowLpIndex& index) {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(index.num_vertices));
  for (std::size_t a = 0; a < index.arcs.size(); ++a) {
    out[static_cast<std::size_t>(index.arcs[a].from)].push_back(static_cast<int>(a));
  }
  return out;
}

// One unit of flow from the root into `sinks` under arc capacities; returns
// the delivered amount and fills per-arc flow (opposite arcs netted out).
double route_unit(const FlowLpIndex& index, const std::vector<double>& capacity, const std::vector<int>& sinks,
                  std::vector<double>& arc_flow, FlowNetwork* network_out = nullptr) {
  const int super_sink = index.num_vertices;
  FlowNetwork net(index.num_vertices + 1);
  for (std::size_t a = 0; a < index.arcs.size(); ++a) {
    net.add_arc(index.arcs[a].from, index.arcs[a].to, std::max(capacity[a], 0.0));
  }
  for (int v : sinks) net.add_arc(v, super_sink, 1.0);
  const double value = net.max_flow(index.root, super_sink, 1.0);
  arc_flow.assign(index.arcs.size(), 0.0);
  for (std::size_t a = 0; a < index.arcs.size(); ++a) arc_flow[a] = std::max(net.flow(static_cast<int>(a)), 0.0);
  for (std::size_t a = 0; a < index.arcs.size(); ++a) {
    const int rev = index.arc_of.at({index.arcs[a].to, index.arcs[a].from});
    if (static_cast<int>(a) > rev) continue;
    const double common = std::min(arc_flow[a], arc_flow[static_cast<std::size_t>(rev)]);
    arc_flow[a] -= common;
    arc_flow[static_cast<std::size_t>(rev)] -= common;
  }
  if (network_out != nullptr) *network_out = std::move(net);
  return value;
}

std::vector<double> net_inflow(const FlowLpIndex& index, const std::vector<double>& arc_flow) {
  std::vector<double> y(static_cast<std::size_t>(index.num_vertices), 0.0);
  for (std::size_t a = 0; a < index.arcs.size(); ++a) {
    y[static_cast<std::size_t>(index.arcs[a].to)] += arc_flow[a];
    y[static_cast<std::size_t>(index.arcs[a].from)] -= arc_flow[a];
  }
  return y;
}

FlowSolution solve_direct(const FlowLp& flow_lp) {
  const FlowLpIndex& idx = flow_lp.index;
  const double entries = static_cast<double>(flow_lp.lp.num_constraints() + flow_lp.lp.num_variables()) *
                         static_cast<double>(2 * flow_lp.lp.num_variables() + flow_lp.lp.num_constraints());
  if (entries > kMaxDirectTableau) {
    throw std::invalid_argument("flow LP too large for the dense direct solve; use cut generation");
  }
  const LpSolution lp = solve(flow_lp.lp);
  if (lp.status != LpStatus::kOptimal) {
    throw std::logic_error(std::string("flow LP not optimal: ") + to_string(lp.status));
  }
  FlowSolution sol;
  sol.objective = lp.objective;
  const std::size_t arcs = idx.arcs.size();
  sol.capacity.assign(lp.values.begin(), lp.values.begin() + static_cast<std::ptrdiff_t>(arcs));
  for (std::size_t k = 0; k < idx.commodities.size(); ++k) {
    std::vector<double> f(arcs);
    for (std::size_t a = 0; a < arcs; ++a) f[a] = lp.values[static_cast<std::size_t>(idx.flow_var(static_cast<int>(k), static_cast<int>(a)))];
    std::vector<double> y(static_cast<std::size_t>(idx.num_vertices));
    for (int v = 0; v < idx.num_vertices; ++v) y[static_cast<std::size_t>(v)] = lp.values[static_cast<std::size_t>(idx.net_var(static_cast<int>(k), v))];
    sol.flow.push_back(std::move(f));
    sol.net.push_back(std::move(y));
  }
  return sol;
}

// Solves min sum x s.t. every cut carries >= 1 through its packing dual
// (max sum y_c s.t. per-arc load <= 1). The dual starts from the slack basis,
// needs no phase one and pivots far less on these degenerate covering rows;
// the arc-row multipliers are the capacities.
std::vector<double> solve_master(const std::set<std::vector<int>>& cuts, std::size_t arcs) {
  LinearProgram packing;
  std::vector<std::vector<LinearTerm>> load(arcs);
  for (const std::vector<int>& cut : cuts) {
    const int y = packing.add_variable(-1.0);
    for (int a : cut) load[static_cast<std::size_t>(a)].push_back({y, 1.0});
  }
  std::vector<int> row_of(arcs, -1);
  for (std::size_t a = 0; a < arcs; ++a) {
    if (!load[a].empty()) row_of[a] = packing.add_constraint(std::move(load[a]), Relation::kLessEqual, 1.0);
  }
  const LpSolution dual = solve(packing);
  if (dual.status != LpStatus::kOptimal) {
    throw std::logic_error(std::string("cut master dual not optimal: ") + to_string(dual.status));
  }
  std::vector<double> capacity(arcs, 0.0);
  for (std::size_t a = 0; a < arcs; ++a) {
    if (row_of[a] >= 0) capacity[a] = std::max(-dual.duals[static_cast<std::size_t>(row_of[a])], 0.0);
  }
  for (const std::vector<int>& cut : cuts) {
    double through = 0.0;
    for (int a : cut) through += capacity[static_cast<std::size_t>(a)];
    if (through < 1.0 - kLpFeasibilityTol) throw std::logic_error("cut master multipliers violate a cut");
  }
  return capacity;
}

FlowSolution solve_by_cuts(const FlowLp& flow_lp) {
  const FlowLpIndex& idx = flow_lp.index;
  const std::size_t arcs = idx.arcs.size();

  // Commodities sharing a group share a cut family and a flow.
  std::map<std::vector<int>, std::vector<std::size_t>> by_group;
  for (std::size_t k = 0; k < idx.commodities.size(); ++k) by_group[idx.sinks[k]].push_back(k);

  std::set<std::vector<int>> cuts;
  auto add_cut = [&](const std::vector<bool>& source_side) {
    std::vector<int> cut;
    for (std::size_t a = 0; a < arcs; ++a) {
      if (source_side[static_cast<std::size_t>(idx.arcs[a].from)] && !source_side[static_cast<std::size_t>(idx.arcs[a].to)]) {
        cut.push_back(static_cast<int>(a));
      }
    }
    return cuts.insert(std::move(cut)).second;
  };
  for (const auto& [sinks, members] : by_group) {
    std::vector<bool> only_root(static_cast<std::size_t>(idx.num_vertices), false);
    only_root[static_cast<std::size_t>(idx.root)] = true;
    add_cut(only_root);
    std::vector<bool> off_group(static_cast<std::size_t>(idx.num_vertices), true);
    for (int v : sinks) off_group[static_cast<std::size_t>(v)] = false;
    add_cut(off_group);
  }

  FlowSolution sol;
  std::vector<double> capacity(arcs, 0.0);
  int rounds = 0;
  while (true) {
    if (++rounds > kMaxMasterRounds) throw std::runtime_error("cut generation did not converge");
    capacity = solve_master(cuts, arcs);

    bool added = false;
    for (const auto& [sinks, members] : by_group) {
      std::vector<double> arc_flow;
      FlowNetwork net(1);
      const double value = route_unit(idx, capacity, sinks, arc_flow, &net);
      if (value >= 1.0 - kCutViolationTol) continue;
      std::vector<bool> reach = net.source_side(idx.root);
      reach.resize(static_cast<std::size_t>(idx.num_vertices));
      added |= add_cut(reach);
      std::vector<bool> to_sink = net.sink_side(idx.num_vertices);
      std::vector<bool> far(static_cast<std::size_t>(idx.num_vertices));
      for (int v = 0; v < idx.num_vertices; ++v) far[static_cast<std::size_t>(v)] = !to_sink[static_cast<std::size_t>(v)];
      added |= add_cut(far);
    }
    if (!added) break;
  }

  sol.capacity = capacity;
  sol.objective = 0.0;
  for (double c : capacity) sol.objective += c;
  sol.master_rounds = rounds;
  sol.cuts = static_cast<int>(cuts.size());
  sol.flow.assign(idx.commodities.size(), {});
  sol.net.assign(idx.commodities.size(), {});
  for (const auto& [sinks, members] : by_group) {
    std::vector<double> arc_flow;
    const double value = route_unit(idx, capacity, sinks, arc_flow);
    if (value < 1.0 - 1e-6) throw std::logic_error("recovered flow falls short of one unit");
    if (value < 1.0) {
      for (double& f : arc_flow) f /= value;
    }
    std::vector<double> y = net_inflow(idx, arc_flow);
    y[static_cast<std::size_t>(idx.root)] = -1.0;
    for (std::size_t v = 0; v < y.size(); ++v) {
      if (static_cast<int>(v) != idx.root) y[v] = std::clamp(y[v], 0.0, 1.0);
    }
    for (std::size_t k : members) {
      sol.flow[k] = arc_flow;
      sol.net[k] = y;
    }
  }
  return sol;
}

}  // namespace

TargetGroups groups(const Instance& inst, const Component& component) {
  TargetGroups g;
  g.members.assign(inst.num_targets(), {});
  for (std::size_t t = 0; t < inst.num_targets(); ++t) {
    for (SensorId s : component) {
      if (inst.covers(s, static_cast<TargetId>(t))) g.members[t].push_back(s);
    }
    std::sort(g.members[t].begin(), g.members[t].end());
    if (g.members[t].empty()) g.uncovered.push_back(static_cast<TargetId>(t));
  }
  return g;
}

int FlowLpIndex::flow_var(int k, int arc) const {
  return static_cast<int>(arcs.size()) * (1 + k) + arc;
}

int FlowLpIndex::net_var(int k, int v) const {
  const int a = static_cast<int>(arcs.size());
  const int kk = static_cast<int>(commodities.size());
  return a * (1 + kk) + k * num_vertices + v;
}

FlowLp build_flow_lp(const LocalGraph& graph, const TargetGroups& groups, SensorId root) {
  if (!groups.feasible()) throw std::invalid_argument("every target needs a coverer in the component");
  FlowLp out;
  FlowLpIndex& idx = out.index;
  idx.root = graph.local_of(root);
  idx.num_vertices = static_cast<int>(graph.size());
  for (std::size_t u = 0; u < graph.size(); ++u) {
    for (int v : graph.adjacency[u]) {
      idx.arc_of.emplace(std::make_pair(static_cast<int>(u), v), static_cast<int>(idx.arcs.size()));
      idx.arcs.push_back({static_cast<int>(u), v});
    }
  }
  for (std::size_t t = 0; t < groups.members.size(); ++t) {
    const auto& members = groups.members[t];
    if (std::binary_search(members.begin(), members.end(), root)) {
      idx.root_served.push_back(static_cast<TargetId>(t));
      continue;
    }
    std::vector<int> local;
    for (SensorId s : members) local.push_back(graph.local_of(s));
    std::sort(local.begin(), local.end());
    idx.commodities.push_back(static_cast<TargetId>(t));
    idx.sinks.push_back(std::move(local));
  }

  LinearProgram& lp = out.lp;
  const int arcs = static_cast<int>(idx.arcs.size());
  const int kk = static_cast<int>(idx.commodities.size());
  for (int a = 0; a < arcs; ++a) lp.add_variable(1.0, 0.0, 1.0);
  for (int k = 0; k < kk; ++k) {
    for (int a = 0; a < arcs; ++a) lp.add_variable(0.0, 0.0, 1.0);
  }
  for (int k = 0; k < kk; ++k) {
    for (int v = 0; v < idx.num_vertices; ++v) lp.add_variable(0.0, v == idx.root ? -1.0 : 0.0, 1.0);
  }

  const auto in = incoming_arcs(idx);
  const auto out_arcs = outgoing_arcs(idx);
  for (int k = 0; k < kk; ++k) {
    const std::vector<int>& sinks = idx.sinks[static_cast<std::size_t>(k)];
    std::vector<bool> in_group(static_cast<std::size_t>(idx.num_vertices), false);
    for (int v : sinks) in_group[static_cast<std::size_t>(v)] = true;
    for (int v = 0; v < idx.num_vertices; ++v) {
      std::vector<LinearTerm> terms;
      for (int a : in[static_cast<std::size_t>(v)]) terms.push_back({idx.flow_var(k, a), 1.0});
      for (int a : out_arcs[static_cast<std::size_t>(v)]) terms.push_back({idx.flow_var(k, a), -1.0});
      terms.push_back({idx.net_var(k, v), -1.0});
      lp.add_constraint(std::move(terms), Relation::kEqual, 0.0);
    }
    lp.add_constraint({{idx.net_var(k, idx.root), 1.0}}, Relation::kEqual, -1.0);
    std::vector<LinearTerm> group_sum;
    for (int v : sinks) group_sum.push_back({idx.net_var(k, v), 1.0});
    lp.add_constraint(std::move(group_sum), Relation::kGreaterEqual, 1.0);
    for (int v = 0; v < idx.num_vertices; ++v) {
      if (v == idx.root || in_group[static_cast<std::size_t>(v)]) continue;
      lp.add_constraint({{idx.net_var(k, v), 1.0}}, Relation::kEqual, 0.0);
    }
    for (int a = 0; a < arcs; ++a) {
      lp.add_constraint({{idx.flow_var(k, a), 1.0}, {idx.x_var(a), -1.0}}, Relation::kLessEqual, 0.0);
    }
  }
  return out;
}

std::vector<double> FlowSolution::lp_values(const FlowLpIndex& index) const {
  const std::size_t arcs = index.arcs.size();
  const std::size_t kk = index.commodities.size();
  std::vector<double> x(arcs * (1 + kk) + kk * static_cast<std::size_t>(index.num_vertices), 0.0);
  for (std::size_t a = 0; a < arcs; ++a) x[a] = capacity[a];
  for (std::size_t k = 0; k < kk; ++k) {
    for (std::size_t a = 0; a < arcs; ++a) x[static_cast<std::size_t>(index.flow_var(static_cast<int>(k), static_cast<int>(a)))] = flow[k][a];
    for (int v = 0; v < index.num_vertices; ++v) {
      x[static_cast<std::size_t>(index.net_var(static_cast<int>(k), v))] = net[k][static_cast<std::size_t>(v)];
    }
  }
  return x;
}

FlowSolution solve_flow_lp(const FlowLp& flow_lp, FlowLpMethod method) {
  return method == FlowLpMethod::kDirect ? solve_direct(flow_lp) : solve_by_cuts(flow_lp);
}

double flow_violation(const FlowLp& flow_lp, const FlowSolution& sol) {
  const std::vector<double> x = sol.lp_values(flow_lp.index);
  return max_violation(flow_lp.lp, x);
}

CellSelection select_cells(const Instance& inst, const LocalGraph& graph, const FlowLp& flow_lp,
                           const FlowSolution& flow) {
  const FlowLpIndex& idx = flow_lp.index;
  CellSelection sel;
  sel.root_cell = cell_of(inst.sensor(graph.vertices[static_cast<std::size_t>(idx.root)]));
  std::set<SensorId> universe;
  std::set<CellId> chosen;
  for (std::size_t k = 0; k < idx.commodities.size(); ++k) {
    std::map<CellId, double> mass;
    for (int v : idx.sinks[k]) {
      mass[cell_of(inst.sensor(graph.vertices[static_cast<std::size_t>(v)]))] +=
          std::max(flow.net[k][static_cast<std::size_t>(v)], 0.0);
    }
    CellChoice choice;
    choice.target = idx.commodities[k];
    choice.candidate_cells = static_cast<int>(mass.size());
    choice.mass = -1.0;
    for (const auto& [cell, m] : mass) {
      if (m > choice.mass + 1e-12) {
        choice.mass = m;
        choice.cell = cell;
      }
    }
    if (!(choice.mass > 0.0)) throw std::logic_error("commodity delivers no flow to its group");
    sel.sigma = std::max(sel.sigma, 1.0 / choice.mass);
    for (int v : idx.sinks[k]) {
      const SensorId s = graph.vertices[static_cast<std::size_t>(v)];
      if (cell_of(inst.sensor(s)) == choice.cell) universe.insert(s);
    }
    chosen.insert(choice.cell);
    sel.choices.push_back(choice);
  }
  sel.universe.assign(universe.begin(), universe.end());
  for (const CellId& cell : chosen) {
    if (cell == sel.root_cell) continue;
    sel.delta.push_back(cell);
    for (SensorId s : sel.universe) {
      if (cell_of(inst.sensor(s)) == cell) {
        sel.representative.emplace(cell, s);
        break;
      }
    }
  }
  return sel;
}

HittingSetInstance make_hitting_set(const TargetGroups& groups, const FlowLpIndex& index,
                                    const CellSelection& selection) {
  HittingSetInstance hs;
  hs.universe = selection.universe;
  for (TargetId t : index.commodities) {
    std::vector<SensorId> member;
    std::set_intersection(groups.members[static_cast<std::size_t>(t)].begin(),
                          groups.members[static_cast<std::size_t>(t)].end(), hs.universe.begin(),
                          hs.universe.end(), std::back_inserter(member));
    hs.family.push_back(std::move(member));
    hs.family_targets.push_back(t);
  }
  return hs;
}

FractionalHittingSet fractional_hitting_set(const LocalGraph& graph, const FlowLp& flow_lp,
                                            const FlowSolution& flow, const CellSelection& selection,
                                            const HittingSetInstance& hs) {
  const FlowLpIndex& idx = flow_lp.index;
  FractionalHittingSet out;
  out.sigma = selection.sigma;
  const auto in = incoming_arcs(idx);
  double inflow = 0.0;
  for (SensorId u : hs.universe) {
    const int lu = graph.local_of(u);
    double peak = 0.0;
    for (std::size_t k = 0; k < idx.commodities.size(); ++k) {
      peak = std::max(peak, flow.net[k][static_cast<std::size_t>(lu)]);
    }
    const double z = std::min(1.0, out.sigma * peak);
    out.z.push_back(z);
    out.total += z;
    for (int a : in[static_cast<std::size_t>(lu)]) inflow += flow.capacity[static_cast<std::size_t>(a)];
  }
  out.inflow_bound = out.sigma * inflow;
  return out;
}

LinearProgram hitting_set_lp(const HittingSetInstance& hs) {
  LinearProgram lp;
  for (std::size_t i = 0; i < hs.universe.size(); ++i) lp.add_variable(1.0, 0.0, 1.0);
  for (const auto& member : hs.family) {
    std::vector<LinearTerm> terms;
    for (SensorId s : member) {
      const auto pos = std::lower_bound(hs.universe.begin(), hs.universe.end(), s) - hs.universe.begin();
      terms.push_back({static_cast<int>(pos), 1.0});
    }
    lp.add_constraint(std::move(terms), Relation::kGreaterEqual, 1.0);
  }
  return lp;
}

double hitting_set_slack(const HittingSetInstance& hs, const std::vector<double>& z) {
  double slack = std::numeric_limits<double>::infinity();
  for (const auto& member : hs.family) {
    double sum = 0.0;
    for (SensorId s : member) {
      const auto pos = std::lower_bound(hs.universe.begin(), hs.universe.end(), s) - hs.universe.begin();
      sum += z[static_cast<std::size_t>(pos)];
    }
    slack = std::min(slack, sum - 1.0);
  }
  return slack;
}

SensorSet round_hitting_set(const HittingSetInstance& hs) {
  std::vector<bool> hit(hs.family.size(), false);
  std::size_t remaining = hs.family.size();
  for (const auto& member : hs.family) {
    if (member.empty()) throw std::invalid_argument("hitting set family has an empty member");
  }
  SensorSet chosen;
  while (remaining > 0) {
    SensorId best = -1;
    std::size_t best_gain = 0;
    for (SensorId u : hs.universe) {
      std::size_t gain = 0;
      for (std::size_t i = 0; i < hs.family.size(); ++i) {
        if (!hit[i] && std::binary_search(hs.family[i].begin(), hs.family[i].end(), u)) ++gain;
      }
      if (gain > best_gain) {
        best_gain = gain;
        best = u;
      }
    }
    if (best < 0) throw std::logic_error("hitting set members outside the universe");
    chosen.insert(best);
    for (std::size_t i = 0; i < hs.family.size(); ++i) {
      if (!hit[i] && std::binary_search(hs.family[i].begin(), hs.family[i].end(), best)) {
        hit[i] = true;
        --remaining;
      }
    }
  }
  return chosen;
}

ReroutedFlow reroute_and_scale(const Instance& inst, const LocalGraph& graph, const FlowLp& flow_lp,
                               const FlowSolution& flow, const CellSelection& selection) {
  const FlowLpIndex& idx = flow_lp.index;
  ReroutedFlow out;
  out.sigma = selection.sigma;
  out.rerouted = flow.flow;
  out.rerouted_net = flow.net;
  out.terminal.assign(idx.commodities.size(), -1);
  for (std::size_t k = 0; k < idx.commodities.size(); ++k) {
    const CellId& cell = selection.choices[k].cell;
    if (cell == selection.root_cell) continue;
    const int rep = graph.local_of(selection.representative.at(cell));
    out.terminal[k] = rep;
    for (int u : idx.sinks[k]) {
      if (u == rep || cell_of(inst.sensor(graph.vertices[static_cast<std::size_t>(u)])) != cell) continue;
      const double excess = std::max(flow.net[k][static_cast<std::size_t>(u)], 0.0);
      auto it = idx.arc_of.find({u, rep});
      if (it == idx.arc_of.end()) throw std::logic_error("same-cell sensors are not adjacent");
      out.rerouted[k][static_cast<std::size_t>(it->second)] += excess;
      out.rerouted_net[k][static_cast<std::size_t>(rep)] += excess;
      out.rerouted_net[k][static_cast<std::size_t>(u)] -= excess;
    }
  }
  out.scaled = out.rerouted;
  out.scaled_net = out.rerouted_net;
  for (auto& row : out.scaled) {
    for (double& v : row) v = std::min(out.sigma * v, 1.0);
  }
  for (auto& row : out.scaled_net) {
    for (double& v : row) v = std::min(out.sigma * v, 1.0);
  }
  return out;
}

double rerouted_conservation_error(const FlowLp& flow_lp, const ReroutedFlow& rerouted) {
  const FlowLpIndex& idx = flow_lp.index;
  double worst = 0.0;
  for (std::size_t k = 0; k < idx.commodities.size(); ++k) {
    const std::vector<double> y = net_inflow(idx, rerouted.rerouted[k]);
    for (std::size_t v = 0; v < y.size(); ++v) worst = std::max(worst, std::abs(y[v] - rerouted.rerouted_net[k][v]));
  }
  return worst;
}

SteinerFractional steiner_fractional(const FlowLp& flow_lp, const ReroutedFlow& rerouted) {
  const FlowLpIndex& idx = flow_lp.index;
  std::vector<double> peak(idx.arcs.size(), 0.0);
  for (const auto& row : rerouted.scaled) {
    for (std::size_t a = 0; a < row.size(); ++a) peak[a] = std::max(peak[a], row[a]);
  }
  SteinerFractional out;
  for (std::size_t a = 0; a < idx.arcs.size(); ++a) {
    const Arc& arc = idx.arcs[a];
    if (arc.from > arc.to) continue;
    const int rev = idx.arc_of.at({arc.to, arc.from});
    const double value = peak[a] + peak[static_cast<std::size_t>(rev)];
    out.edges.emplace_back(arc.from, arc.to);
    out.value.push_back(value);
    out.total += value;
  }
  return out;
}

double steiner_min_cut(const LocalGraph& graph, const SteinerFractional& frac, int root,
                       const std::vector<int>& terminals) {
  double worst = std::numeric_limits<double>::infinity();
  for (int t : terminals) {
    if (t == root) continue;
    FlowNetwork net(static_cast<int>(graph.size()));
    for (std::size_t e = 0; e < frac.edges.size(); ++e) {
      if (frac.value[e] <= 0.0) continue;
      net.add_arc(frac.edges[e].first, frac.edges[e].second, frac.value[e]);
      net.add_arc(frac.edges[e].second, frac.edges[e].first, frac.value[e]);
    }
    worst = std::min(worst, net.max_flow(root, t, 2.0));
  }
  return worst;
}

SensorSet assemble(const SensorSet& hitting_set, const SteinerTree& tree, const LocalGraph& graph, int root) {
  SensorSet sol = hitting_set;
  for (int v : tree.vertices) sol.insert(graph.vertices[static_cast<std::size_t>(v)]);
  sol.insert(graph.vertices[static_cast<std::size_t>(root)]);
  return sol;
}

std::vector<SensorId> candidate_roots(const Instance& inst, const Component& component, const TargetGroups& groups,
                                      RootStrategy strategy) {
  if (strategy == RootStrategy::kAll) return component;
  std::map<SensorId, int> covered;
  for (const auto& member : groups.members) {
    for (SensorId s : member) ++covered[s];
  }
  SensorId best = component.front();
  int best_count = -1;
  for (SensorId s : component) {
    const int c = covered.count(s) != 0U ? covered[s] : 0;
    if (c > best_count) {
      best_count = c;
      best = s;
    }
  }
  std::vector<std::pair<double, SensorId>> by_distance;
  for (SensorId s : component) {
    if (s != best) by_distance.emplace_back(squared_distance(inst.sensor(s), inst.sensor(best)), s);
  }
  std::sort(by_distance.begin(), by_distance.end());
  std::vector<SensorId> roots{best};
  std::set<CellId> used{cell_of(inst.sensor(best))};
  for (const auto& [d2, s] : by_distance) {
    if (roots.size() == 5) break;
    if (used.insert(cell_of(inst.sensor(s))).second) roots.push_back(s);
  }
  return roots;
}

MinCscRun run_min_csc_pipeline(const Instance& inst, const LocalGraph& graph, const TargetGroups& groups,
                               SensorId root, FlowLpMethod method) {
  MinCscRun run;
  run.root = root;
  const FlowLp flow_lp = build_flow_lp(graph, groups, root);
  const FlowLpIndex& idx = flow_lp.index;
  const FlowSolution flow = solve_flow_lp(flow_lp, method);
  run.lp_flow = flow.objective;
  run.flow_violation = flow_violation(flow_lp, flow);
  run.commodities = static_cast<int>(idx.commodities.size());
  run.root_served = static_cast<int>(idx.root_served.size());
  run.master_rounds = flow.master_rounds;
  run.cuts = flow.cuts;

  const CellSelection selection = select_cells(inst, graph, flow_lp, flow);
  const HittingSetInstance hs = make_hitting_set(groups, idx, selection);
  const FractionalHittingSet frac_hs = fractional_hitting_set(graph, flow_lp, flow, selection, hs);
  run.sigma = selection.sigma;
  run.hs_fractional = frac_hs.total;
  run.hs_inflow_bound = frac_hs.inflow_bound;
  run.hs_min_slack = hs.family.empty() ? 0.0 : hitting_set_slack(hs, frac_hs.z);
  if (!hs.family.empty()) {
    const LpSolution hs_lp = solve(hitting_set_lp(hs));
    if (hs_lp.status != LpStatus::kOptimal) throw std::logic_error("hitting set LP not optimal");
    run.lp_hs = hs_lp.objective;
  }
  const SensorSet hitting = round_hitting_set(hs);
  run.hitting_set_size = hitting.size();

  const ReroutedFlow rerouted = reroute_and_scale(inst, graph, flow_lp, flow, selection);
  run.rerouted_min_terminal_inflow = std::numeric_limits<double>::infinity();
  for (std::size_t k = 0; k < idx.commodities.size(); ++k) {
    const int t = rerouted.terminal[k];
    if (t >= 0) {
      run.rerouted_min_terminal_inflow =
          std::min(run.rerouted_min_terminal_inflow, rerouted.scaled_net[k][static_cast<std::size_t>(t)]);
    }
  }
  const SteinerFractional frac_st = steiner_fractional(flow_lp, rerouted);
  run.steiner_fractional = frac_st.total;

  std::vector<int> terminals{idx.root};
  for (const CellId& cell : selection.delta) terminals.push_back(graph.local_of(selection.representative.at(cell)));
  std::sort(terminals.begin(), terminals.end());
  terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
  run.terminals = static_cast<int>(terminals.size());
  run.steiner_min_cut = steiner_min_cut(graph, frac_st, idx.root, terminals);

  const SteinerTree tree = primal_dual_steiner(graph, terminals);
  if (!tree.feasible) throw std::logic_error("terminals of one component are disconnected");
  run.steiner_dual_bound = tree.dual_bound;
  run.tree_vertices = std::max<std::size_t>(tree.vertices.size(), 1);
  run.solution = assemble(hitting, tree, graph, idx.root);
  run.solution_size = run.solution.size();

  const Verdict verdict = verify_min_csc(inst, run.solution);
  if (!verdict.feasible) {
    std::ostringstream msg;
    msg << "assembled solution failed verification (root " << root << "): " << verdict.reason;
    throw std::logic_error(msg.str());
  }
  return run;
}

MinCscResult solve_min_csc(const Instance& inst, const MinCscOptions& options) {
  if (!inst.is_normalized()) throw std::invalid_argument("solve_min_csc expects a normalized instance (r_c = 1)");
  MinCscResult result;
  if (inst.num_targets() == 0) {
    result.feasible = true;
    return result;
  }
  const CommGraph g = build_comm_graph(inst);
  result.components = components(g);

  for (std::size_t s = 0; s < inst.num_sensors(); ++s) {
    const std::vector<SensorId> single{static_cast<SensorId>(s)};
    if (coverage_count(inst, single) == inst.num_targets()) {
      result.feasible = true;
      result.solution = SensorSet{static_cast<SensorId>(s)};
      return result;
    }
  }

  for (std::size_t c = 0; c < result.components.size(); ++c) {
    const Component& comp = result.components[c];
    const TargetGroups tg = groups(inst, comp);
    if (!tg.feasible()) continue;
    result.feasible_components.push_back(static_cast<int>(c));
    const LocalGraph lg = induced_subgraph(g, comp);
    for (SensorId root : candidate_roots(inst, comp, tg, options.roots)) {
      MinCscRun run = run_min_csc_pipeline(inst, lg, tg, root, options.lp_method);
      run.component = static_cast<int>(c);
      if (!result.best_run || run.solution_size < result.runs[*result.best_run].solution_size) {
        result.best_run = result.runs.size();
      }
      result.runs.push_back(std::move(run));
    }
  }
  if (result.best_run) {
    result.feasible = true;
    result.solution = result.runs[*result.best_run].solution;
  }
  return result;
}

}  // namespace conncover
