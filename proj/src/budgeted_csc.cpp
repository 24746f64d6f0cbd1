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

#include "conncover/budgeted_csc.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>
#include <stdexcept>

namespace conncover {

namespace {

QstMode resolve(QstMode mode, std::size_t vertices) {
  if (mode != QstMode::kAuto) return mode;
  return vertices <= kExactQstLimit ? QstMode::kExact : QstMode::kHeuristic;
}

std::vector<int> mask_vertices(std::uint32_t mask) {
  std::vector<int> out;
  while (mask != 0U) {
    out.push_back(std::countr_zero(mask));
    mask &= mask - 1;
  }
  return out;
}

}  // namespace

MaxCovResult greedy_max_cov(const std::vector<std::vector<int>>& sets, std::size_t budget) {
  MaxCovResult out;
  std::set<int> covered;
  std::vector<bool> used(sets.size(), false);
  while (out.chosen.size() < budget) {
    std::size_t best_gain = 0;
    int best = -1;
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (used[i]) continue;
      std::set<int> fresh;
      for (int e : sets[i]) {
        if (covered.count(e) == 0U) fresh.insert(e);
      }
      if (fresh.size() > best_gain) {
        best_gain = fresh.size();
        best = static_cast<int>(i);
      }
    }
    if (best < 0) break;
    used[static_cast<std::size_t>(best)] = true;
    covered.insert(sets[static_cast<std::size_t>(best)].begin(), sets[static_cast<std::size_t>(best)].end());
    out.chosen.push_back(best);
  }
  out.covered = covered.size();
  return out;
}

std::int64_t ProfitAssignment::total() const {
  return std::accumulate(profit.begin(), profit.end(), std::int64_t{0});
}

ProfitAssignment assign_modified_profit(const Instance& inst, const Component& component, int a, int b, int k) {
  ProfitAssignment out;
  out.group = {a, b, k};
  out.profit.assign(inst.num_sensors(), 0);
  for (const auto& [cell, sensors] : bucket_by_cell(inst, component)) {
    const CellGroupId g = group_of(cell, k);
    if (g.a != a || g.b != b) continue;
    std::vector<std::vector<TargetId>> reach(sensors.size());
    for (std::size_t i = 0; i < sensors.size(); ++i) {
      for (std::size_t t = 0; t < inst.num_targets(); ++t) {
        if (inst.covers(sensors[i], static_cast<TargetId>(t))) reach[i].push_back(static_cast<TargetId>(t));
      }
    }
    std::vector<bool> taken(sensors.size(), false);
    std::set<TargetId> covered;
    std::vector<SensorId>& order = out.order[cell];
    for (std::size_t round = 0; round < sensors.size(); ++round) {
      std::size_t best = sensors.size();
      std::int64_t best_gain = -1;
      for (std::size_t i = 0; i < sensors.size(); ++i) {
        if (taken[i]) continue;
        std::int64_t gain = 0;
        for (TargetId t : reach[i]) gain += covered.count(t) == 0U ? 1 : 0;
        if (gain > best_gain) {
          best_gain = gain;
          best = i;
        }
      }
      taken[best] = true;
      covered.insert(reach[best].begin(), reach[best].end());
      out.profit[static_cast<std::size_t>(sensors[best])] = best_gain;
      order.push_back(sensors[best]);
    }
  }
  return out;
}

const char* to_string(QstMode mode) {
  switch (mode) {
    case QstMode::kExact:
      return "exact";
    case QstMode::kHeuristic:
      return "heuristic";
    case QstMode::kAuto:
      return "auto";
  }
  return "?";
}

std::optional<QstMode> parse_qst_mode(const std::string& text) {
  if (text == "exact") return QstMode::kExact;
  if (text == "heuristic") return QstMode::kHeuristic;
  if (text == "auto") return QstMode::kAuto;
  return std::nullopt;
}

QstEngine::QstEngine(QstInstance inst, QstMode mode) : inst_(std::move(inst)), mode_(resolve(mode, inst_.graph.size())) {
  if (inst_.profit.size() != inst_.graph.size()) throw std::invalid_argument("one profit per vertex required");
  for (std::int64_t p : inst_.profit) {
    if (p < 0) throw std::invalid_argument("profits must be non-negative");
    total_ += p;
  }
  if (mode_ == QstMode::kExact) {
    if (inst_.graph.size() > kExactQstLimit) {
      throw std::invalid_argument("exact quota search is limited to " + std::to_string(kExactQstLimit) + " vertices");
    }
    enumerate_exact();
  } else {
    grow_heuristic();
  }
}

void QstEngine::enumerate_exact() {
  const int n = static_cast<int>(inst_.graph.size());
  std::vector<std::uint32_t> adj(static_cast<std::size_t>(n), 0U);
  for (int v = 0; v < n; ++v) {
    for (int w : inst_.graph.adjacency[static_cast<std::size_t>(v)]) adj[static_cast<std::size_t>(v)] |= 1U << w;
  }
  best_by_size_.assign(static_cast<std::size_t>(n) + 1, Stage{0, -1, {}});
  best_by_size_[0] = Stage{0, 0, {}};
  std::vector<std::uint32_t> best_mask(static_cast<std::size_t>(n) + 1, 0U);

  // Each connected set is produced exactly once, from its smallest vertex:
  // new candidates are neighbours of the added vertex that lie above the
  // anchor and outside the closed neighbourhood of the current set.
  auto extend = [&](auto&& self, std::uint32_t sub, std::uint32_t ext, std::uint32_t closed, std::uint32_t above,
                    std::int64_t profit) -> void {
    const auto size = static_cast<std::size_t>(std::popcount(sub));
    if (profit > best_by_size_[size].profit) {
      best_by_size_[size].profit = profit;
      best_mask[size] = sub;
    }
    while (ext != 0U) {
      const int w = std::countr_zero(ext);
      ext &= ext - 1;
      const std::uint32_t fresh = adj[static_cast<std::size_t>(w)] & ~closed & above;
      self(self, sub | (1U << w), ext | fresh, closed | adj[static_cast<std::size_t>(w)], above,
           profit + inst_.profit[static_cast<std::size_t>(w)]);
    }
  };
  for (int v = 0; v < n; ++v) {
    const std::uint32_t above = v + 1 >= 32 ? 0U : ~((1U << (v + 1)) - 1U);
    extend(extend, 1U << v, adj[static_cast<std::size_t>(v)] & above, adj[static_cast<std::size_t>(v)] | (1U << v), above,
           inst_.profit[static_cast<std::size_t>(v)]);
  }
  for (std::size_t s = 0; s < best_by_size_.size(); ++s) {
    best_by_size_[s].size = s;
    best_by_size_[s].vertices = mask_vertices(best_mask[s]);
  }
}

void QstEngine::grow_heuristic() {
  const std::size_t n = inst_.graph.size();
  for (std::size_t start = 0; start < n; ++start) {
    if (inst_.profit[start] <= 0) continue;
    std::vector<bool> in(n, false);
    in[start] = true;
    std::vector<int> members{static_cast<int>(start)};
    std::int64_t profit = inst_.profit[start];
    std::vector<Stage> stages{{1, profit, members}};
    while (profit < total_) {
      // Multi-source BFS from the current tree; gain and length of the
      // shortest path to each outside vertex.
      std::vector<int> parent(n, -1);
      std::vector<std::size_t> length(n, 0);
      std::vector<std::int64_t> gain(n, 0);
      std::vector<int> queue(members.begin(), members.end());
      std::sort(queue.begin(), queue.end());
      std::vector<bool> seen = in;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const int u = queue[head];
        for (int w : inst_.graph.adjacency[static_cast<std::size_t>(u)]) {
          if (seen[static_cast<std::size_t>(w)]) continue;
          seen[static_cast<std::size_t>(w)] = true;
          parent[static_cast<std::size_t>(w)] = u;
          length[static_cast<std::size_t>(w)] = (in[static_cast<std::size_t>(u)] ? 0 : length[static_cast<std::size_t>(u)]) + 1;
          gain[static_cast<std::size_t>(w)] =
              (in[static_cast<std::size_t>(u)] ? 0 : gain[static_cast<std::size_t>(u)]) + inst_.profit[static_cast<std::size_t>(w)];
          queue.push_back(w);
        }
      }
      int pick = -1;
      for (std::size_t w = 0; w < n; ++w) {
        if (in[w] || parent[w] < 0 || gain[w] <= 0) continue;
        if (pick < 0) {
          pick = static_cast<int>(w);
          continue;
        }
        const auto p = static_cast<std::size_t>(pick);
        const auto lhs = gain[w] * static_cast<std::int64_t>(length[p]);
        const auto rhs = gain[p] * static_cast<std::int64_t>(length[w]);
        if (lhs > rhs || (lhs == rhs && length[w] < length[p])) pick = static_cast<int>(w);
      }
      if (pick < 0) break;
      for (int w = pick; !in[static_cast<std::size_t>(w)]; w = parent[static_cast<std::size_t>(w)]) {
        in[static_cast<std::size_t>(w)] = true;
        members.push_back(w);
        profit += inst_.profit[static_cast<std::size_t>(w)];
      }
      std::vector<int> sorted = members;
      std::sort(sorted.begin(), sorted.end());
      stages.push_back({members.size(), profit, std::move(sorted)});
    }
    growth_.push_back(std::move(stages));
  }
}

QstTree QstEngine::make_tree(const std::vector<int>& vertices) const {
  QstTree out;
  out.feasible = true;
  out.tree = spanning_tree(inst_.graph.adjacency, vertices);
  out.profit = 0;
  for (int v : out.tree.vertices) out.profit += inst_.profit[static_cast<std::size_t>(v)];
  return out;
}

QstTree QstEngine::solve(std::int64_t quota) const {
  if (quota <= 0) {
    QstTree empty;
    empty.feasible = true;
    return empty;
  }
  const Stage* best = nullptr;
  if (mode_ == QstMode::kExact) {
    for (const Stage& s : best_by_size_) {
      if (s.profit >= quota) {
        best = &s;
        break;
      }
    }
  } else {
    for (const auto& stages : growth_) {
      for (const Stage& s : stages) {
        if (s.profit < quota) continue;
        if (best == nullptr || s.size < best->size) best = &s;
        break;
      }
    }
  }
  if (best == nullptr) return {};
  return make_tree(best->vertices);
}

QstTree quota_steiner_tree(const QstInstance& inst, std::int64_t quota, QstMode mode) {
  return QstEngine(inst, mode).solve(quota);
}

GuessResult guess_profit_loop(const QstEngine& engine, std::size_t budget, GuessSearch search) {
  if (budget == 0) throw std::invalid_argument("budget must be at least 1");
  const std::size_t limit = 4 * budget;
  auto fits = [&](const QstTree& t) { return t.feasible && t.tree.size() <= limit; };
  GuessResult out;
  if (search == GuessSearch::kBinary) {
    if (engine.mode() != QstMode::kExact) throw std::invalid_argument("binary quota search needs the exact engine");
    std::int64_t lo = 0;
    std::int64_t hi = engine.total_profit();
    while (lo < hi) {
      const std::int64_t mid = lo + (hi - lo + 1) / 2;
      if (fits(engine.solve(mid))) {
        lo = mid;
      } else {
        hi = mid - 1;
      }
    }
    if (lo > 0) {
      out.tree = engine.solve(lo);
      out.quota_reached = lo;
    }
  } else {
    for (std::int64_t q = 1;; ++q) {
      QstTree t = engine.solve(q);
      if (!fits(t)) break;
      out.tree = std::move(t);
      out.quota_reached = q;
    }
  }
  if (out.quota_reached == 0) {
    const auto& profit = engine.instance().profit;
    if (profit.empty()) return out;
    const auto best = std::max_element(profit.begin(), profit.end()) - profit.begin();
    out.tree.feasible = true;
    out.tree.tree = Tree{{static_cast<int>(best)}, {}};
    out.tree.profit = profit[static_cast<std::size_t>(best)];
  }
  return out;
}

BudgetedResult solve_budgeted(const Instance& inst, std::size_t budget, const BudgetedOptions& options) {
  if (!inst.is_normalized()) throw std::invalid_argument("solve_budgeted expects a normalized instance (r_c = 1)");
  BudgetedResult result;
  result.budget = budget;
  result.k = group_modulus(inst.ratio());
  if (budget == 0 || inst.num_sensors() == 0) return result;
  const CommGraph g = build_comm_graph(inst);
  const std::vector<Component> comps = components(g);
  std::vector<LocalGraph> local;
  local.reserve(comps.size());
  for (const Component& c : comps) local.push_back(induced_subgraph(g, c));

  for (int a = 0; a < result.k; ++a) {
    for (int b = 0; b < result.k; ++b) {
      for (std::size_t c = 0; c < comps.size(); ++c) {
        const ProfitAssignment pa = assign_modified_profit(inst, comps[c], a, b, result.k);
        QstInstance qi{local[c], {}};
        for (SensorId s : comps[c]) qi.profit.push_back(pa.profit[static_cast<std::size_t>(s)]);

        BudgetedIteration it;
        it.k = result.k;
        it.a = a;
        it.b = b;
        it.component = static_cast<int>(c);
        const QstMode mode = resolve(options.qst, qi.graph.size());
        it.qst_mode = to_string(mode);
        Tree tree;
        if (std::all_of(qi.profit.begin(), qi.profit.end(), [](std::int64_t p) { return p == 0; })) {
          // No quota is reachable; the guess loop would fall back to this.
          tree = Tree{{0}, {}};
        } else {
          const QstEngine engine(qi, mode);
          const GuessResult guess = guess_profit_loop(engine, budget);
          tree = guess.tree.tree;
          it.quota_reached = guess.quota_reached;
        }
        it.tree_size = tree.size();
        it.tree_profit_hat = tree_profit(tree, qi.profit);
        const Tree sub = best_subtree(tree, qi.profit, budget);
        it.subtree_size = sub.size();
        it.subtree_profit_hat = tree_profit(sub, qi.profit);
        std::vector<SensorId> ids;
        for (int v : sub.vertices) ids.push_back(qi.graph.vertices[static_cast<std::size_t>(v)]);
        it.sensors = SensorSet(std::move(ids));
        for (const auto& [u, v] : sub.edges) {
          const SensorId su = qi.graph.vertices[static_cast<std::size_t>(u)];
          const SensorId sv = qi.graph.vertices[static_cast<std::size_t>(v)];
          it.tree_edges.emplace_back(std::min(su, sv), std::max(su, sv));
        }
        std::sort(it.tree_edges.begin(), it.tree_edges.end());
        it.subtree_profit = coverage(inst, it.sensors).size();

        bool better = !result.best_iteration;
        if (!better) {
          const BudgetedIteration& cur = result.iterations[*result.best_iteration];
          better = it.subtree_profit > cur.subtree_profit ||
                   (it.subtree_profit == cur.subtree_profit && it.a == cur.a && it.b == cur.b && it.sensors < cur.sensors);
        }
        if (better) result.best_iteration = result.iterations.size();
        result.iterations.push_back(std::move(it));
      }
    }
  }
  const BudgetedIteration& best = result.iterations[*result.best_iteration];
  result.sensors = best.sensors;
  result.tree_edges = best.tree_edges;
  result.profit = best.subtree_profit;
  return result;
}

}  // namespace conncover
