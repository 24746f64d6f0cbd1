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

#ifndef CONNCOVER_BUDGETED_CSC_HPP_
#define CONNCOVER_BUDGETED_CSC_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conncover/comm_graph.hpp"
#include "conncover/grid.hpp"
#include "conncover/instance.hpp"
#include "conncover/tree_tools.hpp"

namespace conncover {

struct MaxCovResult {
  std::vector<int> chosen;  // set indices in pick order
  std::size_t covered = 0;
};

// Greedy maximum coverage: repeatedly take the set with the largest marginal
// gain (ties to the smallest index) until the budget is spent or nothing is
// gained. Elements are arbitrary ints.
MaxCovResult greedy_max_cov(const std::vector<std::vector<int>>& sets, std::size_t budget);

struct ProfitAssignment {
  CellGroupId group;
  std::vector<std::int64_t> profit;                  // per SensorId, 0 outside the group
  std::map<CellId, std::vector<SensorId>> order;     // greedy pick order per cell

  std::int64_t total() const;
};

// Per cell of group (a, b), a greedy pass that credits each sensor with the
// targets it newly covers within that cell.
ProfitAssignment assign_modified_profit(const Instance& inst, const Component& component, int a, int b, int k);

enum class QstMode { kExact, kHeuristic, kAuto };

const char* to_string(QstMode mode);
std::optional<QstMode> parse_qst_mode(const std::string& text);

// Largest component handled by the exact engine.
inline constexpr std::size_t kExactQstLimit = 18;

struct QstInstance {
  LocalGraph graph;
  std::vector<std::int64_t> profit;  // per local vertex
};

struct QstTree {
  bool feasible = false;
  Tree tree;                 // local ids
  std::int64_t profit = 0;

  std::size_t cost() const { return tree.edges.size(); }
};

// Answers quota queries on one instance. Exact mode enumerates every
// connected vertex set once and keeps the most profitable one per size;
// heuristic mode grows trees greedily by profit per added vertex from every
// profitable start.
class QstEngine {
 public:
  QstEngine(QstInstance inst, QstMode mode);

  // Cheapest tree (fewest vertices) with profit >= quota.
  QstTree solve(std::int64_t quota) const;
  QstMode mode() const { return mode_; }
  const QstInstance& instance() const { return inst_; }
  std::int64_t total_profit() const { return total_; }

 private:
  struct Stage {
    std::size_t size;
    std::int64_t profit;
    std::vector<int> vertices;
  };

  void enumerate_exact();
  void grow_heuristic();
  QstTree make_tree(const std::vector<int>& vertices) const;

  QstInstance inst_;
  QstMode mode_;
  std::int64_t total_ = 0;
  std::vector<Stage> best_by_size_;           // exact: index = size
  std::vector<std::vector<Stage>> growth_;    // heuristic: per start
};

QstTree quota_steiner_tree(const QstInstance& inst, std::int64_t quota, QstMode mode);

struct GuessResult {
  QstTree tree;
  std::int64_t quota_reached = 0;   // 0 when even quota 1 was out of reach
};

enum class GuessSearch { kLinear, kBinary };

// Raises the quota 1, 2, ... and keeps the last tree with at most 4B vertices.
// Binary search needs the exact engine. Falls back to the most profitable
// single vertex when no quota fits.
GuessResult guess_profit_loop(const QstEngine& engine, std::size_t budget, GuessSearch search = GuessSearch::kLinear);

struct BudgetedOptions {
  QstMode qst = QstMode::kAuto;
};

struct BudgetedIteration {
  int k = 1;
  int a = 0;
  int b = 0;
  int component = 0;
  std::string qst_mode;
  std::int64_t quota_reached = 0;
  std::size_t tree_size = 0;
  std::int64_t tree_profit_hat = 0;
  std::size_t subtree_size = 0;
  std::int64_t subtree_profit_hat = 0;
  std::size_t subtree_profit = 0;     // true coverage of the extracted subtree
  SensorSet sensors;
  std::vector<std::pair<SensorId, SensorId>> tree_edges;
};

struct BudgetedResult {
  std::size_t budget = 0;
  int k = 1;
  SensorSet sensors;
  std::vector<std::pair<SensorId, SensorId>> tree_edges;
  std::size_t profit = 0;
  std::vector<BudgetedIteration> iterations;
  std::optional<std::size_t> best_iteration;
};

// Requires a normalized instance.
BudgetedResult solve_budgeted(const Instance& inst, std::size_t budget, const BudgetedOptions& options = {});

}  // namespace conncover

#endif  // CONNCOVER_BUDGETED_CSC_HPP_
