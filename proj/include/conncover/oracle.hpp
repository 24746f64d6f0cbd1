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

#ifndef CONNCOVER_ORACLE_HPP_
#define CONNCOVER_ORACLE_HPP_

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "conncover/instance.hpp"

namespace conncover::oracle {

// Exhaustive solvers used as ground truth. They build their own adjacency from
// the instance predicates and refuse inputs above a hard size guard.

class GuardExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr std::size_t kMinCscLimit = 20;
inline constexpr std::size_t kBudgetedLimit = 18;
inline constexpr std::size_t kMaxCovLimit = 20;
inline constexpr std::size_t kSteinerTerminalLimit = 10;
inline constexpr std::size_t kQstLimit = 18;

struct Result {
  bool feasible = false;
  std::int64_t value = 0;
  std::vector<int> witness;                 // sensor ids, set indices or vertices, ascending
  std::vector<std::pair<int, int>> edges;   // tree witnesses only
  std::uint64_t explored = 0;
  double millis = 0.0;
};

struct MinCscQuery {
  std::vector<SensorId> within;         // candidate pool; empty = all sensors
  std::optional<SensorId> must_contain;
};

// Minimum connected covering set, by subsets of increasing size.
Result exact_min_csc(const Instance& inst, const MinCscQuery& query = {});

// Maximum number of covered targets over connected sets of at most `budget`.
Result exact_budgeted(const Instance& inst, std::size_t budget);

// Maximum union size over at most `budget` of the sets.
Result exact_max_cov(const std::vector<std::vector<int>>& sets, std::size_t budget);

// Minimum edge count tree spanning `terminals` (Dreyfus-Wagner over BFS
// distances); value is the edge count.
Result exact_steiner(const std::vector<std::vector<int>>& adjacency, const std::vector<int>& terminals);

// Fewest-edge tree whose vertex profits reach `quota`; value is the edge count
// (0 for the empty tree at quota <= 0).
Result exact_qst(const std::vector<std::vector<int>>& adjacency, const std::vector<std::int64_t>& profit,
                 std::int64_t quota);

}  // namespace conncover::oracle

#endif  // CONNCOVER_ORACLE_HPP_
