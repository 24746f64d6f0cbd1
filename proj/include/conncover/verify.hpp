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

#ifndef CONNCOVER_VERIFY_HPP_
#define CONNCOVER_VERIFY_HPP_

#include <string>
#include <utility>
#include <vector>

#include "conncover/instance.hpp"

namespace conncover {

// Independent feasibility check: brute-force pairwise adjacency and BFS,
// sharing nothing with the solvers beyond the instance predicates.
struct Verdict {
  bool feasible = false;
  std::string reason;                // empty when feasible
  std::vector<TargetId> uncovered;   // coverage failures (min-csc only)
  std::size_t covered = 0;
};

// Every target covered and the set connected. The empty set is feasible only
// for instances without targets.
Verdict verify_min_csc(const Instance& inst, const SensorSet& sensors);

// |sensors| <= budget, the set is connected (or empty), and `tree_edges`, if
// non-empty, is a spanning tree of the set using communication edges.
Verdict verify_budgeted(const Instance& inst, const SensorSet& sensors, std::size_t budget,
                        const std::vector<std::pair<SensorId, SensorId>>& tree_edges = {});

}  // namespace conncover

#endif  // CONNCOVER_VERIFY_HPP_
