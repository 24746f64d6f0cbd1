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

#ifndef CONNCOVER_STEINER_HPP_
#define CONNCOVER_STEINER_HPP_

#include <utility>
#include <vector>

#include "conncover/comm_graph.hpp"

namespace conncover {

struct SteinerTree {
  bool feasible = true;                     // false when terminals are disconnected
  std::vector<std::pair<int, int>> edges;   // local ids, u < v, ascending
  std::vector<int> vertices;                // ascending; the lone terminal when |Ter| = 1
  double dual_bound = 0.0;                  // sum of grown duals, a lower bound on OPT

  std::size_t cost() const { return edges.size(); }
};

// Primal-dual (uniform dual growth over active moats, then pruning of
// non-terminal leaves) for unit edge costs; cost <= 2 * dual_bound.
SteinerTree primal_dual_steiner(const LocalGraph& graph, const std::vector<int>& terminals);

}  // namespace conncover

#endif  // CONNCOVER_STEINER_HPP_
