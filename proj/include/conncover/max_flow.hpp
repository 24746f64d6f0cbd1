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

#ifndef CONNCOVER_MAX_FLOW_HPP_
#define CONNCOVER_MAX_FLOW_HPP_

#include <limits>
#include <vector>

namespace conncover {

// Dinic's algorithm on a directed network with real capacities.
class FlowNetwork {
 public:
  explicit FlowNetwork(int num_nodes);

  // Returns the arc id.
  int add_arc(int from, int to, double capacity);

  // Pushes flow from source to sink, stopping once `limit` is reached.
  double max_flow(int source, int sink, double limit = std::numeric_limits<double>::infinity());

  double flow(int arc) const { return arcs_[static_cast<std::size_t>(2 * arc)].flow; }
  // Nodes reachable from the source in the residual network after max_flow.
  std::vector<bool> source_side(int source) const;
  // Nodes that can reach the sink in the residual network after max_flow.
  std::vector<bool> sink_side(int sink) const;
  int num_nodes() const { return static_cast<int>(head_.size()); }

 private:
  struct ResidualArc {
    int to;
    int next;
    double capacity;
    double flow;
  };

  double residual(const ResidualArc& a) const { return a.capacity - a.flow; }
  bool build_levels(int source, int sink);
  double push(int node, int sink, double amount);

  std::vector<ResidualArc> arcs_;
  std::vector<int> head_;
  std::vector<int> level_;
  std::vector<int> cursor_;
};

}  // namespace conncover

#endif  // CONNCOVER_MAX_FLOW_HPP_
