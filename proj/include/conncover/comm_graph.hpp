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

#ifndef CONNCOVER_COMM_GRAPH_HPP_
#define CONNCOVER_COMM_GRAPH_HPP_

#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "conncover/instance.hpp"

namespace conncover {

using Edge = std::pair<SensorId, SensorId>;

// Communication graph: an edge joins two sensors within r_c of each other.
struct CommGraph {
  std::size_t num_vertices = 0;
  std::vector<std::vector<SensorId>> adjacency;  // ascending neighbor ids
  std::vector<Edge> edges;                       // u < v, lexicographic

  bool adjacent(SensorId u, SensorId v) const;
};

using Component = std::vector<SensorId>;

// Closed-disk adjacency via buckets of side r_c.
CommGraph build_comm_graph(const Instance& inst);

// Maximal connected components, each ascending, ordered by smallest member.
std::vector<Component> components(const CommGraph& g);

enum class Connectivity { kConnected, kDisconnected, kEmpty };

Connectivity subset_connectivity(const CommGraph& g, const SensorSet& s);
// False for the empty set; use subset_connectivity to tell the cases apart.
bool is_connected_subset(const CommGraph& g, const SensorSet& s);

// Induced subgraph with dense local ids 0..size-1 (local i <-> vertices[i]).
struct LocalGraph {
  std::vector<SensorId> vertices;
  std::vector<std::vector<int>> adjacency;

  std::size_t size() const { return vertices.size(); }
  int local_of(SensorId s) const;
  std::vector<std::pair<int, int>> edges() const;

  std::unordered_map<SensorId, int> index;
};

LocalGraph induced_subgraph(const CommGraph& g, const std::vector<SensorId>& vertices);
// Plain graph over local ids 0..n-1 (used by tests and oracles).
LocalGraph make_local_graph(std::size_t n, const std::vector<std::pair<int, int>>& edges);

std::string to_dot(const Instance& inst, const CommGraph& g);

}  // namespace conncover

#endif  // CONNCOVER_COMM_GRAPH_HPP_
