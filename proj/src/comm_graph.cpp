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

#include "conncover/comm_graph.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

namespace conncover {

bool CommGraph::adjacent(SensorId u, SensorId v) const {
  const auto& nb = adjacency[static_cast<std::size_t>(u)];
  return std::binary_search(nb.begin(), nb.end(), v);
}

CommGraph build_comm_graph(const Instance& inst) {
  CommGraph g;
  g.num_vertices = inst.num_sensors();
  g.adjacency.assign(g.num_vertices, {});

  const double side = inst.rc();
  std::map<std::pair<std::int64_t, std::int64_t>, std::vector<SensorId>> buckets;
  auto bucket_of = [&](const Point& p) {
    return std::make_pair(static_cast<std::int64_t>(std::floor(p.x / side)),
                          static_cast<std::int64_t>(std::floor(p.y / side)));
  };
  for (std::size_t s = 0; s < inst.num_sensors(); ++s) {
    buckets[bucket_of(inst.sensor(static_cast<SensorId>(s)))].push_back(static_cast<SensorId>(s));
  }
  // The tolerance reaches slightly past r_c, so the scan window is widened to match.
  const auto reach = static_cast<std::int64_t>(std::ceil(std::sqrt(1.0 + geometric_tolerance())));
  for (std::size_t s = 0; s < inst.num_sensors(); ++s) {
    const auto u = static_cast<SensorId>(s);
    const auto [bx, by] = bucket_of(inst.sensor(u));
    for (std::int64_t dx = -reach; dx <= reach; ++dx) {
      for (std::int64_t dy = -reach; dy <= reach; ++dy) {
        auto it = buckets.find({bx + dx, by + dy});
        if (it == buckets.end()) continue;
        for (SensorId v : it->second) {
          if (v != u && inst.communicates(u, v)) g.adjacency[s].push_back(v);
        }
      }
    }
    std::sort(g.adjacency[s].begin(), g.adjacency[s].end());
  }
  for (std::size_t s = 0; s < g.num_vertices; ++s) {
    for (SensorId v : g.adjacency[s]) {
      if (static_cast<SensorId>(s) < v) g.edges.emplace_back(static_cast<SensorId>(s), v);
    }
  }
  return g;
}

std::vector<Component> components(const CommGraph& g) {
  std::vector<Component> out;
  std::vector<bool> seen(g.num_vertices, false);
  for (std::size_t start = 0; start < g.num_vertices; ++start) {
    if (seen[start]) continue;
    Component comp;
    std::queue<SensorId> queue;
    queue.push(static_cast<SensorId>(start));
    seen[start] = true;
    while (!queue.empty()) {
      const SensorId u = queue.front();
      queue.pop();
      comp.push_back(u);
      for (SensorId v : g.adjacency[static_cast<std::size_t>(u)]) {
        if (!seen[static_cast<std::size_t>(v)]) {
          seen[static_cast<std::size_t>(v)] = true;
          queue.push(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

Connectivity subset_connectivity(const CommGraph& g, const SensorSet& s) {
  if (s.empty()) return Connectivity::kEmpty;
  std::vector<bool> in_set(g.num_vertices, false);
  for (SensorId v : s) {
    if (v < 0 || static_cast<std::size_t>(v) >= g.num_vertices) throw std::out_of_range("sensor id out of range");
    in_set[static_cast<std::size_t>(v)] = true;
  }
  std::vector<bool> seen(g.num_vertices, false);
  std::vector<SensorId> stack{*s.begin()};
  seen[static_cast<std::size_t>(*s.begin())] = true;
  std::size_t reached = 0;
  while (!stack.empty()) {
    const SensorId u = stack.back();
    stack.pop_back();
    ++reached;
    for (SensorId v : g.adjacency[static_cast<std::size_t>(u)]) {
      const auto vi = static_cast<std::size_t>(v);
      if (in_set[vi] && !seen[vi]) {
        seen[vi] = true;
        stack.push_back(v);
      }
    }
  }
  return reached == s.size() ? Connectivity::kConnected : Connectivity::kDisconnected;
}

bool is_connected_subset(const CommGraph& g, const SensorSet& s) {
  return subset_connectivity(g, s) == Connectivity::kConnected;
}

int LocalGraph::local_of(SensorId s) const {
  auto it = index.find(s);
  if (it == index.end()) throw std::out_of_range("sensor not in local graph");
  return it->second;
}

std::vector<std::pair<int, int>> LocalGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t u = 0; u < adjacency.size(); ++u) {
    for (int v : adjacency[u]) {
      if (static_cast<int>(u) < v) out.emplace_back(static_cast<int>(u), v);
    }
  }
  return out;
}

LocalGraph induced_subgraph(const CommGraph& g, const std::vector<SensorId>& vertices) {
  LocalGraph lg;
  lg.vertices = vertices;
  lg.adjacency.assign(vertices.size(), {});
  for (std::size_t i = 0; i < vertices.size(); ++i) lg.index.emplace(vertices[i], static_cast<int>(i));
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (SensorId v : g.adjacency[static_cast<std::size_t>(vertices[i])]) {
      auto it = lg.index.find(v);
      if (it != lg.index.end()) lg.adjacency[i].push_back(it->second);
    }
    std::sort(lg.adjacency[i].begin(), lg.adjacency[i].end());
  }
  return lg;
}

LocalGraph make_local_graph(std::size_t n, const std::vector<std::pair<int, int>>& edges) {
  LocalGraph lg;
  lg.adjacency.assign(n, {});
  for (std::size_t i = 0; i < n; ++i) {
    lg.vertices.push_back(static_cast<SensorId>(i));
    lg.index.emplace(static_cast<SensorId>(i), static_cast<int>(i));
  }
  for (auto [u, v] : edges) {
    if (u == v) continue;
    lg.adjacency[static_cast<std::size_t>(u)].push_back(v);
    lg.adjacency[static_cast<std::size_t>(v)].push_back(u);
  }
  for (auto& nb : lg.adjacency) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  return lg;
}

std::string to_dot(const Instance& inst, const CommGraph& g) {
  std::ostringstream out;
  out.precision(17);
  out << "graph comm {\n";
  for (std::size_t s = 0; s < g.num_vertices; ++s) {
    const Point& p = inst.sensor(static_cast<SensorId>(s));
    out << "  " << s << " [pos=\"" << p.x << ',' << p.y << "!\"];\n";
  }
  for (auto [u, v] : g.edges) out << "  " << u << " -- " << v << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace conncover
