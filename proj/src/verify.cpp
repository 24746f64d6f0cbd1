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

#include "conncover/verify.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>

namespace conncover {

namespace {

bool ids_in_range(const Instance& inst, const SensorSet& sensors, std::string& reason) {
  for (SensorId s : sensors) {
    if (s < 0 || static_cast<std::size_t>(s) >= inst.num_sensors()) {
      reason = "sensor id out of range: " + std::to_string(s);
      return false;
    }
  }
  return true;
}

bool connected(const Instance& inst, const std::vector<SensorId>& ids) {
  if (ids.empty()) return true;
  std::vector<bool> seen(ids.size(), false);
  std::queue<std::size_t> queue;
  queue.push(0);
  seen[0] = true;
  std::size_t reached = 1;
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop();
    for (std::size_t j = 0; j < ids.size(); ++j) {
      if (!seen[j] && inst.communicates(ids[i], ids[j])) {
        seen[j] = true;
        ++reached;
        queue.push(j);
      }
    }
  }
  return reached == ids.size();
}

}  // namespace

Verdict verify_min_csc(const Instance& inst, const SensorSet& sensors) {
  Verdict v;
  if (!ids_in_range(inst, sensors, v.reason)) return v;
  for (std::size_t t = 0; t < inst.num_targets(); ++t) {
    const bool hit = std::any_of(sensors.begin(), sensors.end(),
                                 [&](SensorId s) { return inst.covers(s, static_cast<TargetId>(t)); });
    if (hit) {
      ++v.covered;
    } else {
      v.uncovered.push_back(static_cast<TargetId>(t));
    }
  }
  if (!v.uncovered.empty()) {
    std::ostringstream msg;
    msg << v.uncovered.size() << " target(s) uncovered, first " << v.uncovered.front();
    v.reason = msg.str();
    return v;
  }
  if (!connected(inst, sensors.ids())) {
    v.reason = "sensors do not induce a connected subgraph";
    return v;
  }
  v.feasible = true;
  return v;
}

Verdict verify_budgeted(const Instance& inst, const SensorSet& sensors, std::size_t budget,
                        const std::vector<std::pair<SensorId, SensorId>>& tree_edges) {
  Verdict v;
  if (!ids_in_range(inst, sensors, v.reason)) return v;
  v.covered = coverage(inst, sensors).size();
  if (sensors.size() > budget) {
    v.reason = "solution has " + std::to_string(sensors.size()) + " sensors, budget " + std::to_string(budget);
    return v;
  }
  if (!connected(inst, sensors.ids())) {
    v.reason = "sensors do not induce a connected subgraph";
    return v;
  }
  if (!tree_edges.empty()) {
    if (tree_edges.size() + 1 != sensors.size()) {
      v.reason = "tree edge count does not match a spanning tree";
      return v;
    }
    // Union-find over positions in the sorted id list.
    std::vector<std::size_t> parent(sensors.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    const auto& ids = sensors.ids();
    for (const auto& [a, b] : tree_edges) {
      if (!sensors.contains(a) || !sensors.contains(b)) {
        v.reason = "tree edge leaves the solution set";
        return v;
      }
      if (!inst.communicates(a, b)) {
        v.reason = "tree edge is not a communication edge";
        return v;
      }
      const auto ia = static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), a) - ids.begin());
      const auto ib = static_cast<std::size_t>(std::lower_bound(ids.begin(), ids.end(), b) - ids.begin());
      const std::size_t ra = find(ia);
      const std::size_t rb = find(ib);
      if (ra == rb) {
        v.reason = "tree edges contain a cycle";
        return v;
      }
      parent[ra] = rb;
    }
  }
  v.feasible = true;
  return v;
}

}  // namespace conncover
