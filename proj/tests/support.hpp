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

// Independent brute-force helpers for tests. Nothing here calls into the
// solver code paths beyond Instance accessors.

#ifndef CONNCOVER_TESTS_SUPPORT_HPP_
#define CONNCOVER_TESTS_SUPPORT_HPP_

#include <cstdint>
#include <fstream>
#include <queue>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "conncover/instance.hpp"

namespace conncover::testing {

inline std::string data_path(const std::string& name) { return std::string(CONNCOVER_TEST_DATA_DIR) + "/" + name; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline bool close_enough(const Point& a, const Point& b, double radius, double unit) {
  const double dx = a.x - b.x;
  const double dy = a.y - b.y;
  return dx * dx + dy * dy <= radius * radius + geometric_tolerance() * unit * unit;
}

// All-pairs distance scan.
inline std::vector<std::vector<bool>> adjacency_matrix(const Instance& inst) {
  const std::size_t n = inst.num_sensors();
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = 0; v < n; ++v) {
      if (u != v) adj[u][v] = close_enough(inst.sensors()[u], inst.sensors()[v], inst.rc(), inst.rc());
    }
  }
  return adj;
}

inline std::vector<std::vector<bool>> cover_matrix(const Instance& inst) {
  std::vector<std::vector<bool>> cov(inst.num_sensors(), std::vector<bool>(inst.num_targets(), false));
  for (std::size_t s = 0; s < inst.num_sensors(); ++s) {
    for (std::size_t t = 0; t < inst.num_targets(); ++t) {
      cov[s][t] = close_enough(inst.sensors()[s], inst.targets()[t], inst.rs(), inst.rc());
    }
  }
  return cov;
}

// Floyd-Warshall transitive closure.
inline std::vector<std::vector<bool>> reachability(std::vector<std::vector<bool>> r) {
  const std::size_t n = r.size();
  for (std::size_t i = 0; i < n; ++i) r[i][i] = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      if (!r[i][k]) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (r[k][j]) r[i][j] = true;
      }
    }
  }
  return r;
}

// BFS restricted to `members` (a mask over vertices).
inline bool connected_within(const std::vector<std::vector<bool>>& adj, const std::vector<bool>& members) {
  const std::size_t n = adj.size();
  std::size_t start = n;
  std::size_t count = 0;
  for (std::size_t v = 0; v < n; ++v) {
    if (members[v]) {
      ++count;
      if (start == n) start = v;
    }
  }
  if (count == 0) return false;
  std::vector<bool> seen(n, false);
  std::queue<std::size_t> q;
  q.push(start);
  seen[start] = true;
  std::size_t reached = 0;
  while (!q.empty()) {
    const std::size_t u = q.front();
    q.pop();
    ++reached;
    for (std::size_t v = 0; v < n; ++v) {
      if (members[v] && !seen[v] && adj[u][v]) {
        seen[v] = true;
        q.push(v);
      }
    }
  }
  return reached == count;
}

inline std::vector<std::vector<bool>> matrix_from_lists(const std::vector<std::vector<int>>& adjacency) {
  std::vector<std::vector<bool>> adj(adjacency.size(), std::vector<bool>(adjacency.size(), false));
  for (std::size_t u = 0; u < adjacency.size(); ++u) {
    for (int v : adjacency[u]) adj[u][static_cast<std::size_t>(v)] = true;
  }
  return adj;
}

// Random tree on n vertices by attaching each vertex to an earlier one.
inline std::vector<std::pair<int, int>> random_tree_edges(int n, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> edges;
  for (int v = 1; v < n; ++v) {
    const int parent = static_cast<int>(rng() % static_cast<std::uint64_t>(v));
    edges.emplace_back(parent, v);
  }
  return edges;
}

// Random connected graph: a random tree plus extra edges with probability p.
inline std::vector<std::vector<int>> random_connected_graph(int n, double p, std::mt19937_64& rng) {
  std::vector<std::vector<bool>> adj(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
  for (const auto& [u, v] : random_tree_edges(n, rng)) {
    adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
  }
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng) < p) adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = adj[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
    }
  }
  std::vector<std::vector<int>> lists(static_cast<std::size_t>(n));
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (adj[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)]) lists[static_cast<std::size_t>(u)].push_back(v);
    }
  }
  return lists;
}

}  // namespace conncover::testing

#endif  // CONNCOVER_TESTS_SUPPORT_HPP_
