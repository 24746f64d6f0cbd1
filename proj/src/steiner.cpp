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

#include "conncover/steiner.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace conncover {

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n), size_(n, 1) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int v) {
    while (parent_[static_cast<std::size_t>(v)] != v) {
      parent_[static_cast<std::size_t>(v)] = parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(v)])];
      v = parent_[static_cast<std::size_t>(v)];
    }
    return v;
  }
  int unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return a;
    if (size_[static_cast<std::size_t>(a)] < size_[static_cast<std::size_t>(b)]) std::swap(a, b);
    parent_[static_cast<std::size_t>(b)] = a;
    size_[static_cast<std::size_t>(a)] += size_[static_cast<std::size_t>(b)];
    return a;
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
};

}  // namespace

SteinerTree primal_dual_steiner(const LocalGraph& graph, const std::vector<int>& terminals) {
  SteinerTree tree;
  const std::size_t n = graph.size();
  std::vector<int> ter = terminals;
  std::sort(ter.begin(), ter.end());
  ter.erase(std::unique(ter.begin(), ter.end()), ter.end());
  for (int t : ter) {
    if (t < 0 || static_cast<std::size_t>(t) >= n) throw std::out_of_range("terminal out of range");
  }
  if (ter.size() <= 1) {
    tree.vertices = ter;
    return tree;
  }

  const std::vector<std::pair<int, int>> edges = graph.edges();
  DisjointSets sets(n);
  std::vector<int> terminal_count(n, 0);
  for (int t : ter) terminal_count[static_cast<std::size_t>(t)] = 1;
  const int total_terminals = static_cast<int>(ter.size());
  auto active = [&](int root) {
    const int c = terminal_count[static_cast<std::size_t>(root)];
    return c > 0 && c < total_terminals;
  };

  std::vector<double> load(edges.size(), 0.0);
  std::vector<std::size_t> chosen;
  while (true) {
    const int r0 = sets.find(ter.front());
    if (terminal_count[static_cast<std::size_t>(r0)] == total_terminals) break;

    double best_time = std::numeric_limits<double>::infinity();
    std::size_t best_edge = edges.size();
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const int cu = sets.find(edges[e].first);
      const int cv = sets.find(edges[e].second);
      if (cu == cv) continue;
      const int rate = (active(cu) ? 1 : 0) + (active(cv) ? 1 : 0);
      if (rate == 0) continue;
      const double t = (1.0 - load[e]) / rate;
      if (t < best_time) {
        best_time = t;
        best_edge = e;
      }
    }
    if (best_edge == edges.size()) {
      tree.feasible = false;
      return tree;
    }
    const double delta = std::max(best_time, 0.0);

    std::vector<int> roots;
    for (std::size_t v = 0; v < n; ++v) {
      if (sets.find(static_cast<int>(v)) == static_cast<int>(v) && active(static_cast<int>(v))) {
        roots.push_back(static_cast<int>(v));
      }
    }
    tree.dual_bound += delta * static_cast<double>(roots.size());
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const int cu = sets.find(edges[e].first);
      const int cv = sets.find(edges[e].second);
      if (cu == cv) continue;
      load[e] += delta * ((active(cu) ? 1 : 0) + (active(cv) ? 1 : 0));
    }
    const int cu = sets.find(edges[best_edge].first);
    const int cv = sets.find(edges[best_edge].second);
    const int merged = sets.unite(cu, cv);
    terminal_count[static_cast<std::size_t>(merged)] =
        terminal_count[static_cast<std::size_t>(cu)] + terminal_count[static_cast<std::size_t>(cv)];
    chosen.push_back(best_edge);
  }

  // Keep the tree holding the terminals, then strip non-terminal leaves.
  std::vector<std::vector<std::size_t>> incident(n);
  std::vector<bool> alive(edges.size(), false);
  const int home = sets.find(ter.front());
  for (std::size_t e : chosen) {
    if (sets.find(edges[e].first) != home) continue;
    alive[e] = true;
    incident[static_cast<std::size_t>(edges[e].first)].push_back(e);
    incident[static_cast<std::size_t>(edges[e].second)].push_back(e);
  }
  std::vector<int> degree(n, 0);
  for (std::size_t v = 0; v < n; ++v) degree[v] = static_cast<int>(incident[v].size());
  std::vector<bool> is_terminal(n, false);
  for (int t : ter) is_terminal[static_cast<std::size_t>(t)] = true;
  std::vector<int> leaves;
  for (std::size_t v = 0; v < n; ++v) {
    if (degree[v] == 1 && !is_terminal[v]) leaves.push_back(static_cast<int>(v));
  }
  while (!leaves.empty()) {
    const int v = leaves.back();
    leaves.pop_back();
    for (std::size_t e : incident[static_cast<std::size_t>(v)]) {
      if (!alive[e]) continue;
      alive[e] = false;
      const int w = edges[e].first == v ? edges[e].second : edges[e].first;
      --degree[static_cast<std::size_t>(v)];
      if (--degree[static_cast<std::size_t>(w)] == 1 && !is_terminal[static_cast<std::size_t>(w)]) leaves.push_back(w);
    }
  }
  std::vector<bool> used(n, false);
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (!alive[e]) continue;
    tree.edges.push_back(edges[e]);
    used[static_cast<std::size_t>(edges[e].first)] = true;
    used[static_cast<std::size_t>(edges[e].second)] = true;
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (used[v]) tree.vertices.push_back(static_cast<int>(v));
  }
  return tree;
}

}  // namespace conncover
