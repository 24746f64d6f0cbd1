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

#include "conncover/tree_tools.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>

namespace conncover {

namespace {

// Tree re-indexed to 0..n-1 positions of `vertices`.
struct Indexed {
  std::vector<std::vector<int>> adj;

  explicit Indexed(const Tree& t) : adj(t.vertices.size()) {
    for (const auto& [u, v] : t.edges) {
      const int iu = position(t, u);
      const int iv = position(t, v);
      adj[static_cast<std::size_t>(iu)].push_back(iv);
      adj[static_cast<std::size_t>(iv)].push_back(iu);
    }
    for (auto& list : adj) std::sort(list.begin(), list.end());
  }

  static int position(const Tree& t, int label) {
    auto it = std::lower_bound(t.vertices.begin(), t.vertices.end(), label);
    if (it == t.vertices.end() || *it != label) throw std::invalid_argument("tree edge endpoint is not a tree vertex");
    return static_cast<int>(it - t.vertices.begin());
  }
};

// Parent array and a preorder from `root`.
void root_at(const Indexed& g, int root, std::vector<int>& parent, std::vector<int>& order) {
  parent.assign(g.adj.size(), -1);
  order.clear();
  std::vector<int> stack{root};
  parent[static_cast<std::size_t>(root)] = root;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    order.push_back(v);
    for (auto it = g.adj[static_cast<std::size_t>(v)].rbegin(); it != g.adj[static_cast<std::size_t>(v)].rend(); ++it) {
      if (parent[static_cast<std::size_t>(*it)] == -1) {
        parent[static_cast<std::size_t>(*it)] = v;
        stack.push_back(*it);
      }
    }
  }
}

Tree tree_from_edges(const Tree& host, const std::vector<std::pair<int, int>>& edges) {
  Tree t;
  for (const auto& [u, v] : edges) {
    const int a = host.vertices[static_cast<std::size_t>(u)];
    const int b = host.vertices[static_cast<std::size_t>(v)];
    t.edges.emplace_back(std::min(a, b), std::max(a, b));
    t.vertices.push_back(a);
    t.vertices.push_back(b);
  }
  std::sort(t.vertices.begin(), t.vertices.end());
  t.vertices.erase(std::unique(t.vertices.begin(), t.vertices.end()), t.vertices.end());
  std::sort(t.edges.begin(), t.edges.end());
  return t;
}

using EdgeGroup = std::vector<std::pair<int, int>>;

// Edge pieces of at most `cap` edges, packed bottom-up from `root`.
std::vector<EdgeGroup> pack_from(const Indexed& g, int root, std::size_t cap) {
  std::vector<int> parent;
  std::vector<int> order;
  root_at(g, root, parent, order);
  std::vector<EdgeGroup> open(g.adj.size());
  std::vector<EdgeGroup> closed;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const int v = *it;
    std::vector<EdgeGroup> branches;
    for (int c : g.adj[static_cast<std::size_t>(v)]) {
      if (c == parent[static_cast<std::size_t>(v)] || parent[static_cast<std::size_t>(c)] != v) continue;
      EdgeGroup group = std::move(open[static_cast<std::size_t>(c)]);
      group.emplace_back(v, c);
      branches.push_back(std::move(group));
    }
    std::stable_sort(branches.begin(), branches.end(),
                     [](const EdgeGroup& x, const EdgeGroup& y) { return x.size() > y.size(); });
    std::vector<EdgeGroup> bins;
    for (EdgeGroup& b : branches) {
      auto fit = std::find_if(bins.begin(), bins.end(), [&](const EdgeGroup& bin) { return bin.size() + b.size() <= cap; });
      if (fit == bins.end()) {
        bins.push_back(std::move(b));
      } else {
        fit->insert(fit->end(), b.begin(), b.end());
      }
    }
    std::ptrdiff_t pass = -1;
    if (v != root) {
      for (std::size_t i = 0; i < bins.size(); ++i) {
        if (bins[i].size() + 1 <= cap && (pass < 0 || bins[i].size() < bins[static_cast<std::size_t>(pass)].size())) {
          pass = static_cast<std::ptrdiff_t>(i);
        }
      }
    }
    for (std::size_t i = 0; i < bins.size(); ++i) {
      if (static_cast<std::ptrdiff_t>(i) == pass) {
        open[static_cast<std::size_t>(v)] = std::move(bins[i]);
      } else {
        closed.push_back(std::move(bins[i]));
      }
    }
  }
  return closed;
}

}  // namespace

bool Tree::is_tree() const {
  if (vertices.empty()) return edges.empty();
  if (edges.size() + 1 != vertices.size()) return false;
  if (!std::is_sorted(vertices.begin(), vertices.end()) ||
      std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end()) {
    return false;
  }
  std::vector<std::size_t> parent(vertices.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [u, v] : edges) {
    auto iu = std::lower_bound(vertices.begin(), vertices.end(), u);
    auto iv = std::lower_bound(vertices.begin(), vertices.end(), v);
    if (iu == vertices.end() || *iu != u || iv == vertices.end() || *iv != v) return false;
    const std::size_t a = find(static_cast<std::size_t>(iu - vertices.begin()));
    const std::size_t b = find(static_cast<std::size_t>(iv - vertices.begin()));
    if (a == b) return false;
    parent[a] = b;
  }
  return true;
}

Tree spanning_tree(const std::vector<std::vector<int>>& adjacency, std::vector<int> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  Tree t;
  t.vertices = vertices;
  if (vertices.empty()) return t;
  std::map<int, bool> seen;
  for (int v : vertices) seen[v] = false;
  std::queue<int> queue;
  queue.push(vertices.front());
  seen[vertices.front()] = true;
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    for (int w : adjacency[static_cast<std::size_t>(u)]) {
      auto it = seen.find(w);
      if (it == seen.end() || it->second) continue;
      it->second = true;
      t.edges.emplace_back(std::min(u, w), std::max(u, w));
      queue.push(w);
    }
  }
  if (t.edges.size() + 1 != vertices.size()) throw std::invalid_argument("vertex set is not connected");
  std::sort(t.edges.begin(), t.edges.end());
  return t;
}

std::vector<Tree> decompose_tree(const Tree& tree, std::size_t max_size) {
  if (max_size == 0) throw std::invalid_argument("piece size must be positive");
  if (tree.size() <= max_size) return {tree};
  if (max_size == 1) {
    std::vector<Tree> pieces;
    for (int v : tree.vertices) pieces.push_back(Tree{{v}, {}});
    return pieces;
  }
  const Indexed g(tree);
  std::vector<EdgeGroup> best;
  for (int root = 0; root < static_cast<int>(tree.size()); ++root) {
    std::vector<EdgeGroup> pieces = pack_from(g, root, max_size - 1);
    if (best.empty() || pieces.size() < best.size()) best = std::move(pieces);
  }
  std::vector<Tree> out;
  out.reserve(best.size());
  for (const EdgeGroup& group : best) out.push_back(tree_from_edges(tree, group));
  std::sort(out.begin(), out.end(), [](const Tree& a, const Tree& b) { return a.vertices < b.vertices; });
  return out;
}

Tree best_subtree(const Tree& tree, const std::vector<std::int64_t>& profit, std::size_t max_size) {
  if (tree.size() <= max_size) return tree;
  if (max_size == 0) return {};
  constexpr std::int64_t kNone = std::numeric_limits<std::int64_t>::min() / 4;
  const Indexed g(tree);
  const std::size_t n = tree.size();
  std::vector<int> parent;
  std::vector<int> order;
  root_at(g, 0, parent, order);

  // dp[v][s]: best profit of a subtree topped at v with exactly s vertices.
  // take[v][i][s]: vertices given to the i-th child when the first i+1
  // children are merged into a total of s.
  std::vector<std::vector<std::int64_t>> dp(n);
  std::vector<std::vector<std::vector<std::size_t>>> take(n);
  std::vector<std::vector<int>> children(n);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto v = static_cast<std::size_t>(*it);
    std::vector<std::int64_t> cur(2, kNone);
    cur[1] = profit[static_cast<std::size_t>(tree.vertices[v])];
    for (int c : g.adj[v]) {
      if (c == parent[v] || parent[static_cast<std::size_t>(c)] != static_cast<int>(v)) continue;
      children[v].push_back(c);
      const auto& child = dp[static_cast<std::size_t>(c)];
      const std::size_t limit = std::min(max_size, cur.size() - 1 + child.size() - 1);
      std::vector<std::int64_t> next(limit + 1, kNone);
      std::vector<std::size_t> choice(limit + 1, 0);
      for (std::size_t s1 = 1; s1 < cur.size(); ++s1) {
        if (cur[s1] == kNone) continue;
        for (std::size_t s2 = 0; s2 < child.size() && s1 + s2 <= limit; ++s2) {
          const std::int64_t add = s2 == 0 ? 0 : child[s2];
          if (add == kNone) continue;
          if (cur[s1] + add > next[s1 + s2]) {
            next[s1 + s2] = cur[s1] + add;
            choice[s1 + s2] = s2;
          }
        }
      }
      cur = std::move(next);
      take[v].push_back(std::move(choice));
    }
    dp[v] = std::move(cur);
  }

  std::size_t best_v = 0;
  std::size_t best_s = 0;
  std::int64_t best_p = kNone;
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t s = 1; s < dp[v].size(); ++s) {
      if (dp[v][s] == kNone) continue;
      if (dp[v][s] > best_p || (dp[v][s] == best_p && s > best_s)) {
        best_p = dp[v][s];
        best_v = v;
        best_s = s;
      }
    }
  }

  std::vector<int> chosen;
  std::vector<std::pair<std::size_t, std::size_t>> stack{{best_v, best_s}};
  while (!stack.empty()) {
    auto [v, s] = stack.back();
    stack.pop_back();
    chosen.push_back(static_cast<int>(v));
    for (std::size_t i = children[v].size(); i-- > 0;) {
      const std::size_t s2 = take[v][i][s];
      if (s2 > 0) stack.emplace_back(static_cast<std::size_t>(children[v][i]), s2);
      s -= s2;
    }
  }
  std::vector<bool> in(n, false);
  for (int v : chosen) in[static_cast<std::size_t>(v)] = true;
  Tree out;
  for (int v : chosen) out.vertices.push_back(tree.vertices[static_cast<std::size_t>(v)]);
  std::sort(out.vertices.begin(), out.vertices.end());
  for (const auto& [u, w] : tree.edges) {
    if (in[static_cast<std::size_t>(Indexed::position(tree, u))] && in[static_cast<std::size_t>(Indexed::position(tree, w))]) {
      out.edges.emplace_back(u, w);
    }
  }
  return out;
}

std::int64_t tree_profit(const Tree& tree, const std::vector<std::int64_t>& profit) {
  std::int64_t total = 0;
  for (int v : tree.vertices) total += profit[static_cast<std::size_t>(v)];
  return total;
}

}  // namespace conncover
