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

#include "conncover/oracle.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <limits>
#include <queue>
#include <string>

namespace conncover::oracle {

namespace {

using Mask = std::uint32_t;

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double millis() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

void guard(std::size_t size, std::size_t limit, const char* what) {
  if (size > limit) {
    throw GuardExceeded(std::string(what) + " oracle refuses " + std::to_string(size) + " > " +
                        std::to_string(limit) + "; shrink the instance or use the approximation pipeline");
  }
}

bool mask_connected(Mask mask, const std::vector<Mask>& adj) {
  if (mask == 0U) return true;
  Mask seen = mask & (~mask + 1U);
  Mask frontier = seen;
  while (frontier != 0U) {
    Mask next = 0U;
    for (Mask f = frontier; f != 0U; f &= f - 1) next |= adj[static_cast<std::size_t>(std::countr_zero(f))];
    next &= mask & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen == mask;
}

std::vector<int> bits(Mask mask) {
  std::vector<int> out;
  for (; mask != 0U; mask &= mask - 1) out.push_back(std::countr_zero(mask));
  return out;
}

// Next mask with the same popcount (Gosper).
Mask next_combination(Mask x) {
  const Mask c = x & (~x + 1U);
  const Mask r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

std::vector<std::pair<int, int>> bfs_tree(Mask mask, const std::vector<Mask>& adj) {
  std::vector<std::pair<int, int>> edges;
  if (mask == 0U) return edges;
  const int start = std::countr_zero(mask);
  Mask seen = Mask{1} << start;
  std::queue<int> queue;
  queue.push(start);
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    for (Mask nb = adj[static_cast<std::size_t>(u)] & mask & ~seen; nb != 0U; nb &= nb - 1) {
      const int w = std::countr_zero(nb);
      seen |= Mask{1} << w;
      edges.emplace_back(std::min(u, w), std::max(u, w));
      queue.push(w);
    }
  }
  std::sort(edges.begin(), edges.end());
  return edges;
}

}  // namespace

Result exact_min_csc(const Instance& inst, const MinCscQuery& query) {
  Stopwatch clock;
  std::vector<SensorId> pool = query.within;
  if (pool.empty()) {
    for (std::size_t s = 0; s < inst.num_sensors(); ++s) pool.push_back(static_cast<SensorId>(s));
  }
  std::sort(pool.begin(), pool.end());
  guard(pool.size(), kMinCscLimit, "min-csc");
  const std::size_t n = pool.size();
  std::vector<Mask> adj(n, 0U);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && inst.communicates(pool[i], pool[j])) adj[i] |= Mask{1} << j;
    }
  }
  std::vector<Mask> cover(inst.num_targets(), 0U);
  for (std::size_t t = 0; t < inst.num_targets(); ++t) {
    for (std::size_t i = 0; i < n; ++i) {
      if (inst.covers(pool[i], static_cast<TargetId>(t))) cover[t] |= Mask{1} << i;
    }
  }
  Mask required = 0U;
  if (query.must_contain) {
    const auto it = std::find(pool.begin(), pool.end(), *query.must_contain);
    if (it == pool.end()) {
      Result none;
      none.millis = clock.millis();
      return none;
    }
    required = Mask{1} << (it - pool.begin());
  }

  Result out;
  if (std::any_of(cover.begin(), cover.end(), [](Mask c) { return c == 0U; })) {
    out.millis = clock.millis();
    return out;
  }
  auto accepts = [&](Mask m) {
    ++out.explored;
    if ((m & required) != required) return false;
    for (Mask c : cover) {
      if ((c & m) == 0U) return false;
    }
    return mask_connected(m, adj);
  };
  const std::size_t start = (inst.num_targets() == 0 && required == 0U) ? 0 : 1;
  for (std::size_t size = start; size <= n; ++size) {
    const Mask end = size == 0 ? 1U : Mask{1} << n;
    for (Mask m = size == 0 ? 0U : (Mask{1} << size) - 1U; m < end; m = next_combination(m)) {
      if (accepts(m)) {
        out.feasible = true;
        out.value = static_cast<std::int64_t>(size);
        for (int i : bits(m)) out.witness.push_back(pool[static_cast<std::size_t>(i)]);
        for (const auto& [u, v] : bfs_tree(m, adj)) {
          out.edges.emplace_back(pool[static_cast<std::size_t>(u)], pool[static_cast<std::size_t>(v)]);
        }
        out.millis = clock.millis();
        return out;
      }
      if (size == 0) break;
    }
  }
  out.millis = clock.millis();
  return out;
}

Result exact_budgeted(const Instance& inst, std::size_t budget) {
  Stopwatch clock;
  const std::size_t n = inst.num_sensors();
  guard(n, kBudgetedLimit, "budgeted");
  Result out;
  out.feasible = true;
  std::vector<Mask> adj(n, 0U);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j && inst.communicates(static_cast<SensorId>(i), static_cast<SensorId>(j))) adj[i] |= Mask{1} << j;
    }
  }
  const std::size_t words = (inst.num_targets() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> reach(n, std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t t = 0; t < inst.num_targets(); ++t) {
      if (inst.covers(static_cast<SensorId>(i), static_cast<TargetId>(t))) reach[i][t / 64] |= std::uint64_t{1} << (t % 64);
    }
  }
  Mask best = 0U;
  std::vector<std::uint64_t> acc(words);
  for (Mask m = 1; m < (Mask{1} << n); ++m) {
    if (static_cast<std::size_t>(std::popcount(m)) > budget) continue;
    ++out.explored;
    if (!mask_connected(m, adj)) continue;
    std::fill(acc.begin(), acc.end(), 0);
    for (int i : bits(m)) {
      for (std::size_t w = 0; w < words; ++w) acc[w] |= reach[static_cast<std::size_t>(i)][w];
    }
    std::int64_t covered = 0;
    for (std::uint64_t w : acc) covered += std::popcount(w);
    if (covered > out.value) {
      out.value = covered;
      best = m;
    }
  }
  out.witness = bits(best);
  out.edges = bfs_tree(best, adj);
  out.millis = clock.millis();
  return out;
}

Result exact_max_cov(const std::vector<std::vector<int>>& sets, std::size_t budget) {
  Stopwatch clock;
  guard(sets.size(), kMaxCovLimit, "max-coverage");
  Result out;
  out.feasible = true;
  Mask best = 0U;
  std::vector<int> merged;
  for (Mask m = 1; m < (Mask{1} << sets.size()); ++m) {
    if (static_cast<std::size_t>(std::popcount(m)) > budget) continue;
    ++out.explored;
    merged.clear();
    for (int i : bits(m)) merged.insert(merged.end(), sets[static_cast<std::size_t>(i)].begin(), sets[static_cast<std::size_t>(i)].end());
    std::sort(merged.begin(), merged.end());
    const auto value = static_cast<std::int64_t>(std::unique(merged.begin(), merged.end()) - merged.begin());
    if (value > out.value) {
      out.value = value;
      best = m;
    }
  }
  out.witness = bits(best);
  out.millis = clock.millis();
  return out;
}

Result exact_steiner(const std::vector<std::vector<int>>& adjacency, const std::vector<int>& terminals_in) {
  Stopwatch clock;
  std::vector<int> terminals = terminals_in;
  std::sort(terminals.begin(), terminals.end());
  terminals.erase(std::unique(terminals.begin(), terminals.end()), terminals.end());
  guard(terminals.size(), kSteinerTerminalLimit, "steiner");
  Result out;
  if (terminals.empty()) {
    out.feasible = true;
    return out;
  }
  const std::size_t n = adjacency.size();
  constexpr int kFar = std::numeric_limits<int>::max() / 4;
  std::vector<std::vector<int>> dist(n, std::vector<int>(n, kFar));
  std::vector<std::vector<int>> via(n, std::vector<int>(n, -1));  // predecessor on a shortest path from s
  for (std::size_t s = 0; s < n; ++s) {
    dist[s][s] = 0;
    std::queue<int> queue;
    queue.push(static_cast<int>(s));
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop();
      for (int w : adjacency[static_cast<std::size_t>(u)]) {
        if (dist[s][static_cast<std::size_t>(w)] != kFar) continue;
        dist[s][static_cast<std::size_t>(w)] = dist[s][static_cast<std::size_t>(u)] + 1;
        via[s][static_cast<std::size_t>(w)] = u;
        queue.push(w);
      }
    }
  }
  for (int t : terminals) {
    if (dist[static_cast<std::size_t>(terminals.front())][static_cast<std::size_t>(t)] == kFar) {
      out.millis = clock.millis();
      return out;
    }
  }
  const std::size_t k = terminals.size();
  const std::size_t full = (std::size_t{1} << k) - 1;
  // cost[S][v]: cheapest tree spanning terminals S plus v. Back-pointers hold
  // either a split (sub-mask, same v) or a shortest-path hop to u.
  std::vector<std::vector<int>> cost(full + 1, std::vector<int>(n, kFar));
  std::vector<std::vector<std::pair<int, int>>> back(full + 1, std::vector<std::pair<int, int>>(n, {0, -1}));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t v = 0; v < n; ++v) {
      cost[std::size_t{1} << i][v] = dist[static_cast<std::size_t>(terminals[i])][v];
      back[std::size_t{1} << i][v] = {-1, terminals[i]};
    }
  }
  for (std::size_t s = 1; s <= full; ++s) {
    if (std::popcount(s) < 2) continue;
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t sub = (s - 1) & s; sub > 0; sub = (sub - 1) & s) {
        if (sub < (s ^ sub)) continue;
        const int c = cost[sub][v] + cost[s ^ sub][v];
        ++out.explored;
        if (c < cost[s][v]) {
          cost[s][v] = c;
          back[s][v] = {static_cast<int>(sub), static_cast<int>(v)};
        }
      }
    }
    for (std::size_t v = 0; v < n; ++v) {
      for (std::size_t u = 0; u < n; ++u) {
        if (dist[u][v] == kFar) continue;
        const int c = cost[s][u] + dist[u][v];
        if (c < cost[s][v]) {
          cost[s][v] = c;
          back[s][v] = {-2, static_cast<int>(u)};
        }
      }
    }
  }
  const auto root = static_cast<std::size_t>(terminals.front());
  out.feasible = true;
  out.value = cost[full][root];

  std::vector<std::pair<int, int>> edges;
  auto add_path = [&](int from, int to) {
    for (int w = to; w != from; w = via[static_cast<std::size_t>(from)][static_cast<std::size_t>(w)]) {
      const int p = via[static_cast<std::size_t>(from)][static_cast<std::size_t>(w)];
      edges.emplace_back(std::min(p, w), std::max(p, w));
    }
  };
  std::vector<std::pair<std::size_t, std::size_t>> stack{{full, root}};
  while (!stack.empty()) {
    const auto [s, v] = stack.back();
    stack.pop_back();
    const auto [kind, arg] = back[s][v];
    if (kind == -1) {
      add_path(arg, static_cast<int>(v));
    } else if (kind == -2) {
      add_path(arg, static_cast<int>(v));
      stack.emplace_back(s, static_cast<std::size_t>(arg));
    } else if (kind > 0) {
      stack.emplace_back(static_cast<std::size_t>(kind), v);
      stack.emplace_back(s ^ static_cast<std::size_t>(kind), v);
    }
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  out.edges = edges;
  std::vector<int> vertices(terminals);
  for (const auto& [u, v] : edges) {
    vertices.push_back(u);
    vertices.push_back(v);
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
  out.witness = vertices;
  out.millis = clock.millis();
  return out;
}

Result exact_qst(const std::vector<std::vector<int>>& adjacency, const std::vector<std::int64_t>& profit,
                 std::int64_t quota) {
  Stopwatch clock;
  const std::size_t n = adjacency.size();
  guard(n, kQstLimit, "quota steiner");
  Result out;
  if (quota <= 0) {
    out.feasible = true;
    return out;
  }
  std::vector<Mask> adj(n, 0U);
  for (std::size_t v = 0; v < n; ++v) {
    for (int w : adjacency[v]) adj[v] |= Mask{1} << w;
  }
  Mask best = 0U;
  int best_size = std::numeric_limits<int>::max();
  for (Mask m = 1; m < (Mask{1} << n); ++m) {
    const int size = std::popcount(m);
    if (size >= best_size) continue;
    ++out.explored;
    std::int64_t total = 0;
    for (int v : bits(m)) total += profit[static_cast<std::size_t>(v)];
    if (total < quota || !mask_connected(m, adj)) continue;
    best = m;
    best_size = size;
  }
  if (best != 0U) {
    out.feasible = true;
    out.value = best_size - 1;
    out.witness = bits(best);
    out.edges = bfs_tree(best, adj);
  }
  out.millis = clock.millis();
  return out;
}

}  // namespace conncover::oracle
