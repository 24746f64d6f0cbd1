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

#include "conncover/max_flow.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace conncover {

namespace {
constexpr double kResidualEps = 1e-12;
}

FlowNetwork::FlowNetwork(int num_nodes) : head_(static_cast<std::size_t>(num_nodes), -1) {}

int FlowNetwork::add_arc(int from, int to, double capacity) {
  if (from < 0 || to < 0 || from >= num_nodes() || to >= num_nodes()) throw std::out_of_range("flow node out of range");
  const int id = static_cast<int>(arcs_.size() / 2);
  arcs_.push_back({to, head_[static_cast<std::size_t>(from)], capacity, 0.0});
  head_[static_cast<std::size_t>(from)] = 2 * id;
  arcs_.push_back({from, head_[static_cast<std::size_t>(to)], 0.0, 0.0});
  head_[static_cast<std::size_t>(to)] = 2 * id + 1;
  return id;
}

bool FlowNetwork::build_levels(int source, int sink) {
  level_.assign(head_.size(), -1);
  std::queue<int> queue;
  level_[static_cast<std::size_t>(source)] = 0;
  queue.push(source);
  while (!queue.empty()) {
    const int u = queue.front();
    queue.pop();
    for (int e = head_[static_cast<std::size_t>(u)]; e != -1; e = arcs_[static_cast<std::size_t>(e)].next) {
      const ResidualArc& a = arcs_[static_cast<std::size_t>(e)];
      if (residual(a) > kResidualEps && level_[static_cast<std::size_t>(a.to)] < 0) {
        level_[static_cast<std::size_t>(a.to)] = level_[static_cast<std::size_t>(u)] + 1;
        queue.push(a.to);
      }
    }
  }
  return level_[static_cast<std::size_t>(sink)] >= 0;
}

double FlowNetwork::push(int node, int sink, double amount) {
  if (node == sink) return amount;
  for (int& e = cursor_[static_cast<std::size_t>(node)]; e != -1; e = arcs_[static_cast<std::size_t>(e)].next) {
    ResidualArc& a = arcs_[static_cast<std::size_t>(e)];
    if (residual(a) <= kResidualEps || level_[static_cast<std::size_t>(a.to)] != level_[static_cast<std::size_t>(node)] + 1) {
      continue;
    }
    const double pushed = push(a.to, sink, std::min(amount, residual(a)));
    if (pushed > 0.0) {
      a.flow += pushed;
      arcs_[static_cast<std::size_t>(e ^ 1)].flow -= pushed;
      return pushed;
    }
  }
  return 0.0;
}

double FlowNetwork::max_flow(int source, int sink, double limit) {
  double total = 0.0;
  // Stop once the remaining demand is below the residual threshold; a phase
  // that moves nothing would otherwise repeat forever.
  while (limit - total > kResidualEps && build_levels(source, sink)) {
    cursor_ = head_;
    double phase = 0.0;
    while (limit - total > kResidualEps) {
      const double pushed = push(source, sink, limit - total);
      if (pushed <= kResidualEps) break;
      total += pushed;
      phase += pushed;
    }
    if (phase <= kResidualEps) break;
  }
  return total;
}

std::vector<bool> FlowNetwork::source_side(int source) const {
  std::vector<bool> seen(head_.size(), false);
  std::vector<int> stack{source};
  seen[static_cast<std::size_t>(source)] = true;
  while (!stack.empty()) {
    const int u = stack.back();
    stack.pop_back();
    for (int e = head_[static_cast<std::size_t>(u)]; e != -1; e = arcs_[static_cast<std::size_t>(e)].next) {
      const ResidualArc& a = arcs_[static_cast<std::size_t>(e)];
      if (residual(a) > kResidualEps && !seen[static_cast<std::size_t>(a.to)]) {
        seen[static_cast<std::size_t>(a.to)] = true;
        stack.push_back(a.to);
      }
    }
  }
  return seen;
}

std::vector<bool> FlowNetwork::sink_side(int sink) const {
  // Walk residual arcs backwards: u reaches v when the arc u->v has residual.
  std::vector<bool> seen(head_.size(), false);
  std::vector<int> stack{sink};
  seen[static_cast<std::size_t>(sink)] = true;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int e = head_[static_cast<std::size_t>(v)]; e != -1; e = arcs_[static_cast<std::size_t>(e)].next) {
      const ResidualArc& back = arcs_[static_cast<std::size_t>(e ^ 1)];
      const int u = arcs_[static_cast<std::size_t>(e)].to;
      if (residual(back) > kResidualEps && !seen[static_cast<std::size_t>(u)]) {
        seen[static_cast<std::size_t>(u)] = true;
        stack.push_back(u);
      }
    }
  }
  return seen;
}

}  // namespace conncover
