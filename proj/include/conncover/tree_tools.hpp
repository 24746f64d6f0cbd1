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

#ifndef CONNCOVER_TREE_TOOLS_HPP_
#define CONNCOVER_TREE_TOOLS_HPP_

#include <cstdint>
#include <utility>
#include <vector>

namespace conncover {

// A tree over integer vertex labels. `vertices` is ascending; `edges` hold
// (u, v) with u < v.
struct Tree {
  std::vector<int> vertices;
  std::vector<std::pair<int, int>> edges;

  std::size_t size() const { return vertices.size(); }
  bool is_tree() const;
};

// Spanning BFS tree of `vertices` inside the graph given by adjacency lists
// over labels; edges are discovered from the smallest vertex outward.
Tree spanning_tree(const std::vector<std::vector<int>>& adjacency, std::vector<int> vertices);

// Splits `tree` into subtrees of at most `max_size` vertices that together
// cover every vertex; subtrees may share a vertex where they meet. Pieces are
// built bottom-up by packing child branches at each vertex, trying every
// root and keeping the fewest pieces.
std::vector<Tree> decompose_tree(const Tree& tree, std::size_t max_size);

// Connected subtree of `tree` with at most `max_size` vertices maximizing the
// sum of `profit` (indexed by label); ties prefer more vertices. Returns the
// whole tree when it already fits.
Tree best_subtree(const Tree& tree, const std::vector<std::int64_t>& profit, std::size_t max_size);

std::int64_t tree_profit(const Tree& tree, const std::vector<std::int64_t>& profit);

}  // namespace conncover

#endif  // CONNCOVER_TREE_TOOLS_HPP_
