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

#include "conncover/grid.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <stdexcept>

#include "conncover/comm_graph.hpp"

namespace conncover {
namespace {

TEST(Grid, CellOfOrigin) { EXPECT_EQ(cell_of({0.0, 0.0}), (CellId{0, 0})); }

TEST(Grid, CellSideBoundary) {
  // Rows follow y, columns follow x.
  EXPECT_EQ(cell_of({0.70, 0.0}), (CellId{0, 0}));
  EXPECT_EQ(cell_of({0.71, 0.0}), (CellId{0, 1}));
  EXPECT_EQ(cell_of({0.0, 0.71}), (CellId{1, 0}));
  EXPECT_EQ(cell_of({-0.01, -0.01}), (CellId{-1, -1}));
}

TEST(Grid, SameCellMeansAdjacent) {
  Instance inst = generate(60, 0, 1.0, 1.0, 3.0, 4);
  CommGraph g = build_comm_graph(inst);
  for (std::size_t u = 0; u < inst.num_sensors(); ++u) {
    for (std::size_t v = u + 1; v < inst.num_sensors(); ++v) {
      if (cell_of(inst.sensors()[u]) == cell_of(inst.sensors()[v])) {
        EXPECT_TRUE(g.adjacent(static_cast<SensorId>(u), static_cast<SensorId>(v)));
      }
    }
  }
}

TEST(Grid, GroupModulus) {
  EXPECT_EQ(group_modulus(1.0), 4);
  EXPECT_EQ(group_modulus(0.5), 3);
  EXPECT_EQ(group_modulus(2.0), 7);
  EXPECT_THROW(group_modulus(0.0), std::invalid_argument);
}

TEST(Grid, GroupModulusMatchesFormula) {
  for (double c : {0.1, 0.3, 0.77, 1.3, 2.5, 4.0}) {
    EXPECT_EQ(group_modulus(c), static_cast<int>(std::ceil(2.0 * c / (std::sqrt(2.0) / 2.0) + 1.0))) << c;
  }
}

TEST(Grid, GroupOf) {
  EXPECT_EQ(group_of({0, 0}, 4), (CellGroupId{0, 0, 4}));
  EXPECT_EQ(group_of({-1, 5}, 4), (CellGroupId{3, 1, 4}));
  EXPECT_EQ(group_of({8, 4}, 4), (CellGroupId{0, 0, 4}));
}

TEST(Grid, SameGroupCellsAreFarApart) {
  // Distinct cells of one residue class are at least (k-1) cells apart, so no
  // disk of radius C meets two of them from a single target.
  for (double c : {0.5, 1.0, 2.0}) {
    const int k = group_modulus(c);
    EXPECT_GT((k - 1) * kCellSide, 2.0 * c);
  }
}

TEST(Grid, CandidateCellBound) {
  EXPECT_EQ(candidate_cell_bound(1.0), (static_cast<std::int64_t>(std::ceil(2.0 * std::sqrt(2.0))) + 2) *
                                            (static_cast<std::int64_t>(std::ceil(2.0 * std::sqrt(2.0))) + 2));
}

TEST(Grid, BucketByCell) {
  Instance inst({{0.1, 0.1}, {2.0, 2.0}, {0.2, 0.3}}, {}, 1.0, 1.0);
  const auto buckets = bucket_by_cell(inst, {2, 1, 0});
  ASSERT_EQ(buckets.size(), 2u);
  EXPECT_EQ(buckets.at(CellId{0, 0}), (std::vector<SensorId>{0, 2}));
}

}  // namespace
}  // namespace conncover
