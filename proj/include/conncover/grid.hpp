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

#ifndef CONNCOVER_GRID_HPP_
#define CONNCOVER_GRID_HPP_

#include <cmath>
#include <compare>
#include <cstdint>
#include <map>
#include <vector>

#include "conncover/instance.hpp"

namespace conncover {

// Side of a grid cell: the cell diagonal equals the normalized r_c = 1.
inline const double kCellSide = std::sqrt(2.0) / 2.0;

struct CellId {
  std::int64_t row = 0;
  std::int64_t col = 0;

  friend bool operator==(const CellId&, const CellId&) = default;
  friend auto operator<=>(const CellId&, const CellId&) = default;
};

// Residue class (a, b) of cells modulo k: CG_{a,b} = {cl_{i,j} : i = a, j = b (mod k)}.
struct CellGroupId {
  int a = 0;
  int b = 0;
  int k = 1;

  friend bool operator==(const CellGroupId&, const CellGroupId&) = default;
  friend auto operator<=>(const CellGroupId&, const CellGroupId&) = default;
};

// Grid anchored at the origin; boundary points go to the higher-index cell.
CellId cell_of(const Point& pt);

// k = ceil(2C / l + 1). Throws std::invalid_argument for C <= 0.
int group_modulus(double ratio);

CellGroupId group_of(const CellId& cell, int k);

// Upper bound on the number of grid cells a disk of radius C can meet:
// (ceil(2 sqrt(2) C) + 2)^2.
std::int64_t candidate_cell_bound(double ratio);

// Sensors bucketed by cell, ids ascending within each bucket.
std::map<CellId, std::vector<SensorId>> bucket_by_cell(const Instance& inst,
                                                       const std::vector<SensorId>& sensors);

}  // namespace conncover

#endif  // CONNCOVER_GRID_HPP_
