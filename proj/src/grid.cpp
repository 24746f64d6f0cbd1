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

#include <algorithm>
#include <stdexcept>

namespace conncover {

CellId cell_of(const Point& pt) {
  return {static_cast<std::int64_t>(std::floor(pt.y / kCellSide)),
          static_cast<std::int64_t>(std::floor(pt.x / kCellSide))};
}

int group_modulus(double ratio) {
  if (!(ratio > 0.0) || !std::isfinite(ratio)) throw std::invalid_argument("C must be positive and finite");
  return static_cast<int>(std::ceil(2.0 * ratio / kCellSide + 1.0));
}

CellGroupId group_of(const CellId& cell, int k) {
  if (k < 1) throw std::invalid_argument("group modulus must be >= 1");
  auto mod = [k](std::int64_t v) {
    std::int64_t r = v % k;
    return static_cast<int>(r < 0 ? r + k : r);
  };
  return {mod(cell.row), mod(cell.col), k};
}

std::int64_t candidate_cell_bound(double ratio) {
  const auto span = static_cast<std::int64_t>(std::ceil(2.0 * std::sqrt(2.0) * ratio)) + 2;
  return span * span;
}

std::map<CellId, std::vector<SensorId>> bucket_by_cell(const Instance& inst,
                                                       const std::vector<SensorId>& sensors) {
  std::map<CellId, std::vector<SensorId>> out;
  for (SensorId s : sensors) out[cell_of(inst.sensor(s))].push_back(s);
  for (auto& [cell, ids] : out) std::sort(ids.begin(), ids.end());
  return out;
}

}  // namespace conncover
