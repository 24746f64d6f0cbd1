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

#ifndef CONNCOVER_REPORT_JSON_HPP_
#define CONNCOVER_REPORT_JSON_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conncover/budgeted_csc.hpp"
#include "conncover/instance.hpp"
#include "conncover/min_csc.hpp"
#include "conncover/oracle.hpp"

namespace conncover {

// Solution file: {"instance": path-or-inline, "problem": "min-csc"|"budgeted",
// "budget": B?, "sensors": [...], "tree_edges": [[u,v],...]?}
struct SolutionFile {
  std::string instance_path;             // set when the instance is referenced by path
  std::optional<Instance> inline_instance;
  std::string problem = "min-csc";
  std::optional<std::size_t> budget;
  SensorSet sensors;
  std::vector<std::pair<SensorId, SensorId>> tree_edges;
};

std::string solution_to_json(const SolutionFile& sol);
// Throws std::invalid_argument on malformed input.
SolutionFile solution_from_json(const std::string& text);
SolutionFile load_solution(const std::string& path);

// Deterministic reports (no timings). Non-finite diagnostics are written as null.
std::string min_csc_report(const MinCscResult& result, const MinCscOptions& options);
std::string budgeted_report(const BudgetedResult& result, QstMode requested);
std::string oracle_report(const std::string& problem, const oracle::Result& result);

}  // namespace conncover

#endif  // CONNCOVER_REPORT_JSON_HPP_
