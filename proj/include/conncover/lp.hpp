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

#ifndef CONNCOVER_LP_HPP_
#define CONNCOVER_LP_HPP_

#include <limits>
#include <span>
#include <string>
#include <vector>

namespace conncover {

inline constexpr double kLpFeasibilityTol = 1e-7;
inline constexpr double kLpOptimalityTol = 1e-9;
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

enum class Relation { kLessEqual, kGreaterEqual, kEqual };

struct LinearTerm {
  int var = 0;
  double coef = 0.0;
};

struct LinearConstraint {
  std::vector<LinearTerm> terms;
  Relation relation = Relation::kGreaterEqual;
  double rhs = 0.0;
};

// Minimize c'x subject to rows and lo <= x <= hi.
class LinearProgram {
 public:
  int add_variable(double cost, double lo = 0.0, double hi = kInfinity);
  int add_constraint(std::vector<LinearTerm> terms, Relation relation, double rhs);

  int num_variables() const { return static_cast<int>(objective_.size()); }
  int num_constraints() const { return static_cast<int>(rows_.size()); }
  const std::vector<double>& objective() const { return objective_; }
  const std::vector<double>& lower() const { return lower_; }
  const std::vector<double>& upper() const { return upper_; }
  const std::vector<LinearConstraint>& constraints() const { return rows_; }
  const LinearConstraint& constraint(int i) const { return rows_[static_cast<std::size_t>(i)]; }

  // Throws std::invalid_argument on non-finite data, lo > hi or bad indices.
  void validate() const;

 private:
  std::vector<double> objective_;
  std::vector<double> lower_;
  std::vector<double> upper_;
  std::vector<LinearConstraint> rows_;
};

enum class LpStatus { kOptimal, kInfeasible, kUnbounded };

const char* to_string(LpStatus status);

struct LpSolution {
  LpStatus status = LpStatus::kInfeasible;
  double objective = 0.0;
  std::vector<double> values;
  // Row multipliers y with c - A'y priced against the bounds; only set when optimal.
  std::vector<double> duals;
  long iterations = 0;
};

// Two-phase revised simplex with an explicit basis inverse, refactored
// periodically. Dantzig pricing with a lexicographic ratio test, so degenerate
// problems do not cycle. Deterministic for identical input. Throws std::runtime_error on iteration limit or a singular basis.
LpSolution solve(const LinearProgram& lp);

double row_activity(const LinearConstraint& row, std::span<const double> x);
// Largest violation of any row or bound at x.
double max_violation(const LinearProgram& lp, std::span<const double> x);
double objective_value(const LinearProgram& lp, std::span<const double> x);

// Lagrangian lower bound y'b + sum_j min_{lo<=x_j<=hi} (c - A'y)_j x_j.
// Returns -inf when y has the wrong sign for some row or a bound is unbounded
// in the improving direction.
double lagrangian_bound(const LinearProgram& lp, std::span<const double> y);

// CPLEX LP text format, for cross-checking with external solvers.
std::string to_lp_format(const LinearProgram& lp);

}  // namespace conncover

#endif  // CONNCOVER_LP_HPP_
