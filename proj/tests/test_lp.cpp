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

#include "conncover/lp.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <optional>
#include <random>
#include <stdexcept>

namespace conncover {
namespace {

// Exhaustive vertex enumeration for bounded LPs: every choice of n tight
// hyperplanes among rows and bounds, solved by Gaussian elimination and kept
// when feasible.
struct Hyperplane {
  std::vector<double> a;
  double b;
};

std::optional<std::vector<double>> solve_square(std::vector<Hyperplane> h) {
  const std::size_t n = h.size();
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < n; ++r) {
      if (std::abs(h[r].a[c]) > std::abs(h[piv].a[c])) piv = r;
    }
    if (std::abs(h[piv].a[c]) < 1e-10) return std::nullopt;
    std::swap(h[c], h[piv]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c) continue;
      const double f = h[r].a[c] / h[c].a[c];
      if (f == 0.0) continue;
      for (std::size_t k = c; k < n; ++k) h[r].a[k] -= f * h[c].a[k];
      h[r].b -= f * h[c].b;
    }
  }
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = h[i].b / h[i].a[i];
  return x;
}

std::optional<double> enumerate_vertices(const LinearProgram& lp) {
  const auto n = static_cast<std::size_t>(lp.num_variables());
  std::vector<Hyperplane> planes;
  for (const LinearConstraint& row : lp.constraints()) {
    Hyperplane h{std::vector<double>(n, 0.0), row.rhs};
    for (const LinearTerm& t : row.terms) h.a[static_cast<std::size_t>(t.var)] += t.coef;
    planes.push_back(h);
  }
  for (std::size_t j = 0; j < n; ++j) {
    for (double bound : {lp.lower()[j], lp.upper()[j]}) {
      Hyperplane h{std::vector<double>(n, 0.0), bound};
      h.a[j] = 1.0;
      planes.push_back(h);
    }
  }
  std::optional<double> best;
  std::vector<bool> pick(planes.size(), false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(n), true);
  do {
    std::vector<Hyperplane> chosen;
    for (std::size_t i = 0; i < planes.size(); ++i) {
      if (pick[i]) chosen.push_back(planes[i]);
    }
    const auto x = solve_square(chosen);
    if (!x || max_violation(lp, *x) > 1e-7) continue;
    const double obj = objective_value(lp, *x);
    if (!best || obj < *best) best = obj;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return best;
}

// y'b + sum_j min over the box of the reduced cost term, computed here
// rather than through the library helper.
double dual_value(const LinearProgram& lp, const std::vector<double>& y) {
  std::vector<double> reduced = lp.objective();
  double v = 0.0;
  for (int i = 0; i < lp.num_constraints(); ++i) {
    const LinearConstraint& row = lp.constraint(i);
    v += y[static_cast<std::size_t>(i)] * row.rhs;
    for (const LinearTerm& t : row.terms) reduced[static_cast<std::size_t>(t.var)] -= y[static_cast<std::size_t>(i)] * t.coef;
  }
  for (std::size_t j = 0; j < reduced.size(); ++j) v += std::min(reduced[j] * lp.lower()[j], reduced[j] * lp.upper()[j]);
  return v;
}

LinearProgram random_lp(std::mt19937_64& rng, int vars, int rows) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> rhs(-4, 6);
  std::uniform_int_distribution<int> kind(0, 2);
  LinearProgram lp;
  for (int j = 0; j < vars; ++j) {
    const bool shifted = kind(rng) == 0;
    lp.add_variable(coef(rng), shifted ? -2.0 : 0.0, shifted ? 3.0 : 1.0 + kind(rng));
  }
  for (int i = 0; i < rows; ++i) {
    std::vector<LinearTerm> terms;
    for (int j = 0; j < vars; ++j) {
      const int c = coef(rng);
      if (c != 0) terms.push_back({j, static_cast<double>(c)});
    }
    const int k = kind(rng);
    const Relation rel = k == 0 ? Relation::kLessEqual : k == 1 ? Relation::kGreaterEqual : Relation::kEqual;
    // Equality rows are kept rare so most instances stay feasible.
    lp.add_constraint(std::move(terms), rel == Relation::kEqual && rng() % 3 != 0 ? Relation::kLessEqual : rel,
                      rhs(rng));
  }
  return lp;
}

TEST(Lp, SingleBoundedVariable) {
  LinearProgram lp;
  const int x = lp.add_variable(1.0, 0.0, 10.0);
  lp.add_constraint({{x, 1.0}}, Relation::kGreaterEqual, 3.0);
  const LpSolution sol = solve(lp);
  ASSERT_EQ(sol.status, LpStatus::kOptimal);
  EXPECT_NEAR(sol.values[0], 3.0, 1e-9);
  EXPECT_NEAR(sol.objective, 3.0, 1e-9);
}

TEST(Lp, DegenerateOptimum) {
  LinearProgram lp;
  const int x = lp.add_variable(1.0, 0.0, 1.0);
  const int y = lp.add_variable(1.0, 0.0, 1.0);
  lp.add_constraint({{x, 1.0}, {y, 1.0}}, Relation::kGreaterEqual, 1.0);
  const LpSolution sol = solve(lp);
  ASSERT_EQ(sol.status, LpStatus::kOptimal);
  EXPECT_NEAR(sol.objective, 1.0, 1e-9);
  EXPECT_LE(max_violation(lp, sol.values), 1e-9);
}

TEST(Lp, Infeasible) {
  LinearProgram lp;
  const int x = lp.add_variable(1.0, 0.0, 1.0);
  lp.add_constraint({{x, 1.0}}, Relation::kGreaterEqual, 2.0);
  EXPECT_EQ(solve(lp).status, LpStatus::kInfeasible);
}

TEST(Lp, Unbounded) {
  LinearProgram lp;
  const int x = lp.add_variable(-1.0);
  const int y = lp.add_variable(0.0);
  lp.add_constraint({{x, 1.0}, {y, -1.0}}, Relation::kLessEqual, 1.0);
  EXPECT_EQ(solve(lp).status, LpStatus::kUnbounded);
}

TEST(Lp, FreeAndNegativeVariables) {
  // min x + 2y with x free, y in [-5, -1], x - y >= 0.5  ->  y = -5, x = -4.5.
  LinearProgram lp;
  const int x = lp.add_variable(1.0, -kInfinity, kInfinity);
  const int y = lp.add_variable(2.0, -5.0, -1.0);
  lp.add_constraint({{x, 1.0}, {y, -1.0}}, Relation::kGreaterEqual, 0.5);
  const LpSolution sol = solve(lp);
  ASSERT_EQ(sol.status, LpStatus::kOptimal);
  EXPECT_NEAR(sol.values[0], -4.5, 1e-9);
  EXPECT_NEAR(sol.values[1], -5.0, 1e-9);
  EXPECT_NEAR(sol.objective, -14.5, 1e-9);
}

TEST(Lp, EmptyProgram) {
  const LpSolution sol = solve(LinearProgram{});
  EXPECT_EQ(sol.status, LpStatus::kOptimal);
  EXPECT_EQ(sol.objective, 0.0);
}

TEST(Lp, ValidateRejectsBadInput) {
  LinearProgram lp;
  lp.add_variable(1.0, 2.0, 1.0);
  EXPECT_THROW(lp.validate(), std::invalid_argument);
  LinearProgram bad_index;
  bad_index.add_variable(1.0);
  bad_index.add_constraint({{3, 1.0}}, Relation::kEqual, 0.0);
  EXPECT_THROW(solve(bad_index), std::invalid_argument);
  LinearProgram nan_rhs;
  nan_rhs.add_variable(1.0);
  nan_rhs.add_constraint({{0, 1.0}}, Relation::kEqual, NAN);
  EXPECT_THROW(solve(nan_rhs), std::invalid_argument);
}

TEST(Lp, MatchesVertexEnumeration) {
  std::mt19937_64 rng(2024);
  int feasible = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const LinearProgram lp = random_lp(rng, 6, 8);
    const std::optional<double> oracle = enumerate_vertices(lp);
    const LpSolution sol = solve(lp);
    if (!oracle) {
      EXPECT_EQ(sol.status, LpStatus::kInfeasible) << "trial " << trial;
      continue;
    }
    ++feasible;
    ASSERT_EQ(sol.status, LpStatus::kOptimal) << "trial " << trial;
    EXPECT_NEAR(sol.objective, *oracle, 1e-6) << "trial " << trial;
    EXPECT_LE(max_violation(lp, sol.values), 1e-7);
  }
  EXPECT_GE(feasible, 20);
}

TEST(Lp, DualsCertifyOptimality) {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 60; ++trial) {
    const LinearProgram lp = random_lp(rng, 7, 9);
    const LpSolution sol = solve(lp);
    if (sol.status != LpStatus::kOptimal) continue;
    ASSERT_EQ(sol.duals.size(), static_cast<std::size_t>(lp.num_constraints()));
    for (int i = 0; i < lp.num_constraints(); ++i) {
      const double yi = sol.duals[static_cast<std::size_t>(i)];
      if (lp.constraint(i).relation == Relation::kGreaterEqual) {
        EXPECT_GE(yi, -1e-9);
      }
      if (lp.constraint(i).relation == Relation::kLessEqual) {
        EXPECT_LE(yi, 1e-9);
      }
    }
    EXPECT_NEAR(dual_value(lp, sol.duals), sol.objective, 1e-6) << "trial " << trial;
    EXPECT_NEAR(lagrangian_bound(lp, sol.duals), sol.objective, 1e-6) << "trial " << trial;
  }
}

TEST(Lp, LagrangianBoundRejectsWrongSign) {
  LinearProgram lp;
  const int x = lp.add_variable(1.0, 0.0, 1.0);
  lp.add_constraint({{x, 1.0}}, Relation::kGreaterEqual, 0.5);
  EXPECT_EQ(lagrangian_bound(lp, std::vector<double>{-1.0}), -kInfinity);
  EXPECT_NEAR(lagrangian_bound(lp, std::vector<double>{1.0}), 0.5, 1e-12);
}

TEST(Lp, DegenerateCoveringProgram) {
  // Highly degenerate: every pair of 12 variables must sum to >= 1.
  LinearProgram lp;
  for (int j = 0; j < 12; ++j) lp.add_variable(1.0, 0.0, 1.0);
  for (int i = 0; i < 12; ++i) {
    for (int j = i + 1; j < 12; ++j) lp.add_constraint({{i, 1.0}, {j, 1.0}}, Relation::kGreaterEqual, 1.0);
  }
  const LpSolution sol = solve(lp);
  ASSERT_EQ(sol.status, LpStatus::kOptimal);
  // Optimum 6 (all halves) is confirmed by the dual: summing every row gives
  // 11 * sum x >= 66.
  EXPECT_NEAR(sol.objective, 6.0, 1e-7);
}

TEST(Lp, Deterministic) {
  std::mt19937_64 rng(3);
  const LinearProgram lp = random_lp(rng, 6, 8);
  const LpSolution a = solve(lp);
  const LpSolution b = solve(lp);
  EXPECT_EQ(a.values, b.values);
  EXPECT_EQ(a.iterations, b.iterations);
}

TEST(Lp, LpFormatMentionsRows) {
  LinearProgram lp;
  const int x = lp.add_variable(1.0, 0.0, 2.0);
  lp.add_constraint({{x, 1.0}}, Relation::kGreaterEqual, 1.0);
  const std::string text = to_lp_format(lp);
  EXPECT_NE(text.find("Minimize"), std::string::npos);
  EXPECT_NE(text.find("Subject To"), std::string::npos);
  EXPECT_NE(text.find(">= 1"), std::string::npos);
}

}  // namespace
}  // namespace conncover
