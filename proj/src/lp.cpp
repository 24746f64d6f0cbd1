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

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <sstream>
#include <stdexcept>

namespace conncover {

namespace {

constexpr double kPivotTol = 1e-9;
// Ratios and scaled basis-inverse entries closer than this count as ties.
constexpr double kTieTol = 1e-11;
constexpr double kSingularTol = 1e-11;
constexpr double kDropTol = 1e-12;

enum class ColumnKind { kShift, kMirror, kSplit };

// How an original variable maps onto non-negative standard-form columns.
struct ColumnMap {
  ColumnKind kind = ColumnKind::kShift;
  int col = 0;
  int neg_col = -1;
  double offset = 0.0;
};

struct StdRow {
  std::vector<LinearTerm> terms;
  Relation relation;
  double rhs;
};

struct Entry {
  std::size_t row;
  double value;
};

enum class Outcome { kOptimal, kUnbounded };

// Revised simplex on the standard form A x = b, x >= 0, b >= 0, with an
// explicit dense basis inverse that is rebuilt from A every few pivots so
// rounding error cannot accumulate. Reduced costs are recomputed from fresh
// duals each iteration.
class SimplexSolver {
 public:
  explicit SimplexSolver(const LinearProgram& lp) : lp_(lp) { build(); }

  LpSolution run() {
    LpSolution sol;
    if (!phase_one()) {
      sol.status = LpStatus::kInfeasible;
      sol.iterations = iterations_;
      return sol;
    }
    std::vector<double> cost(cols_, 0.0);
    std::copy(std_cost_.begin(), std_cost_.end(), cost.begin());
    if (iterate(cost, /*allow_artificial=*/false) == Outcome::kUnbounded) {
      sol.status = LpStatus::kUnbounded;
      sol.iterations = iterations_;
      return sol;
    }
    refactor();
    sol.status = LpStatus::kOptimal;
    sol.iterations = iterations_;
    extract(cost, sol);
    return sol;
  }

 private:
  void build() {
    const int n = lp_.num_variables();
    maps_.resize(static_cast<std::size_t>(n));
    int next_col = 0;
    for (int j = 0; j < n; ++j) {
      const double lo = lp_.lower()[static_cast<std::size_t>(j)];
      const double hi = lp_.upper()[static_cast<std::size_t>(j)];
      const double c = lp_.objective()[static_cast<std::size_t>(j)];
      ColumnMap& m = maps_[static_cast<std::size_t>(j)];
      if (std::isfinite(lo)) {
        m = {ColumnKind::kShift, next_col++, -1, lo};
        std_cost_.push_back(c);
      } else if (std::isfinite(hi)) {
        m = {ColumnKind::kMirror, next_col++, -1, hi};
        std_cost_.push_back(-c);
      } else {
        m = {ColumnKind::kSplit, next_col, next_col + 1, 0.0};
        next_col += 2;
        std_cost_.push_back(c);
        std_cost_.push_back(-c);
      }
    }
    const auto num_structural = static_cast<std::size_t>(next_col);

    std::vector<StdRow> rows;
    rows.reserve(static_cast<std::size_t>(lp_.num_constraints()));
    for (const LinearConstraint& row : lp_.constraints()) {
      StdRow sr{{}, row.relation, row.rhs};
      for (const LinearTerm& t : row.terms) {
        const ColumnMap& m = maps_[static_cast<std::size_t>(t.var)];
        switch (m.kind) {
          case ColumnKind::kShift:
            sr.terms.push_back({m.col, t.coef});
            sr.rhs -= t.coef * m.offset;
            break;
          case ColumnKind::kMirror:
            sr.terms.push_back({m.col, -t.coef});
            sr.rhs -= t.coef * m.offset;
            break;
          case ColumnKind::kSplit:
            sr.terms.push_back({m.col, t.coef});
            sr.terms.push_back({m.neg_col, -t.coef});
            break;
        }
      }
      rows.push_back(std::move(sr));
    }
    num_user_rows_ = rows.size();
    for (int j = 0; j < n; ++j) {
      const ColumnMap& m = maps_[static_cast<std::size_t>(j)];
      const double hi = lp_.upper()[static_cast<std::size_t>(j)];
      if (m.kind == ColumnKind::kShift && std::isfinite(hi)) {
        rows.push_back({{{m.col, 1.0}}, Relation::kLessEqual, hi - m.offset});
      }
    }

    // Normalize to rhs >= 0 and count auxiliary columns.
    row_sign_.assign(rows.size(), 1.0);
    std::size_t slack_count = 0;
    std::size_t artificial_count = 0;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      StdRow& r = rows[i];
      if (r.rhs < 0.0) {
        r.rhs = -r.rhs;
        for (LinearTerm& t : r.terms) t.coef = -t.coef;
        if (r.relation == Relation::kLessEqual) {
          r.relation = Relation::kGreaterEqual;
        } else if (r.relation == Relation::kGreaterEqual) {
          r.relation = Relation::kLessEqual;
        }
        row_sign_[i] = -1.0;
      }
      if (r.relation != Relation::kEqual) ++slack_count;
      if (r.relation != Relation::kLessEqual) ++artificial_count;
    }

    rows_ = rows.size();
    first_artificial_ = num_structural + slack_count;
    cols_ = first_artificial_ + artificial_count;
    columns_.assign(cols_, {});
    b_.assign(rows_, 0.0);
    basis_.assign(rows_, 0);
    std_cost_.resize(cols_, 0.0);
    std::vector<std::map<std::size_t, double>> merged(num_structural);
    std::size_t next_slack = num_structural;
    std::size_t next_art = first_artificial_;
    for (std::size_t i = 0; i < rows_; ++i) {
      const StdRow& r = rows[i];
      for (const LinearTerm& t : r.terms) merged[static_cast<std::size_t>(t.var)][i] += t.coef;
      b_[i] = r.rhs;
      if (r.relation == Relation::kLessEqual) {
        columns_[next_slack].push_back({i, 1.0});
        basis_[i] = next_slack++;
      } else {
        if (r.relation == Relation::kGreaterEqual) columns_[next_slack++].push_back({i, -1.0});
        columns_[next_art].push_back({i, 1.0});
        basis_[i] = next_art++;
      }
    }
    for (std::size_t j = 0; j < num_structural; ++j) {
      for (const auto& [i, v] : merged[j]) {
        if (v != 0.0) columns_[j].push_back({i, v});
      }
    }
    position_.assign(cols_, -1);
    for (std::size_t i = 0; i < rows_; ++i) position_[basis_[i]] = static_cast<int>(i);
    refactor_every_ = std::max<std::size_t>(64, rows_ / 2);
    max_iterations_ = 100000 + 50 * static_cast<long>(rows_ + cols_);
    refactor();
  }

  bool is_artificial(std::size_t j) const { return j >= first_artificial_; }

  // Rebuilds the basis inverse by Gauss-Jordan elimination with partial
  // pivoting, then recomputes the basic values.
  void refactor() {
    const std::size_t m = rows_;
    std::vector<double> work(m * 2 * m, 0.0);
    const std::size_t w = 2 * m;
    for (std::size_t k = 0; k < m; ++k) {
      for (const Entry& e : columns_[basis_[k]]) work[e.row * w + k] = e.value;
      work[k * w + m + k] = 1.0;
    }
    for (std::size_t c = 0; c < m; ++c) {
      std::size_t p = c;
      for (std::size_t i = c + 1; i < m; ++i) {
        if (std::abs(work[i * w + c]) > std::abs(work[p * w + c])) p = i;
      }
      if (std::abs(work[p * w + c]) < kSingularTol) throw std::runtime_error("simplex basis became singular");
      if (p != c) {
        for (std::size_t j = 0; j < w; ++j) std::swap(work[p * w + j], work[c * w + j]);
      }
      const double inv = 1.0 / work[c * w + c];
      for (std::size_t j = 0; j < w; ++j) work[c * w + j] *= inv;
      for (std::size_t i = 0; i < m; ++i) {
        if (i == c) continue;
        const double f = work[i * w + c];
        if (f == 0.0) continue;
        for (std::size_t j = c; j < w; ++j) work[i * w + j] -= f * work[c * w + j];
      }
    }
    binv_.assign(m * m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < m; ++j) binv_[i * m + j] = work[i * w + m + j];
    }
    xb_.assign(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      double s = 0.0;
      for (std::size_t k = 0; k < m; ++k) s += binv_[i * m + k] * b_[k];
      xb_[i] = s;
    }
    since_refactor_ = 0;
  }

  std::vector<double> duals(const std::vector<double>& cost) const {
    const std::size_t m = rows_;
    std::vector<double> y(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      const double cb = cost[basis_[i]];
      if (cb == 0.0) continue;
      for (std::size_t k = 0; k < m; ++k) y[k] += cb * binv_[i * m + k];
    }
    return y;
  }

  double reduced_cost(const std::vector<double>& cost, const std::vector<double>& y, std::size_t j) const {
    double d = cost[j];
    for (const Entry& e : columns_[j]) d -= y[e.row] * e.value;
    return d;
  }

  std::vector<double> ftran(std::size_t j) const {
    const std::size_t m = rows_;
    std::vector<double> alpha(m, 0.0);
    for (const Entry& e : columns_[j]) {
      for (std::size_t i = 0; i < m; ++i) alpha[i] += binv_[i * m + e.row] * e.value;
    }
    return alpha;
  }

  void pivot(std::size_t r, std::size_t entering, const std::vector<double>& alpha, double theta) {
    const std::size_t m = rows_;
    for (std::size_t i = 0; i < m; ++i) xb_[i] -= theta * alpha[i];
    xb_[r] = theta;
    double* prow = &binv_[r * m];
    const double inv = 1.0 / alpha[r];
    for (std::size_t k = 0; k < m; ++k) prow[k] *= inv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == r || alpha[i] == 0.0) continue;
      double* row = &binv_[i * m];
      const double f = alpha[i];
      for (std::size_t k = 0; k < m; ++k) row[k] -= f * prow[k];
    }
    position_[basis_[r]] = -1;
    basis_[r] = entering;
    position_[entering] = static_cast<int>(r);
    if (++since_refactor_ >= refactor_every_) refactor();
  }

  // True when row i of [B^-1] / alpha_i is lexicographically below row l.
  bool lex_less(std::size_t i, std::size_t l, const std::vector<double>& alpha) const {
    const std::size_t m = rows_;
    for (std::size_t k = 0; k < m; ++k) {
      const double a = binv_[i * m + k] / alpha[i];
      const double b = binv_[l * m + k] / alpha[l];
      if (a < b - kTieTol) return true;
      if (a > b + kTieTol) return false;
    }
    return false;
  }

  // Dantzig pricing with a lexicographic ratio test: rows tied on the step
  // length are ranked by their rows of B^-1 scaled by 1/alpha. Starting from
  // the identity basis this never revisits a basis, so degenerate LPs cannot
  // cycle.
  Outcome iterate(const std::vector<double>& cost, bool allow_artificial) {
    std::vector<std::size_t> tied;
    while (true) {
      if (++iterations_ > max_iterations_) throw std::runtime_error("simplex iteration limit exceeded");
      const std::vector<double> y = duals(cost);
      std::size_t entering = cols_;
      double best = -kLpOptimalityTol;
      for (std::size_t j = 0; j < cols_; ++j) {
        if (position_[j] >= 0 || (!allow_artificial && is_artificial(j))) continue;
        const double d = reduced_cost(cost, y, j);
        if (d < best) {
          entering = j;
          best = d;
        }
      }
      if (entering == cols_) return Outcome::kOptimal;

      const std::vector<double> alpha = ftran(entering);
      double min_ratio = kInfinity;
      for (std::size_t i = 0; i < rows_; ++i) {
        if (alpha[i] > kPivotTol) min_ratio = std::min(min_ratio, std::max(xb_[i], 0.0) / alpha[i]);
      }
      if (min_ratio == kInfinity) return Outcome::kUnbounded;
      tied.clear();
      for (std::size_t i = 0; i < rows_; ++i) {
        if (alpha[i] > kPivotTol && std::max(xb_[i], 0.0) / alpha[i] <= min_ratio + kTieTol * (1.0 + min_ratio)) {
          tied.push_back(i);
        }
      }
      std::size_t leaving = tied.front();
      for (std::size_t i : tied) {
        if (lex_less(i, leaving, alpha)) leaving = i;
      }
      pivot(leaving, entering, alpha, std::max(xb_[leaving], 0.0) / alpha[leaving]);
    }
  }

  bool phase_one() {
    if (first_artificial_ == cols_) return true;
    std::vector<double> cost(cols_, 0.0);
    for (std::size_t j = first_artificial_; j < cols_; ++j) cost[j] = 1.0;
    iterate(cost, /*allow_artificial=*/true);
    refactor();
    double infeasibility = 0.0;
    double scale = 1.0;
    for (std::size_t i = 0; i < rows_; ++i) {
      scale = std::max(scale, std::abs(b_[i]));
      if (is_artificial(basis_[i])) infeasibility += std::max(xb_[i], 0.0);
    }
    if (infeasibility > kLpFeasibilityTol * scale) return false;

    // Pivot zero-level artificials out; rows with nothing to pivot on are
    // redundant and keep their artificial at zero.
    for (std::size_t r = 0; r < rows_; ++r) {
      if (!is_artificial(basis_[r])) continue;
      std::size_t best_j = cols_;
      double best_abs = kPivotTol;
      for (std::size_t j = 0; j < first_artificial_; ++j) {
        if (position_[j] >= 0) continue;
        double a = 0.0;
        for (const Entry& e : columns_[j]) a += binv_[r * rows_ + e.row] * e.value;
        if (std::abs(a) > best_abs) {
          best_abs = std::abs(a);
          best_j = j;
        }
      }
      if (best_j == cols_) continue;
      xb_[r] = 0.0;
      pivot(r, best_j, ftran(best_j), 0.0);
    }
    return true;
  }

  void extract(const std::vector<double>& cost, LpSolution& sol) const {
    std::vector<double> std_values(cols_, 0.0);
    for (std::size_t i = 0; i < rows_; ++i) std_values[basis_[i]] = std::max(xb_[i], 0.0);
    sol.values.assign(static_cast<std::size_t>(lp_.num_variables()), 0.0);
    for (std::size_t j = 0; j < maps_.size(); ++j) {
      const ColumnMap& m = maps_[j];
      const double v = std_values[static_cast<std::size_t>(m.col)];
      switch (m.kind) {
        case ColumnKind::kShift:
          sol.values[j] = m.offset + v;
          break;
        case ColumnKind::kMirror:
          sol.values[j] = m.offset - v;
          break;
        case ColumnKind::kSplit:
          sol.values[j] = v - std_values[static_cast<std::size_t>(m.neg_col)];
          break;
      }
    }
    sol.objective = objective_value(lp_, sol.values);
    const std::vector<double> y = duals(cost);
    sol.duals.assign(num_user_rows_, 0.0);
    for (std::size_t i = 0; i < num_user_rows_; ++i) sol.duals[i] = row_sign_[i] * y[i];
  }

  const LinearProgram& lp_;
  std::vector<ColumnMap> maps_;
  std::vector<double> std_cost_;
  std::vector<double> row_sign_;
  std::vector<std::vector<Entry>> columns_;
  std::vector<double> b_;
  std::vector<std::size_t> basis_;
  std::vector<int> position_;
  std::vector<double> binv_;
  std::vector<double> xb_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t num_user_rows_ = 0;
  std::size_t first_artificial_ = 0;
  std::size_t refactor_every_ = 32;
  std::size_t since_refactor_ = 0;
  long iterations_ = 0;
  long max_iterations_ = 0;
};

void append_number(std::ostringstream& out, double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  out << buf;
}

void append_terms(std::ostringstream& out, const std::vector<LinearTerm>& terms) {
  if (terms.empty()) {
    out << " 0 x0";
    return;
  }
  for (const LinearTerm& t : terms) {
    out << (t.coef < 0 ? " - " : " + ");
    append_number(out, std::abs(t.coef));
    out << " x" << t.var;
  }
}

}  // namespace

int LinearProgram::add_variable(double cost, double lo, double hi) {
  objective_.push_back(cost);
  lower_.push_back(lo);
  upper_.push_back(hi);
  return static_cast<int>(objective_.size()) - 1;
}

int LinearProgram::add_constraint(std::vector<LinearTerm> terms, Relation relation, double rhs) {
  rows_.push_back({std::move(terms), relation, rhs});
  return static_cast<int>(rows_.size()) - 1;
}

void LinearProgram::validate() const {
  for (std::size_t j = 0; j < objective_.size(); ++j) {
    if (!std::isfinite(objective_[j])) throw std::invalid_argument("non-finite objective coefficient");
    if (std::isnan(lower_[j]) || std::isnan(upper_[j]) || lower_[j] > upper_[j] || lower_[j] == kInfinity ||
        upper_[j] == -kInfinity) {
      throw std::invalid_argument("invalid bounds for variable " + std::to_string(j));
    }
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    if (!std::isfinite(rows_[i].rhs)) throw std::invalid_argument("non-finite rhs in row " + std::to_string(i));
    for (const LinearTerm& t : rows_[i].terms) {
      if (t.var < 0 || t.var >= num_variables()) throw std::invalid_argument("variable index out of range in row " + std::to_string(i));
      if (!std::isfinite(t.coef)) throw std::invalid_argument("non-finite coefficient in row " + std::to_string(i));
    }
  }
}

const char* to_string(LpStatus status) {
  switch (status) {
    case LpStatus::kOptimal:
      return "optimal";
    case LpStatus::kInfeasible:
      return "infeasible";
    case LpStatus::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

LpSolution solve(const LinearProgram& lp) {
  lp.validate();
  SimplexSolver solver(lp);
  return solver.run();
}

double row_activity(const LinearConstraint& row, std::span<const double> x) {
  double sum = 0.0;
  for (const LinearTerm& t : row.terms) sum += t.coef * x[static_cast<std::size_t>(t.var)];
  return sum;
}

double max_violation(const LinearProgram& lp, std::span<const double> x) {
  double worst = 0.0;
  for (const LinearConstraint& row : lp.constraints()) {
    const double a = row_activity(row, x);
    double v = 0.0;
    switch (row.relation) {
      case Relation::kLessEqual:
        v = a - row.rhs;
        break;
      case Relation::kGreaterEqual:
        v = row.rhs - a;
        break;
      case Relation::kEqual:
        v = std::abs(a - row.rhs);
        break;
    }
    worst = std::max(worst, v);
  }
  for (int j = 0; j < lp.num_variables(); ++j) {
    const auto ju = static_cast<std::size_t>(j);
    worst = std::max(worst, lp.lower()[ju] - x[ju]);
    worst = std::max(worst, x[ju] - lp.upper()[ju]);
  }
  return worst;
}

double objective_value(const LinearProgram& lp, std::span<const double> x) {
  double sum = 0.0;
  for (int j = 0; j < lp.num_variables(); ++j) {
    sum += lp.objective()[static_cast<std::size_t>(j)] * x[static_cast<std::size_t>(j)];
  }
  return sum;
}

double lagrangian_bound(const LinearProgram& lp, std::span<const double> y) {
  std::vector<double> reduced = lp.objective();
  double bound = 0.0;
  for (int i = 0; i < lp.num_constraints(); ++i) {
    const LinearConstraint& row = lp.constraint(i);
    const double yi = y[static_cast<std::size_t>(i)];
    if ((row.relation == Relation::kGreaterEqual && yi < -kLpOptimalityTol) ||
        (row.relation == Relation::kLessEqual && yi > kLpOptimalityTol)) {
      return -kInfinity;
    }
    bound += yi * row.rhs;
    for (const LinearTerm& t : row.terms) reduced[static_cast<std::size_t>(t.var)] -= yi * t.coef;
  }
  for (int j = 0; j < lp.num_variables(); ++j) {
    const auto ju = static_cast<std::size_t>(j);
    const double r = reduced[ju];
    if (std::abs(r) <= kDropTol) continue;
    const double at = r > 0 ? lp.lower()[ju] : lp.upper()[ju];
    if (!std::isfinite(at)) return -kInfinity;
    bound += r * at;
  }
  return bound;
}

std::string to_lp_format(const LinearProgram& lp) {
  std::ostringstream out;
  out << "\\ conncover linear program\nMinimize\n obj:";
  std::vector<LinearTerm> obj;
  for (int j = 0; j < lp.num_variables(); ++j) {
    if (lp.objective()[static_cast<std::size_t>(j)] != 0.0) obj.push_back({j, lp.objective()[static_cast<std::size_t>(j)]});
  }
  append_terms(out, obj);
  out << "\nSubject To\n";
  for (int i = 0; i < lp.num_constraints(); ++i) {
    const LinearConstraint& row = lp.constraint(i);
    out << " c" << i << ':';
    append_terms(out, row.terms);
    out << (row.relation == Relation::kLessEqual ? " <= " : row.relation == Relation::kGreaterEqual ? " >= " : " = ");
    append_number(out, row.rhs);
    out << '\n';
  }
  out << "Bounds\n";
  for (int j = 0; j < lp.num_variables(); ++j) {
    const double lo = lp.lower()[static_cast<std::size_t>(j)];
    const double hi = lp.upper()[static_cast<std::size_t>(j)];
    out << ' ';
    if (!std::isfinite(lo) && !std::isfinite(hi)) {
      out << 'x' << j << " free\n";
      continue;
    }
    if (std::isfinite(lo)) {
      append_number(out, lo);
    } else {
      out << "-inf";
    }
    out << " <= x" << j << " <= ";
    if (std::isfinite(hi)) {
      append_number(out, hi);
    } else {
      out << "+inf";
    }
    out << '\n';
  }
  out << "End\n";
  return out.str();
}

}  // namespace conncover
