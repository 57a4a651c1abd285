#include "sfh/simplex.hpp"

#include <cassert>
#include <utility>

namespace sfh {

Polyhedron::Polyhedron(std::size_t variables, const std::vector<RatVector>& a, const RatVector& b)
    : variables_(variables) {
  assert(a.size() == b.size());
  const std::size_t m = a.size();
  const std::size_t n = variables_;

  Tableau t;
  t.rows.assign(m, RatVector(n + m + 1));
  t.basis.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    assert(a[i].size() == n);
    const bool flip = sgn(b[i]) < 0;
    for (std::size_t j = 0; j < n; ++j) t.rows[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
    t.rows[i][n + i] = 1;
    t.rows[i][n + m] = flip ? Rational(-b[i]) : b[i];
    t.basis[i] = n + i;
  }

  // Phase one: maximize -(sum of artificials).
  RatVector cost(n + m + 1);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) cost[j] += t.rows[i][j];
    cost[n + m] += t.rows[i][n + m];
  }
  const bool bounded = optimize(t, cost, n + m);
  assert(bounded);
  (void)bounded;
  if (sgn(cost[n + m]) != 0) {
    feasible_ = false;
    return;
  }
  feasible_ = true;

  // Drive remaining artificials out of the basis; drop redundant rows.
  for (std::size_t i = 0; i < t.rows.size();) {
    if (t.basis[i] < n) {
      ++i;
      continue;
    }
    std::size_t col = n;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(t.rows[i][j]) != 0) {
        col = j;
        break;
      }
    }
    if (col == n) {
      t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
      t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
      continue;
    }
    pivot(t, i, col);
    ++i;
  }

  start_.basis = t.basis;
  start_.rows.reserve(t.rows.size());
  for (auto& row : t.rows) {
    RatVector trimmed(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(n));
    trimmed.push_back(row[n + m]);
    start_.rows.push_back(std::move(trimmed));
  }
}

void Polyhedron::pivot(Tableau& t, std::size_t row, std::size_t col) {
  RatVector& p = t.rows[row];
  const Rational inv = 1 / p[col];
  for (auto& v : p) {
    if (sgn(v) != 0) v *= inv;
  }
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (i == row) continue;
    RatVector& r = t.rows[i];
    if (sgn(r[col]) == 0) continue;
    const Rational f = r[col];
    for (std::size_t j = 0; j < r.size(); ++j) {
      if (sgn(p[j]) != 0) r[j] -= f * p[j];
    }
  }
  t.basis[row] = col;
}

// `cost` holds the reduced costs of a maximization; cost.back() is minus the
// current objective value.
bool Polyhedron::optimize(Tableau& t, RatVector& cost, std::size_t usable_columns) {
  const std::size_t rhs = cost.size() - 1;
  while (true) {
    std::size_t enter = usable_columns;
    for (std::size_t j = 0; j < usable_columns; ++j) {
      if (sgn(cost[j]) > 0) {
        enter = j;
        break;
      }
    }
    if (enter == usable_columns) return true;

    std::size_t leave = t.rows.size();
    Rational best_ratio;
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
      if (sgn(t.rows[i][enter]) <= 0) continue;
      Rational ratio = t.rows[i][rhs] / t.rows[i][enter];
      if (leave == t.rows.size() || ratio < best_ratio ||
          (ratio == best_ratio && t.basis[i] < t.basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == t.rows.size()) return false;

    pivot(t, leave, enter);
    const Rational f = cost[enter];
    const RatVector& p = t.rows[leave];
    for (std::size_t j = 0; j < cost.size(); ++j) {
      if (sgn(p[j]) != 0) cost[j] -= f * p[j];
    }
  }
}

LpResult Polyhedron::maximize(const RatVector& objective) const {
  assert(objective.size() == variables_);
  LpResult result;
  if (!feasible_) {
    result.status = LpStatus::infeasible;
    return result;
  }
  Tableau t = start_;
  const std::size_t n = variables_;
  RatVector cost(n + 1);
  for (std::size_t j = 0; j < n; ++j) cost[j] = objective[j];
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    const Rational& c = objective[t.basis[i]];
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j <= n; ++j) {
      if (sgn(t.rows[i][j]) != 0) cost[j] -= c * t.rows[i][j];
    }
  }
  if (!optimize(t, cost, n)) {
    result.status = LpStatus::unbounded;
    return result;
  }
  result.status = LpStatus::optimal;
  result.x.assign(n, Rational(0));
  for (std::size_t i = 0; i < t.rows.size(); ++i) result.x[t.basis[i]] = t.rows[i][n];
  result.value = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (sgn(objective[j]) != 0) result.value += objective[j] * result.x[j];
  }
  return result;
}

}  // namespace sfh
