#pragma once

// Exact two-phase simplex over the rationals (Bland's rule, dense tableau).
// Problems are in equality form: A x = b, x >= 0.

#include <optional>
#include <vector>

#include "sfh/normal_form.hpp"

namespace sfh {

using RatVector = std::vector<Rational>;

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
  LpStatus status = LpStatus::infeasible;
  Rational value;
  RatVector x;
};

/// A feasible region {x >= 0 : A x = b}. Phase one runs once at
/// construction; maximize() can then be called for any number of objectives.
class Polyhedron {
 public:
  Polyhedron(std::size_t variables, const std::vector<RatVector>& a, const RatVector& b);

  bool feasible() const { return feasible_; }
  std::size_t dimension() const { return variables_; }

  /// maximize objective . x over the region.
  LpResult maximize(const RatVector& objective) const;

 private:
  struct Tableau {
    std::vector<RatVector> rows;  // each row: coefficients then rhs
    std::vector<std::size_t> basis;
  };

  static void pivot(Tableau& t, std::size_t row, std::size_t col);
  // Optimizes the given reduced-cost row; returns false when unbounded.
  static bool optimize(Tableau& t, RatVector& cost, std::size_t usable_columns);

  std::size_t variables_ = 0;
  bool feasible_ = false;
  Tableau start_;
};

inline LpResult maximize(std::size_t variables, const std::vector<RatVector>& a, const RatVector& b,
                         const RatVector& objective) {
  return Polyhedron(variables, a, b).maximize(objective);
}

}  // namespace sfh
