#include <doctest.h>

#include "sfh/simplex.hpp"

using namespace sfh;

TEST_CASE("bounded maximization on a box") {
  // x + s = 1, y + t = 2, maximize x + y.
  const std::vector<RatVector> a{{1, 0, 1, 0}, {0, 1, 0, 1}};
  const LpResult r = maximize(4, a, RatVector{1, 2}, RatVector{1, 1, 0, 0});
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value == 3);
  CHECK(r.x[0] == 1);
  CHECK(r.x[1] == 2);
}

TEST_CASE("infeasible and unbounded problems") {
  CHECK(maximize(1, {{1}}, RatVector{-1}, RatVector{1}).status == LpStatus::infeasible);
  CHECK(maximize(2, {{1, -1}}, RatVector{0}, RatVector{1, 0}).status == LpStatus::unbounded);
}

TEST_CASE("no constraints keeps the variable count") {
  const Polyhedron p(3, {}, {});
  CHECK(p.feasible());
  CHECK(p.dimension() == 3);
  CHECK(p.maximize(RatVector{0, 0, 0}).status == LpStatus::optimal);
  CHECK(p.maximize(RatVector{0, 1, 0}).status == LpStatus::unbounded);
}

TEST_CASE("exact rational optimum") {
  // 3x + 2y + s = 1, maximize x + y: optimum 1/2 at y = 1/2.
  const LpResult r = maximize(3, {{3, 2, 1}}, RatVector{1}, RatVector{1, 1, 0});
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value == Rational(1, 2));
}

TEST_CASE("degenerate redundant rows") {
  const std::vector<RatVector> a{{1, 1}, {2, 2}};
  const LpResult r = maximize(2, a, RatVector{1, 2}, RatVector{1, 0});
  REQUIRE(r.status == LpStatus::optimal);
  CHECK(r.value == 1);
}
