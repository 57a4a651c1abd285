#include <doctest.h>

#include <random>

#include "sfh/normal_form.hpp"

using namespace sfh;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols, int spread) {
  std::uniform_int_distribution<int> pick(-spread, spread);
  IntMatrix a(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a(r, c) = pick(rng);
  return a;
}

bool is_zero(const IntVector& v) {
  return std::all_of(v.begin(), v.end(), [](const Integer& x) { return x == 0; });
}

}  // namespace

TEST_CASE("column echelon transform reproduces the echelon form") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    const IntMatrix a = random_matrix(rng, 1 + trial % 5, 1 + trial % 7, 4);
    const ColumnEchelon form = column_echelon(a);
    CHECK(a * form.transform == form.echelon);
    for (std::size_t j = 0; j < form.rank; ++j) {
      CHECK(form.echelon(form.pivot_rows[j], j) > 0);
      for (std::size_t r = 0; r < form.pivot_rows[j]; ++r) CHECK(form.echelon(r, j) == 0);
      if (j > 0) CHECK(form.pivot_rows[j] > form.pivot_rows[j - 1]);
    }
    for (std::size_t j = form.rank; j < a.cols(); ++j) CHECK(is_zero(form.echelon.column(j)));
  }
}

TEST_CASE("integer kernel vectors are annihilated and saturated") {
  IntMatrix a(1, 3);
  a(0, 0) = 2;
  a(0, 1) = 4;
  a(0, 2) = 6;
  const auto kernel = integer_kernel(a);
  REQUIRE(kernel.size() == 2);
  for (const auto& v : kernel) CHECK(is_zero(a * v));
  // (1, 1, -1) lies in the kernel; it must be an integer combination.
  const IntMatrix basis = IntMatrix::from_columns(3, kernel);
  const auto coords = solve_integer(column_echelon(basis), IntVector{1, 1, -1});
  CHECK(coords.has_value());
}

TEST_CASE("random kernels match rank nullity") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const IntMatrix a = random_matrix(rng, 3, 6, 3);
    const auto kernel = integer_kernel(a);
    CHECK(kernel.size() + column_echelon(a).rank == a.cols());
    for (const auto& v : kernel) CHECK(is_zero(a * v));
  }
}

TEST_CASE("solve_integer distinguishes rational from integral solutions") {
  IntMatrix a(1, 1);
  a(0, 0) = 2;
  const ColumnEchelon form = column_echelon(a);
  CHECK_FALSE(solve_integer(form, IntVector{3}).has_value());
  const auto x = solve_integer(form, IntVector{4});
  REQUIRE(x.has_value());
  CHECK((*x)[0] == 2);
}

TEST_CASE("hermite basis is canonical for the spanned lattice") {
  const std::vector<IntVector> one{{2, 0, 1}, {0, 3, 1}};
  const std::vector<IntVector> two{{2, 3, 2}, {-2, 0, -1}, {4, 6, 4}};
  CHECK(hermite_basis(one) == hermite_basis(two));
  const auto h = hermite_basis(one);
  REQUIRE(h.size() == 2);
  CHECK(h[0][0] > 0);
  CHECK(h[1][0] == 0);
}

TEST_CASE("smith form is a unimodular diagonalization with divisibility") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 40; ++trial) {
    const IntMatrix a = random_matrix(rng, 2 + trial % 3, 2 + trial % 4, 5);
    const SmithForm s = smith_form(a);
    const IntMatrix d = s.left * a * s.right;
    for (std::size_t r = 0; r < d.rows(); ++r)
      for (std::size_t c = 0; c < d.cols(); ++c) {
        if (r == c && r < s.diagonal.size()) {
          CHECK(d(r, c) == s.diagonal[r]);
        } else {
          CHECK(d(r, c) == 0);
        }
      }
    for (std::size_t k = 0; k + 1 < s.diagonal.size(); ++k) {
      CHECK(s.diagonal[k] > 0);
      if (s.diagonal[k + 1] != 0) CHECK(s.diagonal[k + 1] % s.diagonal[k] == 0);
    }
  }
}

TEST_CASE("gcd_of") {
  CHECK(gcd_of({}) == 0);
  CHECK(gcd_of({0, 0}) == 0);
  CHECK(gcd_of({-4, 6}) == 2);
}
