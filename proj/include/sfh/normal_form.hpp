#pragma once

// Integer matrices and the Hermite/Smith normal forms used for every lattice
// computation in the library. All arithmetic is exact (GMP).

#include <cstddef>
#include <optional>
#include <vector>

#include <gmpxx.h>

namespace sfh {

using Integer = mpz_class;
using Rational = mpq_class;
using IntVector = std::vector<Integer>;

class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_columns(std::size_t rows, const std::vector<IntVector>& columns);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Integer& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  IntVector row(std::size_t r) const;
  IntVector column(std::size_t c) const;
  IntVector operator*(const IntVector& v) const;
  IntMatrix operator*(const IntMatrix& other) const;
  IntMatrix transposed() const;

  void swap_columns(std::size_t a, std::size_t b);
  void swap_rows(std::size_t a, std::size_t b);
  // column[dst] += factor * column[src]
  void add_column_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  // row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, const Integer& factor);
  void negate_column(std::size_t c);
  void negate_row(std::size_t r);

  bool operator==(const IntMatrix&) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

/// Column echelon form A * U = H with U unimodular.
///
/// Columns [0, rank) of H are nonzero; column j has its first nonzero entry
/// (positive) at pivot_rows[j], strictly increasing in j. Columns [rank, cols)
/// are zero, so the matching columns of U form a basis of the integer kernel.
struct ColumnEchelon {
  IntMatrix echelon;
  IntMatrix transform;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;
};

ColumnEchelon column_echelon(const IntMatrix& a);

/// Basis of {x in Z^n : A x = 0}, in Hermite normal form (see hermite_basis).
std::vector<IntVector> integer_kernel(const IntMatrix& a);

/// One integer solution of A x = b, or nullopt if none exists over Z.
std::optional<IntVector> solve_integer(const ColumnEchelon& form, const IntVector& b);

/// Canonical basis of the lattice spanned by `vectors` (all of equal length):
/// row-style Hermite normal form, positive pivots, entries above each pivot
/// reduced into [0, pivot). Zero rows are dropped.
std::vector<IntVector> hermite_basis(const std::vector<IntVector>& vectors);

/// left * A * right = diag(diagonal) padded with zeros, where each nonzero
/// diagonal entry is positive and divides the next.
struct SmithForm {
  IntVector diagonal;
  IntMatrix left;
  IntMatrix right;
};

SmithForm smith_form(const IntMatrix& a);

Integer gcd_of(const IntVector& values);

}  // namespace sfh
