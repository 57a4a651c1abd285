#pragma once

// The chain complex over the two-element field on nice diagrams, where the
// Maslov index one discs are exactly the empty embedded bigons and
// rectangles, and its graded homology.

#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "sfh/diagram.hpp"
#include "sfh/domains.hpp"
#include "sfh/spinc.hpp"

namespace sfh {

struct NiceReport {
  bool nice = true;
  std::vector<int> offending;  // region ids
};

/// Every interior region is a disc with 2 or 4 crossing corners.
NiceReport is_nice(const Diagram& diagram);

/// Dense matrix over the two-element field.
class F2Matrix {
 public:
  F2Matrix() = default;
  F2Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), bits_(rows * cols, 0) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool get(std::size_t r, std::size_t c) const { return bits_[r * cols_ + c] != 0; }
  void set(std::size_t r, std::size_t c, bool v) { bits_[r * cols_ + c] = v ? 1 : 0; }
  void flip(std::size_t r, std::size_t c) { bits_[r * cols_ + c] ^= 1; }
  bool is_zero() const;

  F2Matrix operator*(const F2Matrix& other) const;
  bool operator==(const F2Matrix&) const = default;

  /// Rank of the submatrix on the given rows and columns.
  std::size_t rank(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const;
  std::size_t rank() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::uint8_t> bits_;
};

class NotNice : public std::runtime_error {
 public:
  explicit NotNice(std::vector<int> regions);
  const std::vector<int>& regions() const { return regions_; }

 private:
  std::vector<int> regions_;
};

class NotBalanced : public std::runtime_error {
 public:
  explicit NotBalanced(std::vector<std::string> diagnostics);
  const std::vector<std::string>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<std::string> diagnostics_;
};

/// Shape test: 0/1 coefficients whose support closure is an embedded disc
/// with 2 or 4 convex corners, exactly at the points where x and y differ,
/// and with no other point of x on its closure.
bool is_empty_polygon(const Diagram& diagram, const Domain& domain, const Generator& x, const Generator& y);

/// The mod 2 count of rigid discs in D. Requires a nice diagram, D >= 0,
/// D in D(x,y) and mu(D) = 1; throws std::invalid_argument otherwise.
int rigid_count(const Diagram& diagram, const Domain& domain, const Generator& x, const Generator& y);

struct ChainComplex {
  int class_id = 0;
  std::vector<Generator> generators;
  IntVector gradings;
  Integer modulus;
  F2Matrix boundary;  // entry (y, x) is the coefficient of y in the boundary of x
};

/// Column x, row y: number of rigid discs over all D >= 0 in D(x,y) with
/// mu(D) = 1, mod 2. Throws NotAdmissible or NotNice.
F2Matrix boundary_matrix(const DomainLattice& lattice, const SpincClass& spinc);

ChainComplex build_complex(const DomainLattice& lattice, const SpincClass& spinc);

bool verify_d_squared(const ChainComplex& complex);

struct DSquaredFailure {
  std::size_t x = 0;  // generator positions within the complex
  std::size_t z = 0;
  std::vector<Domain> maslov_two;  // all D >= 0 in D(x,z) with mu = 2
};

/// nullopt when the boundary squares to zero.
std::optional<DSquaredFailure> d_squared_failure(const DomainLattice& lattice, const ChainComplex& complex);

/// Rank of homology in each grading value (residues mod the modulus).
std::map<Integer, long> graded_ranks(const ChainComplex& complex);

struct ClassResult {
  int id = 0;
  Integer modulus;
  std::vector<Generator> generators;
  IntVector gradings;
  std::map<Integer, long> ranks;
  long total = 0;
};

struct SfhResult {
  std::vector<ClassResult> classes;
  long total = 0;
  bool admissible = true;
  bool nice = true;
  std::size_t generator_count = 0;
  std::size_t periodic_rank = 0;
  int handles_removed = 0;
};

/// Full pipeline. Throws NotBalanced, NotAdmissible or NotNice. A diagram
/// that is not nice only because of handles added by stabilization is
/// computed after those handles are removed.
SfhResult sfh(const Diagram& diagram);

}  // namespace sfh
