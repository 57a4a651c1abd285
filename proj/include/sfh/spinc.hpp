#pragma once

// Relative Spin^c classes, the obstruction class epsilon(x,y), Maslov indices
// of domains, the grading modulus and relative gradings.

#include <optional>
#include <vector>

#include "sfh/diagram.hpp"
#include "sfh/domains.hpp"
#include "sfh/normal_form.hpp"

namespace sfh {

/// e(D) = sum over regions of coeff * (chi(r) - crossing corners(r) / 4).
Rational euler_measure(const Diagram& diagram, const Domain& domain);

/// Sum over the points of x of the mean of the four quadrant coefficients.
Rational point_measure(const Diagram& diagram, const Domain& domain, const Generator& x);

/// e(D) + n_x(D) + n_y(D), without checking D in D(x,y). Throws
/// std::logic_error if the total is not an integer.
Integer maslov_unchecked(const Diagram& diagram, const Domain& domain, const Generator& x, const Generator& y);

/// The Maslov index of D in D(x,y); nullopt ("undefined") when D is not in D(x,y).
std::optional<Integer> maslov_index(const Diagram& diagram, const Domain& domain, const Generator& x,
                                    const Generator& y);

/// An element of H_1(Sigma) / <alpha, beta curves>, in invariant-factor
/// coordinates. moduli[k] == 0 marks a free coordinate.
struct EpsilonClass {
  IntVector moduli;
  IntVector values;

  bool is_zero() const;
  EpsilonClass operator+(const EpsilonClass& other) const;
  EpsilonClass operator-() const;
  bool operator==(const EpsilonClass&) const = default;
};

std::string to_string(const EpsilonClass& epsilon);

/// Caches the Smith form of the presentation Z^E / (region boundaries + curves).
class EpsilonMap {
 public:
  explicit EpsilonMap(const Diagram& diagram);
  EpsilonClass operator()(const Generator& x, const Generator& y) const;

  /// Reduction of an arbitrary edge chain (per edge index).
  EpsilonClass reduce(const IntVector& chain) const;

  /// The 1-cycle a - b: arcs along the alpha curves from x to y minus arcs
  /// along the beta curves from x to y.
  IntVector difference_cycle(const Generator& x, const Generator& y) const;

 private:
  const Diagram* diagram_;
  SmithForm smith_;
  std::vector<std::vector<std::size_t>> alpha_edges_;
  std::vector<std::vector<std::size_t>> beta_edges_;
};

EpsilonClass epsilon_class(const Diagram& diagram, const Generator& x, const Generator& y);

struct SpincClass {
  int id = 0;
  std::vector<Generator> members;  // canonical order
  Integer modulus;                  // the grading modulus; 0 means Z-valued
  IntVector gradings;               // parallel to members; least member is 0
};

/// Partition by solvability of the defect system; ids 1, 2, ... in order of
/// least member. Gradings are left empty.
std::vector<SpincClass> spinc_partition(const DomainLattice& lattice, const std::vector<Generator>& generators);

/// gcd of mu(P) at (x,x) over the periodic basis (0 for an empty basis).
Integer d_modulus(const DomainLattice& lattice, const Generator& basepoint);

/// gr(y) = -mu(D) mod modulus for any D in D(first, y); first maps to 0.
IntVector relative_gradings(const DomainLattice& lattice, const std::vector<Generator>& members,
                            const Integer& modulus);

/// Partition plus modulus and gradings for every class.
std::vector<SpincClass> spinc_classes(const DomainLattice& lattice, const std::vector<Generator>& generators);

/// Reduces into [0, modulus) when modulus > 0.
Integer reduce_grading(const Integer& value, const Integer& modulus);

}  // namespace sfh
