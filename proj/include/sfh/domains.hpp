#pragma once

// Domains: integer combinations of the interior regions (those disjoint from
// the boundary). A Domain is indexed by Diagram::interior_position, so
// boundary-touching regions implicitly carry 0.
//
// Defect convention: for D in D(x,y) the alpha part of the cellular boundary
// has endpoint defect x - y (head minus tail) and the beta part y - x. The two
// parts of a boundary sum to a cycle, which forces the opposite signs.

#include <optional>
#include <stdexcept>
#include <vector>

#include "sfh/diagram.hpp"
#include "sfh/normal_form.hpp"

namespace sfh {

using Domain = IntVector;

/// Per-region coefficients (indexed like Diagram::regions()).
IntVector region_coefficients(const Diagram& diagram, const Domain& domain);

/// Coefficient of the region at `region` index (0 for boundary regions).
Integer coefficient_at(const Diagram& diagram, const Domain& domain, std::size_t region);

struct BoundaryChain {
  // Per edge index: positive-side minus negative-side multiplicity.
  // Boundary edges are always 0 for domains.
  IntVector coefficients;
  std::vector<CurveKind> kinds;

  IntVector restricted(CurveKind kind) const;
};

BoundaryChain boundary_chain(const Diagram& diagram, const Domain& domain);

/// Endpoint defects of a domain's boundary: one alpha row and one beta row
/// for every vertex on a curve (crossings and markers), in vertex order.
IntVector defect(const Diagram& diagram, const Domain& domain);

/// The defect a domain in D(x,y) must have.
IntVector defect_target(const Diagram& diagram, const Generator& x, const Generator& y);

struct PeriodicDomain {
  Domain domain;
  // Boundary multiplicity of each whole curve: alpha[i-1], beta[j-1].
  IntVector alpha;
  IntVector beta;
};

struct Admissibility {
  bool admissible = true;
  // A nonzero nonnegative periodic domain when not admissible.
  std::optional<Domain> witness;
};

class NotAdmissible : public std::runtime_error {
 public:
  explicit NotAdmissible(Domain witness);
  const Domain& witness() const { return witness_; }

 private:
  Domain witness_;
};

struct PositiveSearch {
  std::vector<Domain> domains;  // sorted lexicographically
  // Certified coordinate bounds over {D >= 0 in D(x,y)}; empty when that set is empty.
  IntVector lower;
  IntVector upper;
  bool feasible = false;
};

/// Everything about the domain lattice of one diagram that does not depend
/// on the generators: the defect matrix, its echelon form and the periodic
/// lattice. Immutable after construction.
class DomainLattice {
 public:
  explicit DomainLattice(Diagram diagram);

  const Diagram& diagram() const { return diagram_; }
  std::size_t dimension() const { return diagram_.interior_regions().size(); }
  const IntMatrix& defect_matrix() const { return matrix_; }

  /// Hermite basis of the periodic lattice.
  const std::vector<PeriodicDomain>& periodic_basis() const { return periodic_; }
  std::size_t rank() const { return periodic_.size(); }

  const Admissibility& admissibility() const { return admissibility_; }

  /// Whether D(x,y) is nonempty.
  bool connected(const Generator& x, const Generator& y) const;

  /// One element of D(x,y), from the echelon form (not canonical).
  std::optional<Domain> particular_solution(const Generator& x, const Generator& y) const;

  bool contains(const Domain& domain, const Generator& x, const Generator& y) const;

  /// Every D >= 0 in D(x,y), optionally only those with Maslov index `maslov`.
  /// Throws NotAdmissible when the diagram is not admissible.
  PositiveSearch positive_domains(const Generator& x, const Generator& y,
                                  std::optional<long> maslov = std::nullopt) const;

 private:
  Diagram diagram_;
  IntMatrix matrix_;
  ColumnEchelon echelon_;
  std::vector<PeriodicDomain> periodic_;
  Admissibility admissibility_;
};

std::vector<PeriodicDomain> periodic_basis(const Diagram& diagram);
std::size_t h2_rank(const Diagram& diagram);
Admissibility is_admissible(const Diagram& diagram);

struct ConnectingDomain {
  // Lexicographically least nonnegative element when the diagram is
  // admissible and one exists; otherwise the echelon particular solution.
  Domain domain;
  std::vector<PeriodicDomain> periodic;
};

std::optional<ConnectingDomain> connecting_domain(const DomainLattice& lattice, const Generator& x,
                                                  const Generator& y);

std::vector<Domain> positive_connecting_domains(const DomainLattice& lattice, const Generator& x, const Generator& y,
                                                std::optional<long> maslov = std::nullopt);

/// "region:coefficient" pairs for the nonzero coefficients, by region id.
std::string format_domain(const Diagram& diagram, const Domain& domain);

}  // namespace sfh
