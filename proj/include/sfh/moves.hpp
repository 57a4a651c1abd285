#pragma once

// Diagram moves: stabilization and its inverse, cutting along a product arc,
// disjoint union, and small cell edits (markers, punctures).

#include <stdexcept>
#include <utility>
#include <vector>

#include "sfh/diagram.hpp"

namespace sfh {

class MoveError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Adds a handle inside the region carrying new curves alpha_{d+1} and
/// beta_{d+1} that meet once at a new crossing. The region gains the cycle
/// [+a +b -a -b]; chi drops by 2.
Diagram stabilize(const Diagram& diagram, int region_id);

/// Removes every handle of the form stabilize() creates: a crossing whose
/// alpha and beta curves are single loops bounding one 4-edge cycle of a
/// region. Returns the diagram and the number of handles removed.
std::pair<Diagram, int> remove_trivial_handles(const Diagram& diagram);

/// An arc in a region joining the midpoints of two boundary edges.
///
/// If the edges lie on different cycles the two boundary circles merge. If
/// they lie on one cycle the arc either separates the region (piece B keeps
/// `moved_cycles`, indices into the region's cycles, and `moved_genus`) or,
/// when `separating` is false, cuts through a handle and lowers the genus.
struct ProductArc {
  int region = 0;
  int first_edge = 0;
  int second_edge = 0;
  bool separating = true;
  std::vector<std::size_t> moved_cycles;
  int moved_genus = 0;
};

/// Cuts the surface along the arc. Curves and interior regions are
/// untouched. Throws MoveError for an invalid arc.
Diagram cut_product_arc(const Diagram& diagram, const ProductArc& arc);

/// One arc per pair of boundary edges sharing a region: merging arcs, the
/// separating arc that moves nothing, and (genus > 0) the non-separating arc.
std::vector<ProductArc> legal_product_arcs(const Diagram& diagram);

/// Ids of b are shifted past those of a; curve and boundary indices likewise.
Diagram disjoint_union(const Diagram& a, const Diagram& b);

/// Splits an edge by a new marker.
Diagram insert_marker(const Diagram& diagram, int edge_id);

/// Adds a new boundary circle inside the region.
Diagram puncture(const Diagram& diagram, int region_id);

}  // namespace sfh
