#pragma once

// Combinatorial balanced sutured Heegaard diagrams.
//
// A diagram is an oriented surface-with-boundary given as a generalized cell
// complex: vertices (transverse alpha/beta crossings and bivalent markers),
// labeled directed edges, and regions. A region is the closure of a component
// of the surface minus all curves; it carries a genus and one or more boundary
// cycles of signed edge references.
//
// Orientation convention: a region that traverses an edge forward lies on the
// edge's positive side. Every curve edge is traversed exactly twice (once in
// each direction), every boundary edge exactly once.

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace sfh {

enum class VertexKind { crossing, marker };
enum class CurveKind { alpha, beta, boundary };

struct Label {
  CurveKind kind = CurveKind::alpha;
  int index = 1;

  auto operator<=>(const Label&) const = default;
};

std::string to_string(const Label& label);

struct Vertex {
  int id = 0;
  VertexKind kind = VertexKind::crossing;

  bool operator==(const Vertex&) const = default;
};

struct Edge {
  int id = 0;
  Label label;
  int tail = 0;
  int head = 0;

  bool operator==(const Edge&) const = default;
};

struct EdgeRef {
  int edge = 0;
  bool forward = true;

  bool operator==(const EdgeRef&) const = default;
};

using Cycle = std::vector<EdgeRef>;

struct Region {
  int id = 0;
  int genus = 0;
  std::vector<Cycle> cycles;

  bool operator==(const Region&) const = default;
};

struct Metadata {
  std::string name;
  std::map<std::string, std::string> expectations;

  bool operator==(const Metadata&) const = default;
};

// Unvalidated input, as produced by the parser or a builder.
struct RawDiagram {
  std::vector<Vertex> vertices;
  std::vector<Edge> edges;
  std::vector<Region> regions;
  Metadata metadata;
};

struct Diagnostic {
  std::string code;
  std::string message;
  std::vector<int> ids;
};

class DiagramError : public std::runtime_error {
 public:
  explicit DiagramError(std::vector<Diagnostic> diagnostics);
  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }

 private:
  std::vector<Diagnostic> diagnostics_;
};

// One end of an edge (indices are positions in Diagram::edges()).
struct EdgeEnd {
  std::size_t edge = 0;
  bool head = false;

  bool operator==(const EdgeEnd&) const = default;
};

// A region's boundary passing through a vertex: it arrives along `incoming`
// and leaves along `outgoing`. At a crossing this is one quadrant.
struct Corner {
  std::size_t region = 0;
  std::size_t vertex = 0;
  EdgeEnd incoming;
  EdgeEnd outgoing;
};

class Diagram {
 public:
  const std::vector<Vertex>& vertices() const { return raw_.vertices; }
  const std::vector<Edge>& edges() const { return raw_.edges; }
  const std::vector<Region>& regions() const { return raw_.regions; }
  const Metadata& metadata() const { return raw_.metadata; }
  const RawDiagram& raw() const { return raw_; }

  Diagram with_metadata(Metadata metadata) const;

  // Id -> position lookups; throw std::out_of_range for unknown ids.
  std::size_t vertex_index(int id) const;
  std::size_t edge_index(int id) const;
  std::size_t region_index(int id) const;

  int d_alpha() const { return d_alpha_; }
  int d_beta() const { return d_beta_; }
  int boundary_count() const { return boundary_count_; }

  std::size_t positive_side(std::size_t edge) const { return positive_side_[edge]; }
  std::optional<std::size_t> negative_side(std::size_t edge) const { return negative_side_[edge]; }

  const std::vector<Corner>& corners() const { return corners_; }
  // Region index of every corner at a vertex (4 entries at a crossing).
  std::span<const std::size_t> quadrants(std::size_t vertex) const { return quadrants_[vertex]; }

  // Crossing vertex indices in id order.
  const std::vector<std::size_t>& crossings() const { return crossings_; }
  int alpha_of(std::size_t vertex) const { return alpha_of_[vertex]; }
  int beta_of(std::size_t vertex) const { return beta_of_[vertex]; }

  bool touches_boundary(std::size_t region) const { return touches_boundary_[region]; }
  // Regions disjoint from the boundary, in id order. Domains live here.
  const std::vector<std::size_t>& interior_regions() const { return interior_; }
  // Position of a region within interior_regions(), if interior.
  std::optional<std::size_t> interior_position(std::size_t region) const { return interior_position_[region]; }

  int region_euler_characteristic(std::size_t region) const;
  // Corners of the region at crossings (markers excluded), with multiplicity.
  int crossing_corner_count(std::size_t region) const { return crossing_corners_[region]; }

  // Edge indices of one curve in traversal order, starting at its least id.
  std::vector<std::size_t> curve_edges(const Label& label) const;

  std::size_t start_vertex(const EdgeRef& ref) const;
  std::size_t end_vertex(const EdgeRef& ref) const;

  // Structural equality; metadata is ignored.
  bool same_cells(const Diagram& other) const;

 private:
  friend Diagram validate(RawDiagram raw);

  RawDiagram raw_;
  std::map<int, std::size_t> vertex_lookup_;
  std::map<int, std::size_t> edge_lookup_;
  std::map<int, std::size_t> region_lookup_;
  int d_alpha_ = 0;
  int d_beta_ = 0;
  int boundary_count_ = 0;
  std::vector<std::size_t> positive_side_;
  std::vector<std::optional<std::size_t>> negative_side_;
  std::vector<Corner> corners_;
  std::vector<std::vector<std::size_t>> quadrants_;
  std::vector<std::size_t> crossings_;
  std::vector<int> alpha_of_;
  std::vector<int> beta_of_;
  std::vector<bool> touches_boundary_;
  std::vector<std::size_t> interior_;
  std::vector<std::optional<std::size_t>> interior_position_;
  std::vector<int> crossing_corners_;
};

/// All violated invariants of a raw diagram (empty when valid).
std::vector<Diagnostic> check(const RawDiagram& raw);

/// Validates and canonicalizes (entities sorted by id, cycles rotated to a
/// canonical start and sorted). Throws DiagramError listing every violation.
Diagram validate(RawDiagram raw);

/// V - E + sum over regions of (2 - 2 genus - #cycles).
int euler_characteristic(const Diagram& diagram);

struct BalanceReport {
  bool balanced = false;
  std::vector<std::string> diagnostics;
};

BalanceReport is_balanced(const Diagram& diagram);

/// A point of T_alpha ∩ T_beta: one crossing per alpha curve, using every beta
/// curve once. Stored as crossing vertex ids in ascending order.
struct Generator {
  std::vector<int> points;

  auto operator<=>(const Generator&) const = default;
};

std::string to_string(const Generator& generator);

/// Every generator, ordered lexicographically by sorted crossing ids.
std::vector<Generator> enumerate_generators(const Diagram& diagram);

}  // namespace sfh
