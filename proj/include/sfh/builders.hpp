#pragma once

// Built-in example diagrams, each given by an explicit cell table.

#include <functional>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sfh/diagram.hpp"

namespace sfh {

class BuildError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Genus-g surface with b >= 1 boundary circles and no curves.
Diagram product_diagram(int genus, int boundary);
// Torus minus a disc; alpha and beta meet in p same-sign crossings.
Diagram torus_lens_diagram(int p);
// Torus minus a disc; isotopic alpha and beta meeting twice (two bigons).
Diagram s1s2_diagram();
// As s1s2_diagram but with disjoint curves; inadmissible.
Diagram s1s2_disjoint();
// Annulus with isotopic cores alpha and beta meeting twice.
Diagram annulus_s3_2();
// Sphere minus n discs; curve pair i is parallel to boundary circle i < n.
Diagram spheres_diagram(int n);
// torus_lens_diagram(k) with two holes in adjacent regions.
Diagram lens_knot_meridian(int k);
// Torus minus two discs; disjoint parallel alpha and beta, separated by the holes.
Diagram nontaut_example();
// Sphere with one alpha and one beta meeting six times; one interior hexagon.
Diagram hexagon_example();
// Punctured 2x2 grid on the torus; two embedded rectangles.
Diagram torus_grid();

struct ExampleInfo {
  std::string name;
  std::string usage;  // parameter synopsis, e.g. "<genus> <boundary>"
  std::string summary;
  std::size_t arity = 0;
  std::vector<int> minimum;  // per parameter
  std::vector<int> maximum;  // per parameter (inclusive)
  std::vector<int> sample;   // parameters used by corpus sweeps
  // Expected total rank, or nullopt where no value is computed (inadmissible
  // or not nice).
  std::function<std::optional<long>(std::span<const int>)> expected_total;
  std::function<Diagram(std::span<const int>)> build;
};

const std::vector<ExampleInfo>& example_catalog();

/// Throws BuildError for unknown names, wrong arity or out-of-range parameters.
Diagram build_example(std::string_view name, std::span<const int> params);

}  // namespace sfh
