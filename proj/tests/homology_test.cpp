#include <doctest.h>

#include "oracles.hpp"
#include "sfh/builders.hpp"
#include "sfh/homology.hpp"
#include "sfh/moves.hpp"
#include "support.hpp"

using namespace sfh;
using sfh::testing::gen;

TEST_CASE("F2 matrix rank and product") {
  F2Matrix a(3, 3);
  a.set(0, 0, true);
  a.set(1, 1, true);
  a.set(2, 0, true);
  a.set(2, 1, true);
  CHECK(a.rank() == 2);
  CHECK(a.rank({0, 1}, {0, 1}) == 2);
  CHECK(a.rank({2}, {0, 1, 2}) == 1);
  CHECK((a * F2Matrix(3, 3)).is_zero());
  F2Matrix n(2, 2);
  n.set(0, 1, true);
  CHECK((n * n).is_zero());
  CHECK_FALSE(n.is_zero());
}

TEST_CASE("niceness") {
  CHECK(is_nice(s1s2_diagram()).nice);
  CHECK(is_nice(torus_grid()).nice);
  const NiceReport hexagon = is_nice(hexagon_example());
  CHECK_FALSE(hexagon.nice);
  CHECK_FALSE(hexagon.offending.empty());
  CHECK_FALSE(is_nice(stabilize(s1s2_diagram(), 1)).nice);
}

TEST_CASE("polygon shape test agrees with the gluing oracle on every 0/1 domain") {
  for (const auto& [name, d] : sfh::testing::corpus()) {
    const std::size_t m = d.interior_regions().size();
    if (m == 0 || m > 8) continue;
    CAPTURE(name);
    const auto generators = enumerate_generators(d);
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
      Domain domain(m);
      for (std::size_t k = 0; k < m; ++k) domain[k] = (mask >> k) & 1 ? 1 : 0;
      for (const Generator& x : generators)
        for (const Generator& y : generators) {
          if (!oracle::connects(d, domain, x, y)) continue;
          CAPTURE(mask);
          CHECK(is_empty_polygon(d, domain, x, y) == oracle::glued_empty_polygon(d, domain, x, y));
        }
    }
  }
}

TEST_CASE("rigid_count checks its preconditions") {
  const Diagram d = s1s2_diagram();
  CHECK(rigid_count(d, Domain{1, 0}, gen({2}), gen({1})) == 1);
  CHECK_THROWS_AS(rigid_count(d, Domain{1, 0}, gen({1}), gen({1})), std::invalid_argument);
  CHECK_THROWS_AS(rigid_count(d, Domain{1, -1}, gen({1}), gen({1})), std::invalid_argument);
}

TEST_CASE("boundary matrices square to zero and match the brute-force count") {
  for (const auto& [name, d] : sfh::testing::corpus()) {
    if (!is_admissible(d).admissible || !is_nice(d).nice) continue;
    CAPTURE(name);
    const DomainLattice lattice(d);
    for (const SpincClass& c : spinc_classes(lattice, enumerate_generators(d))) {
      const ChainComplex complex = build_complex(lattice, c);
      CHECK(verify_d_squared(complex));
      CHECK_FALSE(d_squared_failure(lattice, complex).has_value());
      if (d.interior_regions().size() <= 6) CHECK(complex.boundary == oracle::brute_force_boundary(d, c.members));
    }
  }
}

TEST_CASE("graded homology of small complexes") {
  const DomainLattice lattice(s1s2_diagram());
  const auto classes = spinc_classes(lattice, enumerate_generators(lattice.diagram()));
  const ChainComplex complex = build_complex(lattice, classes.front());
  // Two bigons from {1} to {2}: the differential vanishes mod 2.
  CHECK(complex.boundary.is_zero());
  const auto ranks = graded_ranks(complex);
  long total = 0;
  for (const auto& [g, r] : ranks) total += r;
  CHECK(total == 2);
}

TEST_CASE("pipeline errors") {
  CHECK_THROWS_AS(sfh::sfh(s1s2_disjoint()), NotAdmissible);
  CHECK_THROWS_AS(sfh::sfh(hexagon_example()), NotNice);
  const SfhResult stabilized = sfh::sfh(stabilize(s1s2_diagram(), 1));
  CHECK(stabilized.handles_removed == 1);
  CHECK(stabilized.total == 2);
}

TEST_CASE("results are independent of the worker count") {
  const Diagram d = spheres_diagram(4);
  setenv("SFH_THREADS", "1", 1);
  const SfhResult one = sfh::sfh(d);
  setenv("SFH_THREADS", "4", 1);
  const SfhResult four = sfh::sfh(d);
  unsetenv("SFH_THREADS");
  REQUIRE(one.classes.size() == four.classes.size());
  for (std::size_t k = 0; k < one.classes.size(); ++k) CHECK(one.classes[k].ranks == four.classes[k].ranks);
  CHECK(one.total == 8);
}

TEST_CASE("a differential that does not cancel") {
  const Diagram d = sfh::testing::corpus_diagram("annulus_four_crossings");
  const DomainLattice lattice(d);
  const auto classes = spinc_classes(lattice, enumerate_generators(d));
  REQUIRE(classes.size() == 1);
  const ChainComplex complex = build_complex(lattice, classes.front());
  // Members {1},{2},{3},{4}: 1 -> 2 + 4 and 3 -> 2 + 4.
  F2Matrix expected(4, 4);
  for (std::size_t x : {0, 2})
    for (std::size_t y : {1, 3}) expected.set(y, x, true);
  CHECK(complex.boundary == expected);
  CHECK(complex.boundary == oracle::brute_force_boundary(d, complex.generators));
  CHECK(sfh::sfh(d).total == 2);
}
