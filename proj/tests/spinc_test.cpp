#include <doctest.h>

#include "oracles.hpp"
#include "sfh/builders.hpp"
#include "sfh/spinc.hpp"
#include "support.hpp"

using namespace sfh;
using sfh::testing::gen;

TEST_CASE("Maslov indices of bigons and periodic domains") {
  const Diagram d = s1s2_diagram();
  const Domain b1{1, 0};
  const Domain b2{0, 1};
  // Both bigons run from {2} to {1} under the defect convention.
  CHECK(maslov_index(d, b1, gen({2}), gen({1})) == Integer(1));
  CHECK(maslov_index(d, b2, gen({2}), gen({1})) == Integer(1));
  CHECK(maslov_index(d, Domain{1, -1}, gen({1}), gen({1})) == Integer(0));
  CHECK_FALSE(maslov_index(d, b1, gen({1}), gen({1})).has_value());
  CHECK(euler_measure(d, b1) == Rational(1, 2));
  CHECK(point_measure(d, b1, gen({1})) == Rational(1, 4));
}

TEST_CASE("epsilon is antisymmetric and additive on the corpus") {
  for (const auto& [name, d] : sfh::testing::corpus()) {
    CAPTURE(name);
    const auto generators = enumerate_generators(d);
    if (generators.size() > 12) continue;
    const EpsilonMap eps(d);
    for (const Generator& x : generators) {
      CHECK(eps(x, x).is_zero());
      for (const Generator& y : generators) {
        CHECK(eps(y, x) == -eps(x, y));
        for (const Generator& z : generators) CHECK(eps(x, y) + eps(y, z) == eps(x, z));
      }
    }
  }
}

TEST_CASE("epsilon vanishes exactly on connected pairs") {
  for (const auto& [name, d] : sfh::testing::corpus()) {
    CAPTURE(name);
    const DomainLattice lattice(d);
    const auto generators = enumerate_generators(d);
    const EpsilonMap eps(d);
    for (const Generator& x : generators)
      for (const Generator& y : generators) CHECK(eps(x, y).is_zero() == lattice.connected(x, y));
  }
}

TEST_CASE("class structure of standard examples") {
  {
    const DomainLattice lattice(s1s2_diagram());
    const auto classes = spinc_classes(lattice, enumerate_generators(lattice.diagram()));
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].id == 1);
    CHECK(classes[0].modulus == 0);
    CHECK(classes[0].gradings == IntVector{0, 1});
  }
  {
    const DomainLattice lattice(torus_lens_diagram(3));
    const auto classes = spinc_classes(lattice, enumerate_generators(lattice.diagram()));
    CHECK(classes.size() == 3);
    for (const auto& c : classes) CHECK(c.members.size() == 1);
  }
  {
    const DomainLattice lattice(torus_grid());
    const auto classes = spinc_classes(lattice, enumerate_generators(lattice.diagram()));
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].members.size() == 2);
  }
}

TEST_CASE("reduce_grading") {
  CHECK(reduce_grading(-1, 3) == 2);
  CHECK(reduce_grading(7, 3) == 1);
  CHECK(reduce_grading(-5, 0) == -5);
}
