#include <doctest.h>

#include <sstream>

#include "sfh/builders.hpp"
#include "sfh/shd.hpp"
#include "support.hpp"

using namespace sfh;

TEST_CASE("every catalog builder is valid and balanced across its sweep range") {
  for (const ExampleInfo& info : example_catalog()) {
    CAPTURE(info.name);
    std::vector<std::vector<int>> parameter_sets{info.sample};
    if (info.arity == 1)
      for (int p = info.minimum[0]; p <= std::min(info.maximum[0], info.minimum[0] + 5); ++p) parameter_sets.push_back({p});
    if (info.arity == 2)
      for (int g = 0; g <= 2; ++g)
        for (int b = 1; b <= 3; ++b) parameter_sets.push_back({g, b});
    for (const auto& params : parameter_sets) {
      CAPTURE(params.size());
      const Diagram d = info.build(params);
      CHECK(is_balanced(d).balanced);
      // Builders emit canonical cell tables.
      CHECK(parse(serialize(d)).same_cells(d));
    }
  }
}

TEST_CASE("corpus files are exactly the builder outputs they name") {
  for (const auto& [stem, d] : sfh::testing::corpus()) {
    CAPTURE(stem);
    std::istringstream words(d.metadata().name);
    std::string name;
    words >> name;
    std::vector<int> params;
    for (int p; words >> p;) params.push_back(p);
    const bool known = std::any_of(example_catalog().begin(), example_catalog().end(),
                                   [&](const ExampleInfo& info) { return info.name == name; });
    if (!known) continue;  // hand-written fixtures
    const Diagram built = build_example(name, params);
    CHECK(serialize(built) == serialize(d));
  }
}

TEST_CASE("builder shapes") {
  CHECK(product_diagram(1, 1).crossings().empty());
  CHECK(product_diagram(1, 1).regions().size() == 1);
  CHECK(euler_characteristic(product_diagram(2, 2)) == -4);
  CHECK(s1s2_diagram().crossings().size() == 2);
  CHECK(s1s2_diagram().regions().size() == 3);
  CHECK(torus_lens_diagram(5).crossings().size() == 5);
  CHECK(spheres_diagram(4).boundary_count() == 4);
  CHECK(spheres_diagram(4).d_alpha() == 3);
  CHECK(lens_knot_meridian(3).boundary_count() == 2);
  CHECK(hexagon_example().crossings().size() == 6);
  CHECK(enumerate_generators(nontaut_example()).empty());
}

TEST_CASE("build_example rejects bad requests") {
  CHECK_THROWS_AS(build_example("no_such_builder", {}), BuildError);
  const std::vector<int> too_many{1, 2, 3};
  CHECK_THROWS_AS(build_example("torus_lens_diagram", too_many), BuildError);
  const std::vector<int> zero{0};
  CHECK_THROWS_AS(build_example("spheres_diagram", zero), BuildError);
  const std::vector<int> no_boundary{1, 0};
  CHECK_THROWS_AS(build_example("product_diagram", no_boundary), BuildError);
}

TEST_CASE("catalog expectations are recorded in builder metadata") {
  for (const ExampleInfo& info : example_catalog()) {
    CAPTURE(info.name);
    const Diagram d = info.build(info.sample);
    const auto total = info.expected_total(info.sample);
    const auto& expectations = d.metadata().expectations;
    if (total) {
      REQUIRE(expectations.contains("total"));
      CHECK(expectations.at("total") == std::to_string(*total));
    } else {
      CHECK_FALSE(expectations.contains("total"));
    }
  }
}
