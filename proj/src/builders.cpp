#include "sfh/builders.hpp"

#include <algorithm>

namespace sfh {

namespace {

// Accumulates cells with sequential ids starting at 1.
class CellTable {
 public:
  int vertex(VertexKind kind) {
    const int id = static_cast<int>(raw_.vertices.size()) + 1;
    raw_.vertices.push_back(Vertex{id, kind});
    return id;
  }
  int crossing() { return vertex(VertexKind::crossing); }

  int edge(CurveKind kind, int index, int tail, int head) {
    const int id = static_cast<int>(raw_.edges.size()) + 1;
    raw_.edges.push_back(Edge{id, Label{kind, index}, tail, head});
    return id;
  }
  int alpha(int i, int tail, int head) { return edge(CurveKind::alpha, i, tail, head); }
  int beta(int j, int tail, int head) { return edge(CurveKind::beta, j, tail, head); }

  // A curve with no crossings: one marker and one loop edge.
  int loop(CurveKind kind, int index) {
    const int m = vertex(VertexKind::marker);
    return edge(kind, index, m, m);
  }

  // A new boundary circle; returns the cycle bounding it from the region side.
  Cycle hole() { return Cycle{fwd(loop(CurveKind::boundary, ++boundary_circles_))}; }

  int region(int genus, std::vector<Cycle> cycles) {
    const int id = static_cast<int>(raw_.regions.size()) + 1;
    raw_.regions.push_back(Region{id, genus, std::move(cycles)});
    return id;
  }

  Diagram finish(std::string name, std::optional<long> total) {
    raw_.metadata.name = std::move(name);
    if (total) raw_.metadata.expectations["total"] = std::to_string(*total);
    return validate(std::move(raw_));
  }

  static EdgeRef fwd(int e) { return EdgeRef{e, true}; }
  static EdgeRef rev(int e) { return EdgeRef{e, false}; }

 private:
  RawDiagram raw_;
  int boundary_circles_ = 0;
};

using C = CellTable;

void require(bool ok, const std::string& message) {
  if (!ok) throw BuildError(message);
}

// Lens-type torus: crossings c_k, arcs a_k, b_k : c_k -> c_{k+1} (indices mod
// p). Square R_j is bounded by +a_j +b_{j+1} -a_{j+1} -b_j, so every a_k is
// used forward by R_k and backward by R_{k-1}, and every b_k forward by
// R_{k-1} and backward by R_k. V - E + F = p - 2p + p = 0 (a torus).
// `holes[j]` punctures R_j that many times.
Diagram lens_like(int p, const std::vector<int>& holes, std::string name, std::optional<long> total) {
  C t;
  std::vector<int> c(p), a(p), b(p);
  for (int k = 0; k < p; ++k) c[k] = t.crossing();
  for (int k = 0; k < p; ++k) a[k] = t.alpha(1, c[k], c[(k + 1) % p]);
  for (int k = 0; k < p; ++k) b[k] = t.beta(1, c[k], c[(k + 1) % p]);
  std::vector<std::vector<Cycle>> cycles(p);
  for (int j = 0; j < p; ++j) {
    const int n = (j + 1) % p;
    cycles[j].push_back({C::fwd(a[j]), C::fwd(b[n]), C::rev(a[n]), C::rev(b[j])});
    for (int h = 0; h < holes[j]; ++h) cycles[j].push_back(t.hole());
  }
  for (int j = 0; j < p; ++j) t.region(0, std::move(cycles[j]));
  return t.finish(std::move(name), total);
}

// Two crossings v1, v2 with a1, b1 : v1 -> v2 and a2, b2 : v2 -> v1. The
// bigons are [+a1 -b1] and [+b2 -a2]; the leftover sides of the curves bound
// the two cycles [+b1 +a2] and [-b2 -a1] of whatever lies outside.
struct BigonPair {
  int v1 = 0, v2 = 0, a1 = 0, a2 = 0, b1 = 0, b2 = 0;
  Cycle inner, outer;
};

BigonPair bigon_pair(C& t, int index) {
  BigonPair p;
  p.v1 = t.crossing();
  p.v2 = t.crossing();
  p.a1 = t.alpha(index, p.v1, p.v2);
  p.a2 = t.alpha(index, p.v2, p.v1);
  p.b1 = t.beta(index, p.v1, p.v2);
  p.b2 = t.beta(index, p.v2, p.v1);
  t.region(0, {{C::fwd(p.a1), C::rev(p.b1)}});
  t.region(0, {{C::fwd(p.b2), C::rev(p.a2)}});
  p.inner = {C::fwd(p.b1), C::fwd(p.a2)};
  p.outer = {C::rev(p.b2), C::rev(p.a1)};
  return p;
}

std::string with_params(std::string_view name, std::initializer_list<int> params) {
  std::string out(name);
  for (int p : params) out += ' ' + std::to_string(p);
  return out;
}

}  // namespace

Diagram product_diagram(int genus, int boundary) {
  require(genus >= 0, "product_diagram: genus must be >= 0");
  require(boundary >= 1, "product_diagram: boundary count must be >= 1");
  C t;
  std::vector<Cycle> cycles;
  for (int c = 0; c < boundary; ++c) cycles.push_back(t.hole());
  t.region(genus, std::move(cycles));
  return t.finish(with_params("product_diagram", {genus, boundary}), 1);
}

Diagram torus_lens_diagram(int p) {
  require(p >= 1, "torus_lens_diagram: p must be >= 1");
  std::vector<int> holes(p, 0);
  holes[0] = 1;
  return lens_like(p, holes, with_params("torus_lens_diagram", {p}), p);
}

// Torus minus a disc: the complement of the two bigons is a pair of pants
// (genus 0, cycles [+b1 +a2], [-b2 -a1] and the boundary). V - E = 3 - 5,
// regions 1 + 1 - 1, so chi = -1.
Diagram s1s2_diagram() {
  C t;
  const BigonPair p = bigon_pair(t, 1);
  t.region(0, {p.inner, p.outer, t.hole()});
  return t.finish("s1s2_diagram", 2);
}

// The annulus between the curves is interior and is a nonnegative periodic
// domain (its boundary is alpha - beta).
Diagram s1s2_disjoint() {
  C t;
  const int ea = t.loop(CurveKind::alpha, 1);
  const int eb = t.loop(CurveKind::beta, 1);
  t.region(0, {{C::fwd(ea)}, {C::rev(eb)}});
  t.region(0, {{C::fwd(eb)}, {C::rev(ea)}, t.hole()});
  return t.finish("s1s2_disjoint", std::nullopt);
}

// Annulus: the outer sides of the curve pair face the two boundary circles.
Diagram annulus_s3_2() {
  C t;
  const BigonPair p = bigon_pair(t, 1);
  t.region(0, {p.inner, t.hole()});
  t.region(0, {p.outer, t.hole()});
  return t.finish("annulus_s3_2", 2);
}

// For i < n the curve pair i separates boundary circle i (inside an annulus
// region) from a central planar region that also carries boundary circle n.
Diagram spheres_diagram(int n) {
  require(n >= 1, "spheres_diagram: n must be >= 1");
  require(n <= 30, "spheres_diagram: n must be <= 30");
  C t;
  std::vector<Cycle> central;
  for (int i = 1; i < n; ++i) {
    const BigonPair p = bigon_pair(t, i);
    t.region(0, {p.inner, t.hole()});
    central.push_back(p.outer);
  }
  central.push_back(t.hole());
  t.region(0, std::move(central));
  return t.finish(with_params("spheres_diagram", {n}), 1L << (n - 1));
}

Diagram lens_knot_meridian(int k) {
  require(k >= 1, "lens_knot_meridian: k must be >= 1");
  std::vector<int> holes(k, 0);
  ++holes[0];
  ++holes[k > 1 ? 1 : 0];
  return lens_like(k, holes, with_params("lens_knot_meridian", {k}), k);
}

Diagram nontaut_example() {
  C t;
  const int ea = t.loop(CurveKind::alpha, 1);
  const int eb = t.loop(CurveKind::beta, 1);
  t.region(0, {{C::fwd(ea)}, {C::rev(eb)}, t.hole()});
  t.region(0, {{C::fwd(eb)}, {C::rev(ea)}, t.hole()});
  return t.finish("nontaut_example", 0);
}

// Crossings c_0..c_5 on one alpha and one beta, both running c_k -> c_{k+1}.
// The hexagon H alternates b_even and a_odd; bigons P_k = [+a_k -b_k] (k even)
// and Q_k = [+b_k -a_k] (k odd); the outer hexagon O takes the rest. Holes in
// O, P_0 and Q_1 leave H, P_2, P_4, Q_3, Q_5 interior. Sphere (chi 2) minus
// three discs: chi = -1.
Diagram hexagon_example() {
  C t;
  std::vector<int> c(6), a(6), b(6);
  for (int k = 0; k < 6; ++k) c[k] = t.crossing();
  for (int k = 0; k < 6; ++k) a[k] = t.alpha(1, c[k], c[(k + 1) % 6]);
  for (int k = 0; k < 6; ++k) b[k] = t.beta(1, c[k], c[(k + 1) % 6]);
  Cycle hexagon, outer;
  for (int k = 0; k < 6; ++k) hexagon.push_back(C::fwd(k % 2 == 0 ? b[k] : a[k]));
  for (int k = 5; k >= 0; --k) outer.push_back(C::rev(k % 2 == 0 ? a[k] : b[k]));
  t.region(0, {hexagon});
  t.region(0, {outer, t.hole()});
  for (int k = 0; k < 6; ++k) {
    std::vector<Cycle> cycles;
    if (k % 2 == 0) {
      cycles.push_back({C::fwd(a[k]), C::rev(b[k])});
    } else {
      cycles.push_back({C::fwd(b[k]), C::rev(a[k])});
    }
    if (k <= 1) cycles.push_back(t.hole());
    t.region(0, std::move(cycles));
  }
  return t.finish("hexagon_example", std::nullopt);
}

// Vertices v(i,j), i,j in Z/2 (ids v00, v10, v01, v11). h(i,j) : v(i,j) ->
// v(i+1,j) lies on alpha_{j+1}; w(i,j) : v(i,j) -> v(i,j+1) on beta_{i+1}.
// Square S(i,j) = [+h(i,j) +w(i+1,j) -h(i,j+1) -w(i,j)]. Holes in S00 and
// S11 leave S10 and S01, two rectangles from {v00,v11} to {v10,v01}.
Diagram torus_grid() {
  C t;
  int v[2][2], h[2][2], w[2][2];
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 2; ++i) v[i][j] = t.crossing();
  for (int j = 0; j < 2; ++j)
    for (int i = 0; i < 2; ++i) h[i][j] = t.alpha(j + 1, v[i][j], v[1 - i][j]);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) w[i][j] = t.beta(i + 1, v[i][j], v[i][1 - j]);
  for (int j = 0; j < 2; ++j) {
    for (int i = 0; i < 2; ++i) {
      std::vector<Cycle> cycles{{C::fwd(h[i][j]), C::fwd(w[1 - i][j]), C::rev(h[i][1 - j]), C::rev(w[i][j])}};
      if (i == j) cycles.push_back(t.hole());
      t.region(0, std::move(cycles));
    }
  }
  return t.finish("torus_grid", 2);
}

const std::vector<ExampleInfo>& example_catalog() {
  using P = std::span<const int>;
  const auto fixed = [](long total) { return [total](P) -> std::optional<long> { return total; }; };
  const auto none = [](P) -> std::optional<long> { return std::nullopt; };
  static const std::vector<ExampleInfo> catalog{
      {"product_diagram", "<genus> <boundary>", "product sutured manifold on a genus-g surface with b boundary circles",
       2, {0, 1}, {8, 16}, {1, 2}, fixed(1),
       [](P p) { return product_diagram(p[0], p[1]); }},
      {"torus_lens_diagram", "<p>", "L(p,1) minus a ball; total rank p", 1, {1}, {64}, {3}, [](P p) {
         return std::optional<long>(p[0]);
       },
       [](P p) { return torus_lens_diagram(p[0]); }},
      {"s1s2_diagram", "", "S1 x S2 minus a ball; total rank 2", 0, {}, {}, {}, fixed(2),
       [](P) { return s1s2_diagram(); }},
      {"s1s2_disjoint", "", "S1 x S2 diagram with disjoint curves; inadmissible", 0, {}, {}, {}, none,
       [](P) { return s1s2_disjoint(); }},
      {"annulus_s3_2", "", "S3 minus two balls; total rank 2", 0, {}, {}, {}, fixed(2),
       [](P) { return annulus_s3_2(); }},
      {"spheres_diagram", "<n>", "S3 minus n balls; total rank 2^(n-1)", 1, {1}, {30}, {3}, [](P p) {
         return std::optional<long>(1L << (p[0] - 1));
       },
       [](P p) { return spheres_diagram(p[0]); }},
      {"lens_knot_meridian", "<k>", "meridian complement in L(k,1), reduced twist-knot surface; total rank k", 1, {1},
       {64}, {3}, [](P p) { return std::optional<long>(p[0]); },
       [](P p) { return lens_knot_meridian(p[0]); }},
      {"nontaut_example", "", "non-taut manifold with no generators; total rank 0", 0, {}, {}, {}, fixed(0),
       [](P) { return nontaut_example(); }},
      {"hexagon_example", "", "admissible diagram with an interior hexagon; not nice", 0, {}, {}, {}, none,
       [](P) { return hexagon_example(); }},
      {"torus_grid", "", "punctured 2x2 torus grid with two empty rectangles; total rank 2", 0, {}, {}, {},
       fixed(2), [](P) { return torus_grid(); }},
  };
  return catalog;
}

Diagram build_example(std::string_view name, std::span<const int> params) {
  const auto& catalog = example_catalog();
  const auto it = std::find_if(catalog.begin(), catalog.end(), [&](const ExampleInfo& e) { return e.name == name; });
  require(it != catalog.end(), "unknown example '" + std::string(name) + "'");
  require(params.size() == it->arity, it->name + " takes " + std::to_string(it->arity) + " parameter(s): " +
                                          it->name + (it->usage.empty() ? "" : " " + it->usage));
  for (std::size_t i = 0; i < params.size(); ++i) {
    require(params[i] >= it->minimum[i] && params[i] <= it->maximum[i],
            it->name + ": parameter " + std::to_string(i + 1) + " must lie in [" + std::to_string(it->minimum[i]) +
                ", " + std::to_string(it->maximum[i]) + "]");
  }
  return it->build(params);
}

}  // namespace sfh
