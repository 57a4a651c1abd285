#include "sfh/homology.hpp"

#include <algorithm>
#include <set>

#include "sfh/moves.hpp"
#include "sfh/parallel.hpp"
#include "sfh/union_find.hpp"

namespace sfh {

namespace {

std::string join_ids(const std::vector<int>& ids) {
  std::string out;
  for (std::size_t i = 0; i < ids.size(); ++i) out += (i ? "," : "") + std::to_string(ids[i]);
  return out;
}

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out = "diagram is not balanced";
  for (const auto& l : lines) out += "; " + l;
  return out;
}

}  // namespace

NotNice::NotNice(std::vector<int> regions)
    : std::runtime_error("diagram is not nice: regions " + join_ids(regions)), regions_(std::move(regions)) {}

NotBalanced::NotBalanced(std::vector<std::string> diagnostics)
    : std::runtime_error(join_lines(diagnostics)), diagnostics_(std::move(diagnostics)) {}

NiceReport is_nice(const Diagram& diagram) {
  NiceReport report;
  for (std::size_t r : diagram.interior_regions()) {
    const Region& region = diagram.regions()[r];
    const int corners = diagram.crossing_corner_count(r);
    const bool disc = region.genus == 0 && region.cycles.size() == 1;
    if (!disc || (corners != 2 && corners != 4)) report.offending.push_back(region.id);
  }
  report.nice = report.offending.empty();
  return report;
}

bool F2Matrix::is_zero() const {
  return std::all_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b == 0; });
}

F2Matrix F2Matrix::operator*(const F2Matrix& other) const {
  F2Matrix out(rows_, other.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (get(i, k))
        for (std::size_t j = 0; j < other.cols_; ++j)
          if (other.get(k, j)) out.flip(i, j);
  return out;
}

std::size_t F2Matrix::rank(const std::vector<std::size_t>& rows, const std::vector<std::size_t>& cols) const {
  // Gaussian elimination on 64-bit packed rows, pivots in column order.
  const std::size_t words = (cols.size() + 63) / 64;
  std::vector<std::vector<std::uint64_t>> m(rows.size(), std::vector<std::uint64_t>(words, 0));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (get(rows[i], cols[j])) m[i][j / 64] |= std::uint64_t{1} << (j % 64);
  std::size_t rank = 0;
  for (std::size_t j = 0; j < cols.size() && rank < m.size(); ++j) {
    const std::uint64_t bit = std::uint64_t{1} << (j % 64);
    std::size_t pivot = rank;
    while (pivot < m.size() && !(m[pivot][j / 64] & bit)) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[rank], m[pivot]);
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i != rank && (m[i][j / 64] & bit))
        for (std::size_t w = 0; w < words; ++w) m[i][w] ^= m[rank][w];
    }
    ++rank;
  }
  return rank;
}

std::size_t F2Matrix::rank() const {
  std::vector<std::size_t> r(rows_), c(cols_);
  for (std::size_t i = 0; i < rows_; ++i) r[i] = i;
  for (std::size_t j = 0; j < cols_; ++j) c[j] = j;
  return rank(r, c);
}

bool is_empty_polygon(const Diagram& diagram, const Domain& domain, const Generator& x, const Generator& y) {
  const auto& interior = diagram.interior_regions();
  std::vector<bool> in_support(diagram.regions().size(), false);
  bool any = false;
  for (std::size_t k = 0; k < interior.size(); ++k) {
    if (domain[k] != 0 && domain[k] != 1) return false;
    if (domain[k] == 1) {
      in_support[interior[k]] = true;
      any = true;
    }
  }
  if (!any) return false;

  // Closure of the support: connected and of Euler characteristic 1.
  const std::size_t nv = diagram.vertices().size();
  std::vector<int> support_corners(nv, 0);
  std::vector<bool> touched(nv, false);
  DisjointSets sets(diagram.regions().size());
  std::vector<std::size_t> first_at(nv, diagram.regions().size());
  for (const Corner& c : diagram.corners()) {
    if (!in_support[c.region]) continue;
    ++support_corners[c.vertex];
    touched[c.vertex] = true;
    if (first_at[c.vertex] == diagram.regions().size()) {
      first_at[c.vertex] = c.region;
    } else {
      sets.unite(first_at[c.vertex], c.region);
    }
  }
  long chi = 0;
  std::set<std::size_t> roots;
  for (std::size_t r = 0; r < diagram.regions().size(); ++r) {
    if (!in_support[r]) continue;
    chi += diagram.region_euler_characteristic(r);
    roots.insert(sets.find(r));
  }
  if (roots.size() != 1) return false;
  for (std::size_t v = 0; v < nv; ++v) chi += touched[v] ? 1 : 0;
  for (std::size_t e = 0; e < diagram.edges().size(); ++e) {
    const auto neg = diagram.negative_side(e);
    if (in_support[diagram.positive_side(e)] || (neg && in_support[*neg])) --chi;
  }
  if (chi != 1) return false;

  // Its boundary is one simple closed curve.
  const BoundaryChain chain = boundary_chain(diagram, domain);
  std::vector<int> degree(nv, 0);
  DisjointSets boundary_sets(nv);
  std::size_t boundary_edges = 0;
  std::size_t some_vertex = nv;
  for (std::size_t e = 0; e < diagram.edges().size(); ++e) {
    if (sgn(chain.coefficients[e]) == 0) continue;
    const Edge& edge = diagram.edges()[e];
    const std::size_t t = diagram.vertex_index(edge.tail);
    const std::size_t h = diagram.vertex_index(edge.head);
    ++degree[t];
    ++degree[h];
    boundary_sets.unite(t, h);
    some_vertex = t;
    ++boundary_edges;
  }
  if (boundary_edges == 0) return false;
  for (std::size_t v = 0; v < nv; ++v) {
    if (degree[v] != 0 && degree[v] != 2) return false;
    if (degree[v] != 0 && !boundary_sets.same(v, some_vertex)) return false;
  }

  // Convex corners (one support quadrant) sit exactly where x and y differ.
  std::set<int> differing;
  std::set_symmetric_difference(x.points.begin(), x.points.end(), y.points.begin(), y.points.end(),
                                std::inserter(differing, differing.end()));
  std::set<int> convex;
  for (std::size_t v : diagram.crossings()) {
    if (degree[v] == 0) continue;
    if (support_corners[v] == 1) convex.insert(diagram.vertices()[v].id);
    if (support_corners[v] == 3) return false;
  }
  if (convex != differing || (convex.size() != 2 && convex.size() != 4)) return false;

  // No other point of x meets the closure.
  for (int id : x.points) {
    if (!differing.contains(id) && support_corners[diagram.vertex_index(id)] != 0) return false;
  }
  return true;
}

int rigid_count(const Diagram& diagram, const Domain& domain, const Generator& x, const Generator& y) {
  if (!is_nice(diagram).nice) throw std::invalid_argument("rigid_count: diagram is not nice");
  for (const Integer& c : domain) {
    if (sgn(c) < 0) throw std::invalid_argument("rigid_count: domain has a negative coefficient");
  }
  const auto mu = maslov_index(diagram, domain, x, y);
  if (!mu) throw std::invalid_argument("rigid_count: domain does not connect the generators");
  if (*mu != 1) throw std::invalid_argument("rigid_count: domain has Maslov index " + mu->get_str());
  return is_empty_polygon(diagram, domain, x, y) ? 1 : 0;
}

F2Matrix boundary_matrix(const DomainLattice& lattice, const SpincClass& spinc) {
  const Diagram& diagram = lattice.diagram();
  if (!lattice.admissibility().admissible) throw NotAdmissible(*lattice.admissibility().witness);
  if (const NiceReport nice = is_nice(diagram); !nice.nice) throw NotNice(nice.offending);
  const std::size_t n = spinc.members.size();
  F2Matrix matrix(n, n);
  std::vector<std::uint8_t> entries(n * n, 0);
  parallel_for(n * n, [&](std::size_t k) {
    const std::size_t xi = k / n;
    const std::size_t yi = k % n;
    int count = 0;
    for (const Domain& d : lattice.positive_domains(spinc.members[xi], spinc.members[yi], 1).domains) {
      if (is_empty_polygon(diagram, d, spinc.members[xi], spinc.members[yi])) ++count;
    }
    entries[k] = static_cast<std::uint8_t>(count % 2);
  });
  for (std::size_t k = 0; k < n * n; ++k) matrix.set(k % n, k / n, entries[k] != 0);
  return matrix;
}

ChainComplex build_complex(const DomainLattice& lattice, const SpincClass& spinc) {
  ChainComplex complex;
  complex.class_id = spinc.id;
  complex.generators = spinc.members;
  complex.modulus = spinc.modulus;
  complex.gradings = spinc.gradings.empty() ? relative_gradings(lattice, spinc.members, spinc.modulus) : spinc.gradings;
  complex.boundary = boundary_matrix(lattice, spinc);
  const std::size_t n = complex.generators.size();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (!complex.boundary.get(y, x)) continue;
      const Integer drop = reduce_grading(complex.gradings[x] - complex.gradings[y], complex.modulus);
      if (drop != reduce_grading(Integer(1), complex.modulus))
        throw std::logic_error("differential from " + to_string(complex.generators[x]) + " to " +
                               to_string(complex.generators[y]) + " does not lower the grading by one");
    }
  }
  return complex;
}

bool verify_d_squared(const ChainComplex& complex) { return (complex.boundary * complex.boundary).is_zero(); }

std::optional<DSquaredFailure> d_squared_failure(const DomainLattice& lattice, const ChainComplex& complex) {
  const F2Matrix square = complex.boundary * complex.boundary;
  for (std::size_t x = 0; x < square.cols(); ++x) {
    for (std::size_t z = 0; z < square.rows(); ++z) {
      if (!square.get(z, x)) continue;
      DSquaredFailure failure;
      failure.x = x;
      failure.z = z;
      failure.maslov_two = lattice.positive_domains(complex.generators[x], complex.generators[z], 2).domains;
      return failure;
    }
  }
  return std::nullopt;
}

std::map<Integer, long> graded_ranks(const ChainComplex& complex) {
  std::map<Integer, std::vector<std::size_t>> by_grading;
  for (std::size_t i = 0; i < complex.generators.size(); ++i) by_grading[complex.gradings[i]].push_back(i);
  const auto block_rank = [&](const Integer& from) -> long {
    const auto src = by_grading.find(from);
    const auto dst = by_grading.find(reduce_grading(from - 1, complex.modulus));
    if (src == by_grading.end() || dst == by_grading.end()) return 0;
    return static_cast<long>(complex.boundary.rank(dst->second, src->second));
  };
  std::map<Integer, long> ranks;
  for (const auto& [g, members] : by_grading) {
    const long h = static_cast<long>(members.size()) - block_rank(g) -
                   block_rank(reduce_grading(g + 1, complex.modulus));
    if (h != 0) ranks[g] = h;
  }
  return ranks;
}

SfhResult sfh(const Diagram& input) {
  const BalanceReport balance = is_balanced(input);
  if (!balance.balanced) throw NotBalanced(balance.diagnostics);

  SfhResult result;
  Diagram diagram = input;
  DomainLattice lattice(diagram);
  if (!lattice.admissibility().admissible) throw NotAdmissible(*lattice.admissibility().witness);
  if (!is_nice(diagram).nice) {
    auto [reduced, removed] = remove_trivial_handles(diagram);
    if (removed > 0) {
      diagram = std::move(reduced);
      result.handles_removed = removed;
      lattice = DomainLattice(diagram);
    }
    if (const NiceReport nice = is_nice(diagram); !nice.nice) throw NotNice(nice.offending);
  }

  const auto generators = enumerate_generators(diagram);
  result.generator_count = generators.size();
  result.periodic_rank = lattice.rank();
  for (const SpincClass& spinc : spinc_classes(lattice, generators)) {
    const ChainComplex complex = build_complex(lattice, spinc);
    if (!verify_d_squared(complex)) throw std::logic_error("boundary does not square to zero");
    ClassResult c;
    c.id = spinc.id;
    c.modulus = spinc.modulus;
    c.generators = spinc.members;
    c.gradings = complex.gradings;
    c.ranks = graded_ranks(complex);
    for (const auto& [g, r] : c.ranks) c.total += r;
    result.total += c.total;
    result.classes.push_back(std::move(c));
  }
  return result;
}

}  // namespace sfh
