#include "sfh/spinc.hpp"

#include <sstream>
#include <stdexcept>

namespace sfh {

Rational euler_measure(const Diagram& diagram, const Domain& domain) {
  Rational total = 0;
  const auto& interior = diagram.interior_regions();
  for (std::size_t k = 0; k < interior.size(); ++k) {
    if (sgn(domain[k]) == 0) continue;
    const std::size_t r = interior[k];
    // mpq_class(n, d) is not reduced; every operand must be canonical.
    Rational corners(diagram.crossing_corner_count(r), 4);
    corners.canonicalize();
    const Rational weight = Rational(diagram.region_euler_characteristic(r)) - corners;
    total += weight * Rational(domain[k]);
  }
  return total;
}

Rational point_measure(const Diagram& diagram, const Domain& domain, const Generator& x) {
  Rational total = 0;
  for (int id : x.points) {
    for (std::size_t r : diagram.quadrants(diagram.vertex_index(id))) total += Rational(coefficient_at(diagram, domain, r));
  }
  total /= 4;
  return total;
}

Integer maslov_unchecked(const Diagram& diagram, const Domain& domain, const Generator& x, const Generator& y) {
  const Rational mu = euler_measure(diagram, domain) + point_measure(diagram, domain, x) +
                      point_measure(diagram, domain, y);
  if (mu.get_den() != 1) throw std::logic_error("non-integral Maslov index " + mu.get_str());
  return mu.get_num();
}

std::optional<Integer> maslov_index(const Diagram& diagram, const Domain& domain, const Generator& x,
                                    const Generator& y) {
  if (domain.size() != diagram.interior_regions().size()) return std::nullopt;
  if (defect(diagram, domain) != defect_target(diagram, x, y)) return std::nullopt;
  return maslov_unchecked(diagram, domain, x, y);
}

bool EpsilonClass::is_zero() const {
  for (const Integer& v : values) {
    if (sgn(v) != 0) return false;
  }
  return true;
}

EpsilonClass EpsilonClass::operator+(const EpsilonClass& other) const {
  if (moduli != other.moduli) throw std::invalid_argument("epsilon classes from different diagrams");
  EpsilonClass sum = *this;
  for (std::size_t k = 0; k < values.size(); ++k) {
    sum.values[k] += other.values[k];
    sum.values[k] = reduce_grading(sum.values[k], moduli[k]);
  }
  return sum;
}

EpsilonClass EpsilonClass::operator-() const {
  EpsilonClass neg = *this;
  for (std::size_t k = 0; k < values.size(); ++k) neg.values[k] = reduce_grading(-values[k], moduli[k]);
  return neg;
}

std::string to_string(const EpsilonClass& epsilon) {
  std::ostringstream out;
  out << '(';
  for (std::size_t k = 0; k < epsilon.values.size(); ++k) {
    if (k) out << ", ";
    out << epsilon.values[k];
    if (sgn(epsilon.moduli[k]) != 0) out << " mod " << epsilon.moduli[k];
  }
  out << ')';
  return out.str();
}

// Z^E modulo region boundaries and whole curves contains H_1(Sigma) modulo the
// curves, since the 1-cycles modulo region boundaries are exactly H_1.
EpsilonMap::EpsilonMap(const Diagram& diagram) : diagram_(&diagram) {
  const std::size_t n = diagram.edges().size();
  std::vector<IntVector> columns;
  for (const Region& r : diagram.regions()) {
    IntVector column(n);
    for (const Cycle& c : r.cycles)
      for (const EdgeRef& ref : c) column[diagram.edge_index(ref.edge)] += ref.forward ? 1 : -1;
    columns.push_back(std::move(column));
  }
  for (int i = 1; i <= diagram.d_alpha(); ++i) {
    alpha_edges_.push_back(diagram.curve_edges(Label{CurveKind::alpha, i}));
    IntVector column(n);
    for (std::size_t e : alpha_edges_.back()) column[e] = 1;
    columns.push_back(std::move(column));
  }
  for (int j = 1; j <= diagram.d_beta(); ++j) {
    beta_edges_.push_back(diagram.curve_edges(Label{CurveKind::beta, j}));
    IntVector column(n);
    for (std::size_t e : beta_edges_.back()) column[e] = 1;
    columns.push_back(std::move(column));
  }
  smith_ = smith_form(IntMatrix::from_columns(n, columns));
}

EpsilonClass EpsilonMap::reduce(const IntVector& chain) const {
  const IntVector image = smith_.left * chain;
  EpsilonClass out;
  for (std::size_t k = 0; k < image.size(); ++k) {
    const Integer d = k < smith_.diagonal.size() ? smith_.diagonal[k] : Integer(0);
    if (d == 1) continue;
    out.moduli.push_back(d);
    out.values.push_back(reduce_grading(image[k], d));
  }
  return out;
}

IntVector EpsilonMap::difference_cycle(const Generator& x, const Generator& y) const {
  const Diagram& diagram = *diagram_;
  IntVector chain(diagram.edges().size());
  const auto point_on = [&](const Generator& g, CurveKind kind, int index) {
    for (int id : g.points) {
      const std::size_t v = diagram.vertex_index(id);
      if ((kind == CurveKind::alpha ? diagram.alpha_of(v) : diagram.beta_of(v)) == index) return id;
    }
    throw std::invalid_argument("generator misses a curve");
  };
  const auto walk = [&](const std::vector<std::size_t>& edges, int from, int to, int sign) {
    if (from == to) return;
    std::size_t k = 0;
    while (diagram.edges()[edges[k]].tail != from) ++k;
    while (true) {
      const Edge& e = diagram.edges()[edges[k]];
      chain[edges[k]] += sign;
      if (e.head == to) return;
      k = (k + 1) % edges.size();
    }
  };
  for (std::size_t i = 0; i < alpha_edges_.size(); ++i) {
    const int index = static_cast<int>(i) + 1;
    walk(alpha_edges_[i], point_on(x, CurveKind::alpha, index), point_on(y, CurveKind::alpha, index), 1);
  }
  for (std::size_t j = 0; j < beta_edges_.size(); ++j) {
    const int index = static_cast<int>(j) + 1;
    walk(beta_edges_[j], point_on(x, CurveKind::beta, index), point_on(y, CurveKind::beta, index), -1);
  }
  return chain;
}

EpsilonClass EpsilonMap::operator()(const Generator& x, const Generator& y) const {
  return reduce(difference_cycle(x, y));
}

EpsilonClass epsilon_class(const Diagram& diagram, const Generator& x, const Generator& y) {
  return EpsilonMap(diagram)(x, y);
}

Integer reduce_grading(const Integer& value, const Integer& modulus) {
  if (sgn(modulus) == 0) return value;
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
  return r;
}

std::vector<SpincClass> spinc_partition(const DomainLattice& lattice, const std::vector<Generator>& generators) {
  std::vector<SpincClass> classes;
  for (const Generator& g : generators) {
    bool placed = false;
    for (SpincClass& c : classes) {
      if (lattice.connected(c.members.front(), g)) {
        c.members.push_back(g);
        placed = true;
        break;
      }
    }
    if (!placed) {
      SpincClass c;
      c.id = static_cast<int>(classes.size()) + 1;
      c.members.push_back(g);
      classes.push_back(std::move(c));
    }
  }
  return classes;
}

Integer d_modulus(const DomainLattice& lattice, const Generator& basepoint) {
  IntVector values;
  for (const PeriodicDomain& p : lattice.periodic_basis())
    values.push_back(maslov_unchecked(lattice.diagram(), p.domain, basepoint, basepoint));
  return gcd_of(values);
}

IntVector relative_gradings(const DomainLattice& lattice, const std::vector<Generator>& members,
                            const Integer& modulus) {
  IntVector gradings;
  if (members.empty()) return gradings;
  const Generator& first = members.front();
  for (const Generator& y : members) {
    const auto domain = lattice.particular_solution(first, y);
    if (!domain) throw std::invalid_argument("generators " + to_string(first) + " and " + to_string(y) +
                                             " are in different classes");
    gradings.push_back(reduce_grading(-maslov_unchecked(lattice.diagram(), *domain, first, y), modulus));
  }
  return gradings;
}

std::vector<SpincClass> spinc_classes(const DomainLattice& lattice, const std::vector<Generator>& generators) {
  auto classes = spinc_partition(lattice, generators);
  for (SpincClass& c : classes) {
    c.modulus = d_modulus(lattice, c.members.front());
    c.gradings = relative_gradings(lattice, c.members, c.modulus);
  }
  return classes;
}

}  // namespace sfh
