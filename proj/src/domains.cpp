#include "sfh/domains.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "sfh/simplex.hpp"
#include "sfh/spinc.hpp"

namespace sfh {

namespace {

// One defect row: the alpha or beta endpoint defect at a curve vertex.
struct DefectRow {
  std::size_t vertex;
  CurveKind kind;
};

std::vector<DefectRow> defect_rows(const Diagram& diagram) {
  std::vector<DefectRow> rows;
  for (std::size_t v = 0; v < diagram.vertices().size(); ++v) {
    if (diagram.alpha_of(v) != 0) rows.push_back({v, CurveKind::alpha});
    if (diagram.beta_of(v) != 0) rows.push_back({v, CurveKind::beta});
  }
  return rows;
}

// Row position of (vertex, kind), or npos.
std::vector<std::size_t> row_lookup(const Diagram& diagram, const std::vector<DefectRow>& rows, CurveKind kind) {
  std::vector<std::size_t> at(diagram.vertices().size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].kind == kind) at[rows[i].vertex] = i;
  }
  return at;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer floor_div(const Integer& a, const Integer& b) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

Integer floor_of(const Rational& r) {
  Integer q;
  mpz_fdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

Integer ceil_of(const Rational& r) {
  Integer q;
  mpz_cdiv_q(q.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return q;
}

std::vector<RatVector> rational_rows(const IntMatrix& a) {
  std::vector<RatVector> rows(a.rows(), RatVector(a.cols()));
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) rows[i][j] = Rational(a(i, j));
  return rows;
}

std::size_t leading_index(const IntVector& v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (sgn(v[i]) != 0) return i;
  }
  return v.size();
}

}  // namespace

IntVector region_coefficients(const Diagram& diagram, const Domain& domain) {
  IntVector out(diagram.regions().size());
  const auto& interior = diagram.interior_regions();
  for (std::size_t k = 0; k < interior.size(); ++k) out[interior[k]] = domain[k];
  return out;
}

Integer coefficient_at(const Diagram& diagram, const Domain& domain, std::size_t region) {
  const auto pos = diagram.interior_position(region);
  return pos ? domain[*pos] : Integer(0);
}

IntVector BoundaryChain::restricted(CurveKind kind) const {
  IntVector out(coefficients.size());
  for (std::size_t e = 0; e < coefficients.size(); ++e) {
    if (kinds[e] == kind) out[e] = coefficients[e];
  }
  return out;
}

BoundaryChain boundary_chain(const Diagram& diagram, const Domain& domain) {
  BoundaryChain chain;
  const std::size_t n = diagram.edges().size();
  chain.coefficients.assign(n, Integer(0));
  chain.kinds.resize(n);
  for (std::size_t e = 0; e < n; ++e) {
    chain.kinds[e] = diagram.edges()[e].label.kind;
    if (chain.kinds[e] == CurveKind::boundary) continue;
    chain.coefficients[e] = coefficient_at(diagram, domain, diagram.positive_side(e));
    if (const auto neg = diagram.negative_side(e)) chain.coefficients[e] -= coefficient_at(diagram, domain, *neg);
  }
  return chain;
}

IntVector defect(const Diagram& diagram, const Domain& domain) {
  const auto rows = defect_rows(diagram);
  const auto alpha_row = row_lookup(diagram, rows, CurveKind::alpha);
  const auto beta_row = row_lookup(diagram, rows, CurveKind::beta);
  const BoundaryChain chain = boundary_chain(diagram, domain);
  IntVector out(rows.size());
  for (std::size_t e = 0; e < diagram.edges().size(); ++e) {
    const Integer& c = chain.coefficients[e];
    if (sgn(c) == 0) continue;
    const Edge& edge = diagram.edges()[e];
    const auto& at = edge.label.kind == CurveKind::alpha ? alpha_row : beta_row;
    out[at[diagram.vertex_index(edge.head)]] += c;
    out[at[diagram.vertex_index(edge.tail)]] -= c;
  }
  return out;
}

IntVector defect_target(const Diagram& diagram, const Generator& x, const Generator& y) {
  const auto rows = defect_rows(diagram);
  const auto alpha_row = row_lookup(diagram, rows, CurveKind::alpha);
  const auto beta_row = row_lookup(diagram, rows, CurveKind::beta);
  IntVector out(rows.size());
  const auto add = [&](const Generator& g, int sign) {
    for (int id : g.points) {
      const std::size_t v = diagram.vertex_index(id);
      out[alpha_row[v]] += sign;
      out[beta_row[v]] -= sign;
    }
  };
  add(x, 1);
  add(y, -1);
  return out;
}

NotAdmissible::NotAdmissible(Domain witness)
    : std::runtime_error("diagram is not admissible: a nonzero periodic domain has no negative coefficient"),
      witness_(std::move(witness)) {}

DomainLattice::DomainLattice(Diagram diagram) : diagram_(std::move(diagram)) {
  const std::size_t m = dimension();
  const std::size_t r = defect_rows(diagram_).size();
  matrix_ = IntMatrix(r, m);
  for (std::size_t k = 0; k < m; ++k) {
    Domain unit(m, Integer(0));
    unit[k] = 1;
    const IntVector column = defect(diagram_, unit);
    for (std::size_t i = 0; i < r; ++i) matrix_(i, k) = column[i];
  }
  echelon_ = column_echelon(matrix_);

  for (IntVector& p : integer_kernel(matrix_)) {
    PeriodicDomain periodic;
    const BoundaryChain chain = boundary_chain(diagram_, p);
    periodic.alpha.assign(static_cast<std::size_t>(diagram_.d_alpha()), Integer(0));
    periodic.beta.assign(static_cast<std::size_t>(diagram_.d_beta()), Integer(0));
    for (std::size_t e = 0; e < diagram_.edges().size(); ++e) {
      const Label& label = diagram_.edges()[e].label;
      if (label.kind == CurveKind::alpha) periodic.alpha[label.index - 1] = chain.coefficients[e];
      if (label.kind == CurveKind::beta) periodic.beta[label.index - 1] = chain.coefficients[e];
    }
    periodic.domain = std::move(p);
    periodic_.push_back(std::move(periodic));
  }

  // Admissible iff max sum(P) over {A P = 0, 0 <= P <= 1} is 0. Variables
  // are P then slacks s with P + s = 1.
  if (!periodic_.empty()) {
    std::vector<RatVector> rows;
    RatVector rhs;
    for (std::size_t i = 0; i < r; ++i) {
      RatVector row(2 * m);
      for (std::size_t k = 0; k < m; ++k) row[k] = Rational(matrix_(i, k));
      rows.push_back(std::move(row));
      rhs.emplace_back(0);
    }
    for (std::size_t k = 0; k < m; ++k) {
      RatVector row(2 * m);
      row[k] = 1;
      row[m + k] = 1;
      rows.push_back(std::move(row));
      rhs.emplace_back(1);
    }
    RatVector objective(2 * m);
    for (std::size_t k = 0; k < m; ++k) objective[k] = 1;
    const LpResult lp = maximize(2 * m, rows, rhs, objective);
    if (lp.status == LpStatus::optimal && sgn(lp.value) > 0) {
      Integer scale = 1;
      for (std::size_t k = 0; k < m; ++k) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), lp.x[k].get_den_mpz_t());
      Domain witness(m);
      for (std::size_t k = 0; k < m; ++k) {
        const Rational scaled = lp.x[k] * scale;
        witness[k] = scaled.get_num();
      }
      const Integer g = gcd_of(witness);
      if (g > 1) {
        for (auto& w : witness) w /= g;
      }
      admissibility_.admissible = false;
      admissibility_.witness = std::move(witness);
    }
  }
}

bool DomainLattice::connected(const Generator& x, const Generator& y) const {
  return particular_solution(x, y).has_value();
}

std::optional<Domain> DomainLattice::particular_solution(const Generator& x, const Generator& y) const {
  return solve_integer(echelon_, defect_target(diagram_, x, y));
}

bool DomainLattice::contains(const Domain& domain, const Generator& x, const Generator& y) const {
  return domain.size() == dimension() && defect(diagram_, domain) == defect_target(diagram_, x, y);
}

PositiveSearch DomainLattice::positive_domains(const Generator& x, const Generator& y,
                                               std::optional<long> maslov) const {
  PositiveSearch search;
  const auto base = particular_solution(x, y);
  if (!base) return search;
  if (!admissibility_.admissible) throw NotAdmissible(*admissibility_.witness);
  const std::size_t m = dimension();

  search.lower.assign(m, Integer(0));
  search.upper.assign(m, Integer(0));
  if (m > 0) {
    const IntVector target = defect_target(diagram_, x, y);
    RatVector rhs;
    for (const Integer& t : target) rhs.emplace_back(t);
    const Polyhedron region(m, rational_rows(matrix_), rhs);
    if (!region.feasible()) return search;
    for (std::size_t k = 0; k < m; ++k) {
      RatVector objective(m);
      objective[k] = 1;
      const LpResult hi = region.maximize(objective);
      objective[k] = -1;
      const LpResult lo = region.maximize(objective);
      if (hi.status != LpStatus::optimal || lo.status != LpStatus::optimal)
        throw std::logic_error("positive domain polytope unbounded on an admissible diagram");
      search.upper[k] = floor_of(hi.value);
      search.lower[k] = ceil_of(-lo.value);
    }
  }
  search.feasible = true;

  // D = base + sum lambda_j h_j with h_j in Hermite form: coordinates before
  // pivot q_j are fixed once lambda_0..lambda_{j-1} are chosen.
  std::vector<const IntVector*> basis;
  std::vector<std::size_t> pivots;
  for (const PeriodicDomain& p : periodic_) {
    basis.push_back(&p.domain);
    pivots.push_back(leading_index(p.domain));
  }
  const auto in_bounds = [&](const IntVector& v, std::size_t from, std::size_t to) {
    for (std::size_t i = from; i < to; ++i) {
      if (v[i] < search.lower[i] || v[i] > search.upper[i]) return false;
    }
    return true;
  };
  IntVector current = *base;
  const auto recurse = [&](auto&& self, std::size_t j, std::size_t checked) -> void {
    if (j == basis.size()) {
      if (!in_bounds(current, checked, m)) return;
      if (maslov && maslov_unchecked(diagram_, current, x, y) != *maslov) return;
      search.domains.push_back(current);
      return;
    }
    const std::size_t q = pivots[j];
    if (!in_bounds(current, checked, q)) return;
    const IntVector& h = *basis[j];
    const Integer& p = h[q];
    const Integer lo = ceil_div(search.lower[q] - current[q], p);
    const Integer hi = floor_div(search.upper[q] - current[q], p);
    if (lo > hi) return;
    for (std::size_t i = 0; i < m; ++i) current[i] += lo * h[i];
    for (Integer lambda = lo; lambda <= hi; ++lambda) {
      self(self, j + 1, q);
      for (std::size_t i = 0; i < m; ++i) current[i] += h[i];
    }
    for (std::size_t i = 0; i < m; ++i) current[i] -= (hi + 1) * h[i];
  };
  recurse(recurse, 0, 0);
  std::sort(search.domains.begin(), search.domains.end());
  return search;
}

std::vector<PeriodicDomain> periodic_basis(const Diagram& diagram) { return DomainLattice(diagram).periodic_basis(); }

std::size_t h2_rank(const Diagram& diagram) { return DomainLattice(diagram).rank(); }

Admissibility is_admissible(const Diagram& diagram) { return DomainLattice(diagram).admissibility(); }

std::optional<ConnectingDomain> connecting_domain(const DomainLattice& lattice, const Generator& x,
                                                  const Generator& y) {
  auto base = lattice.particular_solution(x, y);
  if (!base) return std::nullopt;
  ConnectingDomain out;
  out.domain = std::move(*base);
  out.periodic = lattice.periodic_basis();
  if (lattice.admissibility().admissible) {
    const PositiveSearch search = lattice.positive_domains(x, y);
    if (!search.domains.empty()) out.domain = search.domains.front();
  }
  return out;
}

std::vector<Domain> positive_connecting_domains(const DomainLattice& lattice, const Generator& x, const Generator& y,
                                                std::optional<long> maslov) {
  return lattice.positive_domains(x, y, maslov).domains;
}

std::string format_domain(const Diagram& diagram, const Domain& domain) {
  std::ostringstream out;
  bool first = true;
  const auto& interior = diagram.interior_regions();
  for (std::size_t k = 0; k < interior.size(); ++k) {
    if (sgn(domain[k]) == 0) continue;
    out << (first ? "" : " ") << diagram.regions()[interior[k]].id << ':' << domain[k];
    first = false;
  }
  return first ? std::string("0") : out.str();
}

}  // namespace sfh
