#pragma once

// Brute-force reference implementations used only by tests. They read the
// raw cell data of a Diagram and share no algorithm with the library.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <vector>

#include "sfh/diagram.hpp"
#include "sfh/domains.hpp"
#include "sfh/homology.hpp"
#include "sfh/union_find.hpp"

namespace sfh::oracle {

inline long as_long(const Integer& v) { return v.get_si(); }

// Coefficient per region id (0 on boundary-touching regions).
inline std::map<int, long> coefficients_by_id(const Diagram& d, const Domain& domain) {
  std::map<int, long> out;
  for (const Region& r : d.regions()) out[r.id] = 0;
  const auto& interior = d.interior_regions();
  for (std::size_t k = 0; k < interior.size(); ++k) out[d.regions()[interior[k]].id] = as_long(domain[k]);
  return out;
}

// Cellular boundary from the region cycles: every traversal of an edge adds
// the region's coefficient with the traversal sign.
inline std::map<int, long> boundary_by_cycles(const Diagram& d, const Domain& domain) {
  const auto coeff = coefficients_by_id(d, domain);
  std::map<int, long> chain;
  for (const Region& r : d.regions())
    for (const Cycle& c : r.cycles)
      for (const EdgeRef& ref : c) chain[ref.edge] += (ref.forward ? 1 : -1) * coeff.at(r.id);
  return chain;
}

// D in D(x,y): the alpha part of the boundary has endpoint defect x - y and
// the beta part y - x, at every vertex.
inline bool connects(const Diagram& d, const Domain& domain, const Generator& x, const Generator& y) {
  const auto chain = boundary_by_cycles(d, domain);
  std::map<int, long> alpha_defect, beta_defect;
  for (const Edge& e : d.edges()) {
    const long c = chain.count(e.id) ? chain.at(e.id) : 0;
    if (e.label.kind == CurveKind::boundary) {
      if (c != 0) return false;
      continue;
    }
    auto& defect = e.label.kind == CurveKind::alpha ? alpha_defect : beta_defect;
    defect[e.head] += c;
    defect[e.tail] -= c;
  }
  std::map<int, long> want;
  for (int p : x.points) want[p] += 1;
  for (int p : y.points) want[p] -= 1;
  for (const Vertex& v : d.vertices()) {
    const long w = want.count(v.id) ? want.at(v.id) : 0;
    const long a = alpha_defect.count(v.id) ? alpha_defect.at(v.id) : 0;
    const long b = beta_defect.count(v.id) ? beta_defect.at(v.id) : 0;
    if (a != w || b != -w) return false;
  }
  return true;
}

// Generators by trying every bijection alpha -> beta.
inline std::vector<Generator> generators_by_permutation(const Diagram& d) {
  const int n = d.d_alpha();
  std::map<std::pair<int, int>, std::vector<int>> at;  // (alpha, beta) -> crossing ids
  for (const Vertex& v : d.vertices()) {
    if (v.kind != VertexKind::crossing) continue;
    int a = 0, b = 0;
    for (const Edge& e : d.edges()) {
      if (e.tail != v.id && e.head != v.id) continue;
      if (e.label.kind == CurveKind::alpha) a = e.label.index;
      if (e.label.kind == CurveKind::beta) b = e.label.index;
    }
    at[{a, b}].push_back(v.id);
  }
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<Generator> out;
  do {
    std::vector<std::vector<int>> choices;
    for (int i = 1; i <= n; ++i) {
      const auto it = at.find({i, perm[i - 1]});
      choices.push_back(it == at.end() ? std::vector<int>{} : it->second);
    }
    std::vector<int> pick;
    const std::function<void(int)> go = [&](int i) {
      if (i == n) {
        Generator g{pick};
        std::sort(g.points.begin(), g.points.end());
        out.push_back(g);
        return;
      }
      for (int c : choices[i]) {
        pick.push_back(c);
        go(i + 1);
        pick.pop_back();
      }
    };
    go(0);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::sort(out.begin(), out.end());
  return out;
}

// Every domain with coefficients in [0, bound] connecting x to y.
inline std::vector<Domain> bounded_positive_search(const Diagram& d, const Generator& x, const Generator& y,
                                                   long bound) {
  const std::size_t m = d.interior_regions().size();
  std::vector<Domain> out;
  Domain current(m, Integer(0));
  const std::function<void(std::size_t)> go = [&](std::size_t k) {
    if (k == m) {
      if (connects(d, current, x, y)) out.push_back(current);
      return;
    }
    for (long c = 0; c <= bound; ++c) {
      current[k] = c;
      go(k + 1);
    }
    current[k] = 0;
  };
  go(0);
  std::sort(out.begin(), out.end());
  return out;
}

// Glues the support polygons of a 0/1 domain along shared edges and decides
// whether the result is an embedded disc whose convex corners are exactly the
// points where x and y differ (2 or 4 of them), containing no other point of x.
inline bool glued_empty_polygon(const Diagram& d, const Domain& domain, const Generator& x, const Generator& y) {
  const auto coeff = coefficients_by_id(d, domain);
  std::vector<const Region*> support;
  for (const auto& [id, c] : coeff) {
    if (c != 0 && c != 1) return false;
    if (c == 1) support.push_back(&d.regions()[d.region_index(id)]);
  }
  if (support.empty()) return false;

  // Slots: (support index, cycle, position); slot k sits at the end of side k.
  struct Slot {
    std::size_t region, cycle, pos;
    auto operator<=>(const Slot&) const = default;
  };
  std::map<Slot, std::size_t> slot_id;
  std::vector<Slot> slots;
  for (std::size_t r = 0; r < support.size(); ++r)
    for (std::size_t c = 0; c < support[r]->cycles.size(); ++c)
      for (std::size_t k = 0; k < support[r]->cycles[c].size(); ++k) {
        slot_id[{r, c, k}] = slots.size();
        slots.push_back({r, c, k});
      }
  const auto prev_slot = [&](const Slot& s) {
    const std::size_t n = support[s.region]->cycles[s.cycle].size();
    return slot_id.at({s.region, s.cycle, (s.pos + n - 1) % n});
  };
  const auto vertex_of_slot = [&](const Slot& s) {
    const EdgeRef& ref = support[s.region]->cycles[s.cycle][s.pos];
    const Edge& e = d.edges()[d.edge_index(ref.edge)];
    return ref.forward ? e.head : e.tail;
  };

  // Sides, keyed by edge id: where each traversal direction occurs.
  std::map<int, std::vector<Slot>> forward_side, backward_side;
  for (const Slot& s : slots) {
    const EdgeRef& ref = support[s.region]->cycles[s.cycle][s.pos];
    (ref.forward ? forward_side : backward_side)[ref.edge].push_back(s);
  }
  DisjointSets vertex_sets(slots.size());
  DisjointSets region_sets(support.size());
  std::set<Slot> glued_sides;
  long glued = 0;
  for (const auto& [edge, fwd] : forward_side) {
    const auto it = backward_side.find(edge);
    if (it == backward_side.end()) continue;
    const Slot& p = fwd.front();
    const Slot& n = it->second.front();
    vertex_sets.unite(slot_id.at(p), prev_slot(n));  // head
    vertex_sets.unite(prev_slot(p), slot_id.at(n));  // tail
    region_sets.unite(p.region, n.region);
    glued_sides.insert(p);
    glued_sides.insert(n);
    ++glued;
  }
  if (region_sets.count() != 1) return false;

  const long sides = static_cast<long>(slots.size());
  const long boundary_sides = sides - 2 * glued;
  std::map<std::size_t, std::vector<std::size_t>> classes;
  for (std::size_t s = 0; s < slots.size(); ++s) classes[vertex_sets.find(s)].push_back(s);
  long chi = static_cast<long>(classes.size()) - (glued + boundary_sides);
  for (const Region* r : support) chi += 2 - 2 * r->genus - static_cast<long>(r->cycles.size());
  if (chi != 1) return false;

  // Boundary components: unglued sides chained through their end vertices.
  DisjointSets boundary_sets(slots.size());
  std::set<std::size_t> on_boundary;
  for (const Slot& s : slots) {
    if (glued_sides.contains(s)) continue;
    const std::size_t a = vertex_sets.find(prev_slot(s));
    const std::size_t b = vertex_sets.find(slot_id.at(s));
    boundary_sets.unite(a, b);
    on_boundary.insert(a);
    on_boundary.insert(b);
  }
  std::set<std::size_t> boundary_roots;
  for (std::size_t v : on_boundary) boundary_roots.insert(boundary_sets.find(v));
  if (boundary_roots.size() != 1) return false;

  // Embedded: distinct glued vertices lie over distinct diagram vertices.
  std::map<int, std::size_t> image;
  std::set<int> convex;
  for (const auto& [root, members] : classes) {
    const int v = vertex_of_slot(slots[members.front()]);
    if (!image.emplace(v, root).second) return false;
    const bool crossing = d.vertices()[d.vertex_index(v)].kind == VertexKind::crossing;
    if (crossing && on_boundary.contains(root)) {
      if (members.size() == 1) convex.insert(v);
      if (members.size() == 3) return false;
    }
  }
  std::set<int> differing;
  std::set_symmetric_difference(x.points.begin(), x.points.end(), y.points.begin(), y.points.end(),
                                std::inserter(differing, differing.end()));
  if (convex != differing || (convex.size() != 2 && convex.size() != 4)) return false;
  for (int p : x.points) {
    if (!differing.contains(p) && image.contains(p)) return false;
  }
  return true;
}

// Entry (y, x): parity of the 0/1 domains in D(x,y) that glue to an empty
// embedded bigon or rectangle.
inline F2Matrix brute_force_boundary(const Diagram& d, const std::vector<Generator>& members) {
  const std::size_t n = members.size();
  const std::size_t m = d.interior_regions().size();
  F2Matrix out(n, n);
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << m); ++mask) {
    Domain domain(m);
    for (std::size_t k = 0; k < m; ++k) domain[k] = (mask >> k) & 1 ? 1 : 0;
    for (std::size_t xi = 0; xi < n; ++xi)
      for (std::size_t yi = 0; yi < n; ++yi)
        if (connects(d, domain, members[xi], members[yi]) &&
            glued_empty_polygon(d, domain, members[xi], members[yi]))
          out.flip(yi, xi);
  }
  return out;
}

}  // namespace sfh::oracle
