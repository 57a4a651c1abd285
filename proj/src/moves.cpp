#include "sfh/moves.hpp"

#include <algorithm>
#include <map>

#include "sfh/union_find.hpp"

namespace sfh {

namespace {

template <class T>
int max_id(const std::vector<T>& items) {
  int m = 0;
  for (const T& t : items) m = std::max(m, t.id);
  return m;
}

// Renumbers boundary circles 1..b by their least edge id.
void relabel_boundary(RawDiagram& raw) {
  std::map<int, std::size_t> vertex_pos;
  for (std::size_t i = 0; i < raw.vertices.size(); ++i) vertex_pos[raw.vertices[i].id] = i;
  DisjointSets sets(raw.vertices.size());
  for (const Edge& e : raw.edges) {
    if (e.label.kind == CurveKind::boundary) sets.unite(vertex_pos.at(e.tail), vertex_pos.at(e.head));
  }
  std::vector<Edge*> boundary;
  for (Edge& e : raw.edges) {
    if (e.label.kind == CurveKind::boundary) boundary.push_back(&e);
  }
  std::sort(boundary.begin(), boundary.end(), [](const Edge* a, const Edge* b) { return a->id < b->id; });
  std::map<std::size_t, int> index;
  for (Edge* e : boundary) {
    const std::size_t root = sets.find(vertex_pos.at(e->tail));
    const auto it = index.try_emplace(root, static_cast<int>(index.size()) + 1).first;
    e->label.index = it->second;
  }
}

Region& region_by_id(RawDiagram& raw, int id) {
  for (Region& r : raw.regions) {
    if (r.id == id) return r;
  }
  throw MoveError("unknown region " + std::to_string(id));
}

bool is_handle_cycle(const Cycle& c, int a, int b) {
  if (c.size() != 4) return false;
  int a_fwd = 0, a_rev = 0, b_fwd = 0, b_rev = 0;
  for (std::size_t k = 0; k < 4; ++k) {
    const EdgeRef& r = c[k];
    const EdgeRef& next = c[(k + 1) % 4];
    if ((r.edge == a) == (next.edge == a)) return false;  // must alternate
    if (r.edge == a) (r.forward ? a_fwd : a_rev)++;
    else if (r.edge == b) (r.forward ? b_fwd : b_rev)++;
    else return false;
  }
  return a_fwd == 1 && a_rev == 1 && b_fwd == 1 && b_rev == 1;
}

}  // namespace

Diagram stabilize(const Diagram& diagram, int region_id) {
  RawDiagram raw = diagram.raw();
  Region& region = region_by_id(raw, region_id);
  const int v = max_id(raw.vertices) + 1;
  const int a = max_id(raw.edges) + 1;
  const int b = a + 1;
  raw.vertices.push_back(Vertex{v, VertexKind::crossing});
  raw.edges.push_back(Edge{a, Label{CurveKind::alpha, diagram.d_alpha() + 1}, v, v});
  raw.edges.push_back(Edge{b, Label{CurveKind::beta, diagram.d_beta() + 1}, v, v});
  region.cycles.push_back({EdgeRef{a, true}, EdgeRef{b, true}, EdgeRef{a, false}, EdgeRef{b, false}});
  return validate(std::move(raw));
}

std::pair<Diagram, int> remove_trivial_handles(const Diagram& diagram) {
  Diagram current = diagram;
  int removed = 0;
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t v : current.crossings()) {
      const Label alpha{CurveKind::alpha, current.alpha_of(v)};
      const Label beta{CurveKind::beta, current.beta_of(v)};
      const auto alpha_edges = current.curve_edges(alpha);
      const auto beta_edges = current.curve_edges(beta);
      if (alpha_edges.size() != 1 || beta_edges.size() != 1) continue;
      const int a = current.edges()[alpha_edges[0]].id;
      const int b = current.edges()[beta_edges[0]].id;
      RawDiagram raw = current.raw();
      bool found = false;
      for (Region& r : raw.regions) {
        const auto it = std::find_if(r.cycles.begin(), r.cycles.end(),
                                     [&](const Cycle& c) { return is_handle_cycle(c, a, b); });
        if (it == r.cycles.end()) continue;
        r.cycles.erase(it);
        found = true;
        break;
      }
      if (!found) continue;
      const int vid = current.vertices()[v].id;
      std::erase_if(raw.vertices, [&](const Vertex& x) { return x.id == vid; });
      std::erase_if(raw.edges, [&](const Edge& e) { return e.id == a || e.id == b; });
      for (Edge& e : raw.edges) {
        if (e.label.kind == CurveKind::alpha && e.label.index > alpha.index) --e.label.index;
        if (e.label.kind == CurveKind::beta && e.label.index > beta.index) --e.label.index;
      }
      current = validate(std::move(raw));
      ++removed;
      changed = true;
      break;
    }
  }
  return {std::move(current), removed};
}

Diagram cut_product_arc(const Diagram& diagram, const ProductArc& arc) {
  RawDiagram raw = diagram.raw();
  Region& region = region_by_id(raw, arc.region);
  if (arc.first_edge == arc.second_edge) throw MoveError("product arc endpoints lie on the same edge");

  // Locate both endpoints among the region's cycles.
  struct Place {
    std::size_t cycle = 0;
    std::size_t pos = 0;
  };
  const auto locate = [&](int edge_id) {
    std::size_t e;
    try {
      e = diagram.edge_index(edge_id);
    } catch (const std::out_of_range&) {
      throw MoveError("unknown edge " + std::to_string(edge_id));
    }
    if (diagram.edges()[e].label.kind != CurveKind::boundary)
      throw MoveError("edge " + std::to_string(edge_id) + " is not a boundary edge; the arc would cross a curve");
    for (std::size_t c = 0; c < region.cycles.size(); ++c)
      for (std::size_t k = 0; k < region.cycles[c].size(); ++k)
        if (region.cycles[c][k].edge == edge_id) return Place{c, k};
    throw MoveError("edge " + std::to_string(edge_id) + " does not bound region " + std::to_string(arc.region) +
                    "; the arc would cross a curve");
  };
  const Place p1 = locate(arc.first_edge);
  const Place p2 = locate(arc.second_edge);

  int next_vertex = max_id(raw.vertices);
  int next_edge = max_id(raw.edges);
  const auto marker = [&] {
    raw.vertices.push_back(Vertex{++next_vertex, VertexKind::marker});
    return next_vertex;
  };
  const auto bd_edge = [&](int tail, int head) {
    raw.edges.push_back(Edge{++next_edge, Label{CurveKind::boundary, 1}, tail, head});
    return EdgeRef{next_edge, true};
  };

  // Splitting an endpoint edge at its midpoint: first half F ends at q, second
  // half S starts at q' (the two sides of the arc's end).
  struct Halves {
    EdgeRef first, second;
    int q = 0, q_other = 0;
  };
  const auto split = [&](const EdgeRef& ref) {
    Halves h;
    h.q = marker();
    h.q_other = marker();
    h.first = bd_edge(static_cast<int>(diagram.vertices()[diagram.start_vertex(ref)].id), h.q);
    h.second = bd_edge(h.q_other, static_cast<int>(diagram.vertices()[diagram.end_vertex(ref)].id));
    return h;
  };
  const Cycle c1 = region.cycles[p1.cycle];
  const Cycle c2 = region.cycles[p2.cycle];
  const Halves h1 = split(c1[p1.pos]);
  const Halves h2 = split(c2[p2.pos]);
  const EdgeRef side = bd_edge(h1.q, h2.q_other);
  const EdgeRef other_side = bd_edge(h2.q, h1.q_other);
  // Refs of cycle c strictly after position `from`, up to (excluding) `to`.
  const auto between = [](const Cycle& c, std::size_t from, std::size_t to) {
    Cycle out;
    for (std::size_t k = (from + 1) % c.size(); k != to; k = (k + 1) % c.size()) out.push_back(c[k]);
    return out;
  };
  const auto append = [](Cycle& dst, const Cycle& src) { dst.insert(dst.end(), src.begin(), src.end()); };

  std::vector<Cycle> others;
  std::vector<std::size_t> other_index;
  for (std::size_t c = 0; c < region.cycles.size(); ++c) {
    if (c != p1.cycle && c != p2.cycle) {
      others.push_back(region.cycles[c]);
      other_index.push_back(c);
    }
  }

  if (p1.cycle != p2.cycle) {
    Cycle merged{h1.first, side, h2.second};
    append(merged, between(c2, p2.pos, p2.pos));
    merged.push_back(h2.first);
    merged.push_back(other_side);
    merged.push_back(h1.second);
    append(merged, between(c1, p1.pos, p1.pos));
    others.push_back(std::move(merged));
    region.cycles = std::move(others);
  } else {
    Cycle a{h1.first, side, h2.second};
    append(a, between(c1, p2.pos, p1.pos));
    Cycle b{h2.first, other_side, h1.second};
    append(b, between(c1, p1.pos, p2.pos));
    if (!arc.separating) {
      if (region.genus < 1) throw MoveError("a non-separating arc needs a region of positive genus");
      --region.genus;
      others.push_back(std::move(a));
      others.push_back(std::move(b));
      region.cycles = std::move(others);
    } else {
      if (arc.moved_genus < 0 || arc.moved_genus > region.genus) throw MoveError("moved genus out of range");
      Region piece;
      piece.id = max_id(raw.regions) + 1;
      piece.genus = arc.moved_genus;
      piece.cycles.push_back(std::move(b));
      std::vector<Cycle> kept{std::move(a)};
      for (std::size_t k = 0; k < others.size(); ++k) {
        const bool moved =
            std::find(arc.moved_cycles.begin(), arc.moved_cycles.end(), other_index[k]) != arc.moved_cycles.end();
        (moved ? piece.cycles : kept).push_back(std::move(others[k]));
      }
      for (std::size_t c : arc.moved_cycles) {
        if (c >= region.cycles.size() || c == p1.cycle)
          throw MoveError("moved cycle index " + std::to_string(c) + " is invalid");
      }
      region.genus -= arc.moved_genus;
      region.cycles = std::move(kept);
      raw.regions.push_back(std::move(piece));
    }
  }
  const int e1 = arc.first_edge, e2 = arc.second_edge;
  std::erase_if(raw.edges, [&](const Edge& e) { return e.id == e1 || e.id == e2; });
  relabel_boundary(raw);
  return validate(std::move(raw));
}

std::vector<ProductArc> legal_product_arcs(const Diagram& diagram) {
  std::vector<ProductArc> arcs;
  for (const Region& r : diagram.regions()) {
    std::vector<std::pair<int, std::size_t>> ends;  // boundary edge id, cycle index
    for (std::size_t c = 0; c < r.cycles.size(); ++c)
      for (const EdgeRef& ref : r.cycles[c])
        if (diagram.edges()[diagram.edge_index(ref.edge)].label.kind == CurveKind::boundary)
          ends.emplace_back(ref.edge, c);
    std::sort(ends.begin(), ends.end());
    for (std::size_t i = 0; i < ends.size(); ++i) {
      for (std::size_t j = i + 1; j < ends.size(); ++j) {
        ProductArc arc;
        arc.region = r.id;
        arc.first_edge = ends[i].first;
        arc.second_edge = ends[j].first;
        arcs.push_back(arc);
        if (ends[i].second == ends[j].second && r.genus > 0) {
          arc.separating = false;
          arcs.push_back(arc);
        }
      }
    }
  }
  return arcs;
}

Diagram disjoint_union(const Diagram& a, const Diagram& b) {
  RawDiagram raw = a.raw();
  const int dv = max_id(a.vertices());
  const int de = max_id(a.edges());
  const int dr = max_id(a.regions());
  for (Vertex v : b.vertices()) {
    v.id += dv;
    raw.vertices.push_back(v);
  }
  for (Edge e : b.edges()) {
    e.id += de;
    e.tail += dv;
    e.head += dv;
    e.label.index += e.label.kind == CurveKind::alpha  ? a.d_alpha()
                     : e.label.kind == CurveKind::beta ? a.d_beta()
                                                       : a.boundary_count();
    raw.edges.push_back(e);
  }
  for (Region r : b.regions()) {
    r.id += dr;
    for (Cycle& c : r.cycles)
      for (EdgeRef& ref : c) ref.edge += de;
    raw.regions.push_back(std::move(r));
  }
  raw.metadata = Metadata{};
  if (!a.metadata().name.empty() || !b.metadata().name.empty())
    raw.metadata.name = a.metadata().name + " + " + b.metadata().name;
  const auto ta = a.metadata().expectations.find("total");
  const auto tb = b.metadata().expectations.find("total");
  if (ta != a.metadata().expectations.end() && tb != b.metadata().expectations.end())
    raw.metadata.expectations["total"] = std::to_string(std::stol(ta->second) * std::stol(tb->second));
  return validate(std::move(raw));
}

Diagram insert_marker(const Diagram& diagram, int edge_id) {
  RawDiagram raw = diagram.raw();
  const int m = max_id(raw.vertices) + 1;
  const int fresh = max_id(raw.edges) + 1;
  auto it = std::find_if(raw.edges.begin(), raw.edges.end(), [&](const Edge& e) { return e.id == edge_id; });
  if (it == raw.edges.end()) throw MoveError("unknown edge " + std::to_string(edge_id));
  const Edge second{fresh, it->label, m, it->head};
  it->head = m;
  raw.edges.push_back(second);
  raw.vertices.push_back(Vertex{m, VertexKind::marker});
  for (Region& r : raw.regions) {
    for (Cycle& c : r.cycles) {
      Cycle out;
      for (const EdgeRef& ref : c) {
        if (ref.edge != edge_id) {
          out.push_back(ref);
        } else if (ref.forward) {
          out.push_back(ref);
          out.push_back(EdgeRef{fresh, true});
        } else {
          out.push_back(EdgeRef{fresh, false});
          out.push_back(ref);
        }
      }
      c = std::move(out);
    }
  }
  return validate(std::move(raw));
}

Diagram puncture(const Diagram& diagram, int region_id) {
  RawDiagram raw = diagram.raw();
  Region& region = region_by_id(raw, region_id);
  const int m = max_id(raw.vertices) + 1;
  const int e = max_id(raw.edges) + 1;
  raw.vertices.push_back(Vertex{m, VertexKind::marker});
  raw.edges.push_back(Edge{e, Label{CurveKind::boundary, diagram.boundary_count() + 1}, m, m});
  region.cycles.push_back({EdgeRef{e, true}});
  raw.metadata.expectations.clear();
  return validate(std::move(raw));
}

}  // namespace sfh
