#include "sfh/diagram.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <tuple>
#include <utility>

#include "sfh/union_find.hpp"

namespace sfh {

std::string to_string(const Label& label) {
  switch (label.kind) {
    case CurveKind::alpha:
      return "alpha(" + std::to_string(label.index) + ")";
    case CurveKind::beta:
      return "beta(" + std::to_string(label.index) + ")";
    case CurveKind::boundary:
      return "bd(" + std::to_string(label.index) + ")";
  }
  return "?";
}

std::string to_string(const Generator& generator) {
  std::string out = "{";
  for (std::size_t i = 0; i < generator.points.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(generator.points[i]);
  }
  return out + "}";
}

namespace {

std::string join_messages(const std::vector<Diagnostic>& diagnostics) {
  std::string out = "invalid diagram";
  for (const auto& d : diagnostics) out += "\n  " + d.code + ": " + d.message;
  return out;
}

struct Lookups {
  std::map<int, std::size_t> vertex;
  std::map<int, std::size_t> edge;
};

class Checker {
 public:
  explicit Checker(const RawDiagram& raw) : raw_(raw) {}

  std::vector<Diagnostic> run() {
    check_references();
    if (!out_.empty()) return out_;
    check_local_structure();
    if (!out_.empty()) return out_;
    check_global_structure();
    return out_;
  }

 private:
  void report(std::string code, std::string message, std::vector<int> ids) {
    out_.push_back(Diagnostic{std::move(code), std::move(message), std::move(ids)});
  }

  void check_references() {
    for (std::size_t i = 0; i < raw_.vertices.size(); ++i) {
      const int id = raw_.vertices[i].id;
      if (id <= 0) report("invalid-id", "vertex id " + std::to_string(id) + " must be positive", {id});
      if (!lookups_.vertex.emplace(id, i).second)
        report("duplicate-id", "duplicate vertex " + std::to_string(id), {id});
    }
    for (std::size_t i = 0; i < raw_.edges.size(); ++i) {
      const Edge& e = raw_.edges[i];
      if (e.id <= 0) report("invalid-id", "edge id " + std::to_string(e.id) + " must be positive", {e.id});
      if (!lookups_.edge.emplace(e.id, i).second)
        report("duplicate-id", "duplicate edge " + std::to_string(e.id), {e.id});
      if (e.label.index < 1)
        report("label-index", "edge " + std::to_string(e.id) + " has label index below 1", {e.id});
      for (int v : {e.tail, e.head}) {
        if (!lookups_.vertex.contains(v))
          report("unknown-vertex", "edge " + std::to_string(e.id) + " cites unknown vertex " + std::to_string(v),
                 {e.id, v});
      }
    }
    std::set<int> region_ids;
    for (const Region& r : raw_.regions) {
      if (r.id <= 0) report("invalid-id", "region id " + std::to_string(r.id) + " must be positive", {r.id});
      if (!region_ids.insert(r.id).second) report("duplicate-id", "duplicate region " + std::to_string(r.id), {r.id});
      if (r.genus < 0) report("negative-genus", "region " + std::to_string(r.id) + " has negative genus", {r.id});
      if (r.cycles.empty()) report("empty-region", "region " + std::to_string(r.id) + " has no boundary cycle", {r.id});
      for (const Cycle& c : r.cycles) {
        if (c.empty()) report("empty-cycle", "region " + std::to_string(r.id) + " has an empty cycle", {r.id});
        for (const EdgeRef& ref : c) {
          if (!lookups_.edge.contains(ref.edge))
            report("unknown-edge",
                   "region " + std::to_string(r.id) + " cites unknown edge " + std::to_string(ref.edge),
                   {r.id, ref.edge});
        }
      }
    }
  }

  const Edge& edge(int id) const { return raw_.edges[lookups_.edge.at(id)]; }
  int start_of(const EdgeRef& ref) const { return ref.forward ? edge(ref.edge).tail : edge(ref.edge).head; }
  int end_of(const EdgeRef& ref) const { return ref.forward ? edge(ref.edge).head : edge(ref.edge).tail; }

  void check_local_structure() {
    // Curve indices must be exactly 1..N for each kind.
    std::map<CurveKind, std::set<int>> indices;
    for (const Edge& e : raw_.edges) indices[e.label.kind].insert(e.label.index);
    for (const auto& [kind, set] : indices) {
      if (*set.rbegin() != static_cast<int>(set.size())) {
        report("label-gap", to_string(Label{kind, *set.rbegin()}) + ": curve indices are not contiguous from 1", {});
      }
    }

    // Edge ends at each vertex.
    struct End {
      Label label;
      bool incoming;
      int edge;
    };
    std::map<int, std::vector<End>> ends;
    for (const Edge& e : raw_.edges) {
      ends[e.tail].push_back(End{e.label, false, e.id});
      ends[e.head].push_back(End{e.label, true, e.id});
    }
    for (const Vertex& v : raw_.vertices) {
      const auto& list = ends[v.id];
      if (v.kind == VertexKind::crossing) {
        int alpha_in = 0, alpha_out = 0, beta_in = 0, beta_out = 0;
        std::set<int> alpha_index, beta_index;
        bool other = false;
        for (const End& end : list) {
          if (end.label.kind == CurveKind::alpha) {
            (end.incoming ? alpha_in : alpha_out)++;
            alpha_index.insert(end.label.index);
          } else if (end.label.kind == CurveKind::beta) {
            (end.incoming ? beta_in : beta_out)++;
            beta_index.insert(end.label.index);
          } else {
            other = true;
          }
        }
        if (list.size() != 4 || other || alpha_in != 1 || alpha_out != 1 || beta_in != 1 || beta_out != 1 ||
            alpha_index.size() != 1 || beta_index.size() != 1) {
          report("crossing-degree",
                 "crossing " + std::to_string(v.id) + " must meet one alpha curve and one beta curve, in and out",
                 {v.id});
        }
      } else {
        bool ok = list.size() == 2 && list[0].label == list[1].label && list[0].incoming != list[1].incoming;
        if (!ok) {
          report("marker-degree",
                 "marker " + std::to_string(v.id) + " must have one incoming and one outgoing edge of one curve",
                 {v.id});
        }
      }
    }

    // Occurrences in region cycles.
    std::map<int, std::pair<int, int>> occurrences;
    for (const Region& r : raw_.regions)
      for (const Cycle& c : r.cycles)
        for (const EdgeRef& ref : c) (ref.forward ? occurrences[ref.edge].first : occurrences[ref.edge].second)++;
    for (const Edge& e : raw_.edges) {
      const auto [fwd, back] = occurrences[e.id];
      if (e.label.kind == CurveKind::boundary) {
        if (fwd + back != 1)
          report("edge-occurrence",
                 "boundary edge " + std::to_string(e.id) + " occurs " + std::to_string(fwd + back) +
                     " times in region cycles (expected once)",
                 {e.id});
      } else if (fwd != 1 || back != 1) {
        report("edge-occurrence",
               "edge " + std::to_string(e.id) + " occurs +" + std::to_string(fwd) + "/-" + std::to_string(back) +
                   " in region cycles (expected once in each direction)",
               {e.id});
      }
    }

    for (const Region& r : raw_.regions) {
      for (std::size_t c = 0; c < r.cycles.size(); ++c) {
        const Cycle& cycle = r.cycles[c];
        for (std::size_t k = 0; k < cycle.size(); ++k) {
          const EdgeRef& here = cycle[k];
          const EdgeRef& next = cycle[(k + 1) % cycle.size()];
          if (end_of(here) != start_of(next)) {
            report("broken-cycle",
                   "region " + std::to_string(r.id) + " cycle " + std::to_string(c + 1) + " does not close after edge " +
                       std::to_string(here.edge),
                   {r.id, here.edge});
          }
        }
      }
    }
  }

  void check_global_structure() {
    // Each curve label must chain into one circle.
    std::map<std::pair<int, Label>, int> outgoing;  // (vertex, label) -> edge id
    std::map<Label, std::vector<int>> by_label;
    for (const Edge& e : raw_.edges) {
      outgoing[{e.tail, e.label}] = e.id;
      by_label[e.label].push_back(e.id);
    }
    for (const auto& [label, ids] : by_label) {
      const int first = ids.front();
      int current = first;
      std::size_t steps = 0;
      do {
        ++steps;
        const Edge& e = edge(current);
        current = outgoing.at({e.head, label});
      } while (current != first && steps <= ids.size());
      if (steps != ids.size()) {
        report("curve-not-circle", "curve " + to_string(label) + " not a single circle", {first});
      }
    }

    // Corners.
    struct End {
      int edge;
      bool head;
      auto operator<=>(const End&) const = default;
    };
    std::map<int, std::vector<std::pair<End, End>>> corners;
    for (const Region& r : raw_.regions) {
      for (const Cycle& cycle : r.cycles) {
        for (std::size_t k = 0; k < cycle.size(); ++k) {
          const EdgeRef& in = cycle[k];
          const EdgeRef& out = cycle[(k + 1) % cycle.size()];
          corners[end_of(in)].push_back({End{in.edge, in.forward}, End{out.edge, !out.forward}});
        }
      }
    }
    for (const Vertex& v : raw_.vertices) {
      const auto& list = corners[v.id];
      if (v.kind == VertexKind::crossing) {
        std::set<std::pair<End, End>> quadrants;
        bool mixed = list.size() == 4;
        for (auto [a, b] : list) {
          const bool a_alpha = edge(a.edge).label.kind == CurveKind::alpha;
          const bool b_alpha = edge(b.edge).label.kind == CurveKind::alpha;
          if (a_alpha == b_alpha) mixed = false;
          if (!a_alpha) std::swap(a, b);
          quadrants.insert({a, b});
        }
        if (!mixed || quadrants.size() != 4) {
          report("crossing-corners",
                 "crossing " + std::to_string(v.id) + " must have four corners, each between an alpha and a beta edge",
                 {v.id});
        }
      } else {
        bool ok = !list.empty();
        if (ok) {
          const std::size_t expected = edge(list.front().first.edge).label.kind == CurveKind::boundary ? 1 : 2;
          ok = list.size() == expected;
        }
        for (const auto& [a, b] : list) ok = ok && !(a == b);
        if (!ok) report("marker-corners", "marker " + std::to_string(v.id) + " has malformed corners", {v.id});
      }
    }

    // Components need boundary.
    DisjointSets sets(raw_.vertices.size());
    for (const Edge& e : raw_.edges) sets.unite(lookups_.vertex.at(e.tail), lookups_.vertex.at(e.head));
    // A region joins all of its boundary cycles into one component.
    for (const Region& r : raw_.regions) {
      const Edge& first = edge(r.cycles.front().front().edge);
      for (const Cycle& c : r.cycles) {
        for (const EdgeRef& ref : c) sets.unite(lookups_.vertex.at(first.tail), lookups_.vertex.at(edge(ref.edge).tail));
      }
    }
    std::set<std::size_t> with_boundary;
    for (const Edge& e : raw_.edges) {
      if (e.label.kind == CurveKind::boundary) with_boundary.insert(sets.find(lookups_.vertex.at(e.tail)));
    }
    std::set<std::size_t> reported;
    for (std::size_t i = 0; i < raw_.vertices.size(); ++i) {
      const std::size_t root = sets.find(i);
      if (!with_boundary.contains(root) && reported.insert(root).second) {
        report("component-without-boundary",
               "component containing vertex " + std::to_string(raw_.vertices[i].id) + " has no boundary circle",
               {raw_.vertices[i].id});
      }
    }
  }

  const RawDiagram& raw_;
  Lookups lookups_;
  std::vector<Diagnostic> out_;
};

std::tuple<int, int> ref_key(const EdgeRef& ref) { return {ref.edge, ref.forward ? 0 : 1}; }

void canonicalize_cycle(Cycle& cycle) {
  auto best = std::min_element(cycle.begin(), cycle.end(),
                               [](const EdgeRef& a, const EdgeRef& b) { return ref_key(a) < ref_key(b); });
  std::rotate(cycle.begin(), best, cycle.end());
}

bool cycle_less(const Cycle& a, const Cycle& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                      [](const EdgeRef& x, const EdgeRef& y) { return ref_key(x) < ref_key(y); });
}

}  // namespace

DiagramError::DiagramError(std::vector<Diagnostic> diagnostics)
    : std::runtime_error(join_messages(diagnostics)), diagnostics_(std::move(diagnostics)) {}

std::vector<Diagnostic> check(const RawDiagram& raw) { return Checker(raw).run(); }

Diagram validate(RawDiagram raw) {
  auto diagnostics = check(raw);
  if (!diagnostics.empty()) throw DiagramError(std::move(diagnostics));

  std::sort(raw.vertices.begin(), raw.vertices.end(), [](const Vertex& a, const Vertex& b) { return a.id < b.id; });
  std::sort(raw.edges.begin(), raw.edges.end(), [](const Edge& a, const Edge& b) { return a.id < b.id; });
  std::sort(raw.regions.begin(), raw.regions.end(), [](const Region& a, const Region& b) { return a.id < b.id; });
  for (Region& r : raw.regions) {
    for (Cycle& c : r.cycles) canonicalize_cycle(c);
    std::sort(r.cycles.begin(), r.cycles.end(), cycle_less);
  }

  Diagram d;
  d.raw_ = std::move(raw);
  const auto& vertices = d.raw_.vertices;
  const auto& edges = d.raw_.edges;
  const auto& regions = d.raw_.regions;
  for (std::size_t i = 0; i < vertices.size(); ++i) d.vertex_lookup_[vertices[i].id] = i;
  for (std::size_t i = 0; i < edges.size(); ++i) d.edge_lookup_[edges[i].id] = i;
  for (std::size_t i = 0; i < regions.size(); ++i) d.region_lookup_[regions[i].id] = i;

  for (const Edge& e : edges) {
    int& slot = e.label.kind == CurveKind::alpha  ? d.d_alpha_
                : e.label.kind == CurveKind::beta ? d.d_beta_
                                                  : d.boundary_count_;
    slot = std::max(slot, e.label.index);
  }

  d.positive_side_.assign(edges.size(), 0);
  d.negative_side_.assign(edges.size(), std::nullopt);
  d.touches_boundary_.assign(regions.size(), false);
  d.crossing_corners_.assign(regions.size(), 0);
  d.quadrants_.assign(vertices.size(), {});
  for (std::size_t r = 0; r < regions.size(); ++r) {
    for (const Cycle& cycle : regions[r].cycles) {
      for (std::size_t k = 0; k < cycle.size(); ++k) {
        const EdgeRef& in = cycle[k];
        const EdgeRef& out = cycle[(k + 1) % cycle.size()];
        const std::size_t e = d.edge_lookup_.at(in.edge);
        if (in.forward) {
          d.positive_side_[e] = r;
        } else {
          d.negative_side_[e] = r;
        }
        if (edges[e].label.kind == CurveKind::boundary) d.touches_boundary_[r] = true;
        Corner corner;
        corner.region = r;
        corner.vertex = d.end_vertex(in);
        corner.incoming = EdgeEnd{e, in.forward};
        corner.outgoing = EdgeEnd{d.edge_lookup_.at(out.edge), !out.forward};
        d.corners_.push_back(corner);
        d.quadrants_[corner.vertex].push_back(r);
        if (vertices[corner.vertex].kind == VertexKind::crossing) ++d.crossing_corners_[r];
      }
    }
  }
  // A boundary edge traversed backward still has its region on the positive
  // side of the traversal; record it there.
  for (std::size_t e = 0; e < edges.size(); ++e) {
    if (edges[e].label.kind == CurveKind::boundary && d.negative_side_[e]) {
      d.positive_side_[e] = *d.negative_side_[e];
      d.negative_side_[e] = std::nullopt;
    }
  }

  d.alpha_of_.assign(vertices.size(), 0);
  d.beta_of_.assign(vertices.size(), 0);
  for (const Edge& e : edges) {
    for (int v : {e.tail, e.head}) {
      const std::size_t vi = d.vertex_lookup_.at(v);
      if (e.label.kind == CurveKind::alpha) d.alpha_of_[vi] = e.label.index;
      if (e.label.kind == CurveKind::beta) d.beta_of_[vi] = e.label.index;
    }
  }
  for (std::size_t v = 0; v < vertices.size(); ++v) {
    if (vertices[v].kind == VertexKind::crossing) d.crossings_.push_back(v);
  }
  d.interior_position_.assign(regions.size(), std::nullopt);
  for (std::size_t r = 0; r < regions.size(); ++r) {
    if (!d.touches_boundary_[r]) {
      d.interior_position_[r] = d.interior_.size();
      d.interior_.push_back(r);
    }
  }
  return d;
}

Diagram Diagram::with_metadata(Metadata metadata) const {
  Diagram copy = *this;
  copy.raw_.metadata = std::move(metadata);
  return copy;
}

std::size_t Diagram::vertex_index(int id) const { return vertex_lookup_.at(id); }
std::size_t Diagram::edge_index(int id) const { return edge_lookup_.at(id); }
std::size_t Diagram::region_index(int id) const { return region_lookup_.at(id); }

int Diagram::region_euler_characteristic(std::size_t region) const {
  const Region& r = raw_.regions[region];
  return 2 - 2 * r.genus - static_cast<int>(r.cycles.size());
}

std::size_t Diagram::start_vertex(const EdgeRef& ref) const {
  const Edge& e = raw_.edges[edge_lookup_.at(ref.edge)];
  return vertex_lookup_.at(ref.forward ? e.tail : e.head);
}

std::size_t Diagram::end_vertex(const EdgeRef& ref) const {
  const Edge& e = raw_.edges[edge_lookup_.at(ref.edge)];
  return vertex_lookup_.at(ref.forward ? e.head : e.tail);
}

std::vector<std::size_t> Diagram::curve_edges(const Label& label) const {
  std::vector<std::size_t> ordered;
  std::map<int, std::size_t> outgoing;  // tail vertex id -> edge index
  for (std::size_t e = 0; e < raw_.edges.size(); ++e) {
    if (raw_.edges[e].label == label) outgoing[raw_.edges[e].tail] = e;
  }
  if (outgoing.empty()) return ordered;
  std::size_t first = raw_.edges.size();
  for (const auto& [tail, e] : outgoing) first = std::min(first, e);
  std::size_t current = first;
  do {
    ordered.push_back(current);
    current = outgoing.at(raw_.edges[current].head);
  } while (current != first);
  return ordered;
}

bool Diagram::same_cells(const Diagram& other) const {
  return raw_.vertices == other.raw_.vertices && raw_.edges == other.raw_.edges &&
         raw_.regions == other.raw_.regions;
}

int euler_characteristic(const Diagram& diagram) {
  int chi = static_cast<int>(diagram.vertices().size()) - static_cast<int>(diagram.edges().size());
  for (std::size_t r = 0; r < diagram.regions().size(); ++r) chi += diagram.region_euler_characteristic(r);
  return chi;
}

BalanceReport is_balanced(const Diagram& diagram) {
  BalanceReport report;
  if (diagram.d_alpha() != diagram.d_beta()) {
    report.diagnostics.push_back("curve counts differ: " + std::to_string(diagram.d_alpha()) + " alpha vs " +
                                 std::to_string(diagram.d_beta()) + " beta");
  }
  // Components of the surface cut along one curve family: regions glued across
  // edges of the other family.
  const auto check_complement = [&](CurveKind glue, const char* name) {
    DisjointSets sets(diagram.regions().size());
    for (std::size_t e = 0; e < diagram.edges().size(); ++e) {
      if (diagram.edges()[e].label.kind != glue) continue;
      if (auto neg = diagram.negative_side(e)) sets.unite(diagram.positive_side(e), *neg);
    }
    std::map<std::size_t, std::vector<int>> members;
    std::set<std::size_t> reaches_boundary;
    for (std::size_t r = 0; r < diagram.regions().size(); ++r) {
      members[sets.find(r)].push_back(diagram.regions()[r].id);
      if (diagram.touches_boundary(r)) reaches_boundary.insert(sets.find(r));
    }
    for (const auto& [root, ids] : members) {
      if (reaches_boundary.contains(root)) continue;
      std::ostringstream msg;
      msg << "component of the complement of the " << name << " curves made of regions {";
      for (std::size_t i = 0; i < ids.size(); ++i) msg << (i ? "," : "") << ids[i];
      msg << "} misses the boundary";
      report.diagnostics.push_back(msg.str());
    }
  };
  check_complement(CurveKind::beta, "alpha");
  check_complement(CurveKind::alpha, "beta");
  report.balanced = report.diagnostics.empty();
  return report;
}

std::vector<Generator> enumerate_generators(const Diagram& diagram) {
  const int d = diagram.d_alpha();
  if (d != diagram.d_beta()) return {};
  std::vector<std::vector<std::size_t>> on_alpha(static_cast<std::size_t>(d) + 1);
  for (std::size_t v : diagram.crossings()) on_alpha[diagram.alpha_of(v)].push_back(v);

  std::vector<Generator> out;
  std::vector<bool> beta_used(static_cast<std::size_t>(d) + 1, false);
  std::vector<int> chosen;
  const auto recurse = [&](auto&& self, int alpha) -> void {
    if (alpha > d) {
      Generator g{chosen};
      std::sort(g.points.begin(), g.points.end());
      out.push_back(std::move(g));
      return;
    }
    for (std::size_t v : on_alpha[alpha]) {
      const int beta = diagram.beta_of(v);
      if (beta_used[beta]) continue;
      beta_used[beta] = true;
      chosen.push_back(diagram.vertices()[v].id);
      self(self, alpha + 1);
      chosen.pop_back();
      beta_used[beta] = false;
    }
  };
  recurse(recurse, 1);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace sfh
