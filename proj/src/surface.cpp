#include "altsurf/surface.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <optional>

#include "curve_internal.hpp"

namespace altsurf {

namespace {

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

SurfaceComplex assemble(const Configuration& cfg, const Diagram& d) {
  std::optional<PointIndex> built;
  try {
    built.emplace(d, cfg.placement);
  } catch (const std::invalid_argument& e) {
    throw GluingError(std::string("placement does not fit the diagram: ") + e.what());
  }
  const PointIndex& index = *built;

  SurfaceComplex sc;
  std::vector<int> vertex_of(index.size(), -1);
  std::map<std::pair<int, int>, int> saddle_vertex;
  for (int id = 0; id < index.size(); ++id) {
    const AttachPoint& p = index.at(id);
    if (!p.is_saddle) {
      vertex_of[id] = static_cast<int>(sc.vertices.size());
      SurfaceComplex::Vertex v;
      v.edge = p.edge;
      v.index = p.index;
      sc.vertices.push_back(v);
      continue;
    }
    const auto key = std::make_pair(p.crossing, p.level);
    auto it = saddle_vertex.find(key);
    if (it == saddle_vertex.end()) {
      SurfaceComplex::Vertex v;
      v.saddle = true;
      v.crossing = p.crossing;
      v.level = p.level;
      it = saddle_vertex.emplace(key, static_cast<int>(sc.vertices.size())).first;
      sc.vertices.push_back(v);
    }
    vertex_of[id] = it->second;
  }

  std::map<std::pair<int, int>, int> interior_edge;
  std::map<std::pair<int, int>, int> boundary_edge[2];
  // Direction (+1 from the smaller point id) in which each face runs along each edge.
  std::vector<std::vector<std::pair<int, int>>> runs;
  std::vector<int> b_on_sphere[2];
  for (auto& v : b_on_sphere) v.assign(index.size(), 0);

  for (std::size_t i = 0; i < cfg.curves.size(); ++i) {
    const Curve& c = cfg.curves[i];
    const auto r = detail::resolve_curve(c, d, index);
    if (!r.check.ok()) throw GluingError("curve " + std::to_string(i + 1) + " does not glue: " + r.check.reason);
    const int sphere = index_of(c.sphere);
    SurfaceComplex::Face face;
    face.curve = static_cast<int>(i);
    face.word = word_of(c);
    std::vector<std::pair<int, int>> run;
    for (std::size_t g = 0; g < c.gaps.size(); ++g) {
      const auto [a, b] = r.gap_points[g];
      face.vertices.push_back(vertex_of[a]);
      if (!index.at(a).is_saddle) ++b_on_sphere[sphere][a];
      const auto key = std::minmax(a, b);
      int eid = 0;
      auto& table = c.gaps[g] == Gap::interior ? interior_edge : boundary_edge[sphere];
      const auto found = table.find(key);
      if (found == table.end()) {
        eid = static_cast<int>(sc.edges.size());
        table.emplace(key, eid);
        SurfaceComplex::Edge e;
        e.kind = c.gaps[g] == Gap::interior ? SurfaceComplex::Edge::Kind::interior
                                            : SurfaceComplex::Edge::Kind::boundary;
        e.vertices = {vertex_of[key.first], vertex_of[key.second]};
        sc.edges.push_back(e);
      } else {
        eid = found->second;
      }
      sc.edges[eid].faces.push_back(static_cast<int>(i));
      face.edges.push_back(eid);
      run.push_back({eid, a < b ? 1 : -1});
    }
    runs.push_back(std::move(run));
    sc.faces.push_back(std::move(face));
  }

  for (int id = 0; id < index.size(); ++id) {
    if (index.at(id).is_saddle) continue;
    if (b_on_sphere[0][id] != 1 || b_on_sphere[1][id] != 1)
      throw GluingError("B-point " + std::to_string(index.at(id).index) + " on e" +
                        std::to_string(index.at(id).edge + 1) +
                        " is not on exactly one upper and one lower curve");
  }
  for (const auto& e : sc.edges) {
    if (e.kind == SurfaceComplex::Edge::Kind::boundary) {
      if (e.faces.size() != 1) throw GluingError("a boundary arc borders more than one region");
      continue;
    }
    if (e.faces.size() != 2 || cfg.curves[e.faces[0]].sphere == cfg.curves[e.faces[1]].sphere)
      throw GluingError("an interior arc is not shared by one upper and one lower region");
  }
  for (const auto& e : sc.edges) {
    for (int v : e.vertices) ++sc.vertices[v].valence;
  }
  for (const auto& v : sc.vertices) {
    if (v.valence != (v.saddle ? 4 : 3))
      throw GluingError(std::string(v.saddle ? "saddle" : "B-point") + " vertex has valence " +
                        std::to_string(v.valence));
  }

  Dsu regions(sc.faces.size());
  for (const auto& e : sc.edges) {
    if (e.faces.size() == 2) regions.unite(e.faces[0], e.faces[1]);
  }
  sc.connected = true;
  for (std::size_t f = 1; f < sc.faces.size(); ++f) {
    if (regions.find(static_cast<int>(f)) != regions.find(0)) sc.connected = false;
  }

  // Two-colour region orientations so that every interior arc is run in
  // opposite directions by its two regions.
  std::vector<std::vector<std::pair<int, int>>> dir_on_edge(sc.edges.size());
  for (std::size_t f = 0; f < runs.size(); ++f) {
    for (const auto& [eid, dir] : runs[f]) dir_on_edge[eid].push_back({static_cast<int>(f), dir});
  }
  std::vector<int> colour(sc.faces.size(), 0);
  sc.orientable = true;
  for (std::size_t start = 0; start < sc.faces.size() && sc.orientable; ++start) {
    if (colour[start] != 0) continue;
    colour[start] = 1;
    std::vector<int> stack{static_cast<int>(start)};
    while (!stack.empty() && sc.orientable) {
      const int f = stack.back();
      stack.pop_back();
      for (const auto& [eid, dir] : runs[f]) {
        for (const auto& [g, gdir] : dir_on_edge[eid]) {
          if (g == f) continue;
          const int want = -colour[f] * dir * gdir;
          if (colour[g] == 0) {
            colour[g] = want;
            stack.push_back(g);
          } else if (colour[g] != want) {
            sc.orientable = false;
          }
        }
      }
    }
  }

  Dsu loops(sc.vertices.size());
  for (const auto& e : sc.edges) {
    if (e.kind == SurfaceComplex::Edge::Kind::boundary) loops.unite(e.vertices[0], e.vertices[1]);
  }
  std::vector<int> roots;
  for (std::size_t v = 0; v < sc.vertices.size(); ++v) {
    if (!sc.vertices[v].saddle) roots.push_back(loops.find(static_cast<int>(v)));
  }
  std::sort(roots.begin(), roots.end());
  sc.boundary_components = static_cast<int>(std::unique(roots.begin(), roots.end()) - roots.begin());

  // Segment j of edge e runs between B-points j-1 and j; segment 0 starts at
  // the over-end and segment m ends at the under-end.
  std::vector<std::vector<int>> cover(d.edge_count());
  for (int e = 0; e < d.edge_count(); ++e) cover[e].assign(cfg.placement.edge_orders[e].size() + 1, 0);
  for (int sphere = 0; sphere < 2; ++sphere) {
    for (const auto& [key, eid] : boundary_edge[sphere]) {
      const AttachPoint& a = index.at(key.first);
      const AttachPoint& b = index.at(key.second);
      if (a.edge == b.edge && std::abs(a.index - b.index) == 1) {
        ++cover[a.edge][std::max(a.index, b.index)];
      } else if (sphere == 0) {
        ++cover[a.edge][0];
        ++cover[b.edge][0];
      } else {
        ++cover[a.edge][cover[a.edge].size() - 1];
        ++cover[b.edge][cover[b.edge].size() - 1];
      }
    }
  }
  sc.boundary_covers_link = true;
  for (const auto& segs : cover) {
    for (int c : segs) sc.boundary_covers_link = sc.boundary_covers_link && c == 1;
  }
  return sc;
}

long euler(const SurfaceComplex& sc) {
  return static_cast<long>(sc.vertices.size()) - static_cast<long>(sc.edges.size()) +
         static_cast<long>(sc.faces.size());
}

Quarters allocated_euler(const SurfaceComplex& sc) {
  std::int64_t q = 0;
  for (const auto& f : sc.faces) {
    q += 4;
    for (int v : f.vertices) q += sc.vertices[v].saddle ? 1 : 2;
    for (int e : f.edges) q -= sc.edges[e].kind == SurfaceComplex::Edge::Kind::interior ? 2 : 4;
  }
  return Quarters::from_quarters(q);
}

GenusReport genus_report(const SurfaceComplex& sc, const TargetSpec& t) {
  GenusReport r;
  r.chi = euler(sc);
  r.orientable = sc.orientable;
  r.connected = sc.connected;
  r.boundary_components = sc.boundary_components;
  r.parameter = Quarters::from_quarters(2 * (1 - r.chi));
  if (r.orientable && r.connected && r.boundary_components == 1 && r.parameter.is_integer())
    r.genus = static_cast<int>(r.parameter.to_integer());
  if (t.mode() == TargetSpec::Mode::seifert_genus) {
    r.annotation = r.genus ? "Seifert surface of genus " + std::to_string(*r.genus)
                           : "not a connected orientable surface with one boundary component";
  } else {
    r.annotation = std::string(r.orientable ? "orientable" : "non-orientable") + " spanning surface, chi " +
                   std::to_string(r.chi) + ", (1 - chi)/2 = " + r.parameter.to_string();
  }
  return r;
}

}  // namespace altsurf
