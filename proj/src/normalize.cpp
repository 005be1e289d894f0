#include "ecg/normalize.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace ecg {

Normalized normalize(const ColoredMultigraph& g) {
  if (g.num_edges() == 0) throw DomainError("normalize needs at least one edge");

  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  std::size_t n = g.num_vertices();
  Color k = g.num_colors();

  NormalizationMap map;
  map.original_vertices = g.num_vertices();
  map.original_edges = g.num_edges();
  map.original_colors = g.num_colors();

  std::vector<bool> subdivided(g.num_edges(), false);

  auto subdivide = [&](EdgeId e, Color fresh) {
    const Edge orig = edges[e];
    SubdividedEdge s;
    s.original = e;
    s.fresh_color = fresh;
    s.interior = {static_cast<VertexId>(n), static_cast<VertexId>(n + 1)};
    n += 2;
    edges[e] = Edge{orig.u, s.interior[0], orig.color, orig.weight};
    s.path[0] = e;
    s.path[1] = static_cast<EdgeId>(edges.size());
    edges.push_back(Edge{s.interior[0], s.interior[1], fresh, 0});
    s.path[2] = static_cast<EdgeId>(edges.size());
    edges.push_back(Edge{s.interior[1], orig.v, orig.color, 0});
    subdivided[e] = true;
    map.paths.push_back(s);
  };

  std::map<std::pair<VertexId, VertexId>, EdgeId> first_of_class;
  std::vector<EdgeId> parallel;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const Edge& ed = g.edge(e);
    auto key = std::minmax(ed.u, ed.v);
    if (!first_of_class.emplace(key, e).second) parallel.push_back(e);
  }
  if (!parallel.empty()) {
    const Color shared = ++k;
    map.fresh_colors.push_back(shared);
    for (EdgeId e : parallel) subdivide(e, shared);
  }

  EdgeId next = 0;
  while (k < 3 || k % 2 == 0) {
    while (next < g.num_edges() && subdivided[next]) ++next;
    if (next == g.num_edges()) {
      throw DomainError("cannot reach an odd color count: every edge already subdivided");
    }
    const Color fresh = ++k;
    map.fresh_colors.push_back(fresh);
    subdivide(next, fresh);
  }

  map.origin.resize(edges.size());
  map.path_position.assign(edges.size(), -1);
  map.path_index.assign(edges.size(), -1);
  for (EdgeId e = 0; e < g.num_edges(); ++e) map.origin[e] = e;
  for (std::size_t p = 0; p < map.paths.size(); ++p) {
    const SubdividedEdge& s = map.paths[p];
    for (int pos = 0; pos < 3; ++pos) {
      map.origin[s.path[pos]] = s.original;
      map.path_position[s.path[pos]] = static_cast<std::int8_t>(pos);
      map.path_index[s.path[pos]] = static_cast<std::int32_t>(p);
    }
  }

  return Normalized{ColoredMultigraph(n, k, std::move(edges)), std::move(map)};
}

PCWalk contract_walk(const NormalizationMap& map, const ColoredMultigraph& original,
                     const ColoredMultigraph& normalized, const PCWalk& walk) {
  if (walk.empty()) return walk;

  std::vector<VertexId> verts = walk.vertices;
  std::vector<EdgeId> edges = walk.edges;
  if (walk.closed() && map.is_interior(verts.front())) {
    auto it = std::find_if(verts.begin(), verts.end() - 1,
                           [&](VertexId x) { return !map.is_interior(x); });
    if (it == verts.end() - 1) throw SolverBug("closed walk never visits an original vertex");
    const auto shift = it - verts.begin();
    verts.pop_back();
    std::rotate(verts.begin(), verts.begin() + shift, verts.end());
    verts.push_back(verts.front());
    std::rotate(edges.begin(), edges.begin() + shift, edges.end());
  }
  if (map.is_interior(verts.front()) || map.is_interior(verts.back())) {
    throw SolverBug("walk ends inside a subdivision path");
  }

  std::vector<EdgeId> out;
  out.reserve(edges.size());
  for (std::size_t i = 0; i < edges.size();) {
    const EdgeId e = edges[i];
    if (e >= normalized.num_edges()) throw SolverBug("walk edge out of range");
    if (map.path_position[e] < 0) {
      out.push_back(map.origin[e]);
      ++i;
      continue;
    }
    const SubdividedEdge& s = map.paths[static_cast<std::size_t>(map.path_index[e])];
    const bool forward = map.path_position[e] == 0;
    const bool backward = map.path_position[e] == 2;
    if ((!forward && !backward) || i + 3 > edges.size()) {
      throw SolverBug("walk enters subdivision path of edge " + std::to_string(s.original) +
                      " without completing it");
    }
    for (int step = 0; step < 3; ++step) {
      const EdgeId expect = forward ? s.path[step] : s.path[2 - step];
      if (edges[i + step] != expect) {
        throw SolverBug("walk leaves subdivision path of edge " + std::to_string(s.original) +
                        " midway");
      }
    }
    out.push_back(s.original);
    i += 3;
  }

  PCWalk result = make_walk(original, verts.front(), std::move(out));
  if (result.weight != walk.weight) throw SolverBug("contraction changed the walk weight");
  return result;
}

}  // namespace ecg
