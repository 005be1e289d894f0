#include "ecg/walk.hpp"

#include <algorithm>

namespace ecg {

PCWalk make_walk(const ColoredMultigraph& g, VertexId start, std::vector<EdgeId> edges) {
  PCWalk w;
  w.vertices.reserve(edges.size() + 1);
  w.vertices.push_back(start);
  VertexId at = start;
  for (EdgeId e : edges) {
    if (e >= g.num_edges()) throw DomainError("edge id out of range in walk");
    const Edge& ed = g.edge(e);
    if (ed.u != at && ed.v != at) {
      throw DomainError("edge " + std::to_string(e) + " does not touch vertex " +
                        std::to_string(at));
    }
    at = ed.other(at);
    w.vertices.push_back(at);
    w.weight += ed.weight;
  }
  if (!edges.empty()) {
    w.first_color = g.edge(edges.front()).color;
    w.last_color = g.edge(edges.back()).color;
  }
  w.edges = std::move(edges);
  return w;
}

PCWalk reversed(const PCWalk& w) {
  PCWalk r = w;
  std::reverse(r.vertices.begin(), r.vertices.end());
  std::reverse(r.edges.begin(), r.edges.end());
  std::swap(r.first_color, r.last_color);
  return r;
}

bool is_pc_fev_walk(const ColoredMultigraph& g, const PCWalk& w) {
  if (w.edges.empty() || w.vertices.size() != w.edges.size() + 1) return false;
  Weight total = 0;
  for (std::size_t i = 0; i < w.edges.size(); ++i) {
    if (w.edges[i] >= g.num_edges()) return false;
    const Edge& e = g.edge(w.edges[i]);
    const VertexId a = w.vertices[i], b = w.vertices[i + 1];
    if (!((e.u == a && e.v == b) || (e.u == b && e.v == a))) return false;
    if (i > 0 && g.edge(w.edges[i - 1]).color == e.color) return false;
    total += e.weight;
  }
  return total == w.weight && w.first_color == g.edge(w.edges.front()).color &&
         w.last_color == g.edge(w.edges.back()).color;
}

}  // namespace ecg
