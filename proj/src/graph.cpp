#include "ecg/graph.hpp"

#include <numeric>

namespace ecg {

namespace {

void check_vertex(const ColoredMultigraph& g, VertexId u) {
  if (u >= g.num_vertices()) {
    throw DomainError("vertex " + std::to_string(u) + " out of range");
  }
}

}  // namespace

ColoredMultigraph::ColoredMultigraph(std::size_t num_vertices, Color num_colors,
                                     std::vector<Edge> edges)
    : num_vertices_(num_vertices), num_colors_(num_colors), edges_(std::move(edges)) {
  std::vector<std::size_t> deg(num_vertices_, 0);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    const Edge& ed = edges_[e];
    if (ed.u >= num_vertices_ || ed.v >= num_vertices_) {
      throw DomainError("edge " + std::to_string(e) + " has an endpoint out of range");
    }
    if (ed.u == ed.v) throw DomainError("edge " + std::to_string(e) + " is a loop");
    if (ed.color < 1 || ed.color > num_colors_) {
      throw DomainError("edge " + std::to_string(e) + " has color outside [1, k]");
    }
    if (ed.weight < 0) throw DomainError("edge " + std::to_string(e) + " has negative weight");
    ++deg[ed.u];
    ++deg[ed.v];
  }
  offsets_.assign(num_vertices_ + 1, 0);
  for (std::size_t x = 0; x < num_vertices_; ++x) offsets_[x + 1] = offsets_[x] + deg[x];
  incidence_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    incidence_[fill[edges_[e].u]++] = static_cast<EdgeId>(e);
    incidence_[fill[edges_[e].v]++] = static_cast<EdgeId>(e);
  }
}

Weight ColoredMultigraph::total_weight() const {
  Weight sum = 0;
  for (const Edge& e : edges_) sum += e.weight;
  return sum;
}

ColorDegreeProfile color_degrees(const ColoredMultigraph& g, VertexId u) {
  check_vertex(g, u);
  ColorDegreeProfile p;
  p.vertex = u;
  p.per_color.assign(g.num_colors() + 1, 0);
  for (EdgeId e : g.incident(u)) ++p.per_color[g.edge(e).color];
  p.degree = g.degree(u);
  for (Color c = 1; c <= g.num_colors(); ++c) {
    if (2 * p.per_color[c] > p.degree) p.dominant = c;
  }
  return p;
}

bool is_balanced(const ColoredMultigraph& g, VertexId u) {
  return !color_degrees(g, u).dominant.has_value();
}

bool is_even(const ColoredMultigraph& g, VertexId u) {
  check_vertex(g, u);
  return g.degree(u) % 2 == 0;
}

bool is_connected(const ColoredMultigraph& g) {
  const std::size_t n = g.num_vertices();
  if (n == 0) return false;
  std::vector<VertexId> parent(n);
  std::iota(parent.begin(), parent.end(), VertexId{0});
  auto find = [&](VertexId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::size_t components = n;
  for (const Edge& e : g.edges()) {
    VertexId a = find(e.u), b = find(e.v);
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components == 1;
}

std::optional<VertexId> single_color_vertex(const ColoredMultigraph& g) {
  for (VertexId x = 0; x < g.num_vertices(); ++x) {
    auto inc = g.incident(x);
    if (inc.empty()) continue;
    const Color c = g.edge(inc.front()).color;
    bool uniform = true;
    for (EdgeId e : inc) {
      if (g.edge(e).color != c) {
        uniform = false;
        break;
      }
    }
    if (uniform) return x;
  }
  return std::nullopt;
}

}  // namespace ecg
