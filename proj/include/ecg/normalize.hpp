#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "ecg/graph.hpp"
#include "ecg/walk.hpp"

namespace ecg {

// One double subdivision: original edge (x, y) replaced by the path
// x -path[0]- interior[0] -path[1]- interior[1] -path[2]- y.
// path[0] keeps the original edge id, color and full weight; path[1] carries
// the fresh color; path[2] has the original color and weight 0.
struct SubdividedEdge {
  EdgeId original = 0;
  std::array<EdgeId, 3> path{};
  std::array<VertexId, 2> interior{};
  Color fresh_color = 0;
};

/// Bookkeeping to carry walks on a normalized graph back to the input graph.
struct NormalizationMap {
  std::size_t original_vertices = 0;
  std::size_t original_edges = 0;
  Color original_colors = 0;
  std::vector<SubdividedEdge> paths;
  std::vector<Color> fresh_colors;

  // Per normalized edge: the original edge it belongs to, and its position in
  // a subdivision path (-1 when the edge was kept as is).
  std::vector<EdgeId> origin;
  std::vector<std::int8_t> path_position;
  std::vector<std::int32_t> path_index;

  bool identity() const { return paths.empty(); }
  bool is_interior(VertexId x) const { return x >= original_vertices; }
};

struct Normalized {
  ColoredMultigraph graph;
  NormalizationMap map;
};

// Produces a simple graph with an odd number k >= 3 of colors.
//
// Every parallel edge except the lowest-id one of its class is double
// subdivided with one shared fresh color. If k is then even (or below 3), the
// first not yet subdivided edge in input order is subdivided with another
// fresh color, repeating until k is odd and >= 3.
Normalized normalize(const ColoredMultigraph& g);

// Maps a walk on the normalized graph back to the original multigraph. Closed
// walks may start anywhere; they are rotated to start at an original vertex.
// Throws SolverBug when a subdivision path is entered but not fully traversed.
PCWalk contract_walk(const NormalizationMap& map, const ColoredMultigraph& original,
                     const ColoredMultigraph& normalized, const PCWalk& walk);

}  // namespace ecg
