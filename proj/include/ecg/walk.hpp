#pragma once

#include <vector>

#include "ecg/graph.hpp"

namespace ecg {

/// Walk v_1 e_1 v_2 ... e_{p-1} v_p stored as parallel vertex and edge
/// sequences (vertices.size() == edges.size() + 1).
///
/// As a fixed-end-vertex (FEV) walk it is properly colored when consecutive
/// edges differ in color; the pair (e_{p-1}, e_1) is not compared. A closed
/// walk used as a tour additionally needs that wraparound pair to differ.
struct PCWalk {
  std::vector<VertexId> vertices;
  std::vector<EdgeId> edges;
  Color first_color = kNoColor;
  Color last_color = kNoColor;
  Weight weight = 0;

  bool empty() const { return edges.empty(); }
  bool closed() const { return !vertices.empty() && vertices.front() == vertices.back(); }
  VertexId front() const { return vertices.front(); }
  VertexId back() const { return vertices.back(); }

  friend bool operator==(const PCWalk&, const PCWalk&) = default;
};

// Builds a walk from a start vertex and edge sequence, filling vertices,
// end colors and weight from g. Throws DomainError if an edge does not touch
// the current vertex.
PCWalk make_walk(const ColoredMultigraph& g, VertexId start, std::vector<EdgeId> edges);

PCWalk reversed(const PCWalk& w);

// Structural FEV check: edges chain through the listed vertices, consecutive
// colors differ, end colors and weight agree with g.
bool is_pc_fev_walk(const ColoredMultigraph& g, const PCWalk& w);

}  // namespace ecg
