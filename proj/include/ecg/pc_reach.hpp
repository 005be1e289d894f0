#pragma once

#include <optional>
#include <vector>

#include "ecg/graph.hpp"
#include "ecg/walk.hpp"

namespace ecg {

/// Single-source result of the layered search for minimum-weight PC FEV walks
/// starting at `source` with an edge of color `first_color`.
///
/// The search runs Dijkstra over states (x, c) = "at x, entered by an edge of
/// color c" plus one start state; from (x, c) every incident edge whose color
/// differs from c is allowed. Arc weights are edge weights, so all are >= 0.
/// Ties are broken by (distance, state index) in the queue and by ascending
/// edge id during relaxation; parents change only on strict improvement.
class PcReachTree {
 public:
  PcReachTree() = default;
  PcReachTree(const ColoredMultigraph& g, VertexId source, Color first_color);

  VertexId source() const { return source_; }
  Color first_color() const { return first_color_; }

  // Minimum weight of a PC FEV walk source -> v whose last edge has color c.
  std::optional<Weight> weight(VertexId v, Color c) const;

  // Witness for weight(v, c). `g` must be the graph the tree was built on.
  std::optional<PCWalk> walk(const ColoredMultigraph& g, VertexId v, Color c) const;

  // True when no walk leaves the source with first_color.
  bool empty() const { return reached_ == 0; }
  std::size_t reached_states() const { return reached_; }

 private:
  std::size_t state(VertexId v, Color c) const { return std::size_t{v} * colors_ + (c - 1); }

  VertexId source_ = 0;
  Color first_color_ = kNoColor;
  Color colors_ = 0;
  std::size_t num_vertices_ = 0;
  std::size_t reached_ = 0;
  std::vector<Weight> dist_;
  std::vector<std::uint32_t> parent_state_;
  std::vector<EdgeId> parent_edge_;
};

inline PcReachTree shortest_pc_walks_from(const ColoredMultigraph& g, VertexId u, Color c1) {
  return PcReachTree(g, u, c1);
}

std::optional<PCWalk> min_pc_walk(const ColoredMultigraph& g, VertexId u, Color c1, VertexId v,
                                  Color c2);

}  // namespace ecg
