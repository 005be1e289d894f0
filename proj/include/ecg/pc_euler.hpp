#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ecg/graph.hpp"
#include "ecg/walk.hpp"

namespace ecg {

struct KotzigReport {
  enum class Violation { none, no_edges, disconnected, odd_vertex, unbalanced_vertex };

  Violation violation = Violation::none;
  std::optional<VertexId> vertex;

  bool feasible() const { return violation == Violation::none; }
};

// Connected + every vertex even and balanced. Reports the first violation in
// the order: no edges, connectivity, then vertices by ascending id (odd
// before unbalanced at the same vertex).
KotzigReport kotzig_check(const ColoredMultigraph& g);

std::string to_string(KotzigReport::Violation v);

/// Pairing of edge-ends at every vertex with distinct colors inside each pair.
///
/// An edge-end is 2 * edge + side, where side 0 is the end at edge.u and
/// side 1 the end at edge.v.
struct TransitionSystem {
  std::vector<std::uint32_t> partner;

  static std::uint32_t end_of(EdgeId e, int side) { return 2 * e + static_cast<std::uint32_t>(side); }
  static EdgeId edge_of(std::uint32_t end) { return end / 2; }
  static std::uint32_t opposite(std::uint32_t end) { return end ^ 1U; }
};

VertexId end_vertex(const ColoredMultigraph& g, std::uint32_t end);

// Greedy construction: at each vertex pair an end of the most frequent
// remaining color with an end of the second most frequent color. Requires
// every vertex to be even and balanced (DomainError otherwise).
TransitionSystem build_transition_system(const ColoredMultigraph& g);

// Every end paired exactly once, pairs share a vertex and differ in color.
bool is_valid_transition_system(const ColoredMultigraph& g, const TransitionSystem& ts);

// Number of closed trails obtained by following the transition system.
std::size_t count_trails(const ColoredMultigraph& g, const TransitionSystem& ts);

struct EulerStats {
  std::size_t initial_trails = 0;
  std::size_t merges = 0;
};

// PC Euler trail of a graph meeting the Kotzig conditions (DomainError
// otherwise). The trail starts at the smallest vertex with an edge, leaving
// along its smallest incident edge id.
PCWalk pc_euler_trail(const ColoredMultigraph& g, EulerStats* stats = nullptr);

enum class Coverage { none, at_least_once, exactly_once };

struct WalkReport {
  enum class Failure {
    none,
    empty,
    malformed,
    not_adjacent,
    same_color,
    wraparound_same_color,
    not_closed,
    missing_edge,
    repeated_edge,
    weight_mismatch
  };

  Failure failure = Failure::none;
  std::size_t position = 0;  // index into the edge sequence, when meaningful
  Weight weight = 0;         // recomputed from the graph
  std::string message;

  bool ok() const { return failure == Failure::none; }
};

std::string to_string(WalkReport::Failure f);

// Checks that `walk` is a properly colored closed walk in g (the wraparound
// pair included), optionally that it covers the edges, and that its stored
// weight matches the graph.
WalkReport verify_pc_closed_walk(const ColoredMultigraph& g, const PCWalk& walk,
                                 Coverage coverage);

}  // namespace ecg
