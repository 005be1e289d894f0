#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "ecg/graph.hpp"

namespace ecg {

struct WeightedEdge {
  std::uint32_t u = 0;
  std::uint32_t v = 0;
  Weight weight = 0;
};

struct MatchingInstance {
  std::size_t num_vertices = 0;
  std::vector<WeightedEdge> edges;
};

struct Matching {
  // Indices into MatchingInstance::edges, ascending.
  std::vector<std::size_t> edges;
  Weight weight = 0;
};

/// Exact minimum-weight perfect matching (Edmonds' blossom algorithm, O(n^3)
/// primal-dual in integer arithmetic). Returns nullopt when the graph has no
/// perfect matching. Parallel edges collapse to the lightest one (lowest index
/// on ties); weights must be >= 0.
std::optional<Matching> min_weight_perfect_matching(const MatchingInstance& inst);

// Exhaustive enumeration of all perfect matchings; n <= 12.
std::optional<Matching> brute_force_matching(const MatchingInstance& inst);

// Disjoint edges covering every vertex, weight equal to the edge sum.
bool is_perfect_matching(const MatchingInstance& inst, const Matching& m);

}  // namespace ecg
