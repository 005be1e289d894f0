#pragma once

// Brute-force reference solvers and instance generators. Nothing here shares
// code with the solver pipeline beyond the graph container.

#include <cstdint>
#include <optional>
#include <vector>

#include "ecg/graph.hpp"
#include "ecg/kernels.hpp"
#include "ecg/walk.hpp"

namespace ecg::oracle {

struct OracleResult {
  Weight weight = 0;
  std::vector<std::uint32_t> multiplicity;
};

// Cheapest multiplicity vector q in {1..bound}^|E| whose multigraph is even
// and balanced everywhere. g must be connected (DomainError otherwise, and
// also when bound^|E| is too large to enumerate).
std::optional<OracleResult> oracle_solve(const ColoredMultigraph& g, std::uint32_t bound,
                                         kernels::Execution exec = kernels::Execution::parallel);

// Minimum weight over all PC FEV walks u -> v with at most max_edges edges,
// first color c1 and last color c2, by depth-first enumeration (branches that
// already weigh at least the best complete walk are cut). DomainError after
// node_limit visited walks.
std::optional<Weight> enumerate_pc_walks(const ColoredMultigraph& g, VertexId u, Color c1,
                                         VertexId v, Color c2, std::size_t max_edges,
                                         std::uint64_t node_limit = 200'000'000);

// Brute-force search for a PC Euler trail (closed, every edge exactly once,
// wraparound included). Intended for |E| <= 10.
std::optional<PCWalk> pc_euler_trail_bruteforce(const ColoredMultigraph& g);

struct Arc {
  std::uint32_t from = 0;
  std::uint32_t to = 0;
  Weight weight = 0;
};

struct Digraph {
  std::size_t num_vertices = 0;
  std::vector<Arc> arcs;
};

inline constexpr Color kBlue = 1;
inline constexpr Color kRed = 2;

// Every arc uv becomes a blue edge u-w (carrying the arc weight) followed by a
// red edge w-v (weight 0) through a new vertex w = n + arc index.
ColoredMultigraph encode_digraph(const Digraph& d);

// Cheapest closed walk covering every arc, by enumerating arc multiplicities
// in {1..bound} with in-degree = out-degree everywhere. nullopt when the
// digraph (all vertices) is not weakly connected or nothing balances.
std::optional<Weight> directed_cpp_bruteforce(const Digraph& d, std::uint32_t bound);

// Random connected multigraph: m edges with uniform endpoints (no loops),
// colors uniform in [1, k] and weights uniform in [0, max_w], redrawn until
// connected. Deterministic in all parameters. DomainError when m < n - 1 or
// no connected draw turns up within a fixed number of attempts.
ColoredMultigraph gen_random_instance(std::size_t n, Color k, std::size_t m, Weight max_w,
                                      std::uint64_t seed);

// Random digraph with `arcs` arcs (loops and parallel arcs allowed), weights
// uniform in [0, max_w].
Digraph gen_random_digraph(std::size_t n, std::size_t arcs, Weight max_w, std::uint64_t seed);

}  // namespace ecg::oracle
