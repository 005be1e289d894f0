#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ecg/aux_graph.hpp"
#include "ecg/blossom.hpp"
#include "ecg/graph.hpp"
#include "ecg/kernels.hpp"
#include "ecg/normalize.hpp"
#include "ecg/walk.hpp"

namespace ecg {

enum class Status { optimal, infeasible };

enum class InfeasibleReason { none, no_edges, disconnected, single_color_vertex, no_perfect_matching };

std::string to_string(Status s);
std::string to_string(InfeasibleReason r);

struct Solution {
  Status status = Status::infeasible;
  InfeasibleReason reason = InfeasibleReason::none;
  Weight total_weight = 0;
  Weight matching_weight = 0;
  // q_e per original edge; empty when infeasible.
  std::vector<std::uint32_t> multiplicity;
  // Closed PC walk on the original multigraph; empty when infeasible.
  PCWalk walk;
};

struct SolveOptions {
  bool verify = true;
  kernels::Execution execution = kernels::Execution::parallel;
};

// Intermediate products of one solve, for inspection and testing. Fields past
// the stage where solving stopped stay default-constructed.
struct SolveTrace {
  std::optional<Normalized> normalized;
  std::optional<AuxGraph> aux;
  std::optional<Matching> matching;
  MatchingReport matching_report;
  std::optional<ColoredMultigraph> extended;  // G' = normalized graph + e-walks
  std::vector<PCWalk> added_walks;
  std::vector<std::string> ewalk_violations;
};

struct AppliedMatching {
  ColoredMultigraph graph;
  // For every edge of `graph`: the normalized-graph edge it copies.
  std::vector<EdgeId> base_edge;
  std::vector<PCWalk> walks;
  // Degree effect violations met while adding walks (empty when
  // all hold); only filled when requested.
  std::vector<std::string> violations;
};

// Adds, for every walk edge of `matching`, one copy of each traversal of its
// witness walk to g_norm. With check_effects, every addition is checked with
// ewalk_effect_violations against the graph built so far.
AppliedMatching apply_matching(const ColoredMultigraph& g_norm, const AuxGraph& aux,
                               const Matching& matching, bool check_effects = false);

// Degree effects of adding walk F to g (one duplicate per traversal); returns
// a description of every violated expectation:
//  1. d(u) changes parity iff F is open and u is one of its ends;
//  2. for u not an end of F, d(u) - 2 d_c(u) never decreases;
//  3. F closed at u with end colors i, j: d(u) - 2 d_c(u) grows by >= 2 for
//     c not in {i, j}; does not grow for c in {i, j} when i != j; drops by
//     at most 2 when i = j = c;
//  4. F open, u an end entered with color i: d(u) - 2 d_i(u) drops by at
//     most 1 and d(u) - 2 d_c(u) grows by >= 1 for c != i.
std::vector<std::string> ewalk_effect_violations(const ColoredMultigraph& g, const PCWalk& walk);

// Traversal counts of `walk` per edge of g. Throws SolverBug if some edge is
// never traversed.
std::vector<std::uint32_t> multiplicities(const PCWalk& walk, const ColoredMultigraph& g);

// Minimum-weight PC closed walk covering every edge of g, or infeasibility.
// Throws SolverBug if an internal verification step fails.
Solution solve(const ColoredMultigraph& g, const SolveOptions& options = {},
               SolveTrace* trace = nullptr);

}  // namespace ecg
