#include "ecg/solver.hpp"

#include "ecg/pc_euler.hpp"

namespace ecg {

std::string to_string(Status s) { return s == Status::optimal ? "optimal" : "infeasible"; }

std::string to_string(InfeasibleReason r) {
  switch (r) {
    case InfeasibleReason::none: return "none";
    case InfeasibleReason::no_edges: return "no_edges";
    case InfeasibleReason::disconnected: return "disconnected";
    case InfeasibleReason::single_color_vertex: return "single_color_vertex";
    case InfeasibleReason::no_perfect_matching: return "no_perfect_matching";
  }
  return "unknown";
}

namespace {

struct DegreeTable {
  std::vector<long> degree;
  std::vector<long> by_color;  // vertex * (k + 1) + color
  std::size_t stride = 0;

  explicit DegreeTable(const ColoredMultigraph& g)
      : degree(g.num_vertices(), 0),
        by_color(g.num_vertices() * (g.num_colors() + 1), 0),
        stride(g.num_colors() + 1) {
    for (const Edge& e : g.edges()) add(e);
  }
  void add(const Edge& e) {
    ++degree[e.u];
    ++degree[e.v];
    ++by_color[e.u * stride + e.color];
    ++by_color[e.v * stride + e.color];
  }
  long slack(VertexId u, Color c) const { return degree[u] - 2 * by_color[u * stride + c]; }
};

}  // namespace

std::vector<std::string> ewalk_effect_violations(const ColoredMultigraph& g, const PCWalk& walk) {
  std::vector<std::string> out;
  if (walk.empty()) return out;
  DegreeTable before(g);
  DegreeTable after = before;
  for (EdgeId e : walk.edges) after.add(g.edge(e));

  const bool open = walk.front() != walk.back();
  const Color k = g.num_colors();
  auto note = [&](VertexId u, Color c, const std::string& what) {
    out.push_back("vertex " + std::to_string(u) + (c ? " color " + std::to_string(c) : "") +
                  ": " + what);
  };

  for (VertexId u = 0; u < g.num_vertices(); ++u) {
    const bool is_end = u == walk.front() || u == walk.back();
    const bool parity_flipped = (after.degree[u] - before.degree[u]) % 2 != 0;
    if (parity_flipped != (open && is_end)) note(u, 0, "degree parity effect");

    for (Color c = 1; c <= k; ++c) {
      const long delta = after.slack(u, c) - before.slack(u, c);
      if (!is_end) {
        if (delta < 0) note(u, c, "slack decreased at an inner vertex");
        continue;
      }
      if (!open) {
        const Color i = walk.first_color, j = walk.last_color;
        if (c != i && c != j) {
          if (delta < 2) note(u, c, "closed walk: slack grew by less than 2");
        } else if (i != j) {
          if (delta < 0) note(u, c, "closed walk: slack decreased for an end color");
        } else if (delta < -2) {
          note(u, c, "closed walk: slack dropped by more than 2");
        }
        continue;
      }
      // Open walk: each end is checked against the color of its own end edge.
      const Color end_color = u == walk.front() ? walk.first_color : walk.last_color;
      if (c == end_color) {
        if (delta < -1) note(u, c, "open walk: slack dropped by more than 1");
      } else if (delta < 1) {
        note(u, c, "open walk: slack grew by less than 1");
      }
    }
  }
  return out;
}

AppliedMatching apply_matching(const ColoredMultigraph& g_norm, const AuxGraph& aux,
                               const Matching& matching, bool check_effects) {
  std::vector<Edge> edges(g_norm.edges().begin(), g_norm.edges().end());
  AppliedMatching result;
  result.base_edge.resize(edges.size());
  for (EdgeId e = 0; e < edges.size(); ++e) result.base_edge[e] = e;

  for (std::size_t i : matching.edges) {
    const AuxEdge& ae = aux.edges[i];
    if (ae.kind != AuxEdgeKind::walk) continue;
    const PCWalk& w = aux.signatures[static_cast<std::size_t>(ae.signature)].witness;
    if (check_effects) {
      // Base edges keep their ids in `current`, so the witness applies as is.
      ColoredMultigraph current(g_norm.num_vertices(), g_norm.num_colors(), edges);
      for (auto& v : ewalk_effect_violations(current, w)) {
        result.violations.push_back("walk " + std::to_string(result.walks.size()) + ": " + v);
      }
    }
    for (EdgeId e : w.edges) {
      edges.push_back(g_norm.edge(e));
      result.base_edge.push_back(e);
    }
    result.walks.push_back(w);
  }
  result.graph = ColoredMultigraph(g_norm.num_vertices(), g_norm.num_colors(), std::move(edges));
  return result;
}

std::vector<std::uint32_t> multiplicities(const PCWalk& walk, const ColoredMultigraph& g) {
  std::vector<std::uint32_t> q(g.num_edges(), 0);
  for (EdgeId e : walk.edges) ++q.at(e);
  for (EdgeId e = 0; e < q.size(); ++e) {
    if (q[e] == 0) throw SolverBug("edge " + std::to_string(e) + " is never traversed");
  }
  return q;
}

Solution solve(const ColoredMultigraph& g, const SolveOptions& options, SolveTrace* trace) {
  Solution sol;
  auto infeasible = [&](InfeasibleReason r) {
    sol.status = Status::infeasible;
    sol.reason = r;
    return sol;
  };

  if (g.num_edges() == 0) return infeasible(InfeasibleReason::no_edges);
  if (!is_connected(g)) return infeasible(InfeasibleReason::disconnected);
  if (single_color_vertex(g)) return infeasible(InfeasibleReason::single_color_vertex);

  Normalized norm = normalize(g);
  AuxGraph aux = build_aux_graph(norm.graph, options.execution);
  std::optional<Matching> matching = min_weight_perfect_matching(aux.matching_instance());

  if (trace) {
    trace->normalized = norm;
    trace->aux = aux;
    trace->matching = matching;
  }
  if (!matching) return infeasible(InfeasibleReason::no_perfect_matching);

  if (options.verify || trace) {
    MatchingReport report = validate_matching(aux, matching->edges);
    if (options.verify && !report.ok) {
      throw SolverBug("minimum matching violates the structure check: " + report.message);
    }
    if (trace) trace->matching_report = std::move(report);
  }

  AppliedMatching applied = apply_matching(norm.graph, aux, *matching, trace != nullptr);
  if (trace) {
    trace->extended = applied.graph;
    trace->added_walks = applied.walks;
    trace->ewalk_violations = applied.violations;
  }

  if (options.verify) {
    const KotzigReport kr = kotzig_check(applied.graph);
    if (!kr.feasible()) {
      throw SolverBug("graph after duplication is not PC Euler: " + to_string(kr.violation));
    }
  }

  PCWalk trail;
  try {
    trail = pc_euler_trail(applied.graph);
  } catch (const DomainError& e) {
    throw SolverBug(std::string("trail extraction failed: ") + e.what());
  }

  std::vector<EdgeId> base;
  base.reserve(trail.edges.size());
  for (EdgeId e : trail.edges) base.push_back(applied.base_edge[e]);
  const PCWalk on_norm = make_walk(norm.graph, trail.front(), std::move(base));
  sol.walk = contract_walk(norm.map, g, norm.graph, on_norm);
  sol.multiplicity = multiplicities(sol.walk, g);
  sol.status = Status::optimal;
  sol.matching_weight = matching->weight;
  sol.total_weight = sol.walk.weight;

  if (options.verify) {
    const WalkReport wr = verify_pc_closed_walk(g, sol.walk, Coverage::at_least_once);
    if (!wr.ok()) throw SolverBug("solution walk failed verification: " + wr.message);
    Weight by_q = 0;
    for (EdgeId e = 0; e < g.num_edges(); ++e) by_q += sol.multiplicity[e] * g.edge(e).weight;
    if (by_q != sol.total_weight || sol.total_weight != g.total_weight() + matching->weight) {
      throw SolverBug("solution weight does not match the matching weight");
    }
  }
  return sol;
}

}  // namespace ecg
