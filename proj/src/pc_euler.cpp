#include "ecg/pc_euler.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <tuple>

namespace ecg {

KotzigReport kotzig_check(const ColoredMultigraph& g) {
  using V = KotzigReport::Violation;
  if (g.num_edges() == 0) return {V::no_edges, std::nullopt};
  if (!is_connected(g)) return {V::disconnected, std::nullopt};
  for (VertexId x = 0; x < g.num_vertices(); ++x) {
    if (g.degree(x) % 2 != 0) return {V::odd_vertex, x};
    if (color_degrees(g, x).dominant) return {V::unbalanced_vertex, x};
  }
  return {};
}

std::string to_string(KotzigReport::Violation v) {
  switch (v) {
    case KotzigReport::Violation::none: return "none";
    case KotzigReport::Violation::no_edges: return "no edges";
    case KotzigReport::Violation::disconnected: return "not connected";
    case KotzigReport::Violation::odd_vertex: return "odd vertex";
    case KotzigReport::Violation::unbalanced_vertex: return "unbalanced vertex";
  }
  return "unknown";
}

std::string to_string(WalkReport::Failure f) {
  using F = WalkReport::Failure;
  switch (f) {
    case F::none: return "none";
    case F::empty: return "empty";
    case F::malformed: return "malformed";
    case F::not_adjacent: return "not adjacent";
    case F::same_color: return "properness";
    case F::wraparound_same_color: return "properness (wraparound)";
    case F::not_closed: return "not closed";
    case F::missing_edge: return "coverage";
    case F::repeated_edge: return "repeated edge";
    case F::weight_mismatch: return "weight mismatch";
  }
  return "unknown";
}

VertexId end_vertex(const ColoredMultigraph& g, std::uint32_t end) {
  const Edge& e = g.edge(TransitionSystem::edge_of(end));
  return (end & 1U) ? e.v : e.u;
}

namespace {

std::uint32_t end_at(const ColoredMultigraph& g, EdgeId e, VertexId x) {
  return TransitionSystem::end_of(e, g.edge(e).u == x ? 0 : 1);
}

Color end_color(const ColoredMultigraph& g, std::uint32_t end) {
  return g.edge(TransitionSystem::edge_of(end)).color;
}

}  // namespace

TransitionSystem build_transition_system(const ColoredMultigraph& g) {
  TransitionSystem ts;
  ts.partner.assign(2 * g.num_edges(), 0);

  // (remaining count, color) with larger counts first and smaller colors on ties.
  using Slot = std::pair<std::size_t, Color>;
  auto cmp = [](const Slot& a, const Slot& b) {
    return a.first != b.first ? a.first < b.first : a.second > b.second;
  };

  for (VertexId x = 0; x < g.num_vertices(); ++x) {
    if (g.degree(x) % 2 != 0) {
      throw DomainError("transition system needs even vertices; vertex " + std::to_string(x) +
                        " is odd");
    }
    std::vector<std::vector<std::uint32_t>> ends(g.num_colors() + 1);
    for (EdgeId e : g.incident(x)) ends[g.edge(e).color].push_back(end_at(g, e, x));
    std::vector<std::size_t> head(g.num_colors() + 1, 0);

    std::priority_queue<Slot, std::vector<Slot>, decltype(cmp)> heap(cmp);
    for (Color c = 1; c <= g.num_colors(); ++c) {
      if (!ends[c].empty()) heap.emplace(ends[c].size(), c);
    }
    while (!heap.empty()) {
      auto [na, a] = heap.top();
      heap.pop();
      if (heap.empty()) {
        throw DomainError("transition system needs balanced vertices; vertex " +
                          std::to_string(x) + " is unbalanced");
      }
      auto [nb, b] = heap.top();
      heap.pop();
      const std::uint32_t ea = ends[a][head[a]++];
      const std::uint32_t eb = ends[b][head[b]++];
      ts.partner[ea] = eb;
      ts.partner[eb] = ea;
      if (na > 1) heap.emplace(na - 1, a);
      if (nb > 1) heap.emplace(nb - 1, b);
    }
  }
  return ts;
}

bool is_valid_transition_system(const ColoredMultigraph& g, const TransitionSystem& ts) {
  if (ts.partner.size() != 2 * g.num_edges()) return false;
  for (std::uint32_t a = 0; a < ts.partner.size(); ++a) {
    const std::uint32_t b = ts.partner[a];
    if (b >= ts.partner.size() || b == a || ts.partner[b] != a) return false;
    if (end_vertex(g, a) != end_vertex(g, b)) return false;
    if (end_color(g, a) == end_color(g, b)) return false;
  }
  return true;
}

namespace {

// Labels every edge with the index of its closed trail, numbered in order of
// the smallest edge id on the trail.
std::vector<std::uint32_t> label_trails(const TransitionSystem& ts, std::size_t num_edges,
                                        std::size_t* count) {
  constexpr auto kUnset = static_cast<std::uint32_t>(-1);
  std::vector<std::uint32_t> trail(num_edges, kUnset);
  std::uint32_t next = 0;
  for (EdgeId e = 0; e < num_edges; ++e) {
    if (trail[e] != kUnset) continue;
    const std::uint32_t start = TransitionSystem::end_of(e, 0);
    std::uint32_t leave = start;
    do {
      trail[TransitionSystem::edge_of(leave)] = next;
      leave = ts.partner[TransitionSystem::opposite(leave)];
    } while (leave != start);
    ++next;
  }
  if (count) *count = next;
  return trail;
}

}  // namespace

std::size_t count_trails(const ColoredMultigraph& g, const TransitionSystem& ts) {
  std::size_t count = 0;
  label_trails(ts, g.num_edges(), &count);
  return count;
}

PCWalk pc_euler_trail(const ColoredMultigraph& g, EulerStats* stats) {
  const KotzigReport report = kotzig_check(g);
  if (!report.feasible()) {
    std::string what = "graph is not PC Euler: " + to_string(report.violation);
    if (report.vertex) what += " at vertex " + std::to_string(*report.vertex);
    throw DomainError(what);
  }

  TransitionSystem ts = build_transition_system(g);
  std::size_t initial = 0;
  const std::vector<std::uint32_t> trail = label_trails(ts, g.num_edges(), &initial);

  std::vector<std::uint32_t> uf(initial);
  std::iota(uf.begin(), uf.end(), 0U);
  auto find = [&](std::uint32_t t) {
    while (uf[t] != t) t = uf[t] = uf[uf[t]];
    return t;
  };

  std::size_t merges = 0;
  for (VertexId x = 0; x < g.num_vertices() && merges + 1 < initial; ++x) {
    // Transitions at x as (trail, smaller end, larger end).
    std::vector<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>> pairs;
    for (EdgeId e : g.incident(x)) {
      const std::uint32_t a = end_at(g, e, x);
      const std::uint32_t b = ts.partner[a];
      if (a < b) pairs.emplace_back(trail[e], a, b);
    }
    std::sort(pairs.begin(), pairs.end());
    if (pairs.empty()) continue;

    auto [anchor_trail, a1, a2] = pairs.front();
    for (std::size_t i = 1; i < pairs.size(); ++i) {
      const auto [t, b1, b2] = pairs[i];
      if (find(t) == find(anchor_trail)) continue;
      // One of the two cross re-pairings is always properly colored, and
      // either one splices the two closed trails into a single one.
      const bool crossed = end_color(g, a1) != end_color(g, b2) &&
                           end_color(g, b1) != end_color(g, a2);
      const std::uint32_t p1 = crossed ? b2 : b1;
      const std::uint32_t p2 = crossed ? b1 : b2;
      if (end_color(g, a1) == end_color(g, p1) || end_color(g, a2) == end_color(g, p2)) {
        throw SolverBug("no properly colored re-pairing at vertex " + std::to_string(x));
      }
      ts.partner[a1] = p1;
      ts.partner[p1] = a1;
      ts.partner[a2] = p2;
      ts.partner[p2] = a2;
      uf[find(t)] = find(anchor_trail);
      ++merges;
      a2 = p1;  // (a1, p1) stays a transition of the merged trail
    }
  }
  if (merges + 1 != initial) throw SolverBug("trail merging left the graph split");

  VertexId v0 = 0;
  while (g.degree(v0) == 0) ++v0;
  const EdgeId e0 = g.incident(v0).front();
  const std::uint32_t start = end_at(g, e0, v0);

  std::vector<EdgeId> edges;
  edges.reserve(g.num_edges());
  std::uint32_t leave = start;
  do {
    edges.push_back(TransitionSystem::edge_of(leave));
    leave = ts.partner[TransitionSystem::opposite(leave)];
  } while (leave != start);
  if (edges.size() != g.num_edges()) throw SolverBug("merged trail does not cover every edge");

  if (stats) *stats = EulerStats{initial, merges};
  return make_walk(g, v0, std::move(edges));
}

WalkReport verify_pc_closed_walk(const ColoredMultigraph& g, const PCWalk& walk,
                                 Coverage coverage) {
  using F = WalkReport::Failure;
  WalkReport r;
  auto fail = [&](F f, std::size_t pos, std::string msg) {
    r.failure = f;
    r.position = pos;
    r.message = std::move(msg);
    return r;
  };

  if (walk.edges.empty()) return fail(F::empty, 0, "walk has no edges");
  if (walk.vertices.size() != walk.edges.size() + 1) {
    return fail(F::malformed, 0, "vertex and edge sequences do not alternate");
  }
  for (std::size_t i = 0; i < walk.edges.size(); ++i) {
    const EdgeId e = walk.edges[i];
    if (e >= g.num_edges()) return fail(F::malformed, i, "edge id out of range");
    const Edge& ed = g.edge(e);
    const VertexId a = walk.vertices[i], b = walk.vertices[i + 1];
    if (!((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a))) {
      return fail(F::not_adjacent, i, "edge does not join the listed vertices");
    }
    r.weight += ed.weight;
  }
  for (std::size_t i = 1; i < walk.edges.size(); ++i) {
    if (g.edge(walk.edges[i - 1]).color == g.edge(walk.edges[i]).color) {
      return fail(F::same_color, i, "consecutive edges share a color");
    }
  }
  if (!walk.closed()) return fail(F::not_closed, walk.edges.size(), "walk is not closed");
  if (g.edge(walk.edges.back()).color == g.edge(walk.edges.front()).color) {
    return fail(F::wraparound_same_color, 0, "last and first edges share a color");
  }
  if (coverage != Coverage::none) {
    std::vector<std::size_t> seen(g.num_edges(), 0);
    for (EdgeId e : walk.edges) ++seen[e];
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (seen[e] == 0) return fail(F::missing_edge, e, "edge " + std::to_string(e) + " not traversed");
      if (coverage == Coverage::exactly_once && seen[e] > 1) {
        return fail(F::repeated_edge, e, "edge " + std::to_string(e) + " traversed more than once");
      }
    }
  }
  if (r.weight != walk.weight) {
    return fail(F::weight_mismatch, 0,
                "reported weight " + std::to_string(walk.weight) + " but edges sum to " +
                    std::to_string(r.weight));
  }
  return r;
}

}  // namespace ecg
