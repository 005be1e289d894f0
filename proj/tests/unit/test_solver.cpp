#include <doctest.h>

#include <algorithm>
#include <random>

#include "ecg/oracle.hpp"
#include "ecg/pc_euler.hpp"
#include "ecg/solver.hpp"
#include "fixtures.hpp"

using namespace ecg;

TEST_CASE("triangle") {
  const Solution s = solve(fixtures::triangle());
  CHECK(s.status == Status::optimal);
  CHECK(s.total_weight == 3);
  CHECK(s.matching_weight == 0);
  CHECK(s.multiplicity == std::vector<std::uint32_t>{1, 1, 1});
}

TEST_CASE("house") {
  const auto g = fixtures::house();
  const Solution s = solve(g);
  REQUIRE(s.status == Status::optimal);
  CHECK(s.total_weight == 11);
  CHECK(s.matching_weight == 2);
  CHECK(std::count(s.multiplicity.begin(), s.multiplicity.end(), 2u) == 2);
  CHECK(std::count(s.multiplicity.begin(), s.multiplicity.end(), 1u) == 3);
  CHECK(s.multiplicity[1] == 1);
  CHECK(verify_pc_closed_walk(g, s.walk, Coverage::at_least_once).ok());
}

TEST_CASE("infeasible inputs") {
  CHECK(solve(fixtures::mono_path()).reason == InfeasibleReason::single_color_vertex);
  CHECK(solve(fixtures::two_triangles()).reason == InfeasibleReason::disconnected);
  CHECK(solve(ColoredMultigraph(2, 3, {})).reason == InfeasibleReason::no_edges);
  // 4-cycle colored 1,1,2,2: vertex 1 sees only color 1
  const ColoredMultigraph c(4, 2, {{0, 1, 1, 1}, {1, 2, 1, 1}, {2, 3, 2, 1}, {3, 0, 2, 1}});
  CHECK(solve(c).status == Status::infeasible);
}

TEST_CASE("infeasibility detected by the matching stage") {
  // Two triangles joined by the bridge 2-3 (color 1). Every vertex sees two
  // colors, but a walk crossing into the right triangle always comes back to
  // 3 along the color-1 edge 5-3.
  const ColoredMultigraph g(6, 3, {{0, 1, 1, 1}, {1, 2, 2, 1}, {2, 0, 3, 1}, {2, 3, 1, 1},
                                   {3, 4, 2, 1}, {4, 5, 3, 1}, {5, 3, 1, 1}});
  const Solution s = solve(g);
  const auto ref = oracle::oracle_solve(g, 4);
  CHECK((s.status == Status::optimal) == ref.has_value());
  if (ref) CHECK(s.total_weight == ref->weight);
}

TEST_CASE("apply_matching") {
  const auto g = fixtures::house();
  const AuxGraph aux = build_aux_graph(g);

  SUBCASE("all artificial leaves the graph unchanged") {
    // the house has odd vertices, so use the triangle for this case
    const auto t = fixtures::triangle();
    const AuxGraph ta = build_aux_graph(t);
    const auto m = complete_with_artificial(ta, {});
    REQUIRE(m);
    const AppliedMatching a = apply_matching(t, ta, Matching{*m, 0});
    CHECK(a.graph == t);
    CHECK(a.walks.empty());
  }
  SUBCASE("one walk edge duplicates its witness") {
    const auto m = min_weight_perfect_matching(aux.matching_instance());
    REQUIRE(m);
    const AppliedMatching a = apply_matching(g, aux, *m, true);
    REQUIRE(a.walks.size() == 1);
    CHECK(a.graph.num_edges() == g.num_edges() + a.walks[0].edges.size());
    for (std::size_t i = g.num_edges(); i < a.graph.num_edges(); ++i) {
      CHECK(a.graph.edge(static_cast<EdgeId>(i)) == g.edge(a.base_edge[i]));
    }
    CHECK(a.violations.empty());
    CHECK(kotzig_check(a.graph).feasible());
  }
}

TEST_CASE("walk degree effects hold for random PC walks") {
  std::mt19937_64 rng(99);
  std::size_t walks = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    const auto g = oracle::gen_random_instance(3 + seed % 4, 3, 4 + seed % 6, 3, seed);
    // random PC FEV walk of up to 8 edges
    VertexId x = static_cast<VertexId>(rng() % g.num_vertices());
    const VertexId start = x;
    std::vector<EdgeId> edges;
    Color last = kNoColor;
    for (int step = 0; step < 8; ++step) {
      std::vector<EdgeId> options;
      for (EdgeId e : g.incident(x)) {
        if (g.edge(e).color != last) options.push_back(e);
      }
      if (options.empty()) break;
      const EdgeId e = options[rng() % options.size()];
      edges.push_back(e);
      last = g.edge(e).color;
      x = g.edge(e).other(x);
      if (rng() % 4 == 0) break;
    }
    if (edges.empty()) continue;
    const PCWalk w = make_walk(g, start, edges);
    REQUIRE(is_pc_fev_walk(g, w));
    ++walks;
    const auto v = ewalk_effect_violations(g, w);
    CHECK_MESSAGE(v.empty(), (v.empty() ? "" : v.front()));
  }
  CHECK(walks > 300);
}

TEST_CASE("multiplicities") {
  const auto g = fixtures::house();
  CHECK_THROWS_AS(multiplicities(make_walk(g, 0, {0, 1, 2}), g), SolverBug);
  const Solution s = solve(g);
  CHECK(multiplicities(s.walk, g) == s.multiplicity);
}

TEST_CASE("serial and parallel execution give the same solution") {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    const auto g = oracle::gen_random_instance(5, 3, 9, 5, seed);
    const Solution a = solve(g, {true, kernels::Execution::serial});
    const Solution b = solve(g, {true, kernels::Execution::parallel});
    CHECK(a.status == b.status);
    CHECK(a.walk == b.walk);
  }
}

TEST_CASE("larger instances agree with the oracle") {
  std::size_t optimal = 0;
  for (std::uint64_t seed = 0; seed < 250; ++seed) {
    const std::size_t n = 3 + seed % 4;
    const auto g = oracle::gen_random_instance(n, 2 + seed % 3, n + 1 + seed % 4, 4, seed + 500);
    const Solution s = solve(g);
    std::uint32_t bound = 3;
    for (auto q : s.multiplicity) bound = std::max(bound, q);
    const auto ref = oracle::oracle_solve(g, bound);
    REQUIRE((s.status == Status::optimal) == ref.has_value());
    if (!ref) continue;
    ++optimal;
    CHECK(s.total_weight == ref->weight);
  }
  CHECK(optimal > 30);
}
