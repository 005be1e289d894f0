#include <doctest.h>

#include "ecg/oracle.hpp"
#include "ecg/pc_euler.hpp"
#include "fixtures.hpp"

using namespace ecg;
using V = KotzigReport::Violation;

TEST_CASE("kotzig check") {
  CHECK(kotzig_check(fixtures::triangle()).feasible());
  CHECK(kotzig_check(fixtures::two_triangles()).violation == V::disconnected);
  CHECK(kotzig_check(ColoredMultigraph(2, 1, {})).violation == V::no_edges);
  const auto house = kotzig_check(fixtures::house());
  CHECK(house.violation == V::odd_vertex);
  CHECK(house.vertex == VertexId{1});
  // {1,1,2,3}: balanced and even; here the leaves are odd, so vertex 1 is first
  const ColoredMultigraph star(5, 3, {{0, 1, 1, 1}, {0, 2, 1, 1}, {0, 3, 2, 1}, {0, 4, 3, 1}});
  CHECK(kotzig_check(star).vertex == VertexId{1});
  // two parallel same-colored edges: even but unbalanced
  const ColoredMultigraph par(2, 1, {{0, 1, 1, 1}, {0, 1, 1, 1}});
  CHECK(kotzig_check(par).violation == V::unbalanced_vertex);
}

TEST_CASE("transition system pairings") {
  SUBCASE("degree two") {
    const auto g = fixtures::triangle();
    const auto ts = build_transition_system(g);
    CHECK(is_valid_transition_system(g, ts));
    CHECK(count_trails(g, ts) == 1);
  }
  SUBCASE("ends 1,1,2,3 pair each 1 with a different color") {
    // two triangles sharing vertex 0: edges at 0 have colors 1,2 and 1,3
    const ColoredMultigraph g(5, 3, {{0, 1, 1, 1}, {1, 2, 3, 1}, {2, 0, 2, 1},
                                     {0, 3, 1, 1}, {3, 4, 2, 1}, {4, 0, 3, 1}});
    const auto ts = build_transition_system(g);
    CHECK(is_valid_transition_system(g, ts));
    for (EdgeId e : g.incident(0)) {
      const int side = g.edge(e).u == 0 ? 0 : 1;
      const auto mate = ts.partner[TransitionSystem::end_of(e, side)];
      CHECK(g.edge(TransitionSystem::edge_of(mate)).color != g.edge(e).color);
    }
  }
  SUBCASE("unbalanced input is rejected") {
    CHECK_THROWS_AS(build_transition_system(ColoredMultigraph(2, 1, {{0, 1, 1, 1}, {0, 1, 1, 1}})),
                    DomainError);
  }
}

TEST_CASE("euler trails on the fixed graphs") {
  SUBCASE("triangle") {
    const auto g = fixtures::triangle();
    const PCWalk t = pc_euler_trail(g);
    CHECK(t.vertices == std::vector<VertexId>{0, 1, 2, 0});
    const auto r = verify_pc_closed_walk(g, t, Coverage::exactly_once);
    CHECK(r.ok());
    CHECK(r.weight == 3);
  }
  SUBCASE("bowtie") {
    const auto g = fixtures::bowtie();
    EulerStats stats;
    const PCWalk t = pc_euler_trail(g, &stats);
    const auto r = verify_pc_closed_walk(g, t, Coverage::exactly_once);
    CHECK(r.ok());
    CHECK(r.weight == 6);
    CHECK(t.front() == 0);
    CHECK(stats.merges + 1 == stats.initial_trails);
  }
  SUBCASE("alternating 4-cycle") {
    const ColoredMultigraph g(4, 2, {{0, 1, 1, 1}, {1, 2, 2, 1}, {2, 3, 1, 1}, {3, 0, 2, 1}});
    const PCWalk t = pc_euler_trail(g);
    CHECK(t.vertices == std::vector<VertexId>{0, 1, 2, 3, 0});
  }
  SUBCASE("infeasible graphs throw") {
    CHECK_THROWS_AS(pc_euler_trail(fixtures::house()), DomainError);
  }
}

TEST_CASE("verify_pc_closed_walk failures") {
  const auto g = fixtures::triangle();
  using F = WalkReport::Failure;
  CHECK(verify_pc_closed_walk(g, make_walk(g, 0, {0, 0}), Coverage::none).failure == F::same_color);
  CHECK(verify_pc_closed_walk(g, make_walk(g, 0, {0, 1}), Coverage::none).failure == F::not_closed);
  CHECK(verify_pc_closed_walk(g, PCWalk{}, Coverage::none).failure == F::empty);
  const auto h = fixtures::house();
  const PCWalk tri = make_walk(h, 0, {0, 1, 2});
  CHECK(verify_pc_closed_walk(h, tri, Coverage::none).ok());
  CHECK(verify_pc_closed_walk(h, tri, Coverage::at_least_once).failure == F::missing_edge);
  PCWalk bad = tri;
  bad.weight = 1;
  CHECK(verify_pc_closed_walk(h, bad, Coverage::none).failure == F::weight_mismatch);
  // same color across the wraparound
  const ColoredMultigraph c(3, 2, {{0, 1, 1, 1}, {1, 2, 2, 1}, {2, 0, 1, 1}});
  CHECK(verify_pc_closed_walk(c, make_walk(c, 0, {0, 1, 2}), Coverage::none).failure ==
        F::wraparound_same_color);
}

TEST_CASE("trail extraction matches exhaustive search") {
  std::size_t euler = 0;
  for (std::uint64_t seed = 0; seed < 3000; ++seed) {
    const auto g = oracle::gen_random_instance(2 + seed % 5, 2 + seed % 2, 2 + seed % 5 + seed % 6, 2, seed);
    const bool feasible = kotzig_check(g).feasible();
    CHECK(feasible == oracle::pc_euler_trail_bruteforce(g).has_value());
    if (!feasible) continue;
    ++euler;
    CHECK(verify_pc_closed_walk(g, pc_euler_trail(g), Coverage::exactly_once).ok());
  }
  CHECK(euler > 50);
}
