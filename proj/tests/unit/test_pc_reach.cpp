#include <doctest.h>

#include "ecg/oracle.hpp"
#include "ecg/pc_reach.hpp"
#include "fixtures.hpp"

using namespace ecg;

TEST_CASE("triangle table from a with first color 1") {
  const auto g = fixtures::triangle();
  const PcReachTree t(g, 0, 1);
  CHECK(t.weight(2, 2) == Weight{2});
  CHECK(t.weight(0, 3) == Weight{3});
  CHECK(t.weight(1, 1) == Weight{1});
  const auto w = t.walk(g, 2, 2);
  REQUIRE(w);
  CHECK(w->vertices == std::vector<VertexId>{0, 1, 2});
  CHECK(is_pc_fev_walk(g, *w));
}

TEST_CASE("missing first color gives an empty table") {
  const ColoredMultigraph g(3, 5, {{0, 1, 1, 1}, {1, 2, 2, 1}, {2, 0, 3, 1}});
  const PcReachTree t(g, 0, 5);
  CHECK(t.empty());
  CHECK_FALSE(t.weight(1, 1));
}

TEST_CASE("different components are unreachable") {
  const auto g = fixtures::two_triangles();
  CHECK_FALSE(min_pc_walk(g, 0, 1, 4, 1));
  CHECK(min_pc_walk(g, 0, 1, 2, 2));
}

TEST_CASE("invalid queries") {
  const auto g = fixtures::triangle();
  CHECK_THROWS_AS(PcReachTree(g, 3, 1), DomainError);
  CHECK_THROWS_AS(PcReachTree(g, 0, 0), DomainError);
  CHECK_THROWS_AS(PcReachTree(g, 0, 4), DomainError);
}

TEST_CASE("walks may reuse edges and vertices") {
  // On the path 0 -1- 1 -2- 2 -1- 3 a walk can never turn around.
  const ColoredMultigraph path(4, 2, {{0, 1, 1, 1}, {1, 2, 2, 1}, {2, 3, 1, 1}});
  CHECK_FALSE(PcReachTree(path, 0, 1).weight(0, 1));
  // with a pendant triangle at 2 the walk can turn around
  const ColoredMultigraph g(5, 3, {{0, 1, 1, 1}, {1, 2, 2, 1}, {2, 3, 1, 1}, {3, 4, 2, 1}, {4, 2, 3, 1}});
  const PcReachTree t(g, 0, 1);
  REQUIRE(t.weight(0, 1));
  CHECK(*t.weight(0, 1) == 7);
  const auto w = t.walk(g, 0, 1);
  REQUIRE(w);
  CHECK(is_pc_fev_walk(g, *w));
  CHECK(w->edges.size() == 7);
}

TEST_CASE("agrees with enumeration on random graphs") {
  for (std::uint64_t seed = 0; seed < 120; ++seed) {
    const auto g = oracle::gen_random_instance(2 + seed % 4, 1 + seed % 3, 1 + seed % 4 + seed % 5, 3, seed + 77);
    const std::size_t n = g.num_vertices();
    const Color k = g.num_colors();
    for (VertexId u = 0; u < n; ++u) {
      for (Color c1 = 1; c1 <= k; ++c1) {
        const PcReachTree t(g, u, c1);
        for (VertexId v = 0; v < n; ++v) {
          for (Color c2 = 1; c2 <= k; ++c2) {
            CHECK(t.weight(v, c2) == oracle::enumerate_pc_walks(g, u, c1, v, c2, k * n));
          }
        }
      }
    }
  }
}
