#include <doctest.h>

#include "ecg/graph.hpp"
#include "fixtures.hpp"

using namespace ecg;

TEST_CASE("constructor rejects malformed edges") {
  CHECK_THROWS_AS(ColoredMultigraph(2, 1, {{0, 0, 1, 1}}), DomainError);
  CHECK_THROWS_AS(ColoredMultigraph(2, 1, {{0, 2, 1, 1}}), DomainError);
  CHECK_THROWS_AS(ColoredMultigraph(2, 1, {{0, 1, 2, 1}}), DomainError);
  CHECK_THROWS_AS(ColoredMultigraph(2, 1, {{0, 1, 0, 1}}), DomainError);
  CHECK_THROWS_AS(ColoredMultigraph(2, 1, {{0, 1, 1, -1}}), DomainError);
}

TEST_CASE("incidence lists are ascending and complete") {
  const auto g = fixtures::house();
  CHECK(g.degree(1) == 3);
  const auto inc = g.incident(1);
  CHECK(std::vector<EdgeId>(inc.begin(), inc.end()) == std::vector<EdgeId>{0, 1, 3});
  CHECK(g.total_weight() == 9);
}

TEST_CASE("color degrees on the triangle") {
  const auto p = color_degrees(fixtures::triangle(), 0);
  CHECK(p.degree == 2);
  CHECK(p.count(1) == 1);
  CHECK(p.count(2) == 0);
  CHECK(p.count(3) == 1);
  CHECK_FALSE(p.dominant);
  CHECK_THROWS_AS(color_degrees(fixtures::triangle(), 3), DomainError);
}

TEST_CASE("dominant colors") {
  // vertex 0 with colors {1,1,2}
  const ColoredMultigraph a(4, 3, {{0, 1, 1, 1}, {0, 2, 1, 1}, {0, 3, 2, 1}});
  const auto pa = color_degrees(a, 0);
  CHECK(pa.degree == 3);
  CHECK(pa.count(1) == 2);
  REQUIRE(pa.dominant);
  CHECK(*pa.dominant == 1);
  CHECK_FALSE(is_balanced(a, 0));
  CHECK_FALSE(is_even(a, 0));

  // vertex 0 with colors {1,1,2,3}
  const ColoredMultigraph b(5, 3, {{0, 1, 1, 1}, {0, 2, 1, 1}, {0, 3, 2, 1}, {0, 4, 3, 1}});
  const auto pb = color_degrees(b, 0);
  CHECK(pb.degree == 4);
  CHECK(pb.count(1) == 2);
  CHECK_FALSE(pb.dominant);
  CHECK(is_balanced(b, 0));
  CHECK(is_even(b, 0));
}

TEST_CASE("connectivity") {
  const auto t = fixtures::triangle();
  for (VertexId u = 0; u < 3; ++u) {
    CHECK(is_balanced(t, u));
    CHECK(is_even(t, u));
  }
  CHECK(is_connected(t));
  CHECK_FALSE(is_connected(fixtures::two_triangles()));
  CHECK_FALSE(is_connected(ColoredMultigraph(3, 1, {{0, 1, 1, 1}})));
}

TEST_CASE("single-color vertices") {
  CHECK(single_color_vertex(fixtures::mono_path()).has_value());
  CHECK_FALSE(single_color_vertex(fixtures::triangle()));
  // a degree-1 vertex always qualifies
  const ColoredMultigraph g(4, 3, {{0, 1, 1, 1}, {1, 2, 2, 1}, {2, 0, 3, 1}, {2, 3, 1, 1}});
  CHECK(single_color_vertex(g) == VertexId{3});
}
