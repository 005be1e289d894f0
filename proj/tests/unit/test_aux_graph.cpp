#include <doctest.h>

#include <sstream>

#include "ecg/aux_graph.hpp"
#include "ecg/normalize.hpp"
#include "ecg/oracle.hpp"
#include "ecg/solver.hpp"
#include "fixtures.hpp"

using namespace ecg;

namespace {

ColorDegreeProfile profile(std::size_t d, std::vector<std::size_t> per_color) {
  ColorDegreeProfile p;
  p.degree = d;
  p.per_color = std::move(per_color);
  return p;
}

}  // namespace

TEST_CASE("theta") {
  CHECK(theta(profile(3, {0, 2, 1, 0}), 1) == 0);
  CHECK(theta(profile(3, {0, 2, 1, 0}), 3) == 3);
  CHECK(theta(profile(4, {0, 2, 1, 1}), 2) == 2);
}

TEST_CASE("class sizes at a balanced vertex of degree 4") {
  const ColoredMultigraph g(5, 3, {{0, 1, 1, 1}, {0, 2, 1, 1}, {0, 3, 2, 1}, {0, 4, 3, 1},
                                   {1, 2, 2, 1}, {3, 4, 1, 1}});
  const AuxGraph aux = build_aux_graph(g);
  const OwnerClasses& oc = aux.owners[0];
  CHECK(oc.balanced());
  CHECK(oc.x_size() == 4);
  CHECK(oc.y_size() == 0);
}

TEST_CASE("class sizes at an unbalanced vertex of degree 3") {
  const ColoredMultigraph g(4, 3, {{0, 1, 1, 1}, {0, 2, 1, 1}, {0, 3, 2, 1}, {1, 2, 2, 1}, {1, 3, 3, 1}});
  const AuxGraph aux = build_aux_graph(g);
  const OwnerClasses& oc = aux.owners[0];
  CHECK_FALSE(oc.balanced());
  CHECK(oc.x_size() == 4);
  CHECK(oc.y_size() == 3);
  CHECK(oc.x_begin[2] == oc.x_begin[1]);
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(build_aux_graph(ColoredMultigraph(3, 2, {{0, 1, 1, 1}, {1, 2, 2, 1}, {2, 0, 1, 1}})),
                  DomainError);
  CHECK_THROWS_AS(build_aux_graph(ColoredMultigraph(3, 3, {{0, 1, 1, 1}, {1, 2, 1, 1}})), DomainError);
}

TEST_CASE("class sizes have the parity of the degree") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto g = oracle::gen_random_instance(3 + seed % 3, 2 + seed % 3, 4 + seed % 5, 3, seed);
    if (single_color_vertex(g)) continue;
    const Normalized n = normalize(g);
    const AuxGraph aux = build_aux_graph(n.graph);
    std::size_t total = 0;
    for (const OwnerClasses& oc : aux.owners) {
      const std::size_t z = oc.x_size() + oc.y_size();
      CHECK(z % 2 == oc.profile.degree % 2);
      total += z;
    }
    CHECK(total % 2 == 0);
    CHECK(total == aux.vertices.size());
  }
}

TEST_CASE("walk edges carry minimum walk weights") {
  const auto g = fixtures::house();
  const AuxGraph aux = build_aux_graph(g);
  for (const AuxEdge& e : aux.edges) {
    if (e.kind == AuxEdgeKind::artificial) {
      CHECK(e.weight == 0);
      CHECK(aux.vertices[e.a].owner == aux.vertices[e.b].owner);
      continue;
    }
    const AuxVertex& a = aux.vertices[e.a];
    const AuxVertex& b = aux.vertices[e.b];
    const auto w = oracle::enumerate_pc_walks(g, a.owner, a.color, b.owner, b.color, 12);
    REQUIRE(w);
    CHECK(e.weight == *w);
    const WalkSignature& sig = aux.signatures[static_cast<std::size_t>(e.signature)];
    CHECK(is_pc_fev_walk(g, sig.witness));
  }
}

TEST_CASE("validate_matching") {
  const auto g = fixtures::triangle();
  const AuxGraph aux = build_aux_graph(g);
  const auto all_artificial = complete_with_artificial(aux, {});
  REQUIRE(all_artificial);
  const MatchingReport ok = validate_matching(aux, *all_artificial);
  CHECK(ok.ok);
  CHECK(ok.affected == std::vector<std::size_t>{0, 0, 0});

  // vertices 0 and 1 are balanced with colors {1,1,2,3}; a single walk edge
  // between them leaves an odd number of free X(0) vertices
  const AuxGraph star = build_aux_graph(ColoredMultigraph(
      6, 3, {{0, 1, 1, 1}, {0, 2, 1, 1}, {0, 3, 2, 1}, {0, 4, 3, 1}, {1, 2, 2, 1}, {1, 5, 3, 1},
             {1, 3, 1, 1}, {4, 5, 1, 1}}));
  std::size_t walk = star.edges.size();
  for (std::size_t i = 0; i < star.edges.size(); ++i) {
    const AuxEdge& e = star.edges[i];
    if (e.kind == AuxEdgeKind::walk &&
        (star.vertices[e.a].owner == 0) != (star.vertices[e.b].owner == 0)) {
      walk = i;
      break;
    }
  }
  REQUIRE(walk < star.edges.size());
  const std::vector<std::size_t> one{walk};
  CHECK_FALSE(complete_with_artificial(star, one));
  CHECK_FALSE(validate_matching(star, one).ok);
}

TEST_CASE("solver matchings pass validation") {
  SolveTrace trace;
  const Solution s = solve(fixtures::house(), {}, &trace);
  REQUIRE(s.status == Status::optimal);
  CHECK(trace.matching_report.ok);
  CHECK(trace.matching->weight == 2);
}

TEST_CASE("dump lists every vertex and edge") {
  const AuxGraph aux = build_aux_graph(fixtures::house());
  std::ostringstream out;
  dump_aux_graph(aux, out);
  const std::string text = out.str();
  std::size_t vertices = 0, edges = 0;
  std::istringstream lines(text);
  for (std::string line; std::getline(lines, line);) {
    vertices += line.rfind("vertex ", 0) == 0;
    edges += line.rfind("edge ", 0) == 0;
  }
  CHECK(vertices == aux.vertices.size());
  CHECK(edges == aux.edges.size());
}
