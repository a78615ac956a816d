#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <stdexcept>

#include "gel/canonical.hpp"
#include "gel/genspec.hpp"
#include "gel/graph.hpp"
#include "gel/graph6.hpp"

using namespace gel;

TEST_CASE("generator specs") {
  CHECK(symmetric_difference_count(parse_graph_arg("cycle:7"), cycle_graph(7)) ==
        0);
  CHECK(parse_graph_arg("complete:5").m() == 10);
  CHECK(parse_graph_arg("empty:4").m() == 0);
  CHECK(parse_graph_arg("path:6").m() == 5);
  Graph kpq = parse_graph_arg("kpq:3,2");
  CHECK(kpq.n() == 6);
  CHECK(kpq.m() == 12);
  Graph aff = parse_graph_arg("affine:5");
  CHECK(aff.n() == 25);
  CHECK(aff.m() == 150);
}

TEST_CASE("random generator spec") {
  Graph a = parse_graph_arg("gnp:20,0.5,seed=7");
  Graph b = parse_graph_arg("gnp:20,0.5", 7);
  CHECK(symmetric_difference_count(a, b) == 0);
  Graph c = parse_graph_arg("gnp:20,0.5", 8);
  CHECK(symmetric_difference_count(a, c) != 0);
  CHECK(parse_graph_arg("gnp:10,0,seed=1").m() == 0);
  CHECK(parse_graph_arg("gnp:10,1,seed=1").m() == 45);
}

TEST_CASE("spec errors") {
  CHECK_THROWS_AS(parse_graph_arg("wheel:5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_arg("cycle:"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_arg("cycle:5,6"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_arg("kpq:3"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_arg("cycle:x"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_arg("gnp:10,1.5"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_arg("gnp:10,0.5,seed="), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_arg("affine:4"), std::invalid_argument);
  CHECK_THROWS_AS(parse_graph_arg("cycle:99"), std::invalid_argument);
}

TEST_CASE("member names") {
  CHECK(parse_member_name("K3").m() == 3);
  CHECK(parse_member_name("E3").m() == 0);
  CHECK(symmetric_difference_count(parse_member_name("P4"), path_graph(4)) ==
        0);
  CHECK(symmetric_difference_count(parse_member_name("C5"), cycle_graph(5)) ==
        0);
  Graph k12 = parse_member_name("K1,2");
  CHECK(k12.n() == 3);
  CHECK(k12.m() == 2);
  CHECK(are_isomorphic(parse_member_name("claw"), parse_member_name("K1,3")));
  // trailing c complements a named graph
  CHECK(symmetric_difference_count(parse_member_name("K1,2c"),
                                   complement(k12)) == 0);
  CHECK(parse_member_name("K4c").m() == 0);
  // graph6 fallback
  CHECK(symmetric_difference_count(parse_member_name("Dhc"), cycle_graph(5)) ==
        0);
  CHECK_THROWS(parse_member_name("totally bogus"));
  CHECK_THROWS(parse_member_name(""));
}

TEST_CASE("family arguments") {
  ForbiddenFamily one =
      parse_family_arg({"K3", "forb:K3"}, FamilyMode::induced);
  CHECK(one.members.size() == 1);
  CHECK(one.mode == FamilyMode::induced);

  ForbiddenFamily q = parse_family_arg({"forbset:4v3e"}, FamilyMode::induced);
  REQUIRE(q.members.size() == 3);
  for (const Graph& g : q.members) {
    CHECK(g.n() == 4);
    CHECK(g.m() == 3);
  }

  ForbiddenFamily mixed =
      parse_family_arg({"forbset:4v3e", "K3"}, FamilyMode::induced);
  CHECK(mixed.members.size() == 4);

  ForbiddenFamily qf = q_family();
  CHECK(qf.mode == FamilyMode::induced);
  REQUIRE(qf.members.size() == 3);
  bool have_path = false, have_star = false, have_tri = false;
  for (const Graph& g : qf.members) {
    if (are_isomorphic(g, path_graph(4))) have_path = true;
    if (are_isomorphic(g, parse_member_name("K1,3"))) have_star = true;
    if (are_isomorphic(g, disjoint_union(complete_graph(3), Graph(1))))
      have_tri = true;
  }
  CHECK(have_path);
  CHECK(have_star);
  CHECK(have_tri);

  CHECK_THROWS_AS(parse_family_arg({}, FamilyMode::induced),
                  std::invalid_argument);
  // unknown forbset shorthand falls through to the graph6 reader
  CHECK_THROWS_AS(parse_family_arg({"forbset:nope"}, FamilyMode::induced),
                  parse_error);
}
