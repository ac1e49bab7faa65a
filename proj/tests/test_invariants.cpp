#include <stdexcept>

#include "doctest.h"
#include "domgame/enumerate.hpp"
#include "domgame/families.hpp"
#include "domgame/invariants.hpp"
#include "test_util.hpp"

using namespace domgame;

TEST_CASE("known invariant values") {
  CHECK(domination_number(path(7)).size == 3);
  CHECK(domination_number(cycle(6)).size == 2);
  CHECK(domination_number(star(9)).size == 1);
  CHECK(total_domination_number(path(4)).size == 2);
  CHECK(total_domination_number(cycle(6)).size == 4);
  CHECK(connected_domination_number(path(7)).size == 5);
  CHECK(connected_domination_number(star(9)).size == 1);
  CHECK(connected_domination_number(cycle(6)).size == 4);
  CHECK(connected_domination_number(complete(5)).size == 1);
}

TEST_CASE("witnesses really witness") {
  for (int n = 2; n <= 5; ++n) {
    for_each_connected_labeled(n, [&](const Graph& g) {
      auto dom = domination_number(g);
      CHECK(g.closed_neighbors(dom.witness) == g.vertices());
      CHECK(dom.witness.count() == dom.size);

      auto tot = total_domination_number(g);
      CHECK(g.neighbors(tot.witness) == g.vertices());
      CHECK(tot.witness.count() == tot.size);

      auto con = connected_domination_number(g);
      CHECK(g.closed_neighbors(con.witness) == g.vertices());
      CHECK(is_connected_within(g, con.witness));
      CHECK(con.witness.count() == con.size);
    });
  }
}

TEST_CASE("sizes and smallest witnesses match the matrix oracle") {
  for (int n = 2; n <= 5; ++n) {
    for_each_connected_labeled(n, [&](const Graph& g) {
      testutil::MatrixGraph m(g);
      unsigned mask = 0;
      CHECK(domination_number(g).size ==
            testutil::brute_min_dominating(m, testutil::DomKind::plain, &mask));
      CHECK(domination_number(g).witness.bits == mask);
      CHECK(total_domination_number(g).size ==
            testutil::brute_min_dominating(m, testutil::DomKind::total, &mask));
      CHECK(total_domination_number(g).witness.bits == mask);
      CHECK(connected_domination_number(g).size ==
            testutil::brute_min_dominating(m, testutil::DomKind::connected,
                                           &mask));
      CHECK(connected_domination_number(g).witness.bits == mask);
    });
  }
}

TEST_CASE("preconditions") {
  CHECK_THROWS_AS(total_domination_number(Graph(1, {})),
                  std::invalid_argument);
  CHECK_THROWS_AS(total_domination_number(Graph(3, {{0, 1}})),
                  std::invalid_argument);
  CHECK_THROWS_AS(connected_domination_number(Graph(4, {{0, 1}, {2, 3}})),
                  std::invalid_argument);
  CHECK(domination_number(Graph(1, {})).size == 1);
  CHECK(domination_number(Graph(3, {})).size == 3);
}

TEST_CASE("all minimum connected dominating sets") {
  // G(3): the unique minimum witness is x1,x2,x3,y2,y3
  auto sets = minimum_connected_dominating_sets(family_g(3));
  REQUIRE(sets.size() == 1);
  VertexSet expected = VertexSet::first(3).with(4).with(5);
  CHECK(sets.front() == expected);

  // C_4: every pair of adjacent vertices works
  auto c4 = minimum_connected_dominating_sets(cycle(4));
  CHECK(c4.size() == 4);

  auto k3 = minimum_connected_dominating_sets(complete(3));
  CHECK(k3.size() == 3);
}

TEST_CASE("invariant report") {
  InvariantReport rep = invariant_report(cycle(6));
  CHECK(rep.gamma == 2);
  REQUIRE(rep.gamma_t.has_value());
  CHECK(*rep.gamma_t == 4);
  REQUIRE(rep.gamma_c.has_value());
  CHECK(*rep.gamma_c == 4);

  InvariantReport lonely = invariant_report(Graph(3, {{0, 1}}));
  CHECK(lonely.gamma == 2);
  CHECK_FALSE(lonely.gamma_t.has_value());
  CHECK_FALSE(lonely.gamma_c.has_value());

  InvariantReport single = invariant_report(Graph(1, {}));
  CHECK(single.gamma == 1);
  CHECK_FALSE(single.gamma_t.has_value());
  CHECK(single.gamma_c.has_value());
}
